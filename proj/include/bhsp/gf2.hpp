#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bhsp/bits.hpp"

namespace bhsp {

enum class InsertResult {
    Extended,     // u was outside the span; rank grew by one
    Redundant,    // u in span and the implied parity matches
    Inconsistent  // u in span with a contradictory parity: violated promise
};

/*
 * Incremental row basis over GF(2) in fully reduced row-echelon form,
 * carrying a right-hand-side bit per row. Pivot = highest set bit; every
 * row is zero at all other rows' pivots, so once rank reaches n the rows
 * are unit vectors and the solution reads off directly.
 */
class Gf2Basis {
public:
    struct Row {
        std::uint32_t vec;
        int pivot;
        std::uint8_t rhs;
    };

    explicit Gf2Basis(int n) : n_(n) {
        if (n < 1 || n > 28) throw std::invalid_argument("n must be in [1, 28]");
        rows_.reserve(static_cast<std::size_t>(n));
    }

    int n() const { return n_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<Row>& rows() const { return rows_; }

    InsertResult insert(std::uint32_t u, int b) {
        if (u >> n_) throw std::invalid_argument("vector exceeds basis dimension");
        std::uint8_t rhs = static_cast<std::uint8_t>(b & 1);
        for (const Row& r : rows_) {
            if ((u >> r.pivot) & 1) {
                u ^= r.vec;
                rhs ^= r.rhs;
            }
        }
        if (u == 0) return rhs ? InsertResult::Inconsistent : InsertResult::Redundant;

        int pivot = 31 - std::countl_zero(u);
        for (Row& r : rows_) {
            if ((r.vec >> pivot) & 1) {
                r.vec ^= u;
                r.rhs ^= rhs;
            }
        }
        auto at = rows_.begin();
        while (at != rows_.end() && at->pivot > pivot) ++at;
        rows_.insert(at, Row{u, pivot, rhs});
        return InsertResult::Extended;
    }

    // residual of u after reduction by the basis; zero iff u is in the span
    std::uint32_t reduce(std::uint32_t u) const {
        for (const Row& r : rows_)
            if ((u >> r.pivot) & 1) u ^= r.vec;
        return u;
    }

    bool in_span(std::uint32_t u) const { return reduce(u) == 0; }

    /*
     * When rank = n-1 the span is exactly the hyperplane orthogonal to one
     * nonzero v; return it. Rows touch only their own pivot and the single
     * free column j, so v = e_j + sum of e_pivot over rows with bit j set.
     */
    std::optional<std::uint32_t> hyperplane_normal() const {
        if (rank() != n_ - 1) return std::nullopt;
        std::uint32_t pivots = 0;
        for (const Row& r : rows_) pivots |= std::uint32_t{1} << r.pivot;
        std::uint32_t all = (n_ == 32) ? ~0u : ((std::uint32_t{1} << n_) - 1);
        std::uint32_t free = all & ~pivots;
        int j = std::countr_zero(free);
        std::uint32_t v = std::uint32_t{1} << j;
        for (const Row& r : rows_)
            if ((r.vec >> j) & 1) v |= std::uint32_t{1} << r.pivot;
        return v;
    }

    // unique s with <u_i, s> = b_i for all inserted rows; requires rank = n
    std::uint32_t solve() const {
        if (rank() < n_)
            throw std::logic_error("basis is underdetermined: rank < n");
        std::uint32_t s = 0;
        for (const Row& r : rows_)
            if (r.rhs) s |= std::uint32_t{1} << r.pivot;
        for (const Row& r : rows_)
            if (dot(r.vec, s) != r.rhs)
                throw std::logic_error("back-substitution check failed");
        return s;
    }

private:
    int n_;
    std::vector<Row> rows_;
};

}  // namespace bhsp
