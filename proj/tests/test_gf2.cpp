#include <gtest/gtest.h>

#include "bhsp/bits.hpp"
#include "bhsp/gf2.hpp"

using namespace bhsp;

TEST(Gf2Basis, TwoInsertsSolveSpecExample) {
    Gf2Basis basis(2);
    EXPECT_EQ(basis.insert(0b10, 1), InsertResult::Extended);
    EXPECT_EQ(basis.insert(0b11, 0), InsertResult::Extended);
    EXPECT_EQ(basis.rank(), 2);
    EXPECT_EQ(basis.solve(), 0b11u);
}

TEST(Gf2Basis, RedundantAndInconsistent) {
    Gf2Basis basis(2);
    basis.insert(0b10, 1);
    EXPECT_EQ(basis.insert(0b10, 1), InsertResult::Redundant);
    EXPECT_EQ(basis.rank(), 1);
    EXPECT_EQ(basis.insert(0b10, 0), InsertResult::Inconsistent);
    EXPECT_EQ(basis.rank(), 1);
}

TEST(Gf2Basis, SolveReadsOffUnitRows) {
    Gf2Basis basis(3);
    basis.insert(0b100, 1);
    basis.insert(0b010, 0);
    basis.insert(0b001, 1);
    EXPECT_EQ(basis.solve(), 0b101u);
}

TEST(Gf2Basis, SolveUnderdeterminedThrows) {
    Gf2Basis basis(3);
    basis.insert(0b100, 1);
    EXPECT_THROW(basis.solve(), std::logic_error);
}

TEST(Gf2Basis, InSpanAndDimensionCheck) {
    Gf2Basis basis(2);
    basis.insert(0b10, 0);
    EXPECT_TRUE(basis.in_span(0b10));
    EXPECT_TRUE(basis.in_span(0));
    EXPECT_FALSE(basis.in_span(0b11));
    EXPECT_FALSE(basis.in_span(0b01));
    EXPECT_THROW(basis.insert(0b100, 0), std::invalid_argument);
}

TEST(Gf2Basis, HyperplaneNormalSpecExamples) {
    Gf2Basis b2(2);
    b2.insert(0b10, 0);
    ASSERT_TRUE(b2.hyperplane_normal().has_value());
    EXPECT_EQ(*b2.hyperplane_normal(), 0b01u);

    Gf2Basis b3(3);
    b3.insert(0b110, 0);
    b3.insert(0b011, 0);
    ASSERT_TRUE(b3.hyperplane_normal().has_value());
    EXPECT_EQ(*b3.hyperplane_normal(), 0b111u);

    Gf2Basis full(2);
    full.insert(0b10, 0);
    full.insert(0b01, 0);
    EXPECT_FALSE(full.hyperplane_normal().has_value());
    EXPECT_FALSE(Gf2Basis(3).hyperplane_normal().has_value());
}

TEST(Gf2Basis, HyperplaneNormalIsOrthogonalToAllRows) {
    Rng rng(0x4f2);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.below(14));
        Gf2Basis basis(n);
        while (basis.rank() < n - 1)
            basis.insert(static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << n)), 0);
        auto v = basis.hyperplane_normal();
        ASSERT_TRUE(v.has_value());
        ASSERT_NE(*v, 0u);
        for (const auto& row : basis.rows()) ASSERT_EQ(dot(row.vec, *v), 0);
        EXPECT_TRUE(basis.in_span(0));
        // v lies in its own hyperplane exactly when it has even weight
        EXPECT_EQ(basis.in_span(*v), parity(*v) == 0);
    }
}

// property: planted random systems always solve back to the planted vector
TEST(Gf2Basis, RandomFullRankSystemsSolveExactly) {
    Rng rng(0xbead);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng.below(16));
        std::uint32_t planted = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << n));
        Gf2Basis basis(n);
        std::vector<std::pair<std::uint32_t, int>> inserted;
        while (basis.rank() < n) {
            std::uint32_t u = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << n));
            int b = dot(u, planted);
            InsertResult r = basis.insert(u, b);
            ASSERT_NE(r, InsertResult::Inconsistent);
            inserted.emplace_back(u, b);
        }
        std::uint32_t s = basis.solve();
        ASSERT_EQ(s, planted);
        for (const auto& [u, b] : inserted) ASSERT_EQ(dot(u, s), b);
    }
}

// property: rank never decreases, grows only on Extended, and redundant
// inserts leave the reduced rows untouched
TEST(Gf2Basis, RankMonotoneAndRedundantIdempotent) {
    Rng rng(0x715);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.below(12));
        std::uint32_t planted = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << n));
        Gf2Basis basis(n);
        int prev_rank = 0;
        for (int i = 0; i < 4 * n; ++i) {
            std::uint32_t u = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << n));
            auto rows_before = basis.rows();
            InsertResult r = basis.insert(u, dot(u, planted));
            if (r == InsertResult::Extended)
                ASSERT_EQ(basis.rank(), prev_rank + 1);
            else
                ASSERT_EQ(basis.rank(), prev_rank);
            if (r == InsertResult::Redundant) {
                ASSERT_EQ(basis.rows().size(), rows_before.size());
                for (std::size_t k = 0; k < rows_before.size(); ++k) {
                    ASSERT_EQ(basis.rows()[k].vec, rows_before[k].vec);
                    ASSERT_EQ(basis.rows()[k].rhs, rows_before[k].rhs);
                }
            }
            prev_rank = basis.rank();
        }
    }
}

TEST(Gf2Basis, RowsStayFullyReduced) {
    Rng rng(0xdead);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng.below(14));
        Gf2Basis basis(n);
        for (int i = 0; i < 3 * n; ++i)
            basis.insert(static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << n)), 0);
        const auto& rows = basis.rows();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            ASSERT_EQ((rows[i].vec >> rows[i].pivot) & 1u, 1u);
            if (i + 1 < rows.size()) ASSERT_GT(rows[i].pivot, rows[i + 1].pivot);
            for (std::size_t j = 0; j < rows.size(); ++j)
                if (i != j) ASSERT_EQ((rows[j].vec >> rows[i].pivot) & 1u, 0u);
        }
    }
}
