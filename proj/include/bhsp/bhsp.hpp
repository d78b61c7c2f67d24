#pragma once

#include "bhsp/bits.hpp"
#include "bhsp/truth_table.hpp"
#include "bhsp/spectrum.hpp"
#include "bhsp/influence.hpp"
#include "bhsp/instance.hpp"
#include "bhsp/gf2.hpp"
#include "bhsp/circuit.hpp"
#include "bhsp/sampling.hpp"
#include "bhsp/solver.hpp"
#include "bhsp/report.hpp"
#include "bhsp/harness.hpp"
