#pragma once

#include "regen/counter.hpp"
#include "regen/error.hpp"
#include "regen/gf.hpp"
#include "regen/harness/bench.hpp"
#include "regen/harness/codec.hpp"
#include "regen/harness/field_report.hpp"
#include "regen/harness/fragment_io.hpp"
#include "regen/harness/selftest.hpp"
#include "regen/harness/simulator.hpp"
#include "regen/matrix.hpp"
#include "regen/mbr.hpp"
#include "regen/ntt.hpp"
#include "regen/plan.hpp"
#include "regen/poly.hpp"
#include "regen/psrs.hpp"
#include "regen/rbt.hpp"
#include "regen/shah.hpp"
