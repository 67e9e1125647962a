#pragma once

#include "omv/bmmp_from_eq.hpp"
#include "omv/chain.hpp"
#include "omv/config.hpp"
#include "omv/counters.hpp"
#include "omv/eq_from_bool.hpp"
#include "omv/error.hpp"
#include "omv/folklore.hpp"
#include "omv/io.hpp"
#include "omv/matrix.hpp"
#include "omv/minmax_from_dom.hpp"
#include "omv/oracle.hpp"
#include "omv/problem.hpp"
#include "omv/solver.hpp"
#include "omv/validate.hpp"
#include "omv/value.hpp"

#include "omv/harness/accounting.hpp"
#include "omv/harness/adaptive.hpp"
#include "omv/harness/differential.hpp"
#include "omv/harness/experiment.hpp"
#include "omv/harness/generate.hpp"
