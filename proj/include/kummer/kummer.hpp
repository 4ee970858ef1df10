#pragma once

#include "kummer/error.hpp"
#include "kummer/algebra/rational.hpp"
#include "kummer/algebra/algebraic.hpp"
#include "kummer/algebra/field.hpp"
#include "kummer/algebra/polynomial.hpp"
#include "kummer/algebra/rational_function.hpp"
#include "kummer/algebra/series.hpp"
#include "kummer/algebra/factor.hpp"
#include "kummer/algebra/linear_solve.hpp"
#include "kummer/algebra/parse.hpp"
#include "kummer/jet/jet.hpp"
#include "kummer/jet/diff_expr.hpp"
#include "kummer/jet/prolong.hpp"
#include "kummer/ode/linear_ode.hpp"
#include "kummer/schwarzian/schwarzian.hpp"
#include "kummer/schwarzian/mobius.hpp"
#include "kummer/schwarzian/kummer_system.hpp"
#include "kummer/kovacic/verdict.hpp"
#include "kummer/numeric/verifier.hpp"
