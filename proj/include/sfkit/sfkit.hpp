#pragma once

#include "sfkit/algebra.hpp"
#include "sfkit/field.hpp"
#include "sfkit/groebner.hpp"
#include "sfkit/groupfix.hpp"
#include "sfkit/ideal.hpp"
#include "sfkit/jelonek.hpp"
#include "sfkit/parse.hpp"
#include "sfkit/polynomial.hpp"
#include "sfkit/problem.hpp"
#include "sfkit/solve.hpp"
#include "sfkit/uniruled.hpp"
