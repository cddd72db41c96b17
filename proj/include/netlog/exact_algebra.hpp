#pragma once

#include "netlog/exact_algebra/algebraic.hpp"
#include "netlog/exact_algebra/field.hpp"
#include "netlog/exact_algebra/monomial.hpp"
#include "netlog/exact_algebra/poly.hpp"
#include "netlog/exact_algebra/poly_io.hpp"
#include "netlog/exact_algebra/rational.hpp"
#include "netlog/exact_algebra/univariate.hpp"
