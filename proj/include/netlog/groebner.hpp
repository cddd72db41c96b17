#pragma once

#include "netlog/groebner/buchberger.hpp"
#include "netlog/groebner/graded_map.hpp"
#include "netlog/groebner/linear_algebra.hpp"
#include "netlog/groebner/macaulay.hpp"
#include "netlog/groebner/module_vector.hpp"
#include "netlog/groebner/operations.hpp"
