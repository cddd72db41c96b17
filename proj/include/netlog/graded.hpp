#pragma once

#include "netlog/graded/chern.hpp"
#include "netlog/graded/duality.hpp"
#include "netlog/graded/fitting.hpp"
#include "netlog/graded/hilbert.hpp"
#include "netlog/graded/module.hpp"
#include "netlog/graded/resolution.hpp"
#include "netlog/graded/serialize.hpp"
