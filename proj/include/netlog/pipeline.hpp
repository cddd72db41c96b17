#pragma once

#include "netlog/pipeline/ci_pair.hpp"
#include "netlog/pipeline/exactness.hpp"
#include "netlog/pipeline/log_tangent.hpp"
#include "netlog/pipeline/sections.hpp"
