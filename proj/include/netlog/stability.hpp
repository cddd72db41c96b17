#pragma once

#include "netlog/stability/cubic.hpp"
#include "netlog/stability/formulas.hpp"
#include "netlog/stability/gieseker.hpp"
