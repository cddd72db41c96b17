#pragma once

#include "netlog/curves/curves.hpp"
