#pragma once

#include <cstdint>

namespace wsn {

using Joules = double;
using Meters = double;
using Bits = std::int64_t;
using RoundIndex = std::int64_t;

}  // namespace wsn
