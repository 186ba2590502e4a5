#pragma once

#include <cstddef>
#include <string>

namespace cluetree {

// Percent of num/den with exactly two decimals, rounded half-up using
// integer arithmetic so reported ratios come out exact (813/1027 ->
// "79.16"). den must be nonzero.
std::string format_percent(std::size_t num, std::size_t den);

// Two-decimal rendering of an arbitrary value, half rounded away from zero.
std::string format_fixed2(double value);

}  // namespace cluetree
