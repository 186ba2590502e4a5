#include "cluetree/format.hpp"

#include <cmath>
#include <cstdint>

#include "cluetree/errors.hpp"

namespace cluetree {
namespace {

std::string hundredths_to_string(std::int64_t hundredths, bool negative) {
  std::string s = negative && hundredths != 0 ? "-" : "";
  s += std::to_string(hundredths / 100);
  std::int64_t frac = hundredths % 100;
  s += '.';
  s += static_cast<char>('0' + frac / 10);
  s += static_cast<char>('0' + frac % 10);
  return s;
}

}  // namespace

std::string format_percent(std::size_t num, std::size_t den) {
  if (den == 0) throw Error("format_percent: zero denominator");
  // round-half-up of num/den * 10000, kept integral throughout
  const std::uint64_t scaled = static_cast<std::uint64_t>(num) * 10000u;
  const std::uint64_t hundredths = (2 * scaled + den) / (2 * static_cast<std::uint64_t>(den));
  return hundredths_to_string(static_cast<std::int64_t>(hundredths), false);
}

std::string format_fixed2(double value) {
  const double magnitude = std::floor(std::abs(value) * 100.0 + 0.5);
  return hundredths_to_string(static_cast<std::int64_t>(magnitude), value < 0);
}

}  // namespace cluetree
