#include "ckdist/rational.hpp"

namespace ckdist {

Rat parse_rational(std::string_view text) {
  auto bad = [&] {
    throw std::invalid_argument("bad rational literal: " + std::string(text));
  };
  if (text.empty()) bad();
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rat(Int(std::string(text)));
    }
    Int num{std::string(text.substr(0, slash))};
    Int den{std::string(text.substr(slash + 1))};
    if (den == 0) bad();
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rat();  // unreachable
}

std::string format_rational(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Int rat_floor(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (q * denominator(r) != numerator(r) && r < 0) --q;
  return q;
}

}  // namespace ckdist
