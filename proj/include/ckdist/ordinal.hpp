#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ckdist {

// Ordinals up to and including w^w, in Cantor normal form.
//
// A value is either Top (w^w itself) or a sum of terms w^exp * coeff with
// strictly decreasing natural exponents and coefficients >= 1. The empty
// term list is 0; an exponent-0 term is the finite constant part.
class Ordinal {
 public:
  struct Term {
    std::uint64_t exp;
    std::uint64_t coeff;
    bool operator==(const Term&) const = default;
  };

  Ordinal() = default;  // zero

  static Ordinal zero() { return Ordinal(); }
  static Ordinal top();
  static Ordinal finite(std::uint64_t n);
  static Ordinal omega() { return single(1, 1); }
  static Ordinal single(std::uint64_t exp, std::uint64_t coeff);
  // Validates canonical form (strictly decreasing exponents, coeff >= 1).
  static Ordinal from_terms(std::vector<Term> terms);

  bool is_top() const { return top_; }
  bool is_zero() const { return !top_ && terms_.empty(); }
  // True when the value is a natural number (< w).
  bool is_finite() const;
  // The natural number value; only valid when is_finite().
  std::uint64_t finite_value() const;
  const std::vector<Term>& terms() const { return terms_; }

  bool operator==(const Ordinal&) const = default;

 private:
  bool top_ = false;
  std::vector<Term> terms_;
};

enum class Cmp { less, equal, greater };

Cmp compare(const Ordinal& a, const Ordinal& b);

inline bool operator<(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == Cmp::less;
}
inline bool operator<=(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) != Cmp::greater;
}
inline bool operator>(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == Cmp::greater;
}
inline bool operator>=(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) != Cmp::less;
}

enum class OrdinalKind { zero, successor, limit };

// How many derivations the point survives inside any interval containing
// it: the smallest CNF exponent, or omega for Top.
struct PointRank {
  bool is_omega = false;
  std::uint64_t value = 0;

  static PointRank omega() { return {true, 0}; }
  static PointRank finite(std::uint64_t v) { return {false, v}; }
  bool operator==(const PointRank&) const = default;
  bool at_least(const PointRank& other) const;
};

struct Classification {
  OrdinalKind kind;
  PointRank rank;
};

Classification classify(const Ordinal& a);

// Endpoint of the derived interval: none when a < w, Top for Top, otherwise
// drop the constant term and decrease every exponent by one. The limit
// ordinals <= a form a compact order-isomorphic to [0, div_omega(a)].
std::optional<Ordinal> div_omega(const Ordinal& a);

// a + 1.
Ordinal successor(const Ordinal& a);

// Grammar: 0 | w^w | term(+term)*, term = w^E*C | w^E | w*C | w | C.
Ordinal parse_ordinal(std::string_view text);
std::string format_ordinal(const Ordinal& a);

}  // namespace ckdist
