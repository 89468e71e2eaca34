#pragma once

// Integer polynomials in x_1..x_16 with the operations needed for Schubert
// polynomials. Internal to the core library.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "gwcb/integer.hpp"

namespace gwcb::detail {

inline constexpr int kMaxVariables = 16;

/// Exponent vector; index 0 is x_1. std::array's lexicographic order is the
/// lex monomial order with x_1 > x_2 > ...
using Monomial = std::array<std::uint8_t, kMaxVariables>;

class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer>;

  Polynomial() = default;
  static Polynomial constant(const Integer& c);
  static Polynomial monomial(const Monomial& exponents, const Integer& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the monomial 1.
  Integer constant_term() const;

  void add(const Monomial& exponents, const Integer& c);
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Integer& c) const;

  /// (f - s_i f) / (x_i - x_{i+1}) with i one-based.
  Polynomial divided_difference(int i) const;

  bool operator==(const Polynomial&) const = default;

 private:
  Terms terms_;
};

}  // namespace gwcb::detail
