#include "polynomial.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "gwcb/memo.hpp"

namespace gwcb::detail {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t seed = 0;
    for (auto e : m) hash_combine(seed, e);
    return seed;
  }
};

}  // namespace

Polynomial Polynomial::constant(const Integer& c) { return monomial(Monomial{}, c); }

Polynomial Polynomial::monomial(const Monomial& exponents, const Integer& c) {
  Polynomial p;
  p.add(exponents, c);
  return p;
}

Integer Polynomial::constant_term() const {
  const auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add(const Monomial& exponents, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [mono, c] : other.terms_) add(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [mono, c] : other.terms_) add(mono, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial prod;
      for (int v = 0; v < kMaxVariables; ++v) {
        const int e = ma[v] + mb[v];
        if (e > 255) throw std::overflow_error("monomial exponent overflow");
        prod[v] = static_cast<std::uint8_t>(e);
      }
      acc[prod] += ca * cb;
    }
  }
  Polynomial out;
  for (auto& [mono, c] : acc) {
    if (c != 0) out.terms_.emplace(mono, std::move(c));
  }
  return out;
}

Polynomial Polynomial::scaled(const Integer& c) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * c);
  return out;
}

Polynomial Polynomial::divided_difference(int i) const {
  if (i < 1 || i >= kMaxVariables) {
    throw std::out_of_range("divided difference index " + std::to_string(i));
  }
  const int u = i - 1;
  const int v = i;
  Polynomial out;
  for (const auto& [mono, c] : terms_) {
    const int a = mono[u];
    const int b = mono[v];
    if (a == b) continue;
    // x^a y^b - x^b y^a = (xy)^min * (x^{|a-b|} - y^{|a-b|}) * sign, and
    // (x^n - y^n) / (x - y) = sum_j x^{n-1-j} y^j.
    const int low = a < b ? a : b;
    const int gap = a > b ? a - b : b - a;
    const Integer coeff = a > b ? c : Integer(-c);
    Monomial term = mono;
    for (int j = 0; j < gap; ++j) {
      term[u] = static_cast<std::uint8_t>(low + gap - 1 - j);
      term[v] = static_cast<std::uint8_t>(low + j);
      out.add(term, coeff);
    }
  }
  return out;
}

}  // namespace gwcb::detail
