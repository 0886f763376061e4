#pragma once

// Sparse Laurent polynomials in one variable with exact integer
// coefficients. Bracket polynomials use exponents of A directly; Jones
// polynomials store exponents in quarter-units of t (4 means t^1), which
// lets A = t^(-1/4) be a plain exponent negation.

#include <cstdint>
#include <map>
#include <string>

namespace rollercoaster {

class LaurentPolynomial {
public:
  using Coefficient = std::int64_t;

  LaurentPolynomial() = default;
  LaurentPolynomial(Coefficient constant) {  // NOLINT: implicit from integers is intended
    if (constant != 0) terms_[0] = constant;
  }

  static LaurentPolynomial monomial(int exponent, Coefficient coefficient = 1) {
    LaurentPolynomial p;
    if (coefficient != 0) p.terms_[exponent] = coefficient;
    return p;
  }

  const std::map<int, Coefficient>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coefficient coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs) {
    for (auto [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs) {
    for (auto [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs) { return *this = *this * rhs; }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (auto [ea, ca] : a.terms_)
      for (auto [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  LaurentPolynomial pow(unsigned n) const {
    LaurentPolynomial result(1), base = *this;
    for (; n; n >>= 1, base = base * base)
      if (n & 1u) result = result * base;
    return result;
  }

  // Substitutes x -> 1/x.
  LaurentPolynomial mirrored() const {
    LaurentPolynomial out;
    for (auto [e, c] : terms_) out.terms_[-e] = c;
    return out;
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  // `quarter` renders exponents as multiples of 1/4 (Jones polynomials).
  std::string str(const std::string& var = "t", bool quarter = true) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto [e, c] : terms_) {
      std::string exp;
      if (quarter) {
        if (e % 4 == 0) exp = std::to_string(e / 4);
        else if (e % 2 == 0) exp = std::to_string(e / 2) + "/2";
        else exp = std::to_string(e) + "/4";
      } else {
        exp = std::to_string(e);
      }
      const Coefficient mag = c < 0 ? -c : c;
      if (out.empty()) out += c < 0 ? "-" : "";
      else out += c < 0 ? " - " : " + ";
      if (e == 0) {
        out += std::to_string(mag);
        continue;
      }
      if (mag != 1) out += std::to_string(mag) + "*";
      out += var;
      if (exp != "1") out += "^" + (exp.find('/') != std::string::npos || e < 0 ? "(" + exp + ")" : exp);
    }
    return out;
  }

private:
  void add_term(int e, Coefficient c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  std::map<int, Coefficient> terms_;
};

}  // namespace rollercoaster
