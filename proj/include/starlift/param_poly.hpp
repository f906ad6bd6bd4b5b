#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "rational.hpp"
#include "term_map.hpp"

namespace starlift {

// Formal coefficient parameters. lambda, lambda1, lambda2 parametrize cycle
// families and pairings; hbar appears as a first-class parameter only in
// operator coefficients (Weyl and pseudodifferential side), never inside the
// hbar-graded series of h_series.hpp.
enum class Param : int { lambda = 0, lambda1 = 1, lambda2 = 2, hbar = 3 };

inline constexpr std::size_t kParamCount = 4;
inline constexpr const char* kParamNames[kParamCount] = {"lambda", "lambda1",
                                                         "lambda2", "hbar"};

using ParamExponents = std::array<int, kParamCount>;

inline std::string param_monomial_string(const ParamExponents& e) {
  std::string s;
  for (std::size_t t = 0; t < kParamCount; ++t) {
    if (e[t] == 0) continue;
    if (!s.empty()) s += "*";
    s += kParamNames[t];
    if (e[t] != 1) s += "^" + std::to_string(e[t]);
  }
  return s;
}

// Polynomial in the formal parameters over exact rationals; canonical form
// stores no zero coefficients.
class ParamPoly {
 public:
  using Terms = TermMap<ParamExponents, Rational>;

  ParamPoly() = default;
  ParamPoly(Rational c) {
    if (!starlift::is_zero(c))
      terms_ = Terms::from_terms({{ParamExponents{}, std::move(c)}});
  }
  ParamPoly(long n) : ParamPoly(Rational(n)) {}

  static ParamPoly parameter(Param v, int exp = 1) {
    ParamExponents e{};
    e[static_cast<std::size_t>(v)] = exp;
    return monomial(e, Rational(1));
  }

  static ParamPoly monomial(const ParamExponents& e, Rational c) {
    ParamPoly out;
    if (!starlift::is_zero(c)) out.terms_ = Terms::from_terms({{e, std::move(c)}});
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.terms()[0].first == ParamExponents{});
  }
  // Value of the constant term (the full value when is_constant()).
  Rational constant_value() const { return coeff(ParamExponents{}); }

  const Terms& terms() const { return terms_; }

  Rational coeff(const ParamExponents& e) const {
    const Rational* c = terms_.find(e);
    return c ? *c : Rational(0);
  }

  ParamPoly& operator+=(const ParamPoly& o) {
    terms_ += o.terms_;
    return *this;
  }
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) {
    a += b;
    return a;
  }
  ParamPoly operator-() const { return from(-terms_); }
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
    return from(a.terms_ - b.terms_);
  }

  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    TermAccumulator<ParamExponents, Rational> acc;
    for (const auto& [ea, ca] : a.terms_.terms())
      for (const auto& [eb, cb] : b.terms_.terms()) {
        ParamExponents e;
        for (std::size_t t = 0; t < kParamCount; ++t) e[t] = ea[t] + eb[t];
        acc.add(e, ca * cb);
      }
    return from(acc.take());
  }
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

  ParamPoly scaled(const Rational& s) const {
    if (starlift::is_zero(s)) return {};
    return from(terms_.mapped_coeffs(
        [&](const Rational& c) { return Rational(c * s); }));
  }
  ParamPoly scaled(const ParamPoly& s) const { return *this * s; }

  ParamPoly pow(unsigned k) const {
    ParamPoly out(1);
    for (unsigned t = 0; t < k; ++t) out = out * *this;
    return out;
  }

  ParamPoly substitute(Param v, const Rational& value) const {
    const auto idx = static_cast<std::size_t>(v);
    TermAccumulator<ParamExponents, Rational> acc;
    for (const auto& [e, c] : terms_.terms()) {
      Rational scale = c;
      for (int t = 0; t < e[idx]; ++t) scale *= value;
      ParamExponents ne = e;
      ne[idx] = 0;
      acc.add(ne, scale);
    }
    return from(acc.take());
  }

  Rational eval(const std::array<Rational, kParamCount>& values) const {
    Rational out(0);
    for (const auto& [e, c] : terms_.terms()) {
      Rational term = c;
      for (std::size_t t = 0; t < kParamCount; ++t)
        for (int m = 0; m < e[t]; ++m) term *= values[t];
      out += term;
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_.terms()) {
      Rational a = c;
      if (first) {
        if (sgn(a) < 0) {
          s += "-";
          a = -a;
        }
      } else {
        s += sgn(a) < 0 ? " - " : " + ";
        if (sgn(a) < 0) a = -a;
      }
      const std::string mono = param_monomial_string(e);
      if (mono.empty()) {
        s += pretty_rational(a);
      } else {
        if (a != 1) s += pretty_rational(a) + "*";
        s += mono;
      }
      first = false;
    }
    return s;
  }

  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

 private:
  static ParamPoly from(Terms t) {
    ParamPoly p;
    p.terms_ = std::move(t);
    return p;
  }

  Terms terms_;
};

inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }

inline ParamPoly operator*(const Rational& s, const ParamPoly& p) {
  return p.scaled(s);
}

}  // namespace starlift
