/*
 * Univariate polynomials over the rationals.
 *
 * Coefficients are stored lowest degree first with no trailing zeros, so the
 * representation (and hence operator==) is canonical.  Supplies the exact
 * division / gcd / Taylor-shift routines that rational-function arithmetic
 * and residue extraction are built on.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ybe/rational.hpp"

namespace ybe {

class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) {  // NOLINT: implicit by design
    if (!c.is_zero()) c_.push_back(c);
  }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    strip();
  }

  // The monomial c * x^k.
  static Poly monomial(int k, const Rational& c = Rational(1)) {
    if (c.is_zero()) return Poly();
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(1); }

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(k)];
  }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly operator+(const Poly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly(std::move(v));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) {
        if (o.c_[j].is_zero()) continue;
        v[i + j] += c_[i] * o.c_[j];
      }
    }
    return Poly(std::move(v));
  }

  Poly operator*(const Rational& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Rational eval(const Rational& p) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * p + *it;
    return acc;
  }

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly r = *this;
    std::vector<Rational> q;
    int dd = d.degree();
    if (r.degree() >= dd) q.assign(static_cast<size_t>(r.degree() - dd) + 1,
                                   Rational(0));
    while (!r.is_zero() && r.degree() >= dd) {
      int k = r.degree() - dd;
      Rational c = r.leading() / d.leading();
      q[static_cast<size_t>(k)] = c;
      r = r - d * Poly::monomial(k, c);
    }
    return {Poly(std::move(q)), r};
  }

  // Exact division; throws if the remainder is nonzero.
  Poly div_exact(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("Poly: non-exact division");
    return q;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
  }

  // Monic gcd by the Euclidean algorithm; gcd(0,0) = 0.
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // Multiplicity of the root p (0 when p is not a root).
  int root_multiplicity(const Rational& p) const {
    if (is_zero()) throw std::domain_error("Poly: multiplicity in zero poly");
    Poly lin(std::vector<Rational>{-p, Rational(1)});
    Poly cur = *this;
    int mult = 0;
    while (cur.eval(p).is_zero()) {
      cur = cur.div_exact(lin);
      ++mult;
    }
    return mult;
  }

  // Taylor shift: coefficients of p(x + c), by the in-place
  // Ruffini-Horner scheme (repeated synthetic division by (x - c)).
  Poly shift(const Rational& c) const {
    if (is_zero()) return Poly();
    std::vector<Rational> w = c_;
    size_t d = w.size();
    for (size_t k = 0; k + 1 < d; ++k) {
      for (size_t i = d - 1; i-- > k;) {
        w[i] += c * w[i + 1];
      }
    }
    return Poly(std::move(w));
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      Rational c = coeff(k);
      if (c.is_zero()) continue;
      if (!s.empty()) {
        s += (c.sign() > 0) ? " + " : " - ";
        if (c.sign() < 0) c = -c;
      }
      if (k == 0) {
        s += c.str();
      } else {
        if (!c.is_one()) s += c.str() + "*";
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  void strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;  // lowest degree first, no trailing zeros
};

}  // namespace ybe
