/*
 * Rational functions of one variable over the rationals.
 *
 * Canonical form: gcd(num, den) = 1 and den monic, so operator== is exact
 * function equality.  Evaluation is defined at rational points and at
 * infinity (through degrees); pole orders and exact residues support the
 * node-ideal and Manin-pairing computations.
 */
#pragma once

#include <string>
#include <utility>

#include "ybe/errors.hpp"
#include "ybe/poly.hpp"

namespace ybe {

class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFunc(Poly num) : num_(std::move(num)), den_(Rational(1)) {}  // NOLINT
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static RatFunc x() { return RatFunc(Poly::x()); }
  // x^k for k of either sign.
  static RatFunc xpow(int k) {
    if (k >= 0) return RatFunc(Poly::monomial(k));
    return RatFunc(Poly(Rational(1)), Poly::monomial(-k));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const { return RatFunc(unchecked{}, -num_, den_); }
  RatFunc operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
  RatFunc operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
  }
  RatFunc operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
  }
  RatFunc operator*(const Rational& s) const {
    return RatFunc(unchecked{}, num_ * s, den_);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // Exact value at a rational point; PoleError at poles.
  Rational eval_at(const Rational& p) const {
    Rational d = den_.eval(p);
    if (d.is_zero())
      throw PoleError("RatFunc: evaluation at pole x = " + p.str());
    return num_.eval(p) / d;
  }

  // Value at infinity through degrees: 0 when deg num < deg den, ratio of
  // leading coefficients at equality, PoleError when deg num > deg den.
  Rational eval_at_infinity() const {
    if (is_zero()) return Rational(0);
    int dn = num_.degree(), dd = den_.degree();
    if (dn > dd) throw PoleError("RatFunc: pole at infinity");
    if (dn < dd) return Rational(0);
    return num_.leading() / den_.leading();
  }

  // Order of the pole at p: positive at poles, negative of the vanishing
  // order at zeros, 0 when finite nonzero.  Undefined for the zero function.
  int pole_order_at(const Rational& p) const {
    if (is_zero()) throw ZeroFunctionError("pole_order: zero function");
    int in_den = den_.root_multiplicity(p);
    if (in_den > 0) return in_den;  // coprime => num(p) != 0
    return -num_.root_multiplicity(p);
  }

  // Order at infinity: deg num - deg den (negative = vanishing order).
  int pole_order_at_infinity() const {
    if (is_zero()) throw ZeroFunctionError("pole_order: zero function");
    return num_.degree() - den_.degree();
  }

  // True when every pole lies in {0, 1}, i.e. den = x^a * (x-1)^b.
  bool poles_within_0_1() const {
    Poly d = den_;
    Poly atzero = Poly::x();
    Poly atone(std::vector<Rational>{Rational(-1), Rational(1)});
    while (!d.is_constant() && d.eval(Rational(0)).is_zero())
      d = d.div_exact(atzero);
    while (!d.is_constant() && d.eval(Rational(1)).is_zero())
      d = d.div_exact(atone);
    return d.is_constant();
  }

  // Exact residue at a rational point p: the coefficient of 1/(x-p) in the
  // partial-fraction expansion, computed as the (k-1)-st Taylor coefficient
  // of (x-p)^k * f at p, where k is the pole order.
  Rational residue_at(const Rational& p) const {
    if (is_zero()) return Rational(0);
    int k = pole_order_at(p);
    if (k <= 0) return Rational(0);
    // h = (x-p)^k * f = num / (den / (x-p)^k); shift to series around 0.
    Poly lin(std::vector<Rational>{-p, Rational(1)});
    Poly dred = den_;
    for (int i = 0; i < k; ++i) dred = dred.div_exact(lin);
    Poly ns = num_.shift(p);   // num(x+p)
    Poly ds = dred.shift(p);   // dred(x+p), nonzero constant term
    // Taylor coefficients of ns/ds up to order k-1 by series long division.
    Rational d0 = ds.coeff(0);
    std::vector<Rational> q(static_cast<size_t>(k), Rational(0));
    for (int j = 0; j < k; ++j) {
      Rational acc = ns.coeff(j);
      for (int i = 1; i <= j; ++i) acc -= ds.coeff(i) * q[static_cast<size_t>(j - i)];
      q[static_cast<size_t>(j)] = acc / d0;
    }
    return q[static_cast<size_t>(k - 1)];
  }

  std::string str(const std::string& var = "x") const {
    if (den_ == Poly(Rational(1))) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
  }

 private:
  struct unchecked {};
  RatFunc(unchecked, Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
    if (num_.is_zero()) den_ = Poly(Rational(1));
  }

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(Rational(1));
      return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.div_exact(g);
      den_ = den_.div_exact(g);
    }
    Rational lead = den_.leading().inverse();
    num_ = num_ * lead;
    den_ = den_ * lead;
  }

  Poly num_;
  Poly den_;
};

inline RatFunc operator*(const Rational& s, const RatFunc& f) { return f * s; }

}  // namespace ybe
