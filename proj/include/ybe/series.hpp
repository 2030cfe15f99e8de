/*
 * Truncated Laurent series with exact coefficients.
 *
 * A SeriesT<K> represents sum_{e = low..hi} c_e t^e with coefficients in K
 * (K = Rational for numeric series, K = RatFunc for series whose
 * coefficients are rational functions of a second variable).  Exponents
 * above hi are unknown, not zero: every operation tracks how far the result
 * remains trustworthy and refuses to answer beyond that.  Coefficients are
 * stored densely from low to hi; the leading coefficient is nonzero unless
 * the series is zero through its truncation order.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybe/errors.hpp"
#include "ybe/ratfunc.hpp"

namespace ybe {

template <class K>
class SeriesT {
 public:
  // Zero through truncation order n.
  static SeriesT zero_to(int n) {
    SeriesT s;
    s.low_ = n + 1;
    s.hi_ = n;
    return s;
  }

  // A single term c * t^e, known exactly through order n >= e.
  static SeriesT term(const K& c, int e, int n) {
    SeriesT s = zero_to(n);
    s.set_coeff(e, c);
    return s;
  }

  // Power series from dense coefficients c[0..], exponent of c[0] = low,
  // truncation order n (>= low + len - 1; the gap is known-zero).
  static SeriesT from_coeffs(std::vector<K> c, int low, int n) {
    SeriesT s = zero_to(n);
    for (size_t i = 0; i < c.size(); ++i)
      s.set_coeff(low + static_cast<int>(i), c[i]);
    return s;
  }

  int trunc_order() const { return hi_; }

  // First exponent that could be nonzero (hi+1 for the zero series).
  int eff_low() const { return c_.empty() ? hi_ + 1 : low_; }

  bool is_zero() const { return c_.empty(); }

  // Valuation: exponent of the first nonzero coefficient, if any.
  std::optional<int> valuation() const {
    if (c_.empty()) return std::nullopt;
    return low_;
  }

  // Coefficient of t^e; exponents beyond the truncation order are unknown
  // and asking for one is a caller bug.
  K coeff(int e) const {
    if (e > hi_)
      throw TruncationTooShort("series coefficient beyond truncation order " +
                               std::to_string(hi_));
    return get(e);
  }

  SeriesT operator-() const {
    SeriesT r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  SeriesT operator+(const SeriesT& o) const {
    int n = std::min(hi_, o.hi_);
    SeriesT r = zero_to(n);
    int lo = std::min(eff_low(), o.eff_low());
    for (int e = lo; e <= n; ++e) r.set_coeff(e, get(e) + o.get(e));
    return r;
  }
  SeriesT operator-(const SeriesT& o) const { return *this + (-o); }

  SeriesT operator*(const SeriesT& o) const {
    // The unknown tail of either factor pollutes exponents from
    // a.hi+1 + b.eff_low (resp. b.hi+1 + a.eff_low) upward.
    int n = std::min(hi_ + o.eff_low(), o.hi_ + eff_low());
    SeriesT r = zero_to(n);
    if (c_.empty() || o.c_.empty()) return r;
    int top1 = low_ + static_cast<int>(c_.size()) - 1;
    int top2 = o.low_ + static_cast<int>(o.c_.size()) - 1;
    for (int e1 = low_; e1 <= top1; ++e1) {
      const K& a = c_[static_cast<size_t>(e1 - low_)];
      if (a.is_zero()) continue;
      for (int e2 = o.low_; e2 <= top2; ++e2) {
        if (e1 + e2 > n) break;
        const K& b = o.c_[static_cast<size_t>(e2 - o.low_)];
        if (b.is_zero()) continue;
        r.add_coeff(e1 + e2, a * b);
      }
    }
    r.canonicalize();
    return r;
  }

  SeriesT operator*(const K& s) const {
    SeriesT r = *this;
    for (auto& c : r.c_) c = c * s;
    r.canonicalize();
    return r;
  }

  // Multiplication by t^k.
  SeriesT shifted(int k) const {
    SeriesT r = *this;
    r.low_ += k;
    r.hi_ += k;
    return r;
  }

  // Restrict the truncation order (n <= hi required).
  SeriesT truncated(int n) const {
    if (n > hi_)
      throw TruncationTooShort("cannot extend series truncation " +
                               std::to_string(hi_) + " to " +
                               std::to_string(n));
    SeriesT r = zero_to(n);
    for (int e = eff_low(); e <= n; ++e) r.set_coeff(e, get(e));
    return r;
  }

  // Multiplicative inverse.  With valuation v and truncation hi, the
  // inverse is trustworthy through hi - 2v.
  SeriesT inverse() const {
    if (c_.empty())
      throw ZeroDivision("series inverse of zero-through-truncation");
    int v = low_;
    int m = hi_ - v;  // unit part u = t^{-v} * this known through order m
    std::vector<K> w(static_cast<size_t>(m) + 1);
    const K& u0 = c_.front();
    w[0] = K(Rational(1)) / u0;
    for (int j = 1; j <= m; ++j) {
      K acc{};
      for (int i = 1; i <= j; ++i) {
        K ui = get(v + i);
        if (ui.is_zero()) continue;
        acc = acc + ui * w[static_cast<size_t>(j - i)];
      }
      w[static_cast<size_t>(j)] = (-acc) / u0;
    }
    SeriesT r = zero_to(hi_ - 2 * v);
    for (int j = 0; j <= m && j - v <= r.hi_; ++j)
      r.set_coeff(j - v, w[static_cast<size_t>(j)]);
    r.canonicalize();
    return r;
  }

  SeriesT operator/(const SeriesT& o) const { return *this * o.inverse(); }

  bool operator==(const SeriesT& o) const {
    if (hi_ != o.hi_) return false;
    for (int e = std::min(eff_low(), o.eff_low()); e <= hi_; ++e)
      if (!(get(e) == o.get(e))) return false;
    return true;
  }

  std::string str(const std::string& var = "t") const {
    if (c_.empty()) return "O(" + var + "^" + std::to_string(hi_ + 1) + ")";
    std::string s;
    for (int e = low_; e <= hi_; ++e) {
      const K& c = c_[static_cast<size_t>(e - low_)];
      if (c.is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")*" + var + "^" + std::to_string(e);
    }
    if (s.empty()) s = "0";
    return s + " + O(" + var + "^" + std::to_string(hi_ + 1) + ")";
  }

 private:
  K get(int e) const {
    // c_ may be trimmed short of hi_ (trailing zeros are not stored).
    if (c_.empty() || e < low_ ||
        e >= low_ + static_cast<int>(c_.size()))
      return K();
    return c_[static_cast<size_t>(e - low_)];
  }

  void set_coeff(int e, const K& v) {
    if (e > hi_) throw std::out_of_range("series set beyond truncation");
    if (v.is_zero() && (c_.empty() || e < low_)) return;
    ensure_slot(e);
    c_[static_cast<size_t>(e - low_)] = v;
    canonicalize();
  }

  void add_coeff(int e, const K& v) {
    if (v.is_zero()) return;
    ensure_slot(e);
    auto& slot = c_[static_cast<size_t>(e - low_)];
    slot = slot + v;
  }

  void ensure_slot(int e) {
    if (c_.empty()) {
      low_ = e;
      c_.resize(1);
      return;
    }
    if (e < low_) {
      c_.insert(c_.begin(), static_cast<size_t>(low_ - e), K());
      low_ = e;
    } else if (e > low_ + static_cast<int>(c_.size()) - 1) {
      c_.resize(static_cast<size_t>(e - low_) + 1);
    }
  }

  void canonicalize() {
    while (!c_.empty() && c_.front().is_zero()) {
      c_.erase(c_.begin());
      ++low_;
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) low_ = hi_ + 1;
  }

  int low_ = 1;
  int hi_ = 0;
  std::vector<K> c_;  // dense coefficients for exponents low_..low_+size-1
};

using TruncSeries = SeriesT<Rational>;

// exp(c*t) through order n: sum_{k<=n} c^k t^k / k!.
inline TruncSeries exp_series(const Rational& c, int n) {
  std::vector<Rational> v(static_cast<size_t>(n) + 1);
  v[0] = Rational(1);
  for (int k = 1; k <= n; ++k)
    v[static_cast<size_t>(k)] =
        v[static_cast<size_t>(k - 1)] * c / Rational(k);
  return TruncSeries::from_coeffs(std::move(v), 0, n);
}

// f(s(t)) as a truncated Laurent series through order n.  s must be a power
// series (order_low >= 0); a pole of f at s(0) of finite order is handled by
// Laurent division.  Throws ZeroDivision when the denominator series is
// identically zero through the working precision, and TruncationTooShort
// when s does not carry enough orders (n + 2*deg(den)*val(s - s(0)) are
// needed in the worst case).
inline TruncSeries compose_ratfunc_series(const RatFunc& f,
                                          const TruncSeries& s, int n) {
  if (s.eff_low() < 0)
    throw std::domain_error("compose: s must be a power series");
  if (f.is_zero()) return TruncSeries::zero_to(n);

  Rational s0 = s.coeff(0);
  TruncSeries delta = s - TruncSeries::term(s0, 0, s.trunc_order());
  int v = delta.valuation().value_or(s.trunc_order() + 1);

  int dd = std::max(f.den().degree(), 0);
  long need = static_cast<long>(n) + 2L * dd * v;
  if (delta.is_zero()) {
    // Constant substitution: evaluate if possible.
    if (f.den().eval(s0).is_zero())
      throw ZeroDivision("compose: denominator vanishes at constant s");
    return TruncSeries::term(f.eval_at(s0), 0, n);
  }
  if (s.trunc_order() < need)
    throw TruncationTooShort("compose: s carries order " +
                             std::to_string(s.trunc_order()) + ", need " +
                             std::to_string(need));

  TruncSeries sp = s.truncated(static_cast<int>(need));
  auto horner = [&](const Poly& p) {
    TruncSeries acc = TruncSeries::zero_to(static_cast<int>(need));
    for (int k = p.degree(); k >= 0; --k) {
      acc = acc * sp;
      acc = acc + TruncSeries::term(p.coeff(k), 0, static_cast<int>(need));
    }
    return acc;
  };
  TruncSeries ns = horner(f.num());
  TruncSeries ds = horner(f.den());
  if (ds.is_zero())
    throw ZeroDivision("compose: denominator series identically zero");
  TruncSeries q = ns / ds;
  return q.truncated(n);
}

}  // namespace ybe
