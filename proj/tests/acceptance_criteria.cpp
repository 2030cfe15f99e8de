/*
 * Acceptance gate: the project's eleven acceptance criteria, one pass/fail
 * line each, with runtimes checked against their budgets.  The process exit
 * code is the number of failed criteria.
 *
 * AC7 carries a known, documented failure: its a2 clause pins the closed
 * form x/(x-1)^3, but the exact expansion coefficient is x(x+1)/(2(x-1)^3).
 * The clause is checked as stated and fails honestly; the companion notes
 * show the identity that does hold (a2 - a1/2 = x/(x-1)^3).  See README.
 */
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bd_corpus.hpp"
#include "lie_corpus.hpp"
#include "ybe/aybe.hpp"
#include "ybe/cybe.hpp"
#include "ybe/errors.hpp"
#include "ybe/lie_triple.hpp"
#include "ybe/loop_realization.hpp"
#include "ybe/order_model.hpp"
#include "ybe/poly.hpp"
#include "ybe/ratfunc.hpp"
#include "ybe/sample.hpp"

using namespace ybe;
using ybe_test::aybe_corpus;
using ybe_test::lie_corpus;

namespace {

Rational Q(long long p, long long q = 1) { return {BigInt(p), BigInt(q)}; }

struct Result {
  bool ok = true;
  std::string summary;             // trailing text on the criterion line
  std::vector<std::string> notes;  // indented lines printed under it

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("violated: " + what);
    }
  }
};

struct Gate {
  int failures = 0;

  // Runs one criterion, times it, enforces the budget (seconds; 0 = none).
  void criterion(const std::string& id, double budget,
                 const std::function<void(Result&)>& body) {
    Result r;
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(r);
    } catch (const std::exception& e) {
      r.ok = false;
      r.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (budget > 0 && secs > budget) {
      r.ok = false;
      r.notes.push_back("runtime budget exceeded");
    }
    char timing[64];
    if (budget > 0)
      std::snprintf(timing, sizeof timing, "%6.2fs (limit %.0fs)", secs, budget);
    else
      std::snprintf(timing, sizeof timing, "%6.2fs", secs);
    std::printf("%-5s %s %s  %s\n", id.c_str(), r.ok ? "pass" : "FAIL", timing,
                r.summary.c_str());
    for (const std::string& n : r.notes) std::printf("        %s\n", n.c_str());
    if (!r.ok) ++failures;
  }
};

// x^k / (x-1)^e as a canonical rational function.
RatFunc xk_over_xm1(int k, int e, const Rational& scale = Rational(1)) {
  Poly den(Rational(1));
  Poly xm1(std::vector<Rational>{Rational(-1), Rational(1)});
  for (int i = 0; i < e; ++i) den = den * xm1;
  return RatFunc(Poly::monomial(k, scale), den);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// AC1 — the n=6 reference datum: derived combinatorics and the six-term
// spectral tail of the closed kernel.

void ac1(Result& r) {
  Perm sigma = Perm::parse("(136245)", 6);
  AssocBDData d = validate(6, sigma, {{6, 1}, {1, 2}}, {{2, 3}, {3, 4}});

  r.require(d.pi1 == ArcSet{{1, 2}, {6, 1}, {6, 2}},
            "pi1 must equal gamma1 together with the composite (6,2)");
  r.require(d.pi2 == ArcSet{{2, 3}, {2, 4}, {3, 4}},
            "pi2 must equal gamma2 together with the composite (2,4)");

  const std::map<Arc, Arc> expected_tau = {
      {{6, 1}, {2, 3}}, {{1, 2}, {3, 4}}, {{6, 2}, {2, 4}}};
  for (const auto& [alpha, image] : expected_tau) {
    std::optional<Arc> t1 = tau_power(d, alpha, 1);
    r.require(t1.has_value() && *t1 == image,
              "tau image of (" + std::to_string(alpha.first) + "," +
                  std::to_string(alpha.second) + ")");
    r.require(!tau_power(d, alpha, 2).has_value(),
              "tau^2 must be undefined on (" + std::to_string(alpha.first) +
                  "," + std::to_string(alpha.second) + ")");
  }

  // Spectral tail: r(lambda; x, y) minus the constant kernel at z = x/y must
  // be exactly the six displayed terms
  //   lambda^{-1} e43(x)e12 - lambda e12(x)e43
  //   + x lambda^{-1} (e32(x)e61 + e42(x)e62) - y lambda (e61(x)e32 + e62(x)e42).
  const std::vector<std::vector<Rational>> points = {
      {Q(2), Q(3), Q(5)}, {Q(7, 2), Q(-1, 3), Q(4)}, {Q(-5), Q(2, 7), Q(-3, 2)}};
  for (const auto& p : points) {
    const Rational &lam = p[0], &x = p[1], &y = p[2];
    Tensor2 tail =
        r_bd_eval(d, lam, x, y) - r_const_eval(sigma, 6, lam, x / y);
    Tensor2 expected(6);
    Rational li = Rational(1) / lam;
    expected.add_term(li, 4, 3, 1, 2);
    expected.add_term(-lam, 1, 2, 4, 3);
    expected.add_term(x * li, 3, 2, 6, 1);
    expected.add_term(-(y * lam), 6, 1, 3, 2);
    expected.add_term(x * li, 4, 2, 6, 2);
    expected.add_term(-(y * lam), 6, 2, 4, 2);
    r.require(tail == expected,
              "six-term tail at (lambda,x,y) = (" + lam.str() + "," + x.str() +
                  "," + y.str() + ")");
  }
  r.summary = "n=6 datum: arc closures, tau images, no tau^2, six-term tail";
}

// ---------------------------------------------------------------------------
// AC2 — quadratic identity and skew-symmetry across the datum corpus.

void ac2(Result& r) {
  auto corpus = aybe_corpus();
  r.require(corpus.size() >= 8, "corpus must contain at least 8 data");
  std::set<int> ns;
  std::set<std::string> names;
  for (const auto& nd : corpus) {
    ns.insert(nd.data.n);
    names.insert(nd.name);
  }
  for (int n = 2; n <= 6; ++n)
    r.require(ns.count(n) == 1, "corpus must cover n = " + std::to_string(n));
  r.require(names.count("n2-empty") == 1, "corpus must include an empty-arc datum");
  r.require(names.count("n6-worked") == 1, "corpus must include the n=6 datum");

  int points = 0;
  for (size_t i = 0; i < corpus.size(); ++i) {
    const auto& nd = corpus[i];
    AybeKernel kernel{nd.data, KernelVariant::Full};
    SampleRng rng(1000 + 17 * static_cast<std::uint64_t>(i));
    for (int k = 0; k < 20; ++k) {
      AybePoint p = sample_aybe_point(rng, nd.data.n);
      r.require(
          verify_general_aybe(kernel, p.l1, p.l2, p.l3, p.y1, p.y2, p.y3)
              .is_zero(),
          nd.name + ": quadratic residual at seeded point " + std::to_string(k));
      SkewPoint s = sample_skew_point(rng, nd.data.n);
      r.require(verify_skew(kernel, s.lambda, s.y1, s.y2).is_zero(),
                nd.name + ": skew residual at seeded point " + std::to_string(k));
      ++points;
    }
  }
  r.summary = std::to_string(corpus.size()) + " data, " +
              std::to_string(points) + " points x 2 identities, all residuals zero";
}

// ---------------------------------------------------------------------------
// AC3 — geometric evaluation equals the reversed closed kernel; the two
// evaluation paths agree on the full matrix-unit basis.

void ac3(Result& r) {
  int models = 0, points = 0;
  for (const auto& nd : aybe_corpus()) {
    AssocBDData norm = normalize(nd.data);
    AssocBDData rev = reverse_data(norm);
    const int n = norm.n;
    SampleRng rng(2000 + static_cast<std::uint64_t>(models));
    for (int m : valid_ms(norm)) {
      OrderModel model(norm, m);
      ++models;
      for (int k = 0; k < 10; ++k) {
        SkewPoint p = sample_skew_point(rng, n);
        r.require(geometric_rmatrix(model, p.lambda, p.y1, p.y2) ==
                      r_bd_eval(rev, p.lambda, p.y1, p.y2),
                  nd.name + " m=" + std::to_string(m) +
                      ": geometric vs kernel at point " + std::to_string(k));
        SectionSpace sections(model, p.lambda, p.y1);
        for (int i = 1; i <= n && r.ok; ++i) {
          for (int j = 1; j <= n && r.ok; ++j) {
            MatQ b(n, n);
            b.at(i - 1, j - 1) = Rational(1);
            r.require(phi_closed(model, p.lambda, p.y1, p.y2, b) ==
                          phi_oracle(sections, p.y2, b),
                      nd.name + " m=" + std::to_string(m) +
                          ": evaluation paths differ on unit (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
          }
        }
        ++points;
      }
    }
  }
  r.summary = std::to_string(models) + " models, " + std::to_string(points) +
              " points, full unit-basis path agreement";
}

// ---------------------------------------------------------------------------
// AC4 — structural audits of every order model.

void ac4(Result& r) {
  int models = 0;
  for (const auto& nd : aybe_corpus()) {
    AssocBDData norm = normalize(nd.data);
    const int n = norm.n;
    for (int m : valid_ms(norm)) {
      // Construction re-runs the builder audits (dimension, isotropy,
      // product closure, identity membership); any violation throws.
      OrderModel model(norm, m);
      ++models;
      const std::string tag = nd.name + " m=" + std::to_string(m);
      const SubalgebraBasis& iso = model.isotropic();

      r.require(iso.dim() == n * n, tag + ": dim I must be n^2");

      bool isotropic = true;
      for (int a = 0; a < iso.dim() && isotropic; ++a)
        for (int b = a; b < iso.dim() && isotropic; ++b)
          isotropic = ((iso.first[static_cast<size_t>(a)] *
                        iso.first[static_cast<size_t>(b)])
                           .trace() ==
                       (iso.second[static_cast<size_t>(a)] *
                        iso.second[static_cast<size_t>(b)])
                           .trace());
      r.require(isotropic, tag + ": tr(aa') - tr(bb') must vanish on I x I");

      // (1,1) in I via an explicit span solve.
      MatQ span(2 * n * n, iso.dim());
      for (int k = 0; k < iso.dim(); ++k)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            span.at(i * n + j, k) = iso.first[static_cast<size_t>(k)].at(i, j);
            span.at(n * n + i * n + j, k) =
                iso.second[static_cast<size_t>(k)].at(i, j);
          }
      std::vector<Rational> rhs(static_cast<size_t>(2 * n * n));
      for (int i = 0; i < n; ++i) {
        rhs[static_cast<size_t>(i * n + i)] = Rational(1);
        rhs[static_cast<size_t>(n * n + i * n + i)] = Rational(1);
      }
      r.require(solve_linear(span, rhs).consistent, tag + ": (1,1) must lie in I");

      int kp = nilpotency_index(model, ThetaSign::Plus);
      int km = nilpotency_index(model, ThetaSign::Minus);
      r.require(kp >= 1 && km >= 1, tag + ": theta indices");
      r.require(h0_dimension(model) == 1, tag + ": h0 must be 1");
    }
  }
  r.summary = std::to_string(models) +
              " models: dim, isotropy, closure, identity, nilpotency, h0 = 1";
}

// ---------------------------------------------------------------------------
// AC5 — classical identity and unitarity across the triple corpus.

void ac5(Result& r) {
  auto corpus = lie_corpus();
  std::set<int> ns;
  std::set<size_t> gamma_sizes;
  for (const auto& nt : corpus) {
    ns.insert(nt.t.base.n());
    gamma_sizes.insert(nt.t.gamma1.size());
  }
  for (int n = 2; n <= 4; ++n)
    r.require(ns.count(n) == 1, "triples must cover n = " + std::to_string(n));
  for (size_t s : {size_t{0}, size_t{1}, size_t{2}})
    r.require(gamma_sizes.count(s) == 1,
              "triples must include |gamma1| = " + std::to_string(s));

  int points = 0;
  for (size_t i = 0; i < corpus.size(); ++i) {
    const auto& nt = corpus[i];
    SampleRng rng(3000 + 29 * static_cast<std::uint64_t>(i));
    for (int k = 0; k < 20; ++k) {
      Rational w1 =
          sample_rational(rng, [](const Rational& c) { return !c.is_zero(); });
      Rational w2 = sample_rational(rng, [&](const Rational& c) {
        return !c.is_zero() && c != w1 && c != -w1;
      });
      Rational w3 = sample_rational(rng, [&](const Rational& c) {
        return !c.is_zero() && c != w1 && c != -w1 && c != w2 && c != -w2;
      });
      r.require(verify_cybe(nt.t, w1, w2, w3).is_zero(),
                nt.name + ": classical residual at point " + std::to_string(k));
      Rational w = sample_rational(rng, [](const Rational& c) {
        return !c.is_zero() && c != Rational(1) && c != Rational(-1);
      });
      r.require(verify_unitarity(nt.t, w).is_zero(),
                nt.name + ": unitarity residual at point " + std::to_string(k));
      ++points;
    }
  }
  r.summary = std::to_string(corpus.size()) + " triples, " +
              std::to_string(points) + " points x 2 identities, all residuals zero";
}

// ---------------------------------------------------------------------------
// AC6 — r(z) - Omega/z is regular through order 8.

void ac6(Result& r) {
  for (const auto& nt : lie_corpus()) {
    Tensor2Series s = singular_part_check(nt.t, 8);  // throws on a residual
    r.require(s.negative_part_is_zero(),
              nt.name + ": negative-degree coefficients must vanish");
    r.require(s.trunc == 8, nt.name + ": expansion must reach order 8");
  }
  r.summary = "all triples: no negative-degree coefficients through z^8";
}

// ---------------------------------------------------------------------------
// AC7 — node-ideal coefficient forms and ideal memberships.  The a2 clause
// is checked exactly as stated and is a known failure; the notes carry the
// exact coefficient and the identity that does hold.

void ac7(Result& r) {
  std::vector<RatFunc> a = a_coeffs(6);

  r.require(a[0] == xk_over_xm1(0, 1), "a0 = 1/(x-1)");
  r.require(a[1] == xk_over_xm1(1, 2), "a1 = x/(x-1)^2");

  RatFunc stated_a2 = xk_over_xm1(1, 3);
  if (a[2] == stated_a2) {
    r.notes.push_back("unexpected: the stated a2 form held");
  } else {
    r.ok = false;
    r.notes.push_back("violated: a2 = x/(x-1)^3 as stated");
    r.notes.push_back("computed exactly: a2 = " + a[2].str() +
                      "   [= x(x+1)/(2(x-1)^3)]");
    r.notes.push_back("identity that does hold: a2 - a1/2 = x/(x-1)^3 -> " +
                      std::string((a[2] - a[1] * Q(1, 2) == stated_a2) ? "verified"
                                                                       : "FAILED"));
    r.notes.push_back("known failure, kept as stated; see README");
  }

  for (int m = 1; m <= 6; ++m) {
    r.require(a[static_cast<size_t>(m)].eval_at(Rational(0)).is_zero() &&
                  a[static_cast<size_t>(m)].eval_at_infinity().is_zero(),
              "a" + std::to_string(m) + " must vanish at 0 and at infinity");
  }
  for (int m = 2; m <= 6; ++m) {
    Rational inv_fact(1);
    for (int i = 2; i <= m; ++i) inv_fact = inv_fact / Rational(i);
    RatFunc g = a[static_cast<size_t>(m)] - a[1] * inv_fact;
    r.require(g.pole_order_at(Rational(0)) <= -1 &&
                  g.pole_order_at_infinity() <= -2,
              "a" + std::to_string(m) +
                  " - a1/m! must vanish at 0 and doubly at infinity");
  }
  r.summary = "a0, a1 exact; memberships hold; stated a2 form fails (known)";
}

// ---------------------------------------------------------------------------
// AC8 — spanning family vs extraction from the r-matrix, all grades, m <= 4.

void ac8(Result& r) {
  int elements = 0;
  for (const auto& nt : lie_corpus()) {
    const int h = nt.t.base.h();
    for (int j = 0; j < h; ++j) {
      std::vector<GradedLoopElement> direct = spanning_set(nt.t, j, 4);
      std::vector<GradedLoopElement> extracted =
          extract_gr_from_r(nt.t, j, 4, 6);
      r.require(direct == extracted,
                nt.name + ": grade " + std::to_string(j) + " families differ");
      elements += static_cast<int>(direct.size());
    }
  }
  r.summary = std::to_string(elements) +
              " elements: two construction paths agree exactly";
}

// ---------------------------------------------------------------------------
// AC9 — module closure under x/(x-1)^2 and x/(x-1)^3, with the named
// inclusions certified by exact membership.

void ac9(Result& r) {
  int products = 0, inclusions = 0, identities = 0;
  for (const auto& nt : lie_corpus()) {
    ClosureReport cr = verify_module_closure(nt.t, 3);  // throws on failure
    products += cr.products_checked;
    inclusions += cr.inclusions_checked;
    identities += cr.identities_checked;
  }
  r.require(products > 0 && inclusions > 0 && identities > 0,
            "closure must certify a nonempty batch");
  r.summary = std::to_string(products) + " products, " +
              std::to_string(inclusions) + " inclusions, " +
              std::to_string(identities) + " identities, all in span";
}

// ---------------------------------------------------------------------------
// AC10 — isotropy of the residue pairing and principal-part completeness.

void ac10(Result& r) {
  int pairs = 0, cross = 0;
  for (const auto& nt : lie_corpus()) {
    ManinReport mr = manin_audit(nt.t, 3, 6);  // throws on any violation
    const int dim = nt.t.base.n() * nt.t.base.n() - 1;
    r.require(mr.matrix_size == 3 * dim,
              nt.name + ": principal-part matrix must be P*dim(g) square");
    pairs += mr.isotropy_pairs;
    cross += mr.cross_grade_pairs;
  }
  r.summary = std::to_string(pairs) + " residue pairings zero (" +
              std::to_string(cross) +
              " cross-grade), principal parts complete at P = 3";
}

// ---------------------------------------------------------------------------
// AC11 — byte-identical reports across two consecutive runs per seed.

void ac11(Result& r) {
  const std::string base = std::string(YBE_FORGE_BIN) +
                           " verify-aybe --n 4 --sigma \"(1324)\" --gamma1 "
                           "\"(1,2)\" --gamma2 \"(3,4)\" --trials 5 --seed 7";
  std::string p1 = "/tmp/ybe_acc_" + std::to_string(::getpid()) + "_1.json";
  std::string p2 = "/tmp/ybe_acc_" + std::to_string(::getpid()) + "_2.json";
  int rc1 = std::system((base + " --json " + p1 + " >/dev/null 2>&1").c_str());
  int rc2 = std::system((base + " --json " + p2 + " >/dev/null 2>&1").c_str());
  r.require(rc1 != -1 && WIFEXITED(rc1) && WEXITSTATUS(rc1) == 0,
            "first run must exit 0");
  r.require(rc2 != -1 && WIFEXITED(rc2) && WEXITSTATUS(rc2) == 0,
            "second run must exit 0");
  std::string j1 = slurp(p1), j2 = slurp(p2);
  r.require(!j1.empty(), "first report must be written");
  r.require(j1 == j2, "reports must be byte-identical");
  std::remove(p1.c_str());
  std::remove(p2.c_str());
  r.summary = "two consecutive seeded runs, byte-identical JSON reports";
}

}  // namespace

int main() {
  Gate gate;
  std::printf("acceptance criteria\n");
  std::printf("-------------------\n");
  gate.criterion("AC1", 1, ac1);
  gate.criterion("AC2", 30, ac2);
  gate.criterion("AC3", 60, ac3);
  gate.criterion("AC4", 10, ac4);
  gate.criterion("AC5", 30, ac5);
  gate.criterion("AC6", 10, ac6);
  gate.criterion("AC7", 1, ac7);
  gate.criterion("AC8", 20, ac8);
  gate.criterion("AC9", 60, ac9);
  gate.criterion("AC10", 30, ac10);
  gate.criterion("AC11", 0, ac11);
  std::printf("-------------------\n");
  std::printf("RESULT: %d/11 criteria pass", 11 - gate.failures);
  if (gate.failures > 0)
    std::printf(", %d failure%s (AC7 a2 clause is the documented known failure)",
                gate.failures, gate.failures == 1 ? "" : "s");
  std::printf("\n");
  return gate.failures;
}
