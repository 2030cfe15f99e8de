/*
 * Order-model tests: S_m combinatorics, parabolic/isotropic bases with their
 * audits, θ± nilpotency fixtures, h⁰ = 1 across the corpus, the section
 * space with its residue factorization, the two φ paths agreeing on full
 * bases, and the geometric r-matrix matching the closed tail formula on
 * reversed data.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bd_corpus.hpp"
#include "ybe/aybe.hpp"
#include "ybe/order_model.hpp"

using namespace ybe;
using ybe_test::aybe_corpus;

namespace {

Rational Q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

AssocBDData worked6() {
  return validate(6, Perm::parse("(136245)", 6), {{6, 1}, {1, 2}},
                  {{2, 3}, {3, 4}});
}

MatQ unit6(int i, int j) {
  MatQ e(6, 6);
  e.at(i - 1, j - 1) = Q(1);
  return e;
}

AssocBDData find_corpus(const std::string& name) {
  for (const auto& nd : aybe_corpus())
    if (nd.name == name) return nd.data;
  throw std::runtime_error("no corpus entry " + name);
}

}  // namespace

TEST_CASE("S_m membership matches the rotated linear order") {
  for (int n : {2, 4, 6})
    for (int m = 1; m <= n; ++m)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          // σ₀^{−m+1} sends i to i − m + 1 (mod n); S_m compares images.
          int ri = ((i - m) % n + n) % n + 1;
          int rj = ((j - m) % n + n) % n + 1;
          CHECK(in_s_m(i, j, m, n) == (ri < rj));
        }
}

TEST_CASE("parabolic P_+ fixtures") {
  SUBCASE("empty closure set, n = 3") {
    SubalgebraBasis p = build_parabolic_plus({}, 3);
    CHECK(p.dim() == 6);  // n(n+1)/2
    CHECK(p.ambient == Ambient::MatN);
  }
  SUBCASE("normalized n=6 closure set has dimension 24") {
    // Π₁ of the relabeled datum: {(4,5),(5,6),(4,6)}.
    AssocBDData norm = normalize(worked6());
    CHECK(norm.pi1 == ArcSet{{4, 5}, {5, 6}, {4, 6}});
    SubalgebraBasis p = build_parabolic_plus(norm.pi1, 6);
    CHECK(p.dim() == 24);  // 21 + |Π₁|
  }
}

TEST_CASE("parabolic P_+ rejects invalid closure sets") {
  // Decreasing pair (the raw wrap-around Π₁ of the n=6 datum).
  CHECK_THROWS_AS(build_parabolic_plus(worked6().pi1, 6), ClosureViolation);
  // Missing composite (1,2)+(2,3) = (1,3).
  CHECK_THROWS_AS(build_parabolic_plus({{1, 2}, {2, 3}}, 3), ClosureViolation);
  // Missing splitting parts of (1,3).
  CHECK_THROWS_AS(build_parabolic_plus({{1, 3}}, 3), ClosureViolation);
  // Out-of-range pair.
  CHECK_THROWS_AS(build_parabolic_plus({{1, 5}}, 3), ClosureViolation);
}

TEST_CASE("P_2 fixtures") {
  AssocBDData raw = worked6();
  SUBCASE("raw n=6 datum at m = 1 has dimension 24") {
    // S_1 is the increasing pairs, so P_2 = lower triangular + Π₂ units.
    SubalgebraBasis p = build_P2(raw.pi2, 1, 6);
    CHECK(p.dim() == 24);
  }
  SUBCASE("normalized n=6 datum at every valid m has dimension 24") {
    AssocBDData norm = normalize(raw);
    CHECK(valid_ms(norm) == std::vector<int>{3, 4, 5, 6});
    for (int m : valid_ms(norm)) CHECK(build_P2(norm.pi2, m, 6).dim() == 24);
  }
  SUBCASE("m-condition violations are closure violations") {
    // Π₂ of the normalized datum contains (6,1) ∉ S_1.
    AssocBDData norm = normalize(raw);
    CHECK_THROWS_AS(build_P2(norm.pi2, 1, 6), ClosureViolation);
  }
}

TEST_CASE("isotropic subalgebra at n = 2 with empty closure sets") {
  SubalgebraBasis p1 = build_parabolic_plus({}, 2);
  SubalgebraBasis p2 = build_P2({}, 1, 2);
  Perm swap2 = Perm::parse("(12)", 2);
  SubalgebraBasis iso = build_isotropic(p1, p2, swap2);
  CHECK(iso.dim() == 4);
  CHECK(iso.ambient == Ambient::MatNPair);
  // Levi gluing pairs e_ii with e_{σ(i)σ(i)}; the strict halves are free.
  bool saw_glued = false, saw_upper = false;
  for (int k = 0; k < iso.dim(); ++k) {
    const MatQ& a = iso.first[static_cast<size_t>(k)];
    const MatQ& b = iso.second[static_cast<size_t>(k)];
    if (a.at(0, 0) == Q(1)) {
      CHECK(b.at(1, 1) == Q(1));  // a_11 = b_22
      saw_glued = true;
    }
    if (a.at(0, 1) == Q(1)) {
      CHECK(b.is_zero());
      saw_upper = true;
    }
  }
  CHECK(saw_glued);
  CHECK(saw_upper);
}

TEST_CASE("isotropic subalgebra of the normalized n=6 datum") {
  AssocBDData norm = normalize(worked6());
  OrderModel model(norm, 3);
  const SubalgebraBasis& iso = model.isotropic();
  CHECK(iso.dim() == 36);  // n², and the constructor audited isotropy,
                           // closure, and (1,1) ∈ I
  CHECK(model.parabolic1().dim() == 24);
  CHECK(model.parabolic2().dim() == 24);
}

TEST_CASE("Levi mismatch is detected") {
  AssocBDData norm = normalize(worked6());
  SubalgebraBasis p1 = build_parabolic_plus(norm.pi1, 6);
  SubalgebraBasis p2 = build_P2(norm.pi2, 3, 6);
  // The identity does not carry ±Π₁ onto ±Π₂.
  CHECK_THROWS_AS(build_isotropic(p1, p2, Perm::identity(6)), LeviMismatch);
}

TEST_CASE("order model rejects unnormalized data and invalid m") {
  AssocBDData raw = worked6();
  CHECK_THROWS_AS(OrderModel(raw, 1), UnnormalizedGamma);
  AssocBDData norm = normalize(raw);
  // m = 1 has (σ₀⁻¹(1), 1) = (6,1) ∈ Γ₂ of the normalized datum.
  CHECK_THROWS_AS(OrderModel(norm, 1), AuditFailure);
  CHECK_THROWS_AS(make_projectors(norm, 1), AuditFailure);
}

TEST_CASE("theta fixtures on the raw n=6 datum at m = 1") {
  // The projector masks and θ± need no relabeling; at m = 1 the whole grid
  // is M(𝒪), so θ⁺ = σ ∘ π_{A₁⁺} on the nose.
  AssocBDData raw = worked6();
  ProjectorFamily pf = make_projectors(raw, 1);
  CHECK(pf.o_minus.count() == 0);
  CHECK(pf.o_plus.count() == 0);
  CHECK(pf.o_zero.count() == 36);

  MatQ step1 = theta_apply(pf, ThetaSign::Plus, unit6(1, 2));
  CHECK(step1 == unit6(3, 4));  // σ(1) = 3, σ(2) = 4
  CHECK(theta_apply(pf, ThetaSign::Plus, step1).is_zero());
  CHECK(nilpotency_index(pf, ThetaSign::Plus) == 2);
  CHECK(nilpotency_index(pf, ThetaSign::Minus) <=
        static_cast<int>(raw.pi2.size()) + 1);
}

TEST_CASE("theta is the zero map when the closure sets are empty") {
  AssocBDData empty = find_corpus("n5-empty");
  ProjectorFamily pf = make_projectors(empty, 1);
  CHECK(nilpotency_index(pf, ThetaSign::Plus) == 1);
  CHECK(nilpotency_index(pf, ThetaSign::Minus) == 1);
}

TEST_CASE("h0 = 1 for every corpus datum and every valid m") {
  for (const auto& nd : aybe_corpus()) {
    AssocBDData norm = normalize(nd.data);
    for (int m : valid_ms(norm)) {
      OrderModel model(norm, m);
      INFO(nd.name, " m=", m);
      CHECK(h0_dimension(model) == 1);
    }
  }
}

TEST_CASE("h0 probe with a broken Levi gluing reports its value") {
  AssocBDData norm = normalize(worked6());
  OrderModel model(norm, 3);
  // The probe swaps σ for the identity in the gluing conditions and must
  // report whatever dimension the broken system has (the scalars always
  // survive, so it is at least 1) rather than insisting on the audited 1.
  int broken = h0_dimension(model, Perm::identity(6));
  CHECK(broken >= 1);
  CHECK(h0_dimension(model, norm.sigma) == 1);
}

TEST_CASE("section space dimensions and the residue bijection") {
  SUBCASE("normalized n=6 datum, lambda = 2, x = 3") {
    AssocBDData norm = normalize(worked6());
    OrderModel model(norm, 3);
    SectionSpace sections(model, Q(2), Q(3));
    CHECK(sections.dim() == 36);  // n²; the residue bijection is audited
    // Round-trip: the section with residue b has residue b.
    SampleRng rng(2024);
    MatQ b(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) b.at(i, j) = sample_rational(rng);
    Section s = sections.section_for_residue(b);
    CHECK(sections.residue(s) == b);
    // Basis sections are reproduced by their residues.
    Section s0 = sections.basis_section(7);
    Section s1 = sections.section_for_residue(sections.residue(s0));
    CHECK(s1.a0 == s0.a0);
    CHECK(s1.a1 == s0.a1);
    CHECK(s1.a2 == s0.a2);
  }
  SUBCASE("n = 2 with empty closure sets, lambda = 2, x = 1") {
    AssocBDData empty = find_corpus("n2-empty");
    OrderModel model(empty, 1);
    SectionSpace sections(model, Q(2), Q(1));
    CHECK(sections.dim() == 4);
  }
}

TEST_CASE("section space rejects singular parameters") {
  AssocBDData empty = find_corpus("n2-empty");
  OrderModel model(empty, 1);
  CHECK_THROWS_AS(SectionSpace(model, Q(1), Q(3)), SingularParameter);
  CHECK_THROWS_AS(SectionSpace(model, Q(-1), Q(3)), SingularParameter);
  CHECK_THROWS_AS(SectionSpace(model, Q(0), Q(3)), SingularParameter);
  CHECK_THROWS_AS(SectionSpace(model, Q(2), Q(0)), SingularParameter);
  SectionSpace ok(model, Q(2), Q(3));
  CHECK_THROWS_AS(ok.evaluate(ok.basis_section(0), Q(3)), SingularParameter);
}

TEST_CASE("phi rejects singular evaluation points") {
  AssocBDData empty = find_corpus("n2-empty");
  OrderModel model(empty, 1);
  MatQ b = MatQ::identity(2);
  CHECK_THROWS_AS(phi_closed(model, Q(1), Q(3), Q(5), b), SingularParameter);
  CHECK_THROWS_AS(phi_closed(model, Q(2), Q(3), Q(3), b), SingularParameter);
  CHECK_THROWS_AS(phi_closed(model, Q(2), Q(0), Q(5), b), SingularParameter);
  CHECK_THROWS_AS(phi_closed(model, Q(2), Q(3), Q(0), b), SingularParameter);
}

TEST_CASE("phi_0 fixtures") {
  // λ = 2, x = 3, y = 5, so z = x/y = 3/5, z/(1−z) = 3/2, 1/(1−z) = 5/2.
  SUBCASE("strict upper and lower units, normalized n=6 datum") {
    AssocBDData norm = normalize(worked6());
    OrderModel model(norm, 3);
    // e_12 misses A₁⁺, A₂⁻, H, so only φ₀ acts: (y/(y−x) − 1)·e_12.
    CHECK(phi_closed(model, Q(2), Q(3), Q(5), unit6(1, 2)) ==
          unit6(1, 2) * Q(3, 2));
    // e_31 misses N₁⁺ too: plain y/(y−x) scaling.
    CHECK(phi_closed(model, Q(2), Q(3), Q(5), unit6(3, 1)) ==
          unit6(3, 1) * Q(5, 2));
    // e_21 lies in A₂⁻ (Π₂ contains (1,2)), so φ₋ adds λ⁻¹σ⁻¹(e_21) = ½e_65.
    CHECK(phi_closed(model, Q(2), Q(3), Q(5), unit6(2, 1)) ==
          unit6(2, 1) * Q(5, 2) + unit6(6, 5) * Q(1, 2));
  }
  SUBCASE("diagonal unit, n = 2 with empty closure sets") {
    AssocBDData empty = find_corpus("n2-empty");
    OrderModel model(empty, 1);
    // φ(h₁) = (y/(y−x))h₁ − (1−λ²)⁻¹(h₁ + λh_{σ(1)})
    //       = (5/2 + 1/3)h₁ + (2/3)h₂ with σ = (12).
    MatQ h1(2, 2);
    h1.at(0, 0) = Q(1);
    MatQ expect(2, 2);
    expect.at(0, 0) = Q(17, 6);
    expect.at(1, 1) = Q(2, 3);
    CHECK(phi_closed(model, Q(2), Q(3), Q(5), h1) == expect);
  }
}

TEST_CASE("closed phi equals the section-solve phi on full bases") {
  SampleRng rng(7321);
  for (const std::string& name :
       {std::string("n2-empty"), std::string("n2-wrap"),
        std::string("n3-fwd"), std::string("n4-shift"),
        std::string("n6-worked")}) {
    AssocBDData norm = normalize(find_corpus(name));
    const int n = norm.n;
    OrderModel model(norm, valid_ms(norm).front());
    SkewPoint pt = sample_skew_point(rng, n);
    const Rational &lambda = pt.lambda, &x = pt.y1, &y = pt.y2;
    SectionSpace sections(model, lambda, x);
    INFO(name);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        MatQ b(n, n);
        b.at(i - 1, j - 1) = Q(1);
        CHECK(phi_closed(model, lambda, x, y, b) == phi_oracle(sections, y, b));
      }
    // And once on a dense random matrix (linearity is not assumed).
    MatQ b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b.at(i, j) = sample_rational(rng);
    CHECK(phi_closed(model, lambda, x, y, b) == phi_oracle(sections, y, b));
  }
}

TEST_CASE("geometric r-matrix equals the closed kernel on reversed data") {
  SampleRng rng(911);
  for (const auto& nd : aybe_corpus()) {
    AssocBDData norm = normalize(nd.data);
    AssocBDData rev = reverse_data(norm);
    for (int m : valid_ms(norm)) {
      OrderModel model(norm, m);
      SkewPoint pt = sample_skew_point(rng, norm.n);
      INFO(nd.name, " m=", m);
      CHECK(geometric_rmatrix(model, pt.lambda, pt.y1, pt.y2) ==
            r_bd_eval(rev, pt.lambda, pt.y1, pt.y2));
    }
  }
}

TEST_CASE("geometric r-matrix at a fixed point of the n=6 datum") {
  AssocBDData norm = normalize(worked6());
  AssocBDData rev = reverse_data(norm);
  // The reversal is itself a valid datum with unwrapped Γ₂ (it appears in
  // the corpus as n6-rev), so the closed kernel solves the quadratic
  // identity there — the geometric construction lands in that domain.
  CHECK(rev.sigma.one_line() == std::vector<int>{5, 6, 2, 1, 3, 4});
  OrderModel model(norm, 3);
  Tensor2 geo = geometric_rmatrix(model, Q(2), Q(3), Q(5));
  CHECK(geo == r_bd_eval(rev, Q(2), Q(3), Q(5)));
  // Spot value: φ(e_12) = (3/2)e_12 contributes e_12 ⊗ e_21.
  CHECK(geo.coeff(1, 2, 2, 1) == Q(3, 2));
}

TEST_CASE("geometric r-matrix does not depend on m") {
  AssocBDData norm = normalize(find_corpus("n4-shift"));
  auto ms = valid_ms(norm);
  REQUIRE(ms.size() >= 2);
  OrderModel first(norm, ms.front());
  Tensor2 base = geometric_rmatrix(first, Q(2), Q(3), Q(5));
  for (size_t k = 1; k < ms.size(); ++k) {
    OrderModel other(norm, ms[static_cast<size_t>(k)]);
    CHECK(geometric_rmatrix(other, Q(2), Q(3), Q(5)) == base);
  }
}

TEST_CASE("geometric r-matrix with empty closure sets is the constant kernel") {
  for (const std::string& name :
       {std::string("n2-empty"), std::string("n5-empty")}) {
    AssocBDData data = find_corpus(name);
    OrderModel model(data, 1);
    INFO(name);
    CHECK(geometric_rmatrix(model, Q(2), Q(3), Q(5)) ==
          r_const_eval(data.sigma.inverse(), data.n, Q(2), Q(3, 5)));
  }
}

TEST_CASE("solve path of the geometric r-matrix matches the closed path") {
  AssocBDData norm = normalize(worked6());
  OrderModel model(norm, 4);
  CHECK(geometric_rmatrix(model, Q(2), Q(3), Q(5), PhiPath::Solve) ==
        geometric_rmatrix(model, Q(2), Q(3), Q(5), PhiPath::Closed));
  AssocBDData small = normalize(find_corpus("n3-fwd"));
  OrderModel smodel(small, valid_ms(small).front());
  CHECK(geometric_rmatrix(smodel, Q(3), Q(2), Q(7), PhiPath::Solve) ==
        geometric_rmatrix(smodel, Q(3), Q(2), Q(7), PhiPath::Closed));
}

TEST_CASE("geometric r-matrix solves the quadratic identity and skew") {
  AssocBDData norm = normalize(worked6());
  OrderModel model(norm, 5);
  KernelFn geo = [&model](const Rational& lambda, const Rational& x,
                          const Rational& y) {
    return geometric_rmatrix(model, lambda, x, y);
  };
  SampleRng rng(4242);
  for (int t = 0; t < 3; ++t) {
    AybePoint p = sample_aybe_point(rng, 6);
    CHECK(verify_general_aybe(geo, 6, p.l1, p.l2, p.l3, p.y1, p.y2, p.y3)
              .is_zero());
    SkewPoint s = sample_skew_point(rng, 6);
    CHECK(verify_skew(geo, 6, s.lambda, s.y1, s.y2).is_zero());
  }
}
