/*
 * Shared test corpus of associative Belavin–Drinfeld data, n = 2..6.
 *
 * Every datum keeps (n,1) outside gamma2 — equivalently, every pair of Π₂ is
 * increasing — which is the domain on which the closed tail formula solves
 * the quadratic identity (established by independent oracle sweeps; data
 * with (n,1) ∈ Γ₂ satisfy skew-symmetry but not the quadratic identity).
 * The geometric construction only ever feeds the formula reversed data
 * (σ⁻¹, Γ₂, Γ₁) whose second slot is an order-normalized Γ₁, so this domain
 * covers everything the theory produces.
 */
#pragma once

#include <string>
#include <vector>

#include "ybe/assoc_bd.hpp"

namespace ybe_test {

struct NamedDatum {
  std::string name;
  ybe::AssocBDData data;
};

inline std::vector<NamedDatum> aybe_corpus() {
  using ybe::ArcSet;
  using ybe::Perm;
  std::vector<NamedDatum> out;
  auto add = [&](const std::string& name, int n, const std::string& sigma,
                 const ArcSet& g1, const ArcSet& g2) {
    out.push_back({name, ybe::validate(n, Perm::parse(sigma, n), g1, g2)});
  };
  add("n2-empty", 2, "(12)", {}, {});
  add("n2-wrap", 2, "(12)", {{2, 1}}, {{1, 2}});
  add("n3-fwd", 3, "(123)", {{1, 2}}, {{2, 3}});
  add("n3-rev", 3, "(132)", {{2, 3}}, {{1, 2}});
  add("n3-g1wrap", 3, "(123)", {{3, 1}}, {{1, 2}});
  add("n4-shift", 4, "(1234)", {{1, 2}, {2, 3}}, {{2, 3}, {3, 4}});
  add("n4-neg", 4, "(1342)", {{4, 1}}, {{2, 3}});
  add("n5-empty", 5, "(15243)", {}, {});
  add("n5-split", 5, "(12345)", {{1, 2}, {3, 4}}, {{2, 3}, {4, 5}});
  add("n6-worked", 6, "(136245)", {{6, 1}, {1, 2}}, {{2, 3}, {3, 4}});
  // Reversal of the normalized n6-worked datum: wrapped Γ₁, unwrapped Γ₂.
  add("n6-rev", 6, "5 6 2 1 3 4", {{6, 1}, {1, 2}}, {{4, 5}, {5, 6}});
  return out;
}

}  // namespace ybe_test
