/*
 * Machine-readable verification reports.
 *
 * A report is an ordered list of named checks (pass/fail, optional witness)
 * plus an echo of the parsed inputs, serialized as JSON with a fixed field
 * order:
 *
 *   { schema_version, suite, inputs, checks, seed, timing_ms }
 *
 * Every number that is mathematically a rational is serialized as an exact
 * "p/q" string; floats never appear.  timing_ms is pinned to 0 — wall-clock
 * time is the one nondeterministic quantity a run would otherwise leak, and
 * the contract is that two runs with the same inputs and seed produce
 * byte-identical reports.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "json.hpp"

namespace ybe {

class VerificationReport {
 public:
  VerificationReport(std::string suite, std::uint64_t seed);

  // Echo one parsed input under `key`.  Values must already be exact
  // (strings, integers, arrays/objects thereof) — never floats.
  void input(const std::string& key, nlohmann::ordered_json value);

  // Record a check in execution order.  A failing check must carry a
  // witness describing the violation (std::logic_error otherwise); a
  // passing check may carry one as a certificate.
  void check(const std::string& name, bool pass, const std::string& witness = "");

  bool all_passed() const { return failures_ == 0; }
  int failures() const { return failures_; }
  int size() const { return static_cast<int>(checks_.size()); }
  const std::string& suite() const { return suite_; }

  nlohmann::ordered_json json() const;
  std::string serialize() const;  // json().dump(2) with a trailing newline

  // Human-readable view: one "[pass] name" / "[FAIL] name — witness" line
  // per check, then a summary line.
  void print_lines(std::ostream& os) const;

 private:
  std::string suite_;
  std::uint64_t seed_;
  nlohmann::ordered_json inputs_;
  nlohmann::ordered_json checks_;
  int failures_ = 0;
};

}  // namespace ybe
