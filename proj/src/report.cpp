#include "ybe/report.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace ybe {

VerificationReport::VerificationReport(std::string suite, std::uint64_t seed)
    : suite_(std::move(suite)),
      seed_(seed),
      inputs_(nlohmann::ordered_json::object()),
      checks_(nlohmann::ordered_json::array()) {}

void VerificationReport::input(const std::string& key,
                               nlohmann::ordered_json value) {
  inputs_[key] = std::move(value);
}

void VerificationReport::check(const std::string& name, bool pass,
                               const std::string& witness) {
  if (!pass && witness.empty()) {
    throw std::logic_error("report: failing check '" + name +
                           "' recorded without a witness");
  }
  nlohmann::ordered_json c;
  c["name"] = name;
  c["status"] = pass ? "pass" : "fail";
  if (!witness.empty()) c["witness"] = witness;
  checks_.push_back(std::move(c));
  if (!pass) ++failures_;
}

nlohmann::ordered_json VerificationReport::json() const {
  nlohmann::ordered_json r;
  r["schema_version"] = 1;
  r["suite"] = suite_;
  r["inputs"] = inputs_;
  r["checks"] = checks_;
  r["seed"] = seed_;
  r["timing_ms"] = 0;
  return r;
}

std::string VerificationReport::serialize() const { return json().dump(2) + "\n"; }

void VerificationReport::print_lines(std::ostream& os) const {
  for (const auto& c : checks_) {
    const bool pass = c.at("status").get<std::string>() == "pass";
    os << (pass ? "[pass] " : "[FAIL] ") << c.at("name").get<std::string>();
    if (!pass) os << " — " << c.at("witness").get<std::string>();
    os << "\n";
  }
  if (failures_ == 0) {
    os << "all " << checks_.size() << " checks passed (suite " << suite_ << ")\n";
  } else {
    os << failures_ << " of " << checks_.size() << " checks FAILED (suite "
       << suite_ << ")\n";
  }
}

}  // namespace ybe
