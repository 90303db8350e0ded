#include "superschur/report.hpp"

#include <algorithm>

namespace superschur {

void VerificationReport::add(CheckResult r) {
  checks_.push_back(std::move(r));
  if (sink_)
    sink_(checks_.back());
}

void VerificationReport::add(std::string name, std::string citation, bool passed, std::string witness,
                             std::string detail) {
  add(CheckResult{std::move(name), std::move(citation), passed, std::move(witness), std::move(detail)});
}

void VerificationReport::merge(const VerificationReport &other) {
  for (const auto &c : other.checks_)
    add(c);
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult &c) { return c.passed; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const CheckResult &c) { return !c.passed; }));
}

std::string VerificationReport::to_text() const {
  std::string s;
  for (const auto &c : checks_)
    s += format_check(c) + "\n";
  return s;
}

std::string format_check(const CheckResult &r) {
  std::string s = (r.passed ? "PASS " : "FAIL ") + r.name;
  if (!r.citation.empty())
    s += " [" + r.citation + "]";
  if (!r.detail.empty())
    s += " " + r.detail;
  if (!r.passed && !r.witness.empty())
    s += " witness: " + r.witness;
  return s;
}

void Tally::record(bool ok, const std::string &witness) {
  ++count_;
  if (!ok && failed_++ == 0)
    first_witness_ = witness;
}

CheckResult Tally::result() const {
  std::string detail = "(" + std::to_string(count_) + " instances";
  if (failed_)
    detail += ", " + std::to_string(failed_) + " failed";
  detail += ")";
  return CheckResult{name_, citation_, failed_ == 0, first_witness_, detail};
}

} // namespace superschur
