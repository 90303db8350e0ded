#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace superschur {

struct CheckResult {
  std::string name;
  std::string citation;
  bool passed = false;
  /// Concrete counterexample for failures (matrix position, parameters).
  std::string witness;
  /// Free-form summary such as an instance count or a computed rank.
  std::string detail;
};

/// Ordered list of checks. An optional sink sees every check as it is added,
/// which lets long suites stream progress.
class VerificationReport {
public:
  using Sink = std::function<void(const CheckResult &)>;

  void set_sink(Sink sink) { sink_ = std::move(sink); }
  void add(CheckResult r);
  void add(std::string name, std::string citation, bool passed, std::string witness = {}, std::string detail = {});
  void merge(const VerificationReport &other);

  const std::vector<CheckResult> &checks() const { return checks_; }
  bool all_passed() const;
  std::size_t failures() const;
  std::string to_text() const;

private:
  std::vector<CheckResult> checks_;
  Sink sink_;
};

std::string format_check(const CheckResult &r);

/// Folds many instances of one identity family into a single check that
/// keeps the instance count and the first failing witness.
class Tally {
public:
  Tally(std::string name, std::string citation) : name_(std::move(name)), citation_(std::move(citation)) {}
  void record(bool ok, const std::string &witness);
  std::size_t count() const { return count_; }
  CheckResult result() const;

private:
  std::string name_;
  std::string citation_;
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::string first_witness_;
};

} // namespace superschur
