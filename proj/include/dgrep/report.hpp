#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dgrep {

struct Failure {
  std::string check;   // the axiom or condition that failed
  std::string detail;  // witnesses: objects, basis elements, degrees
};

/// Outcome of a validation. Keeps the first `kMaxRecorded` failures verbatim
/// and counts the rest.
class Report {
 public:
  static constexpr std::size_t kMaxRecorded = 64;

  explicit Report(std::string subject = {}) : subject_(std::move(subject)) {}

  void fail(std::string check, std::string detail);
  /// Appends another report's failures, prefixing their check names.
  void absorb(const Report& other, const std::string& prefix = {});

  bool passed() const { return total_ == 0; }
  std::size_t failure_count() const { return total_; }
  const std::vector<Failure>& failures() const { return failures_; }
  const std::string& subject() const { return subject_; }

  /// True if some recorded failure has this check name.
  bool failed(const std::string& check) const;

  /// Line-oriented rendering: a PASS/FAIL header then one line per failure.
  std::string text() const;

 private:
  std::string subject_;
  std::vector<Failure> failures_;
  std::size_t total_ = 0;
};

}  // namespace dgrep
