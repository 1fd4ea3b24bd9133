#include "dgrep/report.hpp"

#include <algorithm>
#include <sstream>

namespace dgrep {

void Report::fail(std::string check, std::string detail) {
  if (failures_.size() < kMaxRecorded) failures_.push_back({std::move(check), std::move(detail)});
  ++total_;
}

void Report::absorb(const Report& other, const std::string& prefix) {
  for (const auto& f : other.failures_) {
    if (failures_.size() < kMaxRecorded) failures_.push_back({prefix + f.check, f.detail});
  }
  total_ += other.total_;
}

bool Report::failed(const std::string& check) const {
  return std::any_of(failures_.begin(), failures_.end(), [&](const Failure& f) { return f.check == check; });
}

std::string Report::text() const {
  std::ostringstream out;
  out << (passed() ? "PASS" : "FAIL") << ' ' << subject_;
  if (!passed()) out << " (" << total_ << " failure" << (total_ == 1 ? "" : "s") << ")";
  out << '\n';
  for (const auto& f : failures_) out << "  " << f.check << ": " << f.detail << '\n';
  if (total_ > failures_.size()) out << "  ... " << (total_ - failures_.size()) << " more\n";
  return out.str();
}

}  // namespace dgrep
