#include "dybrace/report.hpp"

#include <algorithm>
#include <sstream>

namespace dybrace {

void CheckResult::fail(Witness w, std::size_t cap) {
  passed = false;
  ++failures;
  if (cap == 0) return;
  if (witnesses.size() == cap && !(w < witnesses.back())) return;
  auto pos = std::lower_bound(witnesses.begin(), witnesses.end(), w);
  if (pos != witnesses.end() && *pos == w) return;
  witnesses.insert(pos, std::move(w));
  if (witnesses.size() > cap) witnesses.pop_back();
}

void CheckResult::merge(const CheckResult& other, std::size_t cap) {
  passed = passed && other.passed;
  evaluated += other.evaluated;
  failures += other.failures;
  sampled = sampled || other.sampled;
  for (const auto& w : other.witnesses) {
    auto pos = std::lower_bound(witnesses.begin(), witnesses.end(), w);
    if (pos != witnesses.end() && *pos == w) continue;
    witnesses.insert(pos, w);
  }
  if (witnesses.size() > cap) witnesses.resize(cap);
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* Report::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::passed(std::string_view name) const {
  const auto* c = find(name);
  return c != nullptr && c->passed;
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string describe(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << c.name << ": " << (c.passed ? "PASS" : "FAIL") << " (" << c.evaluated
       << (c.sampled ? " sampled" : " evaluated");
    if (!c.passed) os << ", " << c.failures << " failing";
    os << ")";
    for (const auto& w : c.witnesses) {
      os << " [";
      for (std::size_t i = 0; i < w.at.size(); ++i) os << (i ? "," : "") << w.at[i];
      os << "]";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace dybrace
