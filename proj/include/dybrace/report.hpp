#pragma once

// Verification reports shared by every checker. A check records how many
// points it evaluated, how many failed, and the lexicographically smallest
// failing points (capped), so reports do not depend on the worker count.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dybrace {

struct Witness {
  std::vector<std::uint64_t> at;
  auto operator<=>(const Witness&) const = default;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t evaluated = 0;
  std::uint64_t failures = 0;
  bool sampled = false;
  std::vector<Witness> witnesses;

  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  /// Records a failure, keeping only the `cap` smallest witnesses.
  void fail(Witness w, std::size_t cap);
  /// Folds a partial result over a disjoint slice of the same domain.
  void merge(const CheckResult& other, std::size_t cap);
};

struct Report {
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* find(std::string_view name) const;
  bool passed(std::string_view name) const;
  CheckResult& add(CheckResult c) { return checks.emplace_back(std::move(c)); }
  void append(const Report& other);
};

struct CheckOptions {
  std::size_t max_witnesses = 16;
  /// Restricts the outermost dynamical-parameter quantifier to these rows.
  std::optional<std::vector<std::uint32_t>> rows;
  /// Exhaustive evaluation up to this many (λ,a,b,c) points, seeded sampling above.
  std::uint64_t exhaustive_limit = 10'000'000;
  std::uint64_t sample_count = 1'000'000;
  std::uint64_t seed = 0x5eedULL;
};

inline CheckOptions first_witness_only() {
  CheckOptions o;
  o.max_witnesses = 1;
  return o;
}

/// One line per check: "name: PASS (n evaluated)" or with witnesses.
std::string describe(const Report& r);

}  // namespace dybrace
