#pragma once

// Two ways of producing d-braces from smaller data: twisting a brace by an
// action of the parameter set, and the explicit family over a prime field
//   a ·_λ c = ((λc+1)^2 - 1) a,   φ(λ,b) = λ(λb+1).

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dybrace/brace.hpp"
#include "dybrace/dbrace.hpp"
#include "dybrace/report.hpp"

namespace dybrace {

/// λ ↦ f_λ ∈ Aut(A) for λ = 0..|H|-1.
struct GModuleAction {
  std::vector<Automorphism> f;

  std::size_t params() const { return f.size(); }
  /// λ ↦ f_λ is injective.
  bool faithful() const;
};

struct TwistOutcome {
  explicit TwistOutcome(DBrace d) : dbrace(std::move(d)) {}

  DBrace dbrace;                      // tables built regardless of the verdict
  bool accepted = false;
  CheckResult condition{"f_condition"};          // f_{φ(λ,b*a)} = f_{φ(φ(λ,a),b)} at (λ,a,b)
  CheckResult defects{"gamma_bijective"};        // γ_λ(b) not bijective at (λ,b)
  std::optional<CheckResult> parameter_identity;  // φ(λ,b*a) = φ(φ(λ,a),b), faithful actions only
};

/// a ·_λ b = f_λ^{-1}(f_{φ(λ,b)}(a)·f_λ(b) + f_{φ(λ,b)}(a)) - a. Throws
/// std::invalid_argument for malformed input (bad brace table, non-automorphic
/// f_λ, φ outside H).
TwistOutcome twisted_dbrace(const Brace& brace, const GModuleAction& action,
                            const std::vector<std::uint32_t>& phi, std::size_t max_witnesses = 16);

/// Z_p with field arithmetic. Throws std::invalid_argument unless p is a prime ≤ 101.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + p_ - b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return a * b % p_; }
  /// nullopt for 0
  std::optional<std::uint32_t> inv(std::uint32_t a) const;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> inv_;
};

inline constexpr std::uint32_t kUndefined = ~std::uint32_t{0};

struct IdentityTally {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;   // some side undefined
  std::uint64_t failures = 0;
  std::vector<Witness> witnesses;
};

struct FieldExample {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> params;   // parameter values λ, in index order
  std::vector<std::uint32_t> mult;     // [λidx][a][c] = a ·_λ c
  std::vector<std::uint32_t> phi;      // [λidx][b] = φ(λ,b) as a field value, kUndefined outside H
  std::vector<std::array<std::uint32_t, 2>> gamma_defects;         // (λ,b) with λb+1 = 0
  std::vector<std::array<std::uint32_t, 3>> denominator_defects;   // (λ,b,c) with λ(λb+1)^2 c + 1 = 0
  // R(λ)(b,c) as (first, second), kUndefined where the inverse does not exist.
  std::vector<std::uint32_t> r_printed_first;  // (λ(λb+1)^2c+1)^{-1} b
  std::vector<std::uint32_t> r_derived_first;  // (λ(λb+1)^2c+1)^{-2} b
  std::vector<std::uint32_t> r_second;         // (λb+1)^2 c
  std::uint64_t r_mismatches = 0;              // defined cells where the two first components differ
  IdentityTally parameter_identity;            // φ(λ, b *_λ c) = φ(φ(λ,c), b)
  IdentityTally star_associativity;            // (a *_{φ(λ,c)} b) *_λ c = a *_λ (b *_λ c)

  bool ok() const { return parameter_identity.failures == 0 && star_associativity.failures == 0; }
};

/// Parameters are all of F_p, or F_p^× when restrict_nonzero is set (φ may
/// then leave the parameter set, and such cells count as undefined).
FieldExample field_example(std::uint32_t p, bool restrict_nonzero = false);

}  // namespace dybrace
