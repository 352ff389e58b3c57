#pragma once

// Dynamical Yang-Baxter maps as finite tables, their constructions, and
// exhaustive verification.
//
// A map R(λ)(a,b) = (𝕽^λ_b(a), 𝕷^λ_a(b)) is stored as two |H|×|X|×|X| tables
// indexed [λ][a][b]: rpart holds 𝕽^λ_b(a) and lpart holds 𝕷^λ_a(b).
// The parameter update φ: H×X -> H is optional; an absent φ means φ(λ,a) = λ,
// which is how plain Yang-Baxter maps (|H| = 1) are represented.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dybrace/group.hpp"
#include "dybrace/report.hpp"

namespace dybrace {

struct DBrace;

/// A construction or combinator refused its input; `witness` locates the
/// offending point.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& what, Witness w)
      : std::runtime_error(what), witness(std::move(w)) {}
  Witness witness;
};

struct DybMap {
  std::size_t x = 0;
  std::size_t h = 0;
  std::optional<std::vector<std::uint32_t>> phi;
  std::vector<Elem> rpart;
  std::vector<Elem> lpart;

  static DybMap identity(std::size_t x, std::size_t h = 1);

  std::size_t cell(std::uint32_t lam, Elem a, Elem b) const { return (lam * x + a) * x + b; }
  /// 𝕽^λ_b(a)
  Elem R(std::uint32_t lam, Elem a, Elem b) const { return rpart[cell(lam, a, b)]; }
  /// 𝕷^λ_a(b)
  Elem L(std::uint32_t lam, Elem a, Elem b) const { return lpart[cell(lam, a, b)]; }
  std::uint32_t next(std::uint32_t lam, Elem a) const { return phi ? (*phi)[lam * x + a] : lam; }

  /// Throws std::invalid_argument when table sizes or entries are out of range.
  void validate_shape() const;
  bool operator==(const DybMap&) const = default;
};

/// The right nondegenerate unitary map of a d-brace:
/// 𝕷^λ_a(b) = γ_λ(a)(b), 𝕽^λ_b(a) = γ_λ(γ_λ(a)(b))^{-1}(a).
/// Throws VerificationError if some γ_λ(x) is not invertible.
DybMap dyb_from_dbrace(const DBrace& d);

enum class LeftActionRelation {
  /// 𝕷^λ_a 𝕷^{φ(λ,a)}_b = 𝕷^λ_{𝕷^λ_a(b)} 𝕷^{φ(λ,𝕷^λ_a(b))}_{𝕽^λ_b(a)} on a plain set
  general,
  /// 𝕷^λ_a 𝕷^{φ(λ,a)}_b = 𝕷^λ_{𝕷^λ_a(b)+a} on an abelian group
  additive,
};

struct LeftActionFamily {
  std::size_t x = 0;
  std::size_t h = 0;
  std::vector<Elem> table;  // [λ][a][b] = 𝕷^λ_a(b)
  std::optional<std::vector<std::uint32_t>> phi;
};

/// Builds R with 𝕽^λ_b(a) = (𝕷^λ_{𝕷^λ_a(b)})^{-1}(a) after validating the
/// chosen relation. `group` is required for the additive relation.
DybMap dyb_from_left_actions(const LeftActionFamily& fam, LeftActionRelation relation,
                             const FiniteAbelianGroup* group = nullptr);

/// The braid-type equation evaluated directly on all triples, plus its three
/// component relations separately; both verdicts must agree pointwise.
/// Checks: dynamical_yang_baxter, first_component, second_component,
/// third_component, componentwise_agreement.
Report verify_dyb(const DybMap& m, const CheckOptions& opt = {});

/// PR(λ)PR(λ) = id directly and through its two component identities.
/// Checks: involutive, unitary_first, unitary_second, unitary_agreement.
Report verify_unitary(const DybMap& m, const CheckOptions& opt = {});

struct Nondegeneracy {
  CheckResult left{"left_nondegenerate"};
  CheckResult right{"right_nondegenerate"};
};
Nondegeneracy check_nondegeneracy(const DybMap& m, const CheckOptions& opt = {});

/// φ(φ(λ,a),b) = φ(φ(λ,𝕷^λ_a(b)), 𝕽^λ_b(a)); trivially true without φ.
CheckResult check_weight_zero(const DybMap& m, const CheckOptions& opt = {});

/// R on X×Y with parameters H×I; pairs are encoded as first*|second|+second.
/// Throws VerificationError unless both inputs satisfy the DYB equation.
DybMap product_dyb(const DybMap& m1, const DybMap& m2);

struct PermutationSolution {
  DybMap map;
  bool unitary = false;
};

/// R(a,b) = (r(a), l(b)) for bijections l, r of {0..n-1}. Throws
/// VerificationError with the first point where l r != r l.
PermutationSolution permutation_solution(std::size_t n, const std::vector<Elem>& l,
                                         const std::vector<Elem>& r);

/// Inverse of a permutation table, or nullopt when it is not a bijection.
std::optional<std::vector<Elem>> invert_permutation(const std::vector<Elem>& p);

}  // namespace dybrace
