#pragma once

// Dynamical braces and their description as families of sections of the
// holomorph.
//
// A section S = {(a, f(a)) : a ∈ A} picks one automorphism per translation
// component. A family {S_λ} in which every translate (a,f)^{-1} S_λ with
// (a,f) ∈ S_λ is again some S_μ defines a d-brace with
//   a ·_λ b = f_λ(b)(a) - a,    φ(λ,a) = μ  where (a, f_λ(a))^{-1} S_λ = S_μ.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dybrace/group.hpp"
#include "dybrace/report.hpp"

namespace dybrace {

struct Section {
  std::vector<AutId> auts;  // auts[a] = f(a)

  bool contains_identity() const { return !auts.empty() && auts[0] == Holomorph::identity(); }
  HolElement at(Elem a) const { return {a, auts[a]}; }
  auto operator<=>(const Section&) const = default;
};

using SectionCode = std::uint64_t;

/// Packs a section into Σ f(a)·|Aut|^{|A|-1-a}; numeric order equals
/// lexicographic order of the automorphism columns.
SectionCode encode_section(const Holomorph& hol, std::span<const AutId> auts);
Section decode_section(const Holomorph& hol, SectionCode code);

bool is_valid_section(const Holomorph& hol, std::span<const AutId> auts);

/// {x^{-1} y : y ∈ s}, or nullopt if that set is not a section.
std::optional<Section> translate_section(const Holomorph& hol, HolElement x, const Section& s);

class ClosureFailure : public std::runtime_error {
 public:
  ClosureFailure(Section s, HolElement x)
      : std::runtime_error("translate of a family member is not a section"),
        section(std::move(s)),
        element(x) {}
  Section section;
  HolElement element;
};

/// A family is not closed, has duplicate members, or is otherwise malformed.
class FamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DBraceFamily {
  std::shared_ptr<const Holomorph> hol;
  std::vector<Section> sections;    // index = dynamical parameter
  std::vector<std::uint32_t> phi;   // [λ][a] -> section index

  std::size_t params() const { return sections.size(); }
  std::size_t order() const { return hol->order(); }
  std::uint32_t next(std::uint32_t lam, Elem a) const { return phi[lam * hol->order() + a]; }
  AutId f(std::uint32_t lam, Elem a) const { return sections[lam].auts[a]; }
};

/// Builds φ for the given sections (kept in the given order). Throws
/// FamilyError on duplicates, invalid sections, or a translate outside the family.
DBraceFamily make_family(std::shared_ptr<const Holomorph> hol, std::vector<Section> sections);

/// Reorders sections lexicographically and remaps φ.
DBraceFamily canonicalize(DBraceFamily fam);

/// Smallest family containing `seed` closed under translation by members,
/// in canonical order. Throws ClosureFailure if a translate is not a section.
DBraceFamily close_family(std::shared_ptr<const Holomorph> hol, const Section& seed);

enum class EnumerationMode { minimal, all };

struct EnumerationOptions {
  EnumerationMode mode = EnumerationMode::minimal;
  std::uint64_t max_sections = 1'000'000;  // bound on |Aut(A)|^|A|
  std::uint64_t max_families = 100'000;    // bound on the size of "all" output
  bool dedupe_iso = false;
};

/// Families as sorted section-code lists, in canonical order. This is the
/// parallel kernel behind enumerate_families. Throws BoundExceeded.
std::vector<std::vector<SectionCode>> enumerate_family_codes(const Holomorph& hol,
                                                             const EnumerationOptions& opt);

std::vector<DBraceFamily> enumerate_families(std::shared_ptr<const Holomorph> hol,
                                             const EnumerationOptions& opt = {});

DBraceFamily family_from_codes(std::shared_ptr<const Holomorph> hol,
                               std::span<const SectionCode> codes);

/// Image of a family under conjugation by F ∈ Aut(A), as sorted codes.
std::vector<SectionCode> conjugate_codes(const Holomorph& hol, std::span<const SectionCode> codes,
                                         AutId F);
/// Smallest conjugate; equal for isomorphic d-braces on the same group.
std::vector<SectionCode> canonical_iso_codes(const Holomorph& hol,
                                             std::span<const SectionCode> codes);

struct DBrace {
  FiniteAbelianGroup group;
  std::size_t params = 0;
  std::vector<Elem> mult;           // [λ][a][b] = a ·_λ b
  std::vector<std::uint32_t> phi;   // [λ][a]

  std::size_t n() const { return group.size(); }
  Elem mul(std::uint32_t lam, Elem a, Elem b) const { return mult[(lam * n() + a) * n() + b]; }
  std::uint32_t next(std::uint32_t lam, Elem a) const { return phi[lam * n() + a]; }
  Elem star(std::uint32_t lam, Elem a, Elem b) const {
    return group.add(group.add(mul(lam, a, b), a), b);
  }
  /// γ_λ(b)(a) = a ·_λ b + a
  Elem gamma(std::uint32_t lam, Elem b, Elem a) const { return group.add(mul(lam, a, b), a); }

  bool operator==(const DBrace&) const = default;
};

DBrace family_to_dbrace(const DBraceFamily& fam);

/// S_λ = {(a, γ_λ(a))}. Throws FamilyError when some γ_λ(a) is not an
/// automorphism (right distributivity or bijectivity fails) or two
/// parameters carry the same multiplication.
DBraceFamily dbrace_to_family(std::shared_ptr<const Holomorph> hol, const DBrace& d);

/// Axioms and derived identities. Throws std::invalid_argument on shape mismatch.
/// Checks: right_distributive, compatibility, gamma_bijective, right_quasigroup,
/// star_associativity, star_dot_agreement, parameter_descent, gamma_descent,
/// zero_left, zero_right_on_image.
Report check_dbrace(const DBrace& d, const CheckOptions& opt = {});

/// Restriction to the image of φ (the parameters whose multiplication is
/// zero-symmetric), reindexed canonically.
DBraceFamily zero_symmetric_core(const DBraceFamily& fam);

struct DBraceIsomorphism {
  Automorphism F;                  // group isomorphism A -> A'
  std::vector<std::uint32_t> p;    // parameter bijection H -> H'
};

std::optional<DBraceIsomorphism> dbrace_isomorphic(const DBrace& d1, const DBrace& d2);

}  // namespace dybrace
