#pragma once

// Finite abelian groups Z_{n1} x ... x Z_{nk}, their automorphisms, and the
// holomorph A x| Aut(A).
//
// Elements are addressed by a mixed-radix index. The last factor is the least
// significant digit, so for Z_2 x Z_2 the indices 0,1,2,3 are the tuples
// (0,0),(0,1),(1,0),(1,1).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dybrace {

using Elem = std::uint32_t;
using AutId = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 64;
inline constexpr std::size_t kDefaultMaxAuts = 10'000;

class InvalidGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a search would exceed one of the configured size bounds.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FiniteAbelianGroup {
 public:
  const std::vector<std::uint32_t>& orders() const noexcept { return orders_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t rank() const noexcept { return orders_.size(); }

  Elem zero() const noexcept { return 0; }
  Elem add(Elem x, Elem y) const noexcept {
    return add_.empty() ? add_slow(x, y) : add_[x * size_ + y];
  }
  Elem neg(Elem x) const noexcept { return neg_[x]; }
  Elem sub(Elem x, Elem y) const noexcept { return add(x, neg_[y]); }
  /// k * x for k >= 0.
  Elem scale(std::uint64_t k, Elem x) const noexcept;
  std::uint32_t element_order(Elem x) const noexcept;

  std::vector<std::uint32_t> coords(Elem x) const;
  Elem from_coords(std::span<const std::uint32_t> c) const;
  /// The canonical generator of factor i (coordinate vector e_i).
  Elem generator(std::size_t i) const { return static_cast<Elem>(strides_.at(i)); }

  /// "2" for cyclic groups, "(0,1)" otherwise.
  std::string format(Elem x) const;

  bool contains(Elem x) const noexcept { return x < size_; }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.orders_ == b.orders_;
  }

 private:
  friend FiniteAbelianGroup make_group(std::vector<std::uint32_t>, std::size_t);
  FiniteAbelianGroup() = default;
  Elem add_slow(Elem x, Elem y) const noexcept;

  std::vector<std::uint32_t> orders_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> neg_;
};

/// Throws InvalidGroup on an empty list, a factor < 2, or an order above max_order.
FiniteAbelianGroup make_group(std::vector<std::uint32_t> orders,
                              std::size_t max_order = kDefaultMaxOrder);

/// Checked addition; throws std::out_of_range for indices outside the group.
Elem elem_add(const FiniteAbelianGroup& g, Elem x, Elem y);
Elem elem_neg(const FiniteAbelianGroup& g, Elem x);

/// An additive map stored as an image table. Used both for automorphisms and
/// for isomorphisms between two presentations of the same group.
struct Automorphism {
  std::vector<Elem> images;

  Elem operator()(Elem x) const { return images[x]; }
  auto operator<=>(const Automorphism&) const = default;
};

/// All isomorphisms from -> to, lexicographic by image table. Throws
/// BoundExceeded once more than max_count are found.
std::vector<Automorphism> enumerate_isomorphisms(const FiniteAbelianGroup& from,
                                                 const FiniteAbelianGroup& to,
                                                 std::size_t max_count = kDefaultMaxAuts);

/// Aut(A), lexicographic by image table; the identity is always first.
std::vector<Automorphism> enumerate_automorphisms(const FiniteAbelianGroup& g,
                                                  std::size_t max_count = kDefaultMaxAuts);

bool is_additive_bijection(const FiniteAbelianGroup& g, std::span<const Elem> images);

/// (a, f) in A x| Aut(A); aut is an index into the owning Holomorph's list.
struct HolElement {
  Elem trans = 0;
  AutId aut = 0;
  auto operator<=>(const HolElement&) const = default;
};

/// The holomorph with product (a,f)(b,g) = (a + f(b), f g) acting on A by
/// (a,f).b = f(b) + a.
class Holomorph {
 public:
  explicit Holomorph(FiniteAbelianGroup g, std::size_t max_auts = kDefaultMaxAuts);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  std::size_t order() const noexcept { return group_.size(); }
  std::size_t aut_count() const noexcept { return auts_.size(); }
  const std::vector<Automorphism>& auts() const noexcept { return auts_; }
  const Automorphism& aut(AutId f) const { return auts_.at(f); }
  static constexpr AutId identity() noexcept { return 0; }

  Elem apply(AutId f, Elem x) const noexcept { return apply_[f * n_ + x]; }
  /// f o g
  AutId compose(AutId f, AutId g) const;
  AutId inverse(AutId f) const noexcept { return inverse_[f]; }
  std::optional<AutId> find(std::span<const Elem> images) const;

  HolElement mul(HolElement x, HolElement y) const {
    return {group_.add(x.trans, apply(x.aut, y.trans)), compose(x.aut, y.aut)};
  }
  HolElement inv(HolElement x) const {
    const AutId fi = inverse_[x.aut];
    return {group_.neg(apply(fi, x.trans)), fi};
  }
  Elem act(HolElement x, Elem b) const noexcept {
    return group_.add(apply(x.aut, b), x.trans);
  }
  bool contains(HolElement x) const noexcept {
    return x.trans < n_ && x.aut < auts_.size();
  }

 private:
  FiniteAbelianGroup group_;
  std::size_t n_;
  std::vector<Automorphism> auts_;
  std::vector<Elem> apply_;
  std::vector<AutId> inverse_;
  std::vector<AutId> compose_;  // empty when |Aut|^2 is too large to tabulate
  std::map<std::vector<Elem>, AutId> index_;
};

}  // namespace dybrace
