#include "dybrace/group.hpp"

#include <algorithm>
#include <numeric>

namespace dybrace {

namespace {

constexpr std::size_t kMaxAddTable = std::size_t{1} << 20;
constexpr std::size_t kMaxComposeTable = std::size_t{1} << 22;

}  // namespace

FiniteAbelianGroup make_group(std::vector<std::uint32_t> orders, std::size_t max_order) {
  if (orders.empty()) throw InvalidGroup("group needs at least one cyclic factor");
  std::size_t total = 1;
  for (auto n : orders) {
    if (n < 2) throw InvalidGroup("cyclic factor order must be >= 2, got " + std::to_string(n));
    total *= n;
    if (total > max_order)
      throw InvalidGroup("group order exceeds bound " + std::to_string(max_order));
  }

  FiniteAbelianGroup g;
  g.orders_ = std::move(orders);
  g.size_ = total;
  g.strides_.assign(g.orders_.size(), 1);
  for (std::size_t i = g.orders_.size() - 1; i-- > 0;)
    g.strides_[i] = g.strides_[i + 1] * g.orders_[i + 1];

  g.neg_.resize(total);
  for (Elem x = 0; x < total; ++x) {
    auto c = g.coords(x);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (g.orders_[i] - c[i]) % g.orders_[i];
    g.neg_[x] = g.from_coords(c);
  }
  if (total * total <= kMaxAddTable) {
    g.add_.resize(total * total);
    for (Elem x = 0; x < total; ++x)
      for (Elem y = 0; y < total; ++y) g.add_[x * total + y] = g.add_slow(x, y);
  }
  return g;
}

Elem FiniteAbelianGroup::add_slow(Elem x, Elem y) const noexcept {
  Elem r = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const auto cx = (x / strides_[i]) % orders_[i];
    const auto cy = (y / strides_[i]) % orders_[i];
    r += static_cast<Elem>(((cx + cy) % orders_[i]) * strides_[i]);
  }
  return r;
}

Elem FiniteAbelianGroup::scale(std::uint64_t k, Elem x) const noexcept {
  Elem acc = 0;
  Elem base = x;
  while (k) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

std::uint32_t FiniteAbelianGroup::element_order(Elem x) const noexcept {
  std::uint32_t ord = 1;
  Elem y = x;
  while (y != 0) {
    y = add(y, x);
    ++ord;
  }
  return ord;
}

std::vector<std::uint32_t> FiniteAbelianGroup::coords(Elem x) const {
  std::vector<std::uint32_t> c(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i)
    c[i] = static_cast<std::uint32_t>((x / strides_[i]) % orders_[i]);
  return c;
}

Elem FiniteAbelianGroup::from_coords(std::span<const std::uint32_t> c) const {
  if (c.size() != orders_.size()) throw std::invalid_argument("coordinate vector has wrong length");
  std::size_t r = 0;
  for (std::size_t i = 0; i < c.size(); ++i) r += (c[i] % orders_[i]) * strides_[i];
  return static_cast<Elem>(r);
}

std::string FiniteAbelianGroup::format(Elem x) const {
  if (orders_.size() == 1) return std::to_string(x);
  std::string s = "(";
  const auto c = coords(x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + ")";
}

Elem elem_add(const FiniteAbelianGroup& g, Elem x, Elem y) {
  if (!g.contains(x) || !g.contains(y)) throw std::out_of_range("element index out of range");
  return g.add(x, y);
}

Elem elem_neg(const FiniteAbelianGroup& g, Elem x) {
  if (!g.contains(x)) throw std::out_of_range("element index out of range");
  return g.neg(x);
}

bool is_additive_bijection(const FiniteAbelianGroup& g, std::span<const Elem> images) {
  const auto n = g.size();
  if (images.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto y : images) {
    if (y >= n || seen[y]) return false;
    seen[y] = true;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (images[g.add(x, y)] != g.add(images[x], images[y])) return false;
  return true;
}

std::vector<Automorphism> enumerate_isomorphisms(const FiniteAbelianGroup& from,
                                                 const FiniteAbelianGroup& to,
                                                 std::size_t max_count) {
  std::vector<Automorphism> out;
  if (from.size() != to.size()) return out;
  const auto k = from.rank();

  // Candidate images of each generator: elements of exactly the generator's
  // order (an injective map preserves orders).
  std::vector<std::vector<Elem>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (Elem y = 0; y < to.size(); ++y)
      if (to.element_order(y) == from.orders()[i]) candidates[i].push_back(y);

  // partial[j] is the image of the j-th element of the subgroup spanned by the
  // generators chosen so far (enumerated in coordinate order).
  std::vector<Elem> chosen(k);
  std::vector<bool> seen(to.size());

  auto recurse = [&](auto&& self, std::size_t i, const std::vector<Elem>& partial) -> void {
    if (i == k) {
      Automorphism f;
      f.images.resize(from.size());
      for (Elem x = 0; x < from.size(); ++x) {
        const auto c = from.coords(x);
        Elem y = 0;
        for (std::size_t j = 0; j < k; ++j) y = to.add(y, to.scale(c[j], chosen[j]));
        f.images[x] = y;
      }
      out.push_back(std::move(f));
      if (out.size() > max_count)
        throw BoundExceeded("more than " + std::to_string(max_count) + " automorphisms");
      return;
    }
    for (Elem y : candidates[i]) {
      std::vector<Elem> next;
      next.reserve(partial.size() * from.orders()[i]);
      std::fill(seen.begin(), seen.end(), false);
      bool injective = true;
      for (Elem p : partial) {
        Elem v = p;
        for (std::uint32_t t = 0; t < from.orders()[i]; ++t) {
          if (seen[v]) {
            injective = false;
            break;
          }
          seen[v] = true;
          next.push_back(v);
          v = to.add(v, y);
        }
        if (!injective) break;
      }
      if (!injective) continue;
      chosen[i] = y;
      self(self, i + 1, next);
    }
  };
  recurse(recurse, 0, std::vector<Elem>{to.zero()});

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Automorphism> enumerate_automorphisms(const FiniteAbelianGroup& g,
                                                  std::size_t max_count) {
  return enumerate_isomorphisms(g, g, max_count);
}

Holomorph::Holomorph(FiniteAbelianGroup g, std::size_t max_auts)
    : group_(std::move(g)), n_(group_.size()), auts_(enumerate_automorphisms(group_, max_auts)) {
  const auto m = auts_.size();
  apply_.resize(m * n_);
  for (AutId f = 0; f < m; ++f) {
    std::copy(auts_[f].images.begin(), auts_[f].images.end(), apply_.begin() + f * n_);
    index_.emplace(auts_[f].images, f);
  }
  inverse_.resize(m);
  std::vector<Elem> tmp(n_);
  for (AutId f = 0; f < m; ++f) {
    for (Elem x = 0; x < n_; ++x) tmp[auts_[f].images[x]] = x;
    inverse_[f] = index_.at(tmp);
  }
  if (m * m <= kMaxComposeTable) {
    compose_.resize(m * m);
    for (AutId f = 0; f < m; ++f)
      for (AutId h = 0; h < m; ++h) {
        for (Elem x = 0; x < n_; ++x) tmp[x] = apply(f, apply(h, x));
        compose_[f * m + h] = index_.at(tmp);
      }
  }
}

AutId Holomorph::compose(AutId f, AutId g) const {
  if (!compose_.empty()) return compose_[f * auts_.size() + g];
  std::vector<Elem> tmp(n_);
  for (Elem x = 0; x < n_; ++x) tmp[x] = apply(f, apply(g, x));
  return index_.at(tmp);
}

std::optional<AutId> Holomorph::find(std::span<const Elem> images) const {
  auto it = index_.find(std::vector<Elem>(images.begin(), images.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace dybrace
