#pragma once

// Parallel exhaustive sweeps over (row, x1, ..., xD) with per-check failure
// collection. Rows are distributed over OpenMP threads; each thread keeps a
// private CheckResult per check and the partials are merged at the end, so
// the outcome is independent of the thread count.

#include <omp.h>

#include <array>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "dybrace/report.hpp"

namespace dybrace::detail {

inline std::vector<CheckResult> named(std::initializer_list<const char*> names) {
  std::vector<CheckResult> v;
  for (auto n : names) v.emplace_back(n);
  return v;
}

inline std::vector<std::uint32_t> all_rows(std::size_t h) {
  std::vector<std::uint32_t> rows(h);
  for (std::uint32_t l = 0; l < h; ++l) rows[l] = l;
  return rows;
}

inline std::vector<std::uint32_t> rows_of(const CheckOptions& opt, std::size_t h) {
  return opt.rows ? *opt.rows : all_rows(h);
}

template <std::size_t D>
using Index = std::array<std::uint32_t, D + 1>;

template <std::size_t D>
void record(std::vector<CheckResult>& local, unsigned bad, const Index<D>& idx, std::size_t cap) {
  for (std::size_t k = 0; k < local.size(); ++k) {
    ++local[k].evaluated;
    if (bad & (1u << k)) {
      Witness w;
      w.at.assign(idx.begin(), idx.end());
      local[k].fail(std::move(w), cap);
    }
  }
}

/// body(Index<D>) returns a bitmask; bit k set means check k failed there.
template <std::size_t D, class Body>
void sweep(const std::vector<std::uint32_t>& rows, std::uint32_t n,
           std::vector<CheckResult>& checks, std::size_t cap, Body&& body) {
#pragma omp parallel
  {
    std::vector<CheckResult> local(checks.size());
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(rows.size()); ++r) {
      Index<D> idx{};
      idx[0] = rows[r];
      if constexpr (D == 0) {
        record<D>(local, body(idx), idx, cap);
      } else {
        // odometer over the D inner coordinates
        bool more = n > 0;
        while (more) {
          record<D>(local, body(idx), idx, cap);
          std::size_t k = D;
          while (k > 0) {
            if (++idx[k] < n) break;
            idx[k] = 0;
            --k;
          }
          more = k > 0;
        }
      }
    }
#pragma omp critical(dybrace_sweep_merge)
    for (std::size_t k = 0; k < checks.size(); ++k) checks[k].merge(local[k], cap);
  }
}

/// Evaluates body on `count` seeded random points instead of the full domain.
template <std::size_t D, class Body>
void sample(const std::vector<std::uint32_t>& rows, std::uint32_t n, std::uint64_t count,
            std::uint64_t seed, std::vector<CheckResult>& checks, std::size_t cap, Body&& body) {
  std::vector<Index<D>> points(count);
  std::mt19937_64 rng(seed);
  for (auto& p : points) {
    p[0] = rows[rng() % rows.size()];
    for (std::size_t k = 1; k <= D; ++k) p[k] = static_cast<std::uint32_t>(rng() % n);
  }
#pragma omp parallel
  {
    std::vector<CheckResult> local(checks.size());
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(points.size()); ++i)
      record<D>(local, body(points[i]), points[i], cap);
#pragma omp critical(dybrace_sweep_merge)
    for (std::size_t k = 0; k < checks.size(); ++k) checks[k].merge(local[k], cap);
  }
  for (auto& c : checks) c.sampled = true;
}

/// Exhaustive when |rows|·n^D fits the limit, seeded sampling otherwise.
template <std::size_t D, class Body>
void sweep_or_sample(const CheckOptions& opt, std::size_t h, std::uint32_t n,
                     std::vector<CheckResult>& checks, Body&& body) {
  const auto rows = rows_of(opt, h);
  std::uint64_t total = rows.size();
  for (std::size_t k = 0; k < D; ++k) total *= n;
  if (total > opt.exhaustive_limit)
    sample<D>(rows, n, opt.sample_count, opt.seed, checks, opt.max_witnesses, body);
  else
    sweep<D>(rows, n, checks, opt.max_witnesses, body);
}

}  // namespace dybrace::detail
