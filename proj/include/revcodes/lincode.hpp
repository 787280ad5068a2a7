/*
 * Copyright 2026 The revcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file lincode.hpp
 * @brief Linear codes over F_q: span, membership, reversibility, exact
 *        minimum distance, Griesmer bound and MDS classification.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "revcodes/field.hpp"
#include "revcodes/wordops.hpp"

namespace revcodes {

namespace detail {

using Rows = std::vector<std::vector<Elem>>;

// In-place reduced row echelon form; returns pivot columns, rows beyond the
// rank are dropped.
inline std::vector<std::size_t> rref(const Field& f, Rows& rows, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    auto& pr = rows[rank];
    const Elem s = f.inv(pr[col]);
    for (auto& x : pr) x = f.mul(x, s);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Elem c = rows[r][col];
      for (std::size_t j = 0; j < n; ++j) rows[r][j] = f.sub(rows[r][j], f.mul(c, pr[j]));
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

inline std::size_t block_weight(const Elem* v, std::size_t n, std::size_t block) {
  std::size_t w = 0;
  if (block == 1) {
    for (std::size_t j = 0; j < n; ++j) w += v[j] != 0;
    return w;
  }
  for (std::size_t j = 0; j < n; j += block) {
    bool nz = false;
    for (std::size_t b = 0; b < block; ++b) nz |= v[j + b] != 0;
    w += nz;
  }
  return w;
}

// Minimum (block) weight over nonzero codewords, visiting one message per
// scalar class: the first nonzero message coordinate is fixed to 1. Work is
// split into tasks (pivot row, value of the next coordinate) that workers
// pull from a shared counter; the min-reduction makes the result independent
// of the partitioning.
class MinWeightSearch {
 public:
  MinWeightSearch(const Field& f, const Rows& basis, std::size_t n, std::size_t block)
      : f_(f), k_(basis.size()), n_(n), q_(f.order()), block_(block) {
    mult_.assign(k_ * q_ * n_, 0);
    for (std::size_t i = 0; i < k_; ++i)
      for (Elem s = 0; s < q_; ++s)
        for (std::size_t j = 0; j < n_; ++j) mult_[(i * q_ + s) * n_ + j] = f_.mul(s, basis[i][j]);
  }

  std::size_t run(unsigned workers) const {
    struct Task {
      std::size_t pivot;
      Elem next;  // value of coordinate pivot+1 (ignored when pivot is last)
    };
    std::vector<Task> tasks;
    for (std::size_t j = 0; j < k_; ++j) {
      if (j + 1 == k_) {
        tasks.push_back({j, 0});
      } else {
        for (Elem v = 0; v < q_; ++v) tasks.push_back({j, v});
      }
    }
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, tasks.size()));

    std::atomic<std::size_t> next{0};
    std::vector<std::size_t> best(workers, std::numeric_limits<std::size_t>::max());
    auto body = [&](unsigned w) {
      std::vector<Elem> scratch((k_ + 1) * n_);
      for (;;) {
        const std::size_t t = next.fetch_add(1);
        if (t >= tasks.size()) break;
        const auto& task = tasks[t];
        Elem* start = scratch.data();
        const Elem* row = &mult_[(task.pivot * q_ + 1) * n_];
        std::copy(row, row + n_, start);
        std::size_t first_free = task.pivot + 1;
        if (first_free < k_) {
          add_into(start, &mult_[(first_free * q_ + task.next) * n_]);
          ++first_free;
        }
        best[w] = std::min(best[w], descend(scratch.data(), first_free, best[w]));
      }
    };
    if (workers <= 1) {
      body(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
      for (auto& th : pool) th.join();
    }
    return *std::min_element(best.begin(), best.end());
  }

 private:
  void add_into(Elem* dst, const Elem* src) const {
    if (f_.characteristic() == 2) {
      for (std::size_t j = 0; j < n_; ++j) dst[j] ^= src[j];
    } else {
      for (std::size_t j = 0; j < n_; ++j) dst[j] = f_.add(dst[j], src[j]);
    }
  }

  // cur holds the partial sum for rows < row; buffers for deeper levels
  // follow it in the scratch array.
  std::size_t descend(Elem* cur, std::size_t row, std::size_t best) const {
    if (row == k_) return std::min(best, block_weight(cur, n_, block_));
    Elem* nxt = cur + n_;
    const bool last = row + 1 == k_;
    for (Elem s = 0; s < q_; ++s) {
      const Elem* m = &mult_[(row * q_ + s) * n_];
      if (f_.characteristic() == 2) {
        for (std::size_t j = 0; j < n_; ++j) nxt[j] = cur[j] ^ m[j];
      } else {
        for (std::size_t j = 0; j < n_; ++j) nxt[j] = f_.add(cur[j], m[j]);
      }
      if (last) {
        best = std::min(best, block_weight(nxt, n_, block_));
      } else {
        best = descend(nxt, row + 1, best);
      }
    }
    return best;
  }

  const Field& f_;
  std::size_t k_, n_;
  Elem q_;
  std::size_t block_;
  std::vector<Elem> mult_;
};

}  // namespace detail

class LinearCode {
 public:
  /// The F_q-span of `gens` with a reduced echelon basis (pivot columns left
  /// to right), which makes the basis independent of generator order.
  static LinearCode span(std::span<const Codeword> gens) {
    if (gens.empty()) throw ValidationError("span of an empty generator list");
    for (const auto& g : gens) gens.front().check_compatible(g);
    LinearCode c;
    c.field_ = gens.front().field();
    c.n_ = gens.front().size();
    c.generators_.assign(gens.begin(), gens.end());
    detail::Rows rows;
    for (const auto& g : gens) rows.push_back(g.entries());
    c.pivots_ = detail::rref(*c.field_, rows, c.n_);
    c.rows_ = std::move(rows);
    c.cache_ = std::make_shared<DistanceCache>();
    return c;
  }

  static LinearCode span(std::initializer_list<Codeword> gens) {
    return span(std::span<const Codeword>(gens.begin(), gens.size()));
  }

  const FieldPtr& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return rows_.size(); }
  const std::vector<Codeword>& generators() const { return generators_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<Codeword> basis() const {
    std::vector<Codeword> out;
    for (const auto& r : rows_) out.emplace_back(field_, r);
    return out;
  }

  /// Number of codewords q^k, saturating at UINT64_MAX.
  std::uint64_t size() const {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < k(); ++i) {
      if (s > std::numeric_limits<std::uint64_t>::max() / field_->order()) return std::numeric_limits<std::uint64_t>::max();
      s *= field_->order();
    }
    return s;
  }

  bool contains(const Codeword& w) const {
    if (!field_->same_as(*w.field()) || w.size() != n_) return false;
    return contains(w.entries());
  }

  bool contains(std::span<const Elem> v) const {
    std::vector<Elem> r(v.begin(), v.end());
    const Field& f = *field_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elem c = r[pivots_[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) r[j] = f.sub(r[j], f.mul(c, rows_[i][j]));
    }
    return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
  }

  /// message · basis
  Codeword encode(std::span<const Elem> msg) const {
    if (msg.size() != k()) throw ValidationError("message length must equal the dimension");
    std::vector<Elem> out(n_, 0);
    const Field& f = *field_;
    for (std::size_t i = 0; i < msg.size(); ++i) {
      if (msg[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out[j] = f.add(out[j], f.mul(msg[i], rows_[i][j]));
    }
    return {field_, std::move(out)};
  }

  /// Reversal is linear, so checking the basis suffices.
  bool is_reversible() const {
    for (const auto& r : rows_) {
      std::vector<Elem> rev(r.rbegin(), r.rend());
      if (!contains(std::span<const Elem>(rev))) return false;
    }
    return true;
  }

  /// Exact minimum Hamming distance; computed once and shared by copies.
  std::size_t min_distance(unsigned workers = 0) const {
    std::call_once(cache_->once, [&] { cache_->d = min_block_distance(1, workers); });
    return cache_->d;
  }

  /// Minimum number of nonzero length-`block` blocks over nonzero codewords.
  std::size_t min_block_distance(std::size_t block, unsigned workers = 0) const {
    if (k() == 0) throw UndefinedDistanceError("minimum distance of the zero code is undefined");
    if (block == 0 || n_ % block != 0) throw ValidationError("block size must divide the length");
    return detail::MinWeightSearch(*field_, rows_, n_, block).run(workers);
  }

  /// Calls fn(const std::vector<Elem>&) for every codeword, messages in
  /// lexicographic order.
  template <typename Fn>
  void for_each_codeword(Fn&& fn) const {
    const Field& f = *field_;
    const std::size_t kk = k();
    std::vector<Elem> msg(kk, 0);
    std::vector<Elem> word(n_, 0);
    for (;;) {
      fn(static_cast<const std::vector<Elem>&>(word));
      std::size_t pos = kk;
      // odometer increment, least significant digit last
      while (pos > 0) {
        --pos;
        const Elem old = msg[pos];
        const Elem nv = old + 1 == f.order() ? 0 : old + 1;
        msg[pos] = nv;
        for (std::size_t j = 0; j < n_; ++j)
          word[j] = f.add(f.sub(word[j], f.mul(old, rows_[pos][j])), f.mul(nv, rows_[pos][j]));
        if (nv != 0) break;
        if (pos == 0) return;
      }
      if (kk == 0) return;
    }
  }

  std::vector<Codeword> enumerate(std::uint64_t cap) const {
    if (size() > cap)
      throw TooLargeError("code has " + std::to_string(field_->order()) + "^" + std::to_string(k()) +
                          " codewords, above the enumeration cap " + std::to_string(cap));
    std::vector<Codeword> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each_codeword([&](const std::vector<Elem>& w) { out.emplace_back(field_, w); });
    return out;
  }

 private:
  struct DistanceCache {
    std::once_flag once;
    std::size_t d = 0;
  };

  LinearCode() = default;

  FieldPtr field_;
  std::size_t n_ = 0;
  std::vector<Codeword> generators_;
  detail::Rows rows_;
  std::vector<std::size_t> pivots_;
  std::shared_ptr<DistanceCache> cache_;
};

// ---------------------------------------------------------------------------
// Bounds and classification
// ---------------------------------------------------------------------------

/// sum_{i=0}^{k-1} ceil(d / q^i)
inline std::uint64_t griesmer_sum(std::uint64_t k, std::uint64_t d, std::uint64_t q) {
  std::uint64_t sum = 0, qi = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    sum += (d + qi - 1) / qi;
    if (qi < d) qi *= q;  // once q^i >= d every further term is 1
  }
  return sum;
}

enum class GriesmerStatus { met_exactly, satisfied_strictly };

inline std::string to_string(GriesmerStatus s) { return s == GriesmerStatus::met_exactly ? "met" : "strict"; }

inline GriesmerStatus griesmer_check(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q) {
  if (k < 1 || d < 1) throw ValidationError("Griesmer bound needs k >= 1 and d >= 1");
  const auto sum = griesmer_sum(k, d, q);
  if (n < sum)
    throw InternalInconsistencyError("[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) +
                                     "] over GF(" + std::to_string(q) + ") violates the Griesmer bound (" +
                                     std::to_string(sum) + ")");
  return n == sum ? GriesmerStatus::met_exactly : GriesmerStatus::satisfied_strictly;
}

enum class MdsClass { mds, almost_mds, neither };

inline std::string to_string(MdsClass c) {
  switch (c) {
    case MdsClass::mds: return "MDS";
    case MdsClass::almost_mds: return "almost-MDS";
    case MdsClass::neither: return "-";
  }
  return "-";
}

inline MdsClass mds_class(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
  if (d + k == n + 1) return MdsClass::mds;
  if (d + k == n) return MdsClass::almost_mds;
  return MdsClass::neither;
}

}  // namespace revcodes
