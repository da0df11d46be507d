// Copyright 2026 The maxprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "maxprop/common.hpp"

namespace maxprop {

/// A finitely supported real sequence x = (x(1), x(2), ...).
///
/// Entries are kept sorted by index with no stored zeros, so two vectors
/// compare equal iff they represent the same sequence.
class FiniteVector {
 public:
  using Entry = std::pair<std::size_t, double>;

  FiniteVector() = default;

  /// Accepts entries in any order. Zero values are dropped; index 0 and
  /// repeated indices are rejected.
  explicit FiniteVector(std::vector<Entry> entries) {
    auto by_index = [](const Entry& a, const Entry& b) { return a.first < b.first; };
    if (!std::is_sorted(entries.begin(), entries.end(), by_index)) {
      std::sort(entries.begin(), entries.end(), by_index);
    }
    entries_.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].first < 1) detail::require_argument(false, "FiniteVector: indices start at 1");
      if (i > 0 && entries[i].first == entries[i - 1].first) {
        detail::require_argument(false, "FiniteVector: repeated index " +
                                            std::to_string(entries[i].first));
      }
      if (!std::isfinite(entries[i].second)) {
        detail::require_argument(false, "FiniteVector: non-finite value");
      }
      if (entries[i].second != 0.0) entries_.push_back(entries[i]);
    }
  }

  explicit FiniteVector(const std::map<std::size_t, double>& entries)
      : FiniteVector(std::vector<Entry>(entries.begin(), entries.end())) {}

  /// values[k] becomes x(k + 1).
  static FiniteVector from_dense(const std::vector<double>& values) {
    std::vector<Entry> entries;
    entries.reserve(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (values[k] != 0.0) entries.emplace_back(k + 1, values[k]);
    }
    return FiniteVector(std::move(entries));
  }

  static FiniteVector from_dense(std::initializer_list<double> values) {
    return from_dense(std::vector<double>(values));
  }

  /// The unit vector e_k scaled by h.
  static FiniteVector spike(std::size_t k, double h = 1.0) {
    return FiniteVector(std::vector<Entry>{{k, h}});
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::size_t min_index() const { return entries_.empty() ? 0 : entries_.front().first; }
  std::size_t max_index() const { return entries_.empty() ? 0 : entries_.back().first; }

  double operator[](std::size_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::size_t i) { return e.first < i; });
    return (it != entries_.end() && it->first == index) ? it->second : 0.0;
  }

  /// x(1..n) as a dense array, n defaulting to max_index().
  std::vector<double> to_dense(std::size_t n = 0) const {
    if (n == 0) n = max_index();
    std::vector<double> out(n, 0.0);
    for (const auto& [i, v] : entries_) {
      if (i <= n) out[i - 1] = v;
    }
    return out;
  }

  /// Entries with lo < index <= hi.
  FiniteVector restrict_to(std::size_t lo, std::size_t hi) const {
    FiniteVector out;
    for (const auto& e : entries_) {
      if (e.first > lo && e.first <= hi) out.entries_.push_back(e);
    }
    return out;
  }

  template <class F>
  FiniteVector transform(F&& f) const {
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (const auto& [i, v] : entries_) out.emplace_back(i, f(v));
    return FiniteVector(std::move(out));
  }

  FiniteVector abs() const {
    return transform([](double v) { return std::fabs(v); });
  }

  friend FiniteVector operator+(const FiniteVector& a, const FiniteVector& b) {
    std::vector<Entry> out;
    out.reserve(a.entries_.size() + b.entries_.size());
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
      if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
        out.push_back(*ia++);
      } else if (ia == a.entries_.end() || ib->first < ia->first) {
        out.push_back(*ib++);
      } else {
        out.emplace_back(ia->first, ia->second + ib->second);
        ++ia;
        ++ib;
      }
    }
    return FiniteVector(std::move(out));
  }

  friend FiniteVector operator*(double s, const FiniteVector& x) {
    return x.transform([s](double v) { return s * v; });
  }

  friend FiniteVector operator-(const FiniteVector& a, const FiniteVector& b) {
    return a + (-1.0) * b;
  }

  friend bool operator==(const FiniteVector& a, const FiniteVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
};

/// Consecutive coordinate blocks [n_1, n_2), [n_2, n_3), ..., [n_k, inf)
/// with n_1 = 1.
class Blocking {
 public:
  explicit Blocking(std::vector<std::size_t> boundaries)
      : boundaries_(std::move(boundaries)) {
    detail::require_argument(!boundaries_.empty() && boundaries_.front() == 1,
                             "Blocking: first boundary must be 1");
    for (std::size_t i = 1; i < boundaries_.size(); ++i) {
      detail::require_argument(boundaries_[i] > boundaries_[i - 1],
                               "Blocking: boundaries must be strictly increasing");
    }
  }

  const std::vector<std::size_t>& boundaries() const { return boundaries_; }
  std::size_t block_count() const { return boundaries_.size(); }

  /// Block i as the half-open index range (lo, hi] used by restrict_to.
  std::pair<std::size_t, std::size_t> block(std::size_t i) const {
    const std::size_t lo = boundaries_.at(i) - 1;
    const std::size_t hi = i + 1 < boundaries_.size() ? boundaries_[i + 1] - 1
                                                      : static_cast<std::size_t>(-1);
    return {lo, hi};
  }

 private:
  std::vector<std::size_t> boundaries_;
};

}  // namespace maxprop
