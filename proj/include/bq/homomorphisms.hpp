/*
 *   Copyright 2026 The bqlib Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * Homomorphism predicates and the isomorphism search shared by every
 * automorphism computation.
 *
 * The search assigns images in element order. Each assignment is closed
 * under the operations: once F(x) and F(y) are known, F(x op y) is forced to
 * F(x) op F(y). A conflicting or non-injective forced value prunes the branch.
 * Branches are tried in ascending image order, so solutions are produced in
 * lexicographic order.
 *
 * The naive enumeration over all n! bijections is kept as an oracle.
 */

#ifndef BQ_HOMOMORPHISMS_HPP
#define BQ_HOMOMORPHISMS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"
#include "tables.hpp"

namespace bq {

struct SearchOptions {
  /// Enumerate all n! bijections instead of backtracking.
  bool naive = false;
  /// Largest order accepted by the naive enumeration.
  std::size_t naive_max_order = 8;
};

namespace detail {

inline void check_index_map(std::span<const Element> f, std::size_t from, std::size_t to) {
  if (f.size() != from) {
    throw InputError("map has " + std::to_string(f.size()) + " images, expected " +
                     std::to_string(from));
  }
  for (Element v : f) {
    if (v >= to) {
      throw InputError("map image " + std::to_string(v) + " out of range 0.." +
                       std::to_string(to - 1));
    }
  }
}

}  // namespace detail

/// f(x op y) == f(x) op' f(y) for all x, y.
inline bool preserves(const OperationTable& src, const OperationTable& dst,
                      std::span<const Element> f) {
  detail::check_index_map(f, src.order(), dst.order());
  const auto n = static_cast<Element>(src.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (f[src(x, y)] != dst(f[x], f[y])) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_quandle_hom(const FiniteQuandle& q1, const FiniteQuandle& q2,
                           std::span<const Element> f) {
  return preserves(q1.table(), q2.table(), f);
}

inline bool is_biquandle_hom(const FiniteBiquandle& b1, const FiniteBiquandle& b2,
                             std::span<const Element> f) {
  return preserves(b1.under_table(), b2.under_table(), f) &&
         preserves(b1.over_table(), b2.over_table(), f);
}

/// Table pairs (source, target) that a bijection must intertwine.
struct TablePair {
  const OperationTable* source;
  const OperationTable* target;
};

/// Visitor returns false to stop the search.
using IsoVisitor = std::function<bool(const Permutation&)>;

namespace detail {

class IsoSearch {
 public:
  IsoSearch(std::span<const TablePair> tables, const IsoVisitor& visit)
      : tables_(tables.begin(), tables.end()), visit_(visit) {
    n_ = tables_.front().source->order();
    map_.assign(n_, kUnset);
    used_.assign(n_, false);
  }

  void run() { descend(); }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  bool assign(Element x, Element v) {
    if (map_[x] != kUnset) {
      return map_[x] == v;
    }
    if (used_[v]) {
      return false;
    }
    map_[x] = v;
    used_[v] = true;
    trail_.push_back(x);
    return true;
  }

  bool propagate(std::size_t from) {
    for (std::size_t q = from; q < trail_.size(); ++q) {
      const Element x = trail_[q];
      for (std::size_t p = 0; p <= q; ++p) {
        const Element y = trail_[p];
        for (const auto& t : tables_) {
          if (!assign((*t.source)(x, y), (*t.target)(map_[x], map_[y])) ||
              !assign((*t.source)(y, x), (*t.target)(map_[y], map_[x]))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void undo(std::size_t size) {
    while (trail_.size() > size) {
      used_[map_[trail_.back()]] = false;
      map_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
  }

  bool descend() {
    const auto it = std::find(map_.begin(), map_.end(), kUnset);
    if (it == map_.end()) {
      return visit_(Permutation::unchecked(map_));
    }
    const auto x = static_cast<Element>(it - map_.begin());
    for (Element v = 0; v < n_; ++v) {
      if (used_[v]) {
        continue;
      }
      const std::size_t mark = trail_.size();
      const bool ok = assign(x, v) && propagate(mark);
      if (ok && !descend()) {
        undo(mark);
        return false;
      }
      undo(mark);
    }
    return true;
  }

  std::vector<TablePair> tables_;
  const IsoVisitor& visit_;
  std::size_t n_ = 0;
  std::vector<Element> map_;
  std::vector<bool> used_;
  std::vector<Element> trail_;
};

inline void check_table_pairs(std::span<const TablePair> tables) {
  if (tables.empty()) {
    throw InputError("isomorphism search needs at least one table pair");
  }
  const std::size_t n = tables.front().source->order();
  for (const auto& t : tables) {
    if (t.source->order() != n || t.target->order() != n) {
      throw InputError("isomorphism search needs tables of equal order");
    }
  }
}

}  // namespace detail

/// Calls `visit` on every bijection F with F(x op y) = F(x) op' F(y) for all
/// table pairs, in lexicographic order, until `visit` returns false.
inline void for_each_isomorphism(std::span<const TablePair> tables, const IsoVisitor& visit,
                                 const SearchOptions& options = {}) {
  detail::check_table_pairs(tables);
  const std::size_t n = tables.front().source->order();
  if (!options.naive) {
    detail::IsoSearch(tables, visit).run();
    return;
  }
  if (n > options.naive_max_order) {
    throw CapExceeded("naive search order", options.naive_max_order, n);
  }
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{0});
  do {
    const bool hom = std::all_of(tables.begin(), tables.end(), [&](const TablePair& t) {
      return preserves(*t.source, *t.target, images);
    });
    if (hom && !visit(Permutation::unchecked(images))) {
      return;
    }
  } while (std::next_permutation(images.begin(), images.end()));
}

inline std::vector<Permutation> all_isomorphisms(std::span<const TablePair> tables,
                                                 const SearchOptions& options = {}) {
  std::vector<Permutation> out;
  for_each_isomorphism(
      tables,
      [&](const Permutation& p) {
        out.push_back(p);
        return true;
      },
      options);
  return out;
}

}  // namespace bq

#endif  // BQ_HOMOMORPHISMS_HPP
