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
 * Automorphism groups of quandles and biquandles, isomorphism of biquandle
 * structures, and the small amount of permutation-group machinery the
 * automorphism results are phrased in: conjugacy classes, centralizers,
 * setwise normalizers, the affine group of Z_n and group isomorphism.
 *
 * Relations computed here:
 *  - F in Aut(Q(B)) is an automorphism of B iff F beta_y = beta_{F(y)} F
 *    for every y, so Aut(B) sits inside the setwise normalizer of the betas;
 *  - for a constant structure beta_y = f, Aut(B) is the centralizer of f;
 *  - for the dihedral biquandle with s + 1 a unit, Aut(B) is the centralizer
 *    of i -> s i in Aff(Z_n);
 *  - constant structures up to isomorphism correspond to conjugacy classes
 *    of Aut(Q).
 */

#ifndef BQ_MORPHISMS_HPP
#define BQ_MORPHISMS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "homomorphisms.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"
#include "structures.hpp"
#include "tables.hpp"

namespace bq {

struct IsoResult {
  bool found = false;
  /// For carriers: a bijection between element indices. For groups: maps the
  /// position of an element in G1.elements() to a position in G2.elements().
  std::optional<IndexMap> witness;

  explicit operator bool() const noexcept { return found; }
};

/// Groups above this order are trusted to be closed without re-checking all
/// products. Automorphism sets are closed by construction.
inline constexpr std::size_t kVerifyClosureMaxOrder = 5040;

namespace detail {

inline PermGroup make_group(std::size_t degree, std::vector<Permutation> elements) {
  if (elements.size() <= kVerifyClosureMaxOrder) {
    return PermGroup::from_elements(degree, std::move(elements));
  }
  return PermGroup::from_closed_elements(degree, std::move(elements));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Automorphism groups

inline PermGroup quandle_aut_group(const FiniteQuandle& q, const SearchOptions& options = {}) {
  const TablePair pairs[] = {{&q.table(), &q.table()}};
  return detail::make_group(q.order(), all_isomorphisms(pairs, options));
}

/// Subgroup of Aut(Q) generated by the symmetries S_y; generators are the
/// distinct S_y in order of y.
inline PermGroup inner_group(const FiniteQuandle& q) {
  std::vector<Permutation> gens;
  for (Element y = 0; y < q.order(); ++y) {
    auto s = q.symmetry(y);
    if (std::find(gens.begin(), gens.end(), s) == gens.end()) {
      gens.push_back(std::move(s));
    }
  }
  return PermGroup::generated_by(q.order(), std::move(gens));
}

/// F beta_y == beta_{F(y)} F for every y.
inline bool intertwines_betas(const Permutation& f, std::span<const Permutation> betas1,
                              std::span<const Permutation> betas2) {
  const auto n = static_cast<Element>(f.degree());
  for (Element y = 0; y < n; ++y) {
    const auto& b1 = betas1[y];
    const auto& b2 = betas2[f(y)];
    for (Element x = 0; x < n; ++x) {
      if (f(b1(x)) != b2(f(x))) {
        return false;
      }
    }
  }
  return true;
}

/// Aut(B), computed by filtering Aut(Q(B)) with the beta-intertwining
/// condition.
inline PermGroup biquandle_aut_group(const FiniteBiquandle& b, const SearchOptions& options = {}) {
  const auto s = extract_structure(b);
  const auto aut_q = quandle_aut_group(s.base(), options);
  std::vector<Permutation> kept;
  for (const auto& f : aut_q.elements()) {
    if (intertwines_betas(f, s.betas(), s.betas())) {
      kept.push_back(f);
    }
  }
  return detail::make_group(b.order(), std::move(kept));
}

/// Aut(B) searched directly as bijections preserving both operations.
inline PermGroup biquandle_aut_group_direct(const FiniteBiquandle& b,
                                            const SearchOptions& options = {}) {
  const TablePair pairs[] = {{&b.under_table(), &b.under_table()},
                             {&b.over_table(), &b.over_table()}};
  return detail::make_group(b.order(), all_isomorphisms(pairs, options));
}

// ---------------------------------------------------------------------------
// Isomorphism of carriers

inline IsoResult quandles_isomorphic(const FiniteQuandle& q1, const FiniteQuandle& q2,
                                     const SearchOptions& options = {}) {
  IsoResult result;
  if (q1.order() != q2.order()) {
    return result;
  }
  const TablePair pairs[] = {{&q1.table(), &q2.table()}};
  for_each_isomorphism(
      pairs,
      [&](const Permutation& f) {
        result.found = true;
        result.witness = f.vector();
        return false;
      },
      options);
  return result;
}

inline IsoResult biquandles_isomorphic(const FiniteBiquandle& b1, const FiniteBiquandle& b2,
                                       const SearchOptions& options = {}) {
  IsoResult result;
  if (b1.order() != b2.order()) {
    return result;
  }
  const TablePair pairs[] = {{&b1.under_table(), &b2.under_table()},
                             {&b1.over_table(), &b2.over_table()}};
  for_each_isomorphism(
      pairs,
      [&](const Permutation& f) {
        result.found = true;
        result.witness = f.vector();
        return false;
      },
      options);
  return result;
}

/// Searches quandle isomorphisms F : S1.base -> S2.base with
/// F beta1_y = beta2_{F(y)} F for every y. The witness is the
/// lexicographically smallest such F.
inline IsoResult structures_isomorphic(const BiquandleStructure& s1, const BiquandleStructure& s2,
                                       const SearchOptions& options = {}) {
  IsoResult result;
  if (s1.order() != s2.order()) {
    return result;
  }
  const TablePair pairs[] = {{&s1.base().table(), &s2.base().table()}};
  for_each_isomorphism(
      pairs,
      [&](const Permutation& f) {
        if (!intertwines_betas(f, s1.betas(), s2.betas())) {
          return true;
        }
        result.found = true;
        result.witness = f.vector();
        return false;
      },
      options);
  return result;
}

// ---------------------------------------------------------------------------
// Group services

/// Classes ordered by their least element; each class sorted.
inline std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g) {
  std::vector<std::vector<Permutation>> classes;
  std::vector<bool> done(g.order(), false);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (done[i]) {
      continue;
    }
    std::vector<Permutation> cls;
    for (const auto& h : g.elements()) {
      cls.push_back(conjugate(g.elements()[i], h));
    }
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (const auto& c : cls) {
      done[g.index_of(c)] = true;
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline PermGroup centralizer(const PermGroup& g, const Permutation& f) {
  if (!g.contains(f)) {
    throw InputError("[" + to_string(f) + "] is not an element of the group");
  }
  std::vector<Permutation> out;
  for (const auto& h : g.elements()) {
    if (h * f == f * h) {
      out.push_back(h);
    }
  }
  return detail::make_group(g.degree(), std::move(out));
}

/// {g : g S g^-1 = S} for a subset S of the group.
inline PermGroup setwise_normalizer(const PermGroup& g, std::vector<Permutation> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (const auto& s : subset) {
    if (!g.contains(s)) {
      throw InputError("[" + to_string(s) + "] is not an element of the group");
    }
  }
  std::vector<Permutation> out;
  for (const auto& h : g.elements()) {
    std::vector<Permutation> image;
    image.reserve(subset.size());
    for (const auto& s : subset) {
      image.push_back(conjugate(s, h));
    }
    std::sort(image.begin(), image.end());
    if (image == subset) {
      out.push_back(h);
    }
  }
  return detail::make_group(g.degree(), std::move(out));
}

struct ConstantClass {
  Permutation representative;
  std::size_t class_size = 0;

  friend bool operator==(const ConstantClass&, const ConstantClass&) = default;
};

/// One constant structure per conjugacy class of Aut(Q), represented by the
/// least element of the class. With `check_distinct`, the representatives
/// are confirmed pairwise non-isomorphic as structures.
inline std::vector<ConstantClass> classify_constant_structures(const FiniteQuandle& q,
                                                               bool check_distinct = true) {
  const auto aut = quandle_aut_group(q);
  std::vector<ConstantClass> out;
  for (const auto& cls : conjugacy_classes(aut)) {
    out.push_back({cls.front(), cls.size()});
  }
  if (check_distinct) {
    std::vector<BiquandleStructure> structures;
    for (const auto& c : out) {
      structures.push_back(constant_structure(q, c.representative));
    }
    for (std::size_t i = 0; i < structures.size(); ++i) {
      for (std::size_t j = i + 1; j < structures.size(); ++j) {
        if (structures_isomorphic(structures[i], structures[j]).found) {
          throw ConsistencyError("constant structures for [" + to_string(out[i].representative) +
                                 "] and [" + to_string(out[j].representative) +
                                 "] are isomorphic");
        }
      }
    }
  }
  return out;
}

/// f_{a,b}(i) = a i + b mod n.
inline Permutation affine_map(std::size_t n, long long a, long long b) {
  if (n == 0) {
    throw InputError("modulus must be positive");
  }
  if (!is_unit_mod(a, n)) {
    throw InputError(std::to_string(a) + " is not a unit modulo " + std::to_string(n));
  }
  std::vector<Element> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = mod(a * static_cast<long long>(i) + b, n);
  }
  return Permutation::unchecked(std::move(images));
}

/// Aff(Z_n), of order n * phi(n).
inline PermGroup affine_group(std::size_t n) {
  std::vector<Permutation> elements;
  for (std::size_t a = 0; a < n; ++a) {
    if (!is_unit_mod(static_cast<long long>(a), n)) {
      continue;
    }
    for (std::size_t b = 0; b < n; ++b) {
      elements.push_back(affine_map(n, static_cast<long long>(a), static_cast<long long>(b)));
    }
  }
  return PermGroup::from_elements(n, std::move(elements));
}

/// Aut of the dihedral biquandle as the centralizer of i -> s i in Aff(Z_n).
/// Only defined when s + 1 is a unit; otherwise use biquandle_aut_group.
inline PermGroup dihedral_biquandle_aut(std::size_t n, Element s) {
  if (n == 0) {
    throw InputError("modulus must be positive");
  }
  if (s >= n || !is_unit_mod(s, n)) {
    throw InputError("s=" + std::to_string(s) + " is not a unit modulo " + std::to_string(n));
  }
  if (!is_unit_mod(static_cast<long long>(s) + 1, n)) {
    throw InputError("s+1=" + std::to_string(s + 1) + " is not a unit modulo " +
                     std::to_string(n) +
                     "; no closed form applies, use biquandle_aut_group instead");
  }
  return centralizer(affine_group(n), affine_map(n, s, 0));
}

namespace detail {

class GroupIsoSearch {
 public:
  GroupIsoSearch(const PermGroup& g1, const PermGroup& g2) : g1_(g1), g2_(g2) {
    k_ = g1.order();
    mul1_ = table(g1);
    mul2_ = table(g2);
    id1_ = g1.index_of(Permutation::identity(g1.degree()));
    id2_ = g2.index_of(Permutation::identity(g2.degree()));
    for (const auto& p : g2.elements()) {
      order2_.push_back(p.order());
    }
    for (const auto& p : greedy_generators(g1)) {
      gens_.push_back(g1.index_of(p));
    }
  }

  std::optional<IndexMap> run() {
    IndexMap map(k_, kUnset);
    std::vector<bool> used(k_, false);
    map[id1_] = static_cast<Element>(id2_);
    used[id2_] = true;
    std::vector<std::size_t> images;
    if (descend(map, used, images)) {
      return map;
    }
    return std::nullopt;
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  static std::vector<std::size_t> table(const PermGroup& g) {
    const std::size_t k = g.order();
    std::vector<std::size_t> t(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        t[a * k + b] = g.index_of(g.elements()[a] * g.elements()[b]);
      }
    }
    return t;
  }

  // Extends the map along right multiplication by the assigned generators.
  bool extend(IndexMap& map, std::vector<bool>& used, const std::vector<std::size_t>& images) {
    std::vector<std::size_t> queue;
    for (std::size_t x = 0; x < k_; ++x) {
      if (map[x] != kUnset) {
        queue.push_back(x);
      }
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t x = queue[q];
      for (std::size_t i = 0; i < images.size(); ++i) {
        const std::size_t y = mul1_[x * k_ + gens_[i]];
        const std::size_t target = mul2_[map[x] * k_ + images[i]];
        if (map[y] == kUnset) {
          if (used[target]) {
            return false;
          }
          map[y] = static_cast<Element>(target);
          used[target] = true;
          queue.push_back(y);
        } else if (map[y] != target) {
          return false;
        }
      }
    }
    return true;
  }

  bool descend(IndexMap& map, std::vector<bool>& used, std::vector<std::size_t>& images) {
    if (images.size() == gens_.size()) {
      return std::find(map.begin(), map.end(), kUnset) == map.end();
    }
    const std::size_t want = g1_.elements()[gens_[images.size()]].order();
    for (std::size_t c = 0; c < k_; ++c) {
      if (order2_[c] != want) {
        continue;
      }
      IndexMap saved_map = map;
      std::vector<bool> saved_used = used;
      images.push_back(c);
      if (extend(map, used, images) && descend(map, used, images)) {
        return true;
      }
      images.pop_back();
      map = std::move(saved_map);
      used = std::move(saved_used);
    }
    return false;
  }

  const PermGroup& g1_;
  const PermGroup& g2_;
  std::size_t k_ = 0;
  std::vector<std::size_t> mul1_;
  std::vector<std::size_t> mul2_;
  std::size_t id1_ = 0;
  std::size_t id2_ = 0;
  std::vector<std::size_t> order2_;
  std::vector<std::size_t> gens_;
};

inline std::map<std::size_t, std::size_t> order_statistics(const PermGroup& g) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& p : g.elements()) {
    ++counts[p.order()];
  }
  return counts;
}

}  // namespace detail

/// Abstract isomorphism of two permutation groups, searched over images of a
/// greedy generating set with candidates restricted to equal element order.
inline IsoResult groups_isomorphic(const PermGroup& g1, const PermGroup& g2) {
  IsoResult result;
  if (g1.order() != g2.order() ||
      detail::order_statistics(g1) != detail::order_statistics(g2)) {
    return result;
  }
  if (auto map = detail::GroupIsoSearch(g1, g2).run()) {
    result.found = true;
    result.witness = std::move(map);
  }
  return result;
}

}  // namespace bq

#endif  // BQ_MORPHISMS_HPP
