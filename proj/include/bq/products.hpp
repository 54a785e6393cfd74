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
 * Product biquandles of two quandles, connected components, and the
 * description of product automorphisms.
 *
 * On Q x K:
 *
 *   (x, a) under (y, b) = (x * y, a),   (x, a) over (y, b) = (x, a o b).
 *
 * Pairs are stored under the flat codec (x, a) <-> x * |K| + a.
 *
 * With components Q_1..Q_k of Q and K_1..K_m of K, an automorphism F of the
 * product restricts on Q_j x K_i to f_i x g_j, where f_i : Q -> Q depends only
 * on the K-component and g_j : K -> K only on the Q-component. The blocks
 * Q_j x K_i are the components of the product and F permutes them (rho).
 * When Q and K are connected, Aut(Q x K) = {f x g}.
 */

#ifndef BQ_PRODUCTS_HPP
#define BQ_PRODUCTS_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "homomorphisms.hpp"
#include "morphisms.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"
#include "report.hpp"
#include "tables.hpp"
#include "union_find.hpp"

namespace bq {

struct ComponentPartition {
  /// Each block sorted; blocks ordered by their least element.
  std::vector<std::vector<Element>> blocks;
  /// block_of[x] is the index of the block containing x.
  std::vector<std::size_t> block_of;

  std::size_t size() const noexcept { return blocks.size(); }
  bool connected() const noexcept { return blocks.size() == 1; }

  friend bool operator==(const ComponentPartition&, const ComponentPartition&) = default;
};

namespace detail {

inline ComponentPartition partition_from(UnionFind& uf) {
  ComponentPartition p;
  const std::size_t n = uf.size();
  p.block_of.assign(n, n);
  std::vector<std::size_t> root_block(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t r = uf.find(x);
    if (root_block[r] == n) {
      root_block[r] = p.blocks.size();
      p.blocks.emplace_back();
    }
    p.block_of[x] = root_block[r];
    p.blocks[root_block[r]].push_back(static_cast<Element>(x));
  }
  return p;
}

}  // namespace detail

/// Orbits of Inn(Q): the classes of the equivalence generated by x ~ x * y.
inline ComponentPartition quandle_components(const FiniteQuandle& q) {
  const auto n = static_cast<Element>(q.order());
  UnionFind uf(n);
  for (Element y = 0; y < n; ++y) {
    const auto inv = q.symmetry(y).inverse();
    for (Element x = 0; x < n; ++x) {
      uf.unite(x, q(x, y));
      uf.unite(x, inv(x));
    }
  }
  return detail::partition_from(uf);
}

/// Classes of the equivalence generated by x ~ x under y and x ~ x over y.
inline ComponentPartition biquandle_components(const FiniteBiquandle& b) {
  const auto n = static_cast<Element>(b.order());
  UnionFind uf(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      uf.unite(x, b.under(x, y));
      uf.unite(x, b.over(x, y));
    }
  }
  return detail::partition_from(uf);
}

class ProductBiquandle {
 public:
  ProductBiquandle(FiniteQuandle q, FiniteQuandle k, FiniteBiquandle b)
      : q_(std::move(q)), k_(std::move(k)), b_(std::move(b)) {}

  const FiniteQuandle& left() const noexcept { return q_; }
  const FiniteQuandle& right() const noexcept { return k_; }
  const FiniteBiquandle& biquandle() const noexcept { return b_; }
  std::size_t order() const noexcept { return b_.order(); }

  Element encode(Element x, Element a) const {
    return static_cast<Element>(x * k_.order() + a);
  }
  std::pair<Element, Element> decode(Element i) const {
    return {static_cast<Element>(i / k_.order()), static_cast<Element>(i % k_.order())};
  }

 private:
  FiniteQuandle q_;
  FiniteQuandle k_;
  FiniteBiquandle b_;
};

inline ProductBiquandle product_biquandle(const FiniteQuandle& q, const FiniteQuandle& k) {
  const std::size_t n = q.order();
  const std::size_t m = k.order();
  const std::size_t size = n * m;
  std::vector<Element> under(size * size);
  std::vector<Element> over(size * size);
  for (Element x = 0; x < n; ++x) {
    for (Element a = 0; a < m; ++a) {
      const std::size_t row = x * m + a;
      for (Element y = 0; y < n; ++y) {
        for (Element b = 0; b < m; ++b) {
          const std::size_t col = y * m + b;
          under[row * size + col] = static_cast<Element>(q(x, y) * m + a);
          over[row * size + col] = static_cast<Element>(x * m + k(a, b));
        }
      }
    }
  }
  FiniteBiquandle b(OperationTable(size, std::move(under)), OperationTable(size, std::move(over)));
  return ProductBiquandle(q, k, std::move(b));
}

/// f x g through the flat codec.
inline Permutation product_map(const Permutation& f, const Permutation& g) {
  const std::size_t m = g.degree();
  std::vector<Element> images(f.degree() * m);
  for (Element x = 0; x < f.degree(); ++x) {
    for (Element a = 0; a < m; ++a) {
      images[x * m + a] = static_cast<Element>(f(x) * m + g(a));
    }
  }
  return Permutation::unchecked(std::move(images));
}

struct ProductAutResult {
  PermGroup group;
  /// True when both factors are connected and the group was assembled as
  /// {f x g}; false when it fell back to a search on the product.
  bool from_factors = false;
};

inline ProductAutResult product_aut_group(const FiniteQuandle& q, const FiniteQuandle& k,
                                          const SearchOptions& options = {}) {
  if (quandle_components(q).connected() && quandle_components(k).connected()) {
    const auto aut_q = quandle_aut_group(q, options);
    const auto aut_k = quandle_aut_group(k, options);
    std::vector<Permutation> elements;
    elements.reserve(aut_q.order() * aut_k.order());
    for (const auto& f : aut_q.elements()) {
      for (const auto& g : aut_k.elements()) {
        elements.push_back(product_map(f, g));
      }
    }
    return {detail::make_group(q.order() * k.order(), std::move(elements)), true};
  }
  return {biquandle_aut_group(product_biquandle(q, k).biquandle(), options), false};
}

/// Blockwise description of a product automorphism.
struct ProductAutDecomposition {
  ComponentPartition left_components;   // Q_1..Q_k
  ComponentPartition right_components;  // K_1..K_m
  /// f[i] : Q -> Q used on Q x K_i, one per right component.
  std::vector<IndexMap> f;
  /// g[j] : K -> K used on Q_j x K, one per left component.
  std::vector<IndexMap> g;
  /// rho[j * m + i] = (j', i') with F(Q_j x K_i) = Q_j' x K_i'.
  std::vector<std::pair<std::size_t, std::size_t>> rho;
};

/// F(x, a) = (f_i(x), g_j(a)) for (x, a) in Q_j x K_i.
inline IndexMap assemble_product_map(const FiniteQuandle& q, const FiniteQuandle& k,
                                     const ProductAutDecomposition& d) {
  const std::size_t m = k.order();
  IndexMap out(q.order() * m);
  for (Element x = 0; x < q.order(); ++x) {
    const std::size_t j = d.left_components.block_of[x];
    for (Element a = 0; a < m; ++a) {
      const std::size_t i = d.right_components.block_of[a];
      out[x * m + a] = static_cast<Element>(d.f[i][x] * m + d.g[j][a]);
    }
  }
  return out;
}

namespace detail {

// Index of the block equal to `image`, or blocks.size().
inline std::size_t block_equal_to(const ComponentPartition& p, std::vector<Element> image) {
  std::sort(image.begin(), image.end());
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.blocks[b] == image) {
      return b;
    }
  }
  return p.blocks.size();
}

// Blockwise bijectivity and the block part of the rho check for one map:
// each block maps injectively onto a block. Returns the target blocks or an
// empty vector on failure.
inline std::vector<std::size_t> block_images(const ComponentPartition& p,
                                             std::span<const Element> f) {
  std::vector<std::size_t> targets;
  for (const auto& block : p.blocks) {
    std::vector<Element> image;
    for (Element x : block) {
      image.push_back(f[x]);
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
      return {};
    }
    const std::size_t t = block_equal_to(p, image);
    if (t == p.blocks.size()) {
      return {};
    }
    targets.push_back(t);
  }
  return targets;
}

}  // namespace detail

/// Checks the blockwise conditions on a decomposition:
///  T1: each f_i is injective on every Q_j and each g_j on every K_i;
///  T2: f_i(x) * f_r(y) = f_i(x * y) and g_j(a) o g_l(b) = g_j(a o b);
///  T3: f_i(Q_j) x g_j(K_i) is a component block and the induced map rho on
///      blocks is a bijection recorded in `d.rho`.
inline VerificationReport check_product_decomposition(const FiniteQuandle& q,
                                                      const FiniteQuandle& k,
                                                      const ProductAutDecomposition& d,
                                                      const VerifyOptions& options = {}) {
  VerificationReport report(options.max_violations);
  const auto& qc = d.left_components;
  const auto& kc = d.right_components;
  const std::size_t kq = qc.size();
  const std::size_t mk = kc.size();
  if (d.f.size() != mk || d.g.size() != kq || d.rho.size() != kq * mk) {
    throw InputError("decomposition shape does not match component counts");
  }
  for (const auto& fi : d.f) {
    detail::check_index_map(fi, q.order(), q.order());
  }
  for (const auto& gj : d.g) {
    detail::check_index_map(gj, k.order(), k.order());
  }
  std::vector<std::vector<std::size_t>> f_targets(mk);
  std::vector<std::vector<std::size_t>> g_targets(kq);
  for (Element i = 0; i < mk; ++i) {
    f_targets[i] = detail::block_images(qc, d.f[i]);
    if (f_targets[i].empty()) {
      report.add("T1-f-blockwise-bijective", {i});
    }
  }
  for (Element j = 0; j < kq; ++j) {
    g_targets[j] = detail::block_images(kc, d.g[j]);
    if (g_targets[j].empty()) {
      report.add("T1-g-blockwise-bijective", {j});
    }
  }
  for (Element i = 0; i < mk; ++i) {
    for (Element r = 0; r < mk; ++r) {
      for (Element x = 0; x < q.order(); ++x) {
        for (Element y = 0; y < q.order(); ++y) {
          if (q(d.f[i][x], d.f[r][y]) != d.f[i][q(x, y)]) {
            report.add("T2-f-compatible", {i, r, x, y});
          }
        }
      }
    }
  }
  for (Element j = 0; j < kq; ++j) {
    for (Element l = 0; l < kq; ++l) {
      for (Element a = 0; a < k.order(); ++a) {
        for (Element b = 0; b < k.order(); ++b) {
          if (k(d.g[j][a], d.g[l][b]) != d.g[j][k(a, b)]) {
            report.add("T2-g-compatible", {j, l, a, b});
          }
        }
      }
    }
  }
  if (!report.passed()) {
    return report;
  }
  std::vector<bool> hit(kq * mk, false);
  for (Element j = 0; j < kq; ++j) {
    for (Element i = 0; i < mk; ++i) {
      const auto expected = std::make_pair(f_targets[i][j], g_targets[j][i]);
      if (d.rho[j * mk + i] != expected) {
        report.add("T3-rho-blocks", {j, i});
        continue;
      }
      const std::size_t flat = expected.first * mk + expected.second;
      if (hit[flat]) {
        report.add("T3-rho-bijective", {j, i});
      }
      hit[flat] = true;
    }
  }
  return report;
}

/// Splits a product automorphism into its blockwise maps. Throws InputError
/// when `f_map` is not an automorphism of the product and ConsistencyError
/// when the split fails its own conditions.
inline ProductAutDecomposition decompose_product_aut(const FiniteQuandle& q,
                                                     const FiniteQuandle& k,
                                                     std::span<const Element> f_map) {
  const auto product = product_biquandle(q, k);
  detail::check_index_map(f_map, product.order(), product.order());
  if (!is_permutation(f_map) || !is_biquandle_hom(product.biquandle(), product.biquandle(), f_map)) {
    throw InputError("map is not an automorphism of the product biquandle");
  }
  const std::size_t m = k.order();
  ProductAutDecomposition d;
  d.left_components = quandle_components(q);
  d.right_components = quandle_components(k);
  const std::size_t kq = d.left_components.size();
  const std::size_t mk = d.right_components.size();

  d.f.assign(mk, IndexMap(q.order()));
  for (std::size_t i = 0; i < mk; ++i) {
    const auto& block = d.right_components.blocks[i];
    for (Element x = 0; x < q.order(); ++x) {
      const Element first = product.decode(f_map[x * m + block.front()]).first;
      for (Element a : block) {
        if (product.decode(f_map[x * m + a]).first != first) {
          throw ConsistencyError("first coordinate of F varies along a right component");
        }
      }
      d.f[i][x] = first;
    }
  }
  d.g.assign(kq, IndexMap(m));
  for (std::size_t j = 0; j < kq; ++j) {
    const auto& block = d.left_components.blocks[j];
    for (Element a = 0; a < m; ++a) {
      const Element second = product.decode(f_map[block.front() * m + a]).second;
      for (Element x : block) {
        if (product.decode(f_map[x * m + a]).second != second) {
          throw ConsistencyError("second coordinate of F varies along a left component");
        }
      }
      d.g[j][a] = second;
    }
  }
  d.rho.resize(kq * mk);
  for (std::size_t j = 0; j < kq; ++j) {
    for (std::size_t i = 0; i < mk; ++i) {
      const Element x = d.left_components.blocks[j].front();
      const Element a = d.right_components.blocks[i].front();
      const auto [fx, ga] = product.decode(f_map[x * m + a]);
      d.rho[j * mk + i] = {d.left_components.block_of[fx], d.right_components.block_of[ga]};
    }
  }
  const auto report = check_product_decomposition(q, k, d);
  if (!report.passed()) {
    throw ConsistencyError("product automorphism decomposition fails: " +
                           to_string(report.violations().front()));
  }
  const auto rebuilt = assemble_product_map(q, k, d);
  if (!std::equal(rebuilt.begin(), rebuilt.end(), f_map.begin(), f_map.end())) {
    throw ConsistencyError("reassembled decomposition differs from the automorphism");
  }
  return d;
}

struct TupleSearchLimits {
  std::size_t max_order = 12;
  std::size_t max_factor_order = 8;
  std::size_t max_nodes = 2'000'000;
};

namespace detail {

// Maps f : Q -> Q with f(x * y) = f(x) * f(y) sending every component
// injectively onto a component.
inline std::vector<IndexMap> blockwise_endomorphisms(const FiniteQuandle& q,
                                                     const ComponentPartition& p,
                                                     std::size_t& budget,
                                                     std::size_t max_nodes) {
  const auto n = static_cast<Element>(q.order());
  std::vector<IndexMap> out;
  IndexMap f(n, 0);
  auto consistent = [&](Element upto) {
    for (Element x = 0; x <= upto; ++x) {
      for (Element y = 0; y <= upto; ++y) {
        const Element z = q(x, y);
        if (z <= upto && f[z] != q(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, Element x) -> void {
    if (++budget > max_nodes) {
      throw CapExceeded("tuple search nodes", max_nodes, budget);
    }
    if (x == n) {
      if (!block_images(p, f).empty()) {
        out.push_back(f);
      }
      return;
    }
    for (Element v = 0; v < n; ++v) {
      f[x] = v;
      if (consistent(x)) {
        self(self, x + 1);
      }
    }
  };
  rec(rec, 0);
  return out;
}

// Tuples (h_0..h_{count-1}) from `candidates` with h_i(u) op h_r(v) = h_i(u op v).
inline std::vector<std::vector<std::size_t>> compatible_tuples(
    const FiniteQuandle& q, const std::vector<IndexMap>& candidates, std::size_t count,
    std::size_t& budget, std::size_t max_nodes) {
  const auto n = static_cast<Element>(q.order());
  auto compatible = [&](const IndexMap& h1, const IndexMap& h2) {
    for (Element u = 0; u < n; ++u) {
      for (Element v = 0; v < n; ++v) {
        if (q(h1[u], h2[v]) != h1[q(u, v)]) {
          return false;
        }
      }
    }
    return true;
  };
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self) -> void {
    if (++budget > max_nodes) {
      throw CapExceeded("tuple search nodes", max_nodes, budget);
    }
    if (chosen.size() == count) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      bool ok = compatible(candidates[c], candidates[c]);
      for (std::size_t r = 0; r < chosen.size() && ok; ++r) {
        ok = compatible(candidates[c], candidates[chosen[r]]) &&
             compatible(candidates[chosen[r]], candidates[c]);
      }
      if (ok) {
        chosen.push_back(c);
        self(self);
        chosen.pop_back();
      }
    }
  };
  rec(rec);
  return out;
}

}  // namespace detail

/// Every map assembled from blockwise tuples passing
/// check_product_decomposition,
/// built without searching the product. Limited to small orders.
inline std::vector<Permutation> product_automorphisms_from_tuples(
    const FiniteQuandle& q, const FiniteQuandle& k, const TupleSearchLimits& limits = {}) {
  const std::size_t order = q.order() * k.order();
  if (order > limits.max_order) {
    throw CapExceeded("product order", limits.max_order, order);
  }
  if (std::max(q.order(), k.order()) > limits.max_factor_order) {
    throw CapExceeded("factor order", limits.max_factor_order, std::max(q.order(), k.order()));
  }
  ProductAutDecomposition d;
  d.left_components = quandle_components(q);
  d.right_components = quandle_components(k);
  const std::size_t kq = d.left_components.size();
  const std::size_t mk = d.right_components.size();
  std::size_t budget = 0;
  const auto f_cands =
      detail::blockwise_endomorphisms(q, d.left_components, budget, limits.max_nodes);
  const auto g_cands =
      detail::blockwise_endomorphisms(k, d.right_components, budget, limits.max_nodes);
  const auto f_tuples = detail::compatible_tuples(q, f_cands, mk, budget, limits.max_nodes);
  const auto g_tuples = detail::compatible_tuples(k, g_cands, kq, budget, limits.max_nodes);

  std::vector<Permutation> out;
  for (const auto& ft : f_tuples) {
    d.f.clear();
    for (std::size_t c : ft) {
      d.f.push_back(f_cands[c]);
    }
    for (const auto& gt : g_tuples) {
      if (++budget > limits.max_nodes) {
        throw CapExceeded("tuple search nodes", limits.max_nodes, budget);
      }
      d.g.clear();
      for (std::size_t c : gt) {
        d.g.push_back(g_cands[c]);
      }
      // rho is whatever the blocks dictate; the check rejects non-bijective rho.
      d.rho.assign(kq * mk, {0, 0});
      for (std::size_t j = 0; j < kq; ++j) {
        for (std::size_t i = 0; i < mk; ++i) {
          const Element x = d.left_components.blocks[j].front();
          const Element a = d.right_components.blocks[i].front();
          d.rho[j * mk + i] = {d.left_components.block_of[d.f[i][x]],
                               d.right_components.block_of[d.g[j][a]]};
        }
      }
      if (!check_product_decomposition(q, k, d).passed()) {
        continue;
      }
      auto assembled = assemble_product_map(q, k, d);
      if (!is_permutation(assembled)) {
        throw ConsistencyError("tuple satisfying the blockwise conditions is not bijective");
      }
      out.push_back(Permutation::unchecked(std::move(assembled)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace bq

#endif  // BQ_PRODUCTS_HPP
