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
 * Finite permutation groups held as explicit, sorted element sets.
 */

#ifndef BQ_PERM_GROUP_HPP
#define BQ_PERM_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"

namespace bq {

class PermGroup {
 public:
  /// Validates identity membership, inverse closure and product closure.
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements) {
    PermGroup g(degree, std::move(elements));
    if (auto problem = g.closure_problem()) {
      throw InputError("not a permutation group: " + *problem);
    }
    return g;
  }

  /// For sets known to be closed, such as automorphism sets; only identity
  /// membership is checked.
  static PermGroup from_closed_elements(std::size_t degree, std::vector<Permutation> elements) {
    PermGroup g(degree, std::move(elements));
    if (!g.contains(Permutation::identity(degree))) {
      throw InputError("not a permutation group: identity missing");
    }
    return g;
  }

  /// Closure of `generators` under composition; generators are recorded.
  static PermGroup generated_by(std::size_t degree, std::vector<Permutation> generators) {
    for (const auto& p : generators) {
      if (p.degree() != degree) {
        throw InputError("generator degree does not match group degree");
      }
    }
    std::vector<Permutation> elements{Permutation::identity(degree)};
    std::vector<Permutation> frontier = elements;
    std::vector<Permutation> seen = elements;
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& g : frontier) {
        for (const auto& s : generators) {
          auto h = s * g;
          auto it = std::lower_bound(seen.begin(), seen.end(), h);
          if (it == seen.end() || *it != h) {
            seen.insert(it, h);
            next.push_back(std::move(h));
          }
        }
      }
      frontier = std::move(next);
    }
    PermGroup g(degree, std::move(seen));
    g.generators_ = std::move(generators);
    return g;
  }

  static PermGroup trivial(std::size_t degree) {
    return PermGroup(degree, {Permutation::identity(degree)});
  }

  static PermGroup symmetric(std::size_t degree) {
    std::vector<Permutation> all;
    std::vector<Element> images(degree);
    std::iota(images.begin(), images.end(), Element{0});
    do {
      all.push_back(Permutation::unchecked(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return PermGroup(degree, std::move(all));
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }

  /// Elements in lexicographic order of their image vectors.
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::optional<std::vector<Permutation>>& generators() const noexcept {
    return generators_;
  }

  bool contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
  }

  /// Position of `p` in elements(), or order() when absent.
  std::size_t index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) {
      return elements_.size();
    }
    return static_cast<std::size_t>(it - elements_.begin());
  }

  bool is_abelian() const {
    for (const auto& a : elements_) {
      for (const auto& b : elements_) {
        if (a * b != b * a) {
          return false;
        }
      }
    }
    return true;
  }

  /// Description of the first failed group invariant, if any.
  std::optional<std::string> closure_problem() const {
    if (!contains(Permutation::identity(degree_))) {
      return "identity missing";
    }
    for (const auto& a : elements_) {
      if (!contains(a.inverse())) {
        return "inverse of [" + to_string(a) + "] missing";
      }
      for (const auto& b : elements_) {
        if (!contains(a * b)) {
          return "product [" + to_string(a) + "]*[" + to_string(b) + "] missing";
        }
      }
    }
    if (generators_ && generated_by(degree_, *generators_).elements_ != elements_) {
      return "generators do not generate the element set";
    }
    return std::nullopt;
  }

  /// Element-set equality; generator lists are ignored.
  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  PermGroup(std::size_t degree, std::vector<Permutation> elements)
      : degree_(degree), elements_(std::move(elements)) {
    for (const auto& p : elements_) {
      if (p.degree() != degree_) {
        throw InputError("element degree does not match group degree");
      }
    }
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::optional<std::vector<Permutation>> generators_;
};

/// Greedy generating set: scan elements in order, keep each one that is not
/// already in the subgroup generated so far.
inline std::vector<Permutation> greedy_generators(const PermGroup& g) {
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::trivial(g.degree());
  for (const auto& p : g.elements()) {
    if (!current.contains(p)) {
      gens.push_back(p);
      current = PermGroup::generated_by(g.degree(), gens);
      if (current.order() == g.order()) {
        break;
      }
    }
  }
  return gens;
}

}  // namespace bq

#endif  // BQ_PERM_GROUP_HPP
