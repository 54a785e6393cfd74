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
 * Exhaustive enumeration.
 *
 * `enumerate_structures` lists every biquandle structure on a quandle by
 * backtracking over Aut(Q)^n. `enumerate_biquandles_bruteforce` ignores all
 * theory and tests every pair of tables whose columns are permutations.
 * `census_crosscheck` compares the two: each raw biquandle must come from a
 * structure on its underlying quandle, and each structure must realize to a
 * raw biquandle.
 */

#ifndef BQ_ENUMERATION_HPP
#define BQ_ENUMERATION_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "morphisms.hpp"
#include "permutation.hpp"
#include "structures.hpp"
#include "tables.hpp"

namespace bq {

struct EnumerationCaps {
  std::size_t max_order = 6;
  std::size_t max_aut_order = 24;
};

struct StructureCensus {
  FiniteQuandle base;
  /// Every structure on `base`, in lexicographic order of the beta families.
  std::vector<BiquandleStructure> all;
  /// Isomorphism classes as sorted indices into `all`, ordered by least index.
  std::vector<std::vector<std::size_t>> classes;
  /// Least member of each class.
  std::vector<std::size_t> representatives;
};

namespace detail {

class StructureSearch {
 public:
  StructureSearch(const FiniteQuandle& q, const std::vector<Permutation>& aut)
      : q_(q), aut_(aut), n_(static_cast<Element>(q.order())) {
    chosen_.assign(n_, aut_.size());
    diag_used_.assign(n_, false);
  }

  std::vector<BiquandleStructure> run() {
    descend(0);
    return std::move(out_);
  }

 private:
  const Permutation& beta(Element y) const { return aut_[chosen_[y]]; }
  bool assigned(Element y) const { return chosen_[y] != aut_.size(); }

  // Coherence for every pair whose four betas are known.
  bool coherent() const {
    for (Element x = 0; x < n_; ++x) {
      if (!assigned(x)) {
        continue;
      }
      for (Element y = 0; y < n_; ++y) {
        if (!assigned(y)) {
          continue;
        }
        const Element l = beta(y)(q_(x, y));
        const Element r = beta(x)(y);
        if (!assigned(l) || !assigned(r)) {
          continue;
        }
        for (Element a = 0; a < n_; ++a) {
          if (beta(l)(beta(y)(a)) != beta(r)(beta(x)(a))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void descend(Element y) {
    if (y == n_) {
      std::vector<Permutation> betas;
      betas.reserve(n_);
      for (Element i = 0; i < n_; ++i) {
        betas.push_back(beta(i));
      }
      if (!is_structure(q_, betas)) {
        throw ConsistencyError("structure search produced an invalid family");
      }
      out_.emplace_back(q_, std::move(betas), unchecked);
      return;
    }
    for (std::size_t c = 0; c < aut_.size(); ++c) {
      const Element d = aut_[c](y);
      if (diag_used_[d]) {
        continue;
      }
      chosen_[y] = c;
      diag_used_[d] = true;
      if (coherent()) {
        descend(y + 1);
      }
      diag_used_[d] = false;
      chosen_[y] = aut_.size();
    }
  }

  const FiniteQuandle& q_;
  const std::vector<Permutation>& aut_;
  Element n_;
  std::vector<std::size_t> chosen_;
  std::vector<bool> diag_used_;
  std::vector<BiquandleStructure> out_;
};

}  // namespace detail

/// All biquandle structures on `q`, classified up to isomorphism.
inline StructureCensus enumerate_structures(const FiniteQuandle& q,
                                            const EnumerationCaps& caps = {}) {
  if (q.order() > caps.max_order) {
    throw CapExceeded("quandle order", caps.max_order, q.order());
  }
  const auto aut = quandle_aut_group(q);
  if (aut.order() > caps.max_aut_order) {
    throw CapExceeded("automorphism group order", caps.max_aut_order, aut.order());
  }
  StructureCensus census{q, detail::StructureSearch(q, aut.elements()).run(), {}, {}};
  for (std::size_t i = 0; i < census.all.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < census.classes.size() && !placed; ++c) {
      if (structures_isomorphic(census.all[census.representatives[c]], census.all[i]).found) {
        census.classes[c].push_back(i);
        placed = true;
      }
    }
    if (!placed) {
      census.classes.push_back({i});
      census.representatives.push_back(i);
    }
  }
  return census;
}

struct BiquandleCensus {
  std::size_t order = 0;
  /// Sorted by (under, over) tables.
  std::vector<FiniteBiquandle> all;

  std::size_t count() const noexcept { return all.size(); }
};

namespace detail {

inline std::vector<std::vector<Element>> all_permutation_images(std::size_t n) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Calls visit(table) for every table whose columns are permutations.
template <class Visit>
void for_each_column_permutation_table(std::size_t n, Visit&& visit) {
  const auto perms = all_permutation_images(n);
  std::vector<std::size_t> pick(n, 0);
  std::vector<Element> entries(n * n);
  while (true) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        entries[x * n + y] = perms[pick[y]][x];
      }
    }
    visit(entries);
    std::size_t i = 0;
    while (i < n && ++pick[i] == perms.size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == n) {
      return;
    }
  }
}

inline std::size_t column_permutation_tables(std::size_t n) {
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    fact *= i;
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= fact;
  }
  return total;
}

}  // namespace detail

/// Every quandle table of order n, by testing all tables with permutation
/// columns.
inline std::vector<FiniteQuandle> enumerate_quandles_bruteforce(std::size_t n,
                                                               std::size_t max_order = 3) {
  if (n == 0) {
    throw InputError("order must be positive");
  }
  if (n > max_order) {
    throw CapExceeded("brute-force order", max_order, n);
  }
  std::vector<FiniteQuandle> out;
  detail::for_each_column_permutation_table(n, [&](const std::vector<Element>& entries) {
    OperationTable t(n, entries);
    if (is_quandle(t)) {
      out.emplace_back(std::move(t), unchecked);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Every biquandle of order n, by testing all pairs of tables with
/// permutation columns: (n!)^n * (n!)^n candidates.
inline BiquandleCensus enumerate_biquandles_bruteforce(std::size_t n, std::size_t max_order = 3) {
  if (n == 0) {
    throw InputError("order must be positive");
  }
  if (n > max_order) {
    throw CapExceeded("brute-force order", max_order, n);
  }
  std::vector<OperationTable> columns;
  detail::for_each_column_permutation_table(
      n, [&](const std::vector<Element>& entries) { columns.emplace_back(n, entries); });
  BiquandleCensus census;
  census.order = n;
  for (const auto& under : columns) {
    for (const auto& over : columns) {
      bool diagonal = true;
      for (Element x = 0; x < n && diagonal; ++x) {
        diagonal = under(x, x) == over(x, x);
      }
      if (diagonal && is_biquandle(under, over)) {
        census.all.emplace_back(under, over, unchecked);
      }
    }
  }
  std::sort(census.all.begin(), census.all.end());
  census.all.erase(std::unique(census.all.begin(), census.all.end()), census.all.end());
  return census;
}

struct CrosscheckReport {
  std::size_t order = 0;
  std::size_t census_count = 0;
  std::size_t roundtrip_ok = 0;
  std::size_t quandle_count = 0;
  std::size_t structure_count = 0;
  bool bijection = false;
  std::vector<std::string> failures;

  bool passed() const noexcept {
    return failures.empty() && bijection && roundtrip_ok == census_count;
  }
};

namespace detail {

inline std::string describe(const FiniteBiquandle& b) {
  std::string s = "under [";
  s += Permutation::join(b.under_table().entries());
  s += "] over [";
  s += Permutation::join(b.over_table().entries());
  s += "]";
  return s;
}

}  // namespace detail

/// Round trips every raw census member through its structure, then checks
/// that, quandle by quandle, realized structures and raw members coincide.
inline CrosscheckReport census_crosscheck(std::size_t n, std::size_t max_order = 3) {
  CrosscheckReport report;
  report.order = n;
  const auto census = enumerate_biquandles_bruteforce(n, max_order);
  report.census_count = census.count();

  std::map<FiniteQuandle, std::vector<FiniteBiquandle>> by_quandle;
  for (const auto& b : census.all) {
    try {
      const auto s = extract_structure(b);
      if (realize(s) == b) {
        ++report.roundtrip_ok;
      } else {
        report.failures.push_back("round trip changes " + detail::describe(b));
      }
      by_quandle[s.base()].push_back(b);
    } catch (const ConsistencyError& e) {
      report.failures.push_back(std::string(e.what()) + " for " + detail::describe(b));
    }
  }

  const auto quandles = enumerate_quandles_bruteforce(n, max_order);
  report.quandle_count = quandles.size();
  EnumerationCaps caps;
  caps.max_order = std::max(caps.max_order, n);
  std::size_t matched = 0;
  for (const auto& q : quandles) {
    const auto structures = enumerate_structures(q, caps);
    report.structure_count += structures.all.size();
    std::vector<FiniteBiquandle> realized;
    for (const auto& s : structures.all) {
      realized.push_back(realize(s, {.validate = false}));
    }
    std::sort(realized.begin(), realized.end());
    const auto it = by_quandle.find(q);
    const std::vector<FiniteBiquandle> none;
    const auto& members = it == by_quandle.end() ? none : it->second;
    if (realized != members) {
      for (const auto& b : realized) {
        if (!std::binary_search(members.begin(), members.end(), b)) {
          report.failures.push_back("structure realizes to a biquandle missing from the census: " +
                                    detail::describe(b));
        }
      }
      for (const auto& b : members) {
        if (!std::binary_search(realized.begin(), realized.end(), b)) {
          report.failures.push_back("census member has no structure: " + detail::describe(b));
        }
      }
    } else {
      matched += members.size();
    }
  }
  for (const auto& [q, members] : by_quandle) {
    if (!std::binary_search(quandles.begin(), quandles.end(), q)) {
      report.failures.push_back("underlying quandle missing from the quandle census");
    }
  }
  report.bijection = report.failures.empty() && matched == census.count() &&
                     report.structure_count == census.count();
  return report;
}

}  // namespace bq

#endif  // BQ_ENUMERATION_HPP
