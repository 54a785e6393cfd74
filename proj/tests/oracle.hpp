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
 * Independent brute-force oracles for the test suites. Everything here works
 * on plain row-major integer tables and shares no code with the library
 * beyond the conversion helpers at the bottom.
 */

#ifndef BQ_TESTS_ORACLE_HPP
#define BQ_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "bq/bq.hpp"

namespace oracle {

using Table = std::vector<int>;  // row-major, n*n
using Map = std::vector<int>;

inline int at(const Table& t, int n, int x, int y) { return t[x * n + y]; }

inline int order_of(const Table& t) {
  int n = 0;
  while (n * n < static_cast<int>(t.size())) {
    ++n;
  }
  return n;
}

inline bool columns_bijective(const Table& t, int n) {
  for (int y = 0; y < n; ++y) {
    std::vector<bool> seen(n, false);
    for (int x = 0; x < n; ++x) {
      if (seen[at(t, n, x, y)]) {
        return false;
      }
      seen[at(t, n, x, y)] = true;
    }
  }
  return true;
}

inline bool quandle(const Table& t) {
  const int n = order_of(t);
  for (int x = 0; x < n; ++x) {
    if (at(t, n, x, x) != x) {
      return false;
    }
  }
  if (!columns_bijective(t, n)) {
    return false;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (at(t, n, at(t, n, x, y), z) != at(t, n, at(t, n, x, z), at(t, n, y, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

/// u = under, o = over, written directly from the axiom list.
inline bool biquandle(const Table& u, const Table& o) {
  const int n = order_of(u);
  for (int x = 0; x < n; ++x) {
    if (at(u, n, x, x) != at(o, n, x, x)) {
      return false;
    }
  }
  if (!columns_bijective(u, n) || !columns_bijective(o, n)) {
    return false;
  }
  std::set<std::pair<int, int>> images;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      images.insert({at(o, n, y, x), at(u, n, x, y)});
    }
  }
  if (static_cast<int>(images.size()) != n * n) {
    return false;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        auto U = [&](int a, int b) { return at(u, n, a, b); };
        auto O = [&](int a, int b) { return at(o, n, a, b); };
        if (U(U(x, y), U(z, y)) != U(U(x, z), O(y, z))) {
          return false;
        }
        if (O(U(x, y), U(z, y)) != U(O(x, z), O(y, z))) {
          return false;
        }
        if (O(O(x, y), O(z, y)) != O(O(x, z), U(y, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

inline std::vector<Map> all_permutations(int n) {
  std::vector<Map> out;
  Map p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool preserves(const Table& src, int n, const Table& dst, int m, const Map& f) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (f[at(src, n, x, y)] != at(dst, m, f[x], f[y])) {
        return false;
      }
    }
  }
  return true;
}

/// Every bijection preserving all the given tables (each an automorphism
/// condition on the same set), by testing all n! permutations.
inline std::vector<Map> automorphisms(const std::vector<Table>& tables) {
  const int n = order_of(tables.front());
  std::vector<Map> out;
  for (const auto& p : all_permutations(n)) {
    bool ok = true;
    for (const auto& t : tables) {
      ok = ok && preserves(t, n, t, n, p);
    }
    if (ok) {
      out.push_back(p);
    }
  }
  return out;
}

/// Every map (not necessarily bijective) from an n-set to an m-set
/// preserving the paired tables.
inline std::vector<Map> homomorphisms(const std::vector<std::pair<Table, Table>>& pairs) {
  const int n = order_of(pairs.front().first);
  const int m = order_of(pairs.front().second);
  std::vector<Map> out;
  Map f(n, 0);
  while (true) {
    bool ok = true;
    for (const auto& [s, d] : pairs) {
      ok = ok && preserves(s, n, d, m, f);
    }
    if (ok) {
      out.push_back(f);
    }
    int i = n - 1;
    while (i >= 0 && ++f[i] == m) {
      f[i] = 0;
      --i;
    }
    if (i < 0) {
      return out;
    }
  }
}

inline Map compose(const Map& f, const Map& g) {
  Map out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[i] = f[g[i]];
  }
  return out;
}

inline Map invert(const Map& f) {
  Map out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[f[i]] = static_cast<int>(i);
  }
  return out;
}

/// Sizes of the conjugacy classes of the group `elems`, sorted.
inline std::vector<std::size_t> conjugacy_class_sizes(const std::vector<Map>& elems) {
  std::set<Map> done;
  std::vector<std::size_t> sizes;
  for (const auto& a : elems) {
    if (done.count(a)) {
      continue;
    }
    std::set<Map> cls;
    for (const auto& h : elems) {
      cls.insert(compose(compose(h, a), invert(h)));
    }
    done.insert(cls.begin(), cls.end());
    sizes.push_back(cls.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline std::vector<Map> centralizer(const std::vector<Map>& elems, const Map& f) {
  std::vector<Map> out;
  for (const auto& h : elems) {
    if (compose(h, f) == compose(f, h)) {
      out.push_back(h);
    }
  }
  return out;
}

/// Exhaustive census: all pairs of tables with permutation columns that
/// satisfy the biquandle axioms, as (under, over) pairs in sorted order.
inline std::vector<std::pair<Table, Table>> biquandle_census(int n) {
  std::vector<Table> tables;
  const auto perms = all_permutations(n);
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    Table t(n * n);
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        t[x * n + y] = perms[pick[y]][x];
      }
    }
    tables.push_back(t);
    int i = 0;
    while (i < n && ++pick[i] == perms.size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == n) {
      break;
    }
  }
  std::vector<std::pair<Table, Table>> out;
  for (const auto& u : tables) {
    for (const auto& o : tables) {
      if (biquandle(u, o)) {
        out.emplace_back(u, o);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Conversions.

inline Table table(const bq::OperationTable& t) {
  return Table(t.entries().begin(), t.entries().end());
}

inline Map map(const bq::Permutation& p) { return Map(p.images().begin(), p.images().end()); }

inline std::set<Map> map_set(const bq::PermGroup& g) {
  std::set<Map> out;
  for (const auto& p : g.elements()) {
    out.insert(map(p));
  }
  return out;
}

inline std::set<Map> map_set(const std::vector<Map>& v) { return {v.begin(), v.end()}; }

}  // namespace oracle

#endif  // BQ_TESTS_ORACLE_HPP
