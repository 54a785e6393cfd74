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


#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "bq/bq.hpp"
#include "oracle.hpp"

using namespace bq;

namespace {

std::vector<std::size_t> class_sizes(const StructureCensus& c) {
  std::vector<std::size_t> out;
  for (const auto& k : c.classes) {
    out.push_back(k.size());
  }
  return out;
}

}  // namespace

TEST_CASE("structures on small quandles", "[enumeration]") {
  const auto one = enumerate_structures(trivial_quandle(1));
  CHECK(one.all.size() == 1);

  const auto t2 = enumerate_structures(trivial_quandle(2));
  REQUIRE(t2.all.size() == 2);
  CHECK(t2.all[0] == constant_structure(trivial_quandle(2), Permutation::identity(2)));
  CHECK(t2.all[1] == constant_structure(trivial_quandle(2), Permutation({1, 0})));
  CHECK(t2.classes.size() == 2);

  const auto t3 = enumerate_structures(trivial_quandle(3));
  CHECK(t3.all.size() == 12);
  CHECK(class_sizes(t3) == std::vector<std::size_t>{1, 3, 3, 3, 2});

  const auto r3 = enumerate_structures(dihedral_quandle(3));
  CHECK(r3.all.size() == 12);
  CHECK(class_sizes(r3) == std::vector<std::size_t>{1, 3, 3, 1, 2, 2});
}

TEST_CASE("structure census output is sorted and valid", "[enumeration]") {
  for (const auto& q : {trivial_quandle(3), dihedral_quandle(3), dihedral_quandle(4),
                        dihedral_quandle(5)}) {
    const auto c = enumerate_structures(q);
    CHECK(std::is_sorted(c.all.begin(), c.all.end()));
    CHECK(std::adjacent_find(c.all.begin(), c.all.end()) == c.all.end());
    std::size_t members = 0;
    for (std::size_t k = 0; k < c.classes.size(); ++k) {
      CHECK(c.representatives[k] == c.classes[k].front());
      members += c.classes[k].size();
    }
    CHECK(members == c.all.size());
    for (const auto& s : c.all) {
      CHECK(verify_structure(q, s.betas()).passed());
      CHECK(extract_structure(realize(s)) == s);
    }
  }
}

TEST_CASE("structure census contains every constant class", "[enumeration]") {
  const auto q = dihedral_quandle(3);
  const auto c = enumerate_structures(q);
  const auto constants = classify_constant_structures(q);
  CHECK(constants.size() == conjugacy_classes(quandle_aut_group(q)).size());
  for (const auto& k : constants) {
    const auto s = constant_structure(q, k.representative);
    CHECK(std::binary_search(c.all.begin(), c.all.end(), s));
  }
}

TEST_CASE("structure enumeration matches a brute-force family search", "[enumeration]") {
  // Oracle: every n-tuple of automorphisms, filtered by the structure
  // conditions evaluated directly.
  for (const auto& q : {trivial_quandle(3), dihedral_quandle(3), dihedral_quandle(4)}) {
    const int n = static_cast<int>(q.order());
    const auto t = oracle::table(q.table());
    const auto aut = oracle::automorphisms({t});
    std::size_t count = 0;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      bool ok = true;
      std::set<int> diag;
      for (int y = 0; y < n; ++y) {
        diag.insert(aut[pick[y]][y]);
      }
      ok = static_cast<int>(diag.size()) == n;
      for (int x = 0; x < n && ok; ++x) {
        for (int y = 0; y < n && ok; ++y) {
          const auto& by = aut[pick[y]];
          const auto& bx = aut[pick[x]];
          const auto& l = aut[pick[by[oracle::at(t, n, x, y)]]];
          const auto& r = aut[pick[bx[y]]];
          ok = oracle::compose(l, by) == oracle::compose(r, bx);
        }
      }
      count += ok ? 1 : 0;
      int i = n - 1;
      while (i >= 0 && ++pick[i] == aut.size()) {
        pick[i] = 0;
        --i;
      }
      if (i < 0) {
        break;
      }
    }
    CHECK(enumerate_structures(q).all.size() == count);
  }
}

TEST_CASE("enumeration caps", "[enumeration]") {
  try {
    enumerate_structures(trivial_quandle(7));
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.bound() == "quandle order");
  }
  try {
    enumerate_structures(trivial_quandle(5));
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.bound() == "automorphism group order");
    CHECK(e.requested() == 120);
  }
  CHECK_THROWS_AS(enumerate_biquandles_bruteforce(4), CapExceeded);
  CHECK_THROWS_AS(enumerate_biquandles_bruteforce(0), InputError);
}

TEST_CASE("brute-force census counts", "[enumeration]") {
  CHECK(enumerate_biquandles_bruteforce(1).count() == 1);
  const auto c2 = enumerate_biquandles_bruteforce(2);
  REQUIRE(c2.count() == 2);
  const auto flip = OperationTable::from_rows({{1, 1}, {0, 0}});
  CHECK(c2.all[0].under_table() == trivial_quandle(2).table());
  CHECK(c2.all[1].under_table() == flip);
  CHECK(c2.all[1].over_table() == flip);

  for (std::size_t n = 1; n <= 3; ++n) {
    const auto c = enumerate_biquandles_bruteforce(n);
    const auto brute = oracle::biquandle_census(static_cast<int>(n));
    REQUIRE(c.count() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) {
      CHECK(oracle::table(c.all[i].under_table()) == brute[i].first);
      CHECK(oracle::table(c.all[i].over_table()) == brute[i].second);
    }
  }
}

TEST_CASE("order-3 census split by underlying quandle", "[enumeration]") {
  const auto c = enumerate_biquandles_bruteforce(3);
  CHECK(c.count() == 36);
  std::map<FiniteQuandle, std::size_t> by_quandle;
  for (const auto& b : c.all) {
    ++by_quandle[underlying_quandle(b)];
  }
  CHECK(by_quandle.size() == 5);
  CHECK(by_quandle[trivial_quandle(3)] == 12);
  CHECK(by_quandle[dihedral_quandle(3)] == 12);
  const auto quandles = enumerate_quandles_bruteforce(3);
  CHECK(quandles.size() == 5);
}

TEST_CASE("census crosscheck", "[enumeration]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto r = census_crosscheck(n);
    INFO("order " << n);
    CHECK(r.passed());
    CHECK(r.failures.empty());
    CHECK(r.roundtrip_ok == r.census_count);
    CHECK(r.structure_count == r.census_count);
  }
  const auto r2 = census_crosscheck(2);
  CHECK(r2.census_count == 2);
  CHECK(r2.quandle_count == 1);
  for (const auto& b : enumerate_biquandles_bruteforce(2).all) {
    const auto s = extract_structure(b);
    CHECK(s.base() == trivial_quandle(2));
    CHECK(s.beta(0) == s.beta(1));
  }
}

TEST_CASE("enumeration is deterministic", "[enumeration]") {
  CHECK(enumerate_biquandles_bruteforce(3).all == enumerate_biquandles_bruteforce(3).all);
  const auto a = enumerate_structures(dihedral_quandle(4));
  const auto b = enumerate_structures(dihedral_quandle(4));
  CHECK(a.all == b.all);
  CHECK(a.classes == b.classes);
}
