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
 * Acceptance suite: one PASS/FAIL line per criterion. Expected values come
 * from the brute-force oracles in oracle.hpp, never from the code under test.
 */

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bq/bq.hpp"
#include "oracle.hpp"

using namespace bq;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

std::vector<Element> units(std::size_t n) {
  std::vector<Element> out;
  for (Element a = 1; a < n; ++a) {
    if (is_unit_mod(a, n)) {
      out.push_back(a);
    }
  }
  return out;
}

bool quandle_ok(const FiniteQuandle& q) {
  return verify_quandle(q.table()).passed() && oracle::quandle(oracle::table(q.table()));
}

bool biquandle_ok(const FiniteBiquandle& b) {
  return verify_biquandle(b.under_table(), b.over_table()).passed() &&
         oracle::biquandle(oracle::table(b.under_table()), oracle::table(b.over_table()));
}

Outcome axiom_suite() {
  Outcome o;
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    o.require(quandle_ok(dihedral_quandle(n)), "dihedral_quandle(" + std::to_string(n) + ")");
    ++count;
  }
  for (Element t = 1; t <= 4; ++t) {
    o.require(quandle_ok(alexander_quandle(5, t)), "alexander_quandle(5," + std::to_string(t) + ")");
    ++count;
  }
  const std::vector<std::pair<std::string, FiniteGroup>> groups = {
      {"Z2", cyclic_group(2)}, {"Z3", cyclic_group(3)}, {"S3", symmetric_group(3)}};
  for (const auto& [name, g] : groups) {
    o.require(quandle_ok(conjugation_quandle(g)), "conjugation_quandle(" + name + ")");
    o.require(quandle_ok(core_quandle(g)), "core_quandle(" + name + ")");
    o.require(biquandle_ok(wada_biquandle(g)), "wada_biquandle(" + name + ")");
    count += 3;
  }
  for (std::size_t n : {3u, 5u, 7u}) {
    for (Element s : units(n)) {
      o.require(biquandle_ok(dihedral_biquandle(n, s)),
                "dihedral_biquandle(" + std::to_string(n) + "," + std::to_string(s) + ")");
      ++count;
    }
  }
  for (Element t : units(5)) {
    for (Element s : units(5)) {
      o.require(biquandle_ok(alexander_biquandle(5, t, s)),
                "alexander_biquandle(5," + std::to_string(t) + "," + std::to_string(s) + ")");
      ++count;
    }
  }
  if (o.passed) {
    o.detail = std::to_string(count) + " family members";
  }
  return o;
}

Outcome round_trips() {
  Outcome o;
  std::vector<FiniteQuandle> bases;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& q : enumerate_quandles_bruteforce(n)) {
      bases.push_back(q);
    }
  }
  bases.push_back(dihedral_quandle(4));
  bases.push_back(dihedral_quandle(5));
  bases.push_back(trivial_quandle(4));
  std::size_t structures = 0;
  for (const auto& q : bases) {
    for (const auto& s : enumerate_structures(q).all) {
      o.require(extract_structure(realize(s)) == s, "extract(realize(S)) != S");
      ++structures;
    }
  }
  std::size_t members = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& b : enumerate_biquandles_bruteforce(n).all) {
      o.require(realize(extract_structure(b)) == b, "realize(extract(B)) != B");
      ++members;
    }
  }
  if (o.passed) {
    o.detail = std::to_string(structures) + " structures, " + std::to_string(members) +
               " census members";
  }
  return o;
}

Outcome census_counts() {
  Outcome o;
  const auto c1 = enumerate_biquandles_bruteforce(1).count();
  const auto c2 = enumerate_biquandles_bruteforce(2).count();
  o.require(c1 == oracle::biquandle_census(1).size() && c1 == 1, "order-1 count");
  o.require(c2 == oracle::biquandle_census(2).size() && c2 == 2, "order-2 count");
  std::ostringstream d;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto r = census_crosscheck(n);
    o.require(r.passed(), "crosscheck at order " + std::to_string(n));
    d << (n > 1 ? "; " : "") << "n=" << n << ": census=" << r.census_count
      << ", roundtrip=" << r.roundtrip_ok << '/' << r.census_count;
  }
  if (o.passed) {
    o.detail = d.str();
  }
  return o;
}

Outcome constant_classes() {
  Outcome o;
  std::ostringstream d;
  const std::vector<std::pair<std::string, FiniteQuandle>> qs = {
      {"T2", trivial_quandle(2)},
      {"T3", trivial_quandle(3)},
      {"R3", dihedral_quandle(3)},
      {"R5", dihedral_quandle(5)}};
  for (const auto& [name, q] : qs) {
    const auto expected =
        oracle::conjugacy_class_sizes(oracle::automorphisms({oracle::table(q.table())})).size();
    const auto got = classify_constant_structures(q).size();
    o.require(got == expected, name + ": " + std::to_string(got) + " vs " + std::to_string(expected));
    d << (d.tellp() > 0 ? " " : "") << name << "=" << got;
  }
  o.require(classify_constant_structures(trivial_quandle(2)).size() == 2, "T2 anchor");
  o.require(classify_constant_structures(trivial_quandle(3)).size() == 3, "T3 anchor");
  o.require(classify_constant_structures(dihedral_quandle(3)).size() == 3, "R3 anchor");
  if (o.passed) {
    o.detail = d.str();
  }
  return o;
}

Outcome centralizer_formula() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t n : {3u, 5u}) {
    const auto q = dihedral_quandle(n);
    const auto aut = quandle_aut_group(q);
    const auto aut_maps = oracle::automorphisms({oracle::table(q.table())});
    for (const auto& f : aut.elements()) {
      const auto b = realize(constant_structure(q, f));
      const auto got = biquandle_aut_group(b);
      o.require(got == centralizer(aut, f), "Aut(B) != C(f) for f = [" + to_string(f) + "]");
      o.require(oracle::map_set(got) == oracle::map_set(oracle::centralizer(aut_maps, oracle::map(f))),
                "oracle centralizer mismatch for f = [" + to_string(f) + "]");
      ++checked;
    }
  }
  if (o.passed) {
    o.detail = std::to_string(checked) + " automorphisms";
  }
  return o;
}

Outcome dihedral_biquandle_auts() {
  Outcome o;
  std::ostringstream d;
  for (const auto& [n, s] : std::vector<std::pair<std::size_t, Element>>{
           {5, 2}, {5, 3}, {7, 2}, {7, 4}}) {
    const auto b = dihedral_biquandle(n, s);
    const auto searched = biquandle_aut_group(b);
    const auto closed = dihedral_biquandle_aut(n, s);
    const auto brute = oracle::automorphisms(
        {oracle::table(b.under_table()), oracle::table(b.over_table())});
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(s) + ")";
    o.require(searched == closed, tag + " search vs centralizer");
    o.require(oracle::map_set(searched) == oracle::map_set(brute), tag + " search vs brute force");
    d << (d.tellp() > 0 ? " " : "") << tag << "=" << searched.order();
  }
  o.require(biquandle_aut_group(dihedral_biquandle(5, 2)).order() == 4, "order at (5,2)");
  if (o.passed) {
    o.detail = d.str();
  }
  return o;
}

Outcome normalizer_bound() {
  Outcome o;
  std::size_t checked = 0;
  std::size_t strict = 0;
  for (const auto& q : {dihedral_quandle(3), trivial_quandle(3)}) {
    const auto aut_q = quandle_aut_group(q);
    for (const auto& s : enumerate_structures(q).all) {
      const auto aut_b = biquandle_aut_group(realize(s));
      const auto norm = setwise_normalizer(aut_q, s.betas());
      for (const auto& f : aut_b.elements()) {
        o.require(norm.contains(f), "automorphism outside the normalizer");
      }
      strict += aut_b.order() < norm.order() ? 1 : 0;
      ++checked;
    }
  }
  if (o.passed) {
    o.detail = std::to_string(checked) + " structures, " + std::to_string(strict) +
               " with proper containment";
  }
  return o;
}

Outcome connected_product() {
  Outcome o;
  const auto r3 = dihedral_quandle(3);
  const auto p = product_biquandle(r3, r3);
  const auto searched = biquandle_aut_group_direct(p.biquandle());
  const auto aut = quandle_aut_group(r3);
  std::set<Permutation> images;
  for (const auto& f : aut.elements()) {
    for (const auto& g : aut.elements()) {
      const auto fg = product_map(f, g);
      o.require(searched.contains(fg), "f x g not an automorphism");
      images.insert(fg);
    }
  }
  o.require(images.size() == aut.order() * aut.order(), "f x g not injective");
  o.require(images.size() == searched.order(), "f x g not onto");
  const auto brute = oracle::automorphisms(
      {oracle::table(p.biquandle().under_table()), oracle::table(p.biquandle().over_table())});
  o.require(brute.size() == 36, "oracle order " + std::to_string(brute.size()));
  o.require(searched.order() == 36, "order " + std::to_string(searched.order()));
  o.require(product_aut_group(r3, r3).group == searched, "factor construction differs");
  if (o.passed) {
    o.detail = "|Aut| = " + std::to_string(searched.order());
  }
  return o;
}

Outcome product_decomposition() {
  Outcome o;
  const auto r4 = dihedral_quandle(4);
  const auto r3 = dihedral_quandle(3);
  const auto p = product_biquandle(r4, r3);
  const auto comps = biquandle_components(p.biquandle());
  o.require(comps.size() == 2 && comps.blocks[0].size() == 6 && comps.blocks[1].size() == 6,
            "component partition");
  const auto group = biquandle_aut_group_direct(p.biquandle());
  for (const auto& f : group.elements()) {
    try {
      const auto d = decompose_product_aut(r4, r3, f.images());
      o.require(check_product_decomposition(r4, r3, d).passed(), "conditions fail");
      o.require(assemble_product_map(r4, r3, d) == f.vector(), "reassembly differs");
    } catch (const std::exception& e) {
      o.require(false, e.what());
    }
  }
  o.require(product_automorphisms_from_tuples(r4, r3) == group.elements(),
            "tuple construction differs from search");
  if (o.passed) {
    o.detail = std::to_string(group.order()) + " automorphisms, 2 blocks of size 6";
  }
  return o;
}

Outcome functoriality() {
  Outcome o;
  std::vector<FiniteBiquandle> members;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& b : enumerate_biquandles_bruteforce(n).all) {
      members.push_back(b);
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, std::vector<oracle::Map>> cache;
  auto homs = [&](std::size_t a, std::size_t b) -> const std::vector<oracle::Map>& {
    auto it = cache.find({a, b});
    if (it == cache.end()) {
      const auto& x = members[a];
      const auto& y = members[b];
      it = cache
               .emplace(std::make_pair(a, b),
                        oracle::homomorphisms(
                            {{oracle::table(x.under_table()), oracle::table(y.under_table())},
                             {oracle::table(x.over_table()), oracle::table(y.over_table())}}))
               .first;
    }
    return it->second;
  };
  auto induced_ok = [&](std::size_t a, std::size_t b, const oracle::Map& f) {
    const auto qa = underlying_quandle(members[a]);
    const auto qb = underlying_quandle(members[b]);
    const std::vector<Element> fe(f.begin(), f.end());
    return is_quandle_hom(qa, qb, fe) &&
           oracle::preserves(oracle::table(qa.table()), static_cast<int>(qa.order()),
                             oracle::table(qb.table()), static_cast<int>(qb.order()), f);
  };

  std::mt19937 rng(12345);
  std::size_t cases = 0;
  std::size_t identities = 0;
  std::size_t compositions = 0;
  while (cases < 100) {
    const std::size_t a = rng() % members.size();
    if (cases % 5 == 0) {
      oracle::Map id(members[a].order());
      std::iota(id.begin(), id.end(), 0);
      o.require(induced_ok(a, a, id), "identity does not induce a quandle homomorphism");
      ++identities;
      ++cases;
      continue;
    }
    const std::size_t b = rng() % members.size();
    const std::size_t c = rng() % members.size();
    const auto& hab = homs(a, b);
    const auto& hbc = homs(b, c);
    if (hab.empty() || hbc.empty()) {
      continue;
    }
    const auto& f = hab[rng() % hab.size()];
    const auto& g = hbc[rng() % hbc.size()];
    const auto gf = oracle::compose(g, f);
    o.require(induced_ok(a, b, f) && induced_ok(b, c, g), "induced map is not a quandle hom");
    // The composite is a biquandle hom whose induced map is the composite of
    // the induced maps, and it is again a quandle hom.
    const auto& hac = homs(a, c);
    o.require(std::find(hac.begin(), hac.end(), gf) != hac.end(), "composite is not a hom");
    o.require(induced_ok(a, c, gf), "composite does not induce a quandle hom");
    ++compositions;
    ++cases;
  }
  if (o.passed) {
    o.detail = std::to_string(cases) + " homomorphisms (" + std::to_string(identities) +
               " identities, " + std::to_string(compositions) + " composites)";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit_seconds;  // 0 means no limit
  };
  const std::vector<Criterion> criteria = {
      {1, "axiom suite over the family grid", axiom_suite, 5.0},
      {2, "structure/biquandle round trips", round_trips, 30.0},
      {3, "census counts and crosscheck", census_counts, 0.0},
      {4, "constant-structure classes equal conjugacy classes", constant_classes, 0.0},
      {5, "constant-structure automorphisms are centralizers", centralizer_formula, 10.0},
      {6, "dihedral biquandle automorphisms", dihedral_biquandle_auts, 0.0},
      {7, "automorphisms lie in the beta normalizer", normalizer_bound, 0.0},
      {8, "connected product automorphisms", connected_product, 0.0},
      {9, "product automorphism decomposition", product_decomposition, 0.0},
      {10, "underlying-quandle functoriality", functoriality, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.passed = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
    }
    failures += o.passed ? 0 : 1;
    std::printf("criterion %2d: %s - %s [%s] (%.2f s)\n", c.id, o.passed ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
