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

#include <vector>

#include "bq/bq.hpp"
#include "oracle.hpp"

using namespace bq;

namespace {

const Permutation kId2 = Permutation::identity(2);
const Permutation kSwap = Permutation({1, 0});

OperationTable constant_columns(std::size_t n, const Permutation& f) {
  return OperationTable::generate(n, [&](long long x, long long) { return f(Element(x)); });
}

}  // namespace

TEST_CASE("verify_structure examples", "[structures]") {
  const auto t2 = trivial_quandle(2);
  CHECK(verify_structure(t2, std::vector{kId2, kId2}).passed());

  const auto r = verify_structure(t2, std::vector{kId2, kSwap});
  REQUIRE_FALSE(r.passed());
  REQUIRE(r.has(axiom::kDiagonalBijection));
  for (const auto& v : r.violations()) {
    if (v.axiom == axiom::kDiagonalBijection) {
      CHECK(v.witness == std::vector<Element>{0, 1});
    }
  }

  const auto z3 = cyclic_group(3);
  const auto w = wada_structure(z3);
  CHECK(verify_structure(w.base(), w.betas()).passed());
  CHECK(verify_structure(core_quandle(symmetric_group(3)), wada_structure(symmetric_group(3)).betas())
            .passed());
}

TEST_CASE("verify_structure flags non-automorphisms and incoherent families", "[structures]") {
  const auto r3 = dihedral_quandle(3);
  // Transposition (0 1) fixing 2 is an automorphism of R_3; the 3-cycle
  // 0->1->2->0 is an automorphism too. Try a non-automorphism on R_4.
  const auto r4 = dihedral_quandle(4);
  const Permutation bad({1, 0, 2, 3});
  const std::vector<Permutation> fam(4, bad);
  CHECK(verify_structure(r4, fam).has(axiom::kBetaAutomorphism));
  CHECK_THROWS_AS(verify_structure(r3, std::vector{kId2, kId2}), InputError);
  CHECK_THROWS_AS(BiquandleStructure(r4, fam), AxiomError);
}

TEST_CASE("constant structures", "[structures]") {
  const auto r3 = dihedral_quandle(3);
  const auto id = constant_structure(r3, Permutation::identity(3));
  CHECK(id.betas() == std::vector<Permutation>(3, Permutation::identity(3)));

  const Permutation times2({0, 2, 1});
  CHECK(verify_structure(r3, constant_structure(r3, times2).betas()).passed());

  const Permutation cycle({1, 2, 0});
  const auto t3 = trivial_quandle(3);
  CHECK(verify_structure(t3, constant_structure(t3, cycle).betas()).passed());

  CHECK_THROWS_AS(constant_structure(dihedral_quandle(4), Permutation({1, 0, 2, 3})), InputError);
}

TEST_CASE("realize", "[structures]") {
  const auto s = constant_structure(trivial_quandle(2), kSwap);
  const auto b = realize(s);
  CHECK(b.under_table() == constant_columns(2, kSwap));
  CHECK(b.over_table() == constant_columns(2, kSwap));

  const auto r5 = dihedral_quandle(5);
  const auto b5 = realize(constant_structure(r5, Permutation::identity(5)));
  CHECK(b5.under_table() == r5.table());
  CHECK(b5.over_table() == constant_columns(5, Permutation::identity(5)));

  const auto z3 = cyclic_group(3);
  CHECK(realize(wada_structure(z3)) == wada_biquandle(z3));
  const auto s3 = symmetric_group(3);
  CHECK(realize(wada_structure(s3)) == wada_biquandle(s3));
}

TEST_CASE("extract_structure", "[structures]") {
  const auto s = extract_structure(wada_biquandle(cyclic_group(3)));
  CHECK(s.base().table() == dihedral_quandle(3).table());
  for (Element y = 0; y < 3; ++y) {
    for (Element a = 0; a < 3; ++a) {
      CHECK(s.beta(y)(a) == (a + 6 - 2 * y) % 3);
    }
  }

  const auto d = extract_structure(dihedral_biquandle(5, 2));
  for (Element y = 0; y < 5; ++y) {
    CHECK(d.beta(y) == Permutation({0, 2, 4, 1, 3}));
    for (Element x = 0; x < 5; ++x) {
      CHECK(d.base()(x, y) == (4 * y + 15 - 3 * x) % 5);
    }
  }

  for (const auto& st : {constant_structure(dihedral_quandle(3), Permutation({0, 2, 1})),
                         wada_structure(symmetric_group(3)),
                         constant_structure(trivial_quandle(3), Permutation({1, 2, 0}))}) {
    CHECK(extract_structure(realize(st)) == st);
  }
}

TEST_CASE("underlying_quandle", "[structures]") {
  const auto r4 = dihedral_quandle(4);
  CHECK(underlying_quandle(as_biquandle(r4)) == r4);

  const auto a = underlying_quandle(alexander_biquandle(5, 2, 3));
  for (Element x = 0; x < 5; ++x) {
    for (Element y = 0; y < 5; ++y) {
      CHECK(a(x, y) == (4 * x + 2 * y) % 5);
    }
  }

  const FiniteBiquandle flip(constant_columns(2, kSwap), constant_columns(2, kSwap));
  CHECK(underlying_quandle(flip) == trivial_quandle(2));
}

TEST_CASE("underlying quandle is functorial on census homomorphisms", "[structures][functor]") {
  // Every biquandle homomorphism between order-2 census members, found by
  // the oracle's exhaustive map search, induces a quandle homomorphism.
  const auto census = enumerate_biquandles_bruteforce(2);
  for (const auto& b1 : census.all) {
    for (const auto& b2 : census.all) {
      const auto homs = oracle::homomorphisms(
          {{oracle::table(b1.under_table()), oracle::table(b2.under_table())},
           {oracle::table(b1.over_table()), oracle::table(b2.over_table())}});
      const auto q1 = oracle::table(underlying_quandle(b1).table());
      const auto q2 = oracle::table(underlying_quandle(b2).table());
      for (const auto& f : homs) {
        CHECK(oracle::preserves(q1, 2, q2, 2, f));
      }
    }
  }
}
