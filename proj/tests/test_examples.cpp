#include "doctest.h"
#include "hopfkit/error.hpp"
#include "hopfkit/examples.hpp"

using namespace hopfkit;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("catalog covers every group of order at most eight") {
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    CHECK(g.order() >= 1);
  }
  CHECK(catalog_group("Q8").order() == 8);
  CHECK_FALSE(catalog_group("Q8").is_abelian());
  CHECK_FALSE(catalog_group("D4").is_abelian());
  CHECK_FALSE(isomorphic(catalog_group("D4"), catalog_group("Q8")));
  CHECK_FALSE(isomorphic(catalog_group("C2xC4"), catalog_group("C8")));
  CHECK(isomorphic(catalog_group("C6"), direct_product(cyclic_group(2), cyclic_group(3))));
  try {
    catalog_group("A5");
    FAIL("expected UnknownGroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unknown_group);
  }
}

TEST_CASE("invalid tables are rejected") {
  CHECK_THROWS_AS(GroupTable("bad", {{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(GroupTable("bad", {{0, 1}}), Error);
}

TEST_CASE("idempotent endomorphisms") {
  CHECK(idempotent_endos(cyclic_group(2)).size() == 2);
  CHECK(idempotent_endos(cyclic_group(3)).size() == 2);
  auto s3 = symmetric_group3();
  auto endos = idempotent_endos(s3);
  CHECK(endos.size() == 5);
  // Even permutations are 0, 3, 4; transpositions are 1, 2, 5.
  std::size_t retractions = 0;
  for (const auto& e : endos) {
    bool is_retraction = e.images[0] == 0 && e.images[3] == 0 && e.images[4] == 0 && e.images[1] != 0 &&
                         e.images[1] == e.images[2] && e.images[2] == e.images[5];
    retractions += is_retraction;
  }
  CHECK(retractions == 3);
  auto q = named_endo(s3, "sign-retraction");
  CHECK(q.images == std::vector<std::size_t>{0, 1, 1, 0, 0, 1});
  CHECK(std::is_sorted(endos.begin(), endos.end()));
  CHECK_THROWS_AS(idempotent_endos(s3, 4), Error);
}

TEST_CASE("semidirect products") {
  auto c3 = cyclic_group(3), c2 = cyclic_group(2);
  GroupEndo id{{0, 1, 2}}, inv{{0, 2, 1}};
  CHECK(isomorphic(semidirect_group(c3, c2, {id, id}), cyclic_group(6)));
  CHECK(isomorphic(semidirect_group(c3, c2, {id, inv}), symmetric_group3()));
  CHECK(isomorphic(semidirect_group(c3, cyclic_group(1), {id}), c3));
  CHECK_THROWS_AS(semidirect_group(c3, c2, {id, GroupEndo{{0, 0, 0}}}), Error);
  CHECK_THROWS_AS(semidirect_group(c3, c2, {inv, id}), Error);
}

TEST_CASE("function algebra of C2 is isomorphic to the group algebra") {
  auto grp = group_algebra(cyclic_group(2), Q);
  auto fun = function_algebra(cyclic_group(2), Q);
  // e ↦ δ_e + δ_g, g ↦ δ_e − δ_g.
  auto t = LinMap::from_ints(Q, {2}, {2}, {{1, 1}, {1, -1}});
  CHECK(equal(compose(t, grp.mu), compose(fun.mu, tensor(t, t))).equal);
  CHECK(equal(compose(t, grp.eta), fun.eta).equal);
  CHECK(equal(compose(tensor(t, t), grp.delta), compose(fun.delta, t)).equal);
  CHECK(equal(compose(fun.eps, t), grp.eps).equal);
  CHECK(equal(compose(t, grp.lambda), compose(fun.lambda, t)).equal);
}

TEST_CASE("generated Hopf algebras pass all checks") {
  for (auto field : {Q, FieldSpec::prime(5), FieldSpec::prime(7)}) {
    for (const char* name : {"C3", "S3", "Q8"}) {
      CHECK(full_hopf_suite(group_algebra(catalog_group(name), field)).passed());
      CHECK(full_hopf_suite(function_algebra(catalog_group(name), field)).passed());
    }
  }
  try {
    sweedler_h4(FieldSpec::prime(2));
    FAIL("expected CharTwo");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::char_two);
  }
  CHECK(full_hopf_suite(sweedler_h4(FieldSpec::prime(3))).passed());
}

TEST_CASE("linearized idempotents are idempotent matrices") {
  auto s3 = symmetric_group3();
  for (const auto& e : idempotent_endos(s3)) {
    auto q = linearize(s3, e, Q);
    CHECK(equal(compose(q, q), q).equal);
  }
}
