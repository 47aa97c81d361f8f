#include "singx/powerset_category.hpp"

#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "singx/foundation.hpp"

using namespace singx;

namespace {

SubsetObject sub(GroundSet g, std::initializer_list<int> xs) {
  return SubsetObject(g, std::vector<int>(xs));
}

}  // namespace

TEST_CASE("set functions validate and evaluate", "[powerset]") {
  GroundSet g(4);
  SetFunction f(sub(g, {1, 2, 3}), sub(g, {1, 2, 4}), {1, 1, 4});
  CHECK(f.apply(1) == 1);
  CHECK(f.apply(2) == 1);
  CHECK(f.apply(3) == 4);
  CHECK(f.image() == sub(g, {1, 4}));
  CHECK_FALSE(f.is_inclusion());
  CHECK_FALSE(f.is_bijective());
  CHECK_THROWS(f.apply(4));
  CHECK_THROWS(SetFunction(sub(g, {1, 2}), sub(g, {1, 2}), {1}));
  CHECK_THROWS(SetFunction(sub(g, {1, 2}), sub(g, {1, 2}), {1, 3}));
}

TEST_CASE("set function literals round-trip", "[powerset]") {
  GroundSet g(4);
  SetFunction f = parse_set_function(g, "f: {1,2,3}->{1,2,4} [1,1,4]");
  CHECK(f.to_string() == "f: {1,2,3}->{1,2,4} [1,1,4]");
  CHECK(parse_set_function(g, f.to_string()) == f);
  CHECK(parse_set_function(g, "f:{1}->{2}[2]") ==
        SetFunction(sub(g, {1}), sub(g, {2}), {2}));
  CHECK_THROWS(parse_set_function(g, "{1}->{2} [2]"));
  CHECK_THROWS(parse_set_function(g, "f: {1}-{2} [2]"));
  CHECK_THROWS(parse_set_function(g, "f: {1}->{2} [3]"));
  CHECK_THROWS(parse_set_function(g, "f: {1,2}->{2} [2]"));
}

TEST_CASE("inclusions and retractions", "[powerset]") {
  GroundSet g(4);
  SetFunction j = inclusion_p(sub(g, {1}), sub(g, {1, 2}));
  CHECK(j.apply(1) == 1);
  CHECK(j.is_inclusion());

  SetFunction q = retraction_p(sub(g, {1, 2, 3}), sub(g, {1, 3}));
  CHECK(q == SetFunction(sub(g, {1, 2, 3}), sub(g, {1, 3}), {1, 1, 3}));
  CHECK(retraction_p(sub(g, {1, 2}), sub(g, {1, 2})) == identity_p(sub(g, {1, 2})));
  CHECK_THROWS(inclusion_p(sub(g, {1, 3}), sub(g, {1, 2})));
  CHECK_THROWS(retraction_p(sub(g, {1, 2}), sub(g, {1, 3})));

  // Splitting law over every comparable pair.
  for (GroundSet gs : {GroundSet(3), GroundSet(4)}) {
    for (const SubsetObject& a : enumerate_subsets(gs)) {
      for (const SubsetObject& b : enumerate_subsets(gs)) {
        if (!a.subset_of(b)) continue;
        CHECK(compose(inclusion_p(a, b), retraction_p(b, a)) == identity_p(a));
      }
    }
  }
}

TEST_CASE("enumerating hom-sets", "[powerset]") {
  GroundSet g(3);
  std::vector<SetFunction> hom =
      enumerate_set_functions(sub(g, {1, 2}), sub(g, {1, 3}));
  REQUIRE(hom.size() == 4);
  CHECK(hom.front() == SetFunction(sub(g, {1, 2}), sub(g, {1, 3}), {1, 1}));
  CHECK(hom.back() == SetFunction(sub(g, {1, 2}), sub(g, {1, 3}), {3, 3}));
}

TEST_CASE("normal factorization of worked examples", "[powerset]") {
  GroundSet g(4);

  SetFunction f = parse_set_function(g, "f: {1,2,3}->{1,2,4} [1,1,4]");
  NormalFactorizationP nf = normal_factorize_p(f);
  CHECK(nf.q == parse_set_function(g, "f: {1,2,3}->{1,3} [1,1,3]"));
  CHECK(nf.u == parse_set_function(g, "f: {1,3}->{1,4} [1,4]"));
  CHECK(nf.j == parse_set_function(g, "f: {1,4}->{1,2,4} [1,4]"));
  CHECK(nf.composite() == f);
  CHECK(nf.epi() == parse_set_function(g, "f: {1,2,3}->{1,4} [1,1,4]"));

  GroundSet g3(3);
  SetFunction bij = parse_set_function(g3, "f: {1,2}->{2,3} [2,3]");
  NormalFactorizationP nb = normal_factorize_p(bij);
  CHECK(nb.q == identity_p(sub(g3, {1, 2})));
  CHECK(nb.u == bij);
  CHECK(nb.j == identity_p(sub(g3, {2, 3})));

  SetFunction cst = parse_set_function(g, "f: {1,2,3}->{1,2} [2,2,2]");
  NormalFactorizationP nc = normal_factorize_p(cst);
  CHECK(nc.q == parse_set_function(g, "f: {1,2,3}->{1} [1,1,1]"));
  CHECK(nc.u == parse_set_function(g, "f: {1}->{2} [2]"));
  CHECK(nc.j == parse_set_function(g, "f: {2}->{1,2} [2]"));
}

TEST_CASE("factorization recomposes everywhere", "[powerset]") {
  for (GroundSet g : {GroundSet(3), GroundSet(4)}) {
    for (const SubsetObject& a : enumerate_subsets(g)) {
      if (a.size() > 3) continue;
      for (const SubsetObject& b : enumerate_subsets(g)) {
        if (b.size() > 3) continue;
        for (const SetFunction& f : enumerate_set_functions(a, b)) {
          NormalFactorizationP nf = normal_factorize_p(f);
          REQUIRE(nf.composite() == f);
          SetFunction epi = nf.epi();
          REQUIRE(epi.image_mask() == f.image_mask());
          REQUIRE(epi.cod() == f.image());
        }
      }
    }
  }
}

TEST_CASE("inclusion triangles stay inclusions", "[powerset]") {
  GroundSet g(3);
  for (const SubsetObject& c : enumerate_subsets(g)) {
    for (const SubsetObject& a : enumerate_subsets(g)) {
      if (!a.subset_of(c)) continue;
      for (const SubsetObject& b : enumerate_subsets(g)) {
        if (!b.subset_of(c)) continue;
        for (const SetFunction& h : enumerate_set_functions(a, b)) {
          if (compose(h, inclusion_p(b, c)) == inclusion_p(a, c)) {
            CHECK(h.is_inclusion());
          }
        }
      }
    }
  }
}

TEST_CASE("category axiom sweep", "[powerset]") {
  for (int n : {2, 3, 4}) {
    Report r = verify_normal_category_p(GroundSet(n));
    INFO(r.summary());
    CHECK(r.ok());
  }
}
