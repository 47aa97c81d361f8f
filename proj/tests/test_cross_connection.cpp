#include "singx/cross_connection.hpp"

#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "singx/cayley.hpp"
#include "singx/foundation.hpp"
#include "singx/normal_dual.hpp"
#include "singx/partition_category.hpp"
#include "singx/powerset_category.hpp"

using namespace singx;

namespace {

Transformation tr(GroundSet g, const char* literal) {
  return parse_transformation(g, literal);
}

PartitionObject obj(GroundSet g, const char* literal) {
  return PartitionObject(parse_partition(g, literal));
}

SubsetObject sub(GroundSet g, std::initializer_list<int> xs) {
  return SubsetObject(g, std::vector<int>(xs));
}

// Membership in the Gamma/Delta value sets, restated from the definitions.
bool in_gamma(const Permutation& th, const SubsetObject& a,
              const PartitionObject& p, const Transformation& t) {
  return t.is_singular() && (t.image_mask() & ~a.mask()) == 0 &&
         refines(perm_preimage_partition(th, p.pi), t.kernel());
}

bool in_delta(const Permutation& th, const SubsetObject& a,
              const PartitionObject& p, const Transformation& t) {
  return t.is_singular() &&
         (t.image_mask() & ~perm_image_subset(th, a).mask()) == 0 &&
         refines(p.pi, t.kernel());
}

}  // namespace

TEST_CASE("functor pair moves objects and morphisms", "[crossconn]") {
  GroundSet g(3);
  Permutation theta = parse_permutation(g, "2,3,1");
  CHECK(gamma_object(theta, obj(g, "12|3")) == obj(g, "13|2"));
  CHECK(delta_object(theta, sub(g, {1, 2})) == sub(g, {2, 3}));

  BlockMapMorphism m = parse_block_map(g, "eta: 12|3 -> 13|2 [0,0]");
  CHECK(gamma_morphism(theta, m) == parse_block_map(g, "eta: 13|2 -> 1|23 [1,1]"));
  SetFunction f = parse_set_function(g, "f: {1,2}->{1,3} [3,1]");
  CHECK(delta_morphism(theta, f) == parse_set_function(g, "f: {2,3}->{1,2} [1,2]"));

  Permutation id = parse_permutation(g, "1,2,3");
  for (const SetPartition& p : enumerate_partitions(g)) {
    PartitionObject o(p);
    CHECK(gamma_object(id, o) == o);
    for (const SetPartition& q : enumerate_partitions(g)) {
      for (const BlockMapMorphism& bm : enumerate_block_maps(o, PartitionObject(q))) {
        CHECK(gamma_morphism(id, bm) == bm);
      }
    }
  }
  for (const SubsetObject& a : enumerate_subsets(g)) {
    CHECK(delta_object(id, a) == a);
    for (const SubsetObject& b : enumerate_subsets(g)) {
      for (const SetFunction& sf : enumerate_set_functions(a, b)) {
        CHECK(delta_morphism(id, sf) == sf);
      }
    }
  }

  CHECK_THROWS(gamma_object(theta, obj(GroundSet(4), "12|34")));
  CHECK_THROWS(delta_morphism(theta, identity_p(sub(GroundSet(4), {1, 2}))));
}

TEST_CASE("functor pair respects composition", "[crossconn]") {
  GroundSet g(3);
  for (const Permutation& theta : enumerate_permutations(g)) {
    for (const SetPartition& p1 : enumerate_partitions(g)) {
      for (const SetPartition& p2 : enumerate_partitions(g)) {
        PartitionObject o1(p1), o2(p2);
        for (const BlockMapMorphism& m1 : enumerate_block_maps(o1, o2)) {
          BlockMapMorphism g1 = gamma_morphism(theta, m1);
          for (const SetPartition& p3 : enumerate_partitions(g)) {
            for (const BlockMapMorphism& m2 :
                 enumerate_block_maps(o2, PartitionObject(p3))) {
              REQUIRE(gamma_morphism(theta, compose_pi(m1, m2)) ==
                      compose_pi(g1, gamma_morphism(theta, m2)));
            }
          }
        }
        CHECK(gamma_morphism(theta, identity_pi(o1)) ==
              identity_pi(gamma_object(theta, o1)));
      }
    }
    for (const SubsetObject& a : enumerate_subsets(g)) {
      CHECK(delta_morphism(theta, identity_p(a)) ==
            identity_p(delta_object(theta, a)));
      for (const SubsetObject& b : enumerate_subsets(g)) {
        for (const SetFunction& f1 : enumerate_set_functions(a, b)) {
          SetFunction d1 = delta_morphism(theta, f1);
          for (const SubsetObject& c : enumerate_subsets(g)) {
            for (const SetFunction& f2 : enumerate_set_functions(b, c)) {
              REQUIRE(delta_morphism(theta, compose(f1, f2)) ==
                      compose(d1, delta_morphism(theta, f2)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("bifunctor value sets", "[crossconn]") {
  GroundSet g(3);
  Permutation id = parse_permutation(g, "1,2,3");
  Permutation theta = parse_permutation(g, "2,3,1");

  CHECK(gamma_set(id, sub(g, {1, 2}), obj(g, "12|3")) ==
        std::vector<Transformation>{tr(g, "1,1,1"), tr(g, "1,1,2"),
                                    tr(g, "2,2,1"), tr(g, "2,2,2")});
  CHECK(gamma_set(id, sub(g, {1}), obj(g, "123")) ==
        std::vector<Transformation>{tr(g, "1,1,1")});
  CHECK(gamma_set(theta, sub(g, {1, 2}), obj(g, "12|3")) ==
        std::vector<Transformation>{tr(g, "1,1,1"), tr(g, "1,2,1"),
                                    tr(g, "2,1,2"), tr(g, "2,2,2")});

  for (const Permutation& th : enumerate_permutations(g)) {
    for (const SubsetObject& a : enumerate_subsets(g)) {
      for (const SetPartition& p : enumerate_partitions(g)) {
        PartitionObject po(p);
        // The value sets are plain H-functor sets at moved arguments.
        CHECK(gamma_set(th, a, po) ==
              h_set(HFunctorP(perm_preimage_partition(th, p)), a));
        CHECK(delta_set(th, a, po) ==
              h_set(HFunctorP(p), perm_image_subset(th, a)));
        CHECK(gamma_set(th, a, po).size() == delta_set(th, a, po).size());
      }
    }
  }

  // With the identity the two bifunctors coincide.
  for (const SubsetObject& a : enumerate_subsets(g)) {
    for (const SetPartition& p : enumerate_partitions(g)) {
      CHECK(gamma_set(id, a, PartitionObject(p)) ==
            delta_set(id, a, PartitionObject(p)));
    }
  }
}

TEST_CASE("conjugation transports kernel and image", "[crossconn]") {
  for (int n : {2, 3}) {
    GroundSet g(n);
    for (const Permutation& theta : enumerate_permutations(g)) {
      for (const Transformation& a : enumerate_sing(g)) {
        Transformation c = conjugate(theta, a);
        REQUIRE(c.kernel() == perm_image_partition(theta, a.kernel()));
        REQUIRE(c.image() == perm_image_subset(theta, a.image()));
      }
    }
  }
}

TEST_CASE("duality is a natural bijection", "[crossconn]") {
  GroundSet g(3);
  Permutation theta = parse_permutation(g, "2,3,1");
  CHECK(chi(theta, sub(g, {1, 2}), obj(g, "1|23"), tr(g, "1,1,2")) ==
        tr(g, "3,2,2"));
  CHECK_THROWS(chi(theta, sub(g, {1, 2}), obj(g, "12|3"), tr(g, "1,1,2")));
  Permutation id = parse_permutation(g, "1,2,3");
  CHECK(chi(id, sub(g, {1, 2}), obj(g, "12|3"), tr(g, "1,1,2")) == tr(g, "1,1,2"));

  for (const Permutation& th : enumerate_permutations(g)) {
    // Bijectivity onto the Delta value set, objectwise.
    for (const SubsetObject& a : enumerate_subsets(g)) {
      for (const SetPartition& p : enumerate_partitions(g)) {
        PartitionObject po(p);
        std::vector<Transformation> image;
        for (const Transformation& t : gamma_set(th, a, po)) {
          image.push_back(chi(th, a, po, t));
        }
        std::sort(image.begin(), image.end());
        REQUIRE(image == delta_set(th, a, po));
      }
    }
    // Naturality: act then conjugate equals conjugate then act, for every
    // morphism pair and every member of the source value set.
    for (const SubsetObject& a : enumerate_subsets(g)) {
      for (const SubsetObject& b : enumerate_subsets(g)) {
        for (const SetFunction& f : enumerate_set_functions(a, b)) {
          for (const SetPartition& p1 : enumerate_partitions(g)) {
            for (const SetPartition& p2 : enumerate_partitions(g)) {
              PartitionObject o1(p1), o2(p2);
              for (const BlockMapMorphism& m : enumerate_block_maps(o1, o2)) {
                for (const Transformation& t : gamma_set(th, a, o1)) {
                  Transformation moved = gamma_action(th, f, m, t);
                  REQUIRE(in_gamma(th, b, o2, moved));
                  Transformation other = delta_action(th, f, m, chi(th, a, o1, t));
                  REQUIRE(in_delta(th, b, o2, other));
                  REQUIRE(conjugate(th, moved) == other);
                }
              }
            }
          }
        }
      }
    }
  }

  CHECK_THROWS(gamma_action(theta, identity_p(sub(g, {1, 2})),
                            identity_pi(obj(g, "12|3")), tr(g, "3,3,3")));
  CHECK_THROWS(delta_action(theta, identity_p(sub(g, {1, 2})),
                            identity_pi(obj(g, "12|3")), tr(g, "1,2,1")));
}

TEST_CASE("value set unions exhaust the singular part", "[crossconn]") {
  for (int n : {2, 3, 4}) {
    GroundSet g(n);
    std::vector<Transformation> sing = enumerate_sing(g);
    for (const Permutation& theta : enumerate_permutations(g)) {
      REQUIRE(u_gamma(theta) == sing);
      REQUIRE(u_delta(theta) == sing);
    }
  }
  CHECK_THROWS(u_gamma(parse_permutation(GroundSet(5), "1,2,3,4,5")));
}

TEST_CASE("linked pairs form a copy of the singular semigroup", "[crossconn]") {
  GroundSet g(3);
  Permutation theta = parse_permutation(g, "2,3,1");
  CrossConnectionSemigroup s = build_s_gamma(theta);
  CHECK(s.pairs.size() == 21);
  CHECK(s.table.roster[0] == "(1,1,1 ~ 2,2,2)");
  for (const LinkedPair& p : s.pairs) CHECK(p.b == conjugate(theta, p.a));
  Report r = verify_s_gamma(s);
  INFO(r.summary());
  CHECK(r.ok());
  CHECK(r.checks >= 21 * 21);

  for (const Permutation& th : enumerate_permutations(g)) {
    CHECK(verify_s_gamma(build_s_gamma(th)).ok());
  }

  // Identity conjugation doubles each element; the table is the singular
  // table under renamed labels.
  CrossConnectionSemigroup sid = build_s_gamma(parse_permutation(g, "1,2,3"));
  CayleyTable sing = build_sing_table(g);
  CHECK(sid.table.table == sing.table);
  for (std::size_t i = 0; i < sid.pairs.size(); ++i) {
    CHECK(sid.pairs[i].a == sid.pairs[i].b);
    CHECK(sid.table.roster[i] ==
          "(" + sing.roster[i] + " ~ " + sing.roster[i] + ")");
  }

  GroundSet g4(4);
  CrossConnectionSemigroup s4 = build_s_gamma(parse_permutation(g4, "2,1,3,4"));
  CHECK(s4.pairs.size() == 232);
  CHECK(verify_s_gamma(s4).ok());

  CHECK_THROWS(build_s_gamma(parse_permutation(GroundSet(5), "2,1,3,4,5")));
}

TEST_CASE("variant product matches the linked pairs", "[crossconn]") {
  GroundSet g(3);
  Permutation theta = parse_permutation(g, "2,3,1");
  CHECK(variant_product(theta, tr(g, "1,1,2"), tr(g, "2,2,3")) == tr(g, "2,2,3"));
  CHECK_THROWS(variant_product(theta, tr(g, "1,1,2"),
                               Transformation(g, {1, 2, 3})));

  Permutation id = parse_permutation(g, "1,2,3");
  for (const Transformation& a : enumerate_sing(g)) {
    for (const Transformation& b : enumerate_sing(g)) {
      CHECK(variant_product(id, a, b) == compose(a, b));
    }
  }

  for (const Permutation& th : enumerate_permutations(g)) {
    Report r = verify_variant_iso(th);
    INFO(r.summary());
    CHECK(r.ok());
    CHECK(r.checks >= 21 * 21);
  }
  CHECK_THROWS(verify_variant_iso(parse_permutation(GroundSet(5), "1,2,3,4,5")));
}

TEST_CASE("local isomorphism checker", "[crossconn]") {
  GroundSet g(3);
  for (const Permutation& theta : enumerate_permutations(g)) {
    CHECK(is_local_isomorphism(g, gamma_functor_data(theta)));
    CHECK(is_local_isomorphism(g, delta_functor_data(theta)));
  }

  // Collapsing every object to the one-block partition is not faithful.
  PartitionFunctorData constant;
  PartitionObject bottom = obj(g, "123");
  constant.object_images.assign(enumerate_partitions(g).size(), bottom);
  constant.morphism_action = [bottom](const BlockMapMorphism&) {
    return identity_pi(bottom);
  };
  CHECK_FALSE(is_local_isomorphism(g, constant));

  // Altering a single object image breaks inclusion preservation.
  PartitionFunctorData dented;
  for (const SetPartition& p : enumerate_partitions(g)) {
    dented.object_images.emplace_back(p);
  }
  dented.object_images[1] = obj(g, "13|2");
  REQUIRE(enumerate_partitions(g)[1] == parse_partition(g, "12|3"));
  dented.morphism_action = [](const BlockMapMorphism& m) { return m; };
  CHECK_FALSE(is_local_isomorphism(g, dented));

  SubsetFunctorData dented_p;
  dented_p.object_images = enumerate_subsets(g);
  dented_p.object_images[0] = sub(g, {2});
  REQUIRE(enumerate_subsets(g)[0] == sub(g, {1}));
  dented_p.morphism_action = [](const SetFunction& f) { return f; };
  CHECK_FALSE(is_local_isomorphism(g, dented_p));

  // Structural garbage is rejected outright.
  PartitionFunctorData short_map;
  short_map.object_images.assign(2, bottom);
  short_map.morphism_action = [](const BlockMapMorphism& m) { return m; };
  CHECK_THROWS(is_local_isomorphism(g, short_map));
  PartitionFunctorData no_action;
  for (const SetPartition& p : enumerate_partitions(g)) {
    no_action.object_images.emplace_back(p);
  }
  CHECK_THROWS(is_local_isomorphism(g, no_action));
}

TEST_CASE("classification search finds exactly the permutations", "[crossconn]") {
  for (int n : {2, 3, 4}) {
    GroundSet g(n);
    std::vector<Permutation> found = enumerate_cross_connections(g);
    REQUIRE(found == enumerate_permutations(g));
  }

  // Distinct permutations induce distinct object actions on both sides.
  GroundSet g(3);
  std::vector<std::vector<PartitionObject>> gamma_actions;
  std::vector<std::vector<SubsetObject>> delta_singletons;
  for (const Permutation& theta : enumerate_cross_connections(g)) {
    gamma_actions.push_back(gamma_functor_data(theta).object_images);
    std::vector<SubsetObject> singles;
    for (int x = 1; x <= g.n; ++x) {
      singles.push_back(delta_object(theta, sub(g, {x})));
    }
    delta_singletons.push_back(singles);
  }
  for (std::size_t i = 0; i < gamma_actions.size(); ++i) {
    for (std::size_t j = i + 1; j < gamma_actions.size(); ++j) {
      CHECK(gamma_actions[i] != gamma_actions[j]);
      CHECK(delta_singletons[i] != delta_singletons[j]);
    }
  }

  CHECK_THROWS(enumerate_cross_connections(GroundSet(6)));
}
