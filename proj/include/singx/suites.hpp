#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <numeric>
#include <string>
#include <vector>

#include "singx/cayley.hpp"
#include "singx/cones.hpp"
#include "singx/cross_connection.hpp"
#include "singx/foundation.hpp"
#include "singx/ideals.hpp"
#include "singx/normal_dual.hpp"
#include "singx/partition_category.hpp"
#include "singx/powerset_category.hpp"
#include "singx/report.hpp"

// The verification suites behind the CLI's pass/fail matrix: one exhaustive
// sweep per structure theorem, each returning a Report titled by its row
// label. A suite records failures instead of throwing, so a false theorem
// shows up as a FAIL row with a witness, not a crash.

namespace singx {

// The singular semigroup is isomorphic to the cone semigroup over the subset
// category, elementwise by a |-> the cone it generates. Both rosters follow
// the singular enumeration, so the witness map is the identity on positions.
inline Report suite_cone_semigroup_iso(GroundSet g) {
  CayleyTable sing = build_sing_table(g);
  CayleyTable tp = build_TP(g);
  std::vector<std::uint32_t> iota(sing.size());
  std::iota(iota.begin(), iota.end(), 0u);
  Report r = verify_iso(sing, tp, iota);
  r.title = "cone-semigroup-iso";
  return r;
}

// The cone semigroup over the partition category reverses the product.
inline Report suite_cone_semigroup_anti_iso(GroundSet g) {
  CayleyTable sing = build_sing_table(g);
  CayleyTable tpi = build_TPi(g);
  std::vector<std::uint32_t> iota(sing.size());
  std::iota(iota.begin(), iota.end(), 0u);
  Report r = verify_anti_iso(sing, tpi, iota);
  r.title = "cone-semigroup-anti-iso";
  return r;
}

// The normal dual of the subset category is the partition category: P and Q
// invert each other on objects, hom-sets, and the order.
inline Report suite_dual_of_subsets(GroundSet g) {
  Report r;
  r.title = "dual-of-subsets";
  std::vector<SetPartition> partitions = enumerate_partitions(g);
  std::vector<SubsetObject> subsets = enumerate_subsets(g);

  for (const SetPartition& p : partitions) {
    PartitionObject obj(p);
    ++r.checks;
    if (!(functor_P(functor_Q(obj)) == obj))
      r.fail("object round trip: " + obj.to_string());
    ++r.checks;
    if (!(functor_Q(functor_P(HFunctorP(p))) == HFunctorP(p)))
      r.fail("functor round trip: " + p.to_string());
  }

  for (const SetPartition& pe : partitions) {
    HFunctorP he(pe);
    for (const SetPartition& pf : partitions) {
      HFunctorP hf(pf);
      bool contained = true;
      for (const SubsetObject& a : subsets) {
        std::vector<Transformation> se = h_set(he, a);
        std::vector<Transformation> sf = h_set(hf, a);
        if (!std::includes(sf.begin(), sf.end(), se.begin(), se.end())) {
          contained = false;
          break;
        }
      }
      ++r.checks;
      if (contained != object_le(functor_P(he), functor_P(hf)))
        r.fail("order mismatch: " + pe.to_string() + " vs " + pf.to_string());
    }
  }

  for (const SetPartition& pe : partitions) {
    for (const SetPartition& pf : partitions) {
      PartitionObject oe(pe), of(pf);
      std::vector<BlockMapMorphism> homs = enumerate_block_maps(oe, of);
      for (const BlockMapMorphism& m : homs) {
        ++r.checks;
        if (!(functor_P_map(functor_Q_map(m)) == m))
          r.fail("P after Q differs: " + m.to_string());
      }
      std::vector<NatTransformP> nats =
          enumerate_nat_transforms(HFunctorP(pe), HFunctorP(pf));
      std::vector<BlockMapMorphism> images;
      bool ok = nats.size() == homs.size();
      for (const NatTransformP& t : nats) {
        if (!(functor_Q_map(functor_P_map(t)) == t)) ok = false;
        BlockMapMorphism image = functor_P_map(t);
        for (const BlockMapMorphism& prev : images) {
          if (prev == image) ok = false;
        }
        images.push_back(image);
      }
      ++r.checks;
      if (!ok)
        r.fail("hom-sets not in bijection: " + pe.to_string() + " to " +
               pf.to_string());
    }
  }
  return r;
}

// The normal dual of the partition category is the subset category: the
// image-keyed functors separate subsets, and R realizes each dual hom-set as
// exactly the set functions between the key subsets, functorially.
inline Report suite_dual_of_partitions(GroundSet g) {
  Report r;
  r.title = "dual-of-partitions";
  std::vector<SubsetObject> subsets = enumerate_subsets(g);
  std::vector<SetPartition> partitions = enumerate_partitions(g);

  for (std::size_t i = 0; i < subsets.size(); ++i) {
    HFunctorPi hi(subsets[i]);
    ++r.checks;
    if (!(functor_R(hi) == subsets[i]))
      r.fail("key subset lost: " + subsets[i].to_string());
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      HFunctorPi hj(subsets[j]);
      bool separated = false;
      for (const SetPartition& p : partitions) {
        PartitionObject at(p);
        if (h_set_pi(hi, at) != h_set_pi(hj, at)) {
          separated = true;
          break;
        }
      }
      ++r.checks;
      if (!separated)
        r.fail("functors collide: " + subsets[i].to_string() + " vs " +
               subsets[j].to_string());
    }
  }

  for (const SubsetObject& e : subsets) {
    HFunctorPi he(e);
    PartitionObject ke(idempotent_onto(e).kernel());
    ++r.checks;
    if (!(functor_R_map(he, he, identity_pi(ke)) == identity_p(e)))
      r.fail("identity not preserved: " + e.to_string());
    for (const SubsetObject& f : subsets) {
      HFunctorPi hf(f);
      PartitionObject kf(idempotent_onto(f).kernel());
      std::vector<SetFunction> images;
      for (const BlockMapMorphism& m1 : enumerate_block_maps(kf, ke)) {
        SetFunction r1 = functor_R_map(he, hf, m1);
        for (const SetFunction& prev : images) {
          if (prev == r1) {
            r.fail("hom realization collides: " + m1.to_string());
            break;
          }
        }
        images.push_back(r1);
        for (const SubsetObject& d : subsets) {
          HFunctorPi hd(d);
          PartitionObject kd(idempotent_onto(d).kernel());
          for (const BlockMapMorphism& m2 : enumerate_block_maps(kd, kf)) {
            SetFunction r2 = functor_R_map(hf, hd, m2);
            ++r.checks;
            if (!(functor_R_map(he, hd, compose_pi(m2, m1)) == compose(r1, r2)))
              r.fail("composition not preserved: " + m1.to_string() + " then " +
                     m2.to_string());
          }
        }
      }
      ++r.checks;
      if (images.size() != enumerate_set_functions(e, f).size())
        r.fail("hom-sets not in bijection: " + e.to_string() + " to " +
               f.to_string());
    }
  }
  return r;
}

// The mset of the cone generated by a is exactly the set of cross-sections
// of a's kernel.
inline Report suite_mset_cross_sections(GroundSet g) {
  Report r;
  r.title = "mset-cross-sections";
  for (const Transformation& a : enumerate_sing(g)) {
    std::vector<SubsetObject> fromcone = mset(ConeP(a)).members;
    std::vector<SubsetObject> sections = cross_sections(a.kernel());
    std::sort(fromcone.begin(), fromcone.end());
    std::sort(sections.begin(), sections.end());
    ++r.checks;
    if (fromcone != sections) r.fail("mset mismatch at " + a.to_string());
  }
  return r;
}

// Conjugation is a natural bijection between the two bifunctor value sets:
// objectwise onto the Delta side, and commuting with both morphism actions.
inline Report suite_duality_naturality(GroundSet g) {
  Report r;
  r.title = "duality-naturality";
  std::vector<SubsetObject> subsets = enumerate_subsets(g);
  std::vector<SetPartition> partitions = enumerate_partitions(g);
  for (const Permutation& th : enumerate_permutations(g)) {
    for (const SubsetObject& a : subsets) {
      for (const SetPartition& p1 : partitions) {
        PartitionObject o1(p1);
        std::vector<Transformation> gs = gamma_set(th, a, o1);
        std::vector<Transformation> image;
        image.reserve(gs.size());
        for (const Transformation& t : gs) image.push_back(chi(th, a, o1, t));
        std::sort(image.begin(), image.end());
        ++r.checks;
        if (image != delta_set(th, a, o1))
          r.fail("not a bijection at theta=" + th.to_string() + " (" +
                 a.to_string() + ", " + o1.to_string() + ")");
        for (const SubsetObject& b : subsets) {
          for (const SetFunction& f : enumerate_set_functions(a, b)) {
            for (const SetPartition& p2 : partitions) {
              PartitionObject o2(p2);
              for (const BlockMapMorphism& m : enumerate_block_maps(o1, o2)) {
                for (const Transformation& t : gs) {
                  ++r.checks;
                  try {
                    if (!(conjugate(th, gamma_action(th, f, m, t)) ==
                          delta_action(th, f, m, chi(th, a, o1, t)))) {
                      r.fail("square at theta=" + th.to_string() + " f=" +
                             f.to_string() + " m=" + m.to_string() + " t=" +
                             t.to_string());
                    }
                  } catch (const std::exception& e) {
                    r.fail(std::string("action left the value set: ") +
                           e.what());
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return r;
}

// Every permutation's linked-pair semigroup is a verified copy of the
// singular semigroup, and the variant product realizes the same structure.
inline Report suite_linked_pairs_iso(GroundSet g) {
  Report r;
  r.title = "linked-pairs-iso";
  for (const Permutation& th : enumerate_permutations(g)) {
    r.merge(verify_s_gamma(build_s_gamma(th)));
    r.merge(verify_variant_iso(th));
  }
  return r;
}

// The constrained search over dual-side functors recovers exactly the
// permutations, in enumeration order.
inline Report suite_crossconn_classification(GroundSet g) {
  Report r;
  r.title = "crossconn-classification";
  std::vector<Permutation> found = enumerate_cross_connections(g);
  std::vector<Permutation> perms = enumerate_permutations(g);
  ++r.checks;
  if (found.size() != perms.size())
    r.fail("expected " + std::to_string(perms.size()) + " connections, found " +
           std::to_string(found.size()));
  for (std::size_t i = 0; i < found.size() && i < perms.size(); ++i) {
    ++r.checks;
    if (!(found[i] == perms[i]))
      r.fail("position " + std::to_string(i) + ": " + found[i].to_string());
  }
  return r;
}

namespace detail {

// Union of the principal ideals of every minimal partition not excluded.
inline PartitionIdeal ideal_excluding(GroundSet g,
                                      const std::vector<SetPartition>& excluded) {
  std::vector<PartitionIdeal> kept;
  for (const SetPartition& m : minimal_partitions(g)) {
    if (std::find(excluded.begin(), excluded.end(), m) == excluded.end())
      kept.push_back(principal_ideal(PartitionObject(m)));
  }
  return ideal_union(kept);
}

// Every way of excluding at most k of the minimal partitions.
inline std::vector<std::vector<SetPartition>> exclusion_subsets(GroundSet g,
                                                                int k) {
  std::vector<SetPartition> mins = minimal_partitions(g);
  std::vector<std::vector<SetPartition>> out;
  for (std::uint32_t mask = 0; mask < (1u << mins.size()); ++mask) {
    if (std::popcount(mask) > k) continue;
    std::vector<SetPartition> chosen;
    for (std::size_t i = 0; i < mins.size(); ++i) {
      if (mask & (1u << i)) chosen.push_back(mins[i]);
    }
    out.push_back(std::move(chosen));
  }
  return out;
}

}  // namespace detail

// Excluding up to n-2 minimal partitions always leaves a total ideal, while
// excluding every doubleton through one element never does.
inline Report suite_total_ideal_covering(GroundSet g) {
  Report r;
  r.title = "total-ideal-covering";
  for (const std::vector<SetPartition>& excluded :
       detail::exclusion_subsets(g, g.n - 2)) {
    ++r.checks;
    if (!is_total(detail::ideal_excluding(g, excluded))) {
      std::string witness = "lost totality excluding";
      for (const SetPartition& p : excluded) witness += " " + p.to_string();
      r.fail(witness);
    }
  }
  if (g.n >= 3) {
    std::vector<SetPartition> through_one;
    for (int y = 2; y <= g.n; ++y) {
      std::vector<int> labels(static_cast<std::size_t>(g.n));
      for (int z = 1; z <= g.n; ++z) {
        labels[static_cast<std::size_t>(z - 1)] = z == y ? 1 : z;
      }
      through_one.push_back(SetPartition::from_assignment(g, labels));
    }
    ++r.checks;
    if (is_total(detail::ideal_excluding(g, through_one)))
      r.fail("still total excluding every doubleton through 1");
  }
  return r;
}

// Every total ideal reachable by excluding up to n-2 minimal partitions
// yields a closed, associative, regular, right reductive subsemigroup whose
// roster is exactly the transformations with kernel object in the ideal.
inline Report suite_ideal_subsemigroup(GroundSet g) {
  Report r;
  r.title = "ideal-subsemigroup";
  for (const std::vector<SetPartition>& excluded :
       detail::exclusion_subsets(g, g.n - 2)) {
    PartitionIdeal ideal = detail::ideal_excluding(g, excluded);
    ++r.checks;
    try {
      RightReductiveResult res = build_ideal_cxn(ideal);
      std::size_t expected = 0;
      for (const Transformation& a : enumerate_sing(g)) {
        if (ideal.contains(PartitionObject(a.kernel()))) ++expected;
      }
      if (res.table.size() != expected)
        r.fail("roster size " + std::to_string(res.table.size()) +
               " expected " + std::to_string(expected));
      if (!res.regular) r.fail("not regular: " + std::to_string(res.table.size()) +
                               " elements");
      if (!res.right_reductive)
        r.fail("not right reductive: " + std::to_string(res.table.size()) +
               " elements");
      if (res.table.size() <= 1024) r.merge(check_associative(res.table));
    } catch (const std::exception& e) {
      r.fail(std::string("construction failed: ") + e.what());
    }
  }
  return r;
}

struct SuiteEntry {
  const char* label;
  Report (*run)(GroundSet);
};

inline const std::vector<SuiteEntry>& all_suites() {
  static const std::vector<SuiteEntry> suites = {
      {"cone-semigroup-iso", suite_cone_semigroup_iso},
      {"cone-semigroup-anti-iso", suite_cone_semigroup_anti_iso},
      {"dual-of-subsets", suite_dual_of_subsets},
      {"dual-of-partitions", suite_dual_of_partitions},
      {"mset-cross-sections", suite_mset_cross_sections},
      {"duality-naturality", suite_duality_naturality},
      {"linked-pairs-iso", suite_linked_pairs_iso},
      {"crossconn-classification", suite_crossconn_classification},
      {"total-ideal-covering", suite_total_ideal_covering},
      {"ideal-subsemigroup", suite_ideal_subsemigroup},
  };
  return suites;
}

inline std::vector<Report> run_all_suites(GroundSet g) {
  detail::require(g.n <= 4, "verification suites are sized for n <= 4");
  std::vector<Report> out;
  out.reserve(all_suites().size());
  for (const SuiteEntry& s : all_suites()) out.push_back(s.run(g));
  return out;
}

}  // namespace singx
