#pragma once

// Normal cones over the subset and partition categories.  A cone is stored
// by the singular transformation that generates it; components to the vertex
// are computed on demand.  Composing cones through the normal factorization
// machinery reproduces transformation composition, which is what makes the
// cone semigroups copies of the singular transformation semigroup.

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "singx/cayley.hpp"
#include "singx/foundation.hpp"
#include "singx/partition_category.hpp"
#include "singx/powerset_category.hpp"
#include "singx/report.hpp"

namespace singx {

// The cone over the subset category generated by a: its component at C is a
// restricted to C, and its vertex is the image of a.
class ConeP {
 public:
  explicit ConeP(Transformation a) : a_(std::move(a)) {
    detail::require(a_.is_singular(), "cone generator must be singular");
  }

  GroundSet ground() const { return a_.ground(); }
  const Transformation& generator() const { return a_; }
  SubsetObject vertex() const { return a_.image(); }

  std::string to_string() const { return "rho:" + a_.to_string(); }

  bool operator==(const ConeP& other) const { return a_ == other.a_; }
  bool operator<(const ConeP& other) const { return a_ < other.a_; }

 private:
  Transformation a_;
};

// The cone over the partition category generated by a: its component at an
// object sends each kernel block of a to the object's block holding a's
// value there, and its vertex is the kernel of a.
class ConePi {
 public:
  explicit ConePi(Transformation a) : a_(std::move(a)) {
    detail::require(a_.is_singular(), "cone generator must be singular");
  }

  GroundSet ground() const { return a_.ground(); }
  const Transformation& generator() const { return a_; }
  PartitionObject vertex() const { return PartitionObject(a_.kernel()); }

  std::string to_string() const { return "sigma:" + a_.to_string(); }

  bool operator==(const ConePi& other) const { return a_ == other.a_; }
  bool operator<(const ConePi& other) const { return a_ < other.a_; }

 private:
  Transformation a_;
};

inline SetFunction cone_component_p(const ConeP& c, SubsetObject at) {
  return restrict_transformation(c.generator(), at);
}

inline BlockMapMorphism cone_component_pi(const ConePi& c,
                                          const PartitionObject& at) {
  detail::require_same_ground(c.ground(), at.ground(), "cone_component_pi");
  const Transformation& a = c.generator();
  SetPartition ker = a.kernel();
  std::vector<int> eta;
  eta.reserve(static_cast<std::size_t>(ker.num_blocks()));
  for (int i = 0; i < ker.num_blocks(); ++i)
    eta.push_back(at.pi.block_of(a.apply(ker.block_min(i))));
  return BlockMapMorphism(at, c.vertex(), eta);
}

// The objects where the cone's component is an isomorphism.  On the subset
// side these are the cross-sections of the generator's kernel; on the
// partition side, the partitions with the generator's image as a
// cross-section.  Both are found by direct scan.
struct MSetP {
  std::vector<SubsetObject> members;
};

struct MSetPi {
  std::vector<PartitionObject> members;
};

inline MSetP mset(const ConeP& c) {
  MSetP out;
  for (const SubsetObject& a : enumerate_subsets(c.ground())) {
    if (cone_component_p(c, a).is_bijective()) out.members.push_back(a);
  }
  return out;
}

inline MSetPi mset(const ConePi& c) {
  MSetPi out;
  for (const SetPartition& p : enumerate_partitions(c.ground())) {
    PartitionObject at(p);
    BlockMapMorphism m = cone_component_pi(c, at);
    if (at.pi.num_blocks() != m.cod().pi.num_blocks()) continue;
    std::uint32_t hit = 0;
    for (int j = 0; j < m.cod().pi.num_blocks(); ++j) hit |= 1u << m.eta(j);
    if (std::popcount(hit) == at.pi.num_blocks()) out.members.push_back(at);
  }
  return out;
}

// Cone product: take the right cone's component at the left cone's vertex,
// cut it down to its epimorphism part, and append that to every component.
// Appending to the singleton components reads off the generating
// transformation directly.
inline ConeP cone_compose_p(const ConeP& c1, const ConeP& c2) {
  detail::require_same_ground(c1.ground(), c2.ground(), "cone_compose_p");
  SetFunction epi = normal_factorize_p(cone_component_p(c2, c1.vertex())).epi();
  std::vector<int> images;
  GroundSet g = c1.ground();
  images.reserve(static_cast<std::size_t>(g.n));
  for (int x = 1; x <= g.n; ++x)
    images.push_back(epi.apply(c1.generator().apply(x)));
  return ConeP(Transformation(g, images));
}

// Partition-side product.  The appended epimorphism lands at a coarsening of
// the right generator's kernel; the new generator's value on a block is the
// left generator's value on the block the epimorphism names.
inline ConePi cone_compose_pi(const ConePi& c1, const ConePi& c2) {
  detail::require_same_ground(c1.ground(), c2.ground(), "cone_compose_pi");
  BlockMapMorphism epi =
      normal_factorize_pi(cone_component_pi(c2, c1.vertex())).epi();
  const SetPartition& sigma = epi.cod().pi;
  SetPartition ker1 = c1.generator().kernel();
  GroundSet g = c1.ground();
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(g.n));
  for (int x = 1; x <= g.n; ++x) {
    int block = epi.eta(sigma.block_of(x));
    images.push_back(c1.generator().apply(ker1.block_min(block)));
  }
  return ConePi(Transformation(g, images));
}

// The idempotent cone with vertex D, generated by the idempotent onto D.
inline ConeP idempotent_cone_p(SubsetObject d) {
  return ConeP(idempotent_onto(d));
}

// The idempotent cone with vertex the given partition object, generated by
// the block-minima idempotent.
inline ConePi idempotent_cone_pi(const PartitionObject& p) {
  return ConePi(idempotent_with_kernel(p.pi));
}

// The full cone semigroup over the subset category, one element per singular
// transformation, multiplied by cone composition.
inline CayleyTable build_TP(GroundSet g) {
  detail::require(g.n <= 4, "cone semigroup table is sized for n <= 4");
  std::vector<Transformation> sing = enumerate_sing(g);
  TransformationIndex idx(g, sing);
  std::vector<ConeP> cones;
  cones.reserve(sing.size());
  for (const Transformation& a : sing) cones.emplace_back(a);
  return make_cayley_table(
      cones, [](const ConeP& c) { return c.to_string(); },
      [](const ConeP& c1, const ConeP& c2) { return cone_compose_p(c1, c2); },
      [&](const ConeP& c) { return idx.at(c.generator()); });
}

inline CayleyTable build_TPi(GroundSet g) {
  detail::require(g.n <= 4, "cone semigroup table is sized for n <= 4");
  std::vector<Transformation> sing = enumerate_sing(g);
  TransformationIndex idx(g, sing);
  std::vector<ConePi> cones;
  cones.reserve(sing.size());
  for (const Transformation& a : sing) cones.emplace_back(a);
  return make_cayley_table(
      cones, [](const ConePi& c) { return c.to_string(); },
      [](const ConePi& c1, const ConePi& c2) { return cone_compose_pi(c1, c2); },
      [&](const ConePi& c) { return idx.at(c.generator()); });
}

}  // namespace singx
