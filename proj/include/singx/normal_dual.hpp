#pragma once

// Set-valued functors built from idempotents, their natural transformations,
// and the functors P, Q, R identifying each category's dual with the other
// category.  A functor on the subset side depends only on the idempotent's
// kernel, and one on the partition side only on the idempotent's image, so
// the types key on those invariants directly.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "singx/foundation.hpp"
#include "singx/partition_category.hpp"
#include "singx/powerset_category.hpp"
#include "singx/report.hpp"

namespace singx {

// H(e;-) on the subset category, keyed by the kernel partition of e.
struct HFunctorP {
  SetPartition kernel;

  explicit HFunctorP(SetPartition k) : kernel(std::move(k)) {}

  GroundSet ground() const { return kernel.ground(); }
  std::string to_string() const { return "H[ker=" + kernel.to_string() + "]"; }

  bool operator==(const HFunctorP& other) const { return kernel == other.kernel; }
  bool operator<(const HFunctorP& other) const { return kernel < other.kernel; }
};

// H(e;-) on the partition category, keyed by the image of e.
struct HFunctorPi {
  SubsetObject image;

  explicit HFunctorPi(SubsetObject im) : image(im) {}

  GroundSet ground() const { return image.ground(); }
  std::string to_string() const { return "H[im=" + image.to_string() + "]"; }

  bool operator==(const HFunctorPi& other) const { return image == other.image; }
  bool operator<(const HFunctorPi& other) const { return image < other.image; }
};

inline HFunctorP parse_h_functor_p(GroundSet g, std::string_view text) {
  std::string s = detail::strip_spaces(text);
  detail::require(s.rfind("H[ker=", 0) == 0 && s.back() == ']',
                  "functor literal must look like H[ker=12|3]");
  return HFunctorP(parse_partition(g, s.substr(6, s.size() - 7)));
}

inline HFunctorPi parse_h_functor_pi(GroundSet g, std::string_view text) {
  std::string s = detail::strip_spaces(text);
  detail::require(s.rfind("H[im=", 0) == 0 && s.back() == ']',
                  "functor literal must look like H[im={1,3}]");
  return HFunctorPi(parse_subset(g, s.substr(5, s.size() - 6)));
}

// The functor's value at a subset: every singular transformation constant on
// the kernel's blocks whose image lies inside the subset.
inline std::vector<Transformation> h_set(const HFunctorP& h,
                                         const SubsetObject& a) {
  detail::require_same_ground(h.ground(), a.ground(), "h_set");
  std::vector<Transformation> out;
  for (const Transformation& t : enumerate_sing(h.ground())) {
    if (refines(h.kernel, t.kernel()) && (t.image_mask() & ~a.mask()) == 0)
      out.push_back(t);
  }
  return out;
}

// The partition-side value at a partition object: every singular
// transformation constant on the object's blocks whose image lies inside the
// functor's key subset.
inline std::vector<Transformation> h_set_pi(const HFunctorPi& h,
                                            const PartitionObject& at) {
  detail::require_same_ground(h.ground(), at.ground(), "h_set_pi");
  std::vector<Transformation> out;
  for (const Transformation& t : enumerate_sing(h.ground())) {
    if (refines(at.pi, t.kernel()) && (t.image_mask() & ~h.image.mask()) == 0)
      out.push_back(t);
  }
  return out;
}

// The functor's action on a morphism g of the subset category, applied to
// one member of h_set(h, g.dom()): postcompose with g.
inline Transformation h_map(const HFunctorP& h, const SetFunction& gmap,
                            const Transformation& a) {
  detail::require_same_ground(h.ground(), gmap.ground(), "h_map");
  detail::require(refines(h.kernel, a.kernel()) &&
                      (a.image_mask() & ~gmap.dom().mask()) == 0,
                  "h_map argument outside the functor's value set");
  GroundSet g = h.ground();
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(g.n));
  for (int x = 1; x <= g.n; ++x) images.push_back(gmap.apply(a.apply(x)));
  return Transformation(g, images);
}

// A natural transformation between subset-side functors, carried by the
// unique transformation w that is constant on the target kernel's blocks and
// lands in the block-minima cross-section of the source kernel.  Its
// component at any subset is a |-> w;a.
class NatTransformP {
 public:
  NatTransformP(HFunctorP source, HFunctorP target, Transformation w)
      : source_(std::move(source)),
        target_(std::move(target)),
        w_(std::move(w)) {
    detail::require_same_ground(source_.ground(), target_.ground(),
                                "NatTransformP");
    detail::require_same_ground(source_.ground(), w_.ground(), "NatTransformP");
    for (int b = 0; b < target_.kernel.num_blocks(); ++b) {
      int value = w_.apply(target_.kernel.block_min(b));
      for (int x : target_.kernel.block_members(b)) {
        detail::require(w_.apply(x) == value,
                        "carrier not constant on target kernel blocks");
      }
    }
    std::uint32_t cross = 0;
    for (int b = 0; b < source_.kernel.num_blocks(); ++b)
      cross |= 1u << (source_.kernel.block_min(b) - 1);
    detail::require((w_.image_mask() & ~cross) == 0,
                    "carrier image off the source cross-section");
  }

  GroundSet ground() const { return w_.ground(); }
  const HFunctorP& source() const { return source_; }
  const HFunctorP& target() const { return target_; }
  const Transformation& w() const { return w_; }

  bool operator==(const NatTransformP& other) const {
    return source_ == other.source_ && target_ == other.target_ &&
           w_ == other.w_;
  }

 private:
  HFunctorP source_;
  HFunctorP target_;
  Transformation w_;
};

inline Transformation nat_apply(const NatTransformP& t, const SubsetObject& c,
                                const Transformation& a) {
  detail::require(refines(t.source().kernel, a.kernel()) &&
                      (a.image_mask() & ~c.mask()) == 0,
                  "nat_apply argument outside the source value set");
  return compose(t.w(), a);
}

// All natural transformations between two subset-side functors: one for each
// function from target kernel blocks to source kernel block minima.
inline std::vector<NatTransformP> enumerate_nat_transforms(
    const HFunctorP& source, const HFunctorP& target) {
  detail::require_same_ground(source.ground(), target.ground(),
                              "enumerate_nat_transforms");
  GroundSet g = source.ground();
  int base = source.kernel.num_blocks();
  std::vector<int> odo(static_cast<std::size_t>(target.kernel.num_blocks()), 0);
  std::vector<NatTransformP> out;
  for (;;) {
    std::vector<int> images(static_cast<std::size_t>(g.n));
    for (int x = 1; x <= g.n; ++x) {
      int block = odo[static_cast<std::size_t>(target.kernel.block_of(x))];
      images[static_cast<std::size_t>(x - 1)] = source.kernel.block_min(block);
    }
    out.emplace_back(source, target, Transformation(g, images));
    std::size_t i = odo.size();
    while (i > 0 && odo[i - 1] + 1 == base) odo[--i] = 0;
    if (i == 0) return out;
    ++odo[i - 1];
  }
}

// P: the subset category's dual into the partition category.  On objects it
// reads off the kernel; on morphisms it reads the carrier modulo the source
// kernel.
inline PartitionObject functor_P(const HFunctorP& h) {
  return PartitionObject(h.kernel);
}

inline BlockMapMorphism functor_P_map(const NatTransformP& t) {
  const SetPartition& ker_s = t.source().kernel;
  const SetPartition& ker_t = t.target().kernel;
  std::vector<int> eta;
  eta.reserve(static_cast<std::size_t>(ker_t.num_blocks()));
  for (int j = 0; j < ker_t.num_blocks(); ++j)
    eta.push_back(ker_s.block_of(t.w().apply(ker_t.block_min(j))));
  return BlockMapMorphism(PartitionObject(ker_s), PartitionObject(ker_t), eta);
}

// Q: the inverse direction, realizing a block map as the carrier that picks
// block minima.
inline HFunctorP functor_Q(const PartitionObject& p) { return HFunctorP(p.pi); }

inline NatTransformP functor_Q_map(const BlockMapMorphism& m) {
  GroundSet g = m.ground();
  const SetPartition& pi1 = m.dom().pi;
  const SetPartition& pi2 = m.cod().pi;
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(g.n));
  for (int x = 1; x <= g.n; ++x)
    images.push_back(pi1.block_min(m.eta(pi2.block_of(x))));
  return NatTransformP(HFunctorP(pi1), HFunctorP(pi2),
                       Transformation(g, images));
}

// R: the partition category's dual into the subset category.  A morphism of
// the dual is carried by a block map between the canonical idempotents'
// kernel objects, running against the functor arrow.
inline SubsetObject functor_R(const HFunctorPi& h) { return h.image; }

inline SetFunction functor_R_map(const HFunctorPi& source,
                                 const HFunctorPi& target,
                                 const BlockMapMorphism& m) {
  detail::require_same_ground(source.ground(), target.ground(), "functor_R_map");
  SetPartition ker_s = idempotent_onto(source.image).kernel();
  SetPartition ker_t = idempotent_onto(target.image).kernel();
  detail::require(m.dom() == PartitionObject(ker_t) &&
                      m.cod() == PartitionObject(ker_s),
                  "carrier must run from the target's kernel object to the source's");
  std::vector<int> images;
  for (int x : source.image.members()) {
    std::uint32_t hit =
        target.image.mask() & ker_t.block_mask(m.eta(ker_s.block_of(x)));
    images.push_back(std::countr_zero(hit) + 1);
  }
  return SetFunction(source.image, target.image, images);
}

// Exhaustive check that P and Q are mutually inverse isomorphisms, that the
// functor order matches the object order, and that R is bijective on
// hom-sets.
inline Report verify_dual_isomorphisms(GroundSet g) {
  detail::require(g.n <= 4, "dual verification sweep is sized for n <= 4");
  Report r;
  r.title = "dual equivalences (n=" + std::to_string(g.n) + ")";
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

  // Functor order, read off extensionally from value-set containment, must
  // match the partition object order under P.
  for (const SetPartition& pe : partitions) {
    HFunctorP he(pe);
    for (const SetPartition& pf : partitions) {
      HFunctorP hf(pf);
      bool contained = true;
      for (const SubsetObject& a : subsets) {
        std::vector<Transformation> se = h_set(he, a);
        std::vector<Transformation> sf = h_set(hf, a);
        if (!std::includes(sf.begin(), sf.end(), se.begin(), se.end(),
                           [](const Transformation& x, const Transformation& y) {
                             return x < y;
                           })) {
          contained = false;
          break;
        }
      }
      ++r.checks;
      if (contained != object_le(functor_P(he), functor_P(hf)))
        r.fail("order mismatch: " + pe.to_string() + " vs " + pf.to_string());
    }
  }

  // P and Q invert each other on hom-sets, and distinct transformations map
  // to distinct morphisms (full faithfulness).
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
      ++r.checks;
      std::vector<BlockMapMorphism> seen;
      bool ok = true;
      for (const NatTransformP& t : nats) {
        if (!(functor_Q_map(functor_P_map(t)) == t)) ok = false;
        BlockMapMorphism image = functor_P_map(t);
        for (const BlockMapMorphism& prev : seen) {
          if (prev == image) ok = false;
        }
        seen.push_back(image);
      }
      if (!ok || nats.size() != homs.size())
        r.fail("Q after P differs: " + pe.to_string() + " vs " + pf.to_string());
    }
  }

  // R is a bijection from each dual hom-set onto the subset hom-set.
  for (const SubsetObject& e : subsets) {
    HFunctorPi he(e);
    SetPartition ker_e = idempotent_onto(e).kernel();
    ++r.checks;
    if (!(functor_R_map(he, he, identity_pi(PartitionObject(ker_e))) ==
          identity_p(e)))
      r.fail("identity not preserved: " + e.to_string());
    for (const SubsetObject& f : subsets) {
      HFunctorPi hf(f);
      SetPartition ker_f = idempotent_onto(f).kernel();
      std::vector<SetFunction> images;
      for (const BlockMapMorphism& m : enumerate_block_maps(
               PartitionObject(ker_f), PartitionObject(ker_e))) {
        images.push_back(functor_R_map(he, hf, m));
      }
      ++r.checks;
      bool distinct = true;
      for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
          if (images[i] == images[j]) distinct = false;
        }
      }
      if (!distinct ||
          images.size() != enumerate_set_functions(e, f).size())
        r.fail("hom-sets not in bijection: " + e.to_string() + " to " +
               f.to_string());
    }
  }
  return r;
}

}  // namespace singx
