#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "singx/cayley.hpp"
#include "singx/foundation.hpp"
#include "singx/partition_category.hpp"
#include "singx/powerset_category.hpp"
#include "singx/report.hpp"

// Permutation-induced cross-connections between the partition and subset
// categories: the functor pair Gamma/Delta, their bifunctor value sets and
// morphism actions, the conjugation duality, linked pairs and the semigroup
// they form, the variant product, and the exhaustive search showing every
// cross-connection of this kind comes from a permutation.

namespace singx {

// Gamma moves a partition object to its preimage partition.
inline PartitionObject gamma_object(const Permutation& theta,
                                    const PartitionObject& p) {
  return PartitionObject(perm_preimage_partition(theta, p.pi));
}

// Morphisms transport by conjugating the carried block map: the image of
// eta: pi2 -> pi1 is the block map theta^{-1}(pi2) -> theta^{-1}(pi1) that
// follows theta forward, applies eta, and pulls back.
inline BlockMapMorphism gamma_morphism(const Permutation& theta,
                                       const BlockMapMorphism& m) {
  detail::require_same_ground(theta.ground(), m.ground(), "gamma_morphism");
  PartitionObject dom = gamma_object(theta, m.dom());
  PartitionObject cod = gamma_object(theta, m.cod());
  const Permutation inv = theta.inverse();
  std::vector<int> eta;
  eta.reserve(static_cast<std::size_t>(cod.pi.num_blocks()));
  for (int j = 0; j < cod.pi.num_blocks(); ++j) {
    int k = m.cod().pi.block_of(theta.apply(cod.pi.block_min(j)));
    int i = m.eta(k);
    eta.push_back(dom.pi.block_of(inv.apply(m.dom().pi.block_min(i))));
  }
  return BlockMapMorphism(dom, cod, eta);
}

// Delta moves a subset elementwise and conjugates set functions.
inline SubsetObject delta_object(const Permutation& theta,
                                 const SubsetObject& a) {
  return perm_image_subset(theta, a);
}

inline SetFunction delta_morphism(const Permutation& theta,
                                  const SetFunction& f) {
  detail::require_same_ground(theta.ground(), f.ground(), "delta_morphism");
  SubsetObject dom = delta_object(theta, f.dom());
  SubsetObject cod = delta_object(theta, f.cod());
  const Permutation inv = theta.inverse();
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(dom.size()));
  for (int y : dom.members()) {
    images.push_back(theta.apply(f.apply(inv.apply(y))));
  }
  return SetFunction(dom, cod, images);
}

namespace detail {

// Membership in the bifunctor value sets at (a, p-bar).
inline bool gamma_member(const Permutation& theta, const SubsetObject& a,
                         const PartitionObject& p, const Transformation& t) {
  return t.is_singular() && (t.image_mask() & ~a.mask()) == 0 &&
         refines(perm_preimage_partition(theta, p.pi), t.kernel());
}

inline bool delta_member(const Permutation& theta, const SubsetObject& a,
                         const PartitionObject& p, const Transformation& t) {
  return t.is_singular() &&
         (t.image_mask() & ~perm_image_subset(theta, a).mask()) == 0 &&
         refines(p.pi, t.kernel());
}

}  // namespace detail

// Value set of the Gamma bifunctor: singular transformations with image
// inside a whose kernel is coarser than the moved partition.
inline std::vector<Transformation> gamma_set(const Permutation& theta,
                                             const SubsetObject& a,
                                             const PartitionObject& p) {
  detail::require_same_ground(theta.ground(), a.ground(), "gamma_set");
  detail::require_same_ground(theta.ground(), p.ground(), "gamma_set");
  SetPartition moved = perm_preimage_partition(theta, p.pi);
  std::vector<Transformation> out;
  for (const Transformation& t : enumerate_sing(a.ground())) {
    if ((t.image_mask() & ~a.mask()) == 0 && refines(moved, t.kernel())) {
      out.push_back(t);
    }
  }
  return out;
}

// Value set of the Delta bifunctor: here the subset moves instead.
inline std::vector<Transformation> delta_set(const Permutation& theta,
                                             const SubsetObject& a,
                                             const PartitionObject& p) {
  detail::require_same_ground(theta.ground(), a.ground(), "delta_set");
  detail::require_same_ground(theta.ground(), p.ground(), "delta_set");
  SubsetObject moved = perm_image_subset(theta, a);
  std::vector<Transformation> out;
  for (const Transformation& t : enumerate_sing(a.ground())) {
    if ((t.image_mask() & ~moved.mask()) == 0 && refines(p.pi, t.kernel())) {
      out.push_back(t);
    }
  }
  return out;
}

// A block map evaluated as a self-map of X landing on block minima of the
// morphism's domain partition. Composing a transformation that is constant
// on those blocks after this realization computes "eta then the
// transformation" pointwise.
inline Transformation realize_block_map(const BlockMapMorphism& m) {
  GroundSet g = m.ground();
  std::vector<int> img(static_cast<std::size_t>(g.n));
  for (int x = 1; x <= g.n; ++x) {
    img[static_cast<std::size_t>(x - 1)] =
        m.dom().pi.block_min(m.eta(m.cod().pi.block_of(x)));
  }
  return Transformation(g, img);
}

// The duality: conjugation, restricted to the Gamma value set at (a, p-bar).
inline Transformation chi(const Permutation& theta, const SubsetObject& a,
                          const PartitionObject& p, const Transformation& t) {
  detail::require(detail::gamma_member(theta, a, p, t),
                  "chi needs a member of the Gamma value set");
  return conjugate(theta, t);
}

// Morphism action of the Gamma bifunctor along (f, eta*): realize the moved
// block map, precompose, postcompose with f.
inline Transformation gamma_action(const Permutation& theta,
                                   const SetFunction& f,
                                   const BlockMapMorphism& m,
                                   const Transformation& t) {
  detail::require(detail::gamma_member(theta, f.dom(), m.dom(), t),
                  "gamma_action needs a member of the value set at the "
                  "morphism pair's source");
  Transformation h = realize_block_map(gamma_morphism(theta, m));
  GroundSet g = t.ground();
  std::vector<int> img(static_cast<std::size_t>(g.n));
  for (int x = 1; x <= g.n; ++x) {
    img[static_cast<std::size_t>(x - 1)] = f.apply(t.apply(h.apply(x)));
  }
  return Transformation(g, img);
}

// Morphism action of the Delta bifunctor: the block map acts as given and
// the set function acts through its Delta image.
inline Transformation delta_action(const Permutation& theta,
                                   const SetFunction& f,
                                   const BlockMapMorphism& m,
                                   const Transformation& t) {
  detail::require(detail::delta_member(theta, f.dom(), m.dom(), t),
                  "delta_action needs a member of the value set at the "
                  "morphism pair's source");
  Transformation h = realize_block_map(m);
  SetFunction moved = delta_morphism(theta, f);
  GroundSet g = t.ground();
  std::vector<int> img(static_cast<std::size_t>(g.n));
  for (int x = 1; x <= g.n; ++x) {
    img[static_cast<std::size_t>(x - 1)] = moved.apply(t.apply(h.apply(x)));
  }
  return Transformation(g, img);
}

namespace detail {

inline std::vector<Transformation> sorted_union_over_objects(
    GroundSet g, const std::function<std::vector<Transformation>(
                     const SubsetObject&, const PartitionObject&)>& value_set) {
  require(g.n <= 4, "bifunctor unions are enumerated for n <= 4 only");
  std::vector<Transformation> out;
  for (const SetPartition& p : enumerate_partitions(g)) {
    PartitionObject po(p);
    for (const SubsetObject& a : enumerate_subsets(g)) {
      for (const Transformation& t : value_set(a, po)) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

// Unions of the value sets over every object pair. Both come out equal to
// the whole singular part, which is what makes the semigroup below a
// sub-direct product of two copies of it.
inline std::vector<Transformation> u_gamma(const Permutation& theta) {
  return detail::sorted_union_over_objects(
      theta.ground(), [&](const SubsetObject& a, const PartitionObject& p) {
        return gamma_set(theta, a, p);
      });
}

inline std::vector<Transformation> u_delta(const Permutation& theta) {
  return detail::sorted_union_over_objects(
      theta.ground(), [&](const SubsetObject& a, const PartitionObject& p) {
        return delta_set(theta, a, p);
      });
}

// A cone pair matched under the duality: the second component is always the
// conjugate of the first.
struct LinkedPair {
  Transformation a;
  Transformation b;

  // "(1,1,2 ~ 3,2,2)"
  std::string to_string() const {
    return "(" + a.to_string() + " ~ " + b.to_string() + ")";
  }

  bool operator==(const LinkedPair& other) const {
    return a == other.a && b == other.b;
  }
  bool operator!=(const LinkedPair& other) const { return !(*this == other); }
  bool operator<(const LinkedPair& other) const {
    if (!(a == other.a)) return a < other.a;
    return b < other.b;
  }
};

struct CrossConnectionSemigroup {
  Permutation theta;
  std::vector<LinkedPair> pairs;
  CayleyTable table;
};

// The semigroup of linked pairs under (a, b)(a', b') = (aa', conjugate of
// aa'). The roster follows the first components in enumeration order, so it
// lines up position by position with the singular table.
inline CrossConnectionSemigroup build_s_gamma(const Permutation& theta) {
  GroundSet g = theta.ground();
  detail::require(g.n <= 4,
                  "cross-connection semigroup is tabulated for n <= 4 only");
  std::vector<Transformation> sing = enumerate_sing(g);
  TransformationIndex idx(g, sing);
  std::vector<LinkedPair> pairs;
  pairs.reserve(sing.size());
  for (const Transformation& a : sing) {
    pairs.push_back(LinkedPair{a, conjugate(theta, a)});
  }
  CayleyTable table = make_cayley_table(
      pairs, [](const LinkedPair& p) { return p.to_string(); },
      [&](const LinkedPair& p, const LinkedPair& q) {
        Transformation prod = compose(p.a, q.a);
        return LinkedPair{prod, conjugate(theta, prod)};
      },
      [&](const LinkedPair& p) { return idx.at(p.a); });
  return CrossConnectionSemigroup{theta, std::move(pairs), std::move(table)};
}

// psi: a -> (a, conjugate of a) from the singular semigroup onto the linked
// pairs; on roster positions it is the identity, so the check is explicit
// rather than a search.
inline Report verify_s_gamma(const CrossConnectionSemigroup& s) {
  Report r;
  r.title = "linked pairs vs the singular semigroup (theta=" +
            s.theta.to_string() + ")";
  for (const LinkedPair& p : s.pairs) {
    ++r.checks;
    if (p.b != conjugate(s.theta, p.a)) r.fail(p.to_string());
  }
  CayleyTable sing = build_sing_table(s.theta.ground());
  std::vector<std::uint32_t> psi(sing.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    psi[i] = static_cast<std::uint32_t>(i);
  }
  r.merge(verify_iso(sing, s.table, psi));
  return r;
}

// The variant product a * b = a theta b on singular transformations.
inline Transformation variant_product(const Permutation& theta,
                                      const Transformation& a,
                                      const Transformation& b) {
  detail::require_same_ground(theta.ground(), a.ground(), "variant_product");
  detail::require_same_ground(theta.ground(), b.ground(), "variant_product");
  detail::require(a.is_singular() && b.is_singular(),
                  "variant product is defined on singular transformations");
  GroundSet g = a.ground();
  std::vector<int> img(static_cast<std::size_t>(g.n));
  for (int x = 1; x <= g.n; ++x) {
    img[static_cast<std::size_t>(x - 1)] = b.apply(theta.apply(a.apply(x)));
  }
  return Transformation(g, img);
}

// phi: a -> (theta a, a theta) carries the variant product to the linked
// pair product; checked componentwise over every product, plus bijectivity
// onto the pair roster.
inline Report verify_variant_iso(const Permutation& theta) {
  GroundSet g = theta.ground();
  detail::require(g.n <= 4, "variant isomorphism is checked for n <= 4 only");
  Report r;
  r.title = "variant product vs linked pairs (theta=" + theta.to_string() + ")";
  std::vector<Transformation> sing = enumerate_sing(g);
  Transformation th = theta.as_transformation();
  auto phi_first = [&](const Transformation& a) { return compose(th, a); };
  auto phi_second = [&](const Transformation& a) { return compose(a, th); };
  std::vector<Transformation> firsts;
  firsts.reserve(sing.size());
  for (const Transformation& a : sing) {
    ++r.checks;
    if (phi_second(a) != conjugate(theta, phi_first(a))) {
      r.fail("phi(" + a.to_string() + ") is not a linked pair");
    }
    firsts.push_back(phi_first(a));
  }
  std::sort(firsts.begin(), firsts.end());
  ++r.checks;
  if (firsts != sing) r.fail("phi is not a bijection onto the pair roster");
  for (const Transformation& a : sing) {
    for (const Transformation& b : sing) {
      Transformation va = variant_product(theta, a, b);
      ++r.checks;
      if (phi_first(va) != compose(phi_first(a), phi_first(b)) ||
          phi_second(va) !=
              conjugate(theta, compose(phi_first(a), phi_first(b)))) {
        r.fail(a.to_string() + " * " + b.to_string());
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Local isomorphism checker. Candidates are endofunctors given
// extensionally: object images indexed in step with the canonical object
// enumeration, plus a morphism action.

struct PartitionFunctorData {
  std::vector<PartitionObject> object_images;
  std::function<BlockMapMorphism(const BlockMapMorphism&)> morphism_action;
};

struct SubsetFunctorData {
  std::vector<SubsetObject> object_images;
  std::function<SetFunction(const SetFunction&)> morphism_action;
};

// Gamma and Delta in extensional form, for the checker and the search.
inline PartitionFunctorData gamma_functor_data(const Permutation& theta) {
  PartitionFunctorData fd;
  for (const SetPartition& p : enumerate_partitions(theta.ground())) {
    fd.object_images.push_back(gamma_object(theta, PartitionObject(p)));
  }
  fd.morphism_action = [theta](const BlockMapMorphism& m) {
    return gamma_morphism(theta, m);
  };
  return fd;
}

inline SubsetFunctorData delta_functor_data(const Permutation& theta) {
  SubsetFunctorData fd;
  for (const SubsetObject& a : enumerate_subsets(theta.ground())) {
    fd.object_images.push_back(delta_object(theta, a));
  }
  fd.morphism_action = [theta](const SetFunction& f) {
    return delta_morphism(theta, f);
  };
  return fd;
}

// Checks the candidate is inclusion preserving, fully faithful, restricts to
// an isomorphism on every principal ideal, and leaves every object on the
// opposite side covered (the cross-connection condition). Structural garbage
// throws; an honest mathematical failure returns false.
inline bool is_local_isomorphism(GroundSet g, const PartitionFunctorData& fd) {
  std::vector<SetPartition> parts = enumerate_partitions(g);
  detail::require(fd.object_images.size() == parts.size(),
                  "object map must cover every partition object");
  detail::require(static_cast<bool>(fd.morphism_action),
                  "candidate needs a morphism action");
  for (const PartitionObject& o : fd.object_images) {
    detail::require_same_ground(g, o.ground(), "is_local_isomorphism");
  }
  std::vector<PartitionObject> objects;
  objects.reserve(parts.size());
  for (const SetPartition& p : parts) objects.emplace_back(p);

  // Inclusion preservation, including the order embedding itself.
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t j = 0; j < objects.size(); ++j) {
      if (!object_le(objects[i], objects[j])) continue;
      const PartitionObject& fi = fd.object_images[i];
      const PartitionObject& fj = fd.object_images[j];
      if (!object_le(fi, fj)) return false;
      BlockMapMorphism m = fd.morphism_action(inclusion_pi(objects[i], objects[j]));
      if (m.dom() != fi || m.cod() != fj) return false;
      if (!(m == inclusion_pi(fi, fj))) return false;
    }
  }

  // Full faithfulness on every hom-set.
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t j = 0; j < objects.size(); ++j) {
      const PartitionObject& fi = fd.object_images[i];
      const PartitionObject& fj = fd.object_images[j];
      std::vector<BlockMapMorphism> images;
      for (const BlockMapMorphism& m :
           enumerate_block_maps(objects[i], objects[j])) {
        BlockMapMorphism fm = fd.morphism_action(m);
        if (fm.dom() != fi || fm.cod() != fj) return false;
        images.push_back(fm);
      }
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        return false;
      }
      if (images.size() != enumerate_block_maps(fi, fj).size()) return false;
    }
  }

  // Principal ideals map isomorphically onto principal ideals.
  for (std::size_t c = 0; c < objects.size(); ++c) {
    std::vector<PartitionObject> mapped;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (object_le(objects[i], objects[c])) mapped.push_back(fd.object_images[i]);
    }
    std::vector<PartitionObject> target;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (object_le(objects[i], fd.object_images[c])) target.push_back(objects[i]);
    }
    std::sort(mapped.begin(), mapped.end());
    if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end()) {
      return false;
    }
    std::sort(target.begin(), target.end());
    if (mapped != target) return false;
  }

  // Every subset is a cross-section of some image partition.
  for (const SubsetObject& a : enumerate_subsets(g)) {
    bool covered = false;
    for (const PartitionObject& o : fd.object_images) {
      if (o.pi.is_cross_section(a)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

inline bool is_local_isomorphism(GroundSet g, const SubsetFunctorData& fd) {
  std::vector<SubsetObject> objects = enumerate_subsets(g);
  detail::require(fd.object_images.size() == objects.size(),
                  "object map must cover every subset object");
  detail::require(static_cast<bool>(fd.morphism_action),
                  "candidate needs a morphism action");
  for (const SubsetObject& o : fd.object_images) {
    detail::require_same_ground(g, o.ground(), "is_local_isomorphism");
  }

  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t j = 0; j < objects.size(); ++j) {
      if (!objects[i].subset_of(objects[j])) continue;
      const SubsetObject& fi = fd.object_images[i];
      const SubsetObject& fj = fd.object_images[j];
      if (!fi.subset_of(fj)) return false;
      SetFunction m = fd.morphism_action(inclusion_p(objects[i], objects[j]));
      if (!(m.dom() == fi) || !(m.cod() == fj)) return false;
      if (!(m == inclusion_p(fi, fj))) return false;
    }
  }

  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t j = 0; j < objects.size(); ++j) {
      const SubsetObject& fi = fd.object_images[i];
      const SubsetObject& fj = fd.object_images[j];
      std::vector<SetFunction> images;
      for (const SetFunction& m : enumerate_set_functions(objects[i], objects[j])) {
        SetFunction fm = fd.morphism_action(m);
        if (!(fm.dom() == fi) || !(fm.cod() == fj)) return false;
        images.push_back(fm);
      }
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        return false;
      }
      if (images.size() != enumerate_set_functions(fi, fj).size()) return false;
    }
  }

  for (std::size_t c = 0; c < objects.size(); ++c) {
    std::vector<SubsetObject> mapped;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (objects[i].subset_of(objects[c])) mapped.push_back(fd.object_images[i]);
    }
    std::vector<SubsetObject> target;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (objects[i].subset_of(fd.object_images[c])) target.push_back(objects[i]);
    }
    std::sort(mapped.begin(), mapped.end());
    if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end()) {
      return false;
    }
    std::sort(target.begin(), target.end());
    if (mapped != target) return false;
  }

  // Every partition has some image subset as a cross-section.
  for (const SetPartition& p : enumerate_partitions(g)) {
    bool covered = false;
    for (const SubsetObject& o : fd.object_images) {
      if (p.is_cross_section(o)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

// Exhaustive classification search. The object map of a candidate dual is
// pinned down on singletons (the principal ideal of a singleton has exactly
// one object, so its image must be a singleton too); each of the n^n
// assignments proposes a map theta. Non-injective proposals die on the
// two-element subsets, non-onto ones on the co-singleton partitions, and
// the survivors are rechecked as full functor pairs. The result is exactly
// the permutations.
inline std::vector<Permutation> enumerate_cross_connections(GroundSet g) {
  detail::require(g.n <= 5,
                  "cross-connection search is exhaustive for n <= 5 only");
  std::vector<Permutation> out;
  std::vector<int> img(static_cast<std::size_t>(g.n), 1);
  for (;;) {
    std::uint32_t seen = 0;
    bool injective = true;
    for (int v : img) {
      if ((seen & (1u << (v - 1))) != 0) injective = false;
      seen |= 1u << (v - 1);
    }
    bool onto = seen == g.full_mask();
    if (injective && onto) {
      Permutation theta(g, img);
      if (is_local_isomorphism(g, delta_functor_data(theta)) &&
          is_local_isomorphism(g, gamma_functor_data(theta))) {
        out.push_back(theta);
      }
    }
    std::size_t i = img.size();
    for (;;) {
      if (i-- == 0) return out;
      if (img[i] < g.n) {
        ++img[i];
        std::fill(img.begin() + static_cast<std::ptrdiff_t>(i) + 1, img.end(), 1);
        break;
      }
      img[i] = 1;
    }
  }
}

}  // namespace singx
