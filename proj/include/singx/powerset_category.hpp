#pragma once

// The category of nonempty proper subsets of the ground set.  Objects are
// SubsetObject values, morphisms are arbitrary functions between them, and
// every morphism factors as retraction ; bijection ; inclusion.

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "singx/foundation.hpp"
#include "singx/report.hpp"

namespace singx {

// A function between two subset objects, stored by the image of each domain
// element in ascending order.  Equality is extensional on (dom, cod, images).
class SetFunction {
 public:
  SetFunction(SubsetObject dom, SubsetObject cod, const std::vector<int>& images)
      : dom_(dom), cod_(cod) {
    detail::require_same_ground(dom.ground(), cod.ground(), "SetFunction");
    detail::require(images.size() == static_cast<std::size_t>(dom.size()),
                    "set function needs one image per domain element");
    images_.reserve(images.size());
    for (int y : images) {
      detail::require(y >= 1 && y <= dom.ground().n && cod.contains(y),
                      "set function image outside codomain");
      images_.push_back(static_cast<std::uint8_t>(y));
    }
  }

  GroundSet ground() const { return dom_.ground(); }
  const SubsetObject& dom() const { return dom_; }
  const SubsetObject& cod() const { return cod_; }

  int apply(int x) const {
    detail::require(dom_.contains(x), "element outside domain");
    std::uint32_t below = dom_.mask() & ((1u << (x - 1)) - 1u);
    return images_[static_cast<std::size_t>(std::popcount(below))];
  }

  std::uint32_t image_mask() const {
    std::uint32_t m = 0;
    for (std::uint8_t y : images_) m |= 1u << (y - 1);
    return m;
  }

  SubsetObject image() const { return SubsetObject(ground(), image_mask()); }

  bool is_inclusion() const {
    if (!dom_.subset_of(cod_)) return false;
    for (int x : dom_.members()) {
      if (apply(x) != x) return false;
    }
    return true;
  }

  bool is_bijective() const {
    return static_cast<int>(std::popcount(image_mask())) == dom_.size() &&
           image_mask() == cod_.mask();
  }

  // "f: {1,2,3}->{1,2,4} [1,1,4]"
  std::string to_string() const {
    std::string s = "f: " + dom_.to_string() + "->" + cod_.to_string() + " [";
    bool first = true;
    for (std::uint8_t y : images_) {
      if (!first) s += ',';
      first = false;
      s += std::to_string(static_cast<int>(y));
    }
    return s + "]";
  }

  bool operator==(const SetFunction& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && images_ == other.images_;
  }

  bool operator<(const SetFunction& other) const {
    if (dom_ != other.dom_) return dom_ < other.dom_;
    if (cod_ != other.cod_) return cod_ < other.cod_;
    return images_ < other.images_;
  }

 private:
  SubsetObject dom_;
  SubsetObject cod_;
  std::vector<std::uint8_t> images_;
};

inline SetFunction compose(const SetFunction& f, const SetFunction& g) {
  detail::require(f.cod() == g.dom(),
                  "compose needs cod of the first to equal dom of the second");
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(f.dom().size()));
  for (int x : f.dom().members()) images.push_back(g.apply(f.apply(x)));
  return SetFunction(f.dom(), g.cod(), images);
}

inline SetFunction identity_p(SubsetObject a) {
  return SetFunction(a, a, a.members());
}

// The distinguished embedding of A into B.
inline SetFunction inclusion_p(SubsetObject a, SubsetObject b) {
  detail::require(a.subset_of(b), "inclusion needs the domain inside the codomain");
  return SetFunction(a, b, a.members());
}

// The distinguished left inverse of inclusion_p(a, b): fixes A pointwise and
// sends everything in B minus A to min(A).
inline SetFunction retraction_p(SubsetObject b, SubsetObject a) {
  detail::require(a.subset_of(b), "retraction needs the target inside the source");
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(b.size()));
  for (int x : b.members()) images.push_back(a.contains(x) ? x : a.min());
  return SetFunction(b, a, images);
}

// A full transformation cut down to a subset of its domain; the codomain is
// the transformation's global image.  This is how transformations give rise
// to morphisms of the category.
inline SetFunction restrict_transformation(const Transformation& a,
                                           SubsetObject c) {
  detail::require_same_ground(a.ground(), c.ground(), "restrict_transformation");
  detail::require(a.is_singular(), "restriction target must be a proper image");
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(c.size()));
  for (int x : c.members()) images.push_back(a.apply(x));
  return SetFunction(c, a.image(), images);
}

// All |B|^|A| functions from A to B, ordered by image tuples over ascending
// members of B.
inline std::vector<SetFunction> enumerate_set_functions(SubsetObject a,
                                                        SubsetObject b) {
  detail::require_same_ground(a.ground(), b.ground(), "enumerate_set_functions");
  std::vector<int> targets = b.members();
  std::vector<std::size_t> odo(static_cast<std::size_t>(a.size()), 0);
  std::vector<SetFunction> out;
  for (;;) {
    std::vector<int> images;
    images.reserve(odo.size());
    for (std::size_t pos : odo) images.push_back(targets[pos]);
    out.emplace_back(a, b, images);
    std::size_t i = odo.size();
    while (i > 0 && odo[i - 1] + 1 == targets.size()) odo[--i] = 0;
    if (i == 0) return out;
    ++odo[i - 1];
  }
}

inline SetFunction parse_set_function(GroundSet g, std::string_view text) {
  std::string s = detail::strip_spaces(text);
  detail::require(s.rfind("f:", 0) == 0, "set function literal must start with 'f:'");
  std::size_t arrow = s.find("->", 2);
  detail::require(arrow != std::string::npos, "set function literal needs '->'");
  std::size_t lb = s.find('[', arrow);
  detail::require(lb != std::string::npos && s.back() == ']',
                  "set function literal needs a bracketed image list");
  SubsetObject dom = parse_subset(g, s.substr(2, arrow - 2));
  SubsetObject cod = parse_subset(g, s.substr(arrow + 2, lb - arrow - 2));
  std::vector<int> images = detail::parse_int_list(
      std::string_view(s).substr(lb + 1, s.size() - lb - 2), "set function literal");
  return SetFunction(dom, cod, images);
}

// f = q ; u ; j with q a retraction onto a cross-section of the kernel of f,
// u a bijection onto the image, and j the inclusion of the image into the
// codomain.
struct NormalFactorizationP {
  SetFunction q;
  SetFunction u;
  SetFunction j;

  // The epimorphism component q ; u, surjective onto Im f.
  SetFunction epi() const { return compose(q, u); }

  SetFunction composite() const { return compose(epi(), j); }
};

inline NormalFactorizationP normal_factorize_p(const SetFunction& f) {
  GroundSet g = f.ground();
  // A' lists, for each image value, the least domain element mapping to it.
  std::uint32_t a_mask = 0;
  for (int x : f.dom().members()) {
    int y = f.apply(x);
    bool seen = false;
    for (int x2 : f.dom().members()) {
      if (x2 >= x) break;
      if (f.apply(x2) == y) {
        seen = true;
        break;
      }
    }
    if (!seen) a_mask |= 1u << (x - 1);
  }
  SubsetObject a_prime(g, a_mask);
  SubsetObject b_prime = f.image();

  std::vector<int> q_images;
  for (int x : f.dom().members()) {
    int y = f.apply(x);
    for (int x2 : f.dom().members()) {
      if (f.apply(x2) == y) {
        q_images.push_back(x2);
        break;
      }
    }
  }
  SetFunction q(f.dom(), a_prime, q_images);

  std::vector<int> u_images;
  for (int x : a_prime.members()) u_images.push_back(f.apply(x));
  SetFunction u(a_prime, b_prime, u_images);

  return NormalFactorizationP{q, u, inclusion_p(b_prime, f.cod())};
}

// Exhaustive axiom check over all objects of size at most size_cap: every
// morphism factors and recomposes, every inclusion splits against its
// retraction, and the canonical idempotent onto each object restricts to the
// identity there.
inline Report verify_normal_category_p(GroundSet g, int size_cap = 3) {
  Report r;
  r.title = "subset category axioms (n=" + std::to_string(g.n) + ")";
  std::vector<SubsetObject> objects;
  for (const SubsetObject& a : enumerate_subsets(g)) {
    if (a.size() <= size_cap) objects.push_back(a);
  }
  for (const SubsetObject& a : objects) {
    for (const SubsetObject& b : objects) {
      for (const SetFunction& f : enumerate_set_functions(a, b)) {
        NormalFactorizationP nf = normal_factorize_p(f);
        ++r.checks;
        if (!(nf.composite() == f)) r.fail("no recomposition: " + f.to_string());
        ++r.checks;
        if (!nf.u.is_bijective()) r.fail("middle not bijective: " + f.to_string());
        ++r.checks;
        if (!nf.j.is_inclusion() || !(nf.j.dom() == f.image()))
          r.fail("tail not the image inclusion: " + f.to_string());
        ++r.checks;
        if (!(compose(inclusion_p(nf.q.cod(), a), nf.q) ==
              identity_p(nf.q.cod())))
          r.fail("head not a retraction: " + f.to_string());
      }
      if (a.subset_of(b)) {
        ++r.checks;
        if (!(compose(inclusion_p(a, b), retraction_p(b, a)) == identity_p(a)))
          r.fail("inclusion does not split: " + a.to_string() + " in " +
                 b.to_string());
      }
    }
  }
  for (const SubsetObject& d : objects) {
    Transformation e = idempotent_onto(d);
    ++r.checks;
    if (!(restrict_transformation(e, d) == identity_p(d)))
      r.fail("idempotent not identity on its image: " + d.to_string());
  }
  return r;
}

}  // namespace singx
