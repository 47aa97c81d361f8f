#pragma once

// The category of non-identity partitions of the ground set.  An object
// stands for the set of all functions from the partition's blocks into the
// ground set, so a block map eta from the codomain's partition to the
// domain's partition carries a morphism in the direction opposite to eta.

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "singx/foundation.hpp"
#include "singx/report.hpp"

namespace singx {

// The object attached to a non-identity partition pi: the set of all
// functions pi -> X, represented by pi itself.
struct PartitionObject {
  SetPartition pi;

  explicit PartitionObject(SetPartition p) : pi(std::move(p)) {}

  GroundSet ground() const { return pi.ground(); }
  std::string to_string() const { return pi.to_string(); }

  bool operator==(const PartitionObject& other) const { return pi == other.pi; }
  bool operator!=(const PartitionObject& other) const { return !(pi == other.pi); }
  bool operator<(const PartitionObject& other) const { return pi < other.pi; }
};

// Objects order opposite to refinement: coarsening the partition enlarges
// every block's function set, so the coarsest partition gives the least
// object.
inline bool object_le(const PartitionObject& p1, const PartitionObject& p2) {
  return refines(p2.pi, p1.pi);
}

// A morphism between partition objects.  The stored block map eta sends each
// block of cod's partition to a block of dom's partition (by index), and acts
// on a function alpha in the domain object by precomposition.
class BlockMapMorphism {
 public:
  BlockMapMorphism(PartitionObject dom, PartitionObject cod,
                   const std::vector<int>& eta)
      : dom_(std::move(dom)), cod_(std::move(cod)) {
    detail::require_same_ground(dom_.ground(), cod_.ground(), "BlockMapMorphism");
    detail::require(eta.size() == static_cast<std::size_t>(cod_.pi.num_blocks()),
                    "block map needs one entry per codomain block");
    eta_.reserve(eta.size());
    for (int b : eta) {
      detail::require(b >= 0 && b < dom_.pi.num_blocks(),
                      "block map entry outside domain partition");
      eta_.push_back(static_cast<std::uint8_t>(b));
    }
  }

  GroundSet ground() const { return dom_.ground(); }
  const PartitionObject& dom() const { return dom_; }
  const PartitionObject& cod() const { return cod_; }

  // Index into dom's partition for a block index of cod's partition.
  int eta(int cod_block) const {
    detail::require(cod_block >= 0 && cod_block < cod_.pi.num_blocks(),
                    "codomain block index out of range");
    return eta_[static_cast<std::size_t>(cod_block)];
  }

  bool is_identity() const {
    if (!(dom_ == cod_)) return false;
    for (std::size_t j = 0; j < eta_.size(); ++j) {
      if (eta_[j] != j) return false;
    }
    return true;
  }

  // The action on one element of the domain object: alpha assigns a ground
  // element to each dom-partition block, and the image assigns
  // alpha[eta(j)] to the j-th cod-partition block.
  std::vector<int> act(const std::vector<int>& alpha) const {
    detail::require(alpha.size() == static_cast<std::size_t>(dom_.pi.num_blocks()),
                    "act needs one value per domain block");
    std::vector<int> out;
    out.reserve(eta_.size());
    for (std::uint8_t b : eta_) out.push_back(alpha[b]);
    return out;
  }

  // "eta: 12|34 -> 13|2|4 [0,0]": the block map written as an arrow from
  // cod's partition to dom's partition, entry j naming the image of the j-th
  // cod block.
  std::string to_string() const {
    std::string s = "eta: " + cod_.to_string() + " -> " + dom_.to_string() + " [";
    bool first = true;
    for (std::uint8_t b : eta_) {
      if (!first) s += ',';
      first = false;
      s += std::to_string(static_cast<int>(b));
    }
    return s + "]";
  }

  bool operator==(const BlockMapMorphism& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && eta_ == other.eta_;
  }

  bool operator<(const BlockMapMorphism& other) const {
    if (!(dom_ == other.dom_)) return dom_ < other.dom_;
    if (!(cod_ == other.cod_)) return cod_ < other.cod_;
    return eta_ < other.eta_;
  }

 private:
  PartitionObject dom_;
  PartitionObject cod_;
  std::vector<std::uint8_t> eta_;
};

// Block maps compose the other way round: the composite's map runs from
// m2's codomain partition through m2's map into m1's domain partition.
inline BlockMapMorphism compose_pi(const BlockMapMorphism& m1,
                                   const BlockMapMorphism& m2) {
  detail::require(m1.cod() == m2.dom(),
                  "compose needs cod of the first to equal dom of the second");
  std::vector<int> eta;
  eta.reserve(static_cast<std::size_t>(m2.cod().pi.num_blocks()));
  for (int k = 0; k < m2.cod().pi.num_blocks(); ++k)
    eta.push_back(m1.eta(m2.eta(k)));
  return BlockMapMorphism(m1.dom(), m2.cod(), eta);
}

inline BlockMapMorphism identity_pi(const PartitionObject& p) {
  std::vector<int> eta(static_cast<std::size_t>(p.pi.num_blocks()));
  for (std::size_t j = 0; j < eta.size(); ++j) eta[j] = static_cast<int>(j);
  return BlockMapMorphism(p, p, eta);
}

// The distinguished inclusion for p1 <= p2: each block of p2's partition goes
// to the block of p1's partition containing it.
inline BlockMapMorphism inclusion_pi(const PartitionObject& p1,
                                     const PartitionObject& p2) {
  detail::require(object_le(p1, p2), "inclusion needs the smaller object first");
  std::vector<int> nu;
  nu.reserve(static_cast<std::size_t>(p2.pi.num_blocks()));
  for (int j = 0; j < p2.pi.num_blocks(); ++j)
    nu.push_back(p1.pi.block_of(p2.pi.block_min(j)));
  return BlockMapMorphism(p1, p2, nu);
}

// The distinguished left inverse: each block of p1's partition goes to its
// sub-block in p2's partition containing the least element.
inline BlockMapMorphism retraction_pi(const PartitionObject& p2,
                                      const PartitionObject& p1) {
  detail::require(object_le(p1, p2), "retraction needs the larger object first");
  std::vector<int> zeta;
  zeta.reserve(static_cast<std::size_t>(p1.pi.num_blocks()));
  for (int i = 0; i < p1.pi.num_blocks(); ++i)
    zeta.push_back(p2.pi.block_of(p1.pi.block_min(i)));
  return BlockMapMorphism(p2, p1, zeta);
}

// All |dom blocks| ^ |cod blocks| morphisms from dom to cod, ordered by their
// block-map tuples.
inline std::vector<BlockMapMorphism> enumerate_block_maps(
    const PartitionObject& dom, const PartitionObject& cod) {
  detail::require_same_ground(dom.ground(), cod.ground(), "enumerate_block_maps");
  int base = dom.pi.num_blocks();
  std::vector<int> odo(static_cast<std::size_t>(cod.pi.num_blocks()), 0);
  std::vector<BlockMapMorphism> out;
  for (;;) {
    out.emplace_back(dom, cod, odo);
    std::size_t i = odo.size();
    while (i > 0 && odo[i - 1] + 1 == base) odo[--i] = 0;
    if (i == 0) return out;
    ++odo[i - 1];
  }
}

inline BlockMapMorphism parse_block_map(GroundSet g, std::string_view text) {
  std::string s = detail::strip_spaces(text);
  detail::require(s.rfind("eta:", 0) == 0, "block map literal must start with 'eta:'");
  std::size_t arrow = s.find("->", 4);
  detail::require(arrow != std::string::npos, "block map literal needs '->'");
  std::size_t lb = s.find('[', arrow);
  detail::require(lb != std::string::npos && s.back() == ']',
                  "block map literal needs a bracketed entry list");
  PartitionObject cod(parse_partition(g, s.substr(4, arrow - 4)));
  PartitionObject dom(parse_partition(g, s.substr(arrow + 2, lb - arrow - 2)));
  std::vector<int> eta = detail::parse_int_list(
      std::string_view(s).substr(lb + 1, s.size() - lb - 2), "block map literal");
  return BlockMapMorphism(dom, cod, eta);
}

// eta* = zeta* u* nu* with zeta* a retraction, u* an isomorphism, and nu* an
// inclusion.  sigma fuses codomain blocks with equal images under eta; gamma
// glues everything outside eta's image onto the image block with the least
// minimum.
struct NormalFactorizationPi {
  BlockMapMorphism zeta_star;
  BlockMapMorphism u_star;
  BlockMapMorphism nu_star;
  SetPartition sigma;
  SetPartition gamma;

  // The epimorphism component zeta* u*.
  BlockMapMorphism epi() const { return compose_pi(zeta_star, u_star); }

  BlockMapMorphism composite() const { return compose_pi(epi(), nu_star); }
};

inline NormalFactorizationPi normal_factorize_pi(const BlockMapMorphism& m) {
  GroundSet g = m.ground();
  const SetPartition& pi1 = m.dom().pi;
  const SetPartition& pi2 = m.cod().pi;

  // sigma: x and y fuse when their pi2-blocks share an eta-image.
  std::vector<int> labels(static_cast<std::size_t>(g.n));
  for (int x = 1; x <= g.n; ++x)
    labels[static_cast<std::size_t>(x - 1)] = m.eta(pi2.block_of(x));
  SetPartition sigma = SetPartition::from_assignment(g, labels);

  std::uint32_t image_blocks = 0;
  for (int j = 0; j < pi2.num_blocks(); ++j) image_blocks |= 1u << m.eta(j);

  // a1: the image block with the least minimum, i.e. the least image index
  // since blocks are ordered by least element.
  int a1 = std::countr_zero(image_blocks);

  // B: everything in pi1-blocks outside the image, glued onto a1's block.
  std::uint32_t b_mask = 0;
  for (int i = 0; i < pi1.num_blocks(); ++i) {
    if (!((image_blocks >> i) & 1u)) b_mask |= pi1.block_mask(i);
  }
  std::vector<std::uint32_t> gamma_masks = {b_mask | pi1.block_mask(a1)};
  for (int i = 0; i < pi1.num_blocks(); ++i) {
    if (((image_blocks >> i) & 1u) && i != a1)
      gamma_masks.push_back(pi1.block_mask(i));
  }
  SetPartition gamma = SetPartition::from_block_masks(g, gamma_masks);

  PartitionObject sigma_bar(sigma);
  PartitionObject gamma_bar(gamma);

  // u: a sigma-block goes to the gamma-block holding its eta-image; the
  // fused block stands in for a1.
  std::vector<int> u(static_cast<std::size_t>(sigma.num_blocks()));
  for (int s = 0; s < sigma.num_blocks(); ++s) {
    int target = m.eta(pi2.block_of(sigma.block_min(s)));
    u[static_cast<std::size_t>(s)] = gamma.block_of(pi1.block_min(target));
  }

  // zeta: the glued gamma-block retracts onto a1, the rest are pi1-blocks.
  int glued = gamma.block_of(pi1.block_min(a1));
  std::vector<int> zeta(static_cast<std::size_t>(gamma.num_blocks()));
  for (int gi = 0; gi < gamma.num_blocks(); ++gi) {
    zeta[static_cast<std::size_t>(gi)] =
        gi == glued ? a1 : pi1.block_of(gamma.block_min(gi));
  }

  return NormalFactorizationPi{
      BlockMapMorphism(m.dom(), gamma_bar, zeta),
      BlockMapMorphism(gamma_bar, sigma_bar, u),
      inclusion_pi(sigma_bar, m.cod()),
      sigma,
      gamma};
}

// Exhaustive axiom check: every morphism factors and recomposes with the
// advertised shape, every inclusion splits, and the block-minima idempotent
// of each partition induces the identity at its own object.
inline Report verify_normal_category_pi(GroundSet g) {
  detail::require(g.n <= 4, "partition category sweep is sized for n <= 4");
  Report r;
  r.title = "partition category axioms (n=" + std::to_string(g.n) + ")";
  std::vector<PartitionObject> objects;
  for (const SetPartition& p : enumerate_partitions(g)) objects.emplace_back(p);
  for (const PartitionObject& p1 : objects) {
    for (const PartitionObject& p2 : objects) {
      for (const BlockMapMorphism& m : enumerate_block_maps(p1, p2)) {
        NormalFactorizationPi nf = normal_factorize_pi(m);
        ++r.checks;
        if (!(nf.composite() == m)) r.fail("no recomposition: " + m.to_string());
        ++r.checks;
        if (!refines(p2.pi, nf.sigma) || !refines(p1.pi, nf.gamma))
          r.fail("witness partitions not coarsenings: " + m.to_string());
        ++r.checks;
        std::uint32_t hit = 0;
        for (int s = 0; s < nf.sigma.num_blocks(); ++s)
          hit |= 1u << nf.u_star.eta(s);
        if (nf.sigma.num_blocks() != nf.gamma.num_blocks() ||
            std::popcount(hit) != nf.gamma.num_blocks())
          r.fail("middle not bijective: " + m.to_string());
        ++r.checks;
        if (!(nf.nu_star == inclusion_pi(PartitionObject(nf.sigma), p2)))
          r.fail("tail not the inclusion: " + m.to_string());
        ++r.checks;
        PartitionObject gamma_bar(nf.gamma);
        if (!(compose_pi(inclusion_pi(gamma_bar, p1), nf.zeta_star) ==
              identity_pi(gamma_bar)))
          r.fail("head not a retraction: " + m.to_string());
      }
      if (object_le(p1, p2)) {
        ++r.checks;
        if (!(compose_pi(inclusion_pi(p1, p2), retraction_pi(p2, p1)) ==
              identity_pi(p1)))
          r.fail("inclusion does not split: " + p1.to_string() + " under " +
                 p2.to_string());
      }
    }
  }
  for (const PartitionObject& p : objects) {
    Transformation e = idempotent_with_kernel(p.pi);
    std::vector<int> eta;
    for (int i = 0; i < p.pi.num_blocks(); ++i)
      eta.push_back(p.pi.block_of(e.apply(p.pi.block_min(i))));
    ++r.checks;
    if (!BlockMapMorphism(p, p, eta).is_identity())
      r.fail("idempotent not identity at its vertex: " + p.to_string());
  }
  return r;
}

}  // namespace singx
