#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Base layer: the ground set {1..n}, its subsets and partitions, total
// transformations and permutations, and the canonical enumerators over them.
// All values are immutable after construction and all enumerators return a
// fixed canonical order, so everything downstream is deterministic.
//
// Conventions used everywhere:
//   - elements are 1-based; bit i-1 of a mask stands for element i
//   - functions compose left to right: (x)(ab) = ((x)a)b
//   - text literals are stable for n <= 9 (single-digit elements)

namespace singx {

// The set {1, ..., n}. Kept small on purpose: every full enumeration in this
// library is exponential in n, and the literal formats require single digits.
struct GroundSet {
  int n;

  explicit GroundSet(int size) : n(size) {
    if (n < 2 || n > 9) {
      throw std::invalid_argument("ground set size must be between 2 and 9");
    }
  }

  std::uint32_t full_mask() const { return (1u << n) - 1u; }

  bool operator==(const GroundSet&) const = default;
  auto operator<=>(const GroundSet&) const = default;
};

namespace detail {

inline void require_same_ground(const GroundSet& a, const GroundSet& b,
                                const char* what) {
  if (!(a == b)) {
    throw std::invalid_argument(std::string(what) + ": ground set mismatch");
  }
}

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Strips all whitespace; the literal grammar never needs it.
inline std::string strip_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

inline std::vector<int> parse_int_list(std::string_view body, const char* what) {
  std::vector<int> out;
  std::size_t i = 0;
  for (;;) {
    std::size_t j = i;
    while (j < body.size() && body[j] != ',') ++j;
    std::string_view tok = body.substr(i, j - i);
    require(!tok.empty(), what);
    int v = 0;
    for (char c : tok) {
      require(c >= '0' && c <= '9', what);
      v = v * 10 + (c - '0');
    }
    out.push_back(v);
    if (j == body.size()) return out;
    i = j + 1;
    require(i < body.size(), what);  // trailing comma
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// SubsetObject: a nonempty proper subset of the ground set. These are the
// objects of the category of subsets, hence the constraints.

class SubsetObject {
 public:
  SubsetObject(GroundSet g, std::uint32_t mask) : ground_(g), mask_(mask) {
    detail::require(mask_ != 0, "subset must be nonempty");
    detail::require((mask_ & ~g.full_mask()) == 0, "subset out of range");
    detail::require(mask_ != g.full_mask(), "subset must be proper");
  }

  SubsetObject(GroundSet g, const std::vector<int>& members)
      : SubsetObject(g, mask_from(g, members)) {}

  GroundSet ground() const { return ground_; }
  std::uint32_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool contains(int x) const { return (mask_ >> (x - 1)) & 1u; }
  int min() const { return std::countr_zero(mask_) + 1; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int x = 1; x <= ground_.n; ++x) {
      if (contains(x)) out.push_back(x);
    }
    return out;
  }

  bool subset_of(const SubsetObject& other) const {
    detail::require_same_ground(ground_, other.ground_, "subset_of");
    return (mask_ & ~other.mask_) == 0;
  }

  // "{1,3}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int x : members()) {
      if (!first) s += ",";
      s += std::to_string(x);
      first = false;
    }
    return s + "}";
  }

  bool operator==(const SubsetObject&) const = default;
  auto operator<=>(const SubsetObject&) const = default;

 private:
  static std::uint32_t mask_from(GroundSet g, const std::vector<int>& members) {
    std::uint32_t m = 0;
    for (int x : members) {
      detail::require(x >= 1 && x <= g.n, "subset element out of range");
      m |= 1u << (x - 1);
    }
    return m;
  }

  GroundSet ground_;
  std::uint32_t mask_;
};

inline SubsetObject parse_subset(GroundSet g, std::string_view text) {
  std::string s = detail::strip_spaces(text);
  detail::require(s.size() >= 3 && s.front() == '{' && s.back() == '}',
                  "subset literal must look like {1,3}");
  std::vector<int> members =
      detail::parse_int_list(std::string_view(s).substr(1, s.size() - 2),
                             "subset literal must look like {1,3}");
  return SubsetObject(g, members);
}

// ---------------------------------------------------------------------------
// SetPartition: a partition of the ground set with at least one block of two
// or more elements. The identity partition is excluded: these values are
// exactly the kernels of singular transformations and the objects of the
// partition category.
//
// Canonical form: blocks ordered by least element, elements ascending inside
// each block. Equality, ordering and printing all use the canonical form.

class SetPartition {
 public:
  SetPartition(GroundSet g, const std::vector<std::vector<int>>& blocks)
      : SetPartition(g, assignment_from(g, blocks), assignment_tag{}) {}

  static SetPartition from_assignment(GroundSet g,
                                      const std::vector<int>& labels) {
    return SetPartition(g, labels, assignment_tag{});
  }

  static SetPartition from_block_masks(GroundSet g,
                                       const std::vector<std::uint32_t>& masks) {
    std::vector<int> labels(static_cast<std::size_t>(g.n), -1);
    for (std::size_t b = 0; b < masks.size(); ++b) {
      for (int x = 1; x <= g.n; ++x) {
        if ((masks[b] >> (x - 1)) & 1u) {
          detail::require(labels[x - 1] == -1, "blocks must be disjoint");
          labels[x - 1] = static_cast<int>(b);
        }
      }
    }
    return SetPartition(g, labels, assignment_tag{});
  }

  GroundSet ground() const { return ground_; }
  int num_blocks() const { return static_cast<int>(block_masks_.size()); }
  int block_of(int x) const { return block_of_[static_cast<std::size_t>(x - 1)]; }
  std::uint32_t block_mask(int b) const {
    return block_masks_[static_cast<std::size_t>(b)];
  }

  std::vector<int> block_members(int b) const {
    std::vector<int> out;
    for (int x = 1; x <= ground_.n; ++x) {
      if ((block_mask(b) >> (x - 1)) & 1u) out.push_back(x);
    }
    return out;
  }

  int block_min(int b) const { return std::countr_zero(block_mask(b)) + 1; }

  // One element chosen from every block, nothing else.
  bool is_cross_section(const SubsetObject& a) const {
    detail::require_same_ground(ground_, a.ground(), "is_cross_section");
    if (a.size() != num_blocks()) return false;
    for (int b = 0; b < num_blocks(); ++b) {
      if (std::popcount(a.mask() & block_mask(b)) != 1) return false;
    }
    return true;
  }

  // "12|3": elements concatenated per block, blocks separated by '|'.
  std::string to_string() const {
    std::string s;
    for (int b = 0; b < num_blocks(); ++b) {
      if (b > 0) s += "|";
      for (int x : block_members(b)) s += std::to_string(x);
    }
    return s;
  }

  bool operator==(const SetPartition& other) const {
    return ground_ == other.ground_ && block_of_ == other.block_of_;
  }
  bool operator!=(const SetPartition& other) const { return !(*this == other); }
  bool operator<(const SetPartition& other) const {
    if (!(ground_ == other.ground_)) return ground_ < other.ground_;
    return block_of_ < other.block_of_;
  }

 private:
  struct assignment_tag {};

  // labels: one arbitrary block label per element; relabeled canonically by
  // first occurrence so blocks end up ordered by least element.
  SetPartition(GroundSet g, const std::vector<int>& labels, assignment_tag)
      : ground_(g) {
    detail::require(labels.size() == static_cast<std::size_t>(g.n),
                    "partition must assign every element");
    std::vector<int> canon;  // original label -> canonical index
    block_of_.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      detail::require(labels[i] >= 0, "partition must assign every element");
      int label = labels[i];
      int idx = -1;
      for (std::size_t k = 0; k < canon.size(); ++k) {
        if (canon[k] == label) {
          idx = static_cast<int>(k);
          break;
        }
      }
      if (idx < 0) {
        idx = static_cast<int>(canon.size());
        canon.push_back(label);
        block_masks_.push_back(0);
      }
      block_of_[i] = static_cast<std::uint8_t>(idx);
      block_masks_[static_cast<std::size_t>(idx)] |= 1u << i;
    }
    detail::require(num_blocks() < g.n,
                    "identity partition is not a valid value");
  }

  static std::vector<int> assignment_from(
      GroundSet g, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> labels(static_cast<std::size_t>(g.n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      detail::require(!blocks[b].empty(), "empty block");
      for (int x : blocks[b]) {
        detail::require(x >= 1 && x <= g.n, "block element out of range");
        detail::require(labels[static_cast<std::size_t>(x - 1)] == -1,
                        "blocks must be disjoint");
        labels[static_cast<std::size_t>(x - 1)] = static_cast<int>(b);
      }
    }
    return labels;
  }

  GroundSet ground_;
  std::vector<std::uint8_t> block_of_;
  std::vector<std::uint32_t> block_masks_;
};

// Every block of p1 lies inside a block of p2; equivalently p1 is contained
// in p2 as an equivalence relation.
inline bool refines(const SetPartition& p1, const SetPartition& p2) {
  detail::require_same_ground(p1.ground(), p2.ground(), "refines");
  for (int b = 0; b < p1.num_blocks(); ++b) {
    std::uint32_t m = p1.block_mask(b);
    std::uint32_t container = p2.block_mask(p2.block_of(p1.block_min(b)));
    if ((m & ~container) != 0) return false;
  }
  return true;
}

inline SetPartition parse_partition(GroundSet g, std::string_view text) {
  std::string s = detail::strip_spaces(text);
  detail::require(!s.empty(), "empty partition literal");
  std::vector<std::vector<int>> blocks(1);
  for (char c : s) {
    if (c == '|') {
      blocks.emplace_back();
    } else {
      detail::require(c >= '1' && c <= '9', "partition literal must look like 12|3");
      blocks.back().push_back(c - '0');
    }
  }
  std::uint32_t seen = 0;
  for (const auto& b : blocks) {
    detail::require(!b.empty(), "partition literal must look like 12|3");
    for (int x : b) seen |= 1u << (x - 1);
  }
  detail::require(seen == g.full_mask(), "partition must cover the ground set");
  return SetPartition(g, blocks);
}

// ---------------------------------------------------------------------------
// Transformation: a total self-map of the ground set, stored as its image
// sequence. apply(x) is (x)a; compose(a, b) is a followed by b.

class Transformation {
 public:
  Transformation(GroundSet g, const std::vector<int>& images) : ground_(g) {
    detail::require(images.size() == static_cast<std::size_t>(g.n),
                    "transformation needs one image per element");
    images_.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      detail::require(images[i] >= 1 && images[i] <= g.n,
                      "transformation image out of range");
      images_[i] = static_cast<std::uint8_t>(images[i]);
    }
  }

  GroundSet ground() const { return ground_; }
  int apply(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }

  std::uint32_t image_mask() const {
    std::uint32_t m = 0;
    for (std::uint8_t v : images_) m |= 1u << (v - 1);
    return m;
  }

  bool is_bijective() const { return image_mask() == ground_.full_mask(); }
  bool is_singular() const { return !is_bijective(); }

  // Both profile halves require singularity: a bijection has the full set as
  // image and the identity partition as kernel, neither of which is a value.
  SubsetObject image() const {
    detail::require(is_singular(), "image of a bijection is not an object");
    return SubsetObject(ground_, image_mask());
  }

  SetPartition kernel() const {
    detail::require(is_singular(), "kernel of a bijection is not an object");
    std::vector<int> labels(images_.begin(), images_.end());
    return SetPartition::from_assignment(ground_, labels);
  }

  // Mixed-radix rank of the image sequence; a perfect index for lookup
  // tables of size n^n.
  long code() const {
    long c = 0;
    for (std::size_t i = images_.size(); i-- > 0;) {
      c = c * ground_.n + (images_[i] - 1);
    }
    return c;
  }

  // "1,1,2"
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i > 0) s += ",";
      s += std::to_string(static_cast<int>(images_[i]));
    }
    return s;
  }

  bool operator==(const Transformation& other) const {
    return ground_ == other.ground_ && images_ == other.images_;
  }
  bool operator!=(const Transformation& other) const { return !(*this == other); }
  bool operator<(const Transformation& other) const {
    if (!(ground_ == other.ground_)) return ground_ < other.ground_;
    return images_ < other.images_;
  }

 private:
  GroundSet ground_;
  std::vector<std::uint8_t> images_;
};

inline Transformation compose(const Transformation& a, const Transformation& b) {
  detail::require_same_ground(a.ground(), b.ground(), "compose");
  std::vector<int> img(static_cast<std::size_t>(a.ground().n));
  for (int x = 1; x <= a.ground().n; ++x) {
    img[static_cast<std::size_t>(x - 1)] = b.apply(a.apply(x));
  }
  return Transformation(a.ground(), img);
}

inline std::pair<SubsetObject, SetPartition> profile(const Transformation& a) {
  return {a.image(), a.kernel()};
}

inline Transformation parse_transformation(GroundSet g, std::string_view text) {
  std::string s = detail::strip_spaces(text);
  return Transformation(
      g, detail::parse_int_list(s, "transformation literal must look like 1,1,2"));
}

// The idempotent with kernel p: each element goes to the least member of its
// block, so the image is the block-minima cross-section.
inline Transformation idempotent_with_kernel(const SetPartition& p) {
  GroundSet g = p.ground();
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(g.n));
  for (int x = 1; x <= g.n; ++x) images.push_back(p.block_min(p.block_of(x)));
  return Transformation(g, images);
}

// The idempotent with image d: fixes d and sends everything else to min(d).
inline Transformation idempotent_onto(const SubsetObject& d) {
  GroundSet g = d.ground();
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(g.n));
  for (int x = 1; x <= g.n; ++x) images.push_back(d.contains(x) ? x : d.min());
  return Transformation(g, images);
}

// ---------------------------------------------------------------------------
// Permutation: a bijective self-map, kept separate from Transformation
// because the two play different roles (transformations are semigroup
// elements, permutations induce cross-connections).

class Permutation {
 public:
  Permutation(GroundSet g, const std::vector<int>& images) : ground_(g) {
    detail::require(images.size() == static_cast<std::size_t>(g.n),
                    "permutation needs one image per element");
    std::uint32_t seen = 0;
    images_.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      detail::require(images[i] >= 1 && images[i] <= g.n,
                      "permutation image out of range");
      seen |= 1u << (images[i] - 1);
      images_[i] = static_cast<std::uint8_t>(images[i]);
    }
    detail::require(seen == g.full_mask(), "permutation must be bijective");
  }

  GroundSet ground() const { return ground_; }
  int apply(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }

  Permutation inverse() const {
    std::vector<int> inv(static_cast<std::size_t>(ground_.n));
    for (int x = 1; x <= ground_.n; ++x) {
      inv[static_cast<std::size_t>(apply(x) - 1)] = x;
    }
    return Permutation(ground_, inv);
  }

  Transformation as_transformation() const {
    std::vector<int> img(images_.begin(), images_.end());
    return Transformation(ground_, img);
  }

  // "2,3,1"
  std::string to_string() const { return as_transformation().to_string(); }

  bool operator==(const Permutation& other) const {
    return ground_ == other.ground_ && images_ == other.images_;
  }
  bool operator!=(const Permutation& other) const { return !(*this == other); }
  bool operator<(const Permutation& other) const {
    if (!(ground_ == other.ground_)) return ground_ < other.ground_;
    return images_ < other.images_;
  }

 private:
  GroundSet ground_;
  std::vector<std::uint8_t> images_;
};

inline Permutation parse_permutation(GroundSet g, std::string_view text) {
  std::string s = detail::strip_spaces(text);
  return Permutation(
      g, detail::parse_int_list(s, "permutation literal must look like 2,3,1"));
}

// theta(A) elementwise.
inline SubsetObject perm_image_subset(const Permutation& theta,
                                      const SubsetObject& a) {
  detail::require_same_ground(theta.ground(), a.ground(), "perm_image_subset");
  std::uint32_t m = 0;
  for (int x : a.members()) m |= 1u << (theta.apply(x) - 1);
  return SubsetObject(a.ground(), m);
}

// {theta(B) : B block of p}.
inline SetPartition perm_image_partition(const Permutation& theta,
                                         const SetPartition& p) {
  detail::require_same_ground(theta.ground(), p.ground(), "perm_image_partition");
  std::vector<int> labels(static_cast<std::size_t>(p.ground().n));
  for (int x = 1; x <= p.ground().n; ++x) {
    labels[static_cast<std::size_t>(theta.apply(x) - 1)] = p.block_of(x);
  }
  return SetPartition::from_assignment(p.ground(), labels);
}

// {theta^{-1}(B) : B block of p}.
inline SetPartition perm_preimage_partition(const Permutation& theta,
                                            const SetPartition& p) {
  detail::require_same_ground(theta.ground(), p.ground(),
                              "perm_preimage_partition");
  std::vector<int> labels(static_cast<std::size_t>(p.ground().n));
  for (int x = 1; x <= p.ground().n; ++x) {
    labels[static_cast<std::size_t>(x - 1)] = p.block_of(theta.apply(x));
  }
  return SetPartition::from_assignment(p.ground(), labels);
}

// theta^{-1} a theta, the transformation x -> theta(a(theta^{-1}(x))).
// Conjugation transports profiles: the image moves by theta, the kernel by
// the blockwise image of theta.
inline Transformation conjugate(const Permutation& theta,
                                const Transformation& a) {
  detail::require_same_ground(theta.ground(), a.ground(), "conjugate");
  std::vector<int> img(static_cast<std::size_t>(a.ground().n));
  for (int x = 1; x <= a.ground().n; ++x) {
    img[static_cast<std::size_t>(theta.apply(x) - 1)] = theta.apply(a.apply(x));
  }
  return Transformation(a.ground(), img);
}

// ---------------------------------------------------------------------------
// Enumerators. Orders are part of the contract: every table, roster and
// report downstream inherits determinism from them.

// All singular transformations, lexicographic by image sequence.
inline std::vector<Transformation> enumerate_sing(GroundSet g) {
  std::vector<Transformation> out;
  std::vector<int> img(static_cast<std::size_t>(g.n), 1);
  for (;;) {
    std::uint32_t m = 0;
    for (int v : img) m |= 1u << (v - 1);
    if (m != g.full_mask()) out.emplace_back(g, img);
    std::size_t i = img.size();
    while (i-- > 0) {
      if (img[i] < g.n) {
        ++img[i];
        std::fill(img.begin() + static_cast<std::ptrdiff_t>(i) + 1, img.end(), 1);
        break;
      }
      if (i == 0) return out;
    }
  }
}

// All nonempty proper subsets, ascending by bitmask.
inline std::vector<SubsetObject> enumerate_subsets(GroundSet g) {
  std::vector<SubsetObject> out;
  for (std::uint32_t m = 1; m < g.full_mask(); ++m) out.emplace_back(g, m);
  return out;
}

// All non-identity partitions, in lexicographic restricted-growth order
// (so the single-block partition comes first).
inline std::vector<SetPartition> enumerate_partitions(GroundSet g) {
  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(g.n), 0);
  auto scan = [&](auto&& self, int i, int used) -> void {
    if (i == g.n) {
      if (used < g.n) out.push_back(SetPartition::from_assignment(g, rgs));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  scan(scan, 1, 1);
  return out;
}

// All permutations, lexicographic.
inline std::vector<Permutation> enumerate_permutations(GroundSet g) {
  std::vector<int> img(static_cast<std::size_t>(g.n));
  for (int x = 1; x <= g.n; ++x) img[static_cast<std::size_t>(x - 1)] = x;
  std::vector<Permutation> out;
  do {
    out.emplace_back(g, img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// All cross-sections of p: one element per block, enumerated with the last
// block varying fastest.
inline std::vector<SubsetObject> cross_sections(const SetPartition& p) {
  const int k = p.num_blocks();
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(k));
  for (int b = 0; b < k; ++b) blocks.push_back(p.block_members(b));
  std::vector<std::size_t> pos(static_cast<std::size_t>(k), 0);
  std::vector<SubsetObject> out;
  for (;;) {
    std::uint32_t m = 0;
    for (int b = 0; b < k; ++b) {
      m |= 1u << (blocks[static_cast<std::size_t>(b)][pos[static_cast<std::size_t>(b)]] - 1);
    }
    out.emplace_back(p.ground(), m);
    int b = k - 1;
    while (b >= 0 &&
           pos[static_cast<std::size_t>(b)] + 1 ==
               blocks[static_cast<std::size_t>(b)].size()) {
      pos[static_cast<std::size_t>(b)] = 0;
      --b;
    }
    if (b < 0) return out;
    ++pos[static_cast<std::size_t>(b)];
  }
}

}  // namespace singx
