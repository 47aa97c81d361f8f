#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "singx/cayley.hpp"
#include "singx/foundation.hpp"
#include "singx/partition_category.hpp"

// Ideals of the partition category, the totality test, and the subsemigroups
// of the singular part they generate: with the inclusion functor as the
// connecting functor and the identity as its dual, the linked pairs are
// diagonal and the semigroup is the set of transformations whose kernel
// object lies in the ideal.

namespace singx {

// A downward closed set of partition objects: every coarsening of a member
// is a member. The constructor verifies closure, so holding a PartitionIdeal
// is proof of it.
class PartitionIdeal {
 public:
  PartitionIdeal(GroundSet g, std::vector<PartitionObject> members)
      : ground_(g), members_(std::move(members)) {
    for (const PartitionObject& p : members_) {
      detail::require_same_ground(g, p.ground(), "PartitionIdeal");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
    for (const SetPartition& q : enumerate_partitions(g)) {
      PartitionObject qo(q);
      if (contains(qo)) continue;
      for (const PartitionObject& p : members_) {
        detail::require(!object_le(qo, p),
                        "ideal members must include every coarsening");
      }
    }
  }

  GroundSet ground() const { return ground_; }
  const std::vector<PartitionObject>& members() const { return members_; }

  bool contains(const PartitionObject& p) const {
    return std::binary_search(members_.begin(), members_.end(), p);
  }

 private:
  GroundSet ground_;
  std::vector<PartitionObject> members_;
};

// All coarsenings of p, the principal ideal it generates.
inline PartitionIdeal principal_ideal(const PartitionObject& p) {
  std::vector<PartitionObject> members;
  for (const SetPartition& q : enumerate_partitions(p.ground())) {
    if (refines(p.pi, q)) members.emplace_back(q);
  }
  return PartitionIdeal(p.ground(), std::move(members));
}

inline PartitionIdeal ideal_union(const std::vector<PartitionIdeal>& parts) {
  detail::require(!parts.empty(), "ideal union needs at least one ideal");
  GroundSet g = parts.front().ground();
  std::vector<PartitionObject> members;
  for (const PartitionIdeal& i : parts) {
    detail::require_same_ground(g, i.ground(), "ideal_union");
    members.insert(members.end(), i.members().begin(), i.members().end());
  }
  return PartitionIdeal(g, std::move(members));
}

// The partitions with one doubleton block and singletons elsewhere: the
// minimal objects of the coarsening order, enumerated by doubleton.
inline std::vector<SetPartition> minimal_partitions(GroundSet g) {
  std::vector<SetPartition> out;
  for (int x = 1; x <= g.n; ++x) {
    for (int y = x + 1; y <= g.n; ++y) {
      std::vector<int> labels(static_cast<std::size_t>(g.n));
      for (int z = 1; z <= g.n; ++z) {
        labels[static_cast<std::size_t>(z - 1)] = z == y ? x : z;
      }
      out.push_back(SetPartition::from_assignment(g, labels));
    }
  }
  return out;
}

// Totality: every maximal proper subset is a cross-section of some member.
// Downward closure then covers all smaller subsets too.
inline bool is_total(const PartitionIdeal& ideal) {
  GroundSet g = ideal.ground();
  for (int x = 1; x <= g.n; ++x) {
    SubsetObject a(g, g.full_mask() & ~(1u << (x - 1)));
    bool covered = false;
    for (const PartitionObject& p : ideal.members()) {
      if (p.pi.is_cross_section(a)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

struct RightReductiveResult {
  PartitionIdeal ideal;
  CayleyTable table;
  bool regular = false;
  bool right_reductive = false;
};

// The semigroup of a total ideal: transformations whose kernel object lies
// in the ideal, under the ambient composition. The roster stays closed
// because right multiplication only coarsens kernels; the table build
// enforces that rather than assuming it.
inline RightReductiveResult build_ideal_cxn(const PartitionIdeal& ideal) {
  GroundSet g = ideal.ground();
  detail::require(g.n <= 5, "ideal semigroup tables are built for n <= 5 only");
  detail::require(is_total(ideal), "ideal is not total");
  std::vector<Transformation> roster;
  for (const Transformation& a : enumerate_sing(g)) {
    if (ideal.contains(PartitionObject(a.kernel()))) roster.push_back(a);
  }
  TransformationIndex idx(g, roster);
  CayleyTable table = make_cayley_table(
      roster, [](const Transformation& a) { return a.to_string(); },
      [](const Transformation& a, const Transformation& b) {
        return compose(a, b);
      },
      [&](const Transformation& p) {
        std::int32_t i = idx.find(p);
        detail::require(i >= 0, "ideal roster is not closed under composition");
        return static_cast<std::uint32_t>(i);
      });
  RightReductiveResult out{ideal, std::move(table), false, false};
  out.regular = is_regular(out.table);
  out.right_reductive = is_right_reductive(out.table);
  return out;
}

// Keep every minimal partition except the given ones, take the union of
// their principal ideals, and build the semigroup. Excluding too many
// doubletons around one element destroys totality, which surfaces as the
// usual precondition error.
inline RightReductiveResult build_excluding_minimal(
    GroundSet g, const std::vector<SetPartition>& excluded) {
  for (const SetPartition& p : excluded) {
    detail::require_same_ground(g, p.ground(), "build_excluding_minimal");
    detail::require(p.num_blocks() == g.n - 1,
                    "excluded partitions must be minimal");
  }
  std::vector<PartitionObject> members;
  for (const SetPartition& m : minimal_partitions(g)) {
    if (std::find(excluded.begin(), excluded.end(), m) != excluded.end()) {
      continue;
    }
    PartitionIdeal kept = principal_ideal(PartitionObject(m));
    for (const PartitionObject& p : kept.members()) {
      members.push_back(p);
    }
  }
  return build_ideal_cxn(PartitionIdeal(g, std::move(members)));
}

}  // namespace singx
