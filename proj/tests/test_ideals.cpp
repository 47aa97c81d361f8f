#include "singx/ideals.hpp"

#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "singx/cayley.hpp"
#include "singx/foundation.hpp"
#include "singx/partition_category.hpp"

using namespace singx;

namespace {

PartitionObject obj(GroundSet g, const char* literal) {
  return PartitionObject(parse_partition(g, literal));
}

std::vector<PartitionObject> sorted(std::vector<PartitionObject> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// All subsets of the minimal partitions with at most k elements.
std::vector<std::vector<SetPartition>> exclusion_sets(GroundSet g, int k) {
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

PartitionIdeal ideal_without(GroundSet g,
                             const std::vector<SetPartition>& excluded) {
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
  return PartitionIdeal(g, members);
}

}  // namespace

TEST_CASE("principal ideals collect coarsenings", "[ideals]") {
  GroundSet g(3);
  CHECK(principal_ideal(obj(g, "13|2")).members() ==
        sorted({obj(g, "123"), obj(g, "13|2")}));
  CHECK(principal_ideal(obj(g, "123")).members() ==
        std::vector<PartitionObject>{obj(g, "123")});
  CHECK(ideal_union({principal_ideal(obj(g, "13|2")),
                     principal_ideal(obj(g, "23|1"))})
            .members() ==
        sorted({obj(g, "123"), obj(g, "13|2"), obj(g, "1|23")}));

  for (int n : {3, 4}) {
    GroundSet gs(n);
    for (const SetPartition& p : enumerate_partitions(gs)) {
      PartitionIdeal ideal = principal_ideal(PartitionObject(p));
      for (const SetPartition& q : enumerate_partitions(gs)) {
        CHECK(ideal.contains(PartitionObject(q)) == refines(p, q));
      }
    }
  }
}

TEST_CASE("ideal constructor verifies downward closure", "[ideals]") {
  GroundSet g(3);
  CHECK_THROWS(PartitionIdeal(g, {obj(g, "13|2")}));
  CHECK_NOTHROW(PartitionIdeal(g, {}));
  CHECK_NOTHROW(PartitionIdeal(g, {obj(g, "123"), obj(g, "13|2")}));
  CHECK_THROWS(ideal_union({}));
  CHECK_THROWS(PartitionIdeal(g, {PartitionObject(
                                     parse_partition(GroundSet(4), "12|34"))}));

  std::vector<PartitionObject> everything;
  for (const SetPartition& p : enumerate_partitions(g)) {
    everything.emplace_back(p);
  }
  PartitionIdeal full(g, everything);
  CHECK(full.members().size() == 4);
}

TEST_CASE("minimal partitions are the doubletons", "[ideals]") {
  GroundSet g3(3);
  std::vector<SetPartition> mins = minimal_partitions(g3);
  REQUIRE(mins.size() == 3);
  CHECK(mins[0] == parse_partition(g3, "12|3"));
  CHECK(mins[1] == parse_partition(g3, "13|2"));
  CHECK(mins[2] == parse_partition(g3, "23|1"));

  GroundSet g5(5);
  std::vector<SetPartition> mins5 = minimal_partitions(g5);
  CHECK(mins5.size() == 10);
  for (const SetPartition& m : mins5) {
    CHECK(m.num_blocks() == 4);
  }
}

TEST_CASE("totality checks the maximal subsets", "[ideals]") {
  GroundSet g(3);
  CHECK(is_total(ideal_union({principal_ideal(obj(g, "13|2")),
                              principal_ideal(obj(g, "23|1"))})));
  CHECK_FALSE(is_total(principal_ideal(obj(g, "12|3"))));
  CHECK_FALSE(is_total(PartitionIdeal(g, {})));

  for (int n : {3, 4}) {
    GroundSet gs(n);
    std::vector<PartitionObject> everything;
    for (const SetPartition& p : enumerate_partitions(gs)) {
      everything.emplace_back(p);
    }
    CHECK(is_total(PartitionIdeal(gs, everything)));
  }
}

TEST_CASE("totality survives small exclusions and dies at a point", "[ideals]") {
  // Any n-2 or fewer excluded doubletons leave every element covered.
  for (int n : {4, 5}) {
    GroundSet g(n);
    for (const std::vector<SetPartition>& excluded : exclusion_sets(g, n - 2)) {
      REQUIRE(is_total(ideal_without(g, excluded)));
    }
  }
  // Excluding every doubleton through one element does not.
  for (int n : {3, 4}) {
    GroundSet g(n);
    std::vector<SetPartition> through_one;
    for (int y = 2; y <= g.n; ++y) {
      std::vector<int> labels(static_cast<std::size_t>(g.n));
      for (int z = 1; z <= g.n; ++z) {
        labels[static_cast<std::size_t>(z - 1)] = z == y ? 1 : z;
      }
      through_one.push_back(SetPartition::from_assignment(g, labels));
    }
    REQUIRE(through_one.size() == static_cast<std::size_t>(g.n - 1));
    CHECK_FALSE(is_total(ideal_without(g, through_one)));
  }
}

TEST_CASE("total ideals give right reductive subsemigroups", "[ideals]") {
  GroundSet g(3);
  PartitionIdeal ideal = ideal_union({principal_ideal(obj(g, "13|2")),
                                      principal_ideal(obj(g, "23|1"))});
  RightReductiveResult r = build_ideal_cxn(ideal);
  CHECK(r.table.size() == 15);
  CHECK(r.regular);
  CHECK(r.right_reductive);
  CHECK(check_associative(r.table).ok());

  // The roster is exactly the filter of the singular enumeration.
  std::vector<std::string> expected;
  for (const Transformation& a : enumerate_sing(g)) {
    if (a.kernel() != parse_partition(g, "12|3")) {
      expected.push_back(a.to_string());
    }
  }
  CHECK(r.table.roster == expected);

  // Membership is closed under composition, kernels only coarsen.
  std::vector<Transformation> roster;
  for (const Transformation& a : enumerate_sing(g)) {
    if (ideal.contains(PartitionObject(a.kernel()))) roster.push_back(a);
  }
  for (const Transformation& a : roster) {
    for (const Transformation& b : roster) {
      Transformation ab = compose(a, b);
      CHECK(refines(a.kernel(), ab.kernel()));
      CHECK(ideal.contains(PartitionObject(ab.kernel())));
    }
  }

  // Right reductivity agrees with the pairwise separation oracle.
  bool separated = true;
  for (std::size_t a = 0; a < r.table.size(); ++a) {
    for (std::size_t b = a + 1; b < r.table.size(); ++b) {
      bool split = false;
      for (std::size_t s = 0; s < r.table.size() && !split; ++s) {
        split = r.table.at(s, a) != r.table.at(s, b);
      }
      if (!split) separated = false;
    }
  }
  CHECK(separated == r.right_reductive);

  // The whole object set gives back the full singular table.
  std::vector<PartitionObject> everything;
  for (const SetPartition& p : enumerate_partitions(g)) {
    everything.emplace_back(p);
  }
  RightReductiveResult full = build_ideal_cxn(PartitionIdeal(g, everything));
  CHECK(full.table.size() == 21);
  CHECK(full.table.table == build_sing_table(g).table);
  CHECK(full.table.roster == build_sing_table(g).roster);

  CHECK_THROWS(build_ideal_cxn(principal_ideal(obj(g, "123"))));
}

TEST_CASE("excluding minimal partitions", "[ideals]") {
  GroundSet g3(3);
  RightReductiveResult r3 =
      build_excluding_minimal(g3, {parse_partition(g3, "12|3")});
  CHECK(r3.table.size() == 15);
  CHECK(r3.regular);
  CHECK(r3.right_reductive);

  GroundSet g4(4);
  RightReductiveResult r4 =
      build_excluding_minimal(g4, {parse_partition(g4, "12|3|4")});
  CHECK(r4.table.size() == 232 - 24);
  CHECK(r4.regular);
  CHECK(r4.right_reductive);
  // The removed maps are exactly those with the excluded kernel.
  std::size_t removed = 0;
  for (const Transformation& a : enumerate_sing(g4)) {
    if (a.kernel() == parse_partition(g4, "12|3|4")) ++removed;
  }
  CHECK(removed == 24);

  CHECK_THROWS(build_excluding_minimal(g3, minimal_partitions(g3)));
  CHECK_THROWS(build_excluding_minimal(g3, {parse_partition(g3, "123")}));
  CHECK_THROWS(
      build_excluding_minimal(g3, {parse_partition(GroundSet(4), "12|3|4")}));
}
