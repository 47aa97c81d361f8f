#include "singx/suites.hpp"

#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "singx/foundation.hpp"

using namespace singx;

TEST_CASE("suite roster carries the matrix rows in order", "[suites]") {
  std::vector<std::string> expected = {
      "cone-semigroup-iso",      "cone-semigroup-anti-iso",
      "dual-of-subsets",         "dual-of-partitions",
      "mset-cross-sections",     "duality-naturality",
      "linked-pairs-iso",        "crossconn-classification",
      "total-ideal-covering",    "ideal-subsemigroup",
  };
  REQUIRE(all_suites().size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(all_suites()[i].label == expected[i]);
  }
}

TEST_CASE("every suite passes exhaustively at small sizes", "[suites]") {
  for (int n : {2, 3}) {
    GroundSet g(n);
    std::vector<Report> reports = run_all_suites(g);
    REQUIRE(reports.size() == all_suites().size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
      INFO("n=" << n << " row " << reports[i].title);
      CHECK(reports[i].title == all_suites()[i].label);
      CHECK(reports[i].checks > 0);
      CHECK(reports[i].ok());
      CHECK(reports[i].witnesses.empty());
    }
  }
  CHECK_THROWS(run_all_suites(GroundSet(5)));
}

TEST_CASE("summary lines read as a matrix", "[suites]") {
  Report r = suite_mset_cross_sections(GroundSet(3));
  CHECK(r.summary() == "mset-cross-sections: PASS (21 checks)");
}

TEST_CASE("cheap suites stay green at n=4", "[suites]") {
  GroundSet g(4);
  CHECK(suite_cone_semigroup_iso(g).ok());
  CHECK(suite_mset_cross_sections(g).ok());
  CHECK(suite_crossconn_classification(g).ok());
  CHECK(suite_total_ideal_covering(g).ok());
  CHECK(suite_ideal_subsemigroup(g).ok());
}
