#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "singx/singx.hpp"

// Command-line surface over the library: constructions print canonical
// literals or tables, verification verbs print one summary line per check
// and exit 1 if any fails. Bad arguments and rejected literals exit 2.

namespace {

using namespace singx;

int print_reports(const std::vector<Report>& reports) {
  bool all_ok = true;
  for (const Report& r : reports) {
    std::cout << r.summary() << '\n';
    all_ok = all_ok && r.ok();
  }
  return all_ok ? 0 : 1;
}

int run_sing(int n, const std::string& format) {
  GroundSet g(n);
  if (format.empty()) {
    std::cout << "|Sing(" << n << ")| = " << enumerate_sing(g).size() << '\n';
    return 0;
  }
  CayleyTable t = build_sing_table(g);
  if (format == "json") {
    export_json(t, std::cout);
  } else {
    export_csv(t, std::cout);
  }
  return 0;
}

int run_factorize(int n, const std::string& cat, const std::string& literal) {
  GroundSet g(n);
  if (cat == "P") {
    NormalFactorizationP f = normal_factorize_p(parse_set_function(g, literal));
    std::cout << "q: " << f.q.to_string() << '\n'
              << "u: " << f.u.to_string() << '\n'
              << "j: " << f.j.to_string() << '\n'
              << "epi: " << f.epi().to_string() << '\n';
  } else {
    NormalFactorizationPi f = normal_factorize_pi(parse_block_map(g, literal));
    std::cout << "zeta*: " << f.zeta_star.to_string() << '\n'
              << "u*: " << f.u_star.to_string() << '\n'
              << "nu*: " << f.nu_star.to_string() << '\n'
              << "epi: " << f.epi().to_string() << '\n';
  }
  return 0;
}

int run_cones(int n, const std::string& which) {
  GroundSet g(n);
  CayleyTable t = which == "TP" ? build_TP(g) : build_TPi(g);
  std::cout << which << "(" << n << "): " << t.size() << " cones, "
            << idempotents(t).size() << " idempotent\n";
  Report assoc = check_associative(t);
  std::cout << assoc.summary() << '\n';
  return assoc.ok() ? 0 : 1;
}

int run_dual(int n) {
  GroundSet g(n);
  Report r = verify_dual_isomorphisms(g);
  std::cout << r.summary() << '\n';
  return r.ok() ? 0 : 1;
}

int run_crossconn_build(int n, const std::string& theta_literal) {
  GroundSet g(n);
  Permutation theta = parse_permutation(g, theta_literal);
  CrossConnectionSemigroup s = build_s_gamma(theta);
  std::cout << "S-Gamma(theta=" << theta.to_string() << "): " << s.pairs.size()
            << " linked pairs\n";
  Report r = verify_s_gamma(s);
  std::cout << r.summary() << '\n';
  return r.ok() ? 0 : 1;
}

int run_crossconn_enumerate(int n) {
  GroundSet g(n);
  for (const Permutation& theta : enumerate_cross_connections(g)) {
    std::cout << theta.to_string() << '\n';
  }
  return 0;
}

int run_crossconn_verify(int n) {
  GroundSet g(n);
  return print_reports({suite_duality_naturality(g), suite_linked_pairs_iso(g),
                        suite_crossconn_classification(g)});
}

int run_ideal_build(int n, const std::vector<std::string>& exclude_literals) {
  GroundSet g(n);
  std::vector<SetPartition> excluded;
  excluded.reserve(exclude_literals.size());
  for (const std::string& s : exclude_literals) {
    excluded.push_back(parse_partition(g, s));
  }
  RightReductiveResult r = excluded.empty()
                               ? build_ideal_cxn(detail::ideal_excluding(g, {}))
                               : build_excluding_minimal(g, excluded);
  std::size_t excluded_count = enumerate_sing(g).size() - r.table.size();
  std::cout << "{\"order\":" << r.table.size()
            << ",\"regular\":" << (r.regular ? "true" : "false")
            << ",\"right_reductive\":" << (r.right_reductive ? "true" : "false")
            << ",\"excluded_count\":" << excluded_count << "}\n";
  return 0;
}

int run_verify(int n, const std::string& suite) {
  GroundSet g(n);
  if (suite == "all") {
    return print_reports(run_all_suites(g));
  }
  for (const SuiteEntry& entry : all_suites()) {
    if (suite == entry.label) {
      return print_reports({entry.run(g)});
    }
  }
  std::cerr << "error: unknown suite '" << suite << "'\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive constructions and verification for the singular "
               "transformation semigroup and its categories"};
  app.require_subcommand(1);

  int sing_n = 0;
  std::string sing_export;
  CLI::App* sing = app.add_subcommand(
      "sing", "Count the singular transformations, or export their table");
  sing->add_option("-n", sing_n, "ground set size")->required();
  sing->add_option("--export", sing_export, "table format")
      ->check(CLI::IsMember({"json", "csv"}));

  int fact_n = 0;
  std::string fact_cat;
  std::string fact_morphism;
  CLI::App* factorize = app.add_subcommand(
      "factorize", "Normal-factorize a morphism literal");
  factorize->add_option("-n", fact_n, "ground set size")->required();
  factorize->add_option("--cat", fact_cat, "category: P (subsets) or Pi (partitions)")
      ->required()
      ->check(CLI::IsMember({"P", "Pi"}));
  factorize->add_option("--morphism", fact_morphism, "morphism literal")
      ->required();

  int cones_n = 0;
  std::string cones_build;
  CLI::App* cones = app.add_subcommand("cones", "Build a cone semigroup table");
  cones->add_option("-n", cones_n, "ground set size")->required();
  cones->add_option("--build", cones_build, "which semigroup: TP or TPi")
      ->required()
      ->check(CLI::IsMember({"TP", "TPi"}));

  int dual_n = 0;
  bool dual_verify = false;
  CLI::App* dual = app.add_subcommand(
      "dual", "Verify the dual equivalences between the two categories");
  dual->add_option("-n", dual_n, "ground set size")->required();
  dual->add_flag("--verify", dual_verify, "run the exhaustive sweep")
      ->required();

  CLI::App* crossconn =
      app.add_subcommand("crossconn", "Cross-connections between the categories");
  crossconn->require_subcommand(1);

  int ccb_n = 0;
  std::string ccb_theta;
  CLI::App* ccb = crossconn->add_subcommand(
      "build", "Build the linked-pair semigroup of one permutation");
  ccb->add_option("-n", ccb_n, "ground set size")->required();
  ccb->add_option("--theta", ccb_theta, "permutation literal, e.g. 2,3,1")
      ->required();

  int cce_n = 0;
  CLI::App* cce = crossconn->add_subcommand(
      "enumerate", "List every cross-connection, one permutation per line");
  cce->add_option("-n", cce_n, "ground set size")->required();

  int ccv_n = 0;
  bool ccv_all = false;
  CLI::App* ccv = crossconn->add_subcommand(
      "verify", "Run the cross-connection verification suites");
  ccv->add_option("-n", ccv_n, "ground set size")->required();
  ccv->add_flag("--all", ccv_all, "run every cross-connection suite")
      ->required();

  CLI::App* ideal = app.add_subcommand("ideal", "Ideal-induced subsemigroups");
  ideal->require_subcommand(1);

  int idb_n = 0;
  std::vector<std::string> idb_exclude;
  CLI::App* idb = ideal->add_subcommand(
      "build", "Build the subsemigroup of an ideal excluding minimal partitions");
  idb->add_option("-n", idb_n, "ground set size")->required();
  idb->add_option("--exclude", idb_exclude,
                  "minimal partition literal to exclude (repeatable)");

  int verify_n = 0;
  std::string verify_suite = "all";
  CLI::App* verify = app.add_subcommand(
      "verify", "Run theorem-verification suites and print a pass/fail matrix");
  verify->add_option("-n", verify_n, "ground set size")->required();
  verify->add_option("--suite", verify_suite, "suite row label, or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*sing) return run_sing(sing_n, sing_export);
    if (*factorize) return run_factorize(fact_n, fact_cat, fact_morphism);
    if (*cones) return run_cones(cones_n, cones_build);
    if (*dual) return run_dual(dual_n);
    if (*ccb) return run_crossconn_build(ccb_n, ccb_theta);
    if (*cce) return run_crossconn_enumerate(cce_n);
    if (*ccv) return run_crossconn_verify(ccv_n);
    if (*idb) return run_ideal_build(idb_n, idb_exclude);
    if (*verify) return run_verify(verify_n, verify_suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
