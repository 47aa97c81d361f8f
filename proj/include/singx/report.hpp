#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace singx {

// Result of an exhaustive verification pass. Witnesses are recorded in
// enumeration order, so the first one is the minimal counterexample for the
// canonical orderings used throughout the library.
struct Report {
  std::string title;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;

  bool ok() const { return failures == 0; }

  void fail(std::string witness) {
    ++failures;
    if (witnesses.size() < 8) {
      witnesses.push_back(std::move(witness));
    }
  }

  void merge(const Report& other) {
    checks += other.checks;
    failures += other.failures;
    for (const auto& w : other.witnesses) {
      if (witnesses.size() < 8) {
        witnesses.push_back(other.title.empty() ? w : other.title + ": " + w);
      }
    }
  }

  std::string summary() const {
    std::string s = title + ": ";
    if (ok()) {
      s += "PASS (" + std::to_string(checks) + " checks)";
    } else {
      s += "FAIL (" + std::to_string(failures) + " of " +
           std::to_string(checks) + " checks)";
      if (!witnesses.empty()) {
        s += " first witness: " + witnesses.front();
      }
    }
    return s;
  }
};

}  // namespace singx
