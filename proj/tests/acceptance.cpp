// Acceptance suite: one PASS/FAIL line per criterion at the pinned tolerances
// (exact equality throughout, n up to 300, runtime limits 10 s and 30 s).

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <fstream>
#include <iomanip>
#include <iostream>

#include "eta42/acceptance.hpp"

namespace {

const eta42::AcceptanceOutcome& outcome() {
  static const eta42::AcceptanceOutcome result = [] {
    eta42::AcceptanceOptions options;
    options.verify_order = 300;
    return eta42::run_acceptance(options);
  }();
  return result;
}

void check_criterion(int id) {
  for (const auto& c : outcome().criteria) {
    if (c.id != id) continue;
    INFO(c.detail);
    CHECK(c.passed);
    return;
  }
  FAIL("criterion not run: " << id);
}

}  // namespace

TEST_CASE("criterion 1: N14 table reproduction") { check_criterion(1); }
TEST_CASE("criterion 2: basis sanity") { check_criterion(2); }
TEST_CASE("criterion 3: identity verification") { check_criterion(3); }
TEST_CASE("criterion 4: convolution formulas") { check_criterion(4); }
TEST_CASE("criterion 5: quaternary count") { check_criterion(5); }
TEST_CASE("criterion 6: structural constants") { check_criterion(6); }
TEST_CASE("criterion 7: printed-coefficient audit") {
  check_criterion(7);
  CHECK(outcome().audit.contains("entries"));
}

int main(int argc, char** argv) {
  for (const auto& c : outcome().criteria) {
    std::cout << (c.passed ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << std::fixed
              << std::setprecision(2) << c.seconds << " s) " << c.detail << "\n";
  }
  std::ofstream("acceptance_audit.json") << outcome().audit.dump(2) << "\n";
  std::cout << "audit report written to acceptance_audit.json\n";

  doctest::Context context(argc, argv);
  return context.run();
}
