#include "eta42/acceptance.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <vector>
#include <algorithm>

#include "eta42/numtheory.hpp"

namespace eta42 {

namespace {

constexpr std::pair<std::uint64_t, std::uint64_t> kPairs[] = {{1, 42}, {2, 21}, {3, 14}, {6, 7}};

// Collects failure messages; each call records one failure.
struct Failure {
  std::vector<std::string> messages;
  template <typename... Args>
  void operator()(const Args&... parts) {
    std::ostringstream line;
    (line << ... << parts);
    messages.push_back(line.str());
  }
  bool any() const { return !messages.empty(); }
  std::string joined() const {
    std::string out;
    for (const auto& m : messages) out += (out.empty() ? "" : "; ") + m;
    return out;
  }
};

// Runs body, timing it and converting exceptions into a failed result.
CriterionResult timed(int id, std::string title, const std::function<std::string(Failure&)>& body) {
  CriterionResult result{id, std::move(title), false, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  Failure failure;
  std::string summary;
  try {
    summary = body(failure);
  } catch (const std::exception& e) {
    failure("exception: ", e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = !failure.any();
  result.detail = failure.any() ? failure.joined() : summary;
  return result;
}

constexpr std::int64_t kTableCount[] = {12, 36, 12, 84, 72, 36, 96, 180, 12, 216};
constexpr std::int64_t kTableSigma3[] = {1, 9, 28, 73, 126, 252, 344, 585, 757, 1134};
constexpr std::int64_t kTableU[] = {1736, 5068, 1232, 10724, 8736, -1484, 8498, 13972, -12376, 8568};

}  // namespace

bool AcceptanceOutcome::all_passed() const {
  for (const auto& c : criteria) {
    if (!c.passed) return false;
  }
  return true;
}

std::vector<AuditEntry> audit_against_print(const PrintedCoefficients& printed, const Basis42& basis) {
  std::vector<AuditEntry> entries;
  auto append = [&entries](std::vector<AuditEntry> more) {
    entries.insert(entries.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };

  std::map<std::pair<std::uint64_t, std::uint64_t>, WFormula> formulas;
  for (const auto& [r, s] : kPairs) {
    const IdentitySolution sol = solve_identity(r, s, basis);
    const std::string key = std::to_string(r) + "," + std::to_string(s);
    append(diff_labelled("basis_decomposition " + key, labelled_basis_coefficients(sol),
                         printed.basis_decomposition(r, s)));
    append(diff_labelled("coefficientwise " + key, labelled_coefficientwise(sol), printed.coefficientwise(r, s)));
    formulas.emplace(std::pair{r, s}, derive_w_formula(sol));
  }
  const WFormula w1_14 = derive_w_formula(solve_identity(1, 14, basis));
  formulas.emplace(std::pair{std::uint64_t{1}, std::uint64_t{14}}, w1_14);
  for (const auto& [pair, f] : formulas) {
    const std::string key = std::to_string(pair.first) + "," + std::to_string(pair.second);
    append(diff_formulas("convolution_formula " + key, f.terms, printed.convolution_formula(pair.first, pair.second)));
  }

  const DivisorFormula n14 = derive_n14_formula(w1_14, formulas.at({3, 14}), formulas.at({1, 42}));
  append(diff_formulas("n14_formula", n14, printed.n14_formula()));
  append(diff_formulas("n14_compact_formula", n14, n14_compact_formula()));
  return entries;
}

AcceptanceOutcome run_acceptance(const AcceptanceOptions& options) {
  AcceptanceOutcome outcome;
  const std::size_t order = options.verify_order;

  outcome.criteria.push_back(timed(1, "N14 table reproduction (n = 1..10)", [](Failure& fail) {
    const CuspExpansions cusp(10);
    const auto rows = rep_table(10, cusp);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      if (row.count != kTableCount[i]) fail("N14(", row.n, ") = ", row.count.get_str());
      if (row.sigma3 != kTableSigma3[i]) fail("sigma3(", row.n, ") = ", row.sigma3.get_str());
      if (row.u != kTableU[i]) fail("u(", row.n, ") = ", row.u.get_str());
      if (row.formula != row.count) fail("S14(", row.n, ") = ", row.formula.get_str());
    }
    return std::string("10 rows match exactly");
  }));
  if (outcome.criteria.back().seconds >= 10.0) {
    outcome.criteria.back().passed = false;
    outcome.criteria.back().detail += "; runtime exceeded 10 s";
  }

  outcome.criteria.push_back(timed(2, "Basis sanity at T = 40", [](Failure& fail) {
    const Basis42 basis = build_basis(40);
    if (basis.ranks().cusp != 20) fail("cusp rank ", basis.ranks().cusp);
    if (basis.ranks().eisenstein != 8) fail("Eisenstein rank ", basis.ranks().eisenstein);
    if (basis.ranks().full != 28) fail("full rank ", basis.ranks().full);
    for (std::size_t k = 1; k <= kCuspFormCount; ++k) {
      const LigozatReport report = check_ligozat(cusp_form_family()[k - 1]);
      if (report.verdict != Verdict::CuspForm || report.weight != 4) {
        fail("C", k, " verdict ", to_string(report.verdict), " weight ", report.weight);
      }
    }
    return std::string("ranks 20/8/28, 20 cusp-form verdicts at weight 4");
  }));
  if (outcome.criteria.back().seconds >= 30.0) {
    outcome.criteria.back().passed = false;
    outcome.criteria.back().detail += "; runtime exceeded 30 s";
  }

  // Shared by criteria 3, 4 and the audit.
  std::optional<Basis42> basis;
  try {
    // The W_{1,42}(84) spot value needs expansions through q^84.
    basis.emplace(build_basis(std::max<std::size_t>(order, 84)));
  } catch (const std::exception&) {
    // Reported through the criteria below.
  }

  outcome.criteria.push_back(timed(3, "Identity verification through q^" + std::to_string(order), [&](Failure& fail) {
    if (!basis) throw std::runtime_error("basis construction failed");
    for (const auto& [r, s] : kPairs) {
      const IdentitySolution sol = solve_identity(r, s, *basis);
      const QSeries target = target_square(r, s, basis->truncation());
      const QSeries rebuilt = reconstruct(sol, *basis);
      for (std::size_t n = 0; n <= order; ++n) {
        if (rebuilt.at(n) != target.at(n)) {
          fail("(", r, ",", s, ") differs at q^", n);
          break;
        }
      }
      if (r == 1) {
        if (sol.x.at(1) != Rational(604, 625)) fail("x_1 = ", to_string(sol.x.at(1)));
        if (sol.y.at(7) != Rational(5340384, 25)) fail("y_7 = ", to_string(sol.y.at(7)));
      }
    }
    return std::string("4 decompositions exact; x_1 = 604/625, y_7 = 5340384/25");
  }));

  outcome.criteria.push_back(timed(4, "Convolution formulas vs brute force", [&](Failure& fail) {
    if (!basis) throw std::runtime_error("basis construction failed");
    const PrintedCoefficients printed = PrintedCoefficients::load(options.printed_path);
    std::vector<WFormula> formulas;
    for (const auto& [r, s] : kPairs) formulas.push_back(derive_w_formula(solve_identity(r, s, *basis)));
    formulas.push_back(derive_w_formula(solve_identity(1, 14, *basis)));
    formulas.push_back(WFormula{1, 14, printed.convolution_formula(1, 14)});
    for (const auto& f : formulas) {
      for (std::uint64_t n = 1; n <= order; ++n) {
        const Rational value = eval_w(f, n, basis->cusp_forms());
        if (value != Rational(brute_force_w(f.r, f.s, n))) {
          fail("W_{", f.r, ",", f.s, "}(", n, ") = ", to_string(value));
          break;
        }
      }
    }
    const WFormula& w1_42 = formulas.front();
    if (eval_w(w1_42, 43, basis->cusp_forms()) != 1) fail("W_{1,42}(43) != 1");
    if (eval_w(w1_42, 84, basis->cusp_forms()) != 96) fail("W_{1,42}(84) != 96");
    return std::string("4 pairs + (1,14) derived + (1,14) printed agree for n = 1..") + std::to_string(order);
  }));

  outcome.criteria.push_back(timed(5, "Quaternary representation count", [](Failure& fail) {
    for (std::uint64_t a = 1; a <= 200; ++a) {
      if (Integer(r4_enumerate(a)) != r4_formula(a)) fail("r(", a, ") enumeration != formula");
    }
    for (std::uint64_t a = 0; a <= 30; ++a) {
      if (r4_direct(a) != r4_enumerate(a)) fail("r(", a, ") direct != convolution");
    }
    return std::string("a = 1..200 formula, a = 0..30 direct search");
  }));

  outcome.criteria.push_back(timed(6, "Structural constants and Glaisher identity", [](Failure& fail) {
    if (gamma0_index(42) != 96) fail("index(42) = ", gamma0_index(42));
    if (sturm_bound(42) != 32) fail("sturm_bound(42) = ", sturm_bound(42));
    const QSeries l = eisenstein(EisensteinKind::E2, 1, 200);
    const QSeries l2 = l * l;
    if (l2.at(0) != 1) fail("L^2 constant term");
    for (std::uint64_t n = 1; n <= 200; ++n) {
      const Integer expected = 240 * sigma(3, n) - 288 * Integer(n) * sigma(1, n);
      if (l2.at(n) != Rational(expected)) fail("L^2 coefficient ", n);
    }
    return std::string("index 96, Sturm bound 32, L^2 matches through q^200");
  }));

  outcome.criteria.push_back(timed(7, "Printed-coefficient audit emitted", [&](Failure& fail) {
    if (!basis) throw std::runtime_error("basis construction failed");
    const PrintedCoefficients printed = PrintedCoefficients::load(options.printed_path);
    outcome.audit = audit_report(audit_against_print(printed, *basis));
    for (const auto& c : outcome.criteria) {
      if (!c.passed) fail("criterion ", c.id, " failed");
    }
    return std::to_string(outcome.audit.at("mismatches").get<std::size_t>()) + " printed coefficient(s) differ";
  }));

  return outcome;
}

nlohmann::json to_json(const AcceptanceOutcome& outcome) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : outcome.criteria) {
    list.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail},
                    {"seconds", c.seconds}});
  }
  return {{"passed", outcome.all_passed()}, {"criteria", std::move(list)}, {"audit", outcome.audit}};
}

}  // namespace eta42
