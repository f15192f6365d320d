#include "eta42/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "eta42/acceptance.hpp"
#include "eta42/numtheory.hpp"

namespace eta42::cli {

namespace {

enum class Format { Text, Json, Csv };

struct Options {
  std::string format = "text";
  std::string out_path;

  std::string spec_text;
  std::size_t order = 0;  // 0 means the subcommand default

  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::string pairs_file;
  std::string printed_path = PrintedCoefficients::default_path();

  std::uint64_t n = 0;
  std::uint64_t max_n = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& f) {
  if (f == "text") return Format::Text;
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  throw UsageError("unknown format '" + f + "'");
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> read_pairs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open pairs file '" + path + "'");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::uint64_t r = 0, s = 0;
    if (!(fields >> r)) continue;  // blank line
    std::string extra;
    if (!(fields >> s) || (fields >> extra)) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected 'r s'");
    }
    require_supported_pair(r, s);
    pairs.emplace_back(r, s);
  }
  return pairs;
}

void print_kv_block(std::ostream& out, const std::map<std::string, Rational>& values) {
  for (const auto& [label, v] : values) out << "  " << label << " = " << to_string(v) << "\n";
}

int cmd_expand(const Options& o, Format fmt, std::ostream& out) {
  const EtaQuotientSpec spec = parse_eta_spec(o.spec_text);
  const QSeries s = eta_quotient_series(spec, o.order == 0 ? 40 : o.order);
  if (fmt == Format::Json) {
    out << nlohmann::json{{"spec", to_string(spec)}, {"series", to_json(s)}}.dump(2) << "\n";
  } else {
    out << to_display_string(s) << "\n";
  }
  return kExitOk;
}

int cmd_check(const Options& o, Format fmt, std::ostream& out) {
  const EtaQuotientSpec spec = parse_eta_spec(o.spec_text);
  const LigozatReport report = check_ligozat(spec);
  if (fmt == Format::Json) {
    auto j = to_json(report);
    j["spec"] = to_string(spec);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "spec: " << to_string(spec) << "\n"
      << "(i)   sum delta*r = 0 mod 24:         " << yn(report.condition_i) << "\n"
      << "(ii)  sum (N/delta)*r = 0 mod 24:     " << yn(report.condition_ii) << "\n"
      << "(iii) prod delta^r rational square:   " << yn(report.condition_iii) << "\n"
      << "(iv)  cusp orders nonnegative:        " << yn(report.condition_iv)
      << (report.condition_iv_strict ? " (strict)" : "") << "\n"
      << "(v)   weight even integer:            " << yn(report.condition_v) << "\n"
      << "weight: " << report.weight << "\n"
      << "verdict: " << to_string(report.verdict) << "\n";
  return kExitOk;
}

int cmd_basis(const Options& o, Format fmt, std::ostream& out) {
  const Basis42 basis = build_basis(o.order == 0 ? 40 : o.order);
  const auto& ranks = basis.ranks();
  std::vector<nlohmann::json> reports;
  bool all_cusp = true;
  for (std::size_t k = 1; k <= kCuspFormCount; ++k) {
    const auto report = check_ligozat(cusp_form_family()[k - 1]);
    all_cusp = all_cusp && report.verdict == Verdict::CuspForm && report.weight == 4;
    reports.push_back({{"label", "C@" + std::to_string(k)},
                       {"spec", to_string(cusp_form_family()[k - 1])},
                       {"verdict", std::string(to_string(report.verdict))},
                       {"weight", report.weight}});
  }
  const bool ok = ranks.full == kBasisSize && ranks.cusp == kCuspFormCount && all_cusp;
  if (fmt == Format::Json) {
    out << nlohmann::json{{"truncation", basis.truncation()},
                          {"window", sturm_bound(kLevel)},
                          {"rank_full", ranks.full},
                          {"rank_eisenstein", ranks.eisenstein},
                          {"rank_cusp", ranks.cusp},
                          {"cusp_forms", reports},
                          {"ok", ok}}
               .dump(2)
        << "\n";
  } else {
    out << "truncation " << basis.truncation() << ", window q^0..q^" << sturm_bound(kLevel) << "\n"
        << "rank: full " << ranks.full << "/" << kBasisSize << ", eisenstein " << ranks.eisenstein << "/8, cusp "
        << ranks.cusp << "/20\n";
    for (const auto& r : reports) {
      out << "  " << r["label"].get<std::string>() << "  " << r["spec"].get<std::string>() << "  "
          << r["verdict"].get<std::string>() << " (weight " << r["weight"].get<long>() << ")\n";
    }
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_solve(const Options& o, Format fmt, std::ostream& out) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  if (!o.pairs_file.empty()) {
    pairs = read_pairs_file(o.pairs_file);
  } else {
    if (o.r == 0 || o.s == 0) throw UsageError("solve needs 'r s' or --pairs-file");
    require_supported_pair(o.r, o.s);
    pairs.emplace_back(o.r, o.s);
  }
  const Basis42 basis = build_basis(o.order == 0 ? 40 : o.order);
  const PrintedCoefficients printed = PrintedCoefficients::load(o.printed_path);

  nlohmann::json results = nlohmann::json::array();
  for (const auto& [r, s] : pairs) {
    const IdentitySolution sol = solve_identity(r, s, basis);
    const WFormula w = derive_w_formula(sol);
    std::vector<AuditEntry> diff;
    if (printed.has_pair(r, s)) {
      const std::string key = std::to_string(r) + "," + std::to_string(s);
      if (printed.document.at("basis_decomposition").contains(key)) {
        auto more = diff_labelled("basis_decomposition " + key, labelled_basis_coefficients(sol),
                                  printed.basis_decomposition(r, s));
        diff.insert(diff.end(), more.begin(), more.end());
      }
      auto more = diff_formulas("convolution_formula " + key, w.terms, printed.convolution_formula(r, s));
      diff.insert(diff.end(), more.begin(), more.end());
    }
    const auto audit = audit_report(diff);

    if (fmt == Format::Json) {
      auto j = to_json(sol);
      j["w_formula"] = to_json(w.terms);
      j["audit"] = audit;
      results.push_back(std::move(j));
      continue;
    }
    out << "(" << r << "L(q^" << r << ") - " << s << "L(q^" << s << "))^2 in the M4(Gamma0(42)) basis:\n";
    print_kv_block(out, labelled_basis_coefficients(sol));
    out << "W_{" << r << "," << s << "}(n) terms:\n";
    print_kv_block(out, flatten(w.terms));
    if (!printed.has_pair(r, s)) {
      out << "no printed coefficients for this pair\n";
    } else {
      out << "printed-coefficient diff: " << audit.at("mismatches").get<std::size_t>() << " mismatch(es)\n";
      for (const auto& e : audit.at("entries")) {
        if (e.at("match").get<bool>()) continue;
        out << "  " << e.at("section").get<std::string>() << " " << e.at("label").get<std::string>()
            << ": derived " << e.at("derived").dump() << ", printed " << e.at("printed").dump() << "\n";
      }
    }
  }
  if (fmt == Format::Json) out << (results.size() == 1 ? results[0] : results).dump(2) << "\n";
  return kExitOk;
}

int cmd_wsum(const std::string& mode, const Options& o, Format fmt, std::ostream& out) {
  require_supported_pair(o.r, o.s);
  const std::size_t limit = mode == "eval" ? std::max<std::size_t>(o.n, 40) : (o.max_n == 0 ? 300 : o.max_n);
  const std::size_t order = o.order == 0 ? std::max<std::size_t>(limit, 40) : o.order;
  const Basis42 basis = build_basis(order);
  const WFormula w = derive_w_formula(solve_identity(o.r, o.s, basis));

  if (mode == "eval") {
    if (o.n == 0) throw UsageError("wsum eval needs --n N with N >= 1");
    if (o.n > basis.truncation()) {
      throw UsageError("n = " + std::to_string(o.n) + " is beyond the expansion order " +
                       std::to_string(basis.truncation()));
    }
    const Rational value = eval_w(w, o.n, basis.cusp_forms());
    if (fmt == Format::Json) {
      out << nlohmann::json{{"r", o.r}, {"s", o.s}, {"n", o.n}, {"value", to_string(value)}}.dump(2) << "\n";
    } else {
      out << to_string(value) << "\n";
    }
    return kExitOk;
  }

  const std::uint64_t max_n = o.max_n == 0 ? 300 : o.max_n;
  if (max_n > basis.truncation()) {
    throw UsageError("--max " + std::to_string(max_n) + " is beyond the expansion order " +
                     std::to_string(basis.truncation()));
  }
  nlohmann::json failures = nlohmann::json::array();
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    const Rational formula = eval_w(w, n, basis.cusp_forms());
    const Integer brute = brute_force_w(o.r, o.s, n);
    if (formula != Rational(brute)) {
      failures.push_back({{"n", n}, {"formula", to_string(formula)}, {"brute_force", brute.get_str()}});
    }
  }
  const bool ok = failures.empty();
  if (fmt == Format::Json) {
    out << nlohmann::json{{"r", o.r}, {"s", o.s}, {"max", max_n}, {"passed", ok}, {"failures", failures}}.dump(2)
        << "\n";
  } else {
    out << "W_{" << o.r << "," << o.s << "}(n), n = 1.." << max_n << ": "
        << (ok ? "formula matches brute force" : std::to_string(failures.size()) + " mismatches") << "\n";
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_rep_table(const Options& o, Format fmt, std::ostream& out) {
  const std::uint64_t max_n = o.max_n == 0 ? 10 : o.max_n;
  const CuspExpansions cusp(std::max<std::size_t>(max_n, 1));
  const auto rows = rep_table(max_n, cusp);
  bool ok = true;
  for (const auto& row : rows) ok = ok && row.count == row.formula;
  if (fmt == Format::Json) {
    out << to_json(rows).dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    out << to_csv(rows);
  } else {
    out << "     n      N14(n)   sigma3(n)        u(n)      S14(n)\n";
    for (const auto& row : rows) {
      out << std::setw(6) << row.n << std::setw(12) << row.count.get_str() << std::setw(12) << row.sigma3.get_str()
          << std::setw(12) << row.u.get_str() << std::setw(12) << row.formula.get_str() << "\n";
    }
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_all(const Options& o, Format fmt, std::ostream& out) {
  AcceptanceOptions options;
  if (o.order != 0) options.verify_order = o.order;
  options.printed_path = o.printed_path;
  const AcceptanceOutcome outcome = run_acceptance(options);
  if (fmt == Format::Json) {
    out << to_json(outcome).dump(2) << "\n";
  } else {
    for (const auto& c : outcome.criteria) {
      out << (c.passed ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << " (" << std::fixed
          << std::setprecision(2) << c.seconds << " s): " << c.detail << "\n";
    }
    if (outcome.audit.is_object()) {
      for (const auto& e : outcome.audit.at("entries")) {
        if (e.at("match").get<bool>()) continue;
        out << "  audit " << e.at("section").get<std::string>() << " " << e.at("label").get<std::string>()
            << ": derived " << e.at("derived").dump() << ", printed " << e.at("printed").dump() << "\n";
      }
    }
  }
  if (!outcome.all_passed() && fmt != Format::Json) {
    // Machine-readable failure report alongside the text summary.
    nlohmann::json failed = nlohmann::json::array();
    for (const auto& c : outcome.criteria) {
      if (!c.passed) failed.push_back({{"id", c.id}, {"detail", c.detail}});
    }
    out << nlohmann::json{{"failed", failed}}.dump() << "\n";
  }
  return outcome.all_passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact eta-quotient and convolution-sum engine for level 42", "eta42"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", o.out_path, "Write the report to this file instead of stdout");

  auto* expand = app.add_subcommand("expand", "Print the q-expansion of an eta quotient");
  expand->add_option("spec", o.spec_text, "Eta quotient, e.g. \"42: 1^5 2^-1 7^5 14^-1\"")->required();
  expand->add_option("--order", o.order, "Truncation order (default 40)")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Evaluate the modularity conditions for an eta quotient");
  check->add_option("spec", o.spec_text, "Eta quotient spec")->required();

  auto* basis = app.add_subcommand("basis", "Build the M4(Gamma0(42)) basis and print rank diagnostics");
  basis->add_option("--order", o.order, "Truncation order (default 40)")->check(CLI::Range(32, 100000));

  auto* solve = app.add_subcommand("solve", "Decompose (rL(q^r) - sL(q^s))^2 and derive W_{r,s}");
  solve->add_option("r", o.r, "r")->check(CLI::PositiveNumber);
  solve->add_option("s", o.s, "s")->check(CLI::PositiveNumber);
  solve->add_option("--pairs-file", o.pairs_file, "File with one 'r s' pair per line");
  solve->add_option("--order", o.order, "Truncation order (default 40)")->check(CLI::Range(32, 100000));
  solve->add_option("--printed", o.printed_path, "Printed coefficient transcription (JSON)");

  auto* wsum = app.add_subcommand("wsum", "Evaluate or verify a convolution-sum formula");
  std::string wsum_mode;
  wsum->add_option("mode", wsum_mode, "eval or verify")->required()->check(CLI::IsMember({"eval", "verify"}));
  wsum->add_option("r", o.r, "r")->required()->check(CLI::PositiveNumber);
  wsum->add_option("s", o.s, "s")->required()->check(CLI::PositiveNumber);
  wsum->add_option("--n", o.n, "Argument for eval")->check(CLI::PositiveNumber);
  wsum->add_option("--max", o.max_n, "Verify n = 1..max (default 300)")->check(CLI::PositiveNumber);
  wsum->add_option("--order", o.order, "Expansion order")->check(CLI::Range(32, 100000));

  auto* rep = app.add_subcommand("rep", "Representation numbers of the octonary form");
  std::string rep_mode;
  rep->add_option("mode", rep_mode, "table")->required()->check(CLI::IsMember({"table"}));
  rep->add_option("--max", o.max_n, "Rows n = 1..max (default 10)")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify-all", "Run every acceptance criterion");
  verify->add_option("--order", o.order, "Verification order (default 300)")->check(CLI::Range(32, 100000));
  verify->add_option("--printed", o.printed_path, "Printed coefficient transcription (JSON)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "cannot open output file '" << o.out_path << "'\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = o.out_path.empty() ? out : file;

  try {
    const Format fmt = parse_format(o.format);
    if (fmt == Format::Csv && !rep->parsed()) throw UsageError("--format csv is only supported by 'rep table'");
    if (expand->parsed()) return cmd_expand(o, fmt, sink);
    if (check->parsed()) return cmd_check(o, fmt, sink);
    if (basis->parsed()) return cmd_basis(o, fmt, sink);
    if (solve->parsed()) return cmd_solve(o, fmt, sink);
    if (wsum->parsed()) return cmd_wsum(wsum_mode, o, fmt, sink);
    if (rep->parsed()) return cmd_rep_table(o, fmt, sink);
    if (verify->parsed()) return cmd_verify_all(o, fmt, sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    nlohmann::json report{{"error", e.what()}};
    sink << report.dump() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace eta42::cli
