#include "eta42/formula.hpp"

#include <stdexcept>
#include <string>

#include "eta42/numtheory.hpp"

namespace eta42 {

DivisorFormula& DivisorFormula::operator+=(const DivisorFormula& other) {
  for (const auto& [t, c] : other.sigma3) sigma3[t] += c;
  for (const auto& [u, c] : other.sigma1) {
    auto& mine = sigma1[u];
    mine.constant += c.constant;
    mine.slope += c.slope;
  }
  for (const auto& [term, c] : other.cusp) cusp[term] += c;
  prune();
  return *this;
}

DivisorFormula operator*(const Rational& c, const DivisorFormula& f) {
  DivisorFormula out;
  for (const auto& [t, v] : f.sigma3) out.sigma3[t] = c * v;
  for (const auto& [u, v] : f.sigma1) out.sigma1[u] = {c * v.constant, c * v.slope};
  for (const auto& [term, v] : f.cusp) out.cusp[term] = c * v;
  out.prune();
  return out;
}

DivisorFormula DivisorFormula::at_fraction(std::uint64_t m) const {
  if (m == 0) throw std::invalid_argument("at_fraction: divisor must be positive");
  DivisorFormula out;
  for (const auto& [t, v] : sigma3) out.sigma3[t * m] = v;
  // (a + b·(n/m)) σ((n/m)/u) = (a + (b/m)·n) σ(n/(mu))
  for (const auto& [u, v] : sigma1) out.sigma1[u * m] = {v.constant, v.slope / m};
  for (const auto& [term, v] : cusp) out.cusp[{term.k, term.divisor * m}] = v;
  return out;
}

void DivisorFormula::prune() {
  std::erase_if(sigma3, [](const auto& kv) { return sgn(kv.second) == 0; });
  std::erase_if(sigma1, [](const auto& kv) { return sgn(kv.second.constant) == 0 && sgn(kv.second.slope) == 0; });
  std::erase_if(cusp, [](const auto& kv) { return sgn(kv.second) == 0; });
}

Rational DivisorFormula::evaluate(std::uint64_t n, const CuspExpansions& cusp_forms) const {
  Rational total = 0;
  for (const auto& [t, c] : sigma3) total += c * Rational(sigma(3, n, t));
  for (const auto& [u, c] : sigma1) total += (c.constant + c.slope * n) * Rational(sigma(1, n, u));
  for (const auto& [term, c] : cusp) total += c * cusp_forms.coefficient_at_fraction(term.k, n, term.divisor);
  return total;
}

std::string cusp_term_label(const CuspTerm& term) {
  std::string label = "c@" + std::to_string(term.k);
  if (term.divisor != 1) label += "/" + std::to_string(term.divisor);
  return label;
}

nlohmann::json to_json(const DivisorFormula& f) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [t, c] : f.sigma3) j["sigma3@" + std::to_string(t)] = to_string(c);
  for (const auto& [u, c] : f.sigma1) {
    j["linear@" + std::to_string(u)] = {{"constant", to_string(c.constant)}, {"slope", to_string(c.slope)}};
  }
  for (const auto& [term, c] : f.cusp) j[cusp_term_label(term)] = to_string(c);
  return j;
}

namespace {

std::uint64_t parse_index(const std::string& text, const std::string& label) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != text.size() || v == 0) throw std::invalid_argument("bad index in formula label '" + label + "'");
  return v;
}

}  // namespace

DivisorFormula divisor_formula_from_json(const nlohmann::json& j) {
  DivisorFormula f;
  for (const auto& [label, value] : j.items()) {
    const auto at = label.find('@');
    if (at == std::string::npos) throw std::invalid_argument("formula label without '@': '" + label + "'");
    const std::string kind = label.substr(0, at);
    const std::string rest = label.substr(at + 1);
    if (kind == "sigma3") {
      f.sigma3[parse_index(rest, label)] = parse_rational(value.get<std::string>());
    } else if (kind == "linear") {
      f.sigma1[parse_index(rest, label)] = {parse_rational(value.at("constant").get<std::string>()),
                                            parse_rational(value.at("slope").get<std::string>())};
    } else if (kind == "c") {
      const auto slash = rest.find('/');
      CuspTerm term{parse_index(rest.substr(0, slash), label),
                    slash == std::string::npos ? 1 : parse_index(rest.substr(slash + 1), label)};
      if (term.k > kCuspFormCount) throw std::invalid_argument("cusp index out of range in '" + label + "'");
      f.cusp[term] = parse_rational(value.get<std::string>());
    } else {
      throw std::invalid_argument("unknown formula term '" + label + "'");
    }
  }
  f.prune();
  return f;
}

}  // namespace eta42
