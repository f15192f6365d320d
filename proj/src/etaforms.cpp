#include "eta42/etaforms.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eta42/numtheory.hpp"

namespace eta42 {

EtaQuotientSpec::EtaQuotientSpec(std::uint64_t level, std::map<std::uint64_t, int> exponents) : level_(level) {
  if (level == 0) throw std::invalid_argument("eta quotient level must be positive");
  for (const auto& [delta, r] : exponents) {
    if (delta == 0 || level % delta != 0) {
      throw std::invalid_argument("eta factor " + std::to_string(delta) + " does not divide level " +
                                  std::to_string(level));
    }
    if (r != 0) exponents_.emplace(delta, r);
  }
  if (exponents_.empty()) throw std::invalid_argument("eta quotient needs at least one nonzero exponent");
}

std::int64_t EtaQuotientSpec::weighted_sum() const {
  std::int64_t total = 0;
  for (const auto& [delta, r] : exponents_) total += static_cast<std::int64_t>(delta) * r;
  return total;
}

std::int64_t EtaQuotientSpec::exponent_sum() const {
  std::int64_t total = 0;
  for (const auto& [delta, r] : exponents_) total += r;
  return total;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view token, std::string_view what) {
  T value{};
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(token) + "' in eta spec");
  }
  return value;
}

}  // namespace

EtaQuotientSpec parse_eta_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("eta spec must look like 'N: d^r d^r ...', got '" + std::string(text) + "'");
  }
  const auto level = parse_number<std::uint64_t>(trim(text.substr(0, colon)), "level");

  std::map<std::uint64_t, int> exponents;
  std::istringstream factors{std::string(text.substr(colon + 1))};
  std::string token;
  while (factors >> token) {
    const auto caret = token.find('^');
    const std::string_view tv = token;
    const auto delta = parse_number<std::uint64_t>(tv.substr(0, caret), "eta factor");
    const int r = caret == std::string::npos ? 1 : parse_number<int>(tv.substr(caret + 1), "exponent");
    if (exponents.count(delta) != 0) {
      throw std::invalid_argument("eta factor " + std::to_string(delta) + " listed twice");
    }
    exponents.emplace(delta, r);
  }
  return EtaQuotientSpec(level, std::move(exponents));
}

std::string to_string(const EtaQuotientSpec& spec) {
  std::ostringstream out;
  out << spec.level() << ":";
  for (const auto& [delta, r] : spec.exponents()) out << " " << delta << "^" << r;
  return out.str();
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::NotModular:
      return "not-modular";
    case Verdict::ModularForm:
      return "modular-form";
    case Verdict::CuspForm:
      return "cusp-form";
  }
  return "unknown";
}

LigozatReport check_ligozat(const EtaQuotientSpec& spec) {
  LigozatReport report;
  const std::uint64_t level = spec.level();
  const auto mod24 = [](std::int64_t v) { return ((v % 24) + 24) % 24; };

  report.condition_i = mod24(spec.weighted_sum()) == 0;

  std::int64_t dual_sum = 0;
  for (const auto& [delta, r] : spec.exponents()) dual_sum += static_cast<std::int64_t>(level / delta) * r;
  report.condition_ii = mod24(dual_sum) == 0;

  // Signed prime-exponent vector of Π δ^{r_δ}.
  std::map<std::uint64_t, std::int64_t> prime_exponents;
  for (const auto& [delta, r] : spec.exponents()) {
    std::uint64_t m = delta;
    for (std::uint64_t p : prime_divisors(delta)) {
      while (m % p == 0) {
        prime_exponents[p] += r;
        m /= p;
      }
    }
  }
  report.condition_iii = true;
  for (const auto& [p, e] : prime_exponents) {
    if (e % 2 != 0) report.condition_iii = false;
  }

  report.condition_iv = true;
  report.condition_iv_strict = true;
  for (std::uint64_t d : divisors(level)) {
    Rational order = 0;
    for (const auto& [delta, r] : spec.exponents()) {
      const std::uint64_t g = std::gcd(d, delta);
      order += fraction(Integer(g * g) * r, Integer(delta));
    }
    order.canonicalize();
    if (sgn(order) < 0) report.condition_iv = false;
    if (sgn(order) <= 0) report.condition_iv_strict = false;
    report.cusp_orders.emplace(d, order);
  }
  if (!report.condition_iv) report.condition_iv_strict = false;

  const std::int64_t twice_weight = spec.exponent_sum();
  report.weight = twice_weight / 2;
  report.condition_v = twice_weight % 2 == 0 && report.weight % 2 == 0;

  const bool modular = report.condition_i && report.condition_ii && report.condition_iii && report.condition_iv &&
                       report.condition_v;
  if (!modular) {
    report.verdict = Verdict::NotModular;
  } else {
    report.verdict = report.condition_iv_strict ? Verdict::CuspForm : Verdict::ModularForm;
  }
  return report;
}

nlohmann::json to_json(const LigozatReport& report) {
  nlohmann::json orders = nlohmann::json::object();
  for (const auto& [d, v] : report.cusp_orders) orders[std::to_string(d)] = to_string(v);
  return {{"condition_i", report.condition_i},
          {"condition_ii", report.condition_ii},
          {"condition_iii", report.condition_iii},
          {"condition_iv", report.condition_iv},
          {"condition_iv_strict", report.condition_iv_strict},
          {"condition_v", report.condition_v},
          {"weight", report.weight},
          {"cusp_orders", std::move(orders)},
          {"verdict", std::string(to_string(report.verdict))}};
}

QSeries euler_series(std::size_t truncation) {
  if (truncation == 0) throw std::invalid_argument("euler_series: truncation must be positive");
  // Multiply in one factor (1 - q^n) at a time, in place, high index first.
  std::vector<Rational> c(truncation + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= truncation; ++n) {
    for (std::size_t i = truncation; i >= n; --i) c[i] -= c[i - n];
  }
  return QSeries(std::move(c));
}

QSeries eta_quotient_series(const EtaQuotientSpec& spec, std::size_t truncation) {
  const std::int64_t weighted = spec.weighted_sum();
  if (weighted % 24 != 0 || weighted < 0) {
    throw std::domain_error("eta quotient '" + to_string(spec) + "' has q-prefactor exponent " +
                            std::to_string(weighted) + "/24, not a nonnegative integer");
  }
  const auto lead = static_cast<std::size_t>(weighted / 24);
  if (lead > truncation) return QSeries(truncation);

  const std::size_t body_order = std::max<std::size_t>(truncation - lead, 1);
  const QSeries euler = euler_series(body_order);
  QSeries body = QSeries::constant(1, body_order);
  for (const auto& [delta, r] : spec.exponents()) {
    QSeries factor = power(substitute_power(euler, delta), static_cast<unsigned>(r < 0 ? -r : r));
    if (r < 0) factor = invert(factor, "eta factor " + std::to_string(delta));
    body = body * factor;
  }

  std::vector<Rational> out(truncation + 1);
  for (std::size_t n = 0; n + lead <= truncation; ++n) out[n + lead] = body.at(n);
  return QSeries(std::move(out));
}

QSeries eisenstein(EisensteinKind kind, std::size_t t, std::size_t truncation) {
  if (t == 0) throw std::invalid_argument("eisenstein: t must be positive");
  const unsigned k = kind == EisensteinKind::E2 ? 1 : 3;
  const Rational scale = kind == EisensteinKind::E2 ? -24 : 240;
  std::vector<Rational> c(truncation + 1);
  c[0] = 1;
  for (std::size_t n = t; n <= truncation; n += t) c[n] = scale * Rational(sigma(k, n, t));
  return QSeries(std::move(c));
}

const std::array<EtaQuotientSpec, kCuspFormCount>& cusp_form_family() {
  static const std::array<EtaQuotientSpec, kCuspFormCount> family = {
      EtaQuotientSpec(42, {{1, 5}, {2, -1}, {7, 5}, {14, -1}}),
      EtaQuotientSpec(42, {{1, 2}, {2, 2}, {7, 2}, {14, 2}}),
      EtaQuotientSpec(42, {{1, 6}, {2, -2}, {7, -2}, {14, 6}}),
      EtaQuotientSpec(42, {{1, -2}, {2, 6}, {7, 6}, {14, -2}}),
      EtaQuotientSpec(42, {{1, 2}, {2, 2}, {3, 2}, {6, 2}}),
      EtaQuotientSpec(42, {{2, 1}, {3, 3}, {7, 1}, {42, 3}}),
      EtaQuotientSpec(42, {{1, 1}, {6, 3}, {14, 1}, {21, 3}}),
      EtaQuotientSpec(42, {{7, 2}, {14, 2}, {21, 2}, {42, 2}}),
      EtaQuotientSpec(42, {{3, 1}, {6, 1}, {7, 3}, {14, 3}}),
      EtaQuotientSpec(42, {{2, 2}, {6, 2}, {7, 2}, {21, 2}}),
      EtaQuotientSpec(42, {{1, 1}, {2, 1}, {21, 3}, {42, 3}}),
      EtaQuotientSpec(42, {{1, 3}, {6, 1}, {14, 3}, {21, 1}}),
      EtaQuotientSpec(42, {{1, 3}, {2, 3}, {21, 1}, {42, 1}}),
      EtaQuotientSpec(42, {{2, 2}, {7, -2}, {14, 2}, {21, 6}}),
      EtaQuotientSpec(42, {{2, 6}, {3, 2}, {6, -2}, {21, 2}}),
      EtaQuotientSpec(42, {{1, -1}, {2, 5}, {21, 5}, {42, -1}}),
      EtaQuotientSpec(42, {{3, -2}, {6, 6}, {21, 6}, {42, -2}}),
      // The printed numerator carries a stray comma; all listed factors are kept.
      EtaQuotientSpec(42, {{3, -1}, {6, 3}, {7, 1}, {14, 1}, {21, 4}}),
      EtaQuotientSpec(42, {{3, 2}, {6, 2}, {21, 2}, {42, 2}}),
      EtaQuotientSpec(42, {{3, 4}, {6, -2}, {7, -2}, {14, 4}, {21, 2}, {42, 2}}),
  };
  return family;
}

CuspExpansions::CuspExpansions(std::size_t truncation) : truncation_(truncation) {
  series_.reserve(kCuspFormCount);
  for (const auto& spec : cusp_form_family()) series_.push_back(eta_quotient_series(spec, truncation));
}

const QSeries& CuspExpansions::series(std::size_t k) const {
  if (k < 1 || k > kCuspFormCount) throw std::out_of_range("cusp form index must be in 1..20");
  return series_[k - 1];
}

const Rational& CuspExpansions::coefficient(std::size_t k, std::size_t n) const { return series(k).at(n); }

Rational CuspExpansions::coefficient_at_fraction(std::size_t k, std::uint64_t n, std::uint64_t m) const {
  if (m == 0) throw std::invalid_argument("cusp coefficient divisor must be positive");
  if (n % m != 0) {
    series(k);  // validates k
    return 0;
  }
  return coefficient(k, n / m);
}

}  // namespace eta42
