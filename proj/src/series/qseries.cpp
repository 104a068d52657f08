#include "series/qseries.hpp"

#include <algorithm>
#include <vector>

#include <json.hpp>

#include "core/error.hpp"

namespace macver {

namespace {

std::optional<Rational> min_order(const std::optional<Rational>& a,
                                  const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

bool within(const std::optional<Rational>& order, const Rational& e) { return !order || e <= *order; }

}  // namespace

QSeries::QSeries(Terms terms, std::optional<Rational> order) : order_(std::move(order)) {
  for (auto& [e, c] : terms) add_term(e, c);
}

QSeries QSeries::monomial(const Rational& coeff, const Rational& exponent,
                          std::optional<Rational> order) {
  QSeries s({}, std::move(order));
  s.add_term(exponent, coeff);
  return s;
}

void QSeries::add_term(const Rational& e, const Rational& c) {
  if (c == 0 || !within(order_, e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<Rational> QSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Rational QSeries::coefficient(const Rational& exponent) const {
  if (!within(order_, exponent))
    throw UsageError("coefficient of q^" + to_string(exponent) + " is beyond the series order " +
                     to_string(*order_));
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

QSeries QSeries::truncated(const Rational& order) const {
  QSeries s({}, min_order(order_, order));
  for (const auto& [e, c] : terms_) s.add_term(e, c);
  return s;
}

QSeries QSeries::substitute(const Rational& scale) const {
  if (scale <= 0) throw UsageError("substitution q -> q^s needs s > 0");
  QSeries s({}, order_ ? std::optional<Rational>(*order_ * scale) : std::nullopt);
  for (const auto& [e, c] : terms_) s.add_term(e * scale, c);
  return s;
}

QSeries QSeries::shifted(const Rational& shift) const {
  QSeries s({}, order_ ? std::optional<Rational>(*order_ + shift) : std::nullopt);
  for (const auto& [e, c] : terms_) s.add_term(e + shift, c);
  return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries s({}, min_order(a.order_, b.order_));
  for (const auto& [e, c] : a.terms_) s.add_term(e, c);
  for (const auto& [e, c] : b.terms_) s.add_term(e, c);
  return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + Rational(-1) * b; }

QSeries operator*(const Rational& k, const QSeries& a) {
  QSeries s({}, a.order_);
  for (const auto& [e, c] : a.terms_) s.add_term(e, k * c);
  return s;
}

QSeries mul(const QSeries& a, const QSeries& b) {
  // A zero series known to order o behaves like O(q^o).
  auto effective_valuation = [](const QSeries& s) -> std::optional<Rational> {
    if (auto v = s.valuation()) return v;
    return s.order();
  };
  std::optional<Rational> order;
  const auto va = effective_valuation(a), vb = effective_valuation(b);
  if (a.order() && vb) order = *a.order() + *vb;
  if (b.order() && va) order = min_order(order, *b.order() + *va);
  if ((a.order() && !vb) || (b.order() && !va)) {
    // One factor is the exact zero series.
    return QSeries({}, std::nullopt);
  }
  QSeries::Terms acc;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Rational e = ea + eb;
      if (order && e > *order) break;  // terms are sorted by exponent
      acc[e] += ca * cb;
    }
  }
  return QSeries(std::move(acc), order);
}

QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

QSeries invert(const QSeries& a, std::optional<Rational> order) {
  auto v = a.valuation();
  if (!v) throw DomainError("cannot invert the zero series");
  std::optional<Rational> target;
  if (a.order()) target = *a.order() - 2 * *v;
  target = min_order(target, order);
  if (!target) throw UsageError("inverting an exact series needs an explicit order");
  const Rational lead = a.terms().begin()->second;
  const Rational precision = *target + *v;  // relative to q^{-v}
  if (precision < 0) return QSeries({}, target);

  Integer den = 1;
  std::vector<std::pair<Rational, Rational>> u;  // relative exponent, coeff / lead
  for (const auto& [e, c] : a.terms()) {
    Rational r = e - *v;
    if (r == 0 || r > precision) continue;
    den = lcm(den, Integer(r.get_den()));
    u.emplace_back(r, c / lead);
  }
  const long n = to_int64(floor(precision * Rational(den)));
  std::vector<Rational> uk(static_cast<std::size_t>(n) + 1, Rational(0));
  for (const auto& [r, c] : u) uk[static_cast<std::size_t>(to_int64(r * Rational(den)))] = c;
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1, Rational(0));
  b[0] = 1;
  for (long k = 1; k <= n; ++k) {
    Rational s = 0;
    for (long j = 1; j <= k; ++j)
      if (uk[j] != 0 && b[k - j] != 0) s -= uk[j] * b[k - j];
    b[k] = s;
  }
  QSeries::Terms terms;
  for (long k = 0; k <= n; ++k)
    if (b[k] != 0) terms[-*v + make_rational(Integer(k), den)] = b[k] / lead;
  return QSeries(std::move(terms), target);
}

QSeries pow(const QSeries& a, long m, std::optional<Rational> order) {
  if (m < 0) {
    auto v = a.valuation();
    if (!v) throw DomainError("negative power of the zero series");
    std::optional<Rational> inv_order;
    // b = a^{-1} has valuation -v; b^k valid to o_b - (k - 1) v.
    if (order) inv_order = *order + Rational(-m - 1) * *v;
    return pow(invert(a, inv_order), -m, order);
  }
  // The running product starts from the exact unit, so only the factors
  // limit its precision.
  QSeries result = QSeries::monomial(1, 0);
  QSeries base = a;
  while (m > 0) {
    if (m & 1) result = mul(result, base);
    m >>= 1;
    if (m > 0) base = mul(base, base);
  }
  if (order) result = result.truncated(*order);
  return result;
}

QSeries eta(const Rational& scale, const Rational& order) {
  if (scale <= 0) throw UsageError("eta: scale must be positive");
  const Rational lead = scale / 24;
  if (order < lead) return QSeries({}, order);
  const long n = to_int64(floor((order - lead) / scale));
  std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (long k = 1; k <= n; ++k)
    for (long j = n; j >= k; --j) c[j] -= c[j - k];
  QSeries::Terms terms;
  for (long j = 0; j <= n; ++j)
    if (c[j] != 0) terms[lead + scale * j] = c[j];
  return QSeries(std::move(terms), order);
}

SeriesComparison compare(const QSeries& a, const QSeries& b, const Rational& order) {
  for (const auto* s : {&a, &b})
    if (s->order() && *s->order() < order)
      throw UsageError("series known only to q^" + to_string(*s->order()) +
                       ", cannot compare to q^" + to_string(order));
  SeriesComparison out;
  auto ia = a.terms().begin(), ib = b.terms().begin();
  const auto ea = a.terms().end(), eb = b.terms().end();
  while (true) {
    const bool has_a = ia != ea && ia->first <= order;
    const bool has_b = ib != eb && ib->first <= order;
    if (!has_a && !has_b) break;
    Rational e;
    Rational ca = 0, cb = 0;
    if (has_a && (!has_b || ia->first <= ib->first)) e = ia->first;
    else e = ib->first;
    if (has_a && ia->first == e) ca = (ia++)->second;
    if (has_b && ib->first == e) cb = (ib++)->second;
    ++out.terms_compared;
    if (ca != cb) {
      out.equal = false;
      out.exponent = e;
      out.lhs = ca;
      out.rhs = cb;
      break;
    }
  }
  return out;
}

namespace {

nlohmann::json integer_json(const Integer& z) {
  if (fits_int64(z)) return static_cast<std::int64_t>(mpz_get_si(z.get_mpz_t()));
  return to_string(z);
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw UsageError("bad integer string in series JSON");
    return z;
  }
  throw UsageError("series JSON: expected an integer");
}

}  // namespace

std::string to_json(const QSeries& s) {
  Integer den = 1;
  for (const auto& [e, c] : s.terms()) den = lcm(den, Integer(e.get_den()));
  if (s.order()) den = lcm(den, Integer(s.order()->get_den()));
  nlohmann::json j;
  j["denominator"] = integer_json(den);
  if (s.order()) j["order_num"] = integer_json(Integer(*s.order() * Rational(den)));
  else j["order_num"] = nullptr;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : s.terms())
    terms.push_back({integer_json(Integer(e * Rational(den))), integer_json(Integer(c.get_num())),
                     integer_json(Integer(c.get_den()))});
  j["terms"] = std::move(terms);
  return j.dump();
}

QSeries qseries_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("series JSON does not parse: ") + e.what());
  }
  if (!j.is_object() || !j.contains("denominator") || !j.contains("terms"))
    throw UsageError("series JSON needs denominator and terms");
  const Integer den = integer_from_json(j["denominator"]);
  if (den <= 0) throw UsageError("series JSON: denominator must be positive");
  std::optional<Rational> order;
  if (j.contains("order_num") && !j["order_num"].is_null())
    order = make_rational(integer_from_json(j["order_num"]), den);
  QSeries::Terms terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 3) throw UsageError("series JSON: each term has 3 entries");
    terms[make_rational(integer_from_json(t[0]), den)] =
        make_rational(integer_from_json(t[1]), integer_from_json(t[2]));
  }
  return QSeries(std::move(terms), order);
}

}  // namespace macver
