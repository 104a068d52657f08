#pragma once

#include <map>
#include <optional>
#include <string>

#include "core/rational.hpp"

namespace macver {

// Sparse series sum c_e q^e with rational exponents and coefficients. order()
// is the absolute truncation bound: coefficients at exponents <= order are
// exact, beyond it nothing is known. nullopt means the series is exact
// (a finite sum).
class QSeries {
 public:
  using Terms = std::map<Rational, Rational>;

  QSeries() = default;
  QSeries(Terms terms, std::optional<Rational> order);
  static QSeries monomial(const Rational& coeff, const Rational& exponent,
                          std::optional<Rational> order = std::nullopt);

  const Terms& terms() const { return terms_; }
  const std::optional<Rational>& order() const { return order_; }
  bool is_exact() const { return !order_.has_value(); }
  bool is_zero() const { return terms_.empty(); }
  // Smallest exponent with a nonzero coefficient.
  std::optional<Rational> valuation() const;
  Rational coefficient(const Rational& exponent) const;

  // Drops everything above the new order (which may only shrink).
  QSeries truncated(const Rational& order) const;
  // q -> q^s.
  QSeries substitute(const Rational& s) const;
  // Multiplies by q^shift.
  QSeries shifted(const Rational& shift) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& s, const QSeries& a);
  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  void add_term(const Rational& e, const Rational& c);
  Terms terms_;
  std::optional<Rational> order_;
};

// Product, valid to min(o_a + v_b, o_b + v_a).
QSeries mul(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);
// Inverse of a series with a nonzero leading term; valid to o - 2v. An exact
// input needs an explicit absolute order for the result. Throws DomainError
// on the zero series.
QSeries invert(const QSeries& a, std::optional<Rational> order = std::nullopt);
// Negative powers go through invert (order required for exact input).
QSeries pow(const QSeries& a, long m, std::optional<Rational> order = std::nullopt);

// q^{s/24} prod_{n>=1} (1 - q^{sn}), exact up to the absolute exponent order.
QSeries eta(const Rational& scale, const Rational& order);

struct SeriesComparison {
  bool equal = true;
  std::optional<Rational> exponent;  // first mismatch
  Rational lhs;
  Rational rhs;
  std::size_t terms_compared = 0;
};

// Compares every exponent <= order. Throws UsageError if either side is not
// valid up to order.
SeriesComparison compare(const QSeries& a, const QSeries& b, const Rational& order);

// {"denominator": D, "order_num": N | null,
//  "terms": [[exponent_numerator, coeff_numerator, coeff_denominator], ...]}
// Integers outside int64 are written as decimal strings.
std::string to_json(const QSeries& s);
QSeries qseries_from_json(const std::string& text);

}  // namespace macver
