#include "identity/lattice_enum.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace macver {

EnumerationResult enumerate_ellipsoid(const Matrix& gram, const RationalVector& center,
                                      const Rational& bound) {
  const std::size_t n = gram.rows();
  if (gram.cols() != n || center.size() != n)
    throw UsageError("enumerate_ellipsoid: dimension mismatch");
  if (definiteness(GramForm(gram)).kind != FormKind::PositiveDefinite)
    throw DomainError("enumerate_ellipsoid needs a positive definite form");

  // Q(y) = sum_i q[i][i] (y_i + sum_{j>i} q[i][j] y_j)^2.
  Matrix q = gram;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t m = k; m < n; ++m) q(k, m) -= q(k, i) * q(i, m);
  }

  EnumerationResult res;
  res.certificate.bound = bound;
  res.certificate.nodes_per_level.assign(n, 0);
  if (bound < 0) return res;

  IntVector x(n, 0);
  std::vector<Rational> budget(n + 1);
  budget[n] = bound;

  auto rec = [&](auto&& self, std::size_t level) -> void {
    const std::size_t i = level - 1;
    // Center of coordinate i given the coordinates above it.
    Rational ctr = center[i];
    for (std::size_t j = i + 1; j < n; ++j) ctr -= q(i, j) * (Rational(x[j]) - center[j]);
    const Rational& room = budget[level];
    auto try_value = [&](long v) {
      Rational d = Rational(v) - ctr;
      Rational used = q(i, i) * d * d;
      if (used > room) return false;
      ++res.certificate.nodes_per_level[n - level];
      x[i] = v;
      budget[i] = room - used;
      if (i == 0) res.points.push_back(x);
      else self(self, i);
      return true;
    };
    const long start = to_int64(floor(ctr));
    // Values on each side of ctr; the quadratic grows monotonically away from it.
    for (long v = start; try_value(v); --v) {
    }
    for (long v = start + 1; try_value(v); ++v) {
    }
  };
  if (n == 0) {
    res.points.push_back({});
  } else {
    rec(rec, n);
  }
  std::sort(res.points.begin(), res.points.end());
  res.certificate.points = res.points.size();
  return res;
}

EnumerationResult enumerate_shifted_lattice(const GramForm& form,
                                            const std::vector<RationalVector>& basis,
                                            const RationalVector& shift, const Rational& bound) {
  const Matrix t = Matrix::from_columns(basis);
  if (t.rows() != form.dim() || t.cols() != form.dim())
    throw UsageError("enumerate_shifted_lattice needs a full-rank basis");
  const Matrix gram = t.transpose() * form.gram() * t;
  const RationalVector center = -(inverse(t) * shift);
  return enumerate_ellipsoid(gram, center, bound);
}

}  // namespace macver
