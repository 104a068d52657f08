#pragma once

#include <cstddef>
#include <vector>

#include "core/linalg.hpp"

namespace macver {

// Trace of a Fincke-Pohst run: the bound and the number of tree nodes
// visited at each depth (depth 0 is the last coordinate).
struct EnumerationCertificate {
  Rational bound;
  std::vector<std::size_t> nodes_per_level;
  std::size_t points = 0;
};

struct EnumerationResult {
  std::vector<IntVector> points;
  EnumerationCertificate certificate;
};

// All x in Z^n with (x - center)^T gram (x - center) <= bound, for a positive
// definite rational gram. Exact: every comparison is done over Q. Points are
// returned in lexicographic order.
EnumerationResult enumerate_ellipsoid(const Matrix& gram, const RationalVector& center,
                                      const Rational& bound);

// All x in Z^n with I(shift + sum_j x_j basis_j)^2 <= bound, for linearly
// independent basis vectors of a positive definite form.
EnumerationResult enumerate_shifted_lattice(const GramForm& form,
                                            const std::vector<RationalVector>& basis,
                                            const RationalVector& shift, const Rational& bound);

}  // namespace macver
