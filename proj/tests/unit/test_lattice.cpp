#include <doctest.h>

#include <random>

#include "core/error.hpp"
#include "identity/lattice_enum.hpp"

using namespace macver;

namespace {

// Every integer point of a box known to contain the ellipsoid.
std::vector<IntVector> brute_force(const Matrix& g, const RationalVector& center,
                                   const Rational& bound, long radius) {
  const std::size_t n = g.rows();
  std::vector<IntVector> out;
  IntVector x(n);
  std::vector<long> base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = to_int64(floor(center[i]));
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      RationalVector d(n);
      for (std::size_t k = 0; k < n; ++k) d[k] = Rational(x[k]) - center[k];
      if (GramForm(g).norm2(d) <= bound) out.push_back(x);
      return;
    }
    for (long v = base[i] - radius; v <= base[i] + radius + 1; ++v) {
      x[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("unit ball in Z^2") {
    const auto r = enumerate_ellipsoid(Matrix::identity(2), {0, 0}, 1);
    CHECK(r.points.size() == 5);
    CHECK(r.certificate.points == 5);
    CHECK(r.certificate.nodes_per_level[0] == 3);
  }

  TEST_CASE("empty and degenerate cases") {
    CHECK(enumerate_ellipsoid(Matrix::identity(2), {0, 0}, -1).points.empty());
    CHECK(enumerate_ellipsoid(Matrix::identity(2), {make_rational(1, 2), 0}, make_rational(1, 5))
              .points.empty());
    CHECK_THROWS_AS(enumerate_ellipsoid(Matrix::from_rows({{1, 1}, {1, 1}}), {0, 0}, 1), DomainError);
    CHECK_THROWS_AS(enumerate_ellipsoid(Matrix::identity(2), {0}, 1), UsageError);
  }

  TEST_CASE("agrees with a brute-force box search on random forms") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> entry(-2, 2), cden(1, 4), cnum(-6, 6);
    for (int k = 0; k < 150; ++k) {
      const std::size_t n = 1 + k % 3;
      Matrix b(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = entry(rng);
      // G = B^T B + I is positive definite with smallest eigenvalue >= 1.
      Matrix g = b.transpose() * b;
      for (std::size_t i = 0; i < n; ++i) g(i, i) += 1;
      RationalVector center(n);
      for (auto& c : center) c = make_rational(cnum(rng), cden(rng));
      const Rational bound = make_rational(static_cast<long>(rng() % 40), 3);
      const auto got = enumerate_ellipsoid(g, center, bound);
      // |x - center|^2 <= bound, so radius ceil(sqrt(bound)) + 1 suffices.
      const auto want = brute_force(g, center, bound, 5);
      CHECK(got.points == want);
    }
  }

  TEST_CASE("shifted lattice wrapper") {
    const GramForm f(Matrix::from_rows({{2, -1}, {-1, 2}}));
    const std::vector<RationalVector> basis{{3, 0}, {0, 3}};
    const RationalVector shift{1, 1};
    const auto r = enumerate_shifted_lattice(f, basis, shift, 20);
    for (const auto& x : r.points) {
      RationalVector v = shift + Rational(x[0]) * basis[0] + Rational(x[1]) * basis[1];
      CHECK(f.norm2(v) <= 20);
    }
    CHECK_FALSE(r.points.empty());
  }
}
