#include <doctest.h>

#include <random>

#include "core/error.hpp"
#include "core/linalg.hpp"

using namespace macver;

TEST_SUITE("linalg") {
  TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("6/4") == make_rational(3, 2));
    CHECK(to_string(parse_rational("-2/6")) == "-1/3");
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
    CHECK_THROWS_AS(parse_rational("x"), UsageError);
    CHECK_THROWS_AS(parse_rational("1.5"), UsageError);
    CHECK(floor(make_rational(-3, 2)) == -2);
    CHECK(ceil(make_rational(-3, 2)) == -1);
    CHECK(lcm(Integer(4), Integer(6)) == 12);
  }

  TEST_CASE("determinant, inverse and solve") {
    Matrix m = Matrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    CHECK(determinant(m) == 4);  // Cartan matrix of A3
    CHECK(m * inverse(m) == Matrix::identity(3));
    auto x = solve(m, {1, 0, 0});
    REQUIRE(x);
    CHECK(m * *x == RationalVector{1, 0, 0});
    Matrix singular = Matrix::from_rows({{1, 2}, {2, 4}});
    CHECK_FALSE(solve(singular, {1, 1}));
    CHECK_THROWS_AS(inverse(singular), DomainError);
    CHECK(rank(singular) == 1);
  }

  TEST_CASE("random integer matrices: inverse and determinant multiplicativity") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int k = 0; k < 200; ++k) {
      Matrix a(4, 4), b(4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          a(i, j) = d(rng);
          b(i, j) = d(rng);
        }
      CHECK(determinant(a * b) == determinant(a) * determinant(b));
      if (determinant(a) != 0) CHECK(inverse(a) * a == Matrix::identity(4));
    }
  }

  TEST_CASE("nullspace of the affine A1 Cartan matrix") {
    Matrix m = Matrix::from_rows({{2, -2}, {-2, 2}});
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(m * ns[0] == zero_vector(2));
  }

  TEST_CASE("definiteness classification") {
    CHECK(definiteness(GramForm(Matrix::from_rows({{2, -1}, {-1, 2}}))).kind ==
          FormKind::PositiveDefinite);
    auto semi = definiteness(GramForm(Matrix::from_rows({{2, -2}, {-2, 2}})));
    CHECK(semi.kind == FormKind::PositiveSemidefinite);
    CHECK(semi.radical_dim == 1);
    CHECK(definiteness(GramForm(Matrix::from_rows({{0, 1}, {1, 0}}))).kind == FormKind::Indefinite);
    CHECK_THROWS_AS(GramForm(Matrix::from_rows({{1, 2}, {0, 1}})), UsageError);
  }

  TEST_CASE("to_int rejects fractions") {
    CHECK(to_int({2, -3}) == IntVector{2, -3});
    CHECK_THROWS_AS(to_int({make_rational(1, 2)}), InvariantError);
  }
}
