#include <doctest.h>

#include "core/error.hpp"
#include "identity/identity_engine.hpp"
#include "roots/finite_roots.hpp"

using namespace macver;

TEST_SUITE("finite_roots") {
  TEST_CASE("root counts and Coxeter numbers") {
    struct Row {
      const char* label;
      std::size_t roots;
      int h;
    };
    for (const Row& r : {Row{"A1", 2, 2}, {"A4", 20, 5}, {"B3", 18, 6}, {"C4", 32, 8},
                         {"D4", 24, 6}, {"D5", 40, 8}, {"G2", 12, 6}, {"F4", 48, 12},
                         {"E6", 72, 12}, {"E7", 126, 18}, {"E8", 240, 30}}) {
      CAPTURE(r.label);
      const FiniteRootSystem rs = build_finite(parse_finite_type(r.label));
      CHECK(rs.roots().size() == r.roots);
      CHECK(rs.positive_roots().size() * 2 == r.roots);
      CHECK(rs.coxeter_number() == r.h);
      CHECK(rs.norm2(rs.highest_root()) == 2);
      CHECK(check_root_axioms([&] {
              std::vector<RationalVector> v;
              for (const auto& a : rs.roots()) v.push_back(to_rational(a));
              return v;
            }(), rs.form()) == "");
    }
  }

  TEST_CASE("rho pairs to 1 with every simple coroot") {
    for (const char* label : {"A3", "B4", "C3", "D5", "E6", "F4", "G2", "BC1", "BC3"}) {
      CAPTURE(label);
      const FiniteRootSystem rs = build_finite(parse_finite_type(label));
      for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(rs.pairing(rs.rho(), rs.simple_root(i)) == 1);
    }
  }

  TEST_CASE("BC strata and normalization") {
    const FiniteRootSystem rs = build_finite(parse_finite_type("BC2"));
    CHECK_FALSE(rs.is_reduced());
    CHECK(rs.stratum_size(Stratum::Short) == 4);
    CHECK(rs.stratum_size(Stratum::Middle) == 4);
    CHECK(rs.stratum_size(Stratum::Long) == 4);
    for (const auto& a : rs.stratum_roots(Stratum::Short)) CHECK(rs.norm2(a) == 1);
    for (const auto& a : rs.stratum_roots(Stratum::Long)) CHECK(rs.norm2(a) == 4);
  }

  TEST_CASE("scale multiplies the form") {
    const FiniteRootSystem rs = build_finite(parse_finite_type("G2"), make_rational(1, 3));
    CHECK(rs.norm2(rs.highest_root()) == make_rational(2, 3));
    CHECK(rs.norm2(rs.highest_short_root()) == make_rational(2, 9));
  }

  TEST_CASE("Weyl group orders and Kostant's dimension count") {
    CHECK(weyl_group_order(parse_finite_type("E6")) == 51840);
    CHECK(weyl_group_order(parse_finite_type("F4")) == 1152);
    CHECK(weyl_group_order(parse_finite_type("B6")) == 46080);
    CHECK(weyl_group_order(parse_finite_type("E8")) == 696729600);
    for (const char* label : {"A1", "A5", "B4", "C5", "D6", "E6", "E7", "E8", "F4", "G2"}) {
      CAPTURE(label);
      const FiniteRootSystem rs = build_finite(parse_finite_type(label));
      CHECK(rs.lie_algebra_dimension() ==
            static_cast<std::size_t>(rs.coxeter_number() + 1) * rs.rank());
    }
  }

  TEST_CASE("E8 Weyl vector norm") {
    // With I(theta, theta) = 2, |rho|^2 = h^vee dim / 12 = 30 * 248 / 12.
    const FiniteRootSystem rs = build_finite(parse_finite_type("E8"));
    CHECK(rs.form().norm2(rs.rho()) == 620);
  }

  TEST_CASE("Coxeter orbit census") {
    for (const char* label : {"B2", "B3", "B4", "C3", "C4", "F4", "G2", "A4", "E6"}) {
      CAPTURE(label);
      const CoxeterCensus c = coxeter_census(build_finite(parse_finite_type(label)));
      CHECK(c.holds());
      CHECK(c.orbits.every_orbit_has_sign_flip);
    }
    const CoxeterCensus g2 = coxeter_census(build_finite(parse_finite_type("G2")));
    CHECK(g2.short_roots == 6);
    CHECK(g2.long_roots == 6);
    CHECK(g2.h == 6);
  }

  TEST_CASE("invalid labels") {
    CHECK_THROWS_AS(parse_finite_type("B1"), UsageError);
    CHECK_THROWS_AS(parse_finite_type("E9"), UsageError);
    CHECK_THROWS_AS(parse_finite_type("D2"), UsageError);
    CHECK_THROWS_AS(parse_finite_type("Q3"), UsageError);
    CHECK_THROWS_AS(coroot(build_finite(parse_finite_type("A2")), {1, 1, 0}), UsageError);
    CHECK_THROWS_AS(coroot(build_finite(parse_finite_type("A2")), {2, 0}), DomainError);
  }
}
