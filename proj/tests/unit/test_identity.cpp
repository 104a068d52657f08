#include <doctest.h>

#include <random>

#include "common/properties.hpp"
#include "core/error.hpp"
#include "identity/identity_engine.hpp"

using namespace macver;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

AffineSystem sys_of(const char* label, const Rational& scale = 1) {
  return build_affine(parse_affine_type(label), scale);
}

std::string fact(const IdentityReport& rep, const std::string& key) {
  for (const auto& [k, v] : rep.facts)
    if (k == key) return v;
  return {};
}

bool all_checks(const IdentityReport& rep) {
  for (const auto& [name, ok] : rep.checks)
    if (!ok) return false;
  return true;
}

// 1 + x + x^2/2 + x^3/6.
Rational exp3(const Rational& x) { return 1 + x + x * x / 2 + x * x * x / 6; }

// prod over positive roots of exp3(t a/2) - exp3(-t a/2), a = I(v, alpha).
Rational sinh_product(const FiniteRootSystem& rs, const RationalVector& v, const Rational& t) {
  Rational p = 1;
  for (const auto& a : rs.positive_roots()) {
    const Rational x = t * rs.form()(v, to_rational(a)) / 2;
    p *= exp3(x) - exp3(-x);
  }
  return p;
}

}  // namespace

TEST_SUITE("identity") {
  TEST_CASE("Weyl vector data") {
    for (const char* label : {"A1(1)", "A3(1)", "B3(1)", "G2(1)", "E6(1)", "B2(2)", "C3(2)",
                              "F4(2)", "G2(3)", "BC1(2)", "BC2(2)", "BC3(2)"}) {
      CAPTURE(label);
      const AffineSystem s = sys_of(label);
      const WeylVectorData w = weyl_vector_data(s);
      const GramForm& f = s.hat_form();
      for (std::size_t i = 0; i <= s.rank(); ++i) {
        const RationalVector a = s.simple_root(i);
        CHECK(2 * f(w.rho, a) / f.norm2(a) == 1);
      }
      CHECK(f.norm2(w.rho_prime) == 0);
      CHECK(w.c == f(w.rho, s.delta()));
      CHECK(w.rho_norm2 == f.norm2(w.rho));
      CHECK(w.rho_f == s.frame_system().rho());
    }
  }

  TEST_CASE("strange formula") {
    CHECK(strange_formula_check(sys_of("A1(1)")).ratio == r(1, 8));
    const StrangeFormula e8 = strange_formula_check(sys_of("E8(1)"));
    CHECK(e8.ratio == r(31, 3));
    CHECK(e8.holds());
    const StrangeFormula g2 = strange_formula_check(sys_of("G2(3)"));
    CHECK(g2.ratio == r(7, 6));
    CHECK(g2.algebra == "D4");
    CHECK(g2.dimension == 28);
    CHECK_THROWS_AS(strange_formula_check(sys_of("BC2(2)")), DomainError);
  }

  TEST_CASE("Weyl dimension factor") {
    const FiniteRootSystem a1 = build_finite(parse_finite_type("A1"));
    CHECK(weyl_dim_factor(a1, {0}) == 1);
    for (long k = 0; k <= 6; ++k) {
      CHECK(weyl_dim_factor(a1, {r(k, 2)}) == k + 1);
      CHECK(weyl_dim_factor(a1, {r(2 * k)}) == 4 * k + 1);
    }
    CHECK(weyl_dim_factor(a1, {r(-1, 2)}) == 0);
    CHECK_THROWS_AS(weyl_dim_factor(a1, {r(1, 4)}), DomainError);

    // lambda + rho on the wall of s_1: lambda = -alpha_1 + (stuff fixed by s_1).
    const FiniteRootSystem a2 = build_finite(parse_finite_type("A2"));
    const auto omega = weight_lattice_basis(a2);
    CHECK(weyl_dim_factor(a2, Rational(-1) * omega[0]) == 0);
    CHECK(weyl_dim_factor(a2, omega[0]) == 3);
    CHECK(weyl_dim_factor(a2, omega[0] + omega[1]) == 8);
  }

  TEST_CASE("specialization limit converges to d") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> coeff(0, 3);
    const Rational t = make_rational(1, 1024);
    for (const char* label : {"A2", "B3", "C3", "G2", "D4"}) {
      CAPTURE(label);
      const FiniteRootSystem rs = build_finite(parse_finite_type(label));
      const auto omega = weight_lattice_basis(rs);
      for (int k = 0; k < 10; ++k) {
        RationalVector lam = zero_vector(rs.rank());
        for (const auto& w : omega) lam = lam + Rational(coeff(rng)) * w;
        const Rational d = weyl_dim_factor(rs, lam);
        const Rational approx =
            sinh_product(rs, lam + rs.rho(), t) / sinh_product(rs, rs.rho(), t);
        Rational s = 0;
        for (const auto& a : rs.positive_roots()) {
          const Rational x = rs.form()(lam + rs.rho(), to_rational(a));
          const Rational y = rs.form()(rs.rho(), to_rational(a));
          s += abs(x * x - y * y) / 24;
        }
        const Rational bound = 2 * abs(d) * s * t * t;
        CHECK(abs(approx - d) <= bound);
      }
    }
  }

  TEST_CASE("finite denominator") {
    const IdentityReport a1 = denominator_finite(build_finite(parse_finite_type("A1")));
    CHECK(a1.passed);
    CHECK(fact(a1, "lhs_terms") == "2");
    const IdentityReport a2 = denominator_finite(build_finite(parse_finite_type("A2")));
    CHECK(a2.passed);
    CHECK(fact(a2, "lhs_terms") == "6");
    CHECK(fact(a2, "weyl_order") == "6");
    CHECK(all_checks(a2));
    const IdentityReport f4 = denominator_finite(build_finite(parse_finite_type("F4")));
    CHECK(f4.passed);
    CHECK(fact(f4, "weyl_order") == "1152");
    CHECK_THROWS_AS(denominator_finite(build_finite(parse_finite_type("E7"))), CapacityError);
  }

  TEST_CASE("affine denominator") {
    EngineConfig cfg;
    cfg.order = 5;
    CHECK(denominator_affine(sys_of("A1(1)"), cfg).passed);
    cfg.order = 4;
    for (const char* label : {"C2(2)", "BC1(2)"}) {
      CAPTURE(label);
      const IdentityReport rep = denominator_affine(sys_of(label), cfg);
      CHECK(rep.passed);
      CHECK(all_checks(rep));
    }
  }

  TEST_CASE("A1(1): eta cubed against the Jacobi lattice sum") {
    EngineConfig cfg;
    cfg.order = 20;
    const IdentityReport rep = macdonald(sys_of("A1(1)"), cfg);
    CHECK(rep.passed);
    REQUIRE(rep.rhs);
    const Rational cutoff = rep.cutoff;
    QSeries::Terms oracle;
    for (long k = -50; k <= 50; ++k) {
      const Rational e = make_rational((4 * k + 1) * (4 * k + 1), 8);
      if (e <= cutoff) oracle[e] += 4 * k + 1;
    }
    CHECK(compare(*rep.rhs, QSeries(oracle, cutoff), cutoff).equal);
    CHECK(rep.rhs->coefficient(r(1, 8)) == 1);
    CHECK(rep.rhs->coefficient(r(9, 8)) == -3);
    CHECK(rep.rhs->coefficient(r(25, 8)) == 5);
    CHECK(rep.rhs->coefficient(r(49, 8)) == -7);
  }

  TEST_CASE("Macdonald identities") {
    EngineConfig cfg;
    cfg.order = 20;
    for (const char* label : {"A2(1)", "B2(1)", "G2(1)", "B2(2)", "G2(3)"}) {
      CAPTURE(label);
      const IdentityReport rep = macdonald(sys_of(label), cfg);
      CHECK(rep.passed);
      CHECK(all_checks(rep));
    }
    cfg.order = 10;
    for (const char* label : {"BC1(2)", "BC2(2)"}) {
      CAPTURE(label);
      const IdentityReport rep = macdonald(sys_of(label), cfg);
      CHECK(rep.passed);
      CHECK(all_checks(rep));
    }
    const MacdonaldSetup g2 = macdonald_setup(sys_of("G2(3)"));
    CHECK(describe(g2.lhs) == describe({{1, 7}, {3, 7}}));
    const MacdonaldSetup bc1 = macdonald_setup(sys_of("BC1(2)"));
    long weight = 0;
    bool negative = false;
    for (const auto& f : bc1.lhs) {
      weight += f.exponent;
      negative = negative || f.exponent < 0;
    }
    CHECK(weight == 3);
    CHECK(negative);
  }

  TEST_CASE("a wrong lattice scale is detected") {
    EngineConfig cfg;
    cfg.order = 4;
    cfg.lattice_scale = 2;
    const IdentityReport rep = macdonald(sys_of("BC1(2)"), cfg);
    CHECK_FALSE(rep.passed);
    CHECK(rep.first_mismatch);
    cfg.lattice_scale = std::nullopt;
    CHECK(macdonald(sys_of("BC1(2)"), cfg).passed);
    EngineConfig bad;
    bad.lattice_scale = 2;
    CHECK_THROWS_AS(macdonald(sys_of("A1(1)"), bad), UsageError);
  }

  TEST_CASE("dual Coxeter numbers through folding") {
    for (int l = 2; l <= 4; ++l) {
      const auto b = dual_coxeter_folding_check({Family::B, l, 2});
      CHECK(b.holds());
      CHECK(b.twisted == 2 * l);
      const auto c = dual_coxeter_folding_check({Family::C, l, 2});
      CHECK(c.holds());
    }
    const auto g = dual_coxeter_folding_check({Family::G, 2, 3});
    CHECK(g.twisted == 6);
    CHECK(g.source_label == "D4(1)");
    CHECK(twisted_bookkeeping(sys_of("G2(3)")).eta_weight == 28);
    CHECK(twisted_bookkeeping(sys_of("F4(2)")).holds());
  }

  TEST_CASE("Coxeter census") {
    for (const char* label : {"A4", "B3", "C4", "D5", "G2", "F4", "E6"}) {
      CAPTURE(label);
      CHECK(coxeter_census(build_finite(parse_finite_type(label))).holds());
    }
  }

  TEST_CASE("series do not depend on the normalization of the form") {
    EngineConfig cfg;
    cfg.order = 6;
    for (const char* label : {"A2(1)", "G2(3)", "BC1(2)"}) {
      CAPTURE(label);
      const IdentityReport base = macdonald(sys_of(label), cfg);
      for (const Rational& s : {r(2), r(1, 3)}) {
        const IdentityReport other = macdonald(sys_of(label, s), cfg);
        REQUIRE(other.lhs);
        REQUIRE(other.rhs);
        CHECK(to_json(*other.lhs) == to_json(*base.lhs));
        CHECK(to_json(*other.rhs) == to_json(*base.rhs));
      }
    }
  }

  TEST_CASE("d integrality suite") {
    const auto res = testing::d_integrality(300, 31);
    CHECK_MESSAGE(res.ok(), res.first_failure);
  }
}
