#include <doctest.h>

#include <set>

#include "common/properties.hpp"
#include "core/error.hpp"
#include "weyl/weyl_groups.hpp"

using namespace macver;

TEST_SUITE("weyl") {
  TEST_CASE("group orders and determinants") {
    for (const char* label : {"A1", "A3", "B3", "C4", "D4", "G2", "F4", "E6"}) {
      CAPTURE(label);
      const FiniteRootSystem rs = build_finite(parse_finite_type(label));
      const auto w = enumerate_weyl(rs);
      CHECK(w.size() == weyl_group_order(rs.type()));
      long dets = 0;
      for (const auto& u : w) {
        dets += u.det;
        CHECK(((u.length % 2 == 0) == (u.det == 1)));
      }
      CHECK(dets == 0);  // as many even as odd elements
    }
  }

  TEST_CASE("Weyl elements preserve the root set and the form") {
    const FiniteRootSystem rs = build_finite(parse_finite_type("B3"));
    const auto w = enumerate_weyl(rs);
    const Matrix g = rs.form().gram();
    for (const auto& u : w) {
      const Matrix m = u.to_matrix();
      CHECK(m.transpose() * g * m == g);
      CHECK(determinant(m) == u.det);
      for (const auto& a : rs.roots()) CHECK(rs.contains(u.apply(a)));
    }
  }

  TEST_CASE("the cap is enforced before enumeration") {
    const FiniteRootSystem e7 = build_finite(parse_finite_type("E7"));
    CHECK_THROWS_AS(enumerate_weyl(e7), CapacityError);
    CHECK_THROWS_AS(enumerate_weyl(build_finite(parse_finite_type("A4")), 100), CapacityError);
    try {
      enumerate_weyl(e7);
    } catch (const CapacityError& e) {
      CHECK(std::string(e.what()).find("2903040") != std::string::npos);
    }
  }

  TEST_CASE("s_0 products are translations") {
    for (const char* label : {"A1(1)", "A3(1)", "B3(1)", "C3(1)", "D4(1)", "E6(1)", "F4(1)",
                              "G2(1)", "B2(2)", "B3(2)", "C3(2)", "F4(2)", "G2(3)", "BC1(2)",
                              "BC2(2)", "BC3(2)"}) {
      CAPTURE(label);
      CHECK(check_s0_product(build_affine(parse_affine_type(label))));
    }
  }

  TEST_CASE("simple affine reflections preserve the form and are involutions") {
    for (const char* label : {"A2(1)", "G2(3)", "BC2(2)"}) {
      const AffineSystem s = build_affine(parse_affine_type(label));
      for (std::size_t i = 0; i <= s.rank(); ++i) {
        const Matrix r = hat_reflection(s, s.simple_root(i));
        CHECK(preserves_form(s.hat_form(), r));
        CHECK(r * r == Matrix::identity(s.hat_dim()));
        CHECK(determinant(r) == -1);
      }
    }
  }

  TEST_CASE("translation law suite") {
    const auto r = testing::translation_laws(300, 11);
    CHECK_MESSAGE(r.ok(), r.first_failure);
  }

  TEST_CASE("det factorization suite") {
    const auto r = testing::det_factorization(300, 12);
    CHECK_MESSAGE(r.ok(), r.first_failure);
  }
}
