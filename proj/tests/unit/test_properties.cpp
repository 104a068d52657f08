#include <doctest.h>

#include "common/properties.hpp"

using namespace macver;

TEST_SUITE("properties") {
  TEST_CASE("translation laws") {
    const auto r = testing::translation_laws(1000, 101);
    CHECK(r.cases >= 1000);
    CHECK_MESSAGE(r.ok(), r.first_failure);
  }

  TEST_CASE("det factorization") {
    const auto r = testing::det_factorization(1000, 102);
    CHECK(r.cases >= 1000);
    CHECK_MESSAGE(r.ok(), r.first_failure);
  }

  TEST_CASE("ring laws") {
    const auto r = testing::ring_laws(1000, 103);
    CHECK(r.cases >= 1000);
    CHECK_MESSAGE(r.ok(), r.first_failure);
  }

  TEST_CASE("pentagonal oracle") {
    const auto r = testing::pentagonal_oracle(200);
    CHECK(r.cases >= 1000);
    CHECK_MESSAGE(r.ok(), r.first_failure);
  }

  TEST_CASE("d integrality") {
    const auto r = testing::d_integrality(1000, 104);
    CHECK(r.cases >= 1000);
    CHECK_MESSAGE(r.ok(), r.first_failure);
  }
}
