// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "common/properties.hpp"
#include "core/error.hpp"
#include "identity/identity_engine.hpp"
#include "roots/folding.hpp"

using namespace macver;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool checks_hold(const IdentityReport& r) {
  for (const auto& [name, ok] : r.checks)
    if (!ok) return false;
  return true;
}

// Scale-1 series from criteria 3-5, reused by criterion 9.
struct RunSpec {
  std::string label;
  long order;
};
std::map<std::string, std::pair<std::string, std::string>> baseline;

void run_macdonald(const std::vector<RunSpec>& specs, Outcome& out) {
  for (const auto& s : specs) {
    EngineConfig cfg;
    cfg.order = s.order;
    const IdentityReport r = macdonald(build_affine(parse_affine_type(s.label)), cfg);
    if (!r.passed || !checks_hold(r)) out.fail(s.label + " at order " + std::to_string(s.order));
    if (r.lhs && r.rhs) baseline[s.label] = {to_json(*r.lhs), to_json(*r.rhs)};
  }
}

const std::vector<RunSpec> kUntwisted = {
    {"A1(1)", 20}, {"A2(1)", 20}, {"A3(1)", 20}, {"A4(1)", 20}, {"B2(1)", 20}, {"B3(1)", 20},
    {"B4(1)", 20}, {"C2(1)", 20}, {"C3(1)", 20}, {"C4(1)", 20}, {"D3(1)", 20}, {"D4(1)", 20},
    {"F4(1)", 20}, {"G2(1)", 20}, {"D5(1)", 12}, {"D6(1)", 12}, {"D7(1)", 12}, {"D8(1)", 12},
    {"E6(1)", 12}, {"E7(1)", 12}, {"E8(1)", 12}};
const std::vector<RunSpec> kTwisted = {
    {"B2(2)", 20}, {"B3(2)", 20}, {"C3(2)", 20}, {"G2(3)", 20}, {"F4(2)", 10}};
const std::vector<RunSpec> kBC = {{"BC1(2)", 10}, {"BC2(2)", 10}, {"BC3(2)", 10}};

Outcome c1() {
  Outcome out;
  const auto t0 = Clock::now();
  std::size_t n = 0;
  for (const char* label : {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6",
                            "C2", "C3", "C4", "C5", "C6", "D3", "D4", "D5", "D6", "E6", "F4", "G2"}) {
    const IdentityReport r = denominator_finite(build_finite(parse_finite_type(label)));
    if (!r.passed || !checks_hold(r)) out.fail(label);
    ++n;
  }
  const double secs = seconds_since(t0);
  if (secs >= 60) out.fail("took " + std::to_string(secs) + " s");
  if (out.ok) {
    std::ostringstream s;
    s.precision(3);
    s << n << " types in " << secs << " s";
    out.detail = s.str();
  }
  return out;
}

Outcome c2() {
  Outcome out;
  EngineConfig cfg;
  cfg.order = 5;
  for (const char* label : {"A1(1)", "A2(1)", "B2(2)", "C3(2)", "G2(3)", "BC1(2)", "BC2(2)"}) {
    const IdentityReport r = denominator_affine(build_affine(parse_affine_type(label)), cfg);
    if (!r.passed || !checks_hold(r)) out.fail(label);
  }
  if (out.ok) out.detail = "7 types at order 5";
  return out;
}

Outcome c3() {
  Outcome out;
  run_macdonald(kUntwisted, out);
  // Jacobi pattern from the lattice oracle sum (4k+1) q^{(4k+1)^2/8}.
  const QSeries rhs = qseries_from_json(baseline["A1(1)"].second);
  for (long k : {0L, -1L, 1L, -2L}) {
    const long m = 4 * k + 1;
    if (rhs.coefficient(make_rational(m * m, 8)) != m) out.fail("A1(1) coefficient " + std::to_string(m));
  }
  if (out.ok) out.detail = std::to_string(kUntwisted.size()) + " untwisted types, A1(1) 1, -3, 5, -7";
  return out;
}

Outcome c4() {
  Outcome out;
  run_macdonald(kTwisted, out);
  for (const auto& s : kTwisted)
    if (!twisted_bookkeeping(build_affine(parse_affine_type(s.label))).holds())
      out.fail(s.label + " bookkeeping");
  if (out.ok) out.detail = "5 twisted types with bookkeeping";
  return out;
}

Outcome c5() {
  Outcome out;
  run_macdonald(kBC, out);
  bool negative = false;
  for (const auto& f : macdonald_setup(build_affine(parse_affine_type("BC1(2)"))).lhs)
    negative = negative || f.exponent < 0;
  if (!negative) out.fail("BC1(2) has no negative eta power");
  if (out.ok) out.detail = "l = 1, 2, 3 at order 10";
  return out;
}

Outcome c6() {
  Outcome out;
  std::vector<std::string> labels = {"E6(1)", "E7(1)", "E8(1)", "F4(1)", "G2(1)", "F4(2)", "G2(3)"};
  for (int l = 1; l <= 8; ++l) labels.push_back("A" + std::to_string(l) + "(1)");
  for (int l = 2; l <= 8; ++l) {
    labels.push_back("B" + std::to_string(l) + "(1)");
    labels.push_back("C" + std::to_string(l) + "(1)");
    labels.push_back("B" + std::to_string(l) + "(2)");
    labels.push_back("C" + std::to_string(l) + "(2)");
  }
  for (int l = 3; l <= 8; ++l) labels.push_back("D" + std::to_string(l) + "(1)");
  for (const auto& label : labels)
    if (!strange_formula_check(build_affine(parse_affine_type(label))).holds()) out.fail(label);
  if (out.ok) out.detail = std::to_string(labels.size()) + " types";
  return out;
}

Outcome c7() {
  Outcome out;
  for (const char* label : {"B2", "B3", "B4", "C3", "C4", "F4", "G2"})
    if (!coxeter_census(build_finite(parse_finite_type(label))).holds()) out.fail(label);
  if (out.ok) out.detail = "7 types";
  return out;
}

Outcome c8() {
  Outcome out;
  const auto rows = folding_table({2, 3, 4});
  for (const auto& r : rows)
    if (!r.reproduced) out.fail(r.source + " " + r.automorphism);
  for (const char* label : {"A3", "A5", "A7", "D4", "D5", "D6", "E6"}) {
    const FiniteType t = parse_finite_type(label);
    const auto sigma = catalog_automorphism(t, CatalogEntry::Flip);
    if (!fold_duality_check(build_finite(t), sigma)) out.fail(std::string("duality ") + label);
    if (!fold_duality_check(build_affine({t.family, t.rank, 1}), extend_to_affine(sigma)))
      out.fail(std::string("affine duality ") + label);
  }
  const FiniteType d4 = parse_finite_type("D4");
  if (!fold_duality_check(build_finite(d4), catalog_automorphism(d4, CatalogEntry::Triality)))
    out.fail("duality D4 triality");
  for (int l : {1, 2})
    for (FoldKind k : {FoldKind::Sum, FoldKind::Mean}) {
      const AffineFoldingResult r = fold_bc(l, k);
      if (!r.roots_match || !(r.type == AffineType{Family::BC, l, 2}))
        out.fail("fold_bc " + std::to_string(l));
    }
  if (out.ok) out.detail = std::to_string(rows.size()) + " table rows, duality, fold_bc l = 1, 2";
  return out;
}

Outcome c9() {
  Outcome out;
  std::vector<RunSpec> all = kUntwisted;
  all.insert(all.end(), kTwisted.begin(), kTwisted.end());
  all.insert(all.end(), kBC.begin(), kBC.end());
  for (const Rational& scale : {Rational(2), make_rational(1, 3)}) {
    for (const auto& s : all) {
      EngineConfig cfg;
      cfg.order = s.order;
      const IdentityReport r = macdonald(build_affine(parse_affine_type(s.label), scale), cfg);
      const auto it = baseline.find(s.label);
      if (!r.passed || !r.lhs || !r.rhs || it == baseline.end() ||
          to_json(*r.lhs) != it->second.first || to_json(*r.rhs) != it->second.second)
        out.fail(s.label + " at scale " + to_string(scale));
    }
  }
  if (out.ok) out.detail = std::to_string(all.size()) + " identities at scales 2 and 1/3";
  return out;
}

Outcome c10() {
  Outcome out;
  const std::vector<std::pair<std::string, testing::SuiteResult>> suites = {
      {"translation laws", testing::translation_laws(1000, 1)},
      {"det factorization", testing::det_factorization(1000, 2)},
      {"ring laws", testing::ring_laws(1000, 3)},
      {"pentagonal oracle", testing::pentagonal_oracle(200)},
      {"d integrality", testing::d_integrality(1000, 4)}};
  std::size_t total = 0;
  for (const auto& [name, r] : suites) {
    total += r.cases;
    if (r.cases < 1000) out.fail(name + ": only " + std::to_string(r.cases) + " cases");
    if (!r.ok()) out.fail(name + ": " + r.first_failure);
  }
  if (out.ok) out.detail = "5 suites, " + std::to_string(total) + " cases";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"finite denominator identity", c1},  {"affine denominator identity", c2},
      {"Macdonald untwisted", c3},          {"Macdonald twisted", c4},
      {"Macdonald BC", c5},                 {"strange formula", c6},
      {"Coxeter census", c7},               {"folding", c8},
      {"normalization invariance", c9},     {"property suites", c10}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failed;
    std::printf("%s %2zu %s: %s (%.1f s)\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
