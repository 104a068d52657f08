#include "macver/macver.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <string_view>

#include "capi/json_export.hpp"
#include "core/error.hpp"

using namespace macver;

struct macver_config {
  EngineConfig engine;
  Rational scale = 1;
};

struct macver_affine {
  AffineSystem sys;
};

struct macver_finite {
  FiniteRootSystem rs;
};

struct macver_report {
  bool passed = false;
  std::string json;
};

namespace {

thread_local std::string last_error;

template <class F>
macver_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const UsageError& e) {
    last_error = e.what();
    return MACVER_ERR_USAGE;
  } catch (const DomainError& e) {
    last_error = e.what();
    return MACVER_ERR_DOMAIN;
  } catch (const CapacityError& e) {
    last_error = e.what();
    return MACVER_ERR_CAPACITY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MACVER_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return MACVER_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw UsageError(std::string(what) + " must not be NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

macver_status emit(const nlohmann::json& j, char** out) {
  require(out, "output pointer");
  *out = dup(j.dump());
  return MACVER_OK;
}

bool is_affine_label(std::string_view label) { return label.find('(') != std::string_view::npos; }

Rational scale_of(const char* scale) {
  if (scale == nullptr) return 1;
  Rational s = parse_rational(scale);
  if (s <= 0) throw UsageError("scale must be positive");
  return s;
}

std::uint64_t parse_positive(std::string_view key, const char* value) {
  const Rational r = parse_rational(value);
  if (!is_integer(r) || r < 1) throw UsageError(std::string(key) + " must be a positive integer");
  return static_cast<std::uint64_t>(to_int64(r));
}

std::vector<AffineType> all_legal_types(int max_rank) {
  std::vector<AffineType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G,
                   Family::BC})
    for (int tier = 1; tier <= 3; ++tier)
      for (int l = 1; l <= max_rank; ++l)
        if (is_legal({f, l, tier})) out.push_back({f, l, tier});
  return out;
}

macver_report* make_report(bool passed, const nlohmann::json& j) {
  return new macver_report{passed, j.dump()};
}

}  // namespace

extern "C" {

const char* macver_version(void) { return "0.1.0"; }

const char* macver_last_error(void) { return last_error.c_str(); }

void macver_free(char* text) { std::free(text); }

macver_status macver_config_create(macver_config** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new macver_config();
    return MACVER_OK;
  });
}

macver_status macver_config_set(macver_config* cfg, const char* key, const char* value) {
  return guarded([&] {
    require(cfg, "config");
    require(key, "key");
    require(value, "value");
    const std::string_view k(key);
    if (k == "order") {
      const Rational o = parse_rational(value);
      if (o < 1) throw UsageError("order must be at least 1");
      cfg->engine.order = o;
    } else if (k == "scale") {
      cfg->scale = scale_of(value);
    } else if (k == "lattice_scale") {
      cfg->engine.lattice_scale = scale_of(value);
    } else if (k == "weyl_cap") {
      cfg->engine.weyl_cap = parse_positive(k, value);
    } else if (k == "threads") {
      cfg->engine.threads = static_cast<unsigned>(parse_positive(k, value));
    } else {
      throw UsageError("unknown config key '" + std::string(k) +
                       "'; expected order, scale, lattice_scale, weyl_cap or threads");
    }
    return MACVER_OK;
  });
}

void macver_config_destroy(macver_config* cfg) { delete cfg; }

macver_status macver_affine_create(const char* label, const char* scale, macver_affine** out) {
  return guarded([&] {
    require(label, "label");
    require(out, "output pointer");
    *out = new macver_affine{build_affine(parse_affine_type(label), scale_of(scale))};
    return MACVER_OK;
  });
}

macver_status macver_affine_info_json(const macver_affine* sys, char** out) {
  return guarded([&] {
    require(sys, "system");
    return emit(json::affine_info(sys->sys), out);
  });
}

macver_status macver_affine_roots_json(const macver_affine* sys, int max_level, char** out) {
  return guarded([&] {
    require(sys, "system");
    if (max_level < 0) throw UsageError("max_level must be nonnegative");
    return emit(json::affine_roots(sys->sys, max_level), out);
  });
}

void macver_affine_destroy(macver_affine* sys) { delete sys; }

macver_status macver_finite_create(const char* label, const char* scale, macver_finite** out) {
  return guarded([&] {
    require(label, "label");
    require(out, "output pointer");
    *out = new macver_finite{build_finite(parse_finite_type(label), scale_of(scale))};
    return MACVER_OK;
  });
}

macver_status macver_finite_info_json(const macver_finite* rs, char** out) {
  return guarded([&] {
    require(rs, "system");
    return emit(json::finite_info(rs->rs), out);
  });
}

macver_status macver_finite_roots_json(const macver_finite* rs, char** out) {
  return guarded([&] {
    require(rs, "system");
    return emit(json::finite_roots(rs->rs), out);
  });
}

void macver_finite_destroy(macver_finite* rs) { delete rs; }

macver_status macver_verify(const char* identity, const char* label, const macver_config* cfg,
                            macver_report** out) {
  return guarded([&] {
    require(identity, "identity");
    require(label, "label");
    require(out, "output pointer");
    *out = nullptr;
    const macver_config defaults;
    const macver_config& c = cfg ? *cfg : defaults;
    const std::string_view id(identity);
    bool passed = false;
    nlohmann::json j;
    if (id == "denominator") {
      const IdentityReport r =
          is_affine_label(label)
              ? denominator_affine(build_affine(parse_affine_type(label), c.scale), c.engine)
              : denominator_finite(build_finite(parse_finite_type(label), c.scale), c.engine);
      passed = r.passed;
      j = json::report(r);
    } else if (id == "macdonald") {
      const IdentityReport r = macdonald(build_affine(parse_affine_type(label), c.scale), c.engine);
      passed = r.passed;
      j = json::report(r);
    } else if (id == "strange") {
      const AffineSystem sys = build_affine(parse_affine_type(label), c.scale);
      const StrangeFormula s = strange_formula_check(sys);
      passed = s.holds();
      j = json::strange(sys, s);
    } else if (id == "dual-coxeter") {
      const AffineType t = parse_affine_type(label);
      const DualCoxeterComparison d = dual_coxeter_folding_check(t);
      passed = d.holds();
      j = json::dual_coxeter(t, d);
    } else if (id == "census") {
      const FiniteRootSystem rs = build_finite(parse_finite_type(label), c.scale);
      const CoxeterCensus cc = coxeter_census(rs);
      passed = cc.holds();
      j = json::census(rs, cc);
    } else {
      throw UsageError("unknown identity '" + std::string(id) +
                       "'; expected denominator, macdonald, strange, dual-coxeter or census");
    }
    *out = make_report(passed, j);
    return passed ? MACVER_OK : MACVER_MISMATCH;
  });
}

int macver_report_passed(const macver_report* report) { return report && report->passed ? 1 : 0; }

macver_status macver_report_json(const macver_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "output pointer");
    *out = dup(report->json);
    return MACVER_OK;
  });
}

void macver_report_destroy(macver_report* report) { delete report; }

macver_status macver_expand_json(const char* side, const char* label, const macver_config* cfg,
                                 char** out) {
  return guarded([&] {
    require(side, "side");
    require(label, "label");
    const macver_config defaults;
    const macver_config& c = cfg ? *cfg : defaults;
    const Rational order = c.engine.order.value_or(Rational(kDefaultMacdonaldOrder));
    const std::string_view s(side);
    if (s == "eta") return emit(json::series(eta(scale_of(label), order)), out);
    const AffineSystem sys = build_affine(parse_affine_type(label), c.scale);
    const MacdonaldSetup setup = macdonald_setup(sys, c.engine);
    const Rational cutoff = setup.valuation + order;
    if (s == "lhs") return emit(json::series(eta_product(setup.lhs, cutoff)), out);
    if (s == "rhs")
      return emit(json::series(macdonald_lattice_sum(sys, setup.lattice_scale, cutoff,
                                                     c.engine.threads)
                                   .series),
                  out);
    throw UsageError("unknown side '" + std::string(s) + "'; expected lhs, rhs or eta");
  });
}

macver_status macver_fold_json(const char* label, const char* automorphism, char** out) {
  return guarded([&] {
    require(label, "label");
    const std::string_view a = automorphism ? automorphism : "flip";
    nlohmann::json j;
    j["source"] = label;
    j["automorphism"] = std::string(a);
    if (a == "bc") {
      const AffineType t = parse_affine_type(label);
      if (t.family != Family::D || t.tier != 1 || t.rank % 2 != 0 || t.rank < 4)
        throw UsageError("the bc automorphism acts on D_{2l+2}(1), got " + t.label());
      const int l = (t.rank - 2) / 2;
      j["sum"] = json::affine_folding(fold_bc(l, FoldKind::Sum));
      j["mean"] = json::affine_folding(fold_bc(l, FoldKind::Mean));
      j["duality"] = fold_duality_check(build_affine(t), bc_automorphism(l));
      return emit(j, out);
    }
    CatalogEntry entry;
    if (a == "flip") entry = CatalogEntry::Flip;
    else if (a == "triality") entry = CatalogEntry::Triality;
    else throw UsageError("unknown automorphism '" + std::string(a) + "'; expected flip, triality or bc");
    if (is_affine_label(label)) {
      const AffineType t = parse_affine_type(label);
      if (t.tier != 1) throw UsageError("folding needs an untwisted source, got " + t.label());
      const AffineSystem sys = build_affine(t);
      const DiagramAutomorphism sigma = extend_to_affine(catalog_automorphism(t.finite(), entry));
      j["sum"] = json::affine_folding(fold_affine(sys, sigma, FoldKind::Sum));
      j["mean"] = json::affine_folding(fold_affine(sys, sigma, FoldKind::Mean));
      j["duality"] = fold_duality_check(sys, sigma);
    } else {
      const FiniteType t = parse_finite_type(label);
      const FiniteRootSystem rs = build_finite(t);
      const DiagramAutomorphism sigma = catalog_automorphism(t, entry);
      j["sum"] = json::folding(fold_sum(rs, sigma));
      j["mean"] = json::folding(fold_mean(rs, sigma));
      j["duality"] = fold_duality_check(rs, sigma);
    }
    return emit(j, out);
  });
}

macver_status macver_table_json(const char* name, char** out) {
  return guarded([&] {
    require(name, "table name");
    const std::string_view n(name);
    if (n == "folding") return emit(json::folding_table(folding_table({2, 3, 4})), out);
    if (n == "nomenclature") return emit(json::nomenclature_table(all_legal_types(4)), out);
    if (n == "nonreduced") return emit(json::nonreduced(), out);
    throw UsageError("unknown table '" + std::string(n) + "'; expected folding, nomenclature or nonreduced");
  });
}

macver_status macver_nomenclature(const char* label, const char* scheme, char** out) {
  return guarded([&] {
    require(label, "label");
    require(scheme, "scheme");
    require(out, "output pointer");
    *out = dup(nomenclature_name(parse_affine_type(label), scheme));
    return MACVER_OK;
  });
}

}  // extern "C"
