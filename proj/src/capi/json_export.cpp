#include "capi/json_export.hpp"

#include <cmath>

namespace macver::json {

json number(const Integer& z) {
  if (fits_int64(z)) return to_int64(z);
  return to_string(z);
}

json number(const Rational& r) {
  if (is_integer(r)) return number(Integer(r.get_num()));
  return to_string(r);
}

json vector(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(number(x));
  return out;
}

json vector(const IntVector& v) {
  json out = json::array();
  for (long x : v) out.push_back(x);
  return out;
}

json series(const QSeries& s) { return json::parse(to_json(s)); }

json report(const IdentityReport& r) {
  json j;
  j["identity"] = r.identity;
  j["type"] = r.type;
  j["order"] = number(r.order);
  j["cutoff"] = number(r.cutoff);
  j["verdict"] = r.passed ? "pass" : "fail";
  if (r.first_mismatch) {
    const Mismatch& m = *r.first_mismatch;
    json mm;
    mm["exponent_num"] = number(Integer(m.exponent.get_num()));
    mm["denom"] = number(Integer(m.exponent.get_den()));
    mm["lhs_coeff"] = number(m.lhs);
    mm["rhs_coeff"] = number(m.rhs);
    if (m.weight) mm["weight"] = vector(*m.weight);
    j["first_mismatch"] = mm;
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["lattice_points_enumerated"] = r.lattice_points;
  j["terms_compared"] = r.terms_compared;
  if (r.certificate) {
    j["certificate"] = {{"bound", number(r.certificate->bound)},
                        {"nodes_per_level", r.certificate->nodes_per_level},
                        {"points", r.certificate->points}};
  }
  json checks = json::array();
  for (const auto& [name, ok] : r.checks) checks.push_back({{"check", name}, {"holds", ok}});
  j["checks"] = checks;
  json facts = json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  j["facts"] = facts;
  if (r.lhs) j["lhs"] = series(*r.lhs);
  if (r.rhs) j["rhs"] = series(*r.rhs);
  j["wall_ms"] = std::llround(r.wall_ms);
  return j;
}

namespace {

json int_matrix(const std::vector<IntVector>& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(vector(row));
  return out;
}

json size_list(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

}  // namespace

json affine_info(const AffineSystem& sys) {
  const AffineType& t = sys.type();
  const Nomenclature n = nomenclature(t);
  const WeylVectorData w = weyl_vector_data(sys);
  json j;
  j["type"] = t.label();
  j["rank"] = t.rank;
  j["tier"] = t.tier;
  j["scale"] = number(sys.scale());
  j["names"] = {{"saito", n.saito}, {"kac", n.kac}, {"moody", n.moody},
                {"macdonald", n.macdonald}, {"carter", n.carter}};
  j["gcm"] = int_matrix(sys.gcm());
  j["labels"] = vector(sys.labels());
  j["colabels"] = vector(sys.colabels());
  j["coxeter_number"] = sys.coxeter_number();
  j["dual_coxeter_number"] = sys.dual_coxeter_number();
  j["special_indices"] = size_list(special_indices(sys));
  json norms = json::array();
  for (std::size_t i = 0; i <= sys.rank(); ++i) norms.push_back(number(sys.hat_form().norm2(sys.simple_root(i))));
  j["simple_root_norms"] = norms;
  j["quotient"] = sys.quotient().type().label();
  j["frame"] = sys.frame() == Frame::Primed ? "primed" : "standard";
  j["frame_system"] = sys.frame_system().type().label();
  j["frame_indices"] = size_list(sys.frame_indices(sys.frame()));
  j["theta0"] = vector(sys.theta0());
  j["rho_f"] = vector(w.rho_f);
  j["rho_delta"] = number(w.c);
  j["rho_norm2"] = number(w.rho_norm2);
  j["translation_lattice"] = translation_lattice(sys).description;
  return j;
}

json affine_roots(const AffineSystem& sys, int max_level) {
  json out = json::array();
  for (const AffineRoot& r : roots_up_to(sys, max_level))
    out.push_back({{"coords", vector(r.coords)},
                   {"finite", vector(r.finite)},
                   {"level", r.level},
                   {"stratum", stratum_name(r.stratum)}});
  return {{"type", sys.type().label()}, {"max_level", max_level}, {"count", out.size()},
          {"roots", out}};
}

json finite_info(const FiniteRootSystem& rs) {
  json j;
  j["type"] = rs.type().label();
  j["rank"] = rs.rank();
  j["reduced"] = rs.is_reduced();
  j["roots"] = rs.roots().size();
  j["positive_roots"] = rs.positive_roots().size();
  j["weyl_group_order"] = weyl_group_order(rs.type());
  j["cartan"] = int_matrix(rs.cartan());
  j["highest_root"] = vector(rs.highest_root());
  j["highest_short_root"] = vector(rs.highest_short_root());
  j["rho"] = vector(rs.rho());
  if (rs.is_reduced()) {
    j["coxeter_number"] = rs.coxeter_number();
    j["dimension"] = rs.lie_algebra_dimension();
  }
  json strata = json::object();
  for (Stratum s : {Stratum::Short, Stratum::Middle, Stratum::Long})
    if (rs.stratum_size(s) > 0) strata[stratum_name(s)] = rs.stratum_size(s);
  j["strata"] = strata;
  return j;
}

json finite_roots(const FiniteRootSystem& rs) {
  json out = json::array();
  for (const IntVector& r : rs.roots())
    out.push_back({{"coords", vector(r)},
                   {"norm2", number(rs.norm2(r))},
                   {"stratum", stratum_name(rs.stratum(r))}});
  return {{"type", rs.type().label()}, {"count", out.size()}, {"roots", out}};
}

json strange(const AffineSystem& sys, const StrangeFormula& s) {
  return {{"identity", "strange"},
          {"type", sys.type().label()},
          {"ratio", number(s.ratio)},
          {"expected", number(s.expected)},
          {"dimension", s.dimension},
          {"algebra", s.algebra},
          {"verdict", s.holds() ? "pass" : "fail"}};
}

json dual_coxeter(const AffineType& type, const DualCoxeterComparison& c) {
  return {{"identity", "dual-coxeter"},
          {"type", type.label()},
          {"dual_coxeter_number", c.twisted},
          {"source", c.source_label},
          {"source_coxeter_number", c.source},
          {"verdict", c.holds() ? "pass" : "fail"}};
}

json census(const FiniteRootSystem& rs, const CoxeterCensus& c) {
  json sizes = json::array();
  for (const auto& o : c.orbits.orbits) sizes.push_back(o.size());
  return {{"identity", "census"},
          {"type", rs.type().label()},
          {"coxeter_number", c.h},
          {"short_roots", c.short_roots},
          {"long_roots", c.long_roots},
          {"short_simple", c.short_simple},
          {"long_simple", c.long_simple},
          {"orbit_sizes", sizes},
          {"every_orbit_has_sign_flip", c.orbits.every_orbit_has_sign_flip},
          {"verdict", c.holds() ? "pass" : "fail"}};
}

json folding(const FoldingResult& r) {
  json orbits = json::array();
  for (const auto& o : r.node_orbits) orbits.push_back(size_list(o));
  json simple = json::array();
  for (const auto& b : r.image_simple) simple.push_back(vector(b));
  return {{"kind", fold_kind_name(r.kind)},
          {"node_orbits", orbits},
          {"image_simple_roots", simple},
          {"roots", r.roots.size()},
          {"cartan", int_matrix(r.cartan)},
          {"matches", r.matches},
          {"identified", r.identified}};
}

json affine_folding(const AffineFoldingResult& r) {
  json j = folding(r.data);
  j["type"] = r.type.label();
  j["roots_match"] = r.roots_match;
  return j;
}

json folding_table(const std::vector<FoldingTableRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"source", r.source},
                   {"automorphism", r.automorphism},
                   {"sum_finite", r.sum_finite},
                   {"mean_finite", r.mean_finite},
                   {"sum_affine", r.sum_affine},
                   {"mean_affine", r.mean_affine},
                   {"reproduced", r.reproduced}});
  return out;
}

json nomenclature_table(const std::vector<AffineType>& types) {
  json out = json::array();
  for (const auto& t : types) {
    const Nomenclature n = nomenclature(t);
    out.push_back({{"saito", n.saito}, {"kac", n.kac}, {"moody", n.moody},
                   {"macdonald", n.macdonald}, {"carter", n.carter}});
  }
  return out;
}

json nonreduced() {
  json out = json::array();
  for (const auto& a : nonreduced_table())
    out.push_back({{"root_system", a.root_system}, {"superalgebra", a.superalgebra}});
  return out;
}

}  // namespace macver::json
