#include "roots/folding.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "core/error.hpp"

namespace macver {

std::size_t DiagramAutomorphism::order() const {
  std::size_t ord = 1;
  for (const auto& o : orbits()) ord = std::lcm(ord, o.size());
  return ord;
}

std::vector<std::size_t> DiagramAutomorphism::fixed_nodes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] == i) out.push_back(i);
  return out;
}

std::vector<std::vector<std::size_t>> DiagramAutomorphism::orbits() const {
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> o;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      o.push_back(j);
    }
    std::sort(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  return out;
}

RationalVector DiagramAutomorphism::apply(const RationalVector& x) const {
  if (x.size() != perm.size()) throw UsageError("automorphism applied to a vector of wrong size");
  RationalVector y(x.size());
  for (std::size_t i = 0; i < perm.size(); ++i) y[perm[i]] = x[i];
  return y;
}

DiagramAutomorphism DiagramAutomorphism::power(std::size_t k) const {
  DiagramAutomorphism p = identity_automorphism(perm.size());
  for (std::size_t n = 0; n < k; ++n)
    for (auto& x : p.perm) x = perm[x];
  p.name = name + "^" + std::to_string(k);
  return p;
}

DiagramAutomorphism identity_automorphism(std::size_t nodes) {
  DiagramAutomorphism id{"id", std::vector<std::size_t>(nodes)};
  std::iota(id.perm.begin(), id.perm.end(), 0);
  return id;
}

DiagramAutomorphism catalog_automorphism(const FiniteType& type, CatalogEntry entry) {
  validate(type);
  const auto n = static_cast<std::size_t>(type.rank);
  DiagramAutomorphism s = identity_automorphism(n);
  if (entry == CatalogEntry::Flip) {
    s.name = type.label() + " flip";
    if (type.family == Family::A && n % 2 == 1 && n >= 3) {
      for (std::size_t i = 0; i < n; ++i) s.perm[i] = n - 1 - i;
      return s;
    }
    if (type.family == Family::D) {
      std::swap(s.perm[n - 2], s.perm[n - 1]);
      return s;
    }
    if (type.family == Family::E && n == 6) {
      s.perm = {5, 1, 4, 3, 2, 0};
      return s;
    }
  } else if (type.family == Family::D && n == 4) {
    s.name = "D4 triality";
    s.perm = {2, 1, 3, 0};
    return s;
  }
  throw UsageError("no catalog automorphism of this kind for " + type.label());
}

DiagramAutomorphism extend_to_affine(const DiagramAutomorphism& finite) {
  DiagramAutomorphism s{finite.name + " (affine)", {0}};
  for (auto p : finite.perm) s.perm.push_back(p + 1);
  return s;
}

DiagramAutomorphism bc_automorphism(int l) {
  if (l < 1) throw UsageError("bc_automorphism: l must be positive");
  const auto n = static_cast<std::size_t>(2 * l + 2);
  DiagramAutomorphism s = identity_automorphism(n + 1);
  s.name = "D" + std::to_string(n) + "(1) order 4";
  s.perm[0] = n - 1;
  s.perm[n - 1] = 1;
  s.perm[1] = n;
  s.perm[n] = 0;
  for (std::size_t i = 2; i + 2 <= n; ++i) s.perm[i] = n - i;
  return s;
}

void check_diagram_automorphism(const std::vector<IntVector>& cartan,
                                const DiagramAutomorphism& sigma) {
  const std::size_t n = cartan.size();
  if (sigma.perm.size() != n) throw DomainError("automorphism has the wrong number of nodes");
  std::vector<std::size_t> sorted = sigma.perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i)
    if (sorted[i] != i) throw DomainError("automorphism is not a permutation of the nodes");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (cartan[sigma.perm[i]][sigma.perm[j]] != cartan[i][j])
        throw DomainError("permutation does not preserve the Cartan matrix");
}

std::string fold_kind_name(FoldKind k) { return k == FoldKind::Sum ? "sum" : "mean"; }

RationalVector fold_vector(const DiagramAutomorphism& sigma, const RationalVector& x,
                           FoldKind kind) {
  const std::size_t ord = sigma.order();
  RationalVector acc = zero_vector(x.size());
  std::vector<RationalVector> distinct;
  RationalVector y = x;
  for (std::size_t k = 0; k < ord; ++k) {
    if (kind == FoldKind::Mean) acc = acc + y;
    else if (std::find(distinct.begin(), distinct.end(), y) == distinct.end()) distinct.push_back(y);
    y = sigma.apply(y);
  }
  if (kind == FoldKind::Mean) return make_rational(1, static_cast<long>(ord)) * acc;
  for (const auto& d : distinct) acc = acc + d;
  return acc;
}

namespace {

// Searches for pi with a[i][j] == b[pi i][pi j].
bool match_cartan(const std::vector<IntVector>& a, const std::vector<IntVector>& b,
                  std::vector<std::size_t>& pi) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  pi.assign(n, n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = a[i][j] == b[c][pi[j]] && a[j][i] == b[pi[j]][c];
      if (!ok || a[i][i] != b[c][c]) continue;
      used[c] = true;
      pi[i] = c;
      if (self(self, i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

struct Projection {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<RationalVector> simple;
  GramForm form;
  std::vector<IntVector> cartan;
};

Projection project(const GramForm& form, const DiagramAutomorphism& sigma, FoldKind kind) {
  Projection p;
  p.orbits = sigma.orbits();
  const std::size_t r = p.orbits.size();
  for (const auto& o : p.orbits)
    p.simple.push_back(fold_vector(sigma, unit_vector(sigma.perm.size(), o.front()), kind));
  Matrix g(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) g(i, j) = form(p.simple[i], p.simple[j]);
  p.cartan.assign(r, IntVector(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Rational a = 2 * g(i, j) / g(i, i);
      MACVER_ENSURE(is_integer(a), "folded Cartan matrix is not integral");
      p.cartan[i][j] = to_int64(a);
    }
  p.form = GramForm(std::move(g));
  return p;
}

// Coordinates of a sigma-invariant vector in the basis of image simple roots.
RationalVector to_orbit_basis(const Projection& p, const RationalVector& v) {
  RationalVector c;
  for (std::size_t o = 0; o < p.orbits.size(); ++o) {
    const std::size_t i = p.orbits[o].front();
    for (std::size_t j : p.orbits[o])
      MACVER_ENSURE(v[j] == v[i], "folded vector is not invariant");
    c.push_back(v[i] / p.simple[o][i]);
  }
  return c;
}

RationalVector permute_to_target(const RationalVector& c, const std::vector<std::size_t>& pi) {
  RationalVector t(c.size());
  for (std::size_t o = 0; o < c.size(); ++o) t[pi[o]] = c[o];
  return t;
}

std::vector<FiniteType> finite_candidates(int r) {
  std::vector<FiniteType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    if (is_valid({f, r})) out.push_back({f, r});
  return out;
}

std::vector<AffineType> affine_candidates(int r) {
  std::vector<AffineType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G,
                   Family::BC})
    for (int t = 1; t <= 3; ++t)
      if (is_legal({f, r, t})) out.push_back({f, r, t});
  return out;
}

RationalVector coroot_in(const GramForm& form, const RationalVector& v) {
  return (2 / form.norm2(v)) * v;
}

}  // namespace

FoldingResult fold_finite(const FiniteRootSystem& rs, const DiagramAutomorphism& sigma,
                          FoldKind kind) {
  check_diagram_automorphism(rs.cartan(), sigma);
  Projection p = project(rs.form(), sigma, kind);
  FoldingResult res;
  res.kind = kind;
  res.node_orbits = p.orbits;
  res.image_simple = p.simple;
  res.cartan = p.cartan;

  std::set<RationalVector> image;
  for (const auto& r : rs.roots())
    image.insert(to_orbit_basis(p, fold_vector(sigma, to_rational(r), kind)));
  res.roots.assign(image.begin(), image.end());
  res.form = p.form;
  std::string axioms = check_root_axioms(res.roots, res.form);
  MACVER_ENSURE(axioms.empty(), "folded root set is not a root system: " + axioms);

  for (const auto& cand : finite_candidates(static_cast<int>(p.orbits.size()))) {
    FiniteRootSystem target = build_finite(cand);
    std::vector<std::size_t> pi;
    if (!match_cartan(p.cartan, target.cartan(), pi)) continue;
    bool same = image.size() == target.roots().size();
    for (auto it = image.begin(); same && it != image.end(); ++it)
      same = target.contains(permute_to_target(*it, pi));
    if (!same) continue;
    if (res.matches.empty()) {
      res.identified = cand.label();
      res.to_target = pi;
    }
    res.matches.push_back(cand.label());
  }
  return res;
}

FoldingResult fold_sum(const FiniteRootSystem& rs, const DiagramAutomorphism& sigma) {
  return fold_finite(rs, sigma, FoldKind::Sum);
}

FoldingResult fold_mean(const FiniteRootSystem& rs, const DiagramAutomorphism& sigma) {
  return fold_finite(rs, sigma, FoldKind::Mean);
}

AffineFoldingResult fold_affine(const AffineSystem& sys, const DiagramAutomorphism& sigma,
                                FoldKind kind, int window) {
  check_diagram_automorphism(sys.gcm(), sigma);
  const GramForm form = sys.affine_form();
  Projection p = project(form, sigma, kind);
  AffineFoldingResult out;
  FoldingResult& res = out.data;
  res.kind = kind;
  res.node_orbits = p.orbits;
  res.image_simple = p.simple;
  res.cartan = p.cartan;
  res.form = p.form;

  std::set<RationalVector> image;
  // Orbits whose finite parts cancel land on multiples of delta; those are
  // not real roots of the image.
  for (const auto& r : roots_up_to(sys, window)) {
    RationalVector v = fold_vector(sigma, to_rational(r.coords), kind);
    if (form.norm2(v) != 0) image.insert(to_orbit_basis(p, v));
  }
  res.roots.assign(image.begin(), image.end());

  for (const auto& cand : affine_candidates(static_cast<int>(p.orbits.size()) - 1)) {
    AffineSystem target = build_affine(cand);
    std::vector<std::size_t> pi;
    if (!match_cartan(p.cartan, target.gcm(), pi)) continue;
    bool ok = true;
    for (auto it = image.begin(); ok && it != image.end(); ++it)
      ok = target.is_real_root(permute_to_target(*it, pi));
    std::set<RationalVector> mapped;
    for (const auto& v : image) mapped.insert(permute_to_target(v, pi));
    for (const auto& t : roots_up_to(target, 1))
      if (ok) ok = mapped.count(to_rational(t.coords)) != 0;
    if (!ok) continue;
    if (res.matches.empty()) {
      res.identified = cand.label();
      res.to_target = pi;
      out.type = cand;
      out.roots_match = true;
    }
    res.matches.push_back(cand.label());
  }
  return out;
}

bool fold_duality_check(const FiniteRootSystem& rs, const DiagramAutomorphism& sigma) {
  check_diagram_automorphism(rs.cartan(), sigma);
  const GramForm& form = rs.form();
  std::set<RationalVector> sum_dual, mean_of_dual, dual_of_mean, dual_of_sum;
  for (const auto& r : rs.roots()) {
    RationalVector x = to_rational(r);
    RationalVector xv = coroot_in(form, x);
    sum_dual.insert(fold_vector(sigma, xv, FoldKind::Sum));
    mean_of_dual.insert(fold_vector(sigma, xv, FoldKind::Mean));
    dual_of_mean.insert(coroot_in(form, fold_vector(sigma, x, FoldKind::Mean)));
    dual_of_sum.insert(coroot_in(form, fold_vector(sigma, x, FoldKind::Sum)));
  }
  return sum_dual == dual_of_mean && mean_of_dual == dual_of_sum;
}

bool fold_duality_check(const AffineSystem& sys, const DiagramAutomorphism& sigma) {
  check_diagram_automorphism(sys.gcm(), sigma);
  const GramForm form = sys.affine_form();
  std::set<RationalVector> sum_dual, mean_of_dual, dual_of_mean, dual_of_sum;
  auto keep = [&](std::set<RationalVector>& s, RationalVector v) {
    if (form.norm2(v) == 0) return;
    Rational k = sys.split(v, Frame::Standard).level;
    if (k <= 1 && k >= -1) s.insert(std::move(v));
  };
  for (const auto& r : roots_up_to(sys, 8)) {
    RationalVector x = to_rational(r.coords);
    RationalVector xv = coroot_in(form, x);
    keep(sum_dual, fold_vector(sigma, xv, FoldKind::Sum));
    keep(mean_of_dual, fold_vector(sigma, xv, FoldKind::Mean));
    RationalVector m = fold_vector(sigma, x, FoldKind::Mean);
    RationalVector s = fold_vector(sigma, x, FoldKind::Sum);
    if (form.norm2(m) != 0) keep(dual_of_mean, coroot_in(form, m));
    if (form.norm2(s) != 0) keep(dual_of_sum, coroot_in(form, s));
  }
  return sum_dual == dual_of_mean && mean_of_dual == dual_of_sum;
}

AffineFoldingResult fold_bc(int l, FoldKind kind) {
  if (l < 1) throw UsageError("fold_bc: l must be positive");
  AffineSystem d = build_affine(AffineType{Family::D, 2 * l + 2, 1});
  return fold_affine(d, bc_automorphism(l), kind);
}

FoldingSource folding_source(const AffineType& t) {
  validate(t);
  if (!t.is_twisted() || t.is_bc())
    throw UsageError("folding source is defined for twisted non-BC types, got " + t.label());
  switch (t.family) {
    case Family::B: {
      FiniteType y{Family::A, 2 * t.rank - 1};
      return {{y.family, y.rank, 1}, extend_to_affine(catalog_automorphism(y, CatalogEntry::Flip))};
    }
    case Family::C: {
      FiniteType y{Family::D, t.rank + 1};
      return {{y.family, y.rank, 1}, extend_to_affine(catalog_automorphism(y, CatalogEntry::Flip))};
    }
    case Family::F: {
      FiniteType y{Family::E, 6};
      return {{y.family, y.rank, 1}, extend_to_affine(catalog_automorphism(y, CatalogEntry::Flip))};
    }
    case Family::G: {
      FiniteType y{Family::D, 4};
      return {{y.family, y.rank, 1},
              extend_to_affine(catalog_automorphism(y, CatalogEntry::Triality))};
    }
    default: break;
  }
  throw UsageError("no folding source for " + t.label());
}

std::vector<FoldingTableRow> folding_table(const std::vector<int>& ls) {
  struct Spec {
    FiniteType source;
    CatalogEntry entry;
    std::string sum_f, mean_f, sum_a, mean_a;
  };
  std::vector<Spec> specs;
  for (int l : ls) {
    const std::string L = std::to_string(l);
    specs.push_back({{Family::A, 2 * l - 1}, CatalogEntry::Flip, "B" + L, "C" + L, "B" + L + "(2)",
                     "C" + L + "(1)"});
    specs.push_back({{Family::D, l + 1}, CatalogEntry::Flip, "C" + L, "B" + L, "C" + L + "(2)",
                     "B" + L + "(1)"});
  }
  specs.push_back({{Family::E, 6}, CatalogEntry::Flip, "F4", "F4", "F4(2)", "F4(1)"});
  specs.push_back({{Family::D, 4}, CatalogEntry::Triality, "G2", "G2", "G2(3)", "G2(1)"});

  std::vector<FoldingTableRow> rows;
  for (const auto& s : specs) {
    FiniteRootSystem rs = build_finite(s.source);
    DiagramAutomorphism sigma = catalog_automorphism(s.source, s.entry);
    AffineSystem af = build_affine({s.source.family, s.source.rank, 1});
    DiagramAutomorphism sigma_af = extend_to_affine(sigma);
    FoldingResult fs = fold_sum(rs, sigma), fm = fold_mean(rs, sigma);
    AffineFoldingResult as = fold_affine(af, sigma_af, FoldKind::Sum);
    AffineFoldingResult am = fold_affine(af, sigma_af, FoldKind::Mean);
    auto has = [](const FoldingResult& r, const std::string& label) {
      return std::find(r.matches.begin(), r.matches.end(), label) != r.matches.end();
    };
    FoldingTableRow row;
    row.source = s.source.label();
    row.automorphism = sigma.name;
    // Isomorphic labels (B2 = C2, D3 = A3) are all matched; show the table's.
    auto shown = [&](const FoldingResult& r, const std::string& label) {
      return has(r, label) ? label : r.identified;
    };
    row.sum_finite = shown(fs, s.sum_f);
    row.mean_finite = shown(fm, s.mean_f);
    row.sum_affine = shown(as.data, s.sum_a);
    row.mean_affine = shown(am.data, s.mean_a);
    row.expected_sum_finite = s.sum_f;
    row.expected_mean_finite = s.mean_f;
    row.expected_sum_affine = s.sum_a;
    row.expected_mean_affine = s.mean_a;
    row.reproduced = has(fs, s.sum_f) && has(fm, s.mean_f) && has(as.data, s.sum_a) &&
                     has(am.data, s.mean_a) && as.roots_match && am.roots_match;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace macver
