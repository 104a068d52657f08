#include "roots/finite_roots.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

#include "core/error.hpp"

namespace macver {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

std::string FiniteType::label() const { return family_name(family) + std::to_string(rank); }

bool is_valid(const FiniteType& t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 3;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
    case Family::BC: return t.rank >= 1;
  }
  return false;
}

void validate(const FiniteType& t) {
  if (!is_valid(t)) throw UsageError("invalid rank for family " + family_name(t.family) + ": " +
                                     std::to_string(t.rank));
}

FiniteType parse_finite_type(std::string_view label) {
  std::size_t i = 0;
  while (i < label.size() && std::isalpha(static_cast<unsigned char>(label[i]))) ++i;
  std::string fam(label.substr(0, i));
  for (auto& ch : fam) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  std::string_view digits = label.substr(i);
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw UsageError("malformed finite type label '" + std::string(label) + "'");
  static const std::map<std::string, Family> families = {
      {"A", Family::A}, {"B", Family::B}, {"C", Family::C}, {"D", Family::D},
      {"E", Family::E}, {"F", Family::F}, {"G", Family::G}, {"BC", Family::BC}};
  auto it = families.find(fam);
  if (it == families.end()) throw UsageError("unknown root system family '" + fam + "'");
  FiniteType t{it->second, std::stoi(std::string(digits))};
  validate(t);
  return t;
}

std::uint64_t weyl_group_order(const FiniteType& t) {
  validate(t);
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
  };
  switch (t.family) {
    case Family::A: return factorial(t.rank + 1);
    case Family::B:
    case Family::C:
    case Family::BC: return (std::uint64_t{1} << t.rank) * factorial(t.rank);
    case Family::D: return (std::uint64_t{1} << (t.rank - 1)) * factorial(t.rank);
    case Family::E: return t.rank == 6 ? 51840 : t.rank == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::string stratum_name(Stratum s) {
  switch (s) {
    case Stratum::Short: return "short";
    case Stratum::Middle: return "middle";
    case Stratum::Long: return "long";
  }
  return "?";
}

namespace {

long height(const IntVector& v) { return std::accumulate(v.begin(), v.end(), 0L); }

bool nonnegative(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x >= 0; });
}

// Simple roots of the standard model in ambient orthonormal coordinates, and
// the factor bringing the long roots to norm 2.
struct AmbientModel {
  std::vector<RationalVector> simple;
  Rational normalization = 1;
};

AmbientModel ambient_model(const FiniteType& t) {
  const int l = t.rank;
  auto e_diff = [](int n, int i, int j) {  // e_i - e_j
    RationalVector v = zero_vector(n);
    v[i] = 1;
    v[j] = -1;
    return v;
  };
  AmbientModel m;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < l; ++i) m.simple.push_back(e_diff(l + 1, i, i + 1));
      break;
    case Family::B:
    case Family::BC:
      for (int i = 0; i + 1 < l; ++i) m.simple.push_back(e_diff(l, i, i + 1));
      m.simple.push_back(unit_vector(l, l - 1));
      break;
    case Family::C:
      for (int i = 0; i + 1 < l; ++i) m.simple.push_back(e_diff(l, i, i + 1));
      m.simple.push_back(Rational(2) * unit_vector(l, l - 1));
      m.normalization = make_rational(1, 2);
      break;
    case Family::D: {
      for (int i = 0; i + 1 < l; ++i) m.simple.push_back(e_diff(l, i, i + 1));
      RationalVector last = zero_vector(l);
      last[l - 2] = 1;
      last[l - 1] = 1;
      m.simple.push_back(last);
      break;
    }
    case Family::G:
      m.simple.push_back(e_diff(3, 0, 1));
      m.simple.push_back(RationalVector{-2, 1, 1});
      m.normalization = make_rational(1, 3);
      break;
    case Family::F: {
      const Rational h = make_rational(1, 2);
      m.simple.push_back(e_diff(4, 1, 2));
      m.simple.push_back(e_diff(4, 2, 3));
      m.simple.push_back(unit_vector(4, 3));
      m.simple.push_back(RationalVector{h, -h, -h, -h});
      break;
    }
    case Family::E: {
      // Bourbaki's E8 frame; E6 and E7 are spanned by the first simple roots.
      const Rational h = make_rational(1, 2);
      m.simple.push_back(RationalVector{h, -h, -h, -h, -h, -h, -h, h});
      RationalVector a2 = zero_vector(8);
      a2[0] = 1;
      a2[1] = 1;
      m.simple.push_back(a2);
      for (int i = 0; i < 6; ++i) m.simple.push_back(e_diff(8, i + 1, i));
      m.simple.resize(static_cast<std::size_t>(l));
      break;
    }
  }
  return m;
}

}  // namespace

FiniteRootSystem FiniteRootSystem::from_simple_gram(FiniteType type, GramForm gram,
                                                    bool add_doubled_short) {
  FiniteRootSystem rs;
  rs.type_ = type;
  rs.form_ = std::move(gram);
  rs.reduced_ = !add_doubled_short;
  const std::size_t l = rs.form_.dim();
  if (l == 0) throw UsageError("root system of rank 0");
  if (definiteness(rs.form_).kind != FormKind::PositiveDefinite)
    throw DomainError("simple-root Gram matrix of a finite root system must be positive definite");

  const Matrix& g = rs.form_.gram();
  rs.cartan_.assign(l, IntVector(l, 0));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      Rational a = 2 * g(i, j) / g(i, i);
      if (!is_integer(a)) throw DomainError("simple roots have non-integral Cartan pairings");
      rs.cartan_[i][j] = to_int64(a);
    }

  // Closure of the simple roots under simple reflections.
  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < l; ++i) {
    IntVector e(l, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector r = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < l; ++i) {
      long p = 0;
      for (std::size_t j = 0; j < l; ++j) p += r[j] * rs.cartan_[i][j];
      if (p == 0) continue;
      IntVector s = r;
      s[i] -= p;
      if (seen.insert(s).second) {
        if (seen.size() > 100000) throw DomainError("reflection closure is not finite");
        queue.push_back(std::move(s));
      }
    }
  }
  rs.roots_.assign(seen.begin(), seen.end());

  for (const auto& r : rs.roots_) {
    Rational n = rs.norm2(r);
    if (std::find(rs.distinct_norms_.begin(), rs.distinct_norms_.end(), n) ==
        rs.distinct_norms_.end())
      rs.distinct_norms_.push_back(n);
  }
  std::sort(rs.distinct_norms_.begin(), rs.distinct_norms_.end());

  if (add_doubled_short) {
    const Rational shortest = rs.distinct_norms_.front();
    std::vector<IntVector> doubled;
    for (const auto& r : rs.roots_)
      if (rs.norm2(r) == shortest) {
        IntVector d = r;
        for (auto& x : d) x *= 2;
        doubled.push_back(d);
      }
    rs.roots_.insert(rs.roots_.end(), doubled.begin(), doubled.end());
    std::sort(rs.roots_.begin(), rs.roots_.end());
    rs.distinct_norms_.push_back(4 * shortest);
  }

  for (std::size_t k = 0; k < rs.roots_.size(); ++k) rs.index_[rs.roots_[k]] = k;
  for (const auto& r : rs.roots_)
    if (nonnegative(r)) rs.positive_.push_back(r);
  MACVER_ENSURE(2 * rs.positive_.size() == rs.roots_.size(), "roots are not split by sign");

  auto highest_among = [&](auto&& pred) {
    long best = -1;
    std::size_t count = 0;
    IntVector arg;
    for (const auto& r : rs.positive_) {
      if (!pred(r)) continue;
      long h = height(r);
      if (h > best) best = h, arg = r, count = 1;
      else if (h == best) ++count;
    }
    MACVER_ENSURE(count == 1, "highest root is not unique");
    return arg;
  };
  const Rational longest = rs.distinct_norms_.back();
  rs.theta_ = highest_among([&](const IntVector& r) { return rs.norm2(r) == longest; });
  const Rational shortest = rs.distinct_norms_.front();
  rs.theta_short_ = highest_among([&](const IntVector& r) { return rs.norm2(r) == shortest; });

  rs.rho_ = zero_vector(l);
  for (const auto& r : rs.positive_)
    if (!add_doubled_short || rs.norm2(r) != rs.distinct_norms_.back())
      for (std::size_t i = 0; i < l; ++i) rs.rho_[i] += r[i];
  for (auto& x : rs.rho_) x /= 2;

  // Every root's reflection preserves R and pairs integrally with R.
  for (const auto& a : rs.roots_) {
    const Rational na = rs.norm2(a);
    for (const auto& b : rs.roots_) {
      Rational p = 2 * rs.inner(b, a) / na;
      MACVER_ENSURE(is_integer(p), "non-integral pairing in " + type.label());
      long pi = to_int64(p);
      IntVector s = b;
      for (std::size_t i = 0; i < l; ++i) s[i] -= pi * a[i];
      MACVER_ENSURE(rs.contains(s), "root set not closed under reflections in " + type.label());
    }
  }
  return rs;
}

IntVector FiniteRootSystem::simple_root(std::size_t i) const {
  IntVector e(rank(), 0);
  e.at(i) = 1;
  return e;
}

bool FiniteRootSystem::contains(const RationalVector& v) const {
  if (v.size() != rank()) return false;
  IntVector iv;
  for (const auto& x : v) {
    if (!is_integer(x)) return false;
    iv.push_back(to_int64(x));
  }
  return contains(iv);
}

Rational FiniteRootSystem::inner(const IntVector& a, const IntVector& b) const {
  return form_(to_rational(a), to_rational(b));
}

Rational FiniteRootSystem::norm2(const IntVector& v) const { return inner(v, v); }

Stratum FiniteRootSystem::stratum(const IntVector& root) const {
  Rational n = norm2(root);
  if (distinct_norms_.size() == 1) return Stratum::Long;
  if (n == distinct_norms_.front()) return Stratum::Short;
  if (n == distinct_norms_.back()) return Stratum::Long;
  return Stratum::Middle;
}

std::vector<IntVector> FiniteRootSystem::stratum_roots(Stratum s) const {
  std::vector<IntVector> out;
  for (const auto& r : roots_)
    if (stratum(r) == s) out.push_back(r);
  return out;
}

std::size_t FiniteRootSystem::stratum_size(Stratum s) const { return stratum_roots(s).size(); }

std::vector<std::size_t> FiniteRootSystem::simple_indices(Stratum s) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rank(); ++i)
    if (stratum(simple_root(i)) == s) out.push_back(i);
  return out;
}

Matrix FiniteRootSystem::cartan_matrix() const {
  Matrix m(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) m(i, j) = cartan_[i][j];
  return m;
}

std::vector<RationalVector> FiniteRootSystem::root_lattice_basis() const {
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(unit_vector(rank(), i));
  return out;
}

std::vector<RationalVector> FiniteRootSystem::coroot_lattice_basis() const {
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < rank(); ++i)
    out.push_back(coroot(*this, unit_vector(rank(), i)));
  return out;
}

std::vector<RationalVector> FiniteRootSystem::weight_lattice_basis() const {
  require_reduced("weight lattice");
  // Row i of M^{-1}, where M_kj = I(alpha_k, alpha_j^vee).
  const std::size_t l = rank();
  Matrix m(l, l);
  for (std::size_t k = 0; k < l; ++k)
    for (std::size_t j = 0; j < l; ++j) m(k, j) = cartan_[j][k];
  Matrix inv = inverse(m);
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < l; ++i) out.push_back(inv.row(i));
  return out;
}

int FiniteRootSystem::coxeter_number() const {
  require_reduced("Coxeter number");
  return static_cast<int>(roots_.size() / rank());
}

std::size_t FiniteRootSystem::lie_algebra_dimension() const {
  require_reduced("Lie algebra dimension");
  return roots_.size() + rank();
}

Rational FiniteRootSystem::pairing(const RationalVector& x, const IntVector& alpha) const {
  RationalVector a = to_rational(alpha);
  return 2 * form_(x, a) / form_(a, a);
}

void FiniteRootSystem::require_reduced(const char* what) const {
  if (!reduced_) throw DomainError(std::string(what) + " requires a reduced root system, got " +
                                   type_.label());
}

FiniteRootSystem build_finite(const FiniteType& type, const Rational& scale) {
  validate(type);
  if (scale <= 0) throw UsageError("scale must be positive");
  AmbientModel model = ambient_model(type);
  const std::size_t l = model.simple.size();
  Matrix g(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      Rational d = 0;
      for (std::size_t k = 0; k < model.simple[i].size(); ++k)
        d += model.simple[i][k] * model.simple[j][k];
      g(i, j) = scale * model.normalization * d;
    }
  return FiniteRootSystem::from_simple_gram(type, GramForm(std::move(g)),
                                            type.family == Family::BC);
}

RationalVector coroot(const FiniteRootSystem& rs, const RationalVector& alpha) {
  if (alpha.size() != rs.rank()) throw UsageError("coroot: dimension mismatch");
  if (!rs.contains(alpha)) throw DomainError("coroot: vector is not a root");
  return (2 / rs.form().norm2(alpha)) * alpha;
}

RationalVector reflect(const FiniteRootSystem& rs, const RationalVector& alpha,
                       const RationalVector& lambda) {
  if (alpha.size() != rs.rank() || lambda.size() != rs.rank())
    throw UsageError("reflect: dimension mismatch");
  if (!rs.contains(alpha)) throw DomainError("reflect: vector is not a root");
  const Rational p = 2 * rs.form()(lambda, alpha) / rs.form().norm2(alpha);
  return lambda - p * alpha;
}

std::vector<RationalVector> weight_lattice_basis(const FiniteRootSystem& rs) {
  return rs.weight_lattice_basis();
}

std::string check_root_axioms(const std::vector<RationalVector>& roots, const GramForm& form) {
  if (roots.empty()) return "root set is empty";
  if (rank(Matrix::from_rows(roots)) != form.dim()) return "axiom 1: roots do not span";
  std::set<RationalVector> set(roots.begin(), roots.end());
  std::vector<Rational> norms;
  for (const auto& a : roots) {
    norms.push_back(form.norm2(a));
    if (norms.back() == 0) return "axiom 2: isotropic root";
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (const auto& b : roots) {
      Rational p = 2 * form(b, roots[i]) / norms[i];
      if (!is_integer(p)) return "axiom 3: non-integral pairing";
      if (!set.count(b - p * roots[i])) return "axiom 4: not closed under reflection";
    }
  // Connectivity of the non-orthogonality graph.
  std::vector<bool> reached(roots.size(), false);
  std::deque<std::size_t> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (!reached[j] && form(roots[i], roots[j]) != 0) {
        reached[j] = true;
        queue.push_back(j);
      }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end())
    return "axiom 5: decomposable";
  return {};
}

OrbitCensus coxeter_orbit_census(const FiniteRootSystem& rs, std::span<const int> word) {
  const std::size_t l = rs.rank();
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted.size() != l || sorted[i] != static_cast<int>(i))
      throw UsageError("Coxeter word must be a permutation of the simple root indices");

  auto apply_c = [&](IntVector v) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      const auto i = static_cast<std::size_t>(*it);
      long p = 0;
      for (std::size_t j = 0; j < l; ++j) p += v[j] * rs.cartan()[i][j];
      v[i] -= p;
    }
    return v;
  };

  OrbitCensus census;
  census.coxeter_number = rs.coxeter_number();
  census.all_orbits_size_h = true;
  census.every_orbit_has_sign_flip = true;
  std::set<IntVector> done;
  for (const auto& r : rs.roots()) {
    if (done.count(r)) continue;
    std::vector<IntVector> orbit;
    IntVector v = r;
    bool flip = false;
    do {
      orbit.push_back(v);
      done.insert(v);
      IntVector next = apply_c(v);
      if (nonnegative(v) && !nonnegative(next)) flip = true;
      v = std::move(next);
    } while (v != r);
    if (orbit.size() != static_cast<std::size_t>(census.coxeter_number))
      census.all_orbits_size_h = false;
    if (!flip) census.every_orbit_has_sign_flip = false;
    if (rs.stratum(r) == Stratum::Short) ++census.short_orbits;
    else ++census.long_orbits;
    census.orbits.push_back(std::move(orbit));
  }
  return census;
}

}  // namespace macver
