#include "roots/affine_roots.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "core/error.hpp"

namespace macver {

std::string AffineType::label() const {
  return family_name(family) + std::to_string(rank) + "(" + std::to_string(tier) + ")";
}

bool is_legal(const AffineType& t) {
  if (!is_valid(t.finite())) return false;
  switch (t.tier) {
    case 1: return t.family != Family::BC;
    case 2:
      return t.family == Family::B || t.family == Family::C || t.family == Family::F ||
             t.family == Family::BC;
    case 3: return t.family == Family::G;
    default: return false;
  }
}

std::string legal_affine_labels() {
  return "Al(1) l>=1, Bl(1) l>=2, Cl(1) l>=2, Dl(1) l>=3, E6(1), E7(1), E8(1), F4(1), G2(1), "
         "Bl(2) l>=2, Cl(2) l>=2, F4(2), G2(3), BCl(2) l>=1";
}

void validate(const AffineType& t) {
  if (!is_legal(t))
    throw UsageError("illegal affine type " + t.label() + "; legal labels: " + legal_affine_labels());
}

AffineType parse_affine_type(std::string_view label) {
  const auto open = label.find('(');
  if (open == std::string_view::npos || label.size() < open + 3 || label.back() != ')')
    throw UsageError("malformed affine type label '" + std::string(label) +
                     "'; legal labels: " + legal_affine_labels());
  std::string_view tier = label.substr(open + 1, label.size() - open - 2);
  if (tier.size() != 1 || tier[0] < '1' || tier[0] > '9')
    throw UsageError("malformed tier in '" + std::string(label) +
                     "'; legal labels: " + legal_affine_labels());
  FiniteType f;
  try {
    f = parse_finite_type(label.substr(0, open));
  } catch (const UsageError& e) {
    throw UsageError(std::string(e.what()) + "; legal labels: " + legal_affine_labels());
  }
  AffineType t{f.family, f.rank, tier[0] - '0'};
  validate(t);
  return t;
}

IntVector primitive_positive_null_vector(const std::vector<IntVector>& m, bool left) {
  const std::size_t n = m.size();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = left ? m[j][i] : m[i][j];
  auto kernel = nullspace(a);
  MACVER_ENSURE(kernel.size() == 1, "generalized Cartan matrix does not have corank 1");
  RationalVector v = kernel.front();
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, Integer(x.get_den()));
  std::vector<Integer> z;
  Integer g = 0;
  for (const auto& x : v) {
    z.push_back(Integer(x * Rational(den)));
    g = gcd(g, z.back());
  }
  if (z.front() < 0) g = -g;
  IntVector out;
  for (auto& x : z) {
    x /= g;
    MACVER_ENSURE(x > 0, "null vector of the generalized Cartan matrix is not positive");
    out.push_back(to_int64(x));
  }
  return out;
}

AffineSystem build_affine(const AffineType& type, const Rational& scale) {
  validate(type);
  FiniteRootSystem quotient = build_finite(type.finite(), scale);
  const std::size_t l = quotient.rank();

  IntVector theta0 = type.is_twisted() ? quotient.highest_short_root() : quotient.highest_root();
  if (type.is_bc())
    for (auto& x : theta0) x *= 2;

  // Finite images of alpha_0..alpha_l; alpha_0 = delta - theta0.
  std::vector<RationalVector> images;
  images.push_back(-to_rational(theta0));
  for (std::size_t i = 0; i < l; ++i) images.push_back(unit_vector(l, i));
  Matrix g(l + 1, l + 1);
  for (std::size_t i = 0; i <= l; ++i)
    for (std::size_t j = 0; j <= l; ++j) g(i, j) = quotient.form()(images[i], images[j]);

  std::vector<IntVector> gcm(l + 1, IntVector(l + 1));
  for (std::size_t i = 0; i <= l; ++i)
    for (std::size_t j = 0; j <= l; ++j) {
      Rational a = 2 * g(i, j) / g(i, i);
      MACVER_ENSURE(is_integer(a), "non-integral generalized Cartan matrix entry");
      gcm[i][j] = to_int64(a);
    }
  IntVector labels = primitive_positive_null_vector(gcm, false);
  IntVector colabels = primitive_positive_null_vector(gcm, true);
  MACVER_ENSURE(labels[0] == 1, "label a_0 must be 1");
  for (std::size_t i = 0; i < l; ++i)
    MACVER_ENSURE(labels[i + 1] == theta0[i], "labels disagree with delta - alpha_0");

  const std::size_t excluded = type.is_bc() ? l : 0;
  Matrix hat(l + 2, l + 2);
  for (std::size_t i = 0; i <= l; ++i)
    for (std::size_t j = 0; j <= l; ++j) hat(i, j) = g(i, j);
  hat(excluded, l + 1) = hat(l + 1, excluded) = make_rational(1, labels[excluded]);

  FiniteRootSystem frame = quotient;
  if (type.is_bc()) {
    std::vector<std::size_t> idx(l);
    std::iota(idx.begin(), idx.end(), 0);
    frame = FiniteRootSystem::from_simple_gram(FiniteType{Family::C, static_cast<int>(l)},
                                               GramForm(g.submatrix(idx, idx)));
  }

  AffineSystem sys(type, scale, std::move(quotient), std::move(frame));
  sys.hat_ = GramForm(std::move(hat));
  sys.theta0_ = std::move(theta0);
  sys.gcm_ = std::move(gcm);
  sys.labels_ = std::move(labels);
  sys.colabels_ = std::move(colabels);
  MACVER_ENSURE(sys.hat_form().norm2(sys.delta()) == 0, "delta is not isotropic");
  MACVER_ENSURE(sys.hat_form()(sys.delta(), sys.lambda_direction()) == 1,
                "rad(I)^* direction not dual to delta");
  return sys;
}

std::vector<std::size_t> AffineSystem::frame_indices(Frame f) const {
  std::vector<std::size_t> out;
  const std::size_t skip = excluded_index(f);
  for (std::size_t i = 0; i <= rank(); ++i)
    if (i != skip) out.push_back(i);
  return out;
}

GramForm AffineSystem::affine_form() const {
  std::vector<std::size_t> idx(rank() + 1);
  std::iota(idx.begin(), idx.end(), 0);
  return GramForm(hat_.gram().submatrix(idx, idx));
}

RationalVector AffineSystem::simple_root(std::size_t i) const {
  if (i > rank()) throw UsageError("simple root index out of range");
  return unit_vector(hat_dim(), i);
}

RationalVector AffineSystem::delta() const {
  RationalVector d = zero_vector(hat_dim());
  for (std::size_t i = 0; i <= rank(); ++i) d[i] = labels_[i];
  return d;
}

RationalVector AffineSystem::lambda_direction() const { return unit_vector(hat_dim(), rank() + 1); }

long AffineSystem::coxeter_number() const {
  return std::accumulate(labels_.begin(), labels_.end(), 0L);
}

long AffineSystem::dual_coxeter_number() const {
  return std::accumulate(colabels_.begin(), colabels_.end(), 0L);
}

Split AffineSystem::split(const RationalVector& x, Frame f) const {
  if (x.size() != hat_dim() && x.size() != rank() + 1)
    throw UsageError("split: vector of dimension " + std::to_string(x.size()) +
                     " in an affine space of dimension " + std::to_string(hat_dim()));
  if (f == Frame::Primed && !type_.is_bc())
    throw UsageError("primed splitting exists only for BC types");
  const std::size_t k = excluded_index(f);
  Split s;
  s.level = x[k] / labels_[k];
  for (std::size_t i : frame_indices(f)) s.finite.push_back(x[i] - s.level * labels_[i]);
  s.lambda = x.size() == hat_dim() ? x[rank() + 1] : Rational(0);
  return s;
}

RationalVector AffineSystem::embed(const RationalVector& finite, const Rational& level, Frame f,
                                   const Rational& lambda) const {
  if (finite.size() != rank()) throw UsageError("embed: finite part has wrong dimension");
  if (f == Frame::Primed && !type_.is_bc())
    throw UsageError("primed splitting exists only for BC types");
  RationalVector x = level * delta();
  const auto idx = frame_indices(f);
  for (std::size_t j = 0; j < idx.size(); ++j) x[idx[j]] += finite[j];
  x[rank() + 1] = lambda;
  return x;
}

std::optional<Stratum> AffineSystem::classify(const RationalVector& coords) const {
  Split s = split(coords, Frame::Standard);
  if (s.lambda != 0 || !is_integer(s.level)) return std::nullopt;
  if (!quotient_.contains(s.finite)) return std::nullopt;
  const Stratum st = quotient_.stratum(to_int(s.finite));
  const Integer k = s.level.get_num();
  if (type_.is_bc()) {
    if (st == Stratum::Long && mpz_even_p(k.get_mpz_t())) return std::nullopt;
  } else if (type_.is_twisted() && st == Stratum::Long) {
    if (!mpz_divisible_ui_p(k.get_mpz_t(), static_cast<unsigned long>(type_.tier)))
      return std::nullopt;
  }
  return st;
}

std::vector<AffineRoot> roots_up_to(const AffineSystem& sys, int n_max) {
  if (n_max < 0) throw UsageError("roots_up_to: n_max must be nonnegative");
  const FiniteRootSystem& q = sys.quotient();
  std::vector<AffineRoot> out;
  for (long k = -n_max; k <= n_max; ++k)
    for (const auto& b : q.roots()) {
      RationalVector coords = sys.embed(to_rational(b), k, Frame::Standard);
      auto st = sys.classify(coords);
      if (!st) continue;
      coords.pop_back();
      out.push_back({to_int(coords), b, k, *st});
    }
  return out;
}

std::vector<std::size_t> special_indices(const AffineSystem& sys) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= sys.rank(); ++i) {
    RationalVector v = sys.delta() - Rational(sys.labels()[i]) * sys.simple_root(i);
    if (sys.is_real_root(v)) out.push_back(i);
  }
  return out;
}

Nomenclature nomenclature(const AffineType& t) {
  validate(t);
  const std::string l = std::to_string(t.rank);
  const std::string x = family_name(t.family);
  Nomenclature n;
  n.saito = t.label();
  if (t.tier == 1) {
    const bool simply_laced = t.family == Family::A || t.family == Family::D || t.family == Family::E;
    n.kac = x + l + "(1)";
    n.moody = x + "_{" + l + ",1}";
    n.macdonald = simply_laced ? x + l + "=" + x + l + "^v" : x + l;
    n.carter = "~" + x + l;
    return n;
  }
  switch (t.family) {
    case Family::B:
      n.kac = "D" + std::to_string(t.rank + 1) + "(2)";
      n.moody = "B_{" + l + ",2}";
      n.macdonald = "C" + l + "^v";
      n.carter = "~C" + l + "^t";
      break;
    case Family::C:
      n.kac = "A" + std::to_string(2 * t.rank - 1) + "(2)";
      n.moody = "C_{" + l + ",2}";
      n.macdonald = "B" + l + "^v";
      n.carter = "~B" + l + "^t";
      break;
    case Family::F:
      n.kac = "E6(2)";
      n.moody = "F_{4,2}";
      n.macdonald = "F4^v";
      n.carter = "~F4^t";
      break;
    case Family::G:
      n.kac = "D4(3)";
      n.moody = "G_{2,3}";
      n.macdonald = "G2^v";
      n.carter = "~G2^t";
      break;
    case Family::BC:
      n.kac = "A" + std::to_string(2 * t.rank) + "(2)";
      n.moody = t.rank == 1 ? "A_{1,2}" : "BC_{" + l + ",2}";
      n.macdonald = "BC" + l + "=BC" + l + "^v";
      n.carter = "~C" + l + "'";
      break;
    default: break;
  }
  return n;
}

std::string nomenclature_name(const AffineType& type, std::string_view scheme) {
  Nomenclature n = nomenclature(type);
  if (scheme == "saito") return n.saito;
  if (scheme == "kac") return n.kac;
  if (scheme == "moody") return n.moody;
  if (scheme == "macdonald") return n.macdonald;
  if (scheme == "carter") return n.carter;
  throw UsageError("unknown nomenclature '" + std::string(scheme) +
                   "'; expected saito, kac, moody, macdonald or carter");
}

std::vector<NonreducedAlias> nonreduced_table() {
  return {{"BCC_l", "B(1)(0,l)"},
          {"C^vBC_l", "A(4)(0,2l)"},
          {"BB_l^v", "A(2)(0,2l-1)"},
          {"C^vC_l", "C(2)(l+1)"}};
}

}  // namespace macver
