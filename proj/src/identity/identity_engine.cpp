#include "identity/identity_engine.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>

#include "core/error.hpp"
#include "roots/folding.hpp"

namespace macver {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QSeries eta_power(const Rational& s, long e, const Rational& target) {
  if (e == 0) return QSeries::monomial(1, 0).truncated(target);
  const Rational v = s / 24;
  if (e > 0) return pow(eta(s, target - Rational(e - 1) * v), e, target);
  return pow(eta(s, target + Rational(-e + 1) * v), e, target);
}

Rational resolve_order(const EngineConfig& cfg, long fallback) {
  Rational order = cfg.order.value_or(Rational(fallback));
  if (order < 1) throw UsageError("order must be at least 1, got " + to_string(order));
  return order;
}

void finish(IdentityReport& r, const QSeries& lhs, const QSeries& rhs) {
  const SeriesComparison cmp = compare(lhs, rhs, r.cutoff);
  r.terms_compared = cmp.terms_compared;
  if (!cmp.equal) r.first_mismatch = Mismatch{*cmp.exponent, cmp.lhs, cmp.rhs, std::nullopt};
  r.lhs = lhs;
  r.rhs = rhs;
  r.passed = cmp.equal;
  for (const auto& [name, ok] : r.checks) r.passed = r.passed && ok;
}

IdentityReport run_macdonald(const AffineSystem& sys, const EngineConfig& cfg,
                             const std::string& identity) {
  const auto start = Clock::now();
  IdentityReport r;
  r.identity = identity;
  r.type = sys.type().label();
  r.order = resolve_order(cfg, kDefaultMacdonaldOrder);
  const MacdonaldSetup setup = macdonald_setup(sys, cfg);
  r.cutoff = setup.valuation + r.order;

  const QSeries lhs = eta_product(setup.lhs, r.cutoff);
  LatticeSum sum = macdonald_lattice_sum(sys, setup.lattice_scale, r.cutoff, cfg.threads);
  r.lattice_points = sum.points;
  r.certificate = sum.certificate;
  r.checks.emplace_back("d(gamma) integral", sum.d_integral);
  r.checks.emplace_back("gamma = 0 exponent equals the LHS valuation",
                        sum.zero_exponent == setup.valuation);
  r.facts.emplace_back("lhs", describe(setup.lhs));
  r.facts.emplace_back("lhs_valuation", to_string(setup.valuation));
  r.facts.emplace_back("lattice", setup.lattice.description);
  r.facts.emplace_back("lattice_scale", to_string(setup.lattice_scale));

  if (sys.type().is_bc()) {
    const long l = static_cast<long>(sys.rank());
    long weight = 0;
    for (const auto& f : setup.lhs) weight += f.exponent;
    const auto dim = static_cast<long>(sys.frame_system().lie_algebra_dimension());
    r.checks.emplace_back("eta weight l(2l+1) = dim g(C_l)", weight == l * (2 * l + 1) && weight == dim);
  } else if (sys.type().is_twisted()) {
    const EtaBookkeeping b = twisted_bookkeeping(sys);
    r.checks.emplace_back("dim g(Y_N) = (h+1)(|Pi_s| + t|Pi_l|)", b.holds());
    r.facts.emplace_back("dim_g_source", std::to_string(b.source_dimension));
  }
  finish(r, lhs, sum.series);
  r.wall_ms = elapsed_ms(start);
  return r;
}

}  // namespace

WeylVectorData weyl_vector_data(const AffineSystem& sys) {
  const GramForm& f = sys.hat_form();
  const std::size_t l = sys.rank();
  const Frame frame = sys.frame();
  std::vector<RationalVector> basis;
  for (std::size_t i : sys.frame_indices(frame)) basis.push_back(sys.simple_root(i));
  basis.push_back(sys.lambda_direction());

  // Row k: pairing of each basis vector with alpha_k^vee.
  Matrix a(l + 1, l + 1);
  for (std::size_t k = 0; k <= l; ++k) {
    const RationalVector ak = sys.simple_root(k);
    const Rational n = f.norm2(ak);
    for (std::size_t j = 0; j <= l; ++j) a(k, j) = 2 * f(basis[j], ak) / n;
  }
  const Matrix inv = inverse(a);

  WeylVectorData w;
  w.rho = zero_vector(sys.hat_dim());
  for (std::size_t i = 0; i <= l; ++i) {
    RationalVector lam = zero_vector(sys.hat_dim());
    for (std::size_t j = 0; j <= l; ++j) lam = lam + inv(j, i) * basis[j];
    w.rho = w.rho + lam;
    w.fundamental.push_back(std::move(lam));
  }
  w.c = f(w.rho, sys.delta());
  w.rho_norm2 = f.norm2(w.rho);
  w.rho_prime = w.rho - (w.rho_norm2 / (2 * w.c)) * sys.delta();
  const Split sp = sys.split(w.rho, frame);
  w.rho_f = sp.finite;
  w.lambda_part = sp.lambda;

  for (std::size_t k = 0; k <= l; ++k) {
    const RationalVector ak = sys.simple_root(k);
    MACVER_ENSURE(2 * f(w.rho, ak) / f.norm2(ak) == 1, "rho does not pair to 1 with a simple coroot");
  }
  MACVER_ENSURE(sp.level == 0, "rho has a delta component");
  MACVER_ENSURE(w.rho_f == sys.frame_system().rho(), "frame part of rho is not rho_f");
  MACVER_ENSURE(f.norm2(w.rho_prime) == 0, "rho' is not isotropic");
  return w;
}

StrangeFormula strange_formula_check(const AffineSystem& sys) {
  if (sys.type().is_bc())
    throw DomainError("the strange formula check applies to non-BC types; " + sys.type().label() +
                      " has no Lie algebra dimension to compare against");
  const WeylVectorData w = weyl_vector_data(sys);
  StrangeFormula s;
  s.ratio = w.rho_norm2 / (2 * w.c);
  if (sys.type().is_twisted()) {
    const FiniteType src = folding_source(sys.type()).source.finite();
    s.dimension = build_finite(src).lie_algebra_dimension();
    s.algebra = src.label();
  } else {
    s.dimension = sys.quotient().lie_algebra_dimension();
    s.algebra = sys.quotient().type().label();
  }
  s.expected = make_rational(static_cast<long>(s.dimension), 24);
  return s;
}

Rational weyl_dim_factor(const FiniteRootSystem& rs, const RationalVector& lambda) {
  if (lambda.size() != rs.rank()) throw UsageError("weyl_dim_factor: weight has wrong dimension");
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (!is_integer(rs.pairing(lambda, rs.simple_root(i))))
      throw DomainError("weight is not in P(R_f)");
  const RationalVector shifted = lambda + rs.rho();
  Rational d = 1;
  for (const IntVector& a : rs.positive_roots()) {
    const RationalVector ga = rs.form().lower(to_rational(a));
    d *= dot(shifted, ga) / dot(rs.rho(), ga);
  }
  return d;
}

std::string describe(const std::vector<EtaFactor>& factors) {
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    if (f.exponent == 0) continue;
    if (!first) os << " * ";
    first = false;
    os << "eta(q";
    if (f.scale != 1) os << "^" << to_string(f.scale);
    os << ")";
    if (f.exponent != 1) os << "^" << f.exponent;
  }
  if (first) os << "1";
  return os.str();
}

Rational eta_valuation(const std::vector<EtaFactor>& factors) {
  Rational v = 0;
  for (const auto& f : factors) v += Rational(f.exponent) * f.scale / 24;
  return v;
}

QSeries eta_product(const std::vector<EtaFactor>& factors, const Rational& cutoff) {
  // Factor i is expanded far enough that the product is exact to cutoff.
  const Rational total = eta_valuation(factors);
  QSeries result = QSeries::monomial(1, 0);
  for (const auto& f : factors) {
    const Rational v = Rational(f.exponent) * f.scale / 24;
    result = mul(result, eta_power(f.scale, f.exponent, cutoff - total + v));
  }
  result = result.truncated(cutoff);
  MACVER_ENSURE(result.order() && *result.order() == cutoff, "eta product lost precision");
  return result;
}

MacdonaldSetup macdonald_setup(const AffineSystem& sys, const EngineConfig& cfg) {
  MacdonaldSetup s;
  const WeylVectorData w = weyl_vector_data(sys);
  s.lattice = translation_lattice(sys);
  s.lattice_scale = w.c;
  if (cfg.lattice_scale) {
    if (!sys.type().is_bc()) throw UsageError("--lattice-scale applies to BC types only");
    if (*cfg.lattice_scale <= 0) throw UsageError("lattice scale must be positive");
    s.lattice_scale = *cfg.lattice_scale;
  }
  const AffineType& t = sys.type();
  if (t.is_bc()) {
    const long l = t.rank;
    s.lhs = {{make_rational(1, 2), 2 * l}, {1, l * (2 * l - 3)}, {2, 2 * l}};
  } else if (t.is_twisted()) {
    const FiniteRootSystem& rf = sys.quotient();
    const long h1 = rf.coxeter_number() + 1;
    const auto ns = static_cast<long>(rf.simple_indices(Stratum::Short).size());
    const auto nl = static_cast<long>(rf.simple_indices(Stratum::Long).size());
    s.lhs = {{1, ns * h1}, {t.tier, nl * h1}};
  } else {
    s.lhs = {{1, static_cast<long>(sys.quotient().lie_algebra_dimension())}};
  }
  s.valuation = eta_valuation(s.lhs);
  return s;
}

LatticeSum macdonald_lattice_sum(const AffineSystem& sys, const Rational& lattice_scale,
                                 const Rational& cutoff, unsigned threads) {
  const FiniteRootSystem& rf = sys.frame_system();
  const GramForm& form = rf.form();
  const RationalVector& rho = rf.rho();
  const TranslationLattice lat = translation_lattice(sys);
  std::vector<RationalVector> basis;
  for (const auto& b : lat.basis) basis.push_back(lattice_scale * b);

  LatticeSum out;
  EnumerationResult en = enumerate_shifted_lattice(form, basis, rho, 2 * lattice_scale * cutoff);
  out.points = en.points.size();
  out.certificate = en.certificate;
  out.zero_exponent = form.norm2(rho) / (2 * lattice_scale);

  std::vector<RationalVector> lowered;
  std::vector<Rational> base;
  for (const IntVector& a : rf.positive_roots()) {
    lowered.push_back(form.lower(to_rational(a)));
    base.push_back(dot(rho, lowered.back()));
  }

  struct Partial {
    QSeries::Terms terms;
    bool d_integral = true;
    std::exception_ptr error;
  };
  const unsigned nthreads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(en.points.size() / 64 + 1)));
  std::vector<Partial> parts(nthreads);
  auto work = [&](unsigned id) {
    try {
      for (std::size_t p = id; p < en.points.size(); p += nthreads) {
        RationalVector v = rho;
        for (std::size_t j = 0; j < basis.size(); ++j)
          if (en.points[p][j] != 0) v = v + Rational(en.points[p][j]) * basis[j];
        Rational d = 1;
        for (std::size_t k = 0; k < lowered.size() && d != 0; ++k) d *= dot(v, lowered[k]) / base[k];
        if (d == 0) continue;
        if (!is_integer(d)) parts[id].d_integral = false;
        parts[id].terms[form.norm2(v) / (2 * lattice_scale)] += d;
      }
    } catch (...) {
      parts[id].error = std::current_exception();
    }
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < nthreads; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }
  QSeries::Terms merged;
  for (auto& part : parts) {
    if (part.error) std::rethrow_exception(part.error);
    out.d_integral = out.d_integral && part.d_integral;
    for (auto& [e, c] : part.terms) merged[e] += c;
  }
  out.series = QSeries(std::move(merged), cutoff);
  return out;
}

IdentityReport macdonald_untwisted(const AffineSystem& sys, const EngineConfig& cfg) {
  if (sys.type().tier != 1) throw UsageError(sys.type().label() + " is not untwisted");
  return run_macdonald(sys, cfg, "macdonald-untwisted");
}

IdentityReport macdonald_twisted(const AffineSystem& sys, const EngineConfig& cfg) {
  if (!sys.type().is_twisted() || sys.type().is_bc())
    throw UsageError(sys.type().label() + " is not a twisted non-BC type");
  return run_macdonald(sys, cfg, "macdonald-twisted");
}

IdentityReport macdonald_bc(const AffineSystem& sys, const EngineConfig& cfg) {
  if (!sys.type().is_bc()) throw UsageError(sys.type().label() + " is not of type BC");
  return run_macdonald(sys, cfg, "macdonald-bc");
}

IdentityReport macdonald(const AffineSystem& sys, const EngineConfig& cfg) {
  if (sys.type().is_bc()) return macdonald_bc(sys, cfg);
  if (sys.type().is_twisted()) return macdonald_twisted(sys, cfg);
  return macdonald_untwisted(sys, cfg);
}

DualCoxeterComparison dual_coxeter_folding_check(const AffineType& twisted) {
  if (!twisted.is_twisted() || twisted.is_bc())
    throw UsageError(twisted.label() + " is not a twisted non-BC type");
  DualCoxeterComparison c;
  c.twisted = build_affine(twisted).dual_coxeter_number();
  const AffineType src = folding_source(twisted).source;
  c.source = build_affine(src).coxeter_number();
  c.source_label = src.label();
  return c;
}

EtaBookkeeping twisted_bookkeeping(const AffineSystem& sys) {
  if (!sys.type().is_twisted() || sys.type().is_bc())
    throw UsageError(sys.type().label() + " is not a twisted non-BC type");
  const FiniteRootSystem& rf = sys.quotient();
  EtaBookkeeping b;
  b.source_dimension =
      build_finite(folding_source(sys.type()).source.finite()).lie_algebra_dimension();
  const std::size_t h1 = static_cast<std::size_t>(rf.coxeter_number()) + 1;
  b.eta_weight = h1 * (rf.simple_indices(Stratum::Short).size() +
                       static_cast<std::size_t>(sys.type().tier) *
                           rf.simple_indices(Stratum::Long).size());
  return b;
}

CoxeterCensus coxeter_census(const FiniteRootSystem& rs) {
  std::vector<int> word(rs.rank());
  for (std::size_t i = 0; i < word.size(); ++i) word[i] = static_cast<int>(i);
  CoxeterCensus c;
  c.orbits = coxeter_orbit_census(rs, word);
  c.h = rs.coxeter_number();
  if (!rs.single_length()) {
    c.short_roots = rs.stratum_size(Stratum::Short);
    c.short_simple = rs.simple_indices(Stratum::Short).size();
  }
  c.long_roots = rs.stratum_size(Stratum::Long);
  c.long_simple = rs.simple_indices(Stratum::Long).size();
  return c;
}

}  // namespace macver
