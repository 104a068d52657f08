#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "identity/lattice_enum.hpp"
#include "roots/affine_roots.hpp"
#include "series/qseries.hpp"
#include "weyl/weyl_groups.hpp"

namespace macver {

struct EngineConfig {
  // Relative order for Macdonald identities (added to the LHS valuation),
  // absolute q-order for the affine denominator identity.
  std::optional<Rational> order;
  std::uint64_t weyl_cap = kDefaultWeylCap;
  unsigned threads = 1;
  // Replaces I(rho, delta) as the lattice scale of the Macdonald sum.
  std::optional<Rational> lattice_scale;
};

inline constexpr long kDefaultMacdonaldOrder = 20;
inline constexpr long kDefaultDenominatorOrder = 5;

struct WeylVectorData {
  // Lambda_i, rho and rho' in F-hat coordinates (alpha_0..alpha_l, L).
  std::vector<RationalVector> fundamental;
  RationalVector rho;
  RationalVector rho_prime;
  // Frame part of rho, in frame simple-root coordinates.
  RationalVector rho_f;
  Rational c;           // I(rho, delta)
  Rational rho_norm2;   // I(rho, rho)
  Rational lambda_part; // L coefficient of rho - rho_f
};

// Solves I(Lambda_i, alpha_j^vee) = delta_ij inside span(frame roots, L).
// Throws InvariantError if the frame part of rho is not the Weyl vector of
// the frame system or rho' is not isotropic.
WeylVectorData weyl_vector_data(const AffineSystem& sys);

struct StrangeFormula {
  Rational ratio;     // I(rho, rho) / (2 I(rho, delta))
  Rational expected;  // dim / 24
  std::size_t dimension = 0;
  std::string algebra;  // the finite type whose dimension is used
  bool holds() const { return ratio == expected; }
};

// Untwisted: dim g(R_f). Twisted: dim g(Y_N) with Y_N^{(1)} the folding
// source. Throws DomainError for BC.
StrangeFormula strange_formula_check(const AffineSystem& sys);

// prod_{alpha > 0} I(lambda + rho, alpha) / I(rho, alpha). Throws DomainError
// unless lambda is in P(R_f).
Rational weyl_dim_factor(const FiniteRootSystem& rs, const RationalVector& lambda);

// eta(q^scale)^exponent.
struct EtaFactor {
  Rational scale;
  long exponent = 0;
};
std::string describe(const std::vector<EtaFactor>& factors);
Rational eta_valuation(const std::vector<EtaFactor>& factors);
// Product of the factors, exact up to the absolute exponent cutoff.
QSeries eta_product(const std::vector<EtaFactor>& factors, const Rational& cutoff);

struct MacdonaldSetup {
  std::vector<EtaFactor> lhs;
  Rational valuation;      // leading exponent of the LHS
  Rational lattice_scale;  // c, the sum runs over c * M
  TranslationLattice lattice;
};
MacdonaldSetup macdonald_setup(const AffineSystem& sys, const EngineConfig& cfg = {});

struct LatticeSum {
  QSeries series;
  std::size_t points = 0;
  EnumerationCertificate certificate;
  bool d_integral = true;
  Rational zero_exponent;  // exponent of the gamma = 0 term
};

// sum_{gamma in c M} d(gamma) q^{I(rho_f + gamma, rho_f + gamma) / 2c} over
// every gamma with exponent <= cutoff.
LatticeSum macdonald_lattice_sum(const AffineSystem& sys, const Rational& lattice_scale,
                                 const Rational& cutoff, unsigned threads = 1);

struct Mismatch {
  Rational exponent;
  Rational lhs;
  Rational rhs;
  // Weight of the mismatching monomial (frame coordinates) for the
  // multivariate identities.
  std::optional<RationalVector> weight;
};

struct IdentityReport {
  std::string identity;
  std::string type;
  Rational order;   // as requested
  Rational cutoff;  // absolute exponent bound compared
  bool passed = false;
  std::optional<Mismatch> first_mismatch;
  std::optional<QSeries> lhs;
  std::optional<QSeries> rhs;
  std::size_t lattice_points = 0;
  std::optional<EnumerationCertificate> certificate;
  std::size_t terms_compared = 0;
  // Side conditions; each must hold for the identity to pass.
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::pair<std::string, std::string>> facts;
  double wall_ms = 0;
};

// Exact equality in the group ring of P(R_f), plus the half-root rewriting of
// the left side. Throws CapacityError when |W| exceeds cfg.weyl_cap.
IdentityReport denominator_finite(const FiniteRootSystem& rs, const EngineConfig& cfg = {});

// Both sides as elements of Z[P] (x) Z[[q]], compared up to q^order.
IdentityReport denominator_affine(const AffineSystem& sys, const EngineConfig& cfg = {});

IdentityReport macdonald_untwisted(const AffineSystem& sys, const EngineConfig& cfg = {});
IdentityReport macdonald_twisted(const AffineSystem& sys, const EngineConfig& cfg = {});
IdentityReport macdonald_bc(const AffineSystem& sys, const EngineConfig& cfg = {});
// Dispatches on the tier.
IdentityReport macdonald(const AffineSystem& sys, const EngineConfig& cfg = {});

struct DualCoxeterComparison {
  long twisted = 0;  // colabel sum of X_l^{(t)}
  long source = 0;   // label sum of Y_N^{(1)}
  std::string source_label;
  bool holds() const { return twisted == source; }
};
DualCoxeterComparison dual_coxeter_folding_check(const AffineType& twisted);

// dim g(Y_N) against (h + 1)(|Pi_s| + t |Pi_l|) for twisted non-BC types.
struct EtaBookkeeping {
  std::size_t source_dimension = 0;
  std::size_t eta_weight = 0;
  bool holds() const { return source_dimension == eta_weight; }
};
EtaBookkeeping twisted_bookkeeping(const AffineSystem& sys);

// |(R_f)_s| = h |Pi_s|, |(R_f)_l| = h |Pi_l| and every orbit of the Coxeter
// element s_1 ... s_l has exactly h elements.
struct CoxeterCensus {
  OrbitCensus orbits;
  int h = 0;
  std::size_t short_roots = 0, long_roots = 0;
  std::size_t short_simple = 0, long_simple = 0;
  bool holds() const {
    const auto hh = static_cast<std::size_t>(h);
    return short_roots == hh * short_simple && long_roots == hh * long_simple &&
           orbits.all_orbits_size_h;
  }
};
CoxeterCensus coxeter_census(const FiniteRootSystem& rs);

}  // namespace macver
