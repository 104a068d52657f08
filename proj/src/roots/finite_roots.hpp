#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/linalg.hpp"

namespace macver {

enum class Family { A, B, C, D, E, F, G, BC };

std::string family_name(Family f);

struct FiniteType {
  Family family = Family::A;
  int rank = 1;

  std::string label() const;
  friend bool operator==(const FiniteType&, const FiniteType&) = default;
};

// "A3", "E8", "BC2". Throws UsageError for malformed labels or invalid ranks.
FiniteType parse_finite_type(std::string_view label);
// Throws UsageError when the rank is outside the family's range.
void validate(const FiniteType& type);
bool is_valid(const FiniteType& type);
// Classical |W|; BC_l shares its Weyl group with B_l.
std::uint64_t weyl_group_order(const FiniteType& type);

enum class Stratum { Short, Middle, Long };
std::string stratum_name(Stratum s);

// A finite (generalized) root system expressed in the basis of its simple
// roots, so that Q(R) = Z^l and every root is an integer vector.
// Single-length systems put all of their roots in the Long stratum.
class FiniteRootSystem {
 public:
  // Builds the system spanned by l simple roots with the given Gram matrix by
  // closing under simple reflections. With add_doubled_short the doubles of
  // the short roots are added (non-reduced BC_l).
  static FiniteRootSystem from_simple_gram(FiniteType type, GramForm gram,
                                           bool add_doubled_short = false);

  const FiniteType& type() const { return type_; }
  std::size_t rank() const { return form_.dim(); }
  const GramForm& form() const { return form_; }
  bool is_reduced() const { return reduced_; }

  const std::vector<IntVector>& roots() const { return roots_; }
  const std::vector<IntVector>& positive_roots() const { return positive_; }
  IntVector simple_root(std::size_t i) const;
  bool contains(const IntVector& v) const { return index_.count(v) != 0; }
  bool contains(const RationalVector& v) const;

  Rational norm2(const IntVector& v) const;
  Rational inner(const IntVector& a, const IntVector& b) const;
  Stratum stratum(const IntVector& root) const;
  std::vector<IntVector> stratum_roots(Stratum s) const;
  std::size_t stratum_size(Stratum s) const;
  // Indices i with alpha_i in the given stratum.
  std::vector<std::size_t> simple_indices(Stratum s) const;
  bool single_length() const { return distinct_norms_.size() == 1; }

  // Highest root, and highest root among the short ones (theta when the
  // system has a single length).
  const IntVector& highest_root() const { return theta_; }
  const IntVector& highest_short_root() const { return theta_short_; }
  const RationalVector& rho() const { return rho_; }

  // A_ij = I(alpha_i^vee, alpha_j).
  const std::vector<IntVector>& cartan() const { return cartan_; }
  Matrix cartan_matrix() const;

  std::vector<RationalVector> root_lattice_basis() const;
  std::vector<RationalVector> coroot_lattice_basis() const;
  // Fundamental weights, I(omega_i, alpha_j^vee) = delta_ij. Reduced only.
  std::vector<RationalVector> weight_lattice_basis() const;

  // Order of a Coxeter element, |R| / l. Reduced only.
  int coxeter_number() const;
  // |R| + l. Reduced only.
  std::size_t lie_algebra_dimension() const;

  // <x, alpha^vee> for a root alpha, exact.
  Rational pairing(const RationalVector& x, const IntVector& alpha) const;

 private:
  FiniteRootSystem() = default;
  void require_reduced(const char* what) const;

  FiniteType type_;
  GramForm form_;
  bool reduced_ = true;
  std::vector<IntVector> roots_;
  std::vector<IntVector> positive_;
  std::map<IntVector, std::size_t> index_;
  std::vector<Rational> distinct_norms_;
  IntVector theta_;
  IntVector theta_short_;
  RationalVector rho_;
  std::vector<IntVector> cartan_;
};

// Standard model of the given type, re-expressed in the simple-root basis.
// Reduced types are normalized to I(theta, theta) = 2 * scale; BC_l uses
// norms 1, 2, 4 (times scale) for its three strata.
FiniteRootSystem build_finite(const FiniteType& type, const Rational& scale = 1);

// 2 alpha / I(alpha, alpha). Throws DomainError if alpha is not a root.
RationalVector coroot(const FiniteRootSystem& rs, const RationalVector& alpha);
// s_alpha(lambda). Throws DomainError if alpha is not a root.
RationalVector reflect(const FiniteRootSystem& rs, const RationalVector& alpha,
                       const RationalVector& lambda);
std::vector<RationalVector> weight_lattice_basis(const FiniteRootSystem& rs);

// Checks the five axioms of a generalized root system on an explicit finite
// root list. Empty string on success, otherwise a description of the first
// violated axiom.
std::string check_root_axioms(const std::vector<RationalVector>& roots, const GramForm& form);

struct OrbitCensus {
  int coxeter_number = 0;
  std::vector<std::vector<IntVector>> orbits;
  std::size_t short_orbits = 0;
  std::size_t long_orbits = 0;
  bool all_orbits_size_h = false;
  // Every orbit holds a positive root that c sends to a negative root.
  bool every_orbit_has_sign_flip = false;
};

// Partitions R into <c>-orbits for c = s_{word[0]} s_{word[1]} ... (0-based
// simple root indices). Throws UsageError unless word is a permutation.
OrbitCensus coxeter_orbit_census(const FiniteRootSystem& rs, std::span<const int> word);

}  // namespace macver
