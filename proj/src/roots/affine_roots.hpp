#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roots/finite_roots.hpp"

namespace macver {

// Saito's label X_l^{(t)}.
struct AffineType {
  Family family = Family::A;
  int rank = 1;
  int tier = 1;

  std::string label() const;  // "A3(1)", "BC2(2)"
  FiniteType finite() const { return {family, rank}; }
  bool is_bc() const { return family == Family::BC; }
  bool is_twisted() const { return tier != 1; }
  friend bool operator==(const AffineType&, const AffineType&) = default;
};

bool is_legal(const AffineType& type);
// Throws UsageError listing the legal label patterns.
void validate(const AffineType& type);
AffineType parse_affine_type(std::string_view label);
std::string legal_affine_labels();

// The splitting F = F_f + rad(I) used to read off finite parts. Standard
// drops alpha_0; Primed drops alpha_l (BC_l^{(2)} only, R_f' of type C_l).
enum class Frame { Standard, Primed };

struct Split {
  RationalVector finite;  // coordinates on the frame's simple roots
  Rational level;         // delta coefficient
  Rational lambda;        // coefficient of the rad(I)^* direction
};

// Real affine root, in the basis alpha_0..alpha_l of F.
struct AffineRoot {
  IntVector coords;
  IntVector finite;  // standard-frame finite part, a root of the quotient
  long level = 0;    // standard-frame delta coefficient
  Stratum stratum = Stratum::Long;
};

// F-hat is modelled on the basis (alpha_0, ..., alpha_l, L) where L spans
// rad(I)^*: I(L, L) = 0 and I(L, delta) = 1.
class AffineSystem {
 public:
  const AffineType& type() const { return type_; }
  std::size_t rank() const { return type_.rank; }
  std::size_t hat_dim() const { return type_.rank + 2; }
  const Rational& scale() const { return scale_; }

  // R_af / rad(I), in the basis alpha_1..alpha_l.
  const FiniteRootSystem& quotient() const { return quotient_; }
  // The finite system the Weyl group and identities are organised around:
  // the quotient, or R_f' for BC_l^{(2)}.
  const FiniteRootSystem& frame_system() const { return frame_; }
  Frame frame() const { return type_.is_bc() ? Frame::Primed : Frame::Standard; }
  // Affine node indices spanning frame_system(), in order.
  std::vector<std::size_t> frame_indices(Frame f) const;
  std::size_t excluded_index(Frame f) const { return f == Frame::Standard ? 0 : rank(); }

  const GramForm& hat_form() const { return hat_; }
  // Gram of alpha_0..alpha_l alone (positive semidefinite, corank 1).
  GramForm affine_form() const;
  RationalVector simple_root(std::size_t i) const;
  RationalVector delta() const;
  RationalVector lambda_direction() const;
  // theta (untwisted), theta_s (twisted) or 2 theta_s (BC), so that
  // alpha_0 = delta - theta0(); quotient basis.
  const IntVector& theta0() const { return theta0_; }

  // GCM A_ij = I(alpha_i^vee, alpha_j).
  const std::vector<IntVector>& gcm() const { return gcm_; }
  const IntVector& labels() const { return labels_; }
  const IntVector& colabels() const { return colabels_; }
  long coxeter_number() const;
  long dual_coxeter_number() const;

  // Finite part, level and rad(I)^* coefficient of an F-hat vector.
  Split split(const RationalVector& x, Frame f) const;
  RationalVector embed(const RationalVector& finite, const Rational& level, Frame f,
                       const Rational& lambda = 0) const;

  // Stratum of a real root given in alpha coordinates of F, nullopt if x is
  // not a real root.
  std::optional<Stratum> classify(const RationalVector& coords) const;
  bool is_real_root(const RationalVector& coords) const { return classify(coords).has_value(); }

 private:
  friend AffineSystem build_affine(const AffineType& type, const Rational& scale);
  AffineSystem(AffineType type, Rational scale, FiniteRootSystem quotient, FiniteRootSystem frame)
      : type_(type), scale_(std::move(scale)), quotient_(std::move(quotient)),
        frame_(std::move(frame)) {}

  AffineType type_;
  Rational scale_;
  FiniteRootSystem quotient_;
  FiniteRootSystem frame_;
  GramForm hat_;
  IntVector theta0_;
  std::vector<IntVector> gcm_;
  IntVector labels_;
  IntVector colabels_;
};

AffineSystem build_affine(const AffineType& type, const Rational& scale = 1);

// All real roots with standard level |k| <= n_max.
std::vector<AffineRoot> roots_up_to(const AffineSystem& sys, int n_max);

// Nodes i with delta - a_i alpha_i a real root.
std::vector<std::size_t> special_indices(const AffineSystem& sys);

// Primitive vector of positive integers spanning the kernel of m (or of its
// transpose). Throws InvariantError when no such vector exists.
IntVector primitive_positive_null_vector(const std::vector<IntVector>& m, bool left);

struct Nomenclature {
  std::string saito;
  std::string kac;
  std::string moody;
  std::string macdonald;
  std::string carter;
};

Nomenclature nomenclature(const AffineType& type);
// name is one of saito, kac, moody, macdonald, carter.
std::string nomenclature_name(const AffineType& type, std::string_view scheme);

struct NonreducedAlias {
  std::string root_system;
  std::string superalgebra;
};

// Informational only; none of these are constructed.
std::vector<NonreducedAlias> nonreduced_table();

}  // namespace macver
