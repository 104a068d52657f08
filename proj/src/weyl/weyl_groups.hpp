#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "roots/affine_roots.hpp"
#include "roots/finite_roots.hpp"

namespace macver {

inline constexpr std::uint64_t kDefaultWeylCap = 1'000'000;

// Element of W(R_f) as an integer matrix on simple-root coordinates,
// row-major l x l; column j is the image of alpha_j.
struct WeylElement {
  IntVector matrix;
  int det = 1;
  std::size_t length = 0;

  IntVector apply(const IntVector& x) const;
  RationalVector apply(const RationalVector& x) const;
  Matrix to_matrix() const;
};

// Breadth-first closure over left multiplication by simple reflections.
// Throws CapacityError naming the cap needed when |W| exceeds cap.
std::vector<WeylElement> enumerate_weyl(const FiniteRootSystem& rs,
                                        std::uint64_t cap = kDefaultWeylCap);

// Matrices of simple reflections s_i on simple-root coordinates.
Matrix simple_reflection_matrix(const FiniteRootSystem& rs, std::size_t i);

// Linear maps on F-hat, basis (alpha_0, ..., alpha_l, L).
Matrix hat_reflection(const AffineSystem& sys, const RationalVector& alpha);
// t_gamma for gamma in F (an F-hat vector with no L component).
Matrix translation_matrix(const AffineSystem& sys, const RationalVector& gamma);
// A finite Weyl element of the frame system acting on F-hat (fixing delta
// and L).
Matrix finite_on_hat(const AffineSystem& sys, const WeylElement& u);
bool preserves_form(const GramForm& form, const Matrix& m);

struct TranslationLattice {
  // Basis of M in frame coordinates.
  std::vector<RationalVector> basis;
  std::string description;
};

// Q(R_f^vee), (2/I(theta_s,theta_s)) Q(R_f), or Q((R_f')^vee).
TranslationLattice translation_lattice(const AffineSystem& sys);

struct AffineWeylElement {
  WeylElement u;
  RationalVector gamma;  // frame coordinates, in M

  Matrix to_matrix(const AffineSystem& sys) const;
  int det() const { return u.det; }
};

// s_{alpha_0} s_{delta - alpha_0} = t_{theta^vee} (untwisted), t_{theta_s^vee}
// (twisted), or s_{alpha_l} s_{delta - 2 alpha_l} = t_{theta^vee} with theta
// the highest root of R_f' (BC), as matrices on F-hat.
bool check_s0_product(const AffineSystem& sys);

}  // namespace macver
