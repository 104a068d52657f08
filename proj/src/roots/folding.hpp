#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "roots/affine_roots.hpp"
#include "roots/finite_roots.hpp"

namespace macver {

// A permutation of Dynkin nodes, extended linearly to the span of the simple
// roots. perm[i] is the image of node i.
struct DiagramAutomorphism {
  std::string name;
  std::vector<std::size_t> perm;

  std::size_t order() const;
  std::vector<std::size_t> fixed_nodes() const;
  // Node orbits, each sorted, ordered by smallest element.
  std::vector<std::vector<std::size_t>> orbits() const;
  RationalVector apply(const RationalVector& x) const;
  DiagramAutomorphism power(std::size_t k) const;
};

DiagramAutomorphism identity_automorphism(std::size_t nodes);

// Catalog of finite diagram automorphisms: A_{2l-1} flip, D_{l+1} flip, E_6
// flip, D_4 triality. Throws UsageError if the type has no catalog entry of
// that kind.
enum class CatalogEntry { Flip, Triality };
DiagramAutomorphism catalog_automorphism(const FiniteType& type, CatalogEntry entry);
// The finite automorphism extended to X^{(1)} by fixing alpha_0.
DiagramAutomorphism extend_to_affine(const DiagramAutomorphism& finite);
// Order-4 automorphism of D_{2l+2}^{(1)} with a single fixed node.
DiagramAutomorphism bc_automorphism(int l);

// Throws DomainError unless sigma preserves the Cartan matrix.
void check_diagram_automorphism(const std::vector<IntVector>& cartan,
                                const DiagramAutomorphism& sigma);

enum class FoldKind { Sum, Mean };
std::string fold_kind_name(FoldKind k);

// Tr^H on a root: sum over the distinct elements of its H-orbit. Tr_H: mean
// over the group.
RationalVector fold_vector(const DiagramAutomorphism& sigma, const RationalVector& x, FoldKind kind);

struct FoldingResult {
  FoldKind kind = FoldKind::Sum;
  // Image simple roots b_O, one per node orbit, as vectors of the source.
  std::vector<std::vector<std::size_t>> node_orbits;
  std::vector<RationalVector> image_simple;
  // Restriction of the form to span{b_O}.
  GramForm form;
  // Image roots in the b_O basis.
  std::vector<RationalVector> roots;
  std::vector<IntVector> cartan;
  // Every type label whose Cartan matrix matches; identified is the first.
  std::vector<std::string> matches;
  std::string identified;
  // Image node O corresponds to node to_target[O] of the identified type.
  std::vector<std::size_t> to_target;
};

FoldingResult fold_sum(const FiniteRootSystem& rs, const DiagramAutomorphism& sigma);
FoldingResult fold_mean(const FiniteRootSystem& rs, const DiagramAutomorphism& sigma);
FoldingResult fold_finite(const FiniteRootSystem& rs, const DiagramAutomorphism& sigma,
                          FoldKind kind);

// Folds an affine system under an automorphism of its affine diagram and
// identifies the image among the legal affine types. Roots with level at
// most window are folded and checked against the identified system.
struct AffineFoldingResult {
  FoldingResult data;
  AffineType type;
  bool roots_match = false;
};

AffineFoldingResult fold_affine(const AffineSystem& sys, const DiagramAutomorphism& sigma,
                                FoldKind kind, int window = 4);

// Tr^{sigma}(R^vee) = (Tr_sigma R)^vee and Tr_{sigma}(R^vee) = (Tr^sigma R)^vee,
// as sets of vectors of F.
bool fold_duality_check(const FiniteRootSystem& rs, const DiagramAutomorphism& sigma);
// The same on the real roots of an affine system, compared on |level| <= 1.
bool fold_duality_check(const AffineSystem& sys, const DiagramAutomorphism& sigma);

// D_{2l+2}^{(1)} folded by bc_automorphism(l).
AffineFoldingResult fold_bc(int l, FoldKind kind);

// Y_N^{(1)} and its automorphism whose folding is the given twisted non-BC
// type.
struct FoldingSource {
  AffineType source;
  DiagramAutomorphism sigma;
};
FoldingSource folding_source(const AffineType& twisted);

struct FoldingTableRow {
  std::string source;  // finite type of R_f
  std::string automorphism;
  std::string sum_finite, mean_finite, sum_affine, mean_affine;
  // Expected entries and whether they are among the computed matches.
  std::string expected_sum_finite, expected_mean_finite, expected_sum_affine,
      expected_mean_affine;
  bool reproduced = false;
};

// Rows for A_{2l-1}, D_{l+1} (l in ls), E_6 and D_4 triality.
std::vector<FoldingTableRow> folding_table(const std::vector<int>& ls);

}  // namespace macver
