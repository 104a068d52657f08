#pragma once

#include <json.hpp>

#include "identity/identity_engine.hpp"
#include "roots/folding.hpp"

namespace macver::json {

using nlohmann::json;

// Integers outside int64 and non-integral rationals are written as strings.
json number(const Integer& z);
json number(const Rational& r);
json vector(const RationalVector& v);
json vector(const IntVector& v);
json series(const QSeries& s);

json report(const IdentityReport& r);
json affine_info(const AffineSystem& sys);
json affine_roots(const AffineSystem& sys, int max_level);
json finite_info(const FiniteRootSystem& rs);
json finite_roots(const FiniteRootSystem& rs);
json strange(const AffineSystem& sys, const StrangeFormula& s);
json dual_coxeter(const AffineType& type, const DualCoxeterComparison& c);
json census(const FiniteRootSystem& rs, const CoxeterCensus& c);
json folding(const FoldingResult& r);
json affine_folding(const AffineFoldingResult& r);
json folding_table(const std::vector<FoldingTableRow>& rows);
json nomenclature_table(const std::vector<AffineType>& types);
json nonreduced();

}  // namespace macver::json
