#include "weyl/weyl_groups.hpp"

#include <deque>
#include <unordered_set>

#include "core/error.hpp"

namespace macver {

namespace {

// Embeds a frame vector into F-hat at level zero.
RationalVector frame_embed(const AffineSystem& sys, const RationalVector& v) {
  return sys.embed(v, 0, sys.frame());
}

}  // namespace

IntVector WeylElement::apply(const IntVector& x) const {
  const std::size_t l = x.size();
  IntVector y(l, 0);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) y[i] += matrix[i * l + j] * x[j];
  return y;
}

RationalVector WeylElement::apply(const RationalVector& x) const {
  const std::size_t l = x.size();
  RationalVector y = zero_vector(l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      if (matrix[i * l + j] != 0) y[i] += matrix[i * l + j] * x[j];
  return y;
}

Matrix WeylElement::to_matrix() const {
  std::size_t l = 0;
  while (l * l < matrix.size()) ++l;
  Matrix m(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) m(i, j) = matrix[i * l + j];
  return m;
}

Matrix simple_reflection_matrix(const FiniteRootSystem& rs, std::size_t i) {
  const std::size_t l = rs.rank();
  Matrix s = Matrix::identity(l);
  for (std::size_t j = 0; j < l; ++j) s(i, j) -= rs.cartan()[i][j];
  return s;
}

std::vector<WeylElement> enumerate_weyl(const FiniteRootSystem& rs, std::uint64_t cap) {
  if (is_valid(rs.type()) && rs.type().rank == static_cast<int>(rs.rank())) {
    const std::uint64_t order = weyl_group_order(rs.type());
    if (order > cap)
      throw CapacityError("Weyl group of " + rs.type().label() + " has order " +
                          std::to_string(order) + ", above the cap " + std::to_string(cap) +
                          "; raise --weyl-cap to at least " + std::to_string(order));
  }
  const std::size_t l = rs.rank();
  const auto& a = rs.cartan();
  IntVector id(l * l, 0);
  for (std::size_t i = 0; i < l; ++i) id[i * l + i] = 1;

  std::vector<WeylElement> out{{id, 1, 0}};
  std::unordered_set<IntVector, IntVectorHash> seen{id};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t i = 0; i < l; ++i) {
      // s_i * w changes only row i: row_i -= sum_j A_ij row_j.
      IntVector m = out[head].matrix;
      for (std::size_t c = 0; c < l; ++c) {
        long acc = 0;
        for (std::size_t j = 0; j < l; ++j) acc += a[i][j] * out[head].matrix[j * l + c];
        m[i * l + c] -= acc;
      }
      if (!seen.insert(m).second) continue;
      if (out.size() >= cap)
        throw CapacityError("Weyl group of " + rs.type().label() + " exceeds the cap " +
                            std::to_string(cap));
      out.push_back({std::move(m), -out[head].det, out[head].length + 1});
    }
  }
  return out;
}

Matrix hat_reflection(const AffineSystem& sys, const RationalVector& alpha) {
  const GramForm& f = sys.hat_form();
  const Rational n = f.norm2(alpha);
  if (n == 0) throw DomainError("reflection in an isotropic vector");
  const std::size_t d = sys.hat_dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    RationalVector e = unit_vector(d, j);
    RationalVector img = e - (2 * f(e, alpha) / n) * alpha;
    for (std::size_t i = 0; i < d; ++i) m(i, j) = img[i];
  }
  return m;
}

Matrix translation_matrix(const AffineSystem& sys, const RationalVector& gamma) {
  const GramForm& f = sys.hat_form();
  const std::size_t d = sys.hat_dim();
  if (gamma.size() != d) throw UsageError("translation vector must live in F-hat");
  if (gamma[d - 1] != 0) throw DomainError("translation vector must lie in F");
  const RationalVector delta = sys.delta();
  const Rational gg = f.norm2(gamma);
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    RationalVector e = unit_vector(d, j);
    const Rational ld = f(e, delta);
    RationalVector img = e + ld * gamma - (f(e, gamma) + gg * ld / 2) * delta;
    for (std::size_t i = 0; i < d; ++i) m(i, j) = img[i];
  }
  return m;
}

Matrix finite_on_hat(const AffineSystem& sys, const WeylElement& u) {
  // In the basis (frame simple roots, delta, L) u is block diagonal.
  const std::size_t d = sys.hat_dim();
  const std::size_t l = sys.rank();
  std::vector<RationalVector> basis;
  for (std::size_t j = 0; j < l; ++j) basis.push_back(frame_embed(sys, unit_vector(l, j)));
  basis.push_back(sys.delta());
  basis.push_back(sys.lambda_direction());
  Matrix p = Matrix::from_columns(basis);
  Matrix block = Matrix::identity(d);
  Matrix um = u.to_matrix();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) block(i, j) = um(i, j);
  return p * block * inverse(p);
}

bool preserves_form(const GramForm& form, const Matrix& m) {
  return m.transpose() * form.gram() * m == form.gram();
}

TranslationLattice translation_lattice(const AffineSystem& sys) {
  const FiniteRootSystem& fr = sys.frame_system();
  TranslationLattice t;
  const std::size_t l = fr.rank();
  if (sys.type().is_bc()) {
    t.basis = fr.coroot_lattice_basis();
    t.description = "Q((R_f')^vee), R_f' of type C" + std::to_string(l);
  } else if (sys.type().is_twisted()) {
    const Rational f = 2 / fr.norm2(fr.highest_short_root());
    for (std::size_t i = 0; i < l; ++i) t.basis.push_back(f * unit_vector(l, i));
    t.description = "(2/I(theta_s,theta_s)) Q(R_f) = " + to_string(f) + " Q(R_f)";
  } else {
    t.basis = fr.coroot_lattice_basis();
    t.description = "Q(R_f^vee)";
  }
  return t;
}

Matrix AffineWeylElement::to_matrix(const AffineSystem& sys) const {
  return finite_on_hat(sys, u) * translation_matrix(sys, frame_embed(sys, gamma));
}

bool check_s0_product(const AffineSystem& sys) {
  const GramForm& f = sys.hat_form();
  const std::size_t l = sys.rank();
  RationalVector a, b, theta;
  if (sys.type().is_bc()) {
    a = sys.simple_root(l);
    b = sys.delta() - Rational(2) * a;
    theta = frame_embed(sys, to_rational(sys.frame_system().highest_root()));
    if (b != theta) return false;
  } else {
    a = sys.simple_root(0);
    b = sys.delta() - a;
    theta = frame_embed(sys, to_rational(sys.theta0()));
  }
  RationalVector coroot = (2 / f.norm2(theta)) * theta;
  return hat_reflection(sys, a) * hat_reflection(sys, b) == translation_matrix(sys, coroot);
}

}  // namespace macver
