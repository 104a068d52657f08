#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "core/error.hpp"
#include "identity/identity_engine.hpp"

namespace macver {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Sparse element of Z[Q]: sorted (key, coefficient) pairs where the key is a
// mixed-radix encoding of a nonnegative integer vector below fixed bounds.
using Packed = std::vector<std::pair<std::uint64_t, std::int64_t>>;

class Radix {
 public:
  explicit Radix(const IntVector& bounds) {
    std::uint64_t stride = 1;
    for (long b : bounds) {
      strides_.push_back(stride);
      const auto r = static_cast<std::uint64_t>(b) + 1;
      if (stride > (std::uint64_t{1} << 62) / r)
        throw CapacityError("weight range too large to pack into 64-bit keys");
      stride *= r;
    }
    bounds_ = bounds;
  }
  std::uint64_t key(const IntVector& v) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      MACVER_ENSURE(v[i] >= 0 && v[i] <= bounds_[i], "packed coordinate out of range");
      k += static_cast<std::uint64_t>(v[i]) * strides_[i];
    }
    return k;
  }
  IntVector decode(std::uint64_t k) const {
    IntVector v(bounds_.size());
    for (std::size_t i = bounds_.size(); i-- > 0;) {
      v[i] = static_cast<long>(k / strides_[i]);
      k %= strides_[i];
    }
    return v;
  }

 private:
  IntVector bounds_;
  std::vector<std::uint64_t> strides_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("coefficient overflow in expansion");
  return r;
}

// x * sign_a + shift(x, by) * sign_b with keys moved by +by or -by.
Packed combine(const Packed& a, std::int64_t sign_a, std::uint64_t shift_a, bool down_a,
               std::int64_t sign_b, std::uint64_t shift_b, bool down_b) {
  auto moved = [](std::uint64_t k, std::uint64_t s, bool down) { return down ? k - s : k + s; };
  Packed out;
  out.reserve(a.size() * 2);
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < a.size()) {
    const bool has_i = i < a.size(), has_j = j < a.size();
    const std::uint64_t ki = has_i ? moved(a[i].first, shift_a, down_a) : 0;
    const std::uint64_t kj = has_j ? moved(a[j].first, shift_b, down_b) : 0;
    if (has_i && (!has_j || ki < kj)) {
      out.emplace_back(ki, sign_a * a[i++].second);
    } else if (has_j && (!has_i || kj < ki)) {
      out.emplace_back(kj, sign_b * a[j++].second);
    } else {
      const std::int64_t c = checked_add(sign_a * a[i++].second, sign_b * a[j++].second);
      if (c != 0) out.emplace_back(ki, c);
    }
  }
  return out;
}

IntVector scaled_int(const RationalVector& v, const Integer& den) {
  IntVector out;
  for (const auto& x : v) out.push_back(to_int64(x * Rational(den)));
  return out;
}

Integer common_denominator(const RationalVector& v, Integer den = 1) {
  for (const auto& x : v) den = lcm(den, Integer(x.get_den()));
  return den;
}

RationalVector weight_of(const IntVector& scaled, const Integer& den) {
  RationalVector w;
  for (long x : scaled) w.push_back(make_rational(Integer(x), den));
  return w;
}

}  // namespace

IdentityReport denominator_finite(const FiniteRootSystem& rs, const EngineConfig& cfg) {
  const auto start = Clock::now();
  if (!rs.is_reduced()) throw DomainError("the finite denominator identity needs a reduced system");
  IdentityReport r;
  r.identity = "denominator-finite";
  r.type = rs.type().label();
  const std::vector<WeylElement> weyl = enumerate_weyl(rs, cfg.weyl_cap);
  const std::size_t l = rs.rank();
  const IntVector two_rho = to_int(Rational(2) * rs.rho());

  // Left side e^rho prod (1 - e^{-alpha}) = sum c_beta e^{rho - beta}, beta in
  // Q+ bounded by 2 rho; keys encode beta.
  const Radix beta_radix(two_rho);
  Packed lhs{{0, 1}};
  for (const IntVector& a : rs.positive_roots())
    lhs = combine(lhs, 1, 0, false, -1, beta_radix.key(a), false);

  Packed rhs;
  for (const WeylElement& u : weyl) {
    const IntVector img = u.apply(two_rho);
    IntVector beta(l);
    for (std::size_t i = 0; i < l; ++i) beta[i] = (two_rho[i] - img[i]) / 2;
    rhs.emplace_back(beta_radix.key(beta), u.det);
  }
  std::sort(rhs.begin(), rhs.end());

  r.terms_compared = std::max(lhs.size(), rhs.size());
  r.passed = lhs == rhs;
  if (!r.passed) {
    std::size_t i = 0;
    while (i < lhs.size() && i < rhs.size() && lhs[i] == rhs[i]) ++i;
    std::uint64_t k;
    Rational cl = 0, cr = 0;
    if (i < lhs.size() && (i >= rhs.size() || lhs[i].first <= rhs[i].first)) {
      k = lhs[i].first;
      cl = lhs[i].second;
      if (i < rhs.size() && rhs[i].first == k) cr = rhs[i].second;
    } else {
      k = rhs[i].first;
      cr = rhs[i].second;
    }
    r.first_mismatch = Mismatch{0, cl, cr, rs.rho() - to_rational(beta_radix.decode(k))};
  }

  // prod (e^{alpha/2} - e^{-alpha/2}) in doubled coordinates x = 2 mu,
  // offset by 2 rho so that keys stay nonnegative.
  IntVector four_rho(l);
  for (std::size_t i = 0; i < l; ++i) four_rho[i] = 2 * two_rho[i];
  const Radix doubled(four_rho);
  Packed half{{doubled.key(two_rho), 1}};
  for (const IntVector& a : rs.positive_roots()) {
    const std::uint64_t k = doubled.key(a);
    half = combine(half, 1, k, false, -1, k, true);
  }
  Packed mapped;
  for (const auto& [k, c] : lhs) {
    IntVector beta = beta_radix.decode(k);
    for (std::size_t i = 0; i < l; ++i) beta[i] = four_rho[i] - 2 * beta[i];
    mapped.emplace_back(doubled.key(beta), c);
  }
  std::sort(mapped.begin(), mapped.end());
  r.checks.emplace_back("prod (e^{a/2} - e^{-a/2}) = e^rho prod (1 - e^{-a})", half == mapped);
  r.checks.emplace_back("|W| matches the classical order",
                        weyl.size() == weyl_group_order(rs.type()));
  r.passed = r.passed && half == mapped && weyl.size() == weyl_group_order(rs.type());
  r.facts.emplace_back("weyl_order", std::to_string(weyl.size()));
  r.facts.emplace_back("lhs_terms", std::to_string(lhs.size()));
  r.facts.emplace_back("positive_roots", std::to_string(rs.positive_roots().size()));
  r.wall_ms = elapsed_ms(start);
  return r;
}

IdentityReport denominator_affine(const AffineSystem& sys, const EngineConfig& cfg) {
  const auto start = Clock::now();
  IdentityReport r;
  r.identity = "denominator-affine";
  r.type = sys.type().label();
  r.order = cfg.order.value_or(Rational(kDefaultDenominatorOrder));
  if (r.order < 1) throw UsageError("order must be at least 1, got " + to_string(r.order));
  r.cutoff = r.order;

  const Frame frame = sys.frame();
  const FiniteRootSystem& rf = sys.frame_system();
  const std::size_t l = rf.rank();
  const WeylVectorData wv = weyl_vector_data(sys);
  const Rational& c = wv.c;
  const long qden = sys.type().is_bc() ? 2 : 1;
  const long qmax = to_int64(floor(r.cutoff * qden));

  // (1 - e^{-finite} q^level)^power
  struct Factor {
    RationalVector finite;
    Rational level;
    long power;
  };
  std::vector<Factor> factors;
  for (const IntVector& a : rf.positive_roots()) factors.push_back({to_rational(a), 0, 1});
  const int window = static_cast<int>(to_int64(ceil(r.cutoff))) + 4;
  std::size_t level_zero = 0;
  for (const AffineRoot& root : roots_up_to(sys, window)) {
    if (std::any_of(root.coords.begin(), root.coords.end(), [](long x) { return x < 0; })) continue;
    const Split sp = sys.split(to_rational(root.coords), frame);
    if (sp.level == 0) ++level_zero;
    if (sp.level > 0 && sp.level <= r.cutoff) factors.push_back({sp.finite, sp.level, 1});
  }
  r.checks.emplace_back("level-0 positive roots are the frame positive roots",
                        level_zero == rf.positive_roots().size());
  const FiniteRootSystem& rq = sys.quotient();
  const long n_short = static_cast<long>(rq.simple_indices(Stratum::Short).size());
  const long n_long = static_cast<long>(rq.simple_indices(Stratum::Long).size());
  for (long n = 1; n <= to_int64(floor(r.cutoff)); ++n) {
    long mult = static_cast<long>(l);
    if (sys.type().is_twisted() && !sys.type().is_bc())
      mult = n_short + (n % sys.type().tier == 0 ? n_long : 0);
    factors.push_back({zero_vector(l), Rational(n), mult});
  }

  // Translation part of the right side.
  const TranslationLattice lat = translation_lattice(sys);
  std::vector<RationalVector> basis;
  for (const auto& b : lat.basis) basis.push_back(c * b);
  const GramForm& form = rf.form();
  const RationalVector& rho = wv.rho_f;
  const Rational rho2 = form.norm2(rho);
  const EnumerationResult en = enumerate_shifted_lattice(form, basis, rho, rho2 + 2 * c * r.cutoff);
  r.lattice_points = en.points.size();
  r.certificate = en.certificate;

  Integer wden = common_denominator(rho);
  for (const auto& b : basis) wden = common_denominator(b, wden);
  for (const auto& f : factors) wden = common_denominator(f.finite, wden);

  using Key = IntVector;  // [q numerator over qden, weight * wden]
  using Poly = std::unordered_map<Key, std::int64_t, IntVectorHash>;
  auto make_key = [&](long q, const IntVector& w) {
    Key k{q};
    k.insert(k.end(), w.begin(), w.end());
    return k;
  };

  Poly lhs{{make_key(0, scaled_int(rho, wden)), 1}};
  for (const Factor& f : factors) {
    Key shift = make_key(to_int64(f.level * qden), scaled_int(-f.finite, wden));
    for (long p = 0; p < f.power; ++p) {
      Poly next = lhs;
      for (const auto& [k, v] : lhs) {
        if (k[0] + shift[0] > qmax) continue;
        Key nk = k;
        for (std::size_t i = 0; i < nk.size(); ++i) nk[i] += shift[i];
        std::int64_t& slot = next[nk];
        slot = checked_add(slot, -v);
        if (slot == 0) next.erase(nk);
      }
      lhs = std::move(next);
    }
  }

  Poly rhs;
  bool on_grid = true;
  const std::vector<WeylElement> weyl = enumerate_weyl(rf, cfg.weyl_cap);
  for (const IntVector& x : en.points) {
    RationalVector v = rho;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (x[j] != 0) v = v + Rational(x[j]) * basis[j];
    const Rational e = (form.norm2(v) - rho2) / (2 * c) * qden;
    if (!is_integer(e)) {
      on_grid = false;
      continue;
    }
    const long q = to_int64(e);
    const IntVector sv = scaled_int(v, wden);
    for (const WeylElement& u : weyl) {
      Key k = make_key(q, u.apply(sv));
      std::int64_t& slot = rhs[k];
      slot = checked_add(slot, u.det);
      if (slot == 0) rhs.erase(k);
    }
  }
  r.checks.emplace_back("translation exponents lie on the q grid", on_grid);

  std::map<Key, std::pair<std::int64_t, std::int64_t>> diff;
  for (const auto& [k, v] : lhs) diff[k].first = v;
  for (const auto& [k, v] : rhs) diff[k].second = v;
  r.passed = true;
  for (const auto& [k, pr] : diff) {
    ++r.terms_compared;
    if (pr.first != pr.second) {
      r.passed = false;
      r.first_mismatch = Mismatch{make_rational(k[0], qden), pr.first, pr.second,
                                  weight_of(IntVector(k.begin() + 1, k.end()), wden)};
      break;
    }
  }
  for (const auto& [name, ok] : r.checks) r.passed = r.passed && ok;
  r.facts.emplace_back("lhs_terms", std::to_string(lhs.size()));
  r.facts.emplace_back("rhs_terms", std::to_string(rhs.size()));
  r.facts.emplace_back("factors", std::to_string(factors.size()));
  r.facts.emplace_back("lattice", lat.description);
  r.wall_ms = elapsed_ms(start);
  return r;
}

}  // namespace macver
