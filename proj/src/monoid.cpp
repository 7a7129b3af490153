#include "twistab/monoid.hpp"

#include <algorithm>
#include <cassert>

namespace twistab {

AdmissibleMonoid::AdmissibleMonoid(int n, std::vector<QVec> generators)
    : n_(n), gens_(std::move(generators)) {
  if (n < 0) fail(Errc::NotAdmissible, "ambient dimension must be >= 0");
  for (const auto& g : gens_) {
    if (static_cast<int>(g.size()) != n)
      fail(Errc::LengthMismatch, "generator has wrong dimension");
    for (const auto& c : g)
      if (c < 0)
        fail(Errc::NotAdmissible, "generator has a negative coordinate");
  }

  den_ = 1;
  for (const auto& g : gens_)
    for (const auto& c : g) den_ = lcm_int(den_, rat_den(c));

  int k = static_cast<int>(gens_.size());
  span_.assign(n_, std::vector<Int>(k + n_, 0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n_; ++i) {
      Rat scaled = gens_[j][i] * Rat(den_);
      assert(rat_den(scaled) == 1);
      span_[i][j] = rat_num(scaled);
    }
  for (int i = 0; i < n_; ++i) span_[i][k + i] = den_;
  span_snf_ = snf(span_);
  if (span_snf_.rank != n_)
    fail(Errc::NotAdmissible, "span does not have full rank");  // unreachable

  proj_.assign(n_, 1);
  Int sum_den = 1;
  for (const auto& g : gens_) {
    Rat s = 0;
    for (int i = 0; i < n_; ++i) {
      proj_[i] = to_ll(lcm_int(proj_[i], rat_den(g[i])));
      s += g[i];
    }
    sum_den = lcm_int(sum_den, rat_den(s));
  }
  sum_order_ = to_ll(sum_den);
}

bool AdmissibleMonoid::contains(const QVec& v) const {
  if (static_cast<int>(v.size()) != n_)
    fail(Errc::LengthMismatch, "vector has wrong dimension");
  for (const auto& c : v)
    if (c < 0) return false;
  std::vector<Int> b(n_);
  for (int i = 0; i < n_; ++i) {
    Rat scaled = v[i] * Rat(den_);
    if (rat_den(scaled) != 1) return false;
    b[i] = rat_num(scaled);
  }
  return solve_integer(span_snf_, b).has_value();
}

CoordinateData coordinate_data(const AdmissibleMonoid& n) {
  return CoordinateData{n.projection_orders(), n.summation_order()};
}

AdmissibleMonoid monoid_join(const std::vector<AdmissibleMonoid>& ns) {
  if (ns.empty()) fail(Errc::InvalidInput, "join of zero monoids");
  int n = ns[0].dim();
  for (const auto& m : ns)
    if (m.dim() != n) fail(Errc::LengthMismatch, "joined monoids must share n");
  std::vector<QVec> gens;
  for (int i = 0; i < n; ++i) {
    Int r = 1;
    for (const auto& m : ns) r = lcm_int(r, Int(m.projection_orders()[i]));
    if (r == 1) continue;
    QVec e(n, Rat(0));
    e[i] = Rat(1, r);
    gens.push_back(std::move(e));
  }
  return AdmissibleMonoid(n, std::move(gens));
}

XGroup x_group(const AdmissibleMonoid& n) {
  XGroup x(n);
  const AdmissibleMonoid& m = x.monoid_;
  int dim = m.dim();
  int k = static_cast<int>(m.generators().size());
  int cols = k + dim;

  // X = Z^cols / R where R = {c : span * c = 0 mod D}. Generators of R come
  // from the kernel of [span | D*I] with the auxiliary block dropped.
  IMat ext(dim, std::vector<Int>(cols + dim, 0));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < cols; ++j) ext[i][j] = m.span_columns()[i][j];
    ext[i][cols + i] = m.common_denominator();
  }
  auto ker = kernel_basis(snf(ext));
  IMat rel(cols, std::vector<Int>(ker.size(), 0));
  for (size_t j = 0; j < ker.size(); ++j)
    for (int i = 0; i < cols; ++i) rel[i][j] = ker[j][i];

  SnfResult f = snf(rel);
  if (f.rank != cols)
    fail(Errc::NotAdmissible, "quotient group is infinite");  // unreachable

  IMat uinv = imat_inverse_unimodular(f.u);

  x.order_ = 1;
  for (int i = 0; i < cols; ++i) {
    const Int& s = f.s[i][i];
    if (s <= 1) continue;
    x.factors_.push_back(s);
    x.order_ *= s;

    // Lift the i-th presentation generator to a rational vector.
    std::vector<Int> coeff(cols);
    for (int r = 0; r < cols; ++r) coeff[r] = uinv[r][i];
    QVec w(dim, Rat(0));
    for (int r = 0; r < dim; ++r) {
      Int acc = 0;
      for (int c = 0; c < cols; ++c) acc += m.span_columns()[r][c] * coeff[c];
      w[r] = rat_mod1(Rat(acc, m.common_denominator()));
    }
    Rat chi = 0;
    for (const auto& c : w) chi += c;
    x.factor_lifts_.push_back(std::move(w));
    x.factor_chi_.push_back(rat_mod1(chi));
  }

  // Invariant-factor positions inside the SNF diagonal, for class_of.
  std::vector<int> keep;
  for (int i = 0; i < cols; ++i)
    if (f.s[i][i] > 1) keep.push_back(i);

  for (int j = 0; j < k; ++j) {
    std::vector<Int> e(cols, 0);
    e[j] = 1;
    std::vector<Int> img = imat_mul_vec(f.u, e);
    TorsionClass cls;
    for (int i : keep) {
      Int v = img[i] % f.s[i][i];
      if (v < 0) v += f.s[i][i];
      cls.push_back(v);
    }
    x.gen_classes_.push_back(std::move(cls));
  }

  // class_of needs the same data; stash the presentation pieces.
  x.class_u_ = f.u;
  x.class_keep_ = keep;
  x.class_s_ = f.diagonal();
  return x;
}

TorsionClass XGroup::reduce(TorsionClass v) const {
  assert(v.size() == factors_.size());
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] %= factors_[i];
    if (v[i] < 0) v[i] += factors_[i];
  }
  return v;
}

TorsionClass XGroup::add(const TorsionClass& a, const TorsionClass& b) const {
  TorsionClass c(a);
  for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return reduce(std::move(c));
}

Rat XGroup::chi(const TorsionClass& x) const {
  assert(x.size() == factors_.size());
  Rat acc = 0;
  for (size_t i = 0; i < x.size(); ++i) acc += Rat(x[i]) * factor_chi_[i];
  return rat_mod1(acc);
}

QVec XGroup::lift(const TorsionClass& x) const {
  assert(x.size() == factors_.size());
  QVec w(monoid_.dim(), Rat(0));
  for (size_t i = 0; i < x.size(); ++i)
    for (int r = 0; r < monoid_.dim(); ++r)
      w[r] += Rat(x[i]) * factor_lifts_[i][r];
  for (auto& c : w) c = rat_mod1(c);
  return w;
}

TorsionClass XGroup::class_of(const QVec& v) const {
  if (static_cast<int>(v.size()) != monoid_.dim())
    fail(Errc::LengthMismatch, "vector has wrong dimension");
  // Solve span * c = D*v, then push c through the presentation.
  std::vector<Int> b(monoid_.dim());
  for (int i = 0; i < monoid_.dim(); ++i) {
    Rat scaled = v[i] * Rat(monoid_.common_denominator());
    if (rat_den(scaled) != 1)
      fail(Errc::NotInMonoid, "vector is not in the group span");
    b[i] = rat_num(scaled);
  }
  auto c = solve_integer(monoid_.span_snf(), b);
  if (!c) fail(Errc::NotInMonoid, "vector is not in the group span");
  std::vector<Int> img = imat_mul_vec(class_u_, *c);
  TorsionClass cls;
  for (size_t t = 0; t < class_keep_.size(); ++t) {
    int i = class_keep_[t];
    Int val = img[i] % class_s_[i];
    if (val < 0) val += class_s_[i];
    cls.push_back(val);
  }
  return cls;
}

std::vector<TorsionClass> XGroup::all_elements() const {
  std::vector<TorsionClass> out;
  TorsionClass cur(factors_.size(), 0);
  while (true) {
    out.push_back(cur);
    size_t i = 0;
    while (i < cur.size()) {
      if (++cur[i] < factors_[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == cur.size()) break;
    if (cur.empty()) break;
  }
  return out;
}

FiniteAbelianGroup XmSubgroup::abstract_type() const {
  std::vector<long long> f;
  for (const auto& v : factors) f.push_back(to_ll(v));
  return FiniteAbelianGroup(f);
}

bool XmSubgroup::contains(const XGroup& x, const TorsionClass& cls) const {
  Rat c = x.chi(cls) * Rat(m);
  return rat_den(c) == 1;
}

std::vector<TorsionClass> XmSubgroup::all_elements(const XGroup& x) const {
  std::vector<TorsionClass> out;
  TorsionClass cur(factors.size(), 0);
  while (true) {
    TorsionClass elem = x.zero();
    for (size_t i = 0; i < cur.size(); ++i) {
      TorsionClass scaled = x.zero();
      for (size_t r = 0; r < scaled.size(); ++r)
        scaled[r] = generators[i][r] * cur[i];
      elem = x.add(elem, x.reduce(std::move(scaled)));
    }
    out.push_back(std::move(elem));
    size_t i = 0;
    while (i < cur.size()) {
      if (++cur[i] < factors[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == cur.size()) break;
    if (cur.empty()) break;
  }
  return out;
}

XmSubgroup x_m(const XGroup& x, long long m) {
  if (m < 1) fail(Errc::InvalidInput, "m must be >= 1");
  int t = static_cast<int>(x.factors().size());

  XmSubgroup out;
  out.m = m;
  if (t == 0) return out;

  // Condition m*chi(x) = 0 becomes one congruence sum a_i x_i = 0 mod Q.
  Int q = 1;
  std::vector<Rat> chis;
  for (int i = 0; i < t; ++i) {
    TorsionClass e(t, 0);
    e[i] = 1;
    chis.push_back(x.chi(e));
    q = lcm_int(q, rat_den(chis.back()));
  }
  std::vector<Int> a(t);
  for (int i = 0; i < t; ++i) {
    Int v = Int(m) * rat_num(chis[i]) * (q / rat_den(chis[i]));
    v %= q;
    if (v < 0) v += q;
    a[i] = v;
  }

  // Kernel sublattice K = {v : sum a_i v_i = 0 mod Q} via [a | Q].
  IMat row(1, std::vector<Int>(t + 1));
  for (int i = 0; i < t; ++i) row[0][i] = a[i];
  row[0][t] = q;
  auto ker = kernel_basis(snf(row));
  assert(static_cast<int>(ker.size()) == t);
  IMat basis(t, std::vector<Int>(t));
  for (int j = 0; j < t; ++j)
    for (int i = 0; i < t; ++i) basis[i][j] = ker[j][i];

  // X_m = K / (diag factors) Z^t: solve basis * c = factors*e_i columns.
  SnfResult bf = snf(basis);
  IMat c(t, std::vector<Int>(t));
  for (int i = 0; i < t; ++i) {
    std::vector<Int> b(t, 0);
    b[i] = x.factors()[i];
    auto sol = solve_integer(bf, b);
    assert(sol.has_value());
    for (int r = 0; r < t; ++r) c[r][i] = (*sol)[r];
  }
  SnfResult cf = snf(c);
  assert(cf.rank == t);
  IMat uinv = imat_inverse_unimodular(cf.u);

  out.order = 1;
  for (int i = 0; i < t; ++i) {
    const Int& s = cf.s[i][i];
    if (s <= 1) continue;
    out.factors.push_back(s);
    out.order *= s;
    std::vector<Int> coeff(t);
    for (int r = 0; r < t; ++r) coeff[r] = uinv[r][i];
    std::vector<Int> elem = imat_mul_vec(basis, coeff);
    out.generators.push_back(x.reduce(TorsionClass(elem.begin(), elem.end())));
  }
  return out;
}

FiniteAbelianGroup torsion_pic(const std::vector<long long>& root_orders,
                               long long m) {
  int k = static_cast<int>(root_orders.size());
  std::vector<QVec> gens;
  for (int i = 0; i < k; ++i) {
    if (root_orders[i] < 1) fail(Errc::InvalidInput, "orders must be >= 1");
    if (root_orders[i] == 1) continue;
    QVec e(k, Rat(0));
    e[i] = Rat(1, root_orders[i]);
    gens.push_back(std::move(e));
  }
  XGroup x = x_group(AdmissibleMonoid(k, std::move(gens)));
  return x_m(x, m).abstract_type();
}

Rat degree_of_generator_bundle(const AdmissibleMonoid& n, const QVec& ell) {
  if (!n.contains(ell))
    fail(Errc::NotInMonoid, "vector is not in the monoid");
  Rat sum = 0;
  for (const auto& c : ell) sum += c;
  return -sum;
}

MinimalLift minimal_lift(const XGroup& x, long long m,
                         const TorsionClass& lam) {
  Rat mchi = x.chi(lam) * Rat(m);
  if (rat_den(mchi) != 1)
    fail(Errc::NotInXm, "class is not killed by m*chi");
  MinimalLift out;
  out.n_lambda = x.lift(lam);
  Rat chi = 0;
  for (const auto& c : out.n_lambda) chi += c;
  out.s = rat_floor(chi);
  Rat frac = (chi - Rat(out.s)) * Rat(m);
  assert(rat_den(frac) == 1);
  out.w = rat_num(frac);
  return out;
}

long long count_abelian_torsors(const std::vector<long long>& root_orders,
                                long long m, const FiniteGroup& g) {
  return hom_classes(torsion_pic(root_orders, m), g).count;
}

FiniteAbelianGroup orbifold_abelianization(
    const std::vector<long long>& root_orders, long long m) {
  int k = static_cast<int>(root_orders.size());
  for (long long r : root_orders)
    if (r < 1) fail(Errc::InvalidInput, "orders must be >= 1");
  if (m < 1) fail(Errc::InvalidInput, "m must be >= 1");
  // Generators c_1..c_k, c; relations r_i c_i, m c, and sum of all.
  IMat rel(k + 1, std::vector<Int>(k + 2, 0));
  for (int i = 0; i < k; ++i) rel[i][i] = root_orders[i];
  rel[k][k] = m;
  for (int i = 0; i <= k; ++i) rel[i][k + 1] = 1;
  std::vector<Int> inv = cokernel_invariants(rel);
  std::vector<long long> f;
  for (const auto& v : inv) f.push_back(to_ll(v));
  return FiniteAbelianGroup(f);
}

}  // namespace twistab
