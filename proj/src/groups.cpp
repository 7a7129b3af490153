#include "twistab/groups.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace twistab {

int FiniteGroup::element_order(int a) const {
  int x = a, ord = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

bool FiniteGroup::abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<int> FiniteGroup::element_by_label(const std::string& s) const {
  for (int i = 0; i < order_; ++i)
    if (labels_[i] == s) return i;
  return std::nullopt;
}

namespace {

std::vector<int> compute_inverses(int order, const std::vector<int>& table,
                                  int identity) {
  std::vector<int> inv(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (table[a * order + b] == identity && table[b * order + a] == identity) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0)
      fail(Errc::NoInverse, "element " + std::to_string(a) + " has no two-sided inverse");
  }
  return inv;
}

GroupPtr finish_group(int order, std::vector<int> table, int identity,
                      std::vector<std::string> labels, std::string name) {
  struct Access : FiniteGroup {};
  auto g = std::make_shared<Access>();
  g->order_ = order;
  g->identity_ = identity;
  g->inverse_ = compute_inverses(order, table, identity);
  g->table_ = std::move(table);
  if (labels.empty()) {
    for (int i = 0; i < order; ++i) labels.push_back(std::to_string(i));
  }
  g->labels_ = std::move(labels);
  g->name_ = std::move(name);
  return g;
}

}  // namespace

GroupPtr FiniteGroup::from_table(int order,
                                 const std::vector<std::vector<int>>& mul,
                                 std::vector<std::string> labels,
                                 std::string name) {
  if (order < 1 || order > kMaxOrder)
    fail(Errc::InvalidInput, "group order must be in [1, " +
                                 std::to_string(kMaxOrder) + "]");
  if (static_cast<int>(mul.size()) != order)
    fail(Errc::InvalidInput, "multiplication table has wrong number of rows");
  std::vector<int> t(order * order);
  for (int i = 0; i < order; ++i) {
    if (static_cast<int>(mul[i].size()) != order)
      fail(Errc::InvalidInput, "multiplication table row " + std::to_string(i) +
                                   " has wrong length");
    for (int j = 0; j < order; ++j) {
      int v = mul[i][j];
      if (v < 0 || v >= order)
        fail(Errc::InvalidInput, "table entry out of range");
      t[i * order + j] = v;
    }
  }

  int identity = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      ok = t[e * order + a] == a && t[a * order + e] == a;
    if (ok) { identity = e; break; }
  }
  if (identity < 0) fail(Errc::NoIdentity, "table has no two-sided identity");

  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (t[t[a * order + b] * order + c] != t[a * order + t[b * order + c]])
          fail(Errc::NonAssociative,
               "associativity fails at (" + std::to_string(a) + "," +
                   std::to_string(b) + "," + std::to_string(c) + ")");

  return finish_group(order, std::move(t), identity, std::move(labels),
                      std::move(name));
}

GroupPtr make_trivial_group() { return make_cyclic_group(1); }

GroupPtr make_cyclic_group(int n) {
  if (n < 1 || n > FiniteGroup::kMaxOrder)
    fail(Errc::InvalidInput, "cyclic group order out of range");
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return finish_group(n, std::move(t), 0, std::move(labels),
                      "C" + std::to_string(n));
}

std::string permutation_cycle_label(const std::vector<int>& one_line) {
  int n = static_cast<int>(one_line.size());
  std::vector<bool> seen(n, false);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || one_line[i] == i) continue;
    std::string cyc = "(" + std::to_string(i + 1);
    seen[i] = true;
    for (int j = one_line[i]; j != i; j = one_line[j]) {
      seen[j] = true;
      cyc += " " + std::to_string(j + 1);
    }
    out += cyc + ")";
  }
  return out.empty() ? "e" : out;
}

std::vector<int> permutation_from_cycles(const std::string& text, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  const std::string& t = text;
  if (t == "e" || t == "()" || t.empty()) return p;
  size_t i = 0;
  while (i < t.size()) {
    while (i < t.size() && isspace(static_cast<unsigned char>(t[i]))) ++i;
    if (i >= t.size()) break;
    if (t[i] != '(') throw std::invalid_argument("bad cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    while (i < t.size() && t[i] != ')') {
      while (i < t.size() && isspace(static_cast<unsigned char>(t[i]))) ++i;
      if (i < t.size() && t[i] == ')') break;
      int v = 0;
      bool got = false;
      while (i < t.size() && isdigit(static_cast<unsigned char>(t[i]))) {
        v = v * 10 + (t[i] - '0');
        ++i;
        got = true;
      }
      if (!got) throw std::invalid_argument("bad cycle notation: " + text);
      if (v < 1 || v > n)
        throw std::invalid_argument("cycle entry out of range: " + text);
      cyc.push_back(v - 1);
    }
    if (i >= t.size()) throw std::invalid_argument("unclosed cycle: " + text);
    ++i;  // ')'
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      p[from] = to;
    }
  }
  return p;
}

GroupPtr make_symmetric_group(int n) {
  if (n < 1 || n > 6)
    fail(Errc::InvalidInput, "symmetric group degree must be in [1, 6]");
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int order = static_cast<int>(perms.size());

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i) index[perms[i]] = i;

  // Left-to-right composition: (a*b)(x) = b(a(x)).
  std::vector<int> t(order * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[b][perms[a][x]];
      t[a * order + b] = index[c];
    }
  std::vector<std::string> labels;
  for (auto& q : perms) labels.push_back(permutation_cycle_label(q));
  return finish_group(order, std::move(t), index[base], std::move(labels),
                      "S" + std::to_string(n));
}

GroupPtr make_dihedral_group(int n) {
  if (n < 1 || 2 * n > FiniteGroup::kMaxOrder)
    fail(Errc::InvalidInput, "dihedral parameter out of range");
  int order = 2 * n;
  // Index k < n: rotation r^k; index n+k: reflection s*r^k.
  auto mul = [&](int a, int b) {
    bool ra = a >= n, rb = b >= n;
    int ka = ra ? a - n : a, kb = rb ? b - n : b;
    if (!ra && !rb) return (ka + kb) % n;
    if (!ra && rb) return n + ((kb - ka) % n + n) % n;
    if (ra && !rb) return n + (ka + kb) % n;
    return ((kb - ka) % n + n) % n;
  };
  std::vector<int> t(order * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) t[a * order + b] = mul(a, b);
  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k)
    labels.push_back(k == 0 ? "e" : (k == 1 ? "r" : "r^" + std::to_string(k)));
  for (int k = 0; k < n; ++k)
    labels.push_back(k == 0 ? "s"
                            : (k == 1 ? "s*r" : "s*r^" + std::to_string(k)));
  return finish_group(order, std::move(t), 0, std::move(labels),
                      "D" + std::to_string(n));
}

GroupPtr make_product_group(const GroupPtr& a, const GroupPtr& b) {
  long long order = static_cast<long long>(a->order()) * b->order();
  if (order > FiniteGroup::kMaxOrder)
    fail(Errc::InvalidInput, "product group exceeds the order cap");
  int na = a->order(), nb = b->order(), n = static_cast<int>(order);
  auto enc = [&](int x, int y) { return x * nb + y; };
  std::vector<int> t(n * n);
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          t[enc(x1, y1) * n + enc(x2, y2)] =
              enc(a->mul(x1, x2), b->mul(y1, y2));
  std::vector<std::string> labels;
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      labels.push_back("(" + a->label(x) + "," + b->label(y) + ")");
  return finish_group(n, std::move(t), enc(a->identity(), b->identity()),
                      std::move(labels), a->name() + "x" + b->name());
}

std::vector<int> generated_subgroup(const FiniteGroup& g,
                                    const std::vector<int>& gens) {
  for (int x : gens)
    if (x < 0 || x >= g.order())
      fail(Errc::InvalidInput, "generator index out of range");
  std::vector<bool> in(g.order(), false);
  std::vector<int> frontier{g.identity()};
  in[g.identity()] = true;
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int y : gens) {
      int z = g.mul(x, y);
      if (!in[z]) {
        in[z] = true;
        frontier.push_back(z);
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < g.order(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::vector<int> generated_subgroup(const FiniteGroup& g,
                                    const std::vector<GroupElement>& gens) {
  std::vector<int> idx;
  for (const auto& e : gens) {
    if (e.group != &g)
      fail(Errc::ForeignElement, "generator belongs to a different group");
    idx.push_back(e.index);
  }
  return generated_subgroup(g, idx);
}

bool is_abelian(const FiniteGroup& g, const std::vector<int>& subgroup) {
  for (size_t i = 0; i < subgroup.size(); ++i)
    for (size_t j = i + 1; j < subgroup.size(); ++j)
      if (g.mul(subgroup[i], subgroup[j]) != g.mul(subgroup[j], subgroup[i]))
        return false;
  return true;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    std::set<int> orbit;
    for (int x = 0; x < g.order(); ++x)
      orbit.insert(g.mul(g.mul(g.inverse(x), a), x));
    std::vector<int> cls(orbit.begin(), orbit.end());
    for (int y : cls) seen[y] = true;
    classes.push_back(std::move(cls));
  }
  return classes;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long long> factors)
    : invariant_factors(std::move(factors)) {
  for (size_t i = 0; i < invariant_factors.size(); ++i) {
    if (invariant_factors[i] < 2)
      fail(Errc::InvalidInput, "invariant factors must be >= 2");
    if (i && invariant_factors[i] % invariant_factors[i - 1] != 0)
      fail(Errc::InvalidInput, "invariant factors must form a divisibility chain");
  }
}

long long FiniteAbelianGroup::order() const {
  long long o = 1;
  for (long long d : invariant_factors) o *= d;
  return o;
}

std::string FiniteAbelianGroup::to_string() const {
  if (trivial()) return "1";
  std::string out;
  for (size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) out += " x ";
    out += "Z/" + std::to_string(invariant_factors[i]);
  }
  return out;
}

FiniteAbelianGroup subgroup_abelian_type(const FiniteGroup& g,
                                         const std::vector<int>& subgroup) {
  assert(is_abelian(g, subgroup));
  long long n = static_cast<long long>(subgroup.size());

  // Per prime p: |{x : x^{p^j} = e}| = p^{sum_i min(lambda_i, j)} recovers
  // the partition lambda of the p-part.
  std::map<long long, std::vector<int>> parts;  // prime -> multiplicities
  long long rem = n;
  for (long long p = 2; p * p <= rem; ++p) {
    if (rem % p) continue;
    while (rem % p == 0) rem /= p;
    parts[p] = {};
  }
  if (rem > 1) parts[rem] = {};

  for (auto& [p, lambda] : parts) {
    std::vector<int> logcount;  // logcount[j] = log_p #{x : x^{p^j} = e}
    logcount.push_back(0);
    for (int j = 1;; ++j) {
      long long pj = 1;
      for (int k = 0; k < j; ++k) pj *= p;
      int cnt = 0;
      for (int x : subgroup)
        if (pj % g.element_order(x) == 0) ++cnt;
      int lg = 0;
      long long c = cnt;
      while (c > 1) {
        assert(c % p == 0);
        c /= p;
        ++lg;
      }
      logcount.push_back(lg);
      if (j > 1 && logcount[j] == logcount[j - 1]) break;
      if (pj > n) break;
    }
    // Number of cyclic p-factors with exponent >= j is logcount[j]-logcount[j-1].
    for (size_t j = 1; j < logcount.size(); ++j) {
      int ge_j = logcount[j] - logcount[j - 1];
      while (static_cast<int>(lambda.size()) < ge_j) lambda.push_back(0);
      for (int i = 0; i < ge_j; ++i) lambda[i] = static_cast<int>(j);
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<int>());
  }

  size_t k = 0;
  for (auto& [p, lambda] : parts) k = std::max(k, lambda.size());
  std::vector<long long> factors(k, 1);
  for (auto& [p, lambda] : parts)
    for (size_t i = 0; i < lambda.size(); ++i) {
      long long pe = 1;
      for (int t = 0; t < lambda[i]; ++t) pe *= p;
      // Align largest exponents with the last invariant factor.
      factors[k - 1 - i] *= pe;
    }
  std::vector<long long> out;
  for (long long f : factors)
    if (f > 1) out.push_back(f);
  return FiniteAbelianGroup(out);
}

HomClasses hom_classes(const FiniteAbelianGroup& a, const FiniteGroup& g) {
  int k = static_cast<int>(a.invariant_factors.size());
  std::vector<std::vector<int>> candidates(k);
  for (int i = 0; i < k; ++i)
    for (int x = 0; x < g.order(); ++x)
      if (a.invariant_factors[i] % g.element_order(x) == 0)
        candidates[i].push_back(x);

  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(k);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      tuples.push_back(cur);
      return;
    }
    for (int x : candidates[pos]) {
      bool ok = true;
      for (int j = 0; j < pos && ok; ++j)
        ok = g.mul(cur[j], x) == g.mul(x, cur[j]);
      if (!ok) continue;
      cur[pos] = x;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);

  std::set<std::vector<int>> canonical;
  for (const auto& t : tuples) {
    std::vector<int> best;
    for (int c = 0; c < g.order(); ++c) {
      std::vector<int> conj(k);
      for (int i = 0; i < k; ++i)
        conj[i] = g.mul(g.mul(g.inverse(c), t[i]), c);
      if (best.empty() || conj < best) best = std::move(conj);
    }
    canonical.insert(best);
  }

  HomClasses out;
  out.count = static_cast<long long>(canonical.size());
  out.representatives.assign(canonical.begin(), canonical.end());
  return out;
}

}  // namespace twistab
