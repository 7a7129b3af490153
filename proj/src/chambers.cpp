#include "twistab/chambers.hpp"

#include <algorithm>

#include "twistab/error.hpp"
#include "twistab/lp.hpp"

namespace twistab {

namespace {

// Subsets of {0..n-1} with at least two elements, ordered by (size, value);
// downward closure of a candidate family is then checkable against earlier
// entries only.
std::vector<unsigned> subset_universe(int n) {
  std::vector<unsigned> subs;
  for (unsigned mask = 1; mask < (1u << n); ++mask)
    if (__builtin_popcount(mask) >= 2) subs.push_back(mask);
  std::sort(subs.begin(), subs.end(), [](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return subs;
}

std::vector<int> mask_to_indices(unsigned mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) out.push_back(i + 1);
  return out;
}

}  // namespace

bool Chamber::holds_at(const QVec& point) const {
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    Rat sum = 0;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        sum += point[i];
        idx.push_back(i + 1);
      }
    bool in_family =
        std::find(family.begin(), family.end(), idx) != family.end();
    if ((sum <= 1) != in_family) return false;
  }
  return true;
}

std::vector<Chamber> chambers(int n) {
  if (n < 1) fail(Errc::InvalidInput, "n must be >= 1");
  if (n > 5) fail(Errc::TooLarge, "chamber enumeration is capped at n = 5");

  auto subs = subset_universe(n);
  int k = static_cast<int>(subs.size());

  // For each subset, the positions of its sub-subsets of size >= 2 among the
  // earlier entries; inclusion of a set requires inclusion of those.
  std::vector<std::vector<int>> need(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j)
      if ((subs[j] & subs[i]) == subs[j]) need[i].push_back(j);

  std::vector<Chamber> out;
  std::vector<bool> chosen(k, false);

  // Feasibility of a candidate sign pattern: variables x_1..x_n and slack t,
  // maximize t subject to sum_I x <= 1 on the family, sum_J x >= 1 + t off
  // it, t <= x_i <= 1. Realizable iff the optimum is strictly positive.
  auto feasible = [&](Chamber& ch) {
    LinearProgram lp;
    int vars = n + 1;
    lp.objective.assign(vars, Rat(0));
    lp.objective[n] = 1;
    auto add_row = [&](const QVec& row, const Rat& b) {
      lp.rows.push_back(row);
      lp.rhs.push_back(b);
    };
    for (int i = 0; i < k; ++i) {
      QVec row(vars, Rat(0));
      for (int c = 0; c < n; ++c)
        if (subs[i] & (1u << c)) row[c] = chosen[i] ? 1 : -1;
      if (chosen[i]) {
        add_row(row, Rat(1));
      } else {
        row[n] = 1;  // t - sum_J x <= -1
        add_row(row, Rat(-1));
      }
    }
    for (int c = 0; c < n; ++c) {
      QVec row(vars, Rat(0));
      row[c] = -1;
      row[n] = 1;
      add_row(row, Rat(0));  // t <= x_c
      QVec cap(vars, Rat(0));
      cap[c] = 1;
      add_row(cap, Rat(1));  // x_c <= 1
    }
    LpResult r = solve_lp(lp);
    if (r.status != LpStatus::Optimal || r.value <= 0) return false;
    ch.witness.assign(r.x.begin(), r.x.begin() + n);
    return true;
  };

  auto emit = [&]() {
    Chamber ch;
    ch.n = n;
    for (int i = 0; i < k; ++i)
      if (chosen[i]) ch.family.push_back(mask_to_indices(subs[i], n));
    std::sort(ch.family.begin(), ch.family.end());
    if (feasible(ch)) out.push_back(std::move(ch));
  };

  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      emit();
      return;
    }
    chosen[pos] = false;
    self(self, pos + 1);
    bool closed = true;
    for (int j : need[pos])
      if (!chosen[j]) { closed = false; break; }
    if (closed) {
      chosen[pos] = true;
      self(self, pos + 1);
      chosen[pos] = false;
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(),
            [](const Chamber& a, const Chamber& b) { return a.family < b.family; });
  return out;
}

bool same_chamber(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size())
    fail(Errc::LengthMismatch, "weight vectors differ in length");
  int n = a.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    Rat sa = 0, sb = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        sa += a[i];
        sb += b[i];
      }
    if ((sa <= 1) != (sb <= 1)) return false;
  }
  return true;
}

}  // namespace twistab
