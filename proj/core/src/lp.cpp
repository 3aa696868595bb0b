#include "dimer/lp.hpp"

#include <stdexcept>

namespace dimer {

namespace {

struct Tableau {
  std::vector<std::vector<Rational>> T;  // m rows of n coefficients
  std::vector<Rational> rhs;
  std::vector<int> basis;
  std::vector<Rational> d;  // reduced costs
  Rational value;

  void pivot(int r, int s) {
    const int m = static_cast<int>(T.size()), n = static_cast<int>(d.size());
    Rational p = T[r][s];
    for (int j = 0; j < n; ++j) T[r][j] /= p;
    rhs[r] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r || sgn(T[i][s]) == 0) continue;
      Rational f = T[i][s];
      for (int j = 0; j < n; ++j)
        if (sgn(T[r][j]) != 0) T[i][j] -= f * T[r][j];
      rhs[i] -= f * rhs[r];
    }
    if (sgn(d[s]) != 0) {
      Rational f = d[s];
      for (int j = 0; j < n; ++j)
        if (sgn(T[r][j]) != 0) d[j] -= f * T[r][j];
      value += f * rhs[r];
    }
    basis[r] = s;
  }

  void set_objective(const std::vector<Rational>& c) {
    d = c;
    value = 0;
    for (std::size_t i = 0; i < T.size(); ++i) {
      const Rational& cb = c[basis[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < d.size(); ++j) d[j] -= cb * T[i][j];
      value += cb * rhs[i];
    }
  }

  // Returns false when unbounded.
  bool optimize(int usable_cols) {
    while (true) {
      int s = -1;
      for (int j = 0; j < usable_cols; ++j)
        if (sgn(d[j]) > 0) { s = j; break; }
      if (s < 0) return true;
      int r = -1;
      Rational best;
      for (std::size_t i = 0; i < T.size(); ++i) {
        if (sgn(T[i][s]) <= 0) continue;
        Rational ratio = rhs[i] / T[i][s];
        if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r])) {
          r = static_cast<int>(i);
          best = ratio;
        }
      }
      if (r < 0) return false;
      pivot(r, s);
    }
  }
};

}  // namespace

LPResult lp_maximize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                     const std::vector<Rational>& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("lp: row count mismatch");
  Tableau tb;
  tb.T.assign(m, std::vector<Rational>(n + m));
  tb.rhs.resize(m);
  tb.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(A[i].size()) != n) throw std::invalid_argument("lp: column count mismatch");
    const bool neg = sgn(b[i]) < 0;
    for (int j = 0; j < n; ++j) tb.T[i][j] = neg ? Rational(-A[i][j]) : A[i][j];
    tb.rhs[i] = neg ? Rational(-b[i]) : b[i];
    tb.T[i][n + i] = 1;
    tb.basis[i] = n + i;
  }
  // Phase 1: maximize minus the sum of artificials.
  std::vector<Rational> c1(n + m, 0);
  for (int i = 0; i < m; ++i) c1[n + i] = -1;
  tb.set_objective(c1);
  tb.optimize(n + m);
  LPResult res;
  if (sgn(tb.value) != 0) {
    res.status = LPResult::Status::Infeasible;
    return res;
  }
  // Drive artificials out of the basis; drop redundant rows.
  for (int i = 0; i < static_cast<int>(tb.T.size());) {
    if (tb.basis[i] < n) { ++i; continue; }
    int s = -1;
    for (int j = 0; j < n; ++j)
      if (sgn(tb.T[i][j]) != 0) { s = j; break; }
    if (s >= 0) {
      tb.pivot(i, s);
      ++i;
    } else {
      tb.T.erase(tb.T.begin() + i);
      tb.rhs.erase(tb.rhs.begin() + i);
      tb.basis.erase(tb.basis.begin() + i);
    }
  }
  std::vector<Rational> c2(n + m, 0);
  for (int j = 0; j < n; ++j) c2[j] = c[j];
  tb.set_objective(c2);
  if (!tb.optimize(n)) {
    res.status = LPResult::Status::Unbounded;
    return res;
  }
  res.status = LPResult::Status::Optimal;
  res.x.assign(n, 0);
  for (std::size_t i = 0; i < tb.T.size(); ++i)
    if (tb.basis[i] < n) res.x[tb.basis[i]] = tb.rhs[i];
  res.value = tb.value;
  return res;
}

}  // namespace dimer
