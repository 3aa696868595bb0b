#include "dimer/algebra.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "dimer/errors.hpp"
#include "dimer/lp.hpp"

namespace dimer {

std::string to_string(const PathClass& m) {
  std::ostringstream os;
  os << m.tail << "->" << m.head << " hom" << m.hom << " deg " << m.deg;
  return os.str();
}

std::string AlgebraicCounterexample::describe() const {
  std::ostringstream os;
  if (kind == Kind::Surjectivity) {
    os << "surjectivity: no path realizes " << to_string(cls) << " at R-degree " << degree;
  } else {
    os << "injectivity: paths [" << path_string(p) << "] and [" << path_string(q)
       << "] share class " << to_string(cls) << " but are not F-term equivalent";
  }
  return os.str();
}

ToricAlgebra::ToricAlgebra(Quiver q, std::vector<PerfectMatching> matchings, std::vector<long> r)
    : q_(std::move(q)), matchings_(std::move(matchings)), r_(std::move(r)) {
  const int na = q_.num_arrows(), nv = q_.num_vertices;
  if (matchings_.empty()) throw PreconditionError("algebra: no perfect matchings");
  if (static_cast<int>(r_.size()) != na) throw PreconditionError("algebra: weight vector size mismatch");
  for (long w : r_)
    if (w <= 0) throw PreconditionError("algebra: R-symmetry must be strictly positive");
  lambda_ = 0;
  for (int a : q_.faces[0].boundary) lambda_ += r_[a];
  for (const auto& f : q_.faces) {
    long s = 0;
    for (int a : f.boundary) s += r_[a];
    if (s != lambda_) throw PreconditionError("algebra: weights are not an R-symmetry");
  }
  const auto pi0 = matchings_.front().indicator(na);
  for (int a = 0; a < na; ++a) {
    long w = r_[a] - lambda_ * pi0[a];
    r_class_ += Vec2{w * q_.gamma_x[a], w * q_.gamma_y[a]};
  }
  relations_ = fterm_relations(q_);

  // Shortest base paths by breadth-first search, arrows in id order.
  std::vector<std::vector<int>> out(nv);
  for (int a = 0; a < na; ++a) out[q_.tail(a)].push_back(a);
  beta_.assign(nv, std::vector<Path>(nv));
  for (int i = 0; i < nv; ++i) {
    std::vector<int> via(nv, -1);
    std::vector<char> seen(nv, 0);
    std::queue<int> bfs;
    bfs.push(i);
    seen[i] = 1;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int a : out[v]) {
        int w = q_.head(a);
        if (seen[w]) continue;
        seen[w] = 1;
        via[w] = a;
        bfs.push(w);
      }
    }
    for (int j = 0; j < nv; ++j) {
      if (!seen[j]) throw std::logic_error("quiver is not strongly connected");
      Path p;
      for (int v = j; v != i; v = q_.tail(via[v])) p.push_back(via[v]);
      std::reverse(p.begin(), p.end());
      beta_[i][j] = p;
    }
  }
  beta_cls_.assign(nv, std::vector<PathClass>(nv));
  beta_r_.assign(nv, std::vector<long>(nv, 0));
  beta_eval_.assign(matchings_.size(), std::vector<std::vector<long>>(nv, std::vector<long>(nv, 0)));
  mu_.assign(nv, std::vector<std::map<Vec2, long>>(nv));
  std::vector<std::vector<int>> ind;
  for (const auto& m : matchings_) ind.push_back(m.indicator(na));
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j) {
      const Path& b = beta_[i][j];
      PathClass c{i, j, q_.path_offset(b), 0};
      for (int a : b) {
        c.deg += pi0[a];
        beta_r_[i][j] += r_[a];
      }
      beta_cls_[i][j] = c;
      for (std::size_t k = 0; k < matchings_.size(); ++k) {
        long e = 0;
        for (int a : b) e += ind[k][a];
        beta_eval_[k][i][j] = e;
        auto [it, fresh] = mu_[i][j].emplace(matchings_[k].cls, e);
        if (!fresh) it->second = std::min(it->second, e);
      }
    }
  }
}

PathClass ToricAlgebra::path_class(const Path& p, int start) const {
  if (p.empty()) {
    if (start < 0) throw PreconditionError("path_class: empty path needs a start vertex");
    return {start, start, {0, 0}, 0};
  }
  if (!q_.composable(p)) throw PreconditionError("path_class: arrows do not compose");
  const auto& pi0 = matchings_.front().edges;
  PathClass c{q_.tail(p.front()), q_.head(p.back()), q_.path_offset(p), 0};
  for (int a : p)
    if (std::binary_search(pi0.begin(), pi0.end(), a)) ++c.deg;
  return c;
}

PathClass ToricAlgebra::compose(const PathClass& a, const PathClass& b) const {
  if (a.head != b.tail) throw PreconditionError("compose: classes do not compose");
  return {a.tail, b.head, a.hom + b.hom, a.deg + b.deg};
}

long ToricAlgebra::pm_eval(int k, const PathClass& m) const {
  const PathClass& b = beta_cls_[m.tail][m.head];
  return beta_eval_[k][m.tail][m.head] + (m.deg - b.deg) + dot(matchings_[k].cls, m.hom - b.hom);
}

long ToricAlgebra::r_degree(const PathClass& m) const {
  const PathClass& b = beta_cls_[m.tail][m.head];
  return beta_r_[m.tail][m.head] + lambda_ * (m.deg - b.deg) + dot(r_class_, m.hom - b.hom);
}

bool ToricAlgebra::in_M_plus(const PathClass& m) const {
  const PathClass& b = beta_cls_[m.tail][m.head];
  const Vec2 k = m.hom - b.hom;
  const long delta = m.deg - b.deg;
  for (const auto& [c, mu] : mu_[m.tail][m.head])
    if (mu + delta + dot(c, k) < 0) return false;
  return true;
}

std::vector<GradedPiece> ToricAlgebra::lattice_points(int i, int j, long D) const {
  std::vector<GradedPiece> pieces;
  for (long d = 0; d <= D; ++d) pieces.push_back({i, j, d, {}});
  const PathClass& b = beta_cls_[i][j];
  const long rb = beta_r_[i][j];
  // Constraints n_c . k >= rhs_c on the homology shift k, valid for every d <= D.
  struct Half { Vec2 n; long rhs; };
  std::vector<Half> hs;
  for (const auto& [c, mu] : mu_[i][j])
    hs.push_back({c * lambda_ - r_class_, rb - D - lambda_ * mu});
  // Bounding box from the vertices of the constraint polygon.
  Rational lo_x, hi_x, lo_y, hi_y;
  bool any = false;
  for (std::size_t s = 0; s < hs.size(); ++s) {
    for (std::size_t t = s + 1; t < hs.size(); ++t) {
      long det = cross(hs[s].n, hs[t].n);
      if (det == 0) continue;
      // Solve n_s . k = rhs_s, n_t . k = rhs_t.
      Rational x(hs[s].rhs * hs[t].n.y - hs[t].rhs * hs[s].n.y, det);
      Rational y(hs[s].n.x * hs[t].rhs - hs[t].n.x * hs[s].rhs, det);
      x.canonicalize();
      y.canonicalize();
      bool feasible = true;
      for (const auto& h : hs)
        if (h.n.x * x + h.n.y * y < h.rhs) { feasible = false; break; }
      if (!feasible) continue;
      if (!any) {
        lo_x = hi_x = x;
        lo_y = hi_y = y;
        any = true;
      } else {
        lo_x = std::min(lo_x, x); hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y); hi_y = std::max(hi_y, y);
      }
    }
  }
  if (!any) {
    // Empty, or a region without vertices (unbounded); the latter cannot
    // happen for a strictly positive R with a two-dimensional polygon.
    if (hs.size() >= 1) {
      bool origin_ok = true;
      for (const auto& h : hs)
        if (h.rhs > 0) origin_ok = false;
      if (origin_ok) throw PreconditionError("lattice region is unbounded");
    }
    return pieces;
  }
  auto floor_q = [](const Rational& v) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return f.get_si();
  };
  auto ceil_q = [](const Rational& v) {
    mpz_class f;
    mpz_cdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return f.get_si();
  };
  for (long kx = ceil_q(lo_x); kx <= floor_q(hi_x); ++kx) {
    for (long ky = ceil_q(lo_y); ky <= floor_q(hi_y); ++ky) {
      const Vec2 k{kx, ky};
      for (long d = 0; d <= D; ++d) {
        long num = d - rb - dot(r_class_, k);
        if (floor_mod(num, lambda_) != 0) continue;
        PathClass m{i, j, b.hom + k, b.deg + num / lambda_};
        if (in_M_plus(m)) pieces[d].basis.push_back(m);
      }
    }
  }
  for (auto& p : pieces) std::sort(p.basis.begin(), p.basis.end());
  return pieces;
}

std::set<Path> ToricAlgebra::fterm_closure(const Path& p) const {
  std::set<Path> seen{p};
  std::queue<Path> work;
  work.push(p);
  auto matches = [](const Path& s, std::size_t at, const Path& pat) {
    if (at + pat.size() > s.size()) return false;
    return std::equal(pat.begin(), pat.end(), s.begin() + at);
  };
  while (!work.empty()) {
    Path cur = work.front();
    work.pop();
    for (const auto& rel : relations_) {
      for (int dir = 0; dir < 2; ++dir) {
        const Path& from = dir == 0 ? rel.plus : rel.minus;
        const Path& to = dir == 0 ? rel.minus : rel.plus;
        if (from.empty()) continue;
        for (std::size_t s = 0; s + from.size() <= cur.size(); ++s) {
          if (!matches(cur, s, from)) continue;
          Path next(cur.begin(), cur.begin() + s);
          next.insert(next.end(), to.begin(), to.end());
          next.insert(next.end(), cur.begin() + s + from.size(), cur.end());
          if (seen.insert(next).second) work.push(std::move(next));
        }
      }
    }
  }
  return seen;
}

std::vector<Path> ToricAlgebra::paths_from(int i, long D) const {
  std::vector<std::vector<int>> out(q_.num_vertices);
  for (int a = 0; a < q_.num_arrows(); ++a) out[q_.tail(a)].push_back(a);
  std::vector<Path> result;
  Path cur;
  std::function<void(int, long)> rec = [&](int v, long budget) {
    result.push_back(cur);
    for (int a : out[v]) {
      if (r_[a] > budget) continue;
      cur.push_back(a);
      rec(q_.head(a), budget - r_[a]);
      cur.pop_back();
    }
  };
  rec(i, D);
  return result;
}

AlgebraicVerdict ToricAlgebra::algebraic_consistency(long D) const {
  AlgebraicVerdict v;
  v.max_degree = D;
  const int nv = q_.num_vertices;
  for (int i = 0; i < nv; ++i) {
    std::map<PathClass, std::vector<Path>> groups;
    for (auto& p : paths_from(i, D)) groups[path_class(p, i)].push_back(std::move(p));
    for (int j = 0; j < nv; ++j) {
      auto pieces = lattice_points(i, j, D);
      for (long d = 0; d <= D; ++d) {
        PieceReport rep{i, j, d};
        const auto& basis = pieces[d].basis;
        rep.lattice_points = static_cast<int>(basis.size());
        for (const auto& m : basis) {
          auto it = groups.find(m);
          if (it == groups.end()) {
            rep.surjective = false;
            AlgebraicCounterexample cx;
            cx.kind = AlgebraicCounterexample::Kind::Surjectivity;
            cx.i = i; cx.j = j; cx.degree = d; cx.cls = m;
            v.counterexamples.push_back(cx);
          }
        }
        for (const auto& [cls, paths] : groups) {
          if (cls.head != j || r_degree(cls) != d) continue;
          if (!std::binary_search(basis.begin(), basis.end(), cls))
            throw std::logic_error("path class outside M+: " + to_string(cls));
          ++rep.path_classes;
          std::set<Path> remaining(paths.begin(), paths.end());
          const Path first = paths.front();
          while (!remaining.empty()) {
            const Path seed = *remaining.begin();
            auto closure = fterm_closure(seed);
            for (const auto& c : closure) {
              if (path_class(c, i) != cls) throw std::logic_error("F-term move changed a path class");
              remaining.erase(c);
            }
            ++rep.closure_classes;
            if (!closure.count(first)) {
              rep.injective = false;
              AlgebraicCounterexample cx;
              cx.kind = AlgebraicCounterexample::Kind::Injectivity;
              cx.i = i; cx.j = j; cx.degree = d; cx.cls = cls;
              cx.p = first;
              cx.q = seed;
              v.counterexamples.push_back(cx);
            }
          }
        }
        if (!rep.surjective || !rep.injective) v.ok = false;
        v.pieces.push_back(rep);
      }
    }
  }
  std::stable_sort(v.counterexamples.begin(), v.counterexamples.end(), [](const auto& a, const auto& b) {
    return std::tie(a.i, a.j, a.degree) < std::tie(b.i, b.j, b.degree);
  });
  return v;
}

long exact_rank(const std::vector<std::vector<long>>& rows, int num_cols) {
  std::vector<std::vector<mpz_class>> m;
  for (const auto& r : rows) {
    std::vector<mpz_class> row(num_cols);
    for (int c = 0; c < num_cols; ++c) row[c] = r[c];
    m.push_back(std::move(row));
  }
  const int nr = static_cast<int>(m.size());
  long rank = 0;
  mpz_class prev = 1;
  for (int c = 0; c < num_cols && rank < nr; ++c) {
    int piv = -1;
    for (int r = static_cast<int>(rank); r < nr; ++r)
      if (sgn(m[r][c]) != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    // Bareiss step: entries stay integral and divisions are exact.
    for (int r = static_cast<int>(rank) + 1; r < nr; ++r) {
      for (int k = c + 1; k < num_cols; ++k) {
        m[r][k] = m[rank][c] * m[r][k] - m[r][c] * m[rank][k];
        mpz_divexact(m[r][k].get_mpz_t(), m[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

Cy3Verdict ToricAlgebra::cy3_check(long D) const {
  Cy3Verdict v;
  v.max_degree = D;
  if (!algebraic_consistency(D).ok) {
    v.refused = true;
    return v;
  }
  const int nv = q_.num_vertices, na = q_.num_arrows();
  std::vector<std::vector<std::vector<GradedPiece>>> lp(nv, std::vector<std::vector<GradedPiece>>(nv));
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) lp[i][j] = lattice_points(i, j, D);
  auto piece = [&](int i, int j, long d) -> const std::vector<PathClass>& {
    static const std::vector<PathClass> empty;
    if (d < 0 || d > D) return empty;
    return lp[i][j][d].basis;
  };
  using Key = std::pair<int, PathClass>;
  v.ok = true;
  for (int j = 0; j < nv; ++j) {
    for (long d = 0; d <= D; ++d) {
      std::map<Key, int> t1, t2, t3;
      for (int b = 0; b < na; ++b)
        for (const auto& y : piece(q_.head(b), j, d - r_[b])) t1.emplace(Key{b, y}, t1.size());
      for (int a = 0; a < na; ++a)
        for (const auto& y : piece(q_.tail(a), j, d - (lambda_ - r_[a]))) t2.emplace(Key{a, y}, t2.size());
      for (int u = 0; u < nv; ++u)
        for (const auto& y : piece(u, j, d - lambda_)) t3.emplace(Key{u, y}, t3.size());
      Cy3PieceReport rep;
      rep.j = j;
      rep.degree = d;
      rep.dim_t1 = static_cast<int>(t1.size());
      rep.dim_t2 = static_cast<int>(t2.size());
      rep.dim_t3 = static_cast<int>(t3.size());
      std::vector<std::vector<long>> mu2(t1.size(), std::vector<long>(t2.size(), 0));
      std::vector<std::vector<long>> mu3(t2.size(), std::vector<long>(t3.size(), 0));
      auto lookup = [](const std::map<Key, int>& idx, const Key& k) {
        auto it = idx.find(k);
        if (it == idx.end()) throw std::logic_error("cy3: image outside the graded basis");
        return it->second;
      };
      for (const auto& [key, col] : t2) {
        const auto& [a, y] = key;
        const auto& rel = relations_[a];
        for (int sgn_ = 1, pass = 0; pass < 2; ++pass, sgn_ = -1) {
          const Path& p = pass == 0 ? rel.plus : rel.minus;
          const int b = p.front();
          Path rest(p.begin() + 1, p.end());
          PathClass m = compose(path_class(rest, q_.head(b)), y);
          mu2[lookup(t1, {b, m})][col] += sgn_;
        }
      }
      for (const auto& [key, col] : t3) {
        const auto& [u, y] = key;
        for (int b = 0; b < na; ++b) {
          if (q_.head(b) != u) continue;
          PathClass m = compose(path_class({b}), y);
          mu3[lookup(t2, {b, m})][col] -= 1;
        }
      }
      for (std::size_t r = 0; r < t1.size() && rep.composite_zero; ++r)
        for (std::size_t c = 0; c < t3.size() && rep.composite_zero; ++c) {
          long s = 0;
          for (std::size_t k = 0; k < t2.size(); ++k) s += mu2[r][k] * mu3[k][c];
          if (s != 0) rep.composite_zero = false;
        }
      rep.rank_mu2 = exact_rank(mu2, rep.dim_t2);
      rep.rank_mu3 = exact_rank(mu3, rep.dim_t3);
      rep.exact_t2 = rep.rank_mu2 + rep.rank_mu3 == rep.dim_t2;
      rep.exact_t3 = rep.rank_mu3 == rep.dim_t3;
      if (!rep.ok()) v.ok = false;
      v.pieces.push_back(rep);
    }
  }
  return v;
}

std::vector<PathClass> ToricAlgebra::center_generators(long D) const {
  auto pieces = lattice_points(0, 0, D);
  std::vector<PathClass> all;
  for (long d = 1; d <= D; ++d) all.insert(all.end(), pieces[d].basis.begin(), pieces[d].basis.end());
  std::vector<PathClass> gens;
  for (const auto& m : all) {
    const long dm = r_degree(m);
    bool decomposable = false;
    for (const auto& m1 : all) {
      if (r_degree(m1) >= dm) continue;
      PathClass diff{0, 0, m.hom - m1.hom, m.deg - m1.deg};
      if (in_M_plus(diff)) { decomposable = true; break; }
    }
    if (!decomposable) gens.push_back(m);
  }
  return gens;
}

std::optional<Path> ToricAlgebra::avoid_path(int i, int j, Vec2 hom, const std::vector<int>& forbidden,
                                             long window) const {
  if (std::max(std::labs(hom.x), std::labs(hom.y)) > window) return std::nullopt;
  using State = std::pair<int, Vec2>;
  std::map<State, std::pair<State, int>> from;
  std::queue<State> bfs;
  const State start{i, {0, 0}}, goal{j, hom};
  from.emplace(start, std::make_pair(start, -1));
  bfs.push(start);
  std::vector<std::vector<int>> out(q_.num_vertices);
  for (int a = 0; a < q_.num_arrows(); ++a)
    if (!forbidden[a]) out[q_.tail(a)].push_back(a);
  while (!bfs.empty()) {
    State s = bfs.front();
    bfs.pop();
    if (s == goal) {
      Path p;
      for (State c = s; c != start; c = from.at(c).first) p.push_back(from.at(c).second);
      std::reverse(p.begin(), p.end());
      return p;
    }
    for (int a : out[s.first]) {
      Vec2 t = s.second + q_.offset(a);
      if (std::max(std::labs(t.x), std::labs(t.y)) > window) continue;
      State n{q_.head(a), t};
      if (from.emplace(n, std::make_pair(s, a)).second) bfs.push(n);
    }
  }
  return std::nullopt;
}

}  // namespace dimer
