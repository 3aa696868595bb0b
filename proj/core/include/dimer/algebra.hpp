#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dimer/matchings.hpp"
#include "dimer/quiver.hpp"

namespace dimer {

// Coordinates of an element of M: endpoints, homology and <pi0, .>.
struct PathClass {
  int tail = -1;
  int head = -1;
  Vec2 hom;
  long deg = 0;
  bool operator==(const PathClass&) const = default;
  auto operator<=>(const PathClass&) const = default;
};

std::string to_string(const PathClass& m);

struct GradedPiece {
  int i = -1, j = -1;
  long degree = 0;
  std::vector<PathClass> basis;  // sorted
};

struct PieceReport {
  int i = -1, j = -1;
  long degree = 0;
  int lattice_points = 0;
  int path_classes = 0;     // distinct classes hit by paths
  int closure_classes = 0;  // F-term classes of paths = dim e_i A e_j
  bool surjective = true;
  bool injective = true;
};

struct AlgebraicCounterexample {
  enum class Kind { Surjectivity, Injectivity };
  Kind kind = Kind::Surjectivity;
  int i = -1, j = -1;
  long degree = 0;
  PathClass cls;
  Path p, q;  // injectivity: two paths of one class in different closures
  std::string describe() const;
};

struct AlgebraicVerdict {
  bool ok = true;
  long max_degree = 0;
  std::vector<PieceReport> pieces;
  std::vector<AlgebraicCounterexample> counterexamples;  // in (i, j, d) order
};

struct Cy3PieceReport {
  int j = -1;
  long degree = 0;
  int dim_t1 = 0, dim_t2 = 0, dim_t3 = 0;
  long rank_mu2 = 0, rank_mu3 = 0;
  bool composite_zero = true;
  bool exact_t2 = true;  // ker mu2 = im mu3
  bool exact_t3 = true;  // mu3 injective
  bool ok() const { return composite_zero && exact_t2 && exact_t3; }
};

struct Cy3Verdict {
  bool refused = false;  // algebraic consistency not established up to D
  bool ok = false;
  long max_degree = 0;
  std::vector<Cy3PieceReport> pieces;
};

// Toric data of a dimer model under a fixed integral R-symmetry: the lattice
// M with its positive cone M+ (dual to the matchings), the base paths that
// anchor M_ij coordinates, and the superpotential algebra via F-term rewriting.
class ToricAlgebra {
 public:
  // r must be strictly positive with constant face sums.
  ToricAlgebra(Quiver q, std::vector<PerfectMatching> matchings, std::vector<long> r);

  const Quiver& quiver() const { return q_; }
  const std::vector<PerfectMatching>& matchings() const { return matchings_; }
  const std::vector<long>& r() const { return r_; }
  long lambda() const { return lambda_; }
  const Path& base_path(int i, int j) const { return beta_[i][j]; }

  // `start` is only needed for the empty path.
  PathClass path_class(const Path& p, int start = -1) const;
  PathClass box(int i) const { return {i, i, {0, 0}, 1}; }
  // Product of composable classes (a then b).
  PathClass compose(const PathClass& a, const PathClass& b) const;

  long pm_eval(int matching, const PathClass& m) const;
  long r_degree(const PathClass& m) const;
  bool in_M_plus(const PathClass& m) const;

  std::vector<GradedPiece> lattice_points(int i, int j, long max_degree) const;

  // All paths F-term equivalent to p, sorted.
  std::set<Path> fterm_closure(const Path& p) const;

  // Every path starting at i with R-degree <= max_degree.
  std::vector<Path> paths_from(int i, long max_degree) const;

  AlgebraicVerdict algebraic_consistency(long max_degree) const;
  Cy3Verdict cy3_check(long max_degree) const;
  std::vector<PathClass> center_generators(long max_degree) const;

  // Path from i to j with offset sum `hom` using only arrows where
  // `forbidden` is 0, searched over translations with |t|_inf <= window.
  std::optional<Path> avoid_path(int i, int j, Vec2 hom, const std::vector<int>& forbidden,
                                 long window) const;

 private:
  Quiver q_;
  std::vector<PerfectMatching> matchings_;
  std::vector<long> r_;
  long lambda_ = 0;
  Vec2 r_class_;  // class of R - lambda * pi0
  std::vector<std::vector<Path>> beta_;
  std::vector<std::vector<PathClass>> beta_cls_;
  std::vector<std::vector<long>> beta_r_;
  // mu_[i][j][c]: least <pi, beta_ij> over matchings of class c.
  std::vector<std::vector<std::map<Vec2, long>>> mu_;
  std::vector<std::vector<std::vector<long>>> beta_eval_;  // [pi][i][j]
  std::vector<FTermRelation> relations_;
};

// Rank of an integer matrix by fraction-free elimination.
long exact_rank(const std::vector<std::vector<long>>& rows, int num_cols);

}  // namespace dimer
