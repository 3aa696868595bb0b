#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimer/lp.hpp"
#include "dimer/matchings.hpp"
#include "dimer/quiver.hpp"

namespace dimer {

// Arrow weights whose coboundary is constant: every face sums to `degree`.
struct WeightFunction {
  std::vector<Rational> weights;
  Rational degree;

  bool strictly_positive() const;
  bool below_one() const;
  // Integral multiple obtained by clearing denominators.
  std::vector<long> integral() const;
  long integral_degree() const;
  WeightFunction scaled(const Rational& k) const;
  std::string to_string() const;
};

bool euler_check(const Quiver& q);

// Face equations: each face sums to R.degree.
bool is_weight_function(const Quiver& q, const WeightFunction& r);
// Vertex equations: sum over H_v and T_v (multisets) equals degree * (|H_v| - 1).
bool is_anomaly_free(const Quiver& q, const WeightFunction& r);

// Sum of all matchings; throws PreconditionError if some arrow gets weight 0.
WeightFunction default_r_symmetry(const std::vector<PerfectMatching>& matchings, int num_arrows);

// Anomaly-free R of degree 2 maximizing the least weight; nullopt if none is strictly positive.
std::optional<WeightFunction> find_anomaly_free(const Quiver& q);
// Same with all weights in (0,1); maximizes min(R_a, 1 - R_a).
std::optional<WeightFunction> find_rhombic(const Quiver& q);

}  // namespace dimer
