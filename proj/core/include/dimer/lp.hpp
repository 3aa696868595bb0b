#pragma once

#include <gmpxx.h>

#include <vector>

namespace dimer {

using Rational = mpq_class;

// Exact linear program: maximize c.x subject to A x = b, x >= 0.
// Two-phase dense simplex with Bland's rule, so it always terminates.
struct LPResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational value;
};

LPResult lp_maximize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                     const std::vector<Rational>& c);

}  // namespace dimer
