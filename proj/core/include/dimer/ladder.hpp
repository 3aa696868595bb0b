#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimer/fans.hpp"
#include "dimer/torus_graph.hpp"

namespace dimer {

// Which R-symmetry grades the algebra rungs.
//   Matchings: sum of all perfect matchings.
//   Extremal:  sum of the extremal matchings P(sigma); needs geometric consistency.
enum class Grading { Matchings, Extremal };

struct LadderOptions {
  long max_degree = 4;
  Grading grading = Grading::Matchings;
};

enum class RungStatus { Pass, Fail, Skip };
const char* status_name(RungStatus s);

struct Rung {
  std::string name;
  RungStatus status = RungStatus::Skip;
  std::string witness;
};

struct LadderReport {
  std::vector<Rung> rungs;
  bool input_error = false;
  const Rung* find(const std::string& prefix) const;
  // 0 all pass, 1 some rung failed, 2 the input is not a dimer model.
  int exit_code() const;
};

// Rung order: load, euler, hall, nondegeneracy, R-symmetry, anomaly-free,
// geometric, properly-ordered, algebraic(D), cy3(D).
LadderReport run_ladder(const std::string& dimer_text, const LadderOptions& opts = {});
LadderReport run_ladder(const TorusGraph& g, const LadderOptions& opts = {});

// Integral grading for the algebra rungs. Empty when unavailable, with the
// reason in *why.
std::vector<long> grading_weights(const TorusGraph& g, const Quiver& q,
                                  const std::vector<PerfectMatching>& matchings, Grading grading,
                                  std::string* why = nullptr);

}  // namespace dimer
