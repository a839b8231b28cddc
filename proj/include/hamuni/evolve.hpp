#pragma once

#include <map>
#include <optional>
#include <string>

#include "hamuni/linalg.hpp"

namespace hamuni {

struct GateStep {
  std::string generator_id;
  double duration = 0.0;  // strictly positive
};

struct GateSequence {
  std::vector<GateStep> steps;
  double achieved_error = 0.0;  // operator-norm distance to the target
};

/// Ordered product e^{iH_1 t_1} e^{iH_2 t_2} ... resolving generator ids.
/// Throws on unknown ids or non-positive durations.
Matrix sequence_unitary(const GateSequence& seq, const std::map<std::string, Hermitian>& generators);

/// Replaces a negative evolution time tau by a positive one: scans integers
/// n > |tau| for max_k |1 - e^{i lambda_k n}| < epsilon (the operator norm of
/// I - e^{iHn} through the eigenphases) and returns t = n + tau on success.
/// The scan stops once t would exceed t_max; near-recurrences always exist
/// but can sit beyond any fixed budget, hence the optional result.
std::optional<double> positive_time_replacement(const Hermitian& h, double tau, double epsilon,
                                                double t_max);

}  // namespace hamuni
