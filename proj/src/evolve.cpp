#include "hamuni/evolve.hpp"

#include <cmath>
#include <stdexcept>

namespace hamuni {

Matrix sequence_unitary(const GateSequence& seq, const std::map<std::string, Hermitian>& generators) {
  int dim = 0;
  for (const auto& [id, h] : generators) {
    dim = h.dim();
    break;
  }
  if (seq.steps.empty() && dim == 0)
    throw std::invalid_argument("sequence_unitary: no generators to infer the dimension from");
  Matrix u = Matrix::identity(dim);
  for (const auto& step : seq.steps) {
    const auto it = generators.find(step.generator_id);
    if (it == generators.end())
      throw std::invalid_argument("sequence_unitary: unknown generator id '" + step.generator_id + "'");
    if (!(step.duration > 0.0))
      throw std::invalid_argument("sequence_unitary: durations must be strictly positive");
    u = u * expm_i(it->second, step.duration);
  }
  return u;
}

std::optional<double> positive_time_replacement(const Hermitian& h, double tau, double epsilon,
                                                double t_max) {
  if (!(tau < 0.0)) throw std::invalid_argument("positive_time_replacement: tau must be negative");
  if (!(epsilon > 0.0)) throw std::invalid_argument("positive_time_replacement: epsilon must be positive");
  if (!(t_max > 0.0)) throw std::invalid_argument("positive_time_replacement: t_max must be positive");

  const auto eig = eig_hermitian(h);
  // Smallest integer with n + tau > 0.
  const long long n_min = static_cast<long long>(std::floor(-tau)) + 1;
  const long long n_max = static_cast<long long>(std::floor(t_max - tau));
  for (long long n = n_min; n <= n_max; ++n) {
    double err = 0.0;
    for (const double lam : eig.values)
      err = std::max(err, 2.0 * std::abs(std::sin(0.5 * lam * static_cast<double>(n))));
    if (err < epsilon) return static_cast<double>(n) + tau;
  }
  return std::nullopt;
}

}  // namespace hamuni
