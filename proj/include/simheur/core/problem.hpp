#pragma once

#include <cstddef>
#include <span>

#include "simheur/core/rng.hpp"

namespace simheur::core {

/// A stochastic combinatorial optimization problem min E[f(X, s)] over
/// solutions s, together with its deterministic surrogate f(E[X], s).
///
/// Implementations must be safe to call concurrently from several threads as
/// long as every caller holds its own stream.
template <class Solution>
class Problem {
 public:
  virtual ~Problem() = default;

  /// f(E[X], s). Pure.
  virtual double deterministic_objective(const Solution& solution) const = 0;

  /// One realization of f(X, s) driven by `stream`.
  virtual double simulate(const Solution& solution, RngStream stream) const = 0;

  /// out[k] = simulate(solution, streams[k]). Override to batch the work.
  virtual void simulate_batch(const Solution& solution, std::span<const RngStream> streams,
                              std::span<double> out) const {
    for (std::size_t k = 0; k < streams.size(); ++k) out[k] = simulate(solution, streams[k]);
  }
};

}  // namespace simheur::core
