#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "simheur/core/rng.hpp"
#include "simheur/sched/instance.hpp"
#include "simheur/sched/schedule.hpp"

namespace simheur::search {

enum class MoveKind : std::uint8_t {
  swap,      // exchange two positions on one machine
  reinsert,  // remove a job and reinsert it elsewhere on the same machine
  transfer,  // move a job to some position on another machine
};

struct Move {
  MoveKind kind = MoveKind::swap;
  std::uint32_t machine = 0;
  std::uint32_t from = 0;
  std::uint32_t to_machine = 0;
  std::uint32_t to = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Applies `move` in place. The move must have been produced for `schedule`.
void apply(sched::Schedule& schedule, const Move& move);

/// Draws one move: first a move kind uniformly among the kinds feasible for
/// this schedule, then its parameters uniformly. Returns false when no
/// nontrivial move exists (one job on one machine).
bool random_move(const sched::Schedule& schedule, core::RngStream& stream, Move& out);

/// Every move random_move() can return with positive probability.
std::vector<Move> all_moves(const sched::Schedule& schedule);

/// A copy of `schedule` with one random move applied; equal to the input
/// only when no nontrivial move exists.
sched::Schedule neighbor(const sched::Schedule& schedule, core::RngStream& stream);

/// Earliest-due-date order, each job appended to the machine where it would
/// complete first (setup included, mean durations). Ties go to the lower
/// machine index.
sched::Schedule initial_solution(const sched::Instance& instance);

}  // namespace simheur::search
