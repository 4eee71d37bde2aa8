#include "simheur/search/moves.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace simheur::search {

using sched::JobId;
using sched::Schedule;

void apply(Schedule& schedule, const Move& move) {
  auto& seq = schedule.machine_sequences[move.machine];
  switch (move.kind) {
    case MoveKind::swap:
      std::swap(seq[move.from], seq[move.to]);
      break;
    case MoveKind::reinsert: {
      const JobId job = seq[move.from];
      seq.erase(seq.begin() + move.from);
      seq.insert(seq.begin() + move.to, job);
      break;
    }
    case MoveKind::transfer: {
      const JobId job = seq[move.from];
      seq.erase(seq.begin() + move.from);
      auto& dst = schedule.machine_sequences[move.to_machine];
      dst.insert(dst.begin() + move.to, job);
      break;
    }
  }
}

namespace {

struct Feasibility {
  std::vector<std::uint32_t> multi;     // machines with >= 2 jobs
  std::vector<std::uint32_t> nonempty;  // machines with >= 1 job
  bool transfer = false;
};

Feasibility feasibility(const Schedule& s) {
  Feasibility f;
  for (std::uint32_t m = 0; m < s.machine_sequences.size(); ++m) {
    const auto size = s.machine_sequences[m].size();
    if (size >= 2) f.multi.push_back(m);
    if (size >= 1) f.nonempty.push_back(m);
  }
  f.transfer = !f.nonempty.empty() && s.machine_sequences.size() >= 2;
  return f;
}

}  // namespace

bool random_move(const Schedule& schedule, core::RngStream& stream, Move& out) {
  const Feasibility f = feasibility(schedule);
  std::array<MoveKind, 3> kinds{};
  std::size_t nkinds = 0;
  if (!f.multi.empty()) {
    kinds[nkinds++] = MoveKind::swap;
    kinds[nkinds++] = MoveKind::reinsert;
  }
  if (f.transfer) kinds[nkinds++] = MoveKind::transfer;
  if (nkinds == 0) return false;

  out = Move{};
  out.kind = kinds[stream.below(nkinds)];
  switch (out.kind) {
    case MoveKind::swap: {
      out.machine = f.multi[stream.below(f.multi.size())];
      const auto len = schedule.machine_sequences[out.machine].size();
      const auto a = static_cast<std::uint32_t>(stream.below(len));
      auto b = static_cast<std::uint32_t>(stream.below(len - 1));
      if (b >= a) ++b;
      out.from = std::min(a, b);
      out.to = std::max(a, b);
      break;
    }
    case MoveKind::reinsert: {
      out.machine = f.multi[stream.below(f.multi.size())];
      const auto len = schedule.machine_sequences[out.machine].size();
      out.from = static_cast<std::uint32_t>(stream.below(len));
      // Target index in the sequence after removal; skip the original slot.
      auto to = static_cast<std::uint32_t>(stream.below(len - 1));
      if (to >= out.from) ++to;
      out.to = to;
      break;
    }
    case MoveKind::transfer: {
      out.machine = f.nonempty[stream.below(f.nonempty.size())];
      const auto len = schedule.machine_sequences[out.machine].size();
      out.from = static_cast<std::uint32_t>(stream.below(len));
      const auto nm = schedule.machine_sequences.size();
      auto dst = static_cast<std::uint32_t>(stream.below(nm - 1));
      if (dst >= out.machine) ++dst;
      out.to_machine = dst;
      out.to = static_cast<std::uint32_t>(
          stream.below(schedule.machine_sequences[dst].size() + 1));
      break;
    }
  }
  return true;
}

std::vector<Move> all_moves(const Schedule& schedule) {
  std::vector<Move> moves;
  const auto nm = static_cast<std::uint32_t>(schedule.machine_sequences.size());
  for (std::uint32_t m = 0; m < nm; ++m) {
    const auto len = static_cast<std::uint32_t>(schedule.machine_sequences[m].size());
    if (len >= 2) {
      for (std::uint32_t a = 0; a < len; ++a)
        for (std::uint32_t b = a + 1; b < len; ++b) moves.push_back({MoveKind::swap, m, a, 0, b});
      for (std::uint32_t from = 0; from < len; ++from)
        for (std::uint32_t to = 0; to < len; ++to)
          if (to != from) moves.push_back({MoveKind::reinsert, m, from, 0, to});
    }
    if (nm >= 2)
      for (std::uint32_t from = 0; from < len; ++from)
        for (std::uint32_t dst = 0; dst < nm; ++dst) {
          if (dst == m) continue;
          const auto dlen = static_cast<std::uint32_t>(schedule.machine_sequences[dst].size());
          for (std::uint32_t to = 0; to <= dlen; ++to)
            moves.push_back({MoveKind::transfer, m, from, dst, to});
        }
  }
  return moves;
}

Schedule neighbor(const Schedule& schedule, core::RngStream& stream) {
  Schedule out = schedule;
  Move move;
  if (random_move(schedule, stream, move)) apply(out, move);
  return out;
}

Schedule initial_solution(const sched::Instance& instance) {
  const std::size_t n = instance.num_jobs();
  std::vector<JobId> order(n);
  std::iota(order.begin(), order.end(), JobId{0});
  std::stable_sort(order.begin(), order.end(), [&](JobId a, JobId b) {
    return instance.job(a).due_date < instance.job(b).due_date;
  });

  Schedule s;
  s.machine_sequences.resize(instance.num_machines());
  std::vector<double> completion(instance.num_machines(), 0.0);
  for (JobId j : order) {
    std::size_t best_m = 0;
    double best_c = 0.0;
    for (std::size_t m = 0; m < instance.num_machines(); ++m) {
      const auto& seq = s.machine_sequences[m];
      const double setup = seq.empty() ? instance.initial_setup(j) : instance.setup_after(seq.back(), j);
      const double c = completion[m] + setup + instance.job(j).mean_duration;
      if (m == 0 || c < best_c) {
        best_m = m;
        best_c = c;
      }
    }
    s.machine_sequences[best_m].push_back(j);
    completion[best_m] = best_c;
  }
  return s;
}

}  // namespace simheur::search
