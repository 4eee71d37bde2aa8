#pragma once

#include <vector>

#include "simheur/sched/instance.hpp"
#include "simheur/sched/schedule.hpp"

namespace simheur::testing {

// One machine, A (mean 3, due 5) and B (mean 4, due 6); idle->A = idle->B = 0,
// A->B = B->A = 1; w_T = 1, w_M = 0.1.
inline sched::Instance two_job_instance(double cv = 0.0) {
  std::vector<sched::Job> jobs{{0, 3.0, cv, 5.0}, {1, 4.0, cv, 6.0}};
  std::vector<double> setup{0.0, 0.0,  //
                            0.0, 1.0,  //
                            1.0, 0.0};
  return sched::Instance(std::move(jobs), 1, std::move(setup), 1.0, 0.1);
}

inline sched::Schedule seq(std::vector<std::vector<sched::JobId>> m) { return sched::Schedule{std::move(m)}; }

}  // namespace simheur::testing
