#include "ternary/parallel.hpp"

#include <omp.h>

namespace ternary {

void set_worker_count(int workers) {
  omp_set_num_threads(workers >= 1 ? workers : omp_get_num_procs());
}

int worker_count() { return omp_get_max_threads(); }

}  // namespace ternary
