#include "detlinks/exec.hpp"

#include <omp.h>

namespace detlinks {

void set_jobs(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int jobs() { return omp_get_max_threads(); }

}  // namespace detlinks
