#pragma once

namespace detlinks {

/// Selects between the OpenMP kernels and the serial reference path.
enum class Exec { serial, parallel };

/// Caps the OpenMP worker pool; n <= 0 keeps the runtime default.
void set_jobs(int n);
int jobs();

}  // namespace detlinks
