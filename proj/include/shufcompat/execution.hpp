#pragma once

namespace shufcompat {

/// Selects between the OpenMP kernels and their serial reference versions.
/// Both produce identical results.
enum class Execution { serial, parallel };

/// Caps the OpenMP worker count; values below 1 leave the runtime default.
void set_worker_limit(int jobs);

}  // namespace shufcompat
