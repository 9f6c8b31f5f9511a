#pragma once

namespace ternary {

/// Selects between the OpenMP kernel and its serial reference.  Both paths
/// produce identical results; the serial one is kept for testing.
enum class Execution { Serial, Parallel };

/// Worker count for Parallel kernels; values below 1 restore the default.
void set_worker_count(int workers);
int worker_count();

}  // namespace ternary
