#pragma once

namespace logsurf {

/// Selects between the OpenMP kernel and its serial reference. Both produce
/// identical results; the serial path exists for testing and benchmarking.
enum class Execution { serial, parallel };

/// Worker threads the parallel kernels will use (1 without OpenMP).
int max_threads();

} // namespace logsurf
