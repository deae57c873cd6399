#pragma once

namespace ardl {

/// Execution policy for the data-parallel kernels (order grid search, Monte
/// Carlo studies). Serial is the reference path; Parallel distributes
/// independent work items over OpenMP threads and must produce bit-identical
/// results.
enum class Execution { Serial, Parallel };

}  // namespace ardl
