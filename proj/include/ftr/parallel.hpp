// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FTR_PARALLEL_HPP_
#define FTR_PARALLEL_HPP_

#include <cstdint>
#include <functional>

namespace ftr {

/// Worker count: hardware concurrency, capped by the FTR_THREADS
/// environment variable when set (minimum 1).
int effective_threads();

/// Runs fn(begin, end) over a static partition of [0, n) across workers.
/// Work items must be index-addressed; partitioning never affects results.
void parallel_chunks(std::int64_t n,
                     const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace ftr

#endif  // FTR_PARALLEL_HPP_
