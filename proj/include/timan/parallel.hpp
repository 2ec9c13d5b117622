// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace timan {

// Global worker budget for embarrassingly parallel loops (per-node radius
// fits, independent kernel-norm evaluations). 0 means hardware concurrency.
void set_thread_budget(int threads);
int thread_budget();

// Runs f(i) for i in [0, n). Chunking is fixed by n and the budget, never by
// load, so results are reproducible for a given configuration. Each index
// must write only to its own slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace timan
