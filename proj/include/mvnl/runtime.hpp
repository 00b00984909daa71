#pragma once

namespace mvnl::runtime {

// Worker-thread cap for grid sweeps and path batches. 0 means auto
// (hardware concurrency). Results never depend on the setting.
void set_worker_threads(int n);
int worker_threads();

// Cap resolved to a concrete positive thread count.
int resolved_threads();

}  // namespace mvnl::runtime
