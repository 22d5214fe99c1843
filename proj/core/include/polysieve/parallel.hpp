#ifndef POLYSIEVE_PARALLEL_HPP
#define POLYSIEVE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace polysieve {

// Global worker count, settable by the CLI (--threads / POLYSIEVE_THREADS).
// 0 means hardware concurrency.
void set_worker_count(unsigned n);
unsigned worker_count();

// Run fn(i) for i in [0, n) on the worker pool.  Callers index results into
// pre-sized storage and reduce in index order, so output is identical for
// every worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace polysieve

#endif
