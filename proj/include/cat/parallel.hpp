#ifndef CAT_PARALLEL_HPP
#define CAT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace cat {

// 0 means "resolve": the CAT_THREADS environment variable if set, otherwise
// the hardware concurrency.
unsigned resolve_threads(unsigned requested);

// Runs body(k) for k in [0, count) on up to `threads` workers. Each index is
// processed exactly once; the first exception thrown by any worker is
// rethrown on the calling thread after all workers have stopped.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace cat

#endif  // CAT_PARALLEL_HPP
