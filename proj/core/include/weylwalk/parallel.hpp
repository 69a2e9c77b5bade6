#pragma once

#include <cstdint>
#include <functional>

namespace weylwalk {

// Runs fn(i) for i in [begin, end) across up to `threads` workers in
// contiguous chunks. Callers make fn(i) independent per index (own substream,
// own output slot), so the result does not depend on the worker count.
void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned threads,
                  const std::function<void(std::uint64_t)>& fn);

unsigned default_thread_count();

} // namespace weylwalk
