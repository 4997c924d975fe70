#pragma once

#include <cstddef>
#include <functional>

namespace ratslice {

// Worker count: RATSLICE_THREADS if set to a positive integer, else hardware cores.
std::size_t thread_count();

// Runs body(begin, end, chunk) over contiguous chunks of [0, n). Chunk k always
// covers the same range for a given thread count, so callers that write into
// per-chunk slots and concatenate in chunk order get thread-independent output.
void parallel_chunks(std::size_t n, std::size_t chunks,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace ratslice
