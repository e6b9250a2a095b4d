#pragma once

#include <cstddef>
#include <functional>

namespace schatten {

/// Resolves a thread-count request: n > 0 is taken literally; n == 0 consults
/// the SCHATTEN_THREADS environment variable, then hardware concurrency.
int resolve_threads(int requested);

/// Runs fn(chunk_begin, chunk_end) over [0, count) split into fixed-size
/// chunks. The chunk boundaries depend only on `count` and `chunk`, never on
/// the thread count, so work that writes to index-addressed slots produces
/// bit-identical results for any `threads` value. Chunks are assigned to
/// workers round-robin by chunk index.
void parallel_chunks(std::size_t count, std::size_t chunk, int threads,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace schatten
