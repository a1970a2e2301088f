// Worker count and a deterministic block-parallel loop.
#pragma once

#include <cstddef>
#include <functional>

namespace rootline {

/// ROOTLINE_THREADS if set to a positive integer, else the hardware count.
std::size_t worker_count();

/// Calls body(block) for block = 0..blocks-1 across worker_count() threads.
/// Blocks are handed out in increasing order; body must only touch state
/// owned by its block.
void parallel_blocks(std::size_t blocks, const std::function<void(std::size_t)>& body);

}  // namespace rootline
