#pragma once

#include <functional>

namespace lipedge {

// Runs fn(row_begin, row_end) over a partition of [0, height) into contiguous
// blocks, one per worker. threads <= 1 (or a small height) runs inline.
// Workers never share output rows, so results are independent of the thread
// count as long as fn itself is deterministic per row.
void parallel_rows(int height, int threads, const std::function<void(int, int)>& fn);

// threads == 0 means "use the hardware concurrency".
int resolve_thread_count(int threads);

}  // namespace lipedge
