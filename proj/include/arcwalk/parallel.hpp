#pragma once

namespace arcwalk {

/// Worker count used when a caller passes 0 threads: ARCWALK_THREADS if
/// set to a positive integer, otherwise the hardware concurrency.
int default_thread_count();

}  // namespace arcwalk
