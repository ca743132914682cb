#ifndef GB_PARALLEL_HPP
#define GB_PARALLEL_HPP

namespace gb {

/// Kernel execution policy: the OpenMP path partitions work across threads
/// and merges by canonical sort; the serial path is the reference the tests
/// compare against. Results are identical by construction.
enum class Execution { serial, parallel };

}  // namespace gb

#endif
