#ifndef POLYPROJ_METRICS_HPP
#define POLYPROJ_METRICS_HPP

#include <atomic>
#include <cstdint>

namespace polyproj {

/// Process-wide LP invocation counter; the output-sensitivity metrics and
/// the --json envelope read it.
inline std::atomic<std::uint64_t>& lp_call_counter() {
    static std::atomic<std::uint64_t> counter{0};
    return counter;
}

inline std::uint64_t lp_calls_so_far() { return lp_call_counter().load(); }

/// Worker cap for the parallelizable oracle loops (1 = sequential).
inline std::atomic<int>& thread_cap() {
    static std::atomic<int> cap{1};
    return cap;
}

}  // namespace polyproj

#endif  // POLYPROJ_METRICS_HPP
