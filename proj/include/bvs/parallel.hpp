#ifndef BVS_PARALLEL_HPP
#define BVS_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace bvs {

// Runs fn(0..count-1) on up to `threads` workers. Tasks write into
// preassigned slots, so results do not depend on the thread count.
inline void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
    threads = std::max(1, std::min(threads, count));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& worker : pool) worker.join();
}

// Default worker count: the BVS_THREADS environment variable when set,
// otherwise one (conservative and predictable).
inline int default_thread_count() {
    if (const char* env = std::getenv("BVS_THREADS")) {
        const int value = std::atoi(env);
        if (value >= 1) return value;
    }
    return 1;
}

}  // namespace bvs

#endif
