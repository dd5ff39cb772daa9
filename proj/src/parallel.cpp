#include "archval/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace archval {

int worker_count(std::int64_t jobs) {
    if (jobs <= 1) return 1;
    std::int64_t workers = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("ARCHVAL_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(cap, &end, 10);
        if (end != cap && parsed >= 1) workers = std::min<std::int64_t>(workers, parsed);
    }
    return static_cast<int>(std::min(workers, jobs));
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body) {
    if (n <= 0) return;
    const int workers = worker_count(n);
    if (workers == 1) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }

    constexpr std::int64_t kChunk = 16;
    std::atomic<std::int64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    const auto drain = [&] {
        while (true) {
            const std::int64_t begin = next.fetch_add(kChunk);
            if (begin >= n) return;
            const std::int64_t end = std::min(begin + kChunk, n);
            try {
                for (std::int64_t i = begin; i < end; ++i) body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(n);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(drain);
    drain();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace archval
