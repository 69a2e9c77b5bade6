#include "weylwalk/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace weylwalk {

unsigned default_thread_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned threads,
                  const std::function<void(std::uint64_t)>& fn) {
    if (begin >= end) return;
    const std::uint64_t total = end - begin;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, threads), total));
    if (workers == 1) {
        for (std::uint64_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = begin + w * chunk;
        const std::uint64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::uint64_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace weylwalk
