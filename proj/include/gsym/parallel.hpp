#pragma once
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace gsym {

// Worker count: explicit argument beats the GSYM_THREADS variable beats the
// hardware concurrency report (which may be zero on exotic platforms).
inline int defaultThreadCount() {
    if (const char *env = std::getenv("GSYM_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? (int)h : 1;
}

// Runs every job and returns the results in job order, so merged output is
// identical for any worker count.  The first exception (if any) is rethrown on
// the calling thread after all workers stop.
template <typename R>
std::vector<R> runJobs(const std::vector<std::function<R()>> &jobs, int threads = 0) {
    if (threads <= 0) threads = defaultThreadCount();
    std::vector<R> out(jobs.size());
    if (threads == 1 || jobs.size() <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
        return out;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr firstError;
    std::mutex errorLock;
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
            try {
                out[i] = jobs[i]();
            } catch (...) {
                std::lock_guard<std::mutex> hold(errorLock);
                if (!firstError) firstError = std::current_exception();
            }
        }
    };
    size_t n = std::min<size_t>((size_t)threads, jobs.size());
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (size_t t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto &th : pool) th.join();
    if (firstError) std::rethrow_exception(firstError);
    return out;
}

} // namespace gsym
