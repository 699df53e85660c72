#ifndef GWLOC_PARALLEL_HPP
#define GWLOC_PARALLEL_HPP

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gwloc {

// Worker cap for graph-sum evaluation.  Results are written by item index
// and folded in index order, so the outcome is identical for any count.
inline int& worker_count() {
    static int count = [] {
        if (const char* env = std::getenv("GWLOC_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return 1;
    }();
    return count;
}

template <class T, class Fn>
std::vector<T> parallel_map(size_t n, Fn&& fn) {
    std::vector<T> out(n);
    int workers = worker_count();
    if (workers <= 1 || n <= 1) {
        for (size_t k = 0; k < n; ++k) out[k] = fn(k);
        return out;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    size_t stride = size_t(workers);
    for (size_t w = 0; w < stride; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (size_t k = w; k < n; k += stride) out[k] = fn(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace gwloc

#endif
