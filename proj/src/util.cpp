#include "fnls/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace fnls {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FNLS_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::int64_t n, int workers, const std::function<void(std::int64_t)>& fn) {
    if (n <= 0) return;
    int w = std::min<std::int64_t>(resolve_workers(workers), n);
    if (w <= 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(w);
    std::int64_t chunk = (n + w - 1) / w;
    std::vector<std::exception_ptr> errors(w);
    for (int k = 0; k < w; ++k) {
        std::int64_t lo = k * chunk;
        std::int64_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn, err = &errors[k]] {
            try {
                for (std::int64_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                *err = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace fnls
