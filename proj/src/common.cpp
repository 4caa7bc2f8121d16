#include "frac/common.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <thread>

namespace frac {

int thread_budget() {
    static int budget = [] {
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (hw < 1) hw = 1;
        if (const char* env = std::getenv("FRAC_THREADS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v >= 1) return static_cast<int>(v < hw ? v : hw);
        }
        return hw;
    }();
    return budget;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body) {
    int workers = thread_budget();
    if (workers <= 1 || count < 1024) {
        body(0, count);
        return;
    }
    std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        if (lo >= count) break;
        std::size_t hi = lo + chunk < count ? lo + chunk : count;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

void log_note(const std::string& msg) {
    std::cerr << "[note] " << msg << "\n";
}

} // namespace frac
