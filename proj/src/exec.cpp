#include <gtcodes/exec.hpp>

#include <atomic>
#include <cstdlib>

namespace gtcodes::exec {

namespace {
std::atomic<int> g_max_threads{0};
} // namespace

int max_threads() {
    int k = g_max_threads.load(std::memory_order_relaxed);
    if (k > 0)
        return k;
    if (const char* env = std::getenv("THREADS")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void set_max_threads(int k) {
    g_max_threads.store(k > 0 ? k : 0, std::memory_order_relaxed);
}

} // namespace gtcodes::exec
