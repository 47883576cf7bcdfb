#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace gon {

// Worker cap from GON_THREADS (default: single-threaded). Batch results are
// indexed by batch number and combined in batch order, so the outcome is
// identical for any thread count.
inline unsigned thread_cap() {
    const char* env = std::getenv("GON_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    if (v < 1) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<unsigned>(v) > hw ? hw : static_cast<unsigned>(v);
}

// Runs fn(batch_index) for batch_index in [0, batches); each call must touch
// only its own slot of any shared output.
template <class Fn>
void run_batches(std::size_t batches, const Fn& fn) {
    unsigned workers = thread_cap();
    if (workers <= 1 || batches <= 1) {
        for (std::size_t b = 0; b < batches; ++b) fn(b);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::size_t> next(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t b = w; b < batches; b += workers) fn(b);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace gon
