#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace colperm {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Splits [0, total) into contiguous chunks, evaluates `chunk(begin, end)`
/// on worker threads, and folds the per-chunk results into `init` in
/// ascending chunk order, so any associative merge yields a deterministic
/// result independent of scheduling.
template <typename Result, typename ChunkFn, typename MergeFn>
Result chunked_reduce(std::uint64_t total, int jobs, Result init,
                      const ChunkFn& chunk, const MergeFn& merge) {
    const int workers = std::min<std::uint64_t>(resolve_jobs(jobs), total ? total : 1);
    if (workers <= 1) {
        if (total > 0) merge(init, chunk(0, total));
        return init;
    }
    const auto n_chunks = static_cast<std::uint64_t>(workers);
    std::vector<Result> parts(n_chunks);
    std::vector<std::exception_ptr> errors(n_chunks);
    std::vector<std::thread> threads;
    threads.reserve(n_chunks);
    for (std::uint64_t i = 0; i < n_chunks; ++i) {
        const std::uint64_t begin = total * i / n_chunks;
        const std::uint64_t end = total * (i + 1) / n_chunks;
        threads.emplace_back([&, i, begin, end] {
            try {
                parts[i] = chunk(begin, end);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    for (auto& part : parts) merge(init, std::move(part));
    return init;
}

}  // namespace colperm
