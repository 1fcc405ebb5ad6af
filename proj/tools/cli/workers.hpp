// workers.hpp: fixed-size worker pool over independent jobs.
//
// Workers take job indices from a shared counter and write into their own
// result slot, so no result is touched by two threads. The first exception (by
// job index) is rethrown on the calling thread after all workers finish.

#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace qprobe::cli {

template <class R>
std::vector<R> parallel_map(std::size_t jobs, int workers, const std::function<R(std::size_t)>& fn) {
    std::vector<std::optional<R>> slots(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < jobs; i = next++) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto n = static_cast<std::size_t>(std::max(1, workers));
    if (n == 1 || jobs <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t k = 0; k < std::min(n, jobs); ++k) pool.emplace_back(work);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<R> out;
    out.reserve(jobs);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace qprobe::cli
