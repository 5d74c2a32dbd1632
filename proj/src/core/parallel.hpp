// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace decent::detail {

// Runs fn(i) for i in [0, n) on up to `jobs` threads with a static contiguous
// split. fn must only write to slot i of its outputs. The first exception is
// rethrown on the caller.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
    std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(n, begin + chunk);
        threads.emplace_back([&, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i)
                    fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace decent::detail
