// Copyright 2026 The ucqnn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace ucqnn {

/// Worker count for `requested` threads (0 = hardware concurrency), never
/// more than `tasks`.
[[nodiscard]] inline unsigned resolve_threads(unsigned requested,
                                              std::size_t tasks) {
    unsigned w = requested != 0 ? requested : std::thread::hardware_concurrency();
    w = std::max(1U, w);
    return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(1, tasks)));
}

/// Runs f(i) for i in [0, count) on up to `threads` workers. Each index runs
/// exactly once; callers write results into per-index slots.
template <typename F>
void parallel_for(std::size_t count, unsigned threads, F &&f) {
    const unsigned workers = resolve_threads(threads, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            f(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                f(i);
            }
        });
    }
}

} // namespace ucqnn
