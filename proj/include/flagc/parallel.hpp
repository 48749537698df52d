#pragma once

// Deterministic fork-join helper: results are produced per index and always
// consumed in index order, so output never depends on the worker count.

#include <exception>
#include <thread>
#include <vector>

namespace flagc {

template <class R, class Fn>
std::vector<R> map_indexed(int count, int jobs, Fn&& fn) {
    std::vector<R> out(static_cast<std::size_t>(count));
    if (count == 0) return out;
    if (jobs <= 1 || count == 1) {
        for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }
    int workers = std::min(jobs, count);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (int i = w; i < count; i += workers)
                    out[static_cast<std::size_t>(i)] = fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace flagc
