#ifndef QLC_PARALLEL_HPP
#define QLC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace qlc {

/// out[i] = fn(in[i]) on up to `threads` workers. Results keep input order
/// whatever the completion order; the first exception is rethrown.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& in, Fn fn, unsigned threads)
    -> std::vector<decltype(fn(in.front()))> {
    using Out = decltype(fn(in.front()));
    std::vector<std::optional<Out>> slots(in.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(in.size(), 1)));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < in.size(); i = next++) {
            try {
                slots[i].emplace(fn(in[i]));
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<Out> out;
    out.reserve(in.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

} // namespace qlc

#endif // QLC_PARALLEL_HPP
