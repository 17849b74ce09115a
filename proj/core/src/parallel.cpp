#include "permlab/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string_view>
#include <thread>
#include <vector>

namespace permlab {

unsigned worker_count()
{
    if (const char* env = std::getenv(kWorkersEnv)) {
        const std::string_view s(env);
        unsigned n = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
        if (ec == std::errc{} && ptr == s.data() + s.size() && n > 0) {
            return n;
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::uint64_t n, const std::function<void(std::uint64_t, std::uint64_t)>& body)
{
    const std::uint64_t workers = std::min<std::uint64_t>(worker_count(), n);
    if (workers <= 1) {
        if (n > 0) {
            body(0, n);
        }
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(n, begin + chunk);
        if (begin >= end) {
            break;
        }
        threads.emplace_back([&, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        });
    }
    threads.clear();
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace permlab
