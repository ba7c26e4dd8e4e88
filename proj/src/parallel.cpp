#include "hcplab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hcplab {

unsigned worker_count(unsigned requested) {
    if (requested != 0) return requested;
    if (const char* env = std::getenv("HCPLAB_THREADS")) {
        try {
            const unsigned long value = std::stoul(env);
            if (value != 0) return static_cast<unsigned>(value);
        } catch (const std::exception&) {
            // unparsable: fall through to auto
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_chunks(std::uint64_t total, unsigned workers,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body) {
    workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(total, 1)));
    if (workers == 1) {
        body(0, total, 0);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        pool.emplace_back([&, begin, end, w] {
            try {
                body(begin, end, w);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace hcplab
