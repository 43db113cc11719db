#include "injwords/parallel.hpp"

#include <cstdlib>

namespace injwords {

unsigned worker_count()
{
    if (const char* env = std::getenv("INJWORDS_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace injwords
