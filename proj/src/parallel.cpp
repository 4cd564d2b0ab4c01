#include "arcwalk/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace arcwalk {

int default_thread_count()
{
    if (const char* env = std::getenv("ARCWALK_THREADS")) {
        char* end = nullptr;
        long const v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 1024L));
    }
    unsigned const hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace arcwalk
