#include "spaceform/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace spaceform {

int resolve_thread_cap() {
    if (const char* env = std::getenv("SPACEFORM_THREADS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (...) {
            // fall through to machine parallelism on unparsable values
        }
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return std::max(1u, std::thread::hardware_concurrency());
#endif
}

}  // namespace spaceform
