#include "cgof/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cgof {

std::size_t configured_workers() {
    if (const char* env = std::getenv("GOF_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            // Unparseable values fall through to auto.
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::size_t resolve_workers(std::size_t requested) {
    return requested == 0 ? configured_workers() : requested;
}

}  // namespace cgof
