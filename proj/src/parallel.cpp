#include "elliptica/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace elliptica {

unsigned resolve_threads(std::optional<unsigned> requested) {
    if (requested) return *requested == 0 ? 1u : *requested;
    if (const char* env = std::getenv("ELLIPTICA_THREADS")) {
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
        if (ec == std::errc{} && v > 0) return v;
    }
    return 1;
}

}  // namespace elliptica
