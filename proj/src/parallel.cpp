#include "domavg/parallel.hpp"

#include <cstdlib>
#include <string>

namespace domavg {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DOMAVG_WORKERS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    return 1;
}

} // namespace domavg
