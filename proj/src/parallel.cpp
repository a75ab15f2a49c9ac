#include "concentra/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>

namespace concentra {

namespace {
std::atomic<int> g_override{0};
}

void set_thread_override(int n) { g_override.store(n); }

int max_threads() {
    const int o = g_override.load();
    if (o >= 1) return o;
    static const int from_env = [] {
        if (const char* s = std::getenv("CONCENTRA_THREADS")) {
            const int v = std::atoi(s);
            if (v >= 1) return v;
        }
        return 0;
    }();
    if (from_env >= 1) return from_env;
    return omp_get_max_threads();
}

}  // namespace concentra
