#include "lipedge/kernels.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

#include "kernel_set.hpp"

namespace lipedge::kernels {

const char* name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "?";
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
    }
    return false;
}

Backend best_available() {
    if (backend_available(Backend::avx2)) return Backend::avx2;
    return Backend::scalar;
}

namespace {

std::atomic<Backend>& active_slot() {
    static std::atomic<Backend> slot{best_available()};
    return slot;
}

}  // namespace

Backend active() { return active_slot().load(std::memory_order_relaxed); }

void set_active(Backend b) {
    if (!backend_available(b)) {
        throw std::invalid_argument(std::string("kernel backend '") + name(b) +
                                    "' is not available on this CPU");
    }
    active_slot().store(b, std::memory_order_relaxed);
}

const KernelSet& kernels_for(Backend b) {
    switch (b) {
        case Backend::scalar:
            return scalar_kernels();
        case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return avx2_kernels();
#else
            break;
#endif
    }
    return scalar_kernels();
}

}  // namespace lipedge::kernels
