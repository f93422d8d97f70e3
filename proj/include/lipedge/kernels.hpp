#pragma once

namespace lipedge::kernels {

// Implementation lane for the per-pixel inner loops. `scalar` is the
// reference; `avx2` is selected automatically where the CPU supports it and
// is equivalence-tested against the reference.
enum class Backend {
    scalar,
    avx2,
};

const char* name(Backend b);

bool backend_available(Backend b);

// The widest available lane on this CPU.
Backend best_available();

// Process-wide selection, defaulting to best_available(). set_active throws
// std::invalid_argument if the requested lane is not available.
Backend active();
void set_active(Backend b);

}  // namespace lipedge::kernels
