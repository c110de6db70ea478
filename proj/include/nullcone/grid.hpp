#pragma once

#include <vector>

#include "nullcone/error.hpp"

namespace nullcone {

/// `samples` equally spaced points covering [t0, t1], endpoints included.
inline std::vector<double> make_grid(double t0, double t1, int samples) {
    if (samples < 2) throw InvalidConfig("samples must be >= 2");
    if (!(t0 < t1)) throw InvalidConfig("grid requires t0 < t1");
    std::vector<double> g(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) g[i] = t0 + (t1 - t0) * i / (samples - 1);
    g.back() = t1;
    return g;
}

} // namespace nullcone
