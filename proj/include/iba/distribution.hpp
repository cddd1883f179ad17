#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "iba/errors.hpp"

namespace iba {

using Dist = std::vector<double>;

inline double dist_sum(const Dist& p) {
    double s = 0.0;
    for (double v : p) s += v;
    return s;
}

inline bool is_distribution(const Dist& p, double tol = 1e-12) {
    for (double v : p)
        if (!(v >= 0.0) || !std::isfinite(v)) return false;
    return std::abs(dist_sum(p) - 1.0) <= tol;
}

/// L1 distance between two discrete distributions over the same support.
inline double l1_distance(const Dist& p, const Dist& q) {
    if (p.size() != q.size()) throw ContractError("l1_distance: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
    return s;
}

/// Floors every probability at `floor_prob` and renormalizes. Used before
/// any logarithm is taken of a predicted distribution.
inline Dist clamp_floor(const Dist& p, double floor_prob = 1e-6) {
    Dist out(p.size());
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = p[i] < floor_prob ? floor_prob : (p[i] > 1.0 ? 1.0 : p[i]);
        s += out[i];
    }
    for (double& v : out) v /= s;
    return out;
}

/// KL divergence D(p || q). Terms with p_i = 0 contribute 0; q is clamped
/// so the result is always finite.
inline double kl_divergence(const Dist& p, const Dist& q, double floor_prob = 1e-6) {
    if (p.size() != q.size()) throw ContractError("kl_divergence: size mismatch");
    const Dist qc = clamp_floor(q, floor_prob);
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] > 0.0) s += p[i] * std::log(p[i] / qc[i]);
    return s < 0.0 ? 0.0 : s;
}

inline Dist uniform_dist(std::size_t n) { return Dist(n, 1.0 / static_cast<double>(n)); }

inline Dist point_mass(std::size_t n, std::size_t at) {
    Dist p(n, 0.0);
    p[at] = 1.0;
    return p;
}

} // namespace iba
