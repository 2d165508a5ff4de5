#pragma once

#include <cmath>

#include "surfdyn/da_sim.hpp"

namespace surfdyn::detail {

// Smooth bump: 1 at 0, identically 0 from r = 1 on.
inline double bump(double r) {
    if (r >= 1.0) return 0.0;
    const double t = 1.0 - r * r;
    return std::exp(1.0 - 1.0 / t);
}

inline double bump_derivative(double r) {
    if (r >= 1.0) return 0.0;
    const double t = 1.0 - r * r;
    return bump(r) * (-2.0 * r) / (t * t);
}

// Dual covector d with d . v_s = 1 and d . v_u = 0, so d . q is the
// stable-eigenbasis coordinate of q.
inline Vec2 stable_dual(const Vec2& vu, const Vec2& vs) {
    const double det = vu.x * vs.y - vs.x * vu.y;
    return {-vu.y / det, vu.x / det};
}

// Lift of a reduced point with both coordinates nearest the lattice point 0.
inline Vec2 nearest_lift(const TorusPoint& p) {
    return {p.x < 0.5 ? p.x : p.x - 1.0, p.y < 0.5 ? p.y : p.y - 1.0};
}

} // namespace surfdyn::detail
