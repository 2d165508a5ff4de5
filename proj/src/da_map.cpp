#include "surfdyn/da_sim.hpp"

#include <cmath>
#include <stdexcept>

#include "da_internal.hpp"

namespace surfdyn {

using detail::bump;
using detail::bump_derivative;
using detail::nearest_lift;
using detail::stable_dual;

const char* to_string(FixedPointKind kind) {
    switch (kind) {
        case FixedPointKind::Source: return "source";
        case FixedPointKind::Sink: return "sink";
        case FixedPointKind::Saddle: return "saddle";
        default: return "unresolved";
    }
}

std::array<std::complex<double>, 2> eigenvalues(const Mat2& m) {
    const double tr = m.trace();
    const double disc = tr * tr - 4.0 * m.det();
    std::complex<double> a, b;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        a = (tr + s) / 2.0;
        b = (tr - s) / 2.0;
    } else {
        const double s = std::sqrt(-disc) / 2.0;
        a = {tr / 2.0, s};
        b = {tr / 2.0, -s};
    }
    if (std::abs(a) < std::abs(b)) std::swap(a, b);
    return {a, b};
}

TorusPoint torus_reduce(double x, double y) {
    x -= std::floor(x);
    y -= std::floor(y);
    if (x >= 1.0) x = 0.0; // floor rounding at the seam
    if (y >= 1.0) y = 0.0;
    return {x, y};
}

double torus_distance(const TorusPoint& a, const TorusPoint& b) {
    double dx = std::fabs(a.x - b.x);
    double dy = std::fabs(a.y - b.y);
    dx = std::min(dx, 1.0 - dx);
    dy = std::min(dy, 1.0 - dy);
    return std::hypot(dx, dy);
}

namespace {

Vec2 eigenvector(const Mat2& m, double lambda) {
    // (m - lambda I) v = 0: take the better conditioned row.
    Vec2 v1{m.m01, lambda - m.m00};
    Vec2 v2{lambda - m.m11, m.m10};
    Vec2 v = std::hypot(v1.x, v1.y) >= std::hypot(v2.x, v2.y) ? v1 : v2;
    const double n = std::hypot(v.x, v.y);
    v.x /= n;
    v.y /= n;
    // Canonical sign: first nonzero component positive.
    if (v.x < 0.0 || (v.x == 0.0 && v.y < 0.0)) {
        v.x = -v.x;
        v.y = -v.y;
    }
    return v;
}

} // namespace

double DAParams::default_push_strength() {
    // lambda_s of [[2,1],[1,1]] is (3 - sqrt 5)/2; the perturbed stable
    // multiplier at the origin is lambda_s + k = 1.6.
    return 1.6 - (3.0 - std::sqrt(5.0)) / 2.0;
}

Mat2 DAParams::linear() const {
    return {static_cast<double>(linear_part[0]), static_cast<double>(linear_part[1]),
            static_cast<double>(linear_part[2]), static_cast<double>(linear_part[3])};
}

void DAParams::validate() const {
    const Mat2 a = linear();
    const double det = a.det();
    if (std::fabs(std::fabs(det) - 1.0) > 1e-12)
        throw std::invalid_argument("linear part must have determinant +-1");
    const auto eig = eigenvalues(a);
    if (eig[0].imag() != 0.0 || std::fabs(std::abs(eig[0]) - 1.0) < 1e-12 ||
        std::fabs(std::abs(eig[1]) - 1.0) < 1e-12)
        throw std::invalid_argument("linear part must be hyperbolic");
    if (!(bump_radius > 0.0) || !(bump_radius < 0.5))
        throw std::invalid_argument("bump radius must lie in (0, 0.5)");
    if (!(push_strength >= 0.0))
        throw std::invalid_argument("push strength must be >= 0");
}

double DAParams::stable_eigenvalue() const {
    return eigenvalues(linear())[1].real();
}

double DAParams::unstable_eigenvalue() const {
    return eigenvalues(linear())[0].real();
}

Vec2 DAParams::stable_direction() const {
    return eigenvector(linear(), stable_eigenvalue());
}

Vec2 DAParams::unstable_direction() const {
    return eigenvector(linear(), unstable_eigenvalue());
}

TorusPoint da_map(const TorusPoint& p, const DAParams& params) {
    const Mat2 a = params.linear();
    const Vec2 q = nearest_lift(p);
    const Vec2 aq = a.apply(q);
    const double r0 = params.bump_radius;
    const double r2 = q.x * q.x + q.y * q.y;
    if (r2 >= r0 * r0) return torus_reduce(aq.x, aq.y);

    const Vec2 vu = params.unstable_direction();
    const Vec2 vs = params.stable_direction();
    const Vec2 dual = stable_dual(vu, vs);
    const double xi_s = dual.x * q.x + dual.y * q.y;
    const double amplitude =
        params.push_strength * bump(std::sqrt(r2) / r0) * xi_s;
    return torus_reduce(aq.x + amplitude * vs.x, aq.y + amplitude * vs.y);
}

Mat2 da_jacobian(const TorusPoint& p, const DAParams& params) {
    const Mat2 a = params.linear();
    const Vec2 q = nearest_lift(p);
    const double r0 = params.bump_radius;
    const double r2 = q.x * q.x + q.y * q.y;
    if (r2 >= r0 * r0) return a;

    const Vec2 vu = params.unstable_direction();
    const Vec2 vs = params.stable_direction();
    const Vec2 dual = stable_dual(vu, vs);
    const double k = params.push_strength;

    // grad of psi(|q|/r0) * xi_s(q): psi * dual + xi_s * psi' * q / (r0 |q|).
    Vec2 grad{0.0, 0.0};
    const double norm = std::sqrt(r2);
    const double psi = bump(norm / r0);
    grad.x = psi * dual.x;
    grad.y = psi * dual.y;
    if (norm > 0.0) {
        const double xi_s = dual.x * q.x + dual.y * q.y;
        const double radial = xi_s * bump_derivative(norm / r0) / (r0 * norm);
        grad.x += radial * q.x;
        grad.y += radial * q.y;
    }
    return {a.m00 + k * vs.x * grad.x, a.m01 + k * vs.x * grad.y,
            a.m10 + k * vs.y * grad.x, a.m11 + k * vs.y * grad.y};
}

} // namespace surfdyn
