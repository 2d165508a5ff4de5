#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace surfdyn {

// Point on the unit 2-torus, coordinates in [0, 1).
struct TorusPoint {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const TorusPoint&) const = default;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Row-major 2x2 matrix; just enough linear algebra for the plane.
struct Mat2 {
    double m00 = 0.0, m01 = 0.0;
    double m10 = 0.0, m11 = 0.0;

    Vec2 apply(const Vec2& v) const {
        return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y};
    }
    double det() const { return m00 * m11 - m01 * m10; }
    double trace() const { return m00 + m11; }
};

// Eigenvalues ordered by descending modulus.
std::array<std::complex<double>, 2> eigenvalues(const Mat2& m);

TorusPoint torus_reduce(double x, double y);

// Distance on the torus: minimum over integer translates.
double torus_distance(const TorusPoint& a, const TorusPoint& b);

// Hyperbolic toral automorphism perturbed by a compactly supported push
// along the stable eigendirection inside the ball of radius bump_radius at
// the origin:
//
//   f(p) = A p + push_strength * psi(|q|/r0) * xi_s(q) * v_s   (mod 1)
//
// where q is the lift of p nearest the lattice, xi_s its stable-eigenbasis
// coordinate, v_s the unit stable eigenvector, and psi the bump
// exp(1 - 1/(1 - r^2)) on [0,1), zero beyond. Outside the ball the linear
// map is applied exactly and the bump term is never evaluated.
struct DAParams {
    std::array<int, 4> linear_part{2, 1, 1, 1}; // row-major
    double bump_radius = 0.15;
    double push_strength = default_push_strength();

    // Default bump height: the stable multiplier at the origin becomes 1.6.
    static double default_push_strength();

    // Checks |det| = 1, hyperbolicity, 0 < bump_radius < 0.5 and
    // push_strength >= 0 (zero gives the unperturbed automorphism).
    void validate() const;

    Mat2 linear() const;
    double stable_eigenvalue() const;
    double unstable_eigenvalue() const;
    Vec2 stable_direction() const;   // unit length, sign-canonical
    Vec2 unstable_direction() const;
};

enum class FixedPointKind { Source, Sink, Saddle, Unresolved };

const char* to_string(FixedPointKind kind);

struct FixedPointRecord {
    TorusPoint location;
    FixedPointKind kind = FixedPointKind::Unresolved;
    std::complex<double> eigenvalue_1; // |eigenvalue_1| >= |eigenvalue_2|
    std::complex<double> eigenvalue_2;
    double residual = 0.0; // |f(p) - p| at the returned location
};

TorusPoint da_map(const TorusPoint& p, const DAParams& params);

// Analytic derivative of da_map; equals the linear part outside the bump.
Mat2 da_jacobian(const TorusPoint& p, const DAParams& params);

// Newton iteration on f(p) - p (nearest-lift differencing) seeded from a
// grid_n x grid_n grid; roots deduplicated within torus distance 1e-4 and
// classified by the Jacobian eigenvalue moduli. Seeds that do not converge
// are dropped; a root whose Newton system is singular is kept with kind
// Unresolved. Requires grid_n >= 64 and newton_tol in (0, 1e-6].
std::vector<FixedPointRecord> find_fixed_points(const DAParams& params, int grid_n,
                                                double newton_tol);

// {"fixed_points":[{"x":...,"y":...,"kind":"source","eigenvalues":[...],
//  "residual":...},...]} sorted by location.
std::string census_to_json(const std::vector<FixedPointRecord>& census);

// Final positions of n_samples random points after n_transient iterations,
// in seed-index order. Requires n_transient >= 100.
std::vector<TorusPoint> approximate_attractor(const DAParams& params, int n_samples,
                                              int n_transient, std::uint64_t seed);

// Grows both branches of the unstable manifold of a saddle: a segment of
// length 1e-4 along the unstable eigenvector is iterated n_iterates times
// with adaptive midpoint insertion keeping neighbor spacing below
// 1/arc_steps. Throws std::invalid_argument unless fp is a saddle.
std::vector<TorusPoint> unstable_segment(const FixedPointRecord& fp, const DAParams& params,
                                         int arc_steps, int n_iterates);

} // namespace surfdyn
