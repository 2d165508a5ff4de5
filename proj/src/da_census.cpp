#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "da_internal.hpp"
#include "portable_rng.hpp"
#include "surfdyn/da_sim.hpp"

namespace surfdyn {

namespace {

// Per-coordinate nearest-lift difference f(x) - x on the torus.
Vec2 lift_difference(const TorusPoint& image, const TorusPoint& base) {
    double dx = image.x - base.x;
    double dy = image.y - base.y;
    dx -= std::round(dx);
    dy -= std::round(dy);
    return {dx, dy};
}

struct NewtonResult {
    TorusPoint root;
    double residual = 0.0;
    bool converged = false;
    bool singular = false;
};

NewtonResult newton_fixed_point(TorusPoint x, const DAParams& params, double tol) {
    NewtonResult result;
    for (int iter = 0; iter < 60; ++iter) {
        const Vec2 f = lift_difference(da_map(x, params), x);
        const double residual = std::hypot(f.x, f.y);
        if (residual < tol) {
            result.root = x;
            result.residual = residual;
            result.converged = true;
            return result;
        }
        const Mat2 jac = da_jacobian(x, params);
        const Mat2 system{jac.m00 - 1.0, jac.m01, jac.m10, jac.m11 - 1.0};
        const double det = system.det();
        if (std::fabs(det) < 1e-14) {
            result.singular = true;
            return result;
        }
        double sx = (-f.x * system.m11 + f.y * system.m01) / det;
        double sy = (-f.y * system.m00 + f.x * system.m10) / det;
        const double step = std::hypot(sx, sy);
        if (step > 0.25) { // keep steps inside one fundamental domain
            sx *= 0.25 / step;
            sy *= 0.25 / step;
        }
        x = torus_reduce(x.x + sx, x.y + sy);
    }
    return result;
}

FixedPointKind classify(const std::complex<double>& e1, const std::complex<double>& e2,
                        bool singular) {
    const double m1 = std::abs(e1);
    const double m2 = std::abs(e2);
    if (singular || std::fabs(m1 - 1.0) < 1e-9 || std::fabs(m2 - 1.0) < 1e-9)
        return FixedPointKind::Unresolved;
    if (m1 > 1.0 && m2 > 1.0) return FixedPointKind::Source;
    if (m1 < 1.0 && m2 < 1.0) return FixedPointKind::Sink;
    return FixedPointKind::Saddle;
}

} // namespace

std::vector<FixedPointRecord> find_fixed_points(const DAParams& params, int grid_n,
                                                double newton_tol) {
    params.validate();
    if (grid_n < 64) throw std::invalid_argument("grid_n must be >= 64");
    if (!(newton_tol > 0.0) || newton_tol > 1e-6)
        throw std::invalid_argument("newton_tol must lie in (0, 1e-6]");

    std::vector<FixedPointRecord> records;
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            const TorusPoint seed{static_cast<double>(i) / grid_n,
                                  static_cast<double>(j) / grid_n};
            const NewtonResult res = newton_fixed_point(seed, params, newton_tol);
            if (!res.converged) continue; // divergent seeds are dropped

            auto duplicate = std::find_if(
                records.begin(), records.end(), [&](const FixedPointRecord& r) {
                    return torus_distance(r.location, res.root) < 1e-4;
                });
            if (duplicate != records.end()) {
                if (res.residual < duplicate->residual) {
                    duplicate->location = res.root;
                    duplicate->residual = res.residual;
                }
                continue;
            }

            FixedPointRecord record;
            record.location = res.root;
            record.residual = res.residual;
            const Mat2 jac = da_jacobian(res.root, params);
            const auto eig = eigenvalues(jac);
            record.eigenvalue_1 = eig[0];
            record.eigenvalue_2 = eig[1];
            const Mat2 system{jac.m00 - 1.0, jac.m01, jac.m10, jac.m11 - 1.0};
            record.kind = classify(eig[0], eig[1], std::fabs(system.det()) < 1e-14);
            records.push_back(record);
        }
    }

    std::sort(records.begin(), records.end(),
              [](const FixedPointRecord& a, const FixedPointRecord& b) {
                  if (a.location.x != b.location.x) return a.location.x < b.location.x;
                  return a.location.y < b.location.y;
              });
    return records;
}

std::string census_to_json(const std::vector<FixedPointRecord>& census) {
    nlohmann::ordered_json root;
    root["fixed_points"] = nlohmann::ordered_json::array();
    for (const auto& record : census) {
        nlohmann::ordered_json jr;
        jr["x"] = record.location.x;
        jr["y"] = record.location.y;
        jr["kind"] = to_string(record.kind);
        // Real eigenvalues are plain numbers; a complex conjugate pair is
        // emitted as [re, im] / [re, -im] pairs.
        if (record.eigenvalue_1.imag() == 0.0 && record.eigenvalue_2.imag() == 0.0)
            jr["eigenvalues"] = {record.eigenvalue_1.real(), record.eigenvalue_2.real()};
        else
            jr["eigenvalues"] = {
                {record.eigenvalue_1.real(), record.eigenvalue_1.imag()},
                {record.eigenvalue_2.real(), record.eigenvalue_2.imag()}};
        jr["residual"] = record.residual;
        root["fixed_points"].push_back(std::move(jr));
    }
    return root.dump(2) + "\n";
}

std::vector<TorusPoint> approximate_attractor(const DAParams& params, int n_samples,
                                              int n_transient, std::uint64_t seed) {
    params.validate();
    if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
    if (n_transient < 100) throw std::invalid_argument("n_transient must be >= 100");

    detail::PortableRng rng(seed);
    std::vector<TorusPoint> points;
    points.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        TorusPoint p{rng.unit(), rng.unit()};
        for (int t = 0; t < n_transient; ++t) p = da_map(p, params);
        points.push_back(p);
    }
    return points;
}

namespace {

// Continuous lift of the torus map: bump balls sit at every lattice point,
// so the push term is computed from the offset to the nearest one.
Vec2 lifted_map(const Vec2& q, const DAParams& params) {
    const Mat2 a = params.linear();
    const Vec2 aq = a.apply(q);
    const Vec2 u{q.x - std::round(q.x), q.y - std::round(q.y)};
    const double r0 = params.bump_radius;
    const double r2 = u.x * u.x + u.y * u.y;
    if (r2 >= r0 * r0) return aq;
    const Vec2 dual = detail::stable_dual(params.unstable_direction(),
                                          params.stable_direction());
    const Vec2 vs = params.stable_direction();
    const double xi_s = dual.x * u.x + dual.y * u.y;
    const double amplitude =
        params.push_strength * detail::bump(std::sqrt(r2) / r0) * xi_s;
    return {aq.x + amplitude * vs.x, aq.y + amplitude * vs.y};
}

void refine_segment(const Vec2& a, const Vec2& b, const DAParams& params, double spacing,
                    int depth, std::vector<Vec2>& out) {
    const Vec2 fb = lifted_map(b, params);
    const Vec2& last = out.back();
    if (depth >= 24 || std::hypot(fb.x - last.x, fb.y - last.y) <= spacing) {
        out.push_back(fb);
        return;
    }
    const Vec2 mid{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
    refine_segment(a, mid, params, spacing, depth + 1, out);
    refine_segment(mid, b, params, spacing, depth + 1, out);
}

} // namespace

std::vector<TorusPoint> unstable_segment(const FixedPointRecord& fp, const DAParams& params,
                                         int arc_steps, int n_iterates) {
    params.validate();
    if (fp.kind != FixedPointKind::Saddle)
        throw std::invalid_argument("unstable_segment requires a saddle fixed point");
    if (arc_steps < 1) throw std::invalid_argument("arc_steps must be >= 1");
    if (n_iterates < 0) throw std::invalid_argument("n_iterates must be >= 0");

    const Mat2 jac = da_jacobian(fp.location, params);
    const auto eig = eigenvalues(jac);
    const double lambda_u = eig[0].real();
    // Unstable eigenvector of the local Jacobian.
    Vec2 dir{jac.m01, lambda_u - jac.m00};
    Vec2 alt{lambda_u - jac.m11, jac.m10};
    if (std::hypot(alt.x, alt.y) > std::hypot(dir.x, dir.y)) dir = alt;
    const double n = std::hypot(dir.x, dir.y);
    dir.x /= n;
    dir.y /= n;

    const double half = 0.5e-4; // seed segment of total length 1e-4
    std::vector<Vec2> current{{fp.location.x - half * dir.x, fp.location.y - half * dir.y},
                              {fp.location.x, fp.location.y},
                              {fp.location.x + half * dir.x, fp.location.y + half * dir.y}};
    const double spacing = 1.0 / arc_steps;
    for (int it = 0; it < n_iterates; ++it) {
        std::vector<Vec2> next;
        next.reserve(current.size());
        next.push_back(lifted_map(current[0], params));
        for (std::size_t i = 0; i + 1 < current.size(); ++i)
            refine_segment(current[i], current[i + 1], params, spacing, 0, next);
        current = std::move(next);
    }

    std::vector<TorusPoint> polyline;
    polyline.reserve(current.size());
    for (const auto& q : current) polyline.push_back(torus_reduce(q.x, q.y));
    return polyline;
}

} // namespace surfdyn
