#include "spaceform/jacobi.hpp"

#include <cmath>
#include <stdexcept>

namespace spaceform {

JacobiParams make_jacobi_params(double K, double ell) {
    if (!std::isfinite(K) || !std::isfinite(ell))
        throw std::invalid_argument("jacobi: K and ell must be finite");
    if (ell <= 0.0) throw std::invalid_argument("jacobi: ell must be positive");
    const double a = K == 0.0 ? 0.0 : ell * std::sqrt(std::abs(K));
    if (K > 0.0 && a >= M_PI)
        throw std::domain_error("jacobi: a = ell*sqrt(K) >= pi, conjugate-point regime");
    return JacobiParams{K, ell, a};
}

double jacobi_scalar(const JacobiParams& params, double t) {
    if (params.K > 0.0) return std::sin(params.a * t) / std::sin(params.a);
    if (params.K < 0.0) return std::sinh(params.a * t) / std::sinh(params.a);
    return t;
}

double jacobi_derivative_at_one(const JacobiParams& params) {
    if (params.K > 0.0) return params.a * std::cos(params.a) / std::sin(params.a);
    if (params.K < 0.0) return params.a * std::cosh(params.a) / std::sinh(params.a);
    return 1.0;
}

std::vector<OdeSample> jacobi_ode_oracle(double K, double ell, double u0, double du0,
                                         int steps) {
    if (steps < 100) throw std::invalid_argument("jacobi_ode_oracle: steps must be >= 100");
    if (!std::isfinite(K) || !std::isfinite(ell) || ell <= 0.0)
        throw std::invalid_argument("jacobi_ode_oracle: invalid parameters");
    const double omega2 = ell * ell * K;
    const double h = 1.0 / steps;
    std::vector<OdeSample> out;
    out.reserve(steps + 1);
    double u = u0, du = du0;
    out.push_back({0.0, u, du});
    for (int i = 0; i < steps; ++i) {
        const double k1u = du, k1v = -omega2 * u;
        const double k2u = du + 0.5 * h * k1v, k2v = -omega2 * (u + 0.5 * h * k1u);
        const double k3u = du + 0.5 * h * k2v, k3v = -omega2 * (u + 0.5 * h * k2u);
        const double k4u = du + h * k3v, k4v = -omega2 * (u + h * k3u);
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        du += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        out.push_back({(i + 1) * h, u, du});
    }
    return out;
}

double predicted_radius(double K, double C) {
    if (!std::isfinite(K) || !std::isfinite(C))
        throw std::invalid_argument("predicted_radius: arguments must be finite");
    if (C <= 0.0) throw std::domain_error("predicted_radius: C must be positive");
    if (K > 0.0) {
        const double s = std::sqrt(K);
        return std::atan(s / C) / s;
    }
    if (K < 0.0) {
        const double s = std::sqrt(-K);
        if (C <= s)
            throw std::domain_error(
                "predicted_radius: C <= sqrt(|K|), no geodesic sphere has this curvature");
        return std::atanh(s / C) / s;
    }
    return 1.0 / C;
}

double sphere_curvature(double K, double R) {
    if (!std::isfinite(K) || !std::isfinite(R))
        throw std::invalid_argument("sphere_curvature: arguments must be finite");
    if (R <= 0.0) throw std::domain_error("sphere_curvature: R must be positive");
    if (K > 0.0) {
        const double s = std::sqrt(K);
        if (R >= M_PI / (2.0 * s))
            throw std::domain_error(
                "sphere_curvature: R at or beyond the equatorial sphere, curvature not positive");
        return s * std::cos(s * R) / std::sin(s * R);
    }
    if (K < 0.0) {
        const double s = std::sqrt(-K);
        return s * std::cosh(s * R) / std::sinh(s * R);
    }
    return 1.0 / R;
}

}  // namespace spaceform
