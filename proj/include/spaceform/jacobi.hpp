#pragma once

#include <vector>

namespace spaceform {

// Parameters of the normal Jacobi scalar along a geodesic of length ell,
// rescaled to [0,1]. a = ell * sqrt(|K|), zero when K = 0.
struct JacobiParams {
    double K;
    double ell;
    double a;
};

// Validates ell > 0 and, for K > 0, a in (0, pi) (conjugate-point regime
// rejected with std::domain_error).
JacobiParams make_jacobi_params(double K, double ell);

// Scalar u(t) with u(0) = 0, u(1) = 1:
//   K > 0: sin(a t)/sin(a),  K = 0: t,  K < 0: sinh(a t)/sinh(a).
double jacobi_scalar(const JacobiParams& params, double t);

// du/dt at t = 1: a*cot(a) for K > 0, 1 for K = 0, a*coth(a) for K < 0.
double jacobi_derivative_at_one(const JacobiParams& params);

struct OdeSample {
    double t;
    double u;
    double du;
};

// Fixed-step classical 4th-order integration of u'' + ell^2 K u = 0 on
// [0,1], returning steps+1 samples. Verification oracle for the closed
// forms; requires steps >= 100.
std::vector<OdeSample> jacobi_ode_oracle(double K, double ell, double u0, double du0,
                                         int steps = 10000);

// Radius of the geodesic sphere with normal curvature constant C:
//   K > 0: arctan(sqrt(K)/C)/sqrt(K),  K = 0: 1/C,
//   K < 0: arctanh(sqrt(|K|)/C)/sqrt(|K|)  (requires C > sqrt(|K|)).
double predicted_radius(double K, double C);

// Normal curvature of the geodesic sphere of radius R (inner normal):
//   K > 0: sqrt(K)*cot(sqrt(K) R) for R < pi/(2 sqrt(K)),
//   K = 0: 1/R,  K < 0: sqrt(|K|)*coth(sqrt(|K|) R).
// Inverse of predicted_radius on its domain.
double sphere_curvature(double K, double R);

}  // namespace spaceform
