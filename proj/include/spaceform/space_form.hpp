#pragma once

#include <Eigen/Dense>

namespace spaceform {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Ambient model realizing a simply connected space form of curvature K.
// Euclidean: R^{n+1}. Sphere: radius 1/sqrt(K) sphere in R^{n+2}.
// Hyperboloid: upper sheet <p,p>_L = -1/|K| in Lorentzian R^{n+2}.
enum class Model { Euclidean, Sphere, Hyperboloid };

struct SpaceForm {
    double K = 0.0;
    int ambient_dim = 3;   // dimension n+1 of the space form itself
    Model model = Model::Euclidean;

    // dimension of the coordinate space the model lives in
    int coord_dim() const {
        return model == Model::Euclidean ? ambient_dim : ambient_dim + 1;
    }
    // model radius 1/sqrt(|K|); meaningless for K = 0
    double radius() const;
};

SpaceForm make_space_form(double K, int ambient_dim);

struct ModelPoint {
    Vector coords;
};

struct ModelTangent {
    ModelPoint base;
    Vector vec;
};

// Bilinear form of the coordinate space: Euclidean dot product, or the
// Lorentzian form -v0*w0 + sum_i vi*wi for the hyperboloid model.
double ambient_inner(const SpaceForm& M, const Vector& v, const Vector& w);

// Riemannian inner product of tangent vectors (restriction of the form).
double metric_inner(const SpaceForm& M, const ModelTangent& v, const ModelTangent& w);
double tangent_norm(const SpaceForm& M, const ModelTangent& v);

// Validating constructors. Throw std::invalid_argument when the model
// constraint (point) or tangency (tangent) is violated beyond 1e-12 relative.
ModelPoint make_point(const SpaceForm& M, const Vector& coords);
ModelTangent make_tangent(const SpaceForm& M, const ModelPoint& base, const Vector& vec);

// Residuals of the model constraint / tangency, relative to the point scale.
double model_constraint_residual(const SpaceForm& M, const Vector& coords);
double tangency_residual(const SpaceForm& M, const Vector& base, const Vector& vec);

// Projects an arbitrary coordinate-space vector onto the tangent space at p.
Vector project_to_tangent(const SpaceForm& M, const Vector& p, const Vector& v);

// Orthonormal basis of the tangent space at p (coord_dim x ambient_dim).
Matrix tangent_basis(const SpaceForm& M, const Vector& p);

double distance(const SpaceForm& M, const ModelPoint& p, const ModelPoint& q);

ModelPoint exp_map(const SpaceForm& M, const ModelPoint& p, const ModelTangent& v);

// Inverse of exp_map. For K > 0 requires distance(p, q) < pi/sqrt(K) - 1e-6;
// throws std::domain_error in the conjugate/antipodal regime.
ModelTangent log_map(const SpaceForm& M, const ModelPoint& p, const ModelPoint& q);

// Constant-curvature curvature endomorphism R(X,Y)Z = K(g(Y,Z)X - g(X,Z)Y).
ModelTangent riemann_endomorphism(const SpaceForm& M, const ModelTangent& X,
                                  const ModelTangent& Y, const ModelTangent& Z);

// Constant-speed geodesic on [0,1] from start to end.
class Geodesic {
public:
    Geodesic(const SpaceForm& space, const ModelPoint& start, const ModelPoint& end);

    const SpaceForm& space() const { return space_; }
    const ModelPoint& start() const { return start_; }
    const ModelPoint& end() const { return end_; }
    double speed() const { return speed_; }

    ModelPoint eval(double t) const;
    ModelTangent velocity(double t) const;

private:
    SpaceForm space_;
    ModelPoint start_;
    ModelPoint end_;
    ModelTangent initial_;   // log_map(start, end)
    double speed_;
};

Geodesic connect(const SpaceForm& M, const ModelPoint& p, const ModelPoint& q);

// Parallel field Z(t) along geo with Z(0) = v; exact in all three models.
ModelTangent parallel_transport(const SpaceForm& M, const Geodesic& geo,
                                const ModelTangent& v, double t);

}  // namespace spaceform
