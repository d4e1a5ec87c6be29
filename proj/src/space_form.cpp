#include "spaceform/space_form.hpp"

#include <cmath>
#include <stdexcept>

namespace spaceform {

namespace {

constexpr double kConstraintTol = 1e-12;
constexpr double kDomainClamp = 1e-9;     // clamp window for acos/acosh arguments
constexpr double kAntipodeGuard = 1e-6;   // margin below pi/sqrt(K) where log_map refuses

double sinc(double x) {
    return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
}
double sinhc(double x) {
    return std::abs(x) < 1e-8 ? 1.0 + x * x / 6.0 : std::sinh(x) / x;
}

void check_coord_size(const SpaceForm& M, const Vector& v, const char* what) {
    if (v.size() != M.coord_dim())
        throw std::invalid_argument(std::string(what) + ": coordinate size mismatch");
}

// Rescales raw coordinates back onto the model quadric; a no-op for K = 0.
Vector renormalize(const SpaceForm& M, const Vector& p) {
    switch (M.model) {
        case Model::Euclidean: return p;
        case Model::Sphere: return p * (M.radius() / p.norm());
        case Model::Hyperboloid: {
            const double q = -ambient_inner(M, p, p);
            return p * (M.radius() / std::sqrt(q));
        }
    }
    return p;
}

}  // namespace

double SpaceForm::radius() const {
    return 1.0 / std::sqrt(std::abs(K));
}

SpaceForm make_space_form(double K, int ambient_dim) {
    if (!std::isfinite(K)) throw std::invalid_argument("make_space_form: K must be finite");
    if (ambient_dim < 2) throw std::invalid_argument("make_space_form: ambient_dim must be >= 2");
    SpaceForm M;
    M.K = K;
    M.ambient_dim = ambient_dim;
    M.model = K == 0.0 ? Model::Euclidean : (K > 0.0 ? Model::Sphere : Model::Hyperboloid);
    return M;
}

double ambient_inner(const SpaceForm& M, const Vector& v, const Vector& w) {
    if (M.model == Model::Hyperboloid)
        return -v[0] * w[0] + v.tail(v.size() - 1).dot(w.tail(w.size() - 1));
    return v.dot(w);
}

double metric_inner(const SpaceForm& M, const ModelTangent& v, const ModelTangent& w) {
    return ambient_inner(M, v.vec, w.vec);
}

double tangent_norm(const SpaceForm& M, const ModelTangent& v) {
    return std::sqrt(std::max(0.0, ambient_inner(M, v.vec, v.vec)));
}

double model_constraint_residual(const SpaceForm& M, const Vector& coords) {
    switch (M.model) {
        case Model::Euclidean: return 0.0;
        case Model::Sphere: {
            const double r2 = 1.0 / M.K;
            return std::abs(coords.squaredNorm() - r2) / r2;
        }
        case Model::Hyperboloid: {
            const double r2 = 1.0 / std::abs(M.K);
            double res = std::abs(ambient_inner(M, coords, coords) + r2) / r2;
            if (coords[0] <= 0.0) res = std::max(res, 1.0);  // wrong sheet
            return res;
        }
    }
    return 0.0;
}

double tangency_residual(const SpaceForm& M, const Vector& base, const Vector& vec) {
    if (M.model == Model::Euclidean) return 0.0;
    const double scale = std::max(1e-300, base.norm() * vec.norm());
    return std::abs(ambient_inner(M, base, vec)) / scale;
}

ModelPoint make_point(const SpaceForm& M, const Vector& coords) {
    check_coord_size(M, coords, "make_point");
    if (model_constraint_residual(M, coords) > kConstraintTol)
        throw std::invalid_argument("make_point: coordinates violate the model constraint");
    return ModelPoint{coords};
}

ModelTangent make_tangent(const SpaceForm& M, const ModelPoint& base, const Vector& vec) {
    check_coord_size(M, vec, "make_tangent");
    if (tangency_residual(M, base.coords, vec) > kConstraintTol)
        throw std::invalid_argument("make_tangent: vector is not tangent at the base point");
    return ModelTangent{base, vec};
}

Vector project_to_tangent(const SpaceForm& M, const Vector& p, const Vector& v) {
    if (M.model == Model::Euclidean) return v;
    const double pp = ambient_inner(M, p, p);
    return v - (ambient_inner(M, p, v) / pp) * p;
}

Matrix tangent_basis(const SpaceForm& M, const Vector& p) {
    const int m = static_cast<int>(p.size());
    const int n1 = M.ambient_dim;
    Matrix basis(m, n1);
    if (M.model == Model::Euclidean) {
        basis = Matrix::Identity(m, n1);
        return basis;
    }
    int cols = 0;
    for (int i = 0; i < m && cols < n1; ++i) {
        Vector cand = project_to_tangent(M, p, Vector::Unit(m, i));
        for (int j = 0; j < cols; ++j)
            cand -= ambient_inner(M, basis.col(j), cand) * basis.col(j);
        const double nn = ambient_inner(M, cand, cand);
        if (nn > 1e-12) basis.col(cols++) = cand / std::sqrt(nn);
    }
    if (cols != n1) throw std::runtime_error("tangent_basis: failed to span the tangent space");
    return basis;
}

double distance(const SpaceForm& M, const ModelPoint& p, const ModelPoint& q) {
    check_coord_size(M, p.coords, "distance");
    check_coord_size(M, q.coords, "distance");
    switch (M.model) {
        case Model::Euclidean:
            return (q.coords - p.coords).norm();
        case Model::Sphere: {
            const double r = M.radius();
            const double c = ambient_inner(M, p.coords, q.coords) / (r * r);
            if (c < -1.0 - kDomainClamp || c > 1.0 + kDomainClamp)
                throw std::domain_error("distance: inner product outside the sphere domain");
            // chord-based branches stay well conditioned near 0 and near pi
            if (c >= 0.0) {
                const double chord = (q.coords - p.coords).norm();
                return 2.0 * r * std::asin(std::min(1.0, chord / (2.0 * r)));
            }
            const double anti = (q.coords + p.coords).norm();
            return r * (M_PI - 2.0 * std::asin(std::min(1.0, anti / (2.0 * r))));
        }
        case Model::Hyperboloid: {
            const double r = M.radius();
            const double c = -ambient_inner(M, p.coords, q.coords) / (r * r);
            if (c < 1.0 - kDomainClamp)
                throw std::domain_error("distance: inner product outside the hyperboloid domain");
            const Vector w = q.coords - p.coords;
            const double ww = std::max(0.0, ambient_inner(M, w, w));
            return 2.0 * r * std::asinh(std::sqrt(ww) / (2.0 * r));
        }
    }
    return 0.0;
}

ModelPoint exp_map(const SpaceForm& M, const ModelPoint& p, const ModelTangent& v) {
    if (tangency_residual(M, p.coords, v.vec) > kConstraintTol)
        throw std::invalid_argument("exp_map: tangency violated");
    if ((v.base.coords - p.coords).norm() >
        kConstraintTol * std::max(1.0, p.coords.norm()))
        throw std::invalid_argument("exp_map: tangent not based at p");
    const double len = tangent_norm(M, v);
    switch (M.model) {
        case Model::Euclidean:
            return ModelPoint{p.coords + v.vec};
        case Model::Sphere: {
            const double theta = std::sqrt(M.K) * len;
            return ModelPoint{renormalize(M, p.coords * std::cos(theta) + v.vec * sinc(theta))};
        }
        case Model::Hyperboloid: {
            const double theta = std::sqrt(-M.K) * len;
            return ModelPoint{renormalize(M, p.coords * std::cosh(theta) + v.vec * sinhc(theta))};
        }
    }
    return p;
}

ModelTangent log_map(const SpaceForm& M, const ModelPoint& p, const ModelPoint& q) {
    const double d = distance(M, p, q);
    switch (M.model) {
        case Model::Euclidean:
            return ModelTangent{p, q.coords - p.coords};
        case Model::Sphere: {
            if (d >= M_PI / std::sqrt(M.K) - kAntipodeGuard)
                throw std::domain_error(
                    "log_map: q is antipodal/conjugate to p, geodesic not unique");
            Vector w = project_to_tangent(M, p.coords, q.coords);
            const double wn = w.norm();
            if (wn < 1e-300) return ModelTangent{p, Vector::Zero(p.coords.size())};
            return ModelTangent{p, w * (d / wn)};
        }
        case Model::Hyperboloid: {
            Vector w = project_to_tangent(M, p.coords, q.coords);
            const double wn = std::sqrt(std::max(0.0, ambient_inner(M, w, w)));
            if (wn < 1e-300) return ModelTangent{p, Vector::Zero(p.coords.size())};
            return ModelTangent{p, w * (d / wn)};
        }
    }
    return ModelTangent{p, Vector::Zero(p.coords.size())};
}

ModelTangent riemann_endomorphism(const SpaceForm& M, const ModelTangent& X,
                                  const ModelTangent& Y, const ModelTangent& Z) {
    const double scale = std::max(1.0, X.base.coords.norm());
    if ((X.base.coords - Y.base.coords).norm() > kConstraintTol * scale ||
        (X.base.coords - Z.base.coords).norm() > kConstraintTol * scale)
        throw std::invalid_argument("riemann_endomorphism: mismatched base points");
    const double gYZ = metric_inner(M, Y, Z);
    const double gXZ = metric_inner(M, X, Z);
    return ModelTangent{X.base, M.K * (gYZ * X.vec - gXZ * Y.vec)};
}

Geodesic::Geodesic(const SpaceForm& space, const ModelPoint& start, const ModelPoint& end)
    : space_(space), start_(start), end_(end), initial_(log_map(space, start, end)) {
    speed_ = tangent_norm(space_, initial_);
}

ModelPoint Geodesic::eval(double t) const {
    ModelTangent scaled{start_, initial_.vec * t};
    return exp_map(space_, start_, scaled);
}

ModelTangent Geodesic::velocity(double t) const {
    const ModelPoint pt = eval(t);
    switch (space_.model) {
        case Model::Euclidean:
            return ModelTangent{pt, initial_.vec};
        case Model::Sphere: {
            const double a = std::sqrt(space_.K);
            const double th = a * speed_ * t;
            if (speed_ < 1e-300) return ModelTangent{pt, initial_.vec};
            const Vector u = initial_.vec / speed_;
            return ModelTangent{pt, speed_ * (-a * std::sin(th) * start_.coords + std::cos(th) * u)};
        }
        case Model::Hyperboloid: {
            const double a = std::sqrt(-space_.K);
            const double th = a * speed_ * t;
            if (speed_ < 1e-300) return ModelTangent{pt, initial_.vec};
            const Vector u = initial_.vec / speed_;
            return ModelTangent{pt, speed_ * (a * std::sinh(th) * start_.coords + std::cosh(th) * u)};
        }
    }
    return ModelTangent{pt, initial_.vec};
}

Geodesic connect(const SpaceForm& M, const ModelPoint& p, const ModelPoint& q) {
    return Geodesic(M, p, q);
}

ModelTangent parallel_transport(const SpaceForm& M, const Geodesic& geo,
                                const ModelTangent& v, double t) {
    const ModelPoint& p = geo.start();
    if ((v.base.coords - p.coords).norm() >
        kConstraintTol * std::max(1.0, p.coords.norm()))
        throw std::invalid_argument("parallel_transport: vector not based at geo.eval(0)");
    const ModelPoint pt = geo.eval(t);
    if (M.model == Model::Euclidean || geo.speed() < 1e-300)
        return ModelTangent{pt, v.vec};
    // split v into the component along the direction of travel and the
    // orthogonal remainder; the remainder is fixed by the isometry that
    // slides span{p, e} along the geodesic
    const ModelTangent e0 = geo.velocity(0.0);
    const ModelTangent et = geo.velocity(t);
    const double alpha = metric_inner(M, v, e0) / (geo.speed() * geo.speed());
    const Vector rest = v.vec - alpha * e0.vec;
    return ModelTangent{pt, alpha * et.vec + rest};
}

}  // namespace spaceform
