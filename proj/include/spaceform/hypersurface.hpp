#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spaceform/parallel.hpp"
#include "spaceform/space_form.hpp"

namespace spaceform {

// One parameter rectangle of an immersed hypersurface. value() maps chart
// coordinates to model coordinates; derivative evaluators may be analytic
// (override) or fall back to central differences with step
// eps^(1/3) * max(1, |u_i|).
class Chart {
public:
    Chart(Vector lower, Vector upper) : lower_(std::move(lower)), upper_(std::move(upper)) {}
    virtual ~Chart() = default;

    int param_dim() const { return static_cast<int>(lower_.size()); }
    const Vector& lower() const { return lower_; }
    const Vector& upper() const { return upper_; }

    virtual Vector value(const Vector& u) const = 0;

    // coord_dim x n matrix of first parameter derivatives
    virtual Matrix jacobian(const Vector& u) const;

    // second derivatives, entry i*n+j = d^2 f / du_i du_j
    virtual std::vector<Vector> second_derivatives(const Vector& u) const;

private:
    Vector lower_;
    Vector upper_;
};

// Chart built from plain callables; derivatives by finite differences
// unless analytic ones are supplied.
class CallableChart : public Chart {
public:
    using ValueFn = std::function<Vector(const Vector&)>;
    using JacobianFn = std::function<Matrix(const Vector&)>;
    using SecondFn = std::function<std::vector<Vector>(const Vector&)>;

    CallableChart(Vector lower, Vector upper, ValueFn value, JacobianFn jac = nullptr,
                  SecondFn second = nullptr)
        : Chart(std::move(lower), std::move(upper)),
          value_(std::move(value)),
          jac_(std::move(jac)),
          second_(std::move(second)) {}

    Vector value(const Vector& u) const override { return value_(u); }
    Matrix jacobian(const Vector& u) const override {
        return jac_ ? jac_(u) : Chart::jacobian(u);
    }
    std::vector<Vector> second_derivatives(const Vector& u) const override {
        return second_ ? second_(u) : Chart::second_derivatives(u);
    }

private:
    ValueFn value_;
    JacobianFn jac_;
    SecondFn second_;
};

// Chart composed with an affine reparametrization u -> A u + b.
std::shared_ptr<Chart> reparametrized(std::shared_ptr<Chart> inner, const Matrix& A,
                                      const Vector& b, Vector lower, Vector upper);

// Parametrized codimension-one submanifold of a space form.
class Hypersurface {
public:
    Hypersurface(SpaceForm space, std::vector<std::shared_ptr<Chart>> charts)
        : space_(std::move(space)), charts_(std::move(charts)) {}

    const SpaceForm& space() const { return space_; }
    int chart_count() const { return static_cast<int>(charts_.size()); }
    const Chart& chart(int i) const { return *charts_.at(i); }
    std::shared_ptr<Chart> chart_ptr(int i) const { return charts_.at(i); }

    int dim() const { return charts_.empty() ? 0 : charts_.front()->param_dim(); }

    // inner-normal orientation: toward the interior point when declared,
    // otherwise a deterministic sign rule; flip() negates on top of either
    const std::optional<ModelPoint>& interior_point() const { return interior_; }
    void set_interior_point(ModelPoint p) { interior_ = std::move(p); }
    double orientation_sign() const { return sign_; }
    Hypersurface flipped() const {
        Hypersurface copy = *this;
        copy.sign_ = -sign_;
        return copy;
    }

    bool closed() const { return closed_; }
    void declare_closed(bool c) { closed_ = c; }

    int grid() const { return grid_; }
    void set_grid(int g) { grid_ = g; }

private:
    SpaceForm space_;
    std::vector<std::shared_ptr<Chart>> charts_;
    std::optional<ModelPoint> interior_;
    double sign_ = 1.0;
    bool closed_ = false;
    int grid_ = 32;
};

struct SampleRef {
    int chart;
    Vector u;
};

// Cell-centered lattice of grid^n samples per chart, strictly interior to
// every parameter rectangle (charts may degenerate on the boundary).
std::vector<SampleRef> sample_lattice(const Hypersurface& S);

// Point data shared by the per-sample operations.
struct SurfaceFrame {
    int chart;
    Vector u;
    Vector point;       // model coordinates
    Matrix jacobian;    // coord_dim x n
    Matrix metric;      // induced metric G, n x n
    Vector normal;      // inner unit normal, model-tangent
};

SurfaceFrame surface_frame(const Hypersurface& S, int chart, const Vector& u);

// Unit tangent field on the hypersurface. The evaluator returns a raw
// ambient vector; consumers project it onto TM and normalize.
struct TangentField {
    enum class Kind { Rotational, Hamiltonian, Explicit };
    Kind kind;
    std::string label;
    std::function<Vector(const SurfaceFrame&)> raw;

    // generator of the one-parameter isometry group rotating coordinates
    // (i, j) about `center` (center must be zero for curved models)
    static TangentField rotational(int axis_i, int axis_j, Vector center);
    static TangentField explicit_field(std::function<Vector(const SurfaceFrame&)> fn,
                                       std::string label = "explicit");
    // coordinate field of chart parameter `axis`, e.g. the closing angle of
    // a sphere chart
    static TangentField chart_axis(int axis);
};

// Projected, pre-normalization field vector and its metric norm.
struct FieldValue {
    Vector tangent;   // projection of the raw field onto TM
    double norm;      // metric norm before normalization
};
FieldValue evaluate_field(const Hypersurface& S, const SurfaceFrame& frame,
                          const TangentField& X);

struct CurvatureSample {
    int chart;
    Vector u;
    double value;
};

struct CurvatureReport {
    std::vector<CurvatureSample> samples;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    double spread = 0.0;
    bool constancy = false;
    double tolerance = 0.0;
};

Matrix induced_metric(const Hypersurface& S, int chart, const Vector& u);

ModelTangent unit_normal(const Hypersurface& S, int chart, const Vector& u);

// h_ij = g(nabla_{d_i} d_j, N), realized as the flat second derivative
// contracted with the inner normal under the model form.
Matrix second_fundamental_form(const Hypersurface& S, int chart, const Vector& u);

// C^X = h(X, X) for the normalized field X at the given sample.
double normal_curvature(const Hypersurface& S, int chart, const Vector& u,
                        const TangentField& X);

// Directional derivative of p -> distance(q, p) along X, computed as
// g(X, -log_map(p, q))/d. Requires distance(q, p) > 1e-6.
double distance_derivative(const Hypersurface& S, const ModelPoint& q, int chart,
                           const Vector& u, const TangentField& X);

// Evaluates C^X on the whole sample lattice; constancy holds when
// spread <= tol * max(1, |mean|).
CurvatureReport curvature_report(const Hypersurface& S, const TangentField& X, double tol,
                                 Exec exec = Exec::Parallel);

}  // namespace spaceform
