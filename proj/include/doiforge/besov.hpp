#pragma once

#include <cstddef>
#include <vector>

#include "doiforge/report.hpp"
#include "doiforge/scalar_function.hpp"

namespace doiforge {

enum class DecayClass { ZeroBeyond, ConstantLimits };

// Uniform symmetric samples on [-L, L].  The decay tag tells quadrature how
// to extend the function past the grid: by zero, or by freezing the edge
// values as one-sided limits.
class SampledFunction {
public:
    SampledFunction(double half_width, std::vector<double> values, DecayClass decay);
    static SampledFunction from_function(const ScalarFunction& f, double half_width,
                                         std::size_t points, DecayClass decay);

    double half_width() const { return half_width_; }
    double step() const { return step_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }
    double grid_point(std::size_t i) const { return -half_width_ + step_ * static_cast<double>(i); }
    DecayClass decay() const { return decay_; }

    // linear interpolation inside the grid, decay extension outside
    double operator()(double t) const;
    double sup_norm() const;

    // central differences inside, one-sided at the edges; the derivative
    // is extended by zero past the grid
    SampledFunction derivative() const;

private:
    double half_width_;
    double step_;
    std::vector<double> values_;
    DecayClass decay_;
};

// s^{-1} P_1(t/s) with P_1(x) = 1/(pi (1 + x^2)); evaluating through the
// scaling makes P_s(t) = s^{-1} P_1(t/s) hold bitwise
double poisson_kernel(double t, double s);

// f * P_s: trapezoid over the grid plus the arctan closed form for the
// kernel mass beyond it, which takes the extension value of f.  The total
// kernel mass is checked against 1 at every output point; a kernel too
// narrow for the grid fails that check.
SampledFunction poisson_smooth(const SampledFunction& f, double s);

// sup of |f(t1) - f(t2)| / |t1 - t2|^alpha over all adjacent pairs and a
// strided subsample of long-range pairs; a lower bound of the seminorm
double holder_seminorm(const SampledFunction& f, double alpha);

struct PoissonProfile {
    double s = 0.0;
    double ds_sup = 0.0;   // ||du/ds||_inf
    double dss_sup = 0.0;  // ||d2u/ds2||_inf
};

// sup profiles of the s-derivatives of u = f * P_s, differentiating the
// kernel under the integral.  The substitution tau = t + s tan(u) absorbs
// the Cauchy kernel analytically, so the profiles stay accurate for s far
// below the grid step.
std::vector<PoissonProfile> poisson_derivative_profile(const SampledFunction& f,
                                                       const std::vector<double>& s_grid);

std::vector<double> log_s_grid(double lo, double hi, std::size_t points_per_decade = 200);

// Smoothness chain for the divided-difference criterion: splits the Besov
// integral of ||d2u/ds2||_inf at s = 1, bounds the lower piece by the
// Holder seminorm of f' and the upper piece by that of f (fitted
// constants), and verifies the kernel semigroup and contraction on the way.
EstimateReport besov_chain_check(const SampledFunction& f, double theta, double epsilon,
                                 const std::vector<double>& s_grid);

}  // namespace doiforge
