#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "doiforge/fourier.hpp"
#include "doiforge/scalar_function.hpp"

namespace doiforge {

// Scalar divided difference (f(a) - f(b)) / (a - b) with the diagonal
// continued by f'((a+b)/2) whenever |a - b| <= 1e-7 * (1 + max(|a|, |b|)).
std::complex<double> divided_difference(const ScalarFunction& f, double a, double b);

// Two-variable kernels phi(lambda, mu) fed to the Schur-multiplier engine.
class Kernel {
public:
    static Kernel divided_difference_of(const ScalarFunction& f);
    static Kernel psi_prime_alpha(double alpha);  // 1/(sqrt(a^2+l^2) + sqrt(a^2+m^2))
    static Kernel psi_zero();                     // 1/(l + m) on (0,inf)^2
    static Kernel psi_theta(double theta);        // 1/((l/m)^th + (l/m)^{th-1})
    static Kernel psi_h_alpha_factor(double alpha);  // -(l+m)/(AB) * psi_prime_alpha
    static Kernel phi_prime();  // A^{1/2} B^{1/2} / (A + B), A = sqrt(1+l^2)
    static Kernel phi_double_prime(double s_cut);  // truncated synthesis of phi_prime
    static Kernel weak_lp_split(double r, int piece);  // chi0 / chi1 pieces of psi_{t^{1-r}}
    static Kernel constant(std::complex<double> c);
    static Kernel left_function(const ScalarFunction& f);   // phi = f(lambda)
    static Kernel right_function(const ScalarFunction& f);  // phi = f(mu)
    static Kernel from_profile(const GFamily& g);  // synthesized f(l/m) on (0,inf)^2
    // phi(f0(lambda), f1(mu)); f0, f1 real-valued
    static Kernel composed(const Kernel& phi, const ScalarFunction& f0, const ScalarFunction& f1);

    std::complex<double> evaluate(double lambda, double mu) const;

    // conj(phi(mu, lambda)); pairs with swapping the operator arguments
    Kernel adjoint_flip() const;

    const std::string& name() const { return name_; }
    bool is_divided_difference() const { return dd_.has_value(); }
    const ScalarFunction& dd_function() const;

    friend Kernel operator*(const Kernel& a, const Kernel& b);
    friend Kernel operator+(const Kernel& a, const Kernel& b);

private:
    using Fn = std::function<std::complex<double>(double, double)>;
    Kernel(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

    std::string name_;
    Fn fn_;
    std::optional<ScalarFunction> dd_;
};

enum class FactorizationId {
    CommResultRep,      // dd of f_alpha = psi_prime_alpha * (1 + (a^2 - lm)/(AB))
    PsiNotRepr,         // 1/(l+m) = l^{th-1} m^{-th} psi_theta
    InverseResultTemp,  // dd of h_alpha = -(l+m)/(AB) * psi_prime_alpha
    PsiResolution,      // dd of t^{1-r} = chi0 piece + chi1 piece
};

struct FactorizationResult {
    FactorizationId id;
    double param = 0.0;
    double max_residual = 0.0;
    double max_abs_lhs = 0.0;
    std::size_t points = 0;
};

// Evaluates both sides of the named identity on an n x n parameter grid and
// returns the largest pointwise residual.
FactorizationResult factorization_residual(FactorizationId id, double param, std::size_t n = 200);

}  // namespace doiforge
