#include "doiforge/kernels.hpp"

#include <cmath>

#include "doiforge/errors.hpp"

namespace doiforge {

namespace {

using cx = std::complex<double>;

double hyp(double a, double t) { return std::sqrt(a * a + t * t); }

void require_positive_pair(double lambda, double mu, const char* who) {
    if (!(lambda > 0.0 && mu > 0.0))
        throw DomainError(std::string(who) + ": kernel defined on (0,inf)^2 only");
}

// (1 - y^{1-r}) / (1 - y) expressed through x = log y, continuous at x = 0
double power_quotient_log(double r, double x) {
    if (x == 0.0) return 1.0 - r;
    return std::expm1((1.0 - r) * x) / std::expm1(x);
}

double stable_ratio_kernel(double theta, double x) {
    // 1/(e^{theta x} + e^{(theta-1) x}), overflow-safe
    const double m = std::max(theta * x, (theta - 1.0) * x);
    return std::exp(-m) / (std::exp(theta * x - m) + std::exp((theta - 1.0) * x - m));
}

}  // namespace

cx divided_difference(const ScalarFunction& f, double a, double b) {
    const double scale = 1.0 + std::max(std::abs(a), std::abs(b));
    if (std::abs(a - b) <= 1e-7 * scale) return f.derivative(0.5 * (a + b));
    return (f.value(a) - f.value(b)) / (a - b);
}

Kernel Kernel::divided_difference_of(const ScalarFunction& f) {
    Kernel k("dd[" + f.name() + "]",
             [f](double l, double m) { return divided_difference(f, l, m); });
    k.dd_ = f;
    return k;
}

Kernel Kernel::psi_prime_alpha(double alpha) {
    if (!(alpha > 0.0)) throw InvalidParameter("psi_prime_alpha: alpha must be positive");
    return {"psi_prime_alpha(" + std::to_string(alpha) + ")", [alpha](double l, double m) {
                return cx(1.0 / (hyp(alpha, l) + hyp(alpha, m)));
            }};
}

Kernel Kernel::psi_zero() {
    return {"psi_zero", [](double l, double m) {
                require_positive_pair(l, m, "psi_zero");
                return cx(1.0 / (l + m));
            }};
}

Kernel Kernel::psi_theta(double theta) {
    if (!(theta > 0.0 && theta < 1.0))
        throw InvalidParameter("psi_theta: theta must lie in (0,1)");
    return {"psi_theta(" + std::to_string(theta) + ")", [theta](double l, double m) {
                require_positive_pair(l, m, "psi_theta");
                return cx(stable_ratio_kernel(theta, std::log(l / m)));
            }};
}

Kernel Kernel::psi_h_alpha_factor(double alpha) {
    if (!(alpha > 0.0)) throw InvalidParameter("psi_h_alpha_factor: alpha must be positive");
    return {"psi_h_alpha_factor(" + std::to_string(alpha) + ")",
            [alpha](double l, double m) {
                const double a = hyp(alpha, l), b = hyp(alpha, m);
                return cx(-(l + m) / ((a + b) * a * b));
            }};
}

Kernel Kernel::phi_prime() {
    return {"phi_prime", [](double l, double m) {
                const double a = hyp(1.0, l), b = hyp(1.0, m);
                const double quarter =
                    std::exp(0.25 * (std::log1p(l * l) + std::log1p(m * m)));
                return cx(quarter / (a + b));
            }};
}

Kernel Kernel::phi_double_prime(double s_cut) {
    if (!(s_cut > 0.0)) throw InvalidParameter("phi_double_prime: cutoff must be positive");
    return {"phi_double_prime(" + std::to_string(s_cut) + ")", [s_cut](double l, double m) {
                const auto& prof = cached_profile(GFamily::sech_half());
                const double x = 0.5 * (std::log1p(l * l) - std::log1p(m * m));
                return prof.synthesize(x, s_cut);
            }};
}

Kernel Kernel::weak_lp_split(double r, int piece) {
    if (!(r > 1.0)) throw InvalidParameter("weak_lp_split: requires r > 1");
    if (piece != 0 && piece != 1) throw InvalidParameter("weak_lp_split: piece is 0 or 1");
    const std::string name = "weak_lp_split(" + std::to_string(r) + "," +
                             std::to_string(piece) + ")";
    if (piece == 0) {
        return {name, [r](double l, double m) {
                    require_positive_pair(l, m, "weak_lp_split");
                    const double x = std::log(l / m);
                    const double c = chi0(x);
                    if (c == 0.0) return cx(0.0);
                    return cx(c * std::pow(m, -r) * power_quotient_log(r, x));
                }};
    }
    return {name, [r](double l, double m) {
                require_positive_pair(l, m, "weak_lp_split");
                const double x = std::log(l / m);
                const double c = chi1(x);
                if (c == 0.0) return cx(0.0);
                const double bracket =
                    (std::exp((0.5 - r) * x) - std::exp(-0.5 * x)) / (2.0 * std::sinh(0.5 * x));
                return cx(c * std::pow(m, -r) * bracket);
            }};
}

Kernel Kernel::constant(cx c) {
    return {"constant", [c](double, double) { return c; }};
}

Kernel Kernel::left_function(const ScalarFunction& f) {
    return {"left[" + f.name() + "]", [f](double l, double) { return f.value(l); }};
}

Kernel Kernel::right_function(const ScalarFunction& f) {
    return {"right[" + f.name() + "]", [f](double, double m) { return f.value(m); }};
}

Kernel Kernel::from_profile(const GFamily& g) {
    return {"profile[" + g.name() + "]", [g](double l, double m) {
                require_positive_pair(l, m, "from_profile");
                return cached_profile(g).synthesize(std::log(l / m));
            }};
}

Kernel Kernel::composed(const Kernel& phi, const ScalarFunction& f0, const ScalarFunction& f1) {
    if (!f0.real_valued() || !f1.real_valued())
        throw DomainError("composed: substituted functions must be real-valued");
    const Fn inner = phi.fn_;
    return {phi.name_ + "(" + f0.name() + "," + f1.name() + ")",
            [inner, f0, f1](double l, double m) {
                return inner(f0.value_real(l), f1.value_real(m));
            }};
}

cx Kernel::evaluate(double lambda, double mu) const { return fn_(lambda, mu); }

Kernel Kernel::adjoint_flip() const {
    const Fn inner = fn_;
    return {"flip[" + name_ + "]",
            [inner](double l, double m) { return std::conj(inner(m, l)); }};
}

const ScalarFunction& Kernel::dd_function() const {
    if (!dd_) throw InvalidParameter("dd_function: kernel is not a divided difference");
    return *dd_;
}

Kernel operator*(const Kernel& a, const Kernel& b) {
    const Kernel::Fn fa = a.fn_, fb = b.fn_;
    return {"(" + a.name_ + ")*(" + b.name_ + ")",
            [fa, fb](double l, double m) { return fa(l, m) * fb(l, m); }};
}

Kernel operator+(const Kernel& a, const Kernel& b) {
    const Kernel::Fn fa = a.fn_, fb = b.fn_;
    return {"(" + a.name_ + ")+(" + b.name_ + ")",
            [fa, fb](double l, double m) { return fa(l, m) + fb(l, m); }};
}

FactorizationResult factorization_residual(FactorizationId id, double param, std::size_t n) {
    if (n < 2) throw InvalidParameter("factorization_residual: grid needs >= 2 points");
    if ((id == FactorizationId::CommResultRep || id == FactorizationId::InverseResultTemp) &&
        !(param > 0.0))
        throw InvalidParameter("factorization_residual: alpha must be positive");
    FactorizationResult res{id, param, 0.0, 0.0, 0};

    auto record = [&res](cx lhs, cx rhs) {
        res.max_residual = std::max(res.max_residual, std::abs(lhs - rhs));
        res.max_abs_lhs = std::max(res.max_abs_lhs, std::abs(lhs));
        ++res.points;
    };

    switch (id) {
        case FactorizationId::CommResultRep: {
            const double alpha = param;
            const Kernel lhs = Kernel::divided_difference_of(ScalarFunction::f_alpha(alpha));
            for (std::size_t i = 0; i < n; ++i) {
                const double l = -5.0 + 10.0 * static_cast<double>(i) / (n - 1);
                for (std::size_t j = 0; j < n; ++j) {
                    const double m = -5.0 + 10.0 * static_cast<double>(j) / (n - 1);
                    const double a = hyp(alpha, l), b = hyp(alpha, m);
                    const double rhs =
                        (1.0 + (alpha * alpha - l * m) / (a * b)) / (a + b);
                    record(lhs.evaluate(l, m), rhs);
                }
            }
            return res;
        }
        case FactorizationId::PsiNotRepr: {
            const double theta = param;
            const Kernel psi = Kernel::psi_theta(theta);
            for (std::size_t i = 0; i < n; ++i) {
                const double l = 10.0 * static_cast<double>(i + 1) / n;
                for (std::size_t j = 0; j < n; ++j) {
                    const double m = 10.0 * static_cast<double>(j + 1) / n;
                    const cx rhs = std::pow(l, theta - 1.0) * std::pow(m, -theta) *
                                   psi.evaluate(l, m);
                    record(1.0 / (l + m), rhs);
                }
            }
            return res;
        }
        case FactorizationId::InverseResultTemp: {
            const double alpha = param;
            const Kernel lhs = Kernel::divided_difference_of(ScalarFunction::h_alpha(alpha));
            const Kernel rhs = Kernel::psi_h_alpha_factor(alpha);
            for (std::size_t i = 0; i < n; ++i) {
                const double l = -5.0 + 10.0 * static_cast<double>(i) / (n - 1);
                for (std::size_t j = 0; j < n; ++j) {
                    const double m = -5.0 + 10.0 * static_cast<double>(j) / (n - 1);
                    record(lhs.evaluate(l, m), rhs.evaluate(l, m));
                }
            }
            return res;
        }
        case FactorizationId::PsiResolution: {
            const double r = param;
            const Kernel lhs = Kernel::divided_difference_of(ScalarFunction::power_one_minus_r(r));
            const Kernel piece0 = Kernel::weak_lp_split(r, 0);
            const Kernel piece1 = Kernel::weak_lp_split(r, 1);
            for (std::size_t i = 0; i < n; ++i) {
                // mu log-uniform in [0.2, 5], ratio l/mu in [e^-3, e^3]
                const double m =
                    0.2 * std::exp(std::log(25.0) * static_cast<double>(i) / (n - 1));
                for (std::size_t j = 0; j < n; ++j) {
                    const double x = -3.0 + 6.0 * static_cast<double>(j) / (n - 1);
                    const double l = m * std::exp(x);
                    record(lhs.evaluate(l, m),
                           piece0.evaluate(l, m) + piece1.evaluate(l, m));
                }
            }
            return res;
        }
    }
    throw InvalidParameter("factorization_residual: unknown identity");
}

}  // namespace doiforge
