#include "doiforge/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "doiforge/doi.hpp"
#include "doiforge/ensembles.hpp"
#include "doiforge/errors.hpp"
#include "doiforge/fourier.hpp"
#include "doiforge/kernels.hpp"

namespace doiforge {

namespace {

// three Schur-bounded factors, each passed through the half-point profile
double sign_chain_constant() {
    static const double c = 3.0 * theta_multiplier_bound(0.5);
    return c;
}

// sup over theta in [0.05, 0.95] of the theta-interpolated constant times
// min{sqrt(theta), sqrt(1 - theta)}; the growth law of the constant keeps
// this product bounded, checked once per process
double theta_scaling_sup() {
    static const double sup = [] {
        double worst = 0.0;
        for (int i = 1; i <= 19; ++i) {
            const double th = 0.05 * i;
            worst = std::max(worst, 3.0 * theta_multiplier_bound(th) *
                                        std::sqrt(std::min(th, 1.0 - th)));
        }
        return worst;
    }();
    return sup;
}
constexpr double kThetaScalingCap = 1.2;  // measured sup 1.0607, at theta = 1/2

// regression caps on observed/envelope ratios; measured over the seeded
// development sweep (n <= 16, p in {1,2,3}, r in {1.1, 1.5, 2, 3}: matrix
// commutator ratio peaks at 0.87, the scalar series form at 2.03) and
// frozen with headroom
constexpr double kThm17RatioCap = 2.0;
constexpr double kGinliRatioCap = 2.5;

// A <= K (1 + theta A), K = c_theta alpha^{-1} dist, solved at
// theta* = min{1/4, alpha^2/4} after rescaling the triple (D, D0, alpha)
// so the perturbation norm is at most 1 (A is invariant under that)
struct Bootstrap {
    double theta_star = 0.0;
    double c_boot = 0.0;  // full inverse-estimate constant c_theta* / alpha
    double slack = 1.0;   // 1 - K theta*; the inequality is solvable iff > 0
    double a_bound = 0.0;
};

Bootstrap solve_bootstrap(double alpha, double dist) {
    const double s = std::max(1.0, dist);
    const double ap = alpha / s;
    const double dp = dist / s;
    Bootstrap b;
    b.theta_star = std::min(0.25, ap * ap / 4.0);
    b.c_boot = 2.0 * theta_multiplier_bound(b.theta_star) / ap;
    const double k = b.c_boot * dp;
    b.slack = 1.0 - k * b.theta_star;
    b.a_bound = b.slack > 0.0 ? k / b.slack : std::numeric_limits<double>::infinity();
    return b;
}

}  // namespace

double spectral_norm(const ScalarFunction& f, const HermitianOperator& d, const NormSpec& spec) {
    SingularValueSequence s;
    s.values.reserve(d.dim());
    for (double ev : d.eigenvalues()) s.values.push_back(std::abs(f.value(ev)));
    std::sort(s.values.begin(), s.values.end(), std::greater<double>());
    return norm_eval(s, spec);
}

EstimateReport verify_thm11(const HermitianOperator& d, const Matrix& a, double alpha,
                            const NormSpec& spec) {
    if (!(alpha > 0.0)) throw NonPositiveAlpha("verify_thm11: alpha must be positive");
    require_same_shape(d.matrix(), a, "verify_thm11");

    const Matrix fd = apply_function_sym(ScalarFunction::f_alpha(alpha), d).matrix();
    const double lhs = norm_eval(commutator(fd, a), spec);
    const double rhs = spectral_norm(ScalarFunction::h_alpha(alpha), d, spec) *
                       operator_norm(commutator(d.matrix(), a));

    EstimateReport rep;
    rep.id = "thm11";
    rep.n = static_cast<int>(d.dim());
    rep.norm = spec.to_string();
    rep.params["alpha"] = alpha;
    rep.notes = "constant: proof chain";
    rep.finalize(lhs, rhs, sign_chain_constant());
    return rep;
}

EstimateReport verify_cor12(const HermitianOperator& d, const Matrix& a, double p) {
    if (!(p >= 1.0)) throw InvalidParameter("verify_cor12: p must be at least 1");
    require_invertible(d, "verify_cor12");
    require_same_shape(d.matrix(), a, "verify_cor12");
    const NormSpec spec = NormSpec::schatten(p);

    const Matrix comm_sgn = commutator(apply_function_sym(ScalarFunction::sign(), d).matrix(), a);
    const double lhs = norm_eval(comm_sgn, spec);
    const ScalarFunction abs_inv = ScalarFunction::custom(
        "abs_inverse", [](double t) { return 1.0 / std::abs(t); },
        [](double t) { return (t > 0.0 ? -1.0 : 1.0) / (t * t); });
    const double rhs =
        spectral_norm(abs_inv, d, spec) * operator_norm(commutator(d.matrix(), a));

    // [f_alpha(D), a] -> [sgn D, a] along alpha = 2^{-k}
    double e_first = 0.0, e_prev = 0.0, e_last = 0.0;
    double alpha_last = 1.0;
    bool monotone = true;
    for (int k = 0; k <= 20; ++k) {
        const double alpha = std::ldexp(1.0, -k);
        const Matrix comm =
            commutator(apply_function_sym(ScalarFunction::f_alpha(alpha), d).matrix(), a);
        const double e = norm_eval(comm - comm_sgn, spec);
        if (k == 0)
            e_first = e;
        else if (e > e_prev + 1e-12 * (1.0 + e_first))
            monotone = false;
        e_prev = e;
        e_last = e;
        alpha_last = alpha;
    }

    // |f_alpha(t) - sgn t| <= alpha^2 / (2 t^2) certifies the limit
    const double aa = alpha_last * alpha_last;
    const ScalarFunction tail = ScalarFunction::custom(
        "sign_tail", [aa](double t) { return aa / (2.0 * t * t); },
        [aa](double t) { return -aa / (t * t * t); });
    const double envelope = 2.0 * operator_norm(a) * spectral_norm(tail, d, spec);

    EstimateReport rep;
    rep.id = "cor12";
    rep.n = static_cast<int>(d.dim());
    rep.norm = spec.to_string();
    rep.params["p"] = p;
    rep.params["e_first"] = e_first;
    rep.params["e_last"] = e_last;
    rep.params["alpha_last"] = alpha_last;
    rep.params["tail_envelope"] = envelope;
    rep.finalize(lhs, rhs, sign_chain_constant());
    if (!monotone) {
        rep.pass = false;
        rep.notes = "smoothed-sign convergence not monotone";
    } else if (e_last > envelope + 1e-12 * (1.0 + envelope)) {
        rep.pass = false;
        rep.notes = "smoothed-sign tail above its envelope";
    } else {
        rep.notes = "constant: proof chain";
    }
    return rep;
}

EstimateReport verify_thm13(const HermitianOperator& d0, const HermitianOperator& d, double alpha,
                            double theta, const NormSpec& spec) {
    if (!(alpha > 0.0)) throw InvalidParameter("verify_thm13: alpha must be positive");
    if (!(theta > 0.0) || !(theta < 1.0))
        throw InvalidParameter("verify_thm13: theta must lie in (0,1)");
    require_same_shape(d0.matrix(), d.matrix(), "verify_thm13");

    const ScalarFunction f = ScalarFunction::f_alpha(alpha);
    const ScalarFunction h = ScalarFunction::h_alpha(alpha);
    const double lhs =
        norm_eval(apply_function_sym(f, d).matrix() - apply_function_sym(f, d0).matrix(), spec);
    const double rhs = std::pow(spectral_norm(h, d0, spec), 1.0 - theta) *
                       std::pow(spectral_norm(h, d, spec), theta) *
                       operator_norm(d.matrix() - d0.matrix());

    EstimateReport rep;
    rep.id = "thm13";
    rep.n = static_cast<int>(d.dim());
    rep.norm = spec.to_string();
    rep.params["alpha"] = alpha;
    rep.params["theta"] = theta;
    rep.params["scaling_sup"] = theta_scaling_sup();
    rep.finalize(lhs, rhs, 3.0 * theta_multiplier_bound(theta));
    if (theta_scaling_sup() > kThetaScalingCap) {
        rep.pass = false;
        rep.notes = "constant growth law violated";
    } else {
        rep.notes = "constant: proof chain";
    }
    return rep;
}

EstimateReport verify_thm14(const HermitianOperator& d0, const HermitianOperator& d, double alpha,
                            double theta, const NormSpec& spec) {
    if (!(alpha > 0.0)) throw InvalidParameter("verify_thm14: alpha must be positive");
    if (!(theta > 0.0) || !(theta < 1.0))
        throw InvalidParameter("verify_thm14: theta must lie in (0,1)");
    require_same_shape(d0.matrix(), d.matrix(), "verify_thm14");

    const ScalarFunction h = ScalarFunction::h_alpha(alpha);
    const double lhs =
        norm_eval(apply_function_sym(h, d).matrix() - apply_function_sym(h, d0).matrix(), spec);
    const double rhs = std::pow(spectral_norm(h, d0, spec), 1.0 - theta) *
                       std::pow(spectral_norm(h, d, spec), theta) *
                       operator_norm(d.matrix() - d0.matrix());

    EstimateReport rep;
    rep.id = "thm14";
    rep.n = static_cast<int>(d.dim());
    rep.norm = spec.to_string();
    rep.params["alpha"] = alpha;
    rep.params["theta"] = theta;
    // prefactor (l+m)/(AB) splits into two one-sided products, each
    // bounded by 1/alpha
    rep.finalize(lhs, rhs, 2.0 * theta_multiplier_bound(theta) / alpha);
    rep.notes = "constant: proof chain";
    return rep;
}

EstimateReport verify_thm15(const HermitianOperator& d0, const HermitianOperator& d, double alpha,
                            const NormSpec& spec) {
    if (!(alpha > 0.0)) throw InvalidParameter("verify_thm15: alpha must be positive");
    require_same_shape(d0.matrix(), d.matrix(), "verify_thm15");

    const ScalarFunction h = ScalarFunction::h_alpha(alpha);
    const double lhs =
        norm_eval(apply_function_sym(h, d).matrix() - apply_function_sym(h, d0).matrix(), spec);
    const double dist = operator_norm(d.matrix() - d0.matrix());
    const double inv0 = spectral_norm(h, d0, spec);

    const Bootstrap b = solve_bootstrap(alpha, dist);
    const double constant = dist > 0.0 ? b.a_bound / dist : b.c_boot;

    EstimateReport rep;
    rep.id = "thm15";
    rep.n = static_cast<int>(d.dim());
    rep.norm = spec.to_string();
    rep.params["alpha"] = alpha;
    rep.params["A"] = inv0 > 0.0 ? lhs / inv0 : 0.0;
    rep.params["A_bound"] = b.a_bound;
    rep.params["slack"] = b.slack;
    rep.params["theta_star"] = b.theta_star;
    rep.finalize(lhs, inv0 * dist, constant);
    if (!(b.slack > 0.0)) {
        rep.pass = false;
        rep.notes = "bootstrap inequality unsolvable";
    } else {
        rep.notes = "constant: bootstrap solution";
    }
    return rep;
}

EstimateReport verify_thm16(const HermitianOperator& d0, const HermitianOperator& d, double alpha,
                            const NormSpec& spec) {
    if (!(alpha > 0.0)) throw InvalidParameter("verify_thm16: alpha must be positive");
    require_same_shape(d0.matrix(), d.matrix(), "verify_thm16");
    // recomputing the difference norm can round a few ulp past a cap that
    // was hit exactly, so the hypothesis check carries a small tolerance
    const double dist = operator_norm(d.matrix() - d0.matrix());
    if (dist > 1.0 + 1e-10) throw PreconditionError("verify_thm16: requires ||D - D0|| <= 1");

    const ScalarFunction f = ScalarFunction::f_alpha(alpha);
    const double lhs =
        norm_eval(apply_function_sym(f, d).matrix() - apply_function_sym(f, d0).matrix(), spec);
    const double root = std::max(1.0, 1.0 / std::sqrt(alpha));
    const double rhs = root * spectral_norm(ScalarFunction::h_alpha(alpha), d0, spec) * dist;

    // half-point interpolation with ||Delta_alpha^{-1}|| inflated to
    // (1 + A_bound) ||Delta_{0,alpha}^{-1}|| via the bootstrap
    const Bootstrap b = solve_bootstrap(alpha, dist);
    const double constant = sign_chain_constant() * std::sqrt(1.0 + b.a_bound) / root;

    EstimateReport rep;
    rep.id = "thm16";
    rep.n = static_cast<int>(d.dim());
    rep.norm = spec.to_string();
    rep.params["alpha"] = alpha;
    rep.params["A_bound"] = b.a_bound;
    rep.params["slack"] = b.slack;
    rep.finalize(lhs, rhs, constant);
    if (!(b.slack > 0.0)) {
        rep.pass = false;
        rep.notes = "bootstrap inequality unsolvable";
    } else {
        rep.notes = "constant: proof chain";
    }
    return rep;
}

EstimateReport verify_cor22(const HermitianOperator& d0, const HermitianOperator& d,
                            const NormSpec& spec) {
    EstimateReport rep = verify_thm16(d0, d, 1.0, spec);
    rep.id = "cor22";
    return rep;
}

EstimateReport verify_thm17(const HermitianOperator& d, const Matrix& a, double p, double r) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw InvalidParameter("verify_thm17: p must lie in [1, inf)");
    if (!(r > 1.0)) throw InvalidParameter("verify_thm17: r must exceed 1");
    require_same_shape(d.matrix(), a, "verify_thm17");
    const NormSpec spec = NormSpec::schatten(p);

    const double half_r = 0.5 * r;
    const ScalarFunction bt = ScalarFunction::custom(
        "d_delta_power", [half_r](double t) { return t * std::pow(1.0 + t * t, -half_r); },
        [half_r, r](double t) {
            return std::pow(1.0 + t * t, -half_r - 1.0) * (1.0 + (1.0 - r) * t * t);
        });
    const double lhs = norm_eval(commutator(apply_function_sym(bt, d).matrix(), a), spec);

    const double w = spectral_norm(ScalarFunction::h_alpha(1.0), d, NormSpec::weak_lp(p));
    const double pr = std::pow(p * (r - 1.0), -1.0 / p);
    const double q = 0.5 * (r + 1.0);  // r - epsilon at epsilon = (r - 1)/2
    const double envelope =
        std::max(1.0, pr * std::pow(w, q)) * operator_norm(commutator(d.matrix(), a));

    // scalar series form of the same envelope on the spectrum itself
    double sum = 0.0;
    for (double ev : d.eigenvalues()) sum += std::pow(1.0 + ev * ev, -0.5 * q * p);
    const double ginli_lhs = std::pow(sum, 1.0 / p);
    const double ginli_rhs = std::max(1.0, pr * std::pow(w, q));

    EstimateReport rep;
    rep.id = "thm17";
    rep.n = static_cast<int>(d.dim());
    rep.norm = spec.to_string();
    rep.params["p"] = p;
    rep.params["r"] = r;
    rep.params["weak_norm"] = w;
    rep.params["ginli_lhs"] = ginli_lhs;
    rep.params["ginli_rhs"] = ginli_rhs;
    rep.finalize(lhs, envelope, kThm17RatioCap);
    if (ginli_lhs > kGinliRatioCap * ginli_rhs + 1e-9 * (1.0 + ginli_rhs)) {
        rep.pass = false;
        rep.notes = "scalar series bound exceeded";
    } else {
        rep.notes = "constant: stored regression baseline";
    }
    return rep;
}

EstimateReport ginli_scalar_check(double p, double r, std::size_t n) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw InvalidParameter("ginli_scalar_check: p must lie in [1, inf)");
    if (!(r > 1.0)) throw InvalidParameter("ginli_scalar_check: r must exceed 1");
    if (n < 2) throw InvalidParameter("ginli_scalar_check: need at least 2 terms");

    const double q = 0.5 * (r + 1.0);
    double w = 0.0;
    double sum = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double root = std::pow(static_cast<double>(k), 1.0 / p);  // lambda_k
        const double inv = 1.0 / std::sqrt(1.0 + root * root);
        w = std::max(w, root * inv);
        sum += std::pow(inv, q * p);
    }
    const double lhs = std::pow(sum, 1.0 / p);
    const double rhs = std::max(1.0, std::pow(p * (r - 1.0), -1.0 / p) * std::pow(w, q));

    EstimateReport rep;
    rep.id = "ginli";
    rep.n = static_cast<int>(n);
    rep.norm = NormSpec::schatten(p).to_string();
    rep.params["p"] = p;
    rep.params["r"] = r;
    rep.params["weak_norm"] = w;
    rep.finalize(lhs, rhs, kGinliRatioCap);
    rep.notes = "scalar series on the spectrum k^{1/p}";
    return rep;
}

namespace {

// difference quotients of t -> f(D0 + tG) against the Schur-form derivative
class FdCurve {
public:
    FdCurve(const HermitianOperator& d0, const Matrix& g, const NormSpec& spec)
        : d0_(d0),
          g_(g),
          spec_(spec),
          f_(ScalarFunction::main_f()),
          f0_(apply_function_sym(f_, d0).matrix()),
          h_(DoiOperator(Kernel::divided_difference_of(f_), d0, d0).apply(g)) {}

    OrderCurve at(double t) const {
        const Matrix fp = apply_function_sym(f_, HermitianOperator(d0_.matrix() + t * g_)).matrix();
        const Matrix fm = apply_function_sym(f_, HermitianOperator(d0_.matrix() - t * g_)).matrix();
        OrderCurve pt;
        pt.t = t;
        pt.one_sided = norm_eval((1.0 / t) * (fp - f0_) - h_, spec_);
        pt.central = norm_eval((0.5 / t) * (fp - fm) - h_, spec_);
        return pt;
    }

    double reference_scale() const { return 1.0 + norm_eval(f0_, spec_) + norm_eval(h_, spec_); }

private:
    HermitianOperator d0_;
    Matrix g_;
    NormSpec spec_;
    ScalarFunction f_;
    Matrix f0_;
    Matrix h_;
};

constexpr double kMinStep = 1e-8;
constexpr double kOrderLow = 0.35;
constexpr double kOrderHigh = 0.65;

// worst violation of {one-sided ratio in [low, high], central ratio <= low}
// over the three consecutive halvings starting at `first`
double window_score(const std::vector<OrderCurve>& curve, std::size_t first) {
    double score = 0.0;
    for (std::size_t j = first; j < first + 3; ++j) {
        const double den = curve[j].one_sided;
        const double cden = curve[j].central;
        const double ratio = den > 0.0 ? curve[j + 1].one_sided / den
                                       : std::numeric_limits<double>::infinity();
        const double cratio = cden > 0.0 ? curve[j + 1].central / cden
                                         : std::numeric_limits<double>::infinity();
        score = std::max({score, ratio / kOrderHigh, kOrderLow / ratio, cratio / kOrderLow});
    }
    return score;
}

}  // namespace

std::vector<OrderCurve> thm18_order_curve(const HermitianOperator& d0, const Matrix& g,
                                          const NormSpec& spec, std::size_t steps) {
    if (steps < 1) throw InvalidParameter("thm18_order_curve: need at least 1 step");
    require_same_shape(d0.matrix(), g, "thm18_order_curve");
    const FdCurve engine(d0, g, spec);
    std::vector<OrderCurve> curve;
    curve.reserve(steps);
    double t = 0.1;
    for (std::size_t k = 0; k < steps; ++k, t *= 0.5) {
        if (t < kMinStep) throw StepUnderflow("thm18_order_curve: step below 1e-8");
        curve.push_back(engine.at(t));
    }
    return curve;
}

EstimateReport verify_thm18(const HermitianOperator& d0, const Matrix& g, const NormSpec& spec,
                            std::size_t steps) {
    if (steps < 4) throw InvalidParameter("verify_thm18: need at least 4 steps for a window");
    require_same_shape(d0.matrix(), g, "verify_thm18");
    const FdCurve engine(d0, g, spec);

    EstimateReport rep;
    rep.id = "thm18";
    rep.n = static_cast<int>(d0.dim());
    rep.norm = spec.to_string();
    rep.params["steps"] = static_cast<double>(steps);

    // a window is three consecutive halvings with one-sided ratios inside
    // [0.35, 0.65] and central ratios at most 0.35; score <= 1 means found
    const double noise = 1e-12 * engine.reference_scale();
    std::vector<OrderCurve> curve;
    auto best = [&]() {
        double s = std::numeric_limits<double>::infinity();
        for (std::size_t w = 0; w + 3 < curve.size(); ++w) s = std::min(s, window_score(curve, w));
        return s;
    };
    auto all_noise = [&]() {
        return std::all_of(curve.begin(), curve.end(), [&](const OrderCurve& c) {
            return c.one_sided <= noise && c.central <= noise;
        });
    };
    double t = 0.1;
    for (std::size_t k = 0; k < steps; ++k, t *= 0.5) {
        if (t < kMinStep) {
            if (best() <= 1.0 || all_noise()) break;
            throw StepUnderflow("verify_thm18: step below 1e-8 before the order regime");
        }
        curve.push_back(engine.at(t));
    }

    const bool trivial = all_noise();
    if (trivial) {
        rep.finalize(0.0, 1.0, 1.0);
        rep.notes = "difference quotients vanish to solver precision";
        return rep;
    }
    rep.params["window_score"] = best();
    rep.finalize(best(), 1.0, 1.0);
    rep.notes = rep.pass ? "order regime found" : "no three-halving order window";
    return rep;
}

EstimateReport verify_thm19(const HermitianOperator& d0, const Matrix& g, const Matrix& k,
                            const NormSpec& spec, std::size_t samples) {
    if (samples < 2) throw InvalidParameter("verify_thm19: need at least 2 samples");
    require_same_shape(d0.matrix(), g, "verify_thm19");
    require_same_shape(d0.matrix(), k, "verify_thm19");

    const ScalarFunction f = ScalarFunction::main_f();
    const Kernel psi = Kernel::divided_difference_of(f);
    const auto d_at = [&](double s) {
        return HermitianOperator(d0.matrix() + s * g + (0.5 * s * s) * k);
    };

    const double fd_step = 1e-4;
    double max_deriv = 0.0, max_fd = 0.0, lipschitz = 0.0;
    Matrix prev;
    for (std::size_t j = 0; j < samples; ++j) {
        const double s = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(samples - 1);
        const HermitianOperator ds = d_at(s);
        const Matrix deriv = DoiOperator(psi, ds, ds).apply(g + s * k);
        max_deriv = std::max(max_deriv, norm_eval(deriv, spec));

        const Matrix fp = apply_function_sym(f, d_at(s + fd_step)).matrix();
        const Matrix fm = apply_function_sym(f, d_at(s - fd_step)).matrix();
        max_fd = std::max(max_fd, norm_eval((0.5 / fd_step) * (fp - fm) - deriv, spec));

        if (j > 0) {
            const double gap = 2.0 / static_cast<double>(samples - 1);
            lipschitz = std::max(lipschitz, norm_eval(deriv - prev, spec) / gap);
        }
        prev = deriv;
    }

    EstimateReport rep;
    rep.id = "thm19";
    rep.n = static_cast<int>(d0.dim());
    rep.norm = spec.to_string();
    rep.params["samples"] = static_cast<double>(samples);
    rep.params["lipschitz"] = lipschitz;
    rep.params["max_fd_err"] = max_fd;
    rep.finalize(max_fd / (1.0 + max_deriv), 0.0, 1.0, 1e-5);
    if (!std::isfinite(lipschitz)) {
        rep.pass = false;
        rep.notes = "derivative path not Lipschitz on the sample grid";
    } else {
        rep.notes = "quadratic path, central-difference cross-check";
    }
    return rep;
}

}  // namespace doiforge
