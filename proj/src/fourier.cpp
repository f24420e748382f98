#include "doiforge/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "doiforge/errors.hpp"

namespace doiforge {

namespace {

double sigma(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

// (1 - e^{(1-r)t}) / (1 - e^t), continued across t = 0 with value 1 - r
double power_quotient(double r, double t) {
    if (t == 0.0) return 1.0 - r;
    return std::expm1((1.0 - r) * t) / std::expm1(t);
}

// overflow-safe 1/(e^{a t} + e^{b t})
double two_exp_recip(double a, double b, double t) {
    const double m = std::max(a * t, b * t);
    return std::exp(-m) / (std::exp(a * t - m) + std::exp(b * t - m));
}

double two_exp_recip_derivative(double a, double b, double t) {
    const double m = std::max(a * t, b * t);
    const double ea = std::exp(a * t - m);
    const double eb = std::exp(b * t - m);
    const double g = std::exp(-m) / (ea + eb);
    return -g * (a * ea + b * eb) / (ea + eb);
}

double fd_derivative(const GFamily& g, double t) {
    const double h = 1e-3;
    return (-g.value(t + 2 * h) + 8.0 * g.value(t + h) - 8.0 * g.value(t - h) +
            g.value(t - 2 * h)) /
           (12.0 * h);
}

double trapezoid(const std::vector<double>& y, double step) {
    if (y.size() < 2) return 0.0;
    double acc = 0.5 * (y.front() + y.back());
    for (std::size_t k = 1; k + 1 < y.size(); ++k) acc += y[k];
    return acc * step;
}

}  // namespace

double chi0(double t) {
    const double a = sigma(2.0 - std::abs(t));
    const double b = sigma(std::abs(t) - 1.0);
    return a + b > 0.0 ? a / (a + b) : 0.0;
}

double chi1(double t) { return 1.0 - chi0(t); }

GFamily GFamily::sech_half() { return {GFamilyKind::SechHalf, 0.5}; }

GFamily GFamily::theta_exp(double theta) {
    if (!(theta > 0.0 && theta < 1.0))
        throw InvalidParameter("theta_exp: theta must lie in (0,1)");
    return {GFamilyKind::ThetaExp, theta};
}

GFamily GFamily::weak_lp_chi0(double r) {
    if (!(r > 1.0)) throw InvalidParameter("weak_lp_chi0: requires r > 1");
    return {GFamilyKind::WeakLpChi0, r};
}

GFamily GFamily::weak_lp_chi1() { return {GFamilyKind::WeakLpChi1, 0.0}; }

double GFamily::value(double t) const {
    switch (kind_) {
        case GFamilyKind::SechHalf:
            return two_exp_recip(0.5, -0.5, t);
        case GFamilyKind::ThetaExp:
            return two_exp_recip(param_, param_ - 1.0, t);
        case GFamilyKind::WeakLpChi0: {
            const double c = chi0(t);
            return c > 0.0 ? c * power_quotient(param_, t) : 0.0;
        }
        case GFamilyKind::WeakLpChi1: {
            const double c = chi1(t);  // vanishes on [-1,1], so sinh(t/2) != 0 below
            return c > 0.0 ? c / (2.0 * std::sinh(0.5 * t)) : 0.0;
        }
    }
    return 0.0;
}

double GFamily::derivative(double t) const {
    switch (kind_) {
        case GFamilyKind::SechHalf:
            return two_exp_recip_derivative(0.5, -0.5, t);
        case GFamilyKind::ThetaExp:
            return two_exp_recip_derivative(param_, param_ - 1.0, t);
        case GFamilyKind::WeakLpChi0:
        case GFamilyKind::WeakLpChi1:
            return fd_derivative(*this, t);
    }
    return 0.0;
}

std::string GFamily::name() const {
    switch (kind_) {
        case GFamilyKind::SechHalf:
            return "sech_half";
        case GFamilyKind::ThetaExp:
            return "theta_exp(" + std::to_string(param_) + ")";
        case GFamilyKind::WeakLpChi0:
            return "weak_lp_chi0(" + std::to_string(param_) + ")";
        case GFamilyKind::WeakLpChi1:
            return "weak_lp_chi1";
    }
    return "?";
}

double GFamily::decay_rate() const {
    switch (kind_) {
        case GFamilyKind::SechHalf:
        case GFamilyKind::WeakLpChi1:
            return 0.5;
        case GFamilyKind::ThetaExp:
            return std::min(param_, 1.0 - param_);
        case GFamilyKind::WeakLpChi0:
            return 0.0;
    }
    return 0.0;
}

QuadratureGrid default_grid(const GFamily& g) {
    QuadratureGrid grid;
    if (g.compact_support()) {
        // bump cutoffs are Gevrey, not analytic: |ghat| ~ e^{-c sqrt(s)},
        // so the s-window must be much wider to pass the 1e-6 tail check
        grid.t_half_width = 8.0;
        grid.s_half_width = 160.0;
    } else {
        // keep e^{-rate*L} below ~1e-7 so the tail estimate clears 1e-6
        grid.t_half_width = std::max(60.0, std::ceil(16.0 / g.decay_rate() / 10.0) * 10.0);
        if (g.kind() == GFamilyKind::WeakLpChi1) grid.s_half_width = 160.0;
    }
    return grid;
}

std::complex<double> FourierProfile::synthesize(double x, double s_cut) const {
    const double cut = s_cut < 0.0 ? grid.s_half_width : s_cut;
    std::size_t lo = 0, hi = s.size() - 1;
    while (lo < s.size() && s[lo] < -cut - 1e-12) ++lo;
    while (hi > 0 && s[hi] > cut + 1e-12) --hi;
    if (lo >= hi) return 0.0;

    const std::complex<double> step(std::cos(grid.s_step * x), std::sin(grid.s_step * x));
    std::complex<double> w(std::cos(s[lo] * x), std::sin(s[lo] * x));
    std::complex<double> acc = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) {
        const double weight = (j == lo || j == hi) ? 0.5 : 1.0;
        acc += weight * ghat[j] * w;
        w *= step;
    }
    return acc * (grid.s_step / std::sqrt(2.0 * std::numbers::pi));
}

double FourierProfile::doi_bound() const { return l1_ghat / std::sqrt(2.0 * std::numbers::pi); }

FourierProfile fourier_profile(const GFamily& g) { return fourier_profile(g, default_grid(g)); }

FourierProfile fourier_profile(const GFamily& g, const QuadratureGrid& grid) {
    const double L = grid.t_half_width, h = grid.t_step;
    const double S = grid.s_half_width, ds = grid.s_step;
    if (!(L > 0 && h > 0 && S > 0 && ds > 0) || L / h > 5e6)
        throw InvalidParameter("fourier_profile: bad quadrature grid");

    const std::size_t nt = static_cast<std::size_t>(std::lround(2.0 * L / h));
    std::vector<double> gv(nt + 1), gabs(nt + 1), g2(nt + 1), gp2(nt + 1);
    for (std::size_t k = 0; k <= nt; ++k) {
        const double t = -L + static_cast<double>(k) * h;
        const double v = g.value(t);
        const double d = g.derivative(t);
        gv[k] = v;
        gabs[k] = std::abs(v);
        g2[k] = v * v;
        gp2[k] = d * d;
    }

    FourierProfile prof{g, grid, {}, {}, 0, 0, 0, 0, 0, 0};
    prof.total_l1_g = trapezoid(gabs, h);
    prof.l2_g = std::sqrt(trapezoid(g2, h));
    prof.l2_gprime = std::sqrt(trapezoid(gp2, h));
    prof.tail_mass_g =
        g.compact_support() ? 0.0 : (gabs.front() + gabs.back()) / g.decay_rate();
    if (prof.tail_mass_g > 1e-6 * (prof.total_l1_g + prof.tail_mass_g))
        throw TailMassTooLarge("fourier_profile: |g| mass beyond t-grid above 1e-6");

    const std::size_t nhalf = static_cast<std::size_t>(std::lround(S / ds));
    prof.s.resize(2 * nhalf + 1);
    prof.ghat.resize(2 * nhalf + 1);
    const double scale = h / std::sqrt(2.0 * std::numbers::pi);
    for (std::size_t j = 0; j <= nhalf; ++j) {
        const double sj = static_cast<double>(j) * ds;
        // phasor recurrence over t_k = -L + k h for e^{-i s t}
        const std::complex<double> step(std::cos(sj * h), -std::sin(sj * h));
        std::complex<double> w(std::cos(sj * L), std::sin(sj * L));
        double acc_re = 0.0, acc_im = 0.0;
        for (std::size_t k = 0; k <= nt; ++k) {
            const double weight = (k == 0 || k == nt) ? 0.5 * gv[k] : gv[k];
            acc_re += weight * w.real();
            acc_im += weight * w.imag();
            w *= step;
        }
        const std::complex<double> value(scale * acc_re, scale * acc_im);
        prof.s[nhalf + j] = sj;
        prof.ghat[nhalf + j] = value;
        prof.s[nhalf - j] = -sj;
        prof.ghat[nhalf - j] = std::conj(value);  // g is real
    }

    std::vector<double> ghabs(prof.ghat.size());
    for (std::size_t j = 0; j < prof.ghat.size(); ++j) ghabs[j] = std::abs(prof.ghat[j]);
    prof.l1_ghat = trapezoid(ghabs, ds);

    // tail of |ghat| from the measured decay over the last tenth of the grid
    const double edge = ghabs.back();
    const double inner = ghabs[nhalf + static_cast<std::size_t>(std::lround(0.9 * nhalf))];
    if (edge > 0.0 && inner > edge) {
        const double rate = std::log(inner / edge) / (0.1 * S);
        prof.tail_mass_ghat = 2.0 * edge / rate;
    } else {
        prof.tail_mass_ghat = 2.0 * edge * S;
    }
    if (prof.tail_mass_ghat > 1e-6 * (prof.l1_ghat + prof.tail_mass_ghat))
        throw TailMassTooLarge("fourier_profile: |ghat| mass beyond s-grid above 1e-6");

    return prof;
}

const FourierProfile& cached_profile(const GFamily& g) {
    static std::mutex m;
    static std::map<std::string, FourierProfile> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(g.name());
    if (it == cache.end()) it = cache.emplace(g.name(), fourier_profile(g)).first;
    return it->second;
}

namespace {

template <typename F>
double simpson(const F& f, double a, double b, double target_h) {
    std::size_t n = static_cast<std::size_t>(std::ceil((b - a) / target_h));
    if (n < 2) n = 2;
    if (n % 2 == 1) ++n;
    const double h = (b - a) / static_cast<double>(n);
    double acc = f(a) + f(b);
    for (std::size_t k = 1; k < n; ++k)
        acc += (k % 2 == 1 ? 4.0 : 2.0) * f(a + h * static_cast<double>(k));
    return acc * h / 3.0;
}

}  // namespace

double theta_multiplier_bound(double theta) {
    if (!(theta > 0.0) || !(theta < 1.0))
        throw InvalidParameter("theta_multiplier_bound: theta must lie in (0,1)");

    // |ghat(s)| = sqrt(pi/2) / sqrt((cosh(2 pi s) - cos(2 pi theta)) / 2),
    // even in s, with an integrable spike of width w = min(theta, 1 - theta)
    // at the origin.  Substituting s = w sinh(u) on [0, 1] flattens the
    // spike (the integrand becomes O(1) uniformly in theta); [1, 12] is
    // smooth and the remainder beyond 12 is added in closed form.
    // cosh(2 pi s) - cos(2 pi theta) written as 2(sinh^2 + sin^2) to keep
    // full precision when both terms are tiny
    const double pi = std::numbers::pi;
    const double sn = std::sin(pi * theta);
    const auto modulus = [&](double s) {
        const double sh = std::sinh(pi * s);
        return std::sqrt(0.5 * pi / (sh * sh + sn * sn));
    };

    const double w = std::min(theta, 1.0 - theta);
    const auto peak = [&](double u) {
        return modulus(w * std::sinh(u)) * w * std::cosh(u);
    };
    const double peak_part = simpson(peak, 0.0, std::asinh(1.0 / w), 5e-4);
    const double outer_part = simpson(modulus, 1.0, 12.0, 5e-4);

    // for s >= 12, |ghat| ~ sqrt(2 pi) e^{-pi s}
    const double tail = std::sqrt(2.0 * pi) * std::exp(-12.0 * pi) / pi;

    const double l1 = 2.0 * (peak_part + outer_part + tail);
    return l1 / std::sqrt(2.0 * pi);
}

}  // namespace doiforge
