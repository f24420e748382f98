#pragma once

#include <complex>
#include <string>
#include <vector>

namespace doiforge {

// Smooth partition of unity: chi0 = 1 on [-1,1], 0 outside [-2,2],
// built from sigma(x) = exp(-1/x) on x > 0.
double chi0(double t);
double chi1(double t);

enum class GFamilyKind {
    SechHalf,    // 1/(e^{t/2} + e^{-t/2})
    ThetaExp,    // 1/(e^{theta t} + e^{(theta-1) t})
    WeakLpChi0,  // chi0(t) (1 - e^{(1-r)t}) / (1 - e^t)
    WeakLpChi1,  // chi1(t) / (e^{t/2} - e^{-t/2})
};

class GFamily {
public:
    static GFamily sech_half();
    static GFamily theta_exp(double theta);
    static GFamily weak_lp_chi0(double r);
    static GFamily weak_lp_chi1();

    double value(double t) const;
    double derivative(double t) const;

    GFamilyKind kind() const { return kind_; }
    double param() const { return param_; }
    std::string name() const;

    // slowest exponential decay rate of |g| (0 means compactly supported)
    double decay_rate() const;
    bool compact_support() const { return kind_ == GFamilyKind::WeakLpChi0; }

private:
    GFamily(GFamilyKind kind, double param) : kind_(kind), param_(param) {}
    GFamilyKind kind_;
    double param_;
};

struct QuadratureGrid {
    double t_half_width = 60.0;  // integrate g on [-L, L]
    double t_step = 0.01;
    double s_half_width = 40.0;  // tabulate ghat on [-S, S]
    double s_step = 0.01;
};

// widened t-window for slowly decaying families
QuadratureGrid default_grid(const GFamily& g);

// Symmetric Fourier convention on both legs:
//   ghat(s) = (2 pi)^{-1/2} \int g(t) e^{-ist} dt,
//   g(t)    = (2 pi)^{-1/2} \int ghat(s) e^{ist} ds.
struct FourierProfile {
    GFamily family;
    QuadratureGrid grid;
    std::vector<double> s;                   // ascending, length 2*S/ds + 1
    std::vector<std::complex<double>> ghat;  // same length
    double l1_ghat = 0.0;
    double l2_g = 0.0;
    double l2_gprime = 0.0;
    double tail_mass_g = 0.0;   // estimated |g| mass beyond [-L, L]
    double tail_mass_ghat = 0.0;
    double total_l1_g = 0.0;

    // (2 pi)^{-1/2} \int ghat(s) e^{isx} ds, optionally truncated to |s| <= s_cut
    std::complex<double> synthesize(double x, double s_cut = -1.0) const;

    // multiplier-norm bound carried by this decomposition
    double doi_bound() const;
};

// Trapezoid transform of g; throws TailMassTooLarge when the estimated
// mass outside the grid exceeds 1e-6 of the total.
FourierProfile fourier_profile(const GFamily& g);
FourierProfile fourier_profile(const GFamily& g, const QuadratureGrid& grid);

// process-wide memoized profiles (profiles are pure functions of
// family + grid)
const FourierProfile& cached_profile(const GFamily& g);

// (2 pi)^{-1/2} ||ghat||_1 for the ThetaExp family, via quadrature of the
// closed-form transform modulus; fast enough for per-call use in sweeps
double theta_multiplier_bound(double theta);

}  // namespace doiforge
