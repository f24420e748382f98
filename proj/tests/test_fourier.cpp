#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "doiforge/errors.hpp"
#include "doiforge/fourier.hpp"

using namespace doiforge;

namespace {

// Independent oracle: Simpson quadrature of the closed-form transform
// sqrt(pi/2) sech(pi s) over [0, 30], doubled.
double sech_transform_l1_oracle() {
    const double a = 0.0, b = 30.0;
    const std::size_t n = 60000;  // even
    const double h = (b - a) / n;
    auto f = [](double s) {
        return std::sqrt(std::numbers::pi / 2.0) / std::cosh(std::numbers::pi * s);
    };
    double acc = f(a) + f(b);
    for (std::size_t k = 1; k < n; ++k) acc += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
    return 2.0 * acc * h / 3.0;
}

double analytic_theta_ghat_abs(double theta, double s) {
    // |sech(pi s + i pi (1/2 - theta))| via |cosh|^2 = (cosh 2a + cos 2b)/2
    const double a = std::numbers::pi * s;
    const double b = std::numbers::pi * (0.5 - theta);
    const double mod2 = 0.5 * (std::cosh(2.0 * a) + std::cos(2.0 * b));
    return std::sqrt(std::numbers::pi / 2.0) / std::sqrt(mod2);
}

}  // namespace

TEST_CASE("chi cutoffs form a smooth partition of unity") {
    for (double t : {-0.9, -0.5, 0.0, 0.3, 1.0}) CHECK(chi0(t) == doctest::Approx(1.0));
    for (double t : {-2.0, -2.5, 2.0, 3.0, 50.0}) CHECK(chi0(t) == doctest::Approx(0.0));
    for (double t = -3.0; t <= 3.0; t += 0.05) {
        CHECK(chi0(t) + chi1(t) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(chi0(t) >= 0.0);
        CHECK(chi0(t) <= 1.0);
        CHECK(chi0(t) == doctest::Approx(chi0(-t)).epsilon(1e-14));
    }
    // strictly between on the transition band
    CHECK(chi0(1.5) > 0.0);
    CHECK(chi0(1.5) < 1.0);
}

TEST_CASE("g family closed values and validation") {
    auto g = GFamily::sech_half();
    CHECK(g.value(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g.value(2.0) == doctest::Approx(1.0 / (std::exp(1.0) + std::exp(-1.0))));
    CHECK(g.value(700.0) >= 0.0);  // no overflow far out

    auto gt = GFamily::theta_exp(0.5);
    for (double t = -30.0; t <= 30.0; t += 0.37) CHECK(gt.value(t) == g.value(t));

    CHECK_THROWS_AS(GFamily::theta_exp(0.0), InvalidParameter);
    CHECK_THROWS_AS(GFamily::theta_exp(1.0), InvalidParameter);
    CHECK_THROWS_AS(GFamily::weak_lp_chi0(1.0), InvalidParameter);
}

TEST_CASE("analytic derivatives agree with central differences") {
    const double h = 1e-5;
    for (const auto& g : {GFamily::sech_half(), GFamily::theta_exp(0.2)}) {
        for (double t : {-7.0, -1.0, 0.0, 0.4, 3.0, 12.0}) {
            const double fd = (g.value(t + h) - g.value(t - h)) / (2.0 * h);
            CHECK(g.derivative(t) == doctest::Approx(fd).epsilon(1e-7));
        }
    }
}

TEST_CASE("sech transform: L1 mass against the analytic oracle") {
    const auto& prof = cached_profile(GFamily::sech_half());
    const double oracle = sech_transform_l1_oracle();
    CHECK(oracle == doctest::Approx(std::sqrt(std::numbers::pi / 2.0)).epsilon(1e-9));
    CHECK(prof.l1_ghat == doctest::Approx(oracle).epsilon(1e-4 / oracle));
    CHECK(prof.doi_bound() == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("sech transform: pointwise values match the closed form") {
    const auto& prof = cached_profile(GFamily::sech_half());
    for (double s : {0.0, 0.25, 0.5, 1.0, 2.0}) {
        const std::size_t j =
            static_cast<std::size_t>(std::lround((s + prof.grid.s_half_width) /
                                                 prof.grid.s_step));
        const double expected = std::sqrt(std::numbers::pi / 2.0) /
                                std::cosh(std::numbers::pi * s);
        CHECK(std::abs(prof.ghat[j].real() - expected) < 1e-8);
        CHECK(std::abs(prof.ghat[j].imag()) < 1e-8);
    }
}

TEST_CASE("theta family transform matches its analytic continuation") {
    const auto& prof = cached_profile(GFamily::theta_exp(0.3));
    for (double s : {0.0, 0.5, 1.5}) {
        const std::size_t j =
            static_cast<std::size_t>(std::lround((s + prof.grid.s_half_width) /
                                                 prof.grid.s_step));
        CHECK(std::abs(std::abs(prof.ghat[j]) - analytic_theta_ghat_abs(0.3, s)) < 1e-6);
    }
}

TEST_CASE("Fourier-side mass dominates under the L2 cross-check for all families") {
    const std::vector<GFamily> families = {GFamily::sech_half(), GFamily::theta_exp(0.25),
                                           GFamily::weak_lp_chi0(2.0),
                                           GFamily::weak_lp_chi1()};
    for (const auto& g : families) {
        const auto& prof = cached_profile(g);
        CHECK(prof.l1_ghat <= std::numbers::sqrt2 * (prof.l2_g + prof.l2_gprime) + 1e-6);
        CHECK(prof.tail_mass_g <= 1e-6 * (prof.total_l1_g + prof.tail_mass_g));
        CHECK(prof.tail_mass_ghat <= 1e-6 * (prof.l1_ghat + prof.tail_mass_ghat));
        CHECK(prof.l1_ghat > 0.0);
    }
}

TEST_CASE("synthesis inverts the transform") {
    const auto& prof = cached_profile(GFamily::sech_half());
    for (double x : {0.0, -1.0, 1.3, 2.0, 5.0}) {
        const auto back = prof.synthesize(x);
        CHECK(std::abs(back.real() - GFamily::sech_half().value(x)) < 1e-6);
        CHECK(std::abs(back.imag()) < 1e-9);
    }
    const auto& chi1prof = cached_profile(GFamily::weak_lp_chi1());
    for (double x : {0.0, 0.5, 1.7, 3.0}) {
        CHECK(std::abs(chi1prof.synthesize(x).real() -
                       GFamily::weak_lp_chi1().value(x)) < 1e-6);
    }
}

TEST_CASE("theta profiles: identical at one half, L2 mass scales like theta^{-1/2}") {
    const auto& half = cached_profile(GFamily::theta_exp(0.5));
    const auto& sech = cached_profile(GFamily::sech_half());
    CHECK(half.l1_ghat == doctest::Approx(sech.l1_ghat).epsilon(1e-12));
    CHECK(half.l2_g == doctest::Approx(sech.l2_g).epsilon(1e-12));

    // least-squares slope of log(l2_g + l2_gprime) against log(theta)
    const std::vector<double> thetas = {0.05, 0.1, 0.2, 0.3, 0.4, 0.5};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double th : thetas) {
        const auto& p = cached_profile(GFamily::theta_exp(th));
        const double x = std::log(th);
        const double y = std::log(p.l2_g + p.l2_gprime);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(thetas.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope > -0.6);
    CHECK(slope < -0.4);
}

TEST_CASE("grids that truncate real mass are rejected") {
    QuadratureGrid tiny;
    tiny.t_half_width = 5.0;  // e^{-2.5} tail on a rate-1/2 family
    tiny.t_step = 0.01;
    tiny.s_half_width = 10.0;
    tiny.s_step = 0.01;
    CHECK_THROWS_AS(fourier_profile(GFamily::sech_half(), tiny), TailMassTooLarge);

    QuadratureGrid bad;
    bad.t_step = -1.0;
    CHECK_THROWS_AS(fourier_profile(GFamily::sech_half(), bad), InvalidParameter);
}

TEST_CASE("closed-form theta multiplier bound matches the matrix profile") {
    // sech family: integral of sqrt(pi/2) sech(pi s) is exactly sqrt(pi/2),
    // so the bound at theta = 1/2 is exactly 1/2
    CHECK(theta_multiplier_bound(0.5) == doctest::Approx(0.5).epsilon(1e-9));

    for (double th : {0.1, 0.3, 0.5, 0.7}) {
        const auto& prof = cached_profile(GFamily::theta_exp(th));
        CHECK(theta_multiplier_bound(th) ==
              doctest::Approx(prof.doi_bound()).epsilon(1e-5));
    }

    // symmetric in theta <-> 1 - theta, growing toward the endpoints
    CHECK(theta_multiplier_bound(0.2) ==
          doctest::Approx(theta_multiplier_bound(0.8)).epsilon(1e-9));
    CHECK(theta_multiplier_bound(0.01) > theta_multiplier_bound(0.1));
    CHECK(theta_multiplier_bound(0.1) > theta_multiplier_bound(0.5));

    CHECK_THROWS_AS(theta_multiplier_bound(0.0), InvalidParameter);
    CHECK_THROWS_AS(theta_multiplier_bound(1.0), InvalidParameter);
    CHECK_THROWS_AS(theta_multiplier_bound(-0.2), InvalidParameter);
}
