#include "doiforge/scalar_function.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "doiforge/errors.hpp"

namespace doiforge {

namespace {

double hyp(double a, double t) { return std::sqrt(a * a + t * t); }

}  // namespace

ScalarFunction ScalarFunction::main_f() { return {ScalarFamily::MainF, "main_f", 0.0}; }

ScalarFunction ScalarFunction::f_alpha(double alpha) {
    if (!(alpha > 0.0)) throw NonPositiveAlpha("f_alpha: alpha must be positive");
    return {ScalarFamily::FAlpha, "f_alpha", alpha};
}

ScalarFunction ScalarFunction::h_alpha(double alpha) {
    if (!(alpha > 0.0)) throw NonPositiveAlpha("h_alpha: alpha must be positive");
    return {ScalarFamily::HAlpha, "h_alpha", alpha};
}

ScalarFunction ScalarFunction::power_one_minus_r(double r) {
    if (!(r > 1.0)) throw InvalidParameter("power_one_minus_r: requires r > 1");
    return {ScalarFamily::PowerOneMinusR, "power_one_minus_r", r};
}

ScalarFunction ScalarFunction::imag_power(double s) {
    return {ScalarFamily::ImagPower, "imag_power", s};
}

ScalarFunction ScalarFunction::quarter_power() {
    return {ScalarFamily::QuarterPower, "quarter_power", 0.0};
}

ScalarFunction ScalarFunction::sign() { return {ScalarFamily::Sign, "sign", 0.0}; }

ScalarFunction ScalarFunction::custom(std::string name,
                                      std::function<double(double)> value,
                                      std::function<double(double)> derivative) {
    ScalarFunction f{ScalarFamily::Custom, std::move(name), 0.0};
    f.custom_value_ = std::move(value);
    f.custom_derivative_ = std::move(derivative);
    return f;
}

ScalarFunction ScalarFunction::tabulated(std::string name,
                                         std::vector<double> grid,
                                         std::vector<double> values) {
    if (grid.size() != values.size() || grid.size() < 2)
        throw InvalidParameter("tabulated: grid/value lengths must match and exceed 1");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw InvalidParameter("tabulated: grid must be ascending");
    auto locate = [grid](double t) -> std::size_t {
        if (t < grid.front() || t > grid.back())
            throw DomainError("tabulated: argument outside table");
        auto it = std::upper_bound(grid.begin(), grid.end(), t);
        std::size_t hi = static_cast<std::size_t>(it - grid.begin());
        if (hi == grid.size()) --hi;
        if (hi == 0) ++hi;
        return hi;
    };
    auto val = [grid, values, locate](double t) {
        const std::size_t hi = locate(t);
        const double w = (t - grid[hi - 1]) / (grid[hi] - grid[hi - 1]);
        return values[hi - 1] + w * (values[hi] - values[hi - 1]);
    };
    auto der = [grid, values, locate](double t) {
        const std::size_t hi = locate(t);
        return (values[hi] - values[hi - 1]) / (grid[hi] - grid[hi - 1]);
    };
    return custom(std::move(name), val, der);
}

double ScalarFunction::value_real(double t) const {
    switch (family_) {
        case ScalarFamily::MainF:
            return t / hyp(1.0, t);
        case ScalarFamily::FAlpha:
            return t / hyp(param_, t);
        case ScalarFamily::HAlpha:
            return 1.0 / hyp(param_, t);
        case ScalarFamily::PowerOneMinusR:
            if (!(t > 0.0)) throw DomainError("power_one_minus_r: needs t > 0");
            return std::pow(t, 1.0 - param_);
        case ScalarFamily::QuarterPower:
            return std::exp(0.25 * std::log1p(t * t));
        case ScalarFamily::Sign:
            if (t == 0.0) throw DomainError("sign undefined at 0");
            return t > 0.0 ? 1.0 : -1.0;
        case ScalarFamily::Custom:
            return custom_value_(t);
        case ScalarFamily::ImagPower:
            break;
    }
    throw DomainError("value_real: complex-valued family");
}

double ScalarFunction::derivative_real(double t) const {
    switch (family_) {
        case ScalarFamily::MainF: {
            const double h = hyp(1.0, t);
            return 1.0 / (h * h * h);
        }
        case ScalarFamily::FAlpha: {
            const double h = hyp(param_, t);
            return param_ * param_ / (h * h * h);
        }
        case ScalarFamily::HAlpha: {
            const double h = hyp(param_, t);
            return -t / (h * h * h);
        }
        case ScalarFamily::PowerOneMinusR:
            if (!(t > 0.0)) throw DomainError("power_one_minus_r: needs t > 0");
            return (1.0 - param_) * std::pow(t, -param_);
        case ScalarFamily::QuarterPower:
            return 0.5 * t * std::exp(-0.75 * std::log1p(t * t));
        case ScalarFamily::Sign:
            if (t == 0.0) throw DomainError("sign undefined at 0");
            return 0.0;
        case ScalarFamily::Custom:
            return custom_derivative_(t);
        case ScalarFamily::ImagPower:
            break;
    }
    throw DomainError("derivative_real: complex-valued family");
}

std::complex<double> ScalarFunction::value(double t) const {
    if (family_ == ScalarFamily::ImagPower) {
        const double phase = 0.5 * param_ * std::log1p(t * t);
        return {std::cos(phase), std::sin(phase)};
    }
    return value_real(t);
}

std::complex<double> ScalarFunction::derivative(double t) const {
    if (family_ == ScalarFamily::ImagPower) {
        // d/dt (1+t^2)^{is/2} = i s t / (1+t^2) * (1+t^2)^{is/2}
        const std::complex<double> v = value(t);
        return std::complex<double>(0.0, param_ * t / (1.0 + t * t)) * v;
    }
    return derivative_real(t);
}

}  // namespace doiforge
