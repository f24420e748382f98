#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace doiforge {

enum class ScalarFamily {
    MainF,           // t (1+t^2)^{-1/2}
    FAlpha,          // t (a^2+t^2)^{-1/2}
    HAlpha,          // (a^2+t^2)^{-1/2}
    PowerOneMinusR,  // t^{1-r} on t > 0
    ImagPower,       // (1+t^2)^{is/2}, unitary-valued
    QuarterPower,    // (1+t^2)^{1/4}
    Sign,
    Custom,
};

// Scalar spectral functions with exact derivatives.  All families are
// real-valued except ImagPower, whose values lie on the unit circle.
class ScalarFunction {
public:
    static ScalarFunction main_f();
    static ScalarFunction f_alpha(double alpha);
    static ScalarFunction h_alpha(double alpha);
    static ScalarFunction power_one_minus_r(double r);
    static ScalarFunction imag_power(double s);
    static ScalarFunction quarter_power();
    static ScalarFunction sign();
    static ScalarFunction custom(std::string name,
                                 std::function<double(double)> value,
                                 std::function<double(double)> derivative);
    // piecewise-linear table on an ascending grid; derivative is the
    // segment slope
    static ScalarFunction tabulated(std::string name,
                                    std::vector<double> grid,
                                    std::vector<double> values);

    std::complex<double> value(double t) const;
    std::complex<double> derivative(double t) const;

    // real-valued families only
    double value_real(double t) const;
    double derivative_real(double t) const;

    bool real_valued() const { return family_ != ScalarFamily::ImagPower; }
    ScalarFamily family() const { return family_; }
    const std::string& name() const { return name_; }
    double param() const { return param_; }

private:
    ScalarFunction(ScalarFamily fam, std::string name, double param)
        : family_(fam), name_(std::move(name)), param_(param) {}

    ScalarFamily family_;
    std::string name_;
    double param_ = 0.0;
    std::function<double(double)> custom_value_;
    std::function<double(double)> custom_derivative_;
};

}  // namespace doiforge
