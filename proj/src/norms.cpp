#include "doiforge/norms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "doiforge/errors.hpp"
#include "doiforge/spectral.hpp"

namespace doiforge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> sorted_abs_desc(std::vector<double> v) {
    for (auto& x : v) x = std::abs(x);
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

bool nearly_hermitian(const Matrix& t) {
    return t.square() && t.hermitian_defect() <= 1e-12 * (1.0 + t.max_abs_entry());
}

// shortest round-trip form, so parse(to_string(s)) == s
std::string format_param(double p) {
    if (p == kInf) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", p);
    for (int prec = 1; prec < 17; ++prec) {
        char c[32];
        std::snprintf(c, sizeof c, "%.*g", prec, p);
        if (std::stod(c) == p) return c;
    }
    return buf;
}

// eigenvalues of a PSD factor, clamped at zero; rejects genuinely
// indefinite input
HermitianOperator psd_factor(const Matrix& b, const char* where) {
    if (!b.square() || !nearly_hermitian(b))
        throw NonPositiveFactor(std::string(where) + ": factor not Hermitian");
    HermitianOperator h(b);
    const auto& dec = h.decomposition();
    const double scale = 1.0 + std::max(std::abs(dec.eigenvalues.front()),
                                        std::abs(dec.eigenvalues.back()));
    std::vector<double> clamped = dec.eigenvalues;
    for (auto& lam : clamped) {
        if (lam < -1e-10 * scale)
            throw NonPositiveFactor(std::string(where) + ": negative eigenvalue");
        lam = std::max(lam, 0.0);
    }
    return {dec.eigenvectors, clamped};
}

Matrix psd_power(const HermitianOperator& b, double x) {
    const auto& dec = b.decomposition();
    std::vector<double> powered(dec.eigenvalues.size());
    for (std::size_t k = 0; k < powered.size(); ++k)
        powered[k] = std::pow(dec.eigenvalues[k], x);
    return HermitianOperator(dec.eigenvectors, powered).matrix();
}

}  // namespace

NormSpec NormSpec::schatten(double p) {
    if (!(p >= 1.0))  // NaN fails too
        throw InvalidSpec("schatten: p must lie in [1, inf]");
    NormSpec s;
    s.kind_ = NormKind::Schatten;
    s.p_ = p;
    return s;
}

NormSpec NormSpec::weak_lp(double p) {
    if (!(p >= 1.0) || p == kInf) throw InvalidSpec("weak_lp: p must lie in [1, inf)");
    NormSpec s;
    s.kind_ = NormKind::WeakLp;
    s.p_ = p;
    return s;
}

NormSpec NormSpec::ky_fan(std::size_t k) {
    if (k == 0) throw InvalidSpec("ky_fan: k must be >= 1");
    NormSpec s;
    s.kind_ = NormKind::KyFan;
    s.k_ = k;
    return s;
}

NormSpec NormSpec::operator_norm() { return {}; }

NormSpec NormSpec::parse(const std::string& text) {
    if (text == "op") return operator_norm();
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw InvalidSpec("norm spec: expected kind:param or op");
    const std::string kind = text.substr(0, colon);
    const std::string arg = text.substr(colon + 1);
    try {
        if (kind == "schatten") return schatten(arg == "inf" ? kInf : std::stod(arg));
        if (kind == "weak") return weak_lp(std::stod(arg));
        if (kind == "kyfan") return ky_fan(static_cast<std::size_t>(std::stoul(arg)));
    } catch (const std::logic_error&) {
        throw InvalidSpec("norm spec: bad parameter in '" + text + "'");
    }
    throw InvalidSpec("norm spec: unknown kind '" + kind + "'");
}

std::string NormSpec::to_string() const {
    switch (kind_) {
        case NormKind::Schatten:
            return "schatten:" + format_param(p_);
        case NormKind::WeakLp:
            return "weak:" + format_param(p_);
        case NormKind::KyFan:
            return "kyfan:" + std::to_string(k_);
        case NormKind::OperatorNorm:
            return "op";
    }
    return "?";
}

double NormSpec::quasi_constant() const {
    return kind_ == NormKind::WeakLp ? std::pow(2.0, 1.0 / p_) : 1.0;
}

SingularValueSequence singular_values(const Matrix& t) {
    if (t.square()) {
        if (nearly_hermitian(t))
            return {sorted_abs_desc(jacobi_eigendecomposition(t.hermitian_part()).eigenvalues)};
        // skew-Hermitian commutators are common here: iT is Hermitian
        Matrix it = cplx(0.0, 1.0) * t;
        if (nearly_hermitian(it))
            return {sorted_abs_desc(jacobi_eigendecomposition(it.hermitian_part()).eigenvalues)};
    }
    const Matrix gram = t.rows() <= t.cols() ? t * t.adjoint() : t.adjoint() * t;
    auto eig = jacobi_eigendecomposition(gram.hermitian_part()).eigenvalues;
    for (auto& lam : eig) lam = std::sqrt(std::max(lam, 0.0));
    return {sorted_abs_desc(std::move(eig))};
}

double norm_eval(const SingularValueSequence& s, const NormSpec& spec) {
    const auto& v = s.values;
    switch (spec.kind()) {
        case NormKind::Schatten: {
            if (spec.p() == kInf) return v.empty() ? 0.0 : v.front();
            double acc = 0.0;
            for (double x : v) acc += std::pow(x, spec.p());
            return std::pow(acc, 1.0 / spec.p());
        }
        case NormKind::WeakLp: {
            double best = 0.0;
            for (std::size_t k = 0; k < v.size(); ++k)
                best = std::max(best, std::pow(static_cast<double>(k + 1), 1.0 / spec.p()) * v[k]);
            return best;
        }
        case NormKind::KyFan: {
            if (spec.k() > v.size()) throw InvalidSpec("ky_fan: k exceeds dimension");
            double acc = 0.0;
            for (std::size_t j = 0; j < spec.k(); ++j) acc += v[j];
            return acc;
        }
        case NormKind::OperatorNorm:
            return v.empty() ? 0.0 : v.front();
    }
    throw InvalidSpec("norm_eval: unknown kind");
}

double norm_eval(const Matrix& t, const NormSpec& spec) {
    return norm_eval(singular_values(t), spec);
}

double operator_norm(const Matrix& t) { return norm_eval(t, NormSpec::operator_norm()); }

SubmajorizationResult submajorization_check(const Matrix& f, const Matrix& g) {
    require_same_shape(f, g, "submajorization_check");
    const auto sf = singular_values(f);
    const auto sg = singular_values(g);
    SubmajorizationResult res;
    res.margins.resize(sf.size());
    res.dominated = true;
    double pf = 0.0, pg = 0.0;
    for (std::size_t k = 0; k < sf.size(); ++k) {
        pf += sf[k];
        pg += sg[k];
        res.margins[k] = pf - pg;
        if (res.margins[k] < -1e-10) res.dominated = false;
    }
    return res;
}

double two_convex_norm(const Matrix& t, const NormSpec& spec) {
    return std::sqrt(norm_eval(t.adjoint() * t, spec));
}

EstimateReport interpolation_bound_check(const Matrix& b0, const Matrix& a, const Matrix& b1,
                                         double theta, const NormSpec& spec) {
    if (!(theta >= 0.0 && theta <= 1.0))
        throw InvalidSpec("interpolation_bound_check: theta outside [0,1]");
    const HermitianOperator h0 = psd_factor(b0, "interpolation_bound_check");
    const HermitianOperator h1 = psd_factor(b1, "interpolation_bound_check");

    const Matrix sandwich = psd_power(h0, 1.0 - theta) * a * psd_power(h1, theta);
    const double lhs = norm_eval(sandwich, spec);
    const double rhs = std::pow(norm_eval(h0.matrix(), spec), 1.0 - theta) * operator_norm(a) *
                       std::pow(norm_eval(h1.matrix(), spec), theta);

    EstimateReport report;
    report.id = "interpolation_bound";
    report.n = static_cast<int>(a.rows());
    report.norm = spec.to_string();
    report.params["theta"] = theta;
    report.finalize(lhs, rhs, 1.0);
    return report;
}

}  // namespace doiforge
