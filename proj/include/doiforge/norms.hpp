#pragma once

#include <string>
#include <vector>

#include "doiforge/complex_matrix.hpp"
#include "doiforge/report.hpp"

namespace doiforge {

struct SingularValueSequence {
    std::vector<double> values;  // non-increasing, >= 0

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t k) const { return values[k]; }
};

enum class NormKind { Schatten, WeakLp, KyFan, OperatorNorm };

// Symmetric-norm catalog: Schatten(p), weak L^p (max_k k^{1/p} s_k, a
// quasi-norm), Ky Fan(k), operator norm.
class NormSpec {
public:
    static NormSpec schatten(double p);
    static NormSpec weak_lp(double p);
    static NormSpec ky_fan(std::size_t k);
    static NormSpec operator_norm();

    // "schatten:p" | "weak:p" | "kyfan:k" | "op"
    static NormSpec parse(const std::string& text);
    std::string to_string() const;

    NormKind kind() const { return kind_; }
    double p() const { return p_; }
    std::size_t k() const { return k_; }

    // triangle inequality holds exactly (not just up to a quasi-constant)
    bool is_genuine_norm() const { return kind_ != NormKind::WeakLp; }
    // quasi-triangle constant: 2^{1/p} for weak L^p, 1 otherwise
    double quasi_constant() const;

private:
    NormKind kind_ = NormKind::OperatorNorm;
    double p_ = 0.0;
    std::size_t k_ = 0;
};

SingularValueSequence singular_values(const Matrix& t);

double norm_eval(const SingularValueSequence& s, const NormSpec& spec);
double norm_eval(const Matrix& t, const NormSpec& spec);
double operator_norm(const Matrix& t);

struct SubmajorizationResult {
    bool dominated = false;
    // margins[k] = sum_{j<=k+1} s_j(F) - s_j(G); dominated iff all >= -1e-10
    std::vector<double> margins;
};

SubmajorizationResult submajorization_check(const Matrix& f, const Matrix& g);

// || |T|^2 ||_E^{1/2}
double two_convex_norm(const Matrix& t, const NormSpec& spec);

// Lemma-style interpolation: ||B0^{1-theta} A B1^theta||_E
//   <= ||B0||_E^{1-theta} ||A||_op ||B1||_E^theta
EstimateReport interpolation_bound_check(const Matrix& b0, const Matrix& a, const Matrix& b1,
                                         double theta, const NormSpec& spec);

}  // namespace doiforge
