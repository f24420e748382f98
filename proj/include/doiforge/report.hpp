#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace doiforge {

// One verified estimate: lhs <= constant_used * rhs + tol, with tol scaled
// as tol_scale * (1 + rhs).  Everything needed to re-check the verdict is
// stored in the record itself.
struct EstimateReport {
    std::string id;
    long trial = 0;
    std::uint64_t seed = 0;
    int n = 0;
    std::string norm;
    std::map<std::string, double> params;
    double lhs = 0.0;
    double rhs = 0.0;
    double constant_used = 1.0;
    double ratio = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string notes;

    void finalize(double lhs_value, double rhs_value, double constant,
                  double tol_scale = 1e-9);

    std::string to_json_line() const;
    static EstimateReport from_json_line(const std::string& line);
};

}  // namespace doiforge
