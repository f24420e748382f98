#include "doiforge/report.hpp"

#include <json.hpp>

namespace doiforge {

void EstimateReport::finalize(double lhs_value, double rhs_value, double constant,
                              double tol_scale) {
    lhs = lhs_value;
    rhs = rhs_value;
    constant_used = constant;
    tol = tol_scale * (1.0 + rhs_value);
    ratio = rhs_value > 0.0 ? lhs_value / rhs_value : 0.0;
    pass = lhs_value <= constant * rhs_value + tol;
}

std::string EstimateReport::to_json_line() const {
    nlohmann::ordered_json j;
    j["id"] = id;
    j["trial"] = trial;
    j["seed"] = seed;
    j["n"] = n;
    j["norm"] = norm;
    for (const auto& [key, value] : params) j[key] = value;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["constant"] = constant_used;
    j["ratio"] = ratio;
    j["tol"] = tol;
    j["pass"] = pass;
    j["notes"] = notes;
    return j.dump();
}

EstimateReport EstimateReport::from_json_line(const std::string& line) {
    const auto j = nlohmann::ordered_json::parse(line);
    EstimateReport r;
    r.id = j.at("id").get<std::string>();
    r.trial = j.at("trial").get<long>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.n = j.at("n").get<int>();
    r.norm = j.at("norm").get<std::string>();
    r.lhs = j.at("lhs").get<double>();
    r.rhs = j.at("rhs").get<double>();
    r.constant_used = j.at("constant").get<double>();
    r.ratio = j.at("ratio").get<double>();
    r.tol = j.at("tol").get<double>();
    r.pass = j.at("pass").get<bool>();
    r.notes = j.at("notes").get<std::string>();
    static const char* known[] = {"id", "trial", "seed", "n",   "norm", "lhs",
                                  "rhs", "constant", "ratio", "tol", "pass", "notes"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool fixed = false;
        for (const char* k : known) fixed = fixed || it.key() == k;
        if (!fixed) r.params[it.key()] = it.value().get<double>();
    }
    return r;
}

}  // namespace doiforge
