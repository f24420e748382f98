#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "doiforge/report.hpp"

using namespace doiforge;

TEST_CASE("finalize computes the verdict from its own fields") {
    EstimateReport r;
    r.id = "demo";
    r.finalize(1.0, 2.0, 1.0);
    CHECK(r.pass);
    CHECK(r.ratio == doctest::Approx(0.5));
    CHECK(r.tol == doctest::Approx(3e-9));
    CHECK(r.lhs <= r.constant_used * r.rhs + r.tol);

    EstimateReport bad;
    bad.finalize(3.0, 2.0, 1.0);
    CHECK(!bad.pass);

    EstimateReport zero;
    zero.finalize(0.0, 0.0, 1.0);
    CHECK(zero.pass);
    CHECK(zero.ratio == 0.0);
}

TEST_CASE("json lines round-trip all fields") {
    EstimateReport r;
    r.id = "thm11";
    r.trial = 17;
    r.seed = 42;
    r.n = 8;
    r.norm = "schatten:2";
    r.params["alpha"] = 0.25;
    r.params["theta"] = 0.5;
    r.notes = "proof-chain constant";
    r.finalize(1.25, 1.5, 1.5);

    const std::string line = r.to_json_line();
    EstimateReport back = EstimateReport::from_json_line(line);
    CHECK(back.id == r.id);
    CHECK(back.trial == r.trial);
    CHECK(back.seed == r.seed);
    CHECK(back.n == r.n);
    CHECK(back.norm == r.norm);
    CHECK(back.params.at("alpha") == r.params.at("alpha"));
    CHECK(back.params.at("theta") == r.params.at("theta"));
    CHECK(back.lhs == r.lhs);
    CHECK(back.rhs == r.rhs);
    CHECK(back.constant_used == r.constant_used);
    CHECK(back.ratio == r.ratio);
    CHECK(back.tol == r.tol);
    CHECK(back.pass == r.pass);
    CHECK(back.notes == r.notes);

    // serialization is deterministic: a second pass is byte-identical
    CHECK(back.to_json_line() == line);
}
