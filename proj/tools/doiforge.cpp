// Command-line runner: configuration, sweep orchestration, concurrent trial
// fan-out, and report emission (JSON-lines records, CSV summaries, profile
// CSVs).  Every run is a pure function of (config, seed); see the README for
// the draw-order contract that makes reports byte-reproducible.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "doiforge/besov.hpp"
#include "doiforge/doi.hpp"
#include "doiforge/ensembles.hpp"
#include "doiforge/errors.hpp"
#include "doiforge/fourier.hpp"
#include "doiforge/harness.hpp"
#include "doiforge/kernels.hpp"
#include "doiforge/norms.hpp"
#include "doiforge/report.hpp"
#include "doiforge/rng.hpp"
#include "doiforge/scalar_function.hpp"
#include "doiforge/spectral.hpp"

namespace {

using namespace doiforge;

struct RunConfig {
    std::optional<std::uint64_t> seed;
    std::optional<long> trials;
    std::optional<int> n;
    std::optional<double> alpha;
    std::optional<double> theta;
    std::optional<double> p;
    std::optional<double> r;
    std::optional<double> tol;
    std::optional<std::string> norm;
    std::optional<unsigned> threads;
    std::string out = "reports";
    bool quick = false;
};

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
    try {
        if (key == "seed")
            cfg.seed = std::stoull(value);
        else if (key == "trials")
            cfg.trials = std::stol(value);
        else if (key == "n")
            cfg.n = std::stoi(value);
        else if (key == "alpha")
            cfg.alpha = std::stod(value);
        else if (key == "theta")
            cfg.theta = std::stod(value);
        else if (key == "p")
            cfg.p = std::stod(value);
        else if (key == "r")
            cfg.r = std::stod(value);
        else if (key == "tol")
            cfg.tol = std::stod(value);
        else if (key == "norm")
            cfg.norm = value;
        else if (key == "threads")
            cfg.threads = static_cast<unsigned>(std::stoul(value));
        else if (key == "out")
            cfg.out = value;
        else if (key == "quick")
            cfg.quick = (value == "true" || value == "1" || value == "yes");
        else
            throw ConfigError("unknown config key: " + key);
    } catch (const std::invalid_argument&) {
        throw ConfigError("bad value for config key " + key + ": " + value);
    } catch (const std::out_of_range&) {
        throw ConfigError("bad value for config key " + key + ": " + value);
    }
}

// key = value lines; '#' starts a comment; unknown keys are errors
void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("config line is not key = value: " + line);
        apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

void validate(const RunConfig& cfg) {
    if (cfg.trials && *cfg.trials < 1) throw ConfigError("trials must be at least 1");
    if (cfg.n && (*cfg.n < 2 || *cfg.n > 16)) throw ConfigError("n must lie in [2, 16]");
    if (cfg.alpha && !(*cfg.alpha > 0.0)) throw ConfigError("alpha must be positive");
    if (cfg.theta && !(*cfg.theta > 0.0 && *cfg.theta < 1.0))
        throw ConfigError("theta must lie in (0, 1)");
    if (cfg.p && !(*cfg.p >= 1.0)) throw ConfigError("p must be at least 1");
    if (cfg.r && !(*cfg.r > 1.0)) throw ConfigError("r must exceed 1");
    if (cfg.tol && !(*cfg.tol > 0.0)) throw ConfigError("tol must be positive");
    if (cfg.norm) NormSpec::parse(*cfg.norm);  // throws InvalidSpec on bad text
    if (cfg.threads && *cfg.threads < 1) throw ConfigError("threads must be at least 1");
}

unsigned thread_count(const RunConfig& cfg) {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (cfg.threads) n = std::min(n, *cfg.threads);
    if (const char* env = std::getenv("DOIFORGE_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

using Job = std::function<EstimateReport()>;

// index-addressed merge: outputs depend only on the job list, never on the
// thread count or completion order
std::vector<EstimateReport> run_jobs(const std::vector<Job>& jobs, unsigned threads) {
    std::vector<EstimateReport> out(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                out[i] = jobs[i]();
            } catch (const std::exception& e) {
                out[i].pass = false;
                out[i].notes = std::string("exception: ") + e.what();
            }
        }
    };
    const unsigned used = std::min<std::size_t>(threads, std::max<std::size_t>(1, jobs.size()));
    std::vector<std::thread> pool;
    for (unsigned k = 0; k + 1 < used; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

// fixed per-suite stream bases keep every trial's draws independent of all
// other suites and trials
constexpr std::uint64_t stream_of(int ordinal, long trial) {
    return (static_cast<std::uint64_t>(ordinal) << 32) | static_cast<std::uint64_t>(trial);
}

struct Sweep {
    RunConfig cfg;
    std::uint64_t seed = 0;

    long trials(long full) const {
        if (cfg.trials) return *cfg.trials;
        return cfg.quick ? std::max(1L, full / 10) : full;
    }
    int dim(long trial, int lo, int hi) const {
        if (cfg.n) return *cfg.n;
        return lo + static_cast<int>(trial % (hi - lo + 1));
    }
    double alpha_at(long trial, std::initializer_list<double> pool) const {
        if (cfg.alpha) return *cfg.alpha;
        return pool.begin()[trial % pool.size()];
    }
    double theta_at(long trial) const {
        static constexpr double pool[] = {0.1, 0.25, 0.5, 0.75, 0.9};
        if (cfg.theta) return *cfg.theta;
        return pool[trial % 5];
    }
    double p_at(long trial) const {
        static constexpr double pool[] = {1.0, 2.0, 3.0};
        if (cfg.p) return *cfg.p;
        return pool[trial % 3];
    }
    double r_at(long trial) const {
        static constexpr double pool[] = {1.1, 1.5, 2.0, 3.0};
        if (cfg.r) return *cfg.r;
        return pool[trial % 4];
    }
    NormSpec norm_at(long trial, std::initializer_list<const char*> pool) const {
        if (cfg.norm) return NormSpec::parse(*cfg.norm);
        return NormSpec::parse(pool.begin()[trial % pool.size()]);
    }
};

std::vector<Job> jobs_identity(const Sweep& sw) {
    std::vector<Job> jobs;
    for (long i = 0; i < sw.trials(500); ++i) {
        jobs.push_back([=] {
            Rng rng(sw.seed, stream_of(1, i));
            const int n = sw.dim(i, 2, 8);
            const auto d0 = gaussian_hermitian(rng, n);
            const auto d1 = gaussian_hermitian(rng, n);
            const double alpha = sw.alpha_at(i, {0.5, 1.0, 2.0});
            Kernel kernel = Kernel::constant({0.7, -0.4});
            switch (i % 5) {
                case 1: kernel = Kernel::left_function(ScalarFunction::h_alpha(1.0)); break;
                case 2: kernel = Kernel::right_function(ScalarFunction::f_alpha(0.5)); break;
                case 3: kernel = Kernel::psi_prime_alpha(alpha); break;
                case 4: kernel = Kernel::divided_difference_of(ScalarFunction::main_f()); break;
                default: break;
            }
            const DoiOperator t(kernel, d0, d1);
            return defining_identity_check(t, 2, rng.next_u64());
        });
    }
    return jobs;
}

std::vector<Job> jobs_thm3(const Sweep& sw) {
    std::vector<Job> jobs;
    for (long i = 0; i < sw.trials(1000); ++i) {
        jobs.push_back([=] {
            Rng rng(sw.seed, stream_of(2, i));
            const int n = sw.dim(i, 2, 8);
            const auto d0 = gaussian_hermitian(rng, n);
            const auto d1 = gaussian_hermitian(rng, n);
            const auto a = random_complex_matrix(rng, n, n);
            ScalarFunction f = ScalarFunction::main_f();
            if (i % 3 == 1) f = ScalarFunction::h_alpha(1.0);
            if (i % 3 == 2) f = ScalarFunction::f_alpha(0.5);
            return commutator_transfer_check(f, d0, d1, a);
        });
    }
    return jobs;
}

std::vector<Job> jobs_kernels(const Sweep&) {
    struct Row {
        FactorizationId id;
        const char* note;
        double param;
    };
    static const std::vector<Row> rows = {
        {FactorizationId::CommResultRep, "three-factor form of dd f_alpha", 0.5},
        {FactorizationId::CommResultRep, "three-factor form of dd f_alpha", 1.0},
        {FactorizationId::CommResultRep, "three-factor form of dd f_alpha", 2.0},
        {FactorizationId::PsiNotRepr, "homogeneous split of 1/(l+m)", 0.25},
        {FactorizationId::PsiNotRepr, "homogeneous split of 1/(l+m)", 0.5},
        {FactorizationId::PsiNotRepr, "homogeneous split of 1/(l+m)", 0.75},
        {FactorizationId::InverseResultTemp, "product form of dd h_alpha", 0.5},
        {FactorizationId::InverseResultTemp, "product form of dd h_alpha", 1.0},
        {FactorizationId::InverseResultTemp, "product form of dd h_alpha", 2.0},
        {FactorizationId::PsiResolution, "cutoff split of dd t^{1-r}", 1.5},
        {FactorizationId::PsiResolution, "cutoff split of dd t^{1-r}", 2.0},
        {FactorizationId::PsiResolution, "cutoff split of dd t^{1-r}", 3.0},
    };
    std::vector<Job> jobs;
    for (const auto& row : rows) {
        jobs.push_back([row] {
            const auto res = factorization_residual(row.id, row.param, 200);
            EstimateReport rep;
            rep.id = "kernels";
            rep.n = 200;
            rep.norm = "pointwise";
            rep.params["param"] = row.param;
            rep.params["points"] = static_cast<double>(res.points);
            rep.finalize(res.max_residual, res.max_abs_lhs, 0.0, 1e-9);
            rep.notes = row.note;
            return rep;
        });
    }
    return jobs;
}

std::vector<Job> jobs_fourier(const Sweep&) {
    std::vector<Job> jobs;
    jobs.push_back([] {
        const auto& prof = cached_profile(GFamily::sech_half());
        EstimateReport rep;
        rep.id = "fourier";
        rep.norm = "l1";
        rep.params["l1_ghat"] = prof.l1_ghat;
        rep.finalize(std::abs(prof.l1_ghat - 1.2533141), 0.0, 1.0, 1e-4);
        rep.notes = "transform mass of the sech profile vs the closed form";
        return rep;
    });
    const std::vector<GFamily> families = {GFamily::sech_half(), GFamily::theta_exp(0.25),
                                           GFamily::weak_lp_chi0(2.0), GFamily::weak_lp_chi1()};
    for (const auto& g : families) {
        jobs.push_back([g] {
            const auto& prof = cached_profile(g);
            EstimateReport rep;
            rep.id = "fourier";
            rep.norm = "l1";
            rep.params["l2_g"] = prof.l2_g;
            rep.params["l2_gprime"] = prof.l2_gprime;
            rep.finalize(prof.l1_ghat, std::numbers::sqrt2 * (prof.l2_g + prof.l2_gprime), 1.0,
                         1e-6);
            rep.notes = "L2 cross-check dominates the transform mass: " + g.name();
            return rep;
        });
    }
    jobs.push_back([] {
        const std::vector<double> thetas = {0.05, 0.1, 0.2, 0.3, 0.4, 0.5};
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (double th : thetas) {
            const auto& prof = cached_profile(GFamily::theta_exp(th));
            const double x = std::log(th);
            const double y = std::log(prof.l2_g + prof.l2_gprime);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double m = static_cast<double>(thetas.size());
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        EstimateReport rep;
        rep.id = "fourier";
        rep.norm = "l2";
        rep.params["slope"] = slope;
        rep.finalize(std::abs(slope + 0.5), 0.0, 1.0, 0.1);
        rep.notes = "theta scaling exponent of the L2 mass";
        return rep;
    });
    return jobs;
}

std::vector<Job> jobs_thm11(const Sweep& sw) {
    std::vector<Job> jobs;
    for (long i = 0; i < sw.trials(1000); ++i) {
        jobs.push_back([=] {
            Rng rng(sw.seed, stream_of(5, i));
            const int n = sw.dim(i, 2, 8);
            const auto d = gaussian_hermitian(rng, n);
            const auto a = random_complex_matrix(rng, n, n);
            const double alpha = sw.alpha_at(i, {0.25, 1.0, 4.0});
            auto spec = sw.norm_at(i, {"schatten:1", "schatten:2", "schatten:4", "kyfan:3", "op"});
            if (spec.kind() == NormKind::KyFan && spec.k() > static_cast<std::size_t>(n))
                spec = NormSpec::ky_fan(static_cast<std::size_t>(n));
            return verify_thm11(d, a, alpha, spec);
        });
    }
    return jobs;
}

std::vector<Job> jobs_cor12(const Sweep& sw) {
    std::vector<Job> jobs;
    for (long i = 0; i < sw.trials(50); ++i) {
        jobs.push_back([=] {
            Rng rng(sw.seed, stream_of(6, i));
            const int n = sw.dim(i, 4, 8);
            const double gap = 1e-3 * static_cast<double>(1 + i % 7);
            const auto d = clustered_spectrum(rng, n, gap);
            const auto a = random_complex_matrix(rng, n, n);
            return verify_cor12(d, a, sw.p_at(i));
        });
    }
    return jobs;
}

std::vector<Job> jobs_thm13_14(const Sweep& sw, int ordinal) {
    std::vector<Job> jobs;
    for (long i = 0; i < sw.trials(200); ++i) {
        jobs.push_back([=] {
            Rng rng(sw.seed, stream_of(ordinal, i));
            const int n = sw.dim(i, 2, 8);
            const auto d0 = gaussian_hermitian(rng, n);
            const auto d = gaussian_hermitian(rng, n);
            const double alpha = sw.alpha_at(i, {0.5, 1.0, 2.0});
            const double theta = sw.theta_at(i);
            const auto spec = sw.norm_at(i, {"schatten:1", "schatten:2", "op"});
            return ordinal == 7 ? verify_thm13(d0, d, alpha, theta, spec)
                                : verify_thm14(d0, d, alpha, theta, spec);
        });
    }
    return jobs;
}

std::vector<Job> jobs_thm15(const Sweep& sw) {
    std::vector<Job> jobs;
    for (long i = 0; i < sw.trials(200); ++i) {
        jobs.push_back([=] {
            Rng rng(sw.seed, stream_of(9, i));
            const int n = sw.dim(i, 2, 8);
            const auto d0 = gaussian_hermitian(rng, n);
            const auto d = gaussian_hermitian(rng, n);
            const double alpha = sw.alpha_at(i, {0.25, 0.5, 1.0, 2.0, 4.0});
            const auto spec = sw.norm_at(i, {"schatten:1", "schatten:2", "op"});
            return verify_thm15(d0, d, alpha, spec);
        });
    }
    return jobs;
}

std::vector<Job> jobs_thm16_cor22(const Sweep& sw, int ordinal) {
    std::vector<Job> jobs;
    for (long i = 0; i < sw.trials(200); ++i) {
        jobs.push_back([=] {
            Rng rng(sw.seed, stream_of(ordinal, i));
            const int n = sw.dim(i, 2, 8);
            const auto d0 = gaussian_hermitian(rng, n);
            const double cap = rng.uniform(0.05, 1.0);
            const auto d = HermitianOperator(d0.matrix() + bounded_perturbation(rng, n, cap));
            const double alpha = sw.alpha_at(i, {0.25, 1.0, 4.0});
            const auto spec = sw.norm_at(i, {"schatten:1", "schatten:2", "op"});
            return ordinal == 10 ? verify_thm16(d0, d, alpha, spec) : verify_cor22(d0, d, spec);
        });
    }
    return jobs;
}

std::vector<Job> jobs_thm17(const Sweep& sw) {
    std::vector<Job> jobs;
    for (double p : {1.0, 2.0, 3.0}) {
        for (double r : {1.1, 1.5, 2.0, 3.0}) {
            const double pp = sw.cfg.p.value_or(p);
            const double rr = sw.cfg.r.value_or(r);
            jobs.push_back([pp, rr] { return ginli_scalar_check(pp, rr); });
        }
    }
    for (long i = 0; i < sw.trials(200); ++i) {
        jobs.push_back([=] {
            Rng rng(sw.seed, stream_of(12, i));
            const int n = sw.dim(i, 4, 8);
            const auto d = gaussian_hermitian(rng, n);
            const auto a = random_complex_matrix(rng, n, n);
            return verify_thm17(d, a, sw.p_at(i), sw.r_at(i));
        });
    }
    return jobs;
}

std::vector<Job> jobs_thm18(const Sweep& sw) {
    std::vector<Job> jobs;
    for (long i = 0; i < sw.trials(100); ++i) {
        jobs.push_back([=] {
            Rng rng(sw.seed, stream_of(13, i));
            const int n = sw.dim(i, 2, 8);
            const auto d0 = gaussian_hermitian(rng, n);
            const auto g = gaussian_hermitian_matrix(rng, n);
            const auto spec = sw.norm_at(i, {"schatten:1", "schatten:2"});
            return verify_thm18(d0, g, spec);
        });
    }
    return jobs;
}

std::vector<Job> jobs_thm19(const Sweep& sw) {
    std::vector<Job> jobs;
    for (long i = 0; i < sw.trials(50); ++i) {
        jobs.push_back([=] {
            Rng rng(sw.seed, stream_of(14, i));
            const int n = sw.dim(i, 2, 8);
            const auto d0 = gaussian_hermitian(rng, n);
            const auto g = gaussian_hermitian_matrix(rng, n);
            const auto k = gaussian_hermitian_matrix(rng, n);
            const auto spec = sw.norm_at(i, {"schatten:2", "op"});
            return verify_thm19(d0, g, k, spec);
        });
    }
    return jobs;
}

std::vector<Job> jobs_besov(const Sweep& sw) {
    std::vector<Job> jobs;
    jobs.push_back([=] {
        const auto f = SampledFunction::from_function(ScalarFunction::main_f(), 100.0, 4001,
                                                      DecayClass::ConstantLimits);
        const double theta = sw.cfg.theta.value_or(0.5);
        const auto grid = log_s_grid(1e-3, 1e3, sw.cfg.quick ? 50 : 200);
        return besov_chain_check(f, theta, 1.0, grid);
    });
    return jobs;
}

const std::vector<std::string>& all_ids() {
    static const std::vector<std::string> ids = {
        "identity", "thm3",  "kernels", "fourier", "thm11", "cor12", "thm13", "thm14",
        "thm15",    "thm16", "cor22",   "thm17",   "thm18", "thm19", "besov"};
    return ids;
}

std::vector<Job> build_jobs(const std::string& id, const Sweep& sw) {
    if (id == "identity") return jobs_identity(sw);
    if (id == "thm3") return jobs_thm3(sw);
    if (id == "kernels") return jobs_kernels(sw);
    if (id == "fourier") return jobs_fourier(sw);
    if (id == "thm11") return jobs_thm11(sw);
    if (id == "cor12") return jobs_cor12(sw);
    if (id == "thm13") return jobs_thm13_14(sw, 7);
    if (id == "thm14") return jobs_thm13_14(sw, 8);
    if (id == "thm15") return jobs_thm15(sw);
    if (id == "thm16") return jobs_thm16_cor22(sw, 10);
    if (id == "cor22") return jobs_thm16_cor22(sw, 11);
    if (id == "thm17") return jobs_thm17(sw);
    if (id == "thm18") return jobs_thm18(sw);
    if (id == "thm19") return jobs_thm19(sw);
    if (id == "besov") return jobs_besov(sw);
    throw ConfigError("unknown verification target: " + id);
}

struct SuiteSummary {
    std::string id;
    long records = 0;
    long passes = 0;
    double max_ratio = 0.0;
};

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int run_verify(const std::string& target, const RunConfig& cfg) {
    if (!cfg.seed) throw ConfigError("seed is required (flag --seed or config key seed)");
    Sweep sw{cfg, *cfg.seed};
    std::vector<std::string> ids;
    if (target == "all")
        ids = all_ids();
    else
        ids.push_back(target);

    const unsigned threads = thread_count(cfg);
    std::vector<SuiteSummary> summaries;
    std::vector<EstimateReport> records;
    for (const auto& id : ids) {
        auto reports = run_jobs(build_jobs(id, sw), threads);
        SuiteSummary sum;
        sum.id = id;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            auto& rep = reports[i];
            if (rep.id.empty()) rep.id = id;
            rep.trial = static_cast<long>(i);
            rep.seed = *cfg.seed;
            if (cfg.tol) {
                // a tolerance override re-runs the stored inequality; records
                // failed by an auxiliary invariant keep their verdict
                const bool formula = rep.lhs <= rep.constant_used * rep.rhs + rep.tol;
                if (rep.pass == formula) {
                    rep.tol = *cfg.tol * (1.0 + rep.rhs);
                    rep.pass = rep.lhs <= rep.constant_used * rep.rhs + rep.tol;
                }
            }
            sum.records += 1;
            sum.passes += rep.pass ? 1 : 0;
            sum.max_ratio = std::max(sum.max_ratio, rep.ratio);
            records.push_back(rep);
        }
        summaries.push_back(sum);
    }

    const std::filesystem::path dir(cfg.out);
    std::filesystem::create_directories(dir);
    {
        auto out = open_out(dir / "records.jsonl");
        for (const auto& rep : records) out << rep.to_json_line() << '\n';
    }
    {
        auto out = open_out(dir / "summary.csv");
        out << "id,records,passes,failures,max_ratio\n";
        for (const auto& s : summaries)
            out << s.id << ',' << s.records << ',' << s.passes << ',' << (s.records - s.passes)
                << ',' << fmt(s.max_ratio) << '\n';
    }

    long failures = 0;
    std::printf("%-10s %8s %8s %9s %12s\n", "suite", "records", "passes", "failures", "max_ratio");
    for (const auto& s : summaries) {
        failures += s.records - s.passes;
        std::printf("%-10s %8ld %8ld %9ld %12.6f\n", s.id.c_str(), s.records, s.passes,
                    s.records - s.passes, s.max_ratio);
    }
    std::printf("%s: %ld records, %ld failures\n", failures == 0 ? "PASS" : "FAIL",
                static_cast<long>(records.size()), failures);
    return failures == 0 ? 0 : 1;
}

int run_demo(int big_n, double p, const RunConfig& cfg) {
    if (big_n < 1 || big_n > 400) throw ConfigError("N must lie in [1, 400]");
    if (!(p >= 1.0)) throw ConfigError("p must be at least 1");
    const auto d0 = periodic_derivative_model(big_n);
    const std::size_t n = d0.dim();

    // deterministic bounded potential: the symmetric mode shift (the matrix
    // of 2 cos x), rescaled to operator norm 1
    Matrix v(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        v(i, i + 1) = 1.0;
        v(i + 1, i) = 1.0;
    }
    v *= 1.0 / operator_norm(v);
    const auto d = HermitianOperator(d0.matrix() + v);

    const auto weak = NormSpec::weak_lp(p);
    const double w0 = spectral_norm(ScalarFunction::h_alpha(1.0), d0, weak);
    const double w1 = spectral_norm(ScalarFunction::h_alpha(1.0), d, weak);
    auto rep = verify_cor22(d0, d, weak);
    rep.seed = cfg.seed.value_or(0);
    rep.params["weak_norm_smoothed_inverse"] = w0;
    rep.params["weak_norm_smoothed_inverse_perturbed"] = w1;

    const std::filesystem::path dir(cfg.out);
    std::filesystem::create_directories(dir);
    {
        auto out = open_out(dir / "demo.jsonl");
        out << rep.to_json_line() << '\n';
    }

    std::printf("periodic derivative model: modes -%d..%d (dimension %zu)\n", big_n, big_n, n);
    std::printf("perturbation: symmetric mode shift, operator norm 1\n");
    std::printf("weak-L%.3g norm of (1+D0^2)^{-1/2}: %.9f\n", p, w0);
    std::printf("weak-L%.3g norm of (1+D^2)^{-1/2}:  %.9f\n", p, w1);
    std::printf("smoothed-sign Lipschitz bound: lhs=%.9f rhs=%.9f constant=%.9f ratio=%.6f %s\n",
                rep.lhs, rep.rhs, rep.constant_used, rep.ratio, rep.pass ? "pass" : "FAIL");
    return rep.pass ? 0 : 1;
}

int run_profiles(const RunConfig& cfg) {
    if (!cfg.seed) throw ConfigError("seed is required (flag --seed or config key seed)");
    const std::filesystem::path dir(cfg.out);
    std::filesystem::create_directories(dir);

    {
        const auto& prof = cached_profile(GFamily::sech_half());
        auto out = open_out(dir / "gsech_profile.csv");
        out << "s,ghat_re,ghat_im,ghat_abs\n";
        for (std::size_t k = 0; k < prof.s.size(); ++k)
            out << fmt(prof.s[k]) << ',' << fmt(prof.ghat[k].real()) << ','
                << fmt(prof.ghat[k].imag()) << ',' << fmt(std::abs(prof.ghat[k])) << '\n';
    }
    {
        const std::vector<double> thetas = {0.05, 0.075, 0.1, 0.15, 0.2, 0.25,
                                            0.3,  0.35,  0.4, 0.45, 0.5};
        auto out = open_out(dir / "theta_sweep.csv");
        out << "theta,l2_mass,multiplier_bound\n";
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (double th : thetas) {
            const auto& prof = cached_profile(GFamily::theta_exp(th));
            const double mass = prof.l2_g + prof.l2_gprime;
            out << fmt(th) << ',' << fmt(mass) << ',' << fmt(theta_multiplier_bound(th)) << '\n';
            const double x = std::log(th);
            const double y = std::log(mass);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double m = static_cast<double>(thetas.size());
        out << "# fitted_exponent," << fmt((m * sxy - sx * sy) / (m * sxx - sx * sx)) << '\n';
    }
    {
        Rng rng(*cfg.seed, stream_of(13, 0));
        const int n = cfg.n.value_or(6);
        const auto d0 = gaussian_hermitian(rng, n);
        const auto g = gaussian_hermitian_matrix(rng, n);
        const auto curve = thm18_order_curve(d0, g, NormSpec::schatten(2), 8);
        auto out = open_out(dir / "order_curve.csv");
        out << "t,one_sided,central,one_sided_ratio,central_ratio\n";
        for (std::size_t k = 0; k < curve.size(); ++k) {
            const double ro = k > 0 ? curve[k].one_sided / curve[k - 1].one_sided : 0.0;
            const double rc = k > 0 ? curve[k].central / curve[k - 1].central : 0.0;
            out << fmt(curve[k].t) << ',' << fmt(curve[k].one_sided) << ','
                << fmt(curve[k].central) << ',' << fmt(ro) << ',' << fmt(rc) << '\n';
        }
    }
    std::printf("profiles written to %s\n", cfg.out.c_str());
    return 0;
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg, std::string& config_path) {
    cmd->add_option("--config", config_path, "key = value config file; flags override it");
    cmd->add_option("--seed", cfg.seed, "RNG seed (required; runs never seed from the clock)");
    cmd->add_option("--trials", cfg.trials, "trial count override for every suite");
    cmd->add_option("--n", cfg.n, "fixed matrix dimension (default: sweep 2..8)");
    cmd->add_option("--alpha", cfg.alpha, "fixed smoothing parameter (default: per-suite sweep)");
    cmd->add_option("--theta", cfg.theta, "fixed interpolation parameter in (0,1)");
    cmd->add_option("--p", cfg.p, "fixed Schatten/weak exponent");
    cmd->add_option("--r", cfg.r, "fixed power exponent (> 1)");
    cmd->add_option("--norm", cfg.norm, "fixed norm spec: schatten:p | weak:p | kyfan:k | op");
    cmd->add_option("--tol", cfg.tol, "tolerance scale override for the pass inequality");
    cmd->add_option("--out", cfg.out, "report directory (default: reports)");
    cmd->add_flag("--quick", cfg.quick, "smoke mode: a tenth of the trials, coarser grids");
    cmd->add_option("--threads", cfg.threads, "concurrency cap (DOIFORGE_THREADS also caps)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-dimensional workbench for operator-smoothness estimates"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::string target;
    int demo_big_n = 50;
    double demo_p = 1.0;
    std::string demo_kind;

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("target", target, "suite id or 'all'")->required();
    add_common_flags(verify, cfg, config_path);

    auto* demo = app.add_subcommand("demo", "run the walk-through example");
    demo->add_option("kind", demo_kind, "demo name (periodic)")->required();
    demo->add_option("--N", demo_big_n, "mode cutoff; dimension is 2N+1");
    demo->add_option("--p", demo_p, "weak norm exponent");
    demo->add_option("--out", cfg.out, "report directory");
    demo->add_option("--seed", cfg.seed, "recorded in the report; the demo draws nothing");

    auto* profiles = app.add_subcommand("profiles", "emit profile CSV files");
    add_common_flags(profiles, cfg, config_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!config_path.empty()) {
            // flags win over the file: reload the file first, then re-apply
            // command-line values on top
            RunConfig file_cfg;
            load_config_file(config_path, file_cfg);
            RunConfig flag_cfg = cfg;
            cfg = file_cfg;
            if (flag_cfg.seed) cfg.seed = flag_cfg.seed;
            if (flag_cfg.trials) cfg.trials = flag_cfg.trials;
            if (flag_cfg.n) cfg.n = flag_cfg.n;
            if (flag_cfg.alpha) cfg.alpha = flag_cfg.alpha;
            if (flag_cfg.theta) cfg.theta = flag_cfg.theta;
            if (flag_cfg.p) cfg.p = flag_cfg.p;
            if (flag_cfg.r) cfg.r = flag_cfg.r;
            if (flag_cfg.tol) cfg.tol = flag_cfg.tol;
            if (flag_cfg.norm) cfg.norm = flag_cfg.norm;
            if (flag_cfg.threads) cfg.threads = flag_cfg.threads;
            if (flag_cfg.out != "reports") cfg.out = flag_cfg.out;
            if (flag_cfg.quick) cfg.quick = true;
        }
        validate(cfg);
        if (verify->parsed()) return run_verify(target, cfg);
        if (demo->parsed()) {
            if (demo_kind != "periodic") throw ConfigError("unknown demo: " + demo_kind);
            return run_demo(demo_big_n, demo_p, cfg);
        }
        if (profiles->parsed()) return run_profiles(cfg);
        return 2;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 2;
    } catch (const InvalidSpec& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
