// Command-line front end for the quantised-interval library: point
// evaluations of d_q, q-sweeps with convergence columns, and a seeded
// self-verification run of the cross-check suites.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qint/continuum.hpp"
#include "qint/ghdist.hpp"
#include "qint/lipnorm.hpp"
#include "qint/qcore.hpp"
#include "qint/spectral.hpp"
#include "qint/transport.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTolerance = 2;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

qint::QPoint parse_point(const std::string& s) {
    if (s == "zero") return qint::QPoint::zero();
    std::size_t pos = 0;
    const int k = std::stoi(s, &pos);
    if (pos != s.size() || k < 0) {
        throw CLI::ValidationError("point must be a nonnegative index or 'zero'");
    }
    return qint::QPoint::index(k);
}

int run_metric(double q, const std::string& from, const std::string& to,
               double tol) {
    const qint::QParam qp(q);
    const auto d = qint::dq(qp, parse_point(from), parse_point(to), tol);
    std::cout << "value=" << fmt(d.value) << " radius=" << fmt(d.radius)
              << "\n";
    return kExitOk;
}

struct SweepRow {
    double q = 0.0;
    bool failed = false;
    double d01 = 0.0, d01_radius = 0.0;
    double diam_lower = 0.0, diam_upper = 0.0;
    double mesh = 0.0, hdist = 0.0;
};

std::vector<double> sweep_grid(const std::vector<double>& explicit_qs,
                               double start, double end, int count,
                               const std::string& spacing) {
    if (!explicit_qs.empty()) return explicit_qs;
    std::vector<double> qs;
    if (count < 1) throw CLI::ValidationError("count must be >= 1");
    for (int i = 0; i < count; ++i) {
        const double t = count == 1 ? 0.0 : double(i) / (count - 1);
        if (spacing == "linear") {
            qs.push_back(start + t * (end - start));
        } else {  // log-complement: 1-q log-spaced
            const double c = std::exp(std::log(1.0 - start) +
                                      t * (std::log(1.0 - end) -
                                           std::log(1.0 - start)));
            qs.push_back(1.0 - c);
        }
    }
    return qs;
}

int run_sweep(const std::vector<double>& qs, double tol,
              const std::string& out_path, const std::string& format) {
    std::vector<SweepRow> rows;
    bool any_failed = false;
    for (double q : qs) {
        SweepRow row;
        row.q = q;
        try {
            const qint::QParam qp(q);
            const auto d = qint::dq(qp, qint::QPoint::index(0),
                                    qint::QPoint::zero(), tol);
            const auto [lo, hi] = qint::diameter_bounds(qp);
            const auto cert = qint::convergence_certificate(qp, tol);
            row.d01 = d.value;
            row.d01_radius = d.radius;
            row.diam_lower = lo;
            row.diam_upper = hi;
            row.mesh = cert.mesh;
            row.hdist = cert.hdist.value;
        } catch (const std::exception&) {
            row.failed = true;
            any_failed = true;
        }
        rows.push_back(row);
    }

    std::ostringstream os;
    if (format == "csv") {
        os << "q,d01,d01_radius,diam_lower,diam_upper,mesh,hdist_to_interval\n";
        for (const auto& r : rows) {
            if (r.failed) {
                os << fmt(r.q) << ",failed,failed,failed,failed,failed,failed\n";
                continue;
            }
            os << fmt(r.q) << ',' << fmt(r.d01) << ',' << fmt(r.d01_radius)
               << ',' << fmt(r.diam_lower) << ',' << fmt(r.diam_upper) << ','
               << fmt(r.mesh) << ',' << fmt(r.hdist) << '\n';
        }
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json j{{"q", r.q}};
            if (r.failed) {
                j["failed"] = true;
            } else {
                j["d01"] = r.d01;
                j["d01_radius"] = r.d01_radius;
                j["diam_lower"] = r.diam_lower;
                j["diam_upper"] = r.diam_upper;
                j["mesh"] = r.mesh;
                j["hdist_to_interval"] = r.hdist;
            }
            arr.push_back(std::move(j));
        }
        os << arr.dump(2) << '\n';
    }

    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot open " << out_path << "\n";
            return kExitUsage;
        }
        f << os.str();
    }
    return any_failed ? kExitTolerance : kExitOk;
}

// ---- verify -------------------------------------------------------------

qint::QFunction random_qfunction(std::mt19937_64& rng, int max_support) {
    std::uniform_int_distribution<int> size_dist(0, max_support);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<qint::QFunction::Entry> vals;
    const int n = size_dist(rng);
    for (int k = 0; k <= n; ++k) {
        if (coin(rng)) {
            vals.emplace_back(k, std::complex<double>(val(rng), val(rng)));
        }
    }
    return qint::QFunction(std::move(vals),
                           std::complex<double>(val(rng), val(rng)));
}

qint::StateMeasure random_measure(std::mt19937_64& rng, int depth) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> w(static_cast<std::size_t>(depth) + 2);
    double sum = 0.0;
    for (double& x : w) {
        x = u(rng);
        sum += x;
    }
    for (double& x : w) x /= sum;
    // renormalise the residue onto the last atom
    double s2 = 0.0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) s2 += w[i];
    w.back() = 1.0 - s2;
    return qint::StateMeasure(depth, std::move(w));
}

struct SuiteResult {
    std::string name;
    bool pass = false;
    double max_dev = 0.0;
};

SuiteResult suite_seminorm_oracle(std::mt19937_64& rng, int trials) {
    SuiteResult r{"seminorm-vs-brute-force"};
    const qint::QParam q(0.5);
    for (int t = 0; t < trials; ++t) {
        const auto f = random_qfunction(rng, 10);
        const double a = qint::seminorm(q, f).value;
        const double b = qint::brute_force_seminorm(q, f, 16, 1e-12);
        r.max_dev = std::max(r.max_dev, std::abs(a - b));
    }
    r.pass = r.max_dev <= 1e-8;
    return r;
}

SuiteResult suite_derivative_norm(std::mt19937_64& rng, int trials) {
    SuiteResult r{"derivative-norm-vs-seminorm"};
    for (double qv : {0.5, 0.9}) {
        const qint::QParam q(qv);
        for (int t = 0; t < trials; ++t) {
            const auto base = random_qfunction(rng, 8);
            const qint::QFunction f(base.values(), 0.0);
            const double a = qint::derivative_norm(q, f, f.support_bound() + 2);
            const double b = qint::seminorm(q, f).value;
            r.max_dev = std::max(r.max_dev, std::abs(a - b));
        }
    }
    r.pass = r.max_dev <= 1e-12;
    return r;
}

SuiteResult suite_transport(std::mt19937_64& rng, int trials) {
    SuiteResult r{"transport-cdf-vs-greedy"};
    const qint::QParam q(0.5);
    for (int t = 0; t < trials; ++t) {
        const auto mu = random_measure(rng, 6);
        const auto nu = random_measure(rng, 6);
        const double a = qint::mk_distance(q, mu, nu, 1e-13).value;
        const double b = qint::greedy_transport(q, mu, nu);
        r.max_dev = std::max(r.max_dev, std::abs(a - b));
    }
    r.pass = r.max_dev <= 1e-10;
    return r;
}

SuiteResult suite_gh(std::mt19937_64& rng, int trials) {
    SuiteResult r{"gh-oracle-vs-upper-bound"};
    std::uniform_real_distribution<double> qdist(0.2, 0.95);
    r.pass = true;
    for (int t = 0; t < trials; ++t) {
        const qint::QParam q1(qdist(rng)), q2(qdist(rng));
        const auto X = qint::truncated_space(q1, 3, 1e-12);
        const auto Y = qint::truncated_space(q2, 3, 1e-12);
        const double oracle = qint::gh_oracle_tiny(X, Y);
        const double upper =
            qint::gh_upper_bound_via_line(q1, q2, 3, 1e-12).value;
        const double lower = 0.5 * std::abs(X.diameter() - Y.diameter());
        const double excess =
            std::max(oracle - upper, lower - oracle);
        r.max_dev = std::max(r.max_dev, excess);
    }
    r.pass = r.max_dev <= 1e-9;
    return r;
}

SuiteResult suite_relations(std::mt19937_64&, int) {
    SuiteResult r{"podles-relation-residuals"};
    for (double qv : {0.1, 0.5, 0.9, 0.99}) {
        const qint::QParam q(qv);
        for (int N : {4, 16, 64}) {
            for (const auto& [name, res] : qint::relation_residuals(q, N)) {
                if (name.ends_with("_interior")) {
                    r.max_dev = std::max(r.max_dev, res);
                }
            }
        }
    }
    r.pass = r.max_dev <= 1e-13;
    return r;
}

SuiteResult suite_phi_isometry(std::mt19937_64&, int) {
    SuiteResult r{"continuum-phi-isometry"};
    constexpr double half_pi = std::numbers::pi / 2.0;
    const int grid = 200;
    for (int i = 0; i < grid; ++i) {
        const double a = -half_pi + std::numbers::pi * i / (grid - 1);
        for (int j = 0; j < grid; ++j) {
            const double b = -half_pi + std::numbers::pi * j / (grid - 1);
            const double d = qint::d1(qint::phi(a), qint::phi(b));
            r.max_dev = std::max(r.max_dev, std::abs(d - std::abs(a - b)));
        }
    }
    r.pass = r.max_dev <= 1e-12;
    return r;
}

int run_verify(unsigned long long seed, int trials) {
    std::mt19937_64 rng(seed);
    std::vector<SuiteResult> results{
        suite_seminorm_oracle(rng, trials),
        suite_derivative_norm(rng, trials),
        suite_transport(rng, trials),
        suite_gh(rng, std::min(trials, 50)),
        suite_relations(rng, trials),
        suite_phi_isometry(rng, trials),
    };
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
                  << " max_dev=" << fmt(r.max_dev) << "\n";
        all = all && r.pass;
    }
    return all ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metric computations on the quantised interval"};
    app.require_subcommand(1);

    double q = 0.5, tol = 1e-10;
    std::string from = "0", to = "zero";
    auto* metric = app.add_subcommand("metric", "evaluate d_q on two points");
    metric->add_option("--q", q, "deformation parameter in (0,1)")->required();
    metric->add_option("--from", from, "index or 'zero'");
    metric->add_option("--to", to, "index or 'zero'");
    metric->add_option("--tol", tol, "certified tolerance");

    std::vector<double> qs;
    double start = 0.5, end = 0.9;
    int count = 5, depth = 12;
    std::string spacing = "linear", out_path, format = "csv";
    auto* sweep = app.add_subcommand("sweep", "q-sweep with certified columns");
    sweep->add_option("--q", qs, "explicit q values (repeatable)");
    sweep->add_option("--start", start, "sweep start");
    sweep->add_option("--end", end, "sweep end");
    sweep->add_option("--count", count, "number of sweep points");
    sweep->add_option("--spacing", spacing, "linear | log-complement")
        ->check(CLI::IsMember({"linear", "log-complement"}));
    sweep->add_option("--tol", tol, "certified tolerance");
    sweep->add_option("--depth", depth, "truncation depth hint");
    sweep->add_option("--out", out_path, "output path (default stdout)");
    sweep->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    unsigned long long seed = 42;
    int trials = 200;
    auto* verify = app.add_subcommand("verify", "run the cross-check suites");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--trials", trials, "trials per randomised suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (metric->parsed()) return run_metric(q, from, to, tol);
        if (sweep->parsed()) {
            for (double qv : qs) {
                if (!(qv > 0.0 && qv < 1.0)) {
                    std::cerr << "q values must lie in (0,1)\n";
                    return kExitUsage;
                }
            }
            return run_sweep(sweep_grid(qs, start, end, count, spacing), tol,
                             out_path, format);
        }
        if (verify->parsed()) {
            if (trials < 1) {
                std::cerr << "trials must be >= 1\n";
                return kExitUsage;
            }
            return run_verify(seed, trials);
        }
    } catch (const qint::ToleranceError& e) {
        std::cerr << "tolerance failure: " << e.what() << "\n";
        return kExitTolerance;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
