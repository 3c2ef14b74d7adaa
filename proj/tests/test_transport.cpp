#include <cmath>
#include <random>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "qint/lipnorm.hpp"
#include "qint/transport.hpp"
#include "test_util.hpp"

using namespace qint;
using testutil::random_measure;
using testutil::random_qfunction;

TEST_CASE("StateMeasure validation") {
    CHECK_THROWS_AS(StateMeasure(1, {0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(StateMeasure(1, {0.7, 0.4, -0.1}), std::invalid_argument);
    CHECK_THROWS_AS(StateMeasure(1, {0.5, 0.2, 0.2}), std::invalid_argument);
    const auto mu = StateMeasure::dirac(3, QPoint::zero());
    CHECK(mu.weight_at_zero() == 1.0);
    CHECK_THROWS_AS(StateMeasure::dirac(3, QPoint::index(4)),
                    std::invalid_argument);
}

TEST_CASE("mk_distance on the chain") {
    const QParam q(0.5);
    const double tol = 1e-12;

    SUBCASE("identity of indiscernibles and Dirac compatibility") {
        std::mt19937_64 rng(3);
        const auto mu = random_measure(rng, 5);
        CHECK(mk_distance(q, mu, mu, tol).value == 0.0);

        const int depth = 12;
        std::vector<QPoint> pts;
        for (int k = 0; k <= depth; ++k) pts.push_back(QPoint::index(k));
        pts.push_back(QPoint::zero());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                const auto mk =
                    mk_distance(q, StateMeasure::dirac(depth, pts[i]),
                                StateMeasure::dirac(depth, pts[j]), tol);
                const auto d = dq(q, pts[i], pts[j], tol);
                CHECK(std::abs(mk.value - d.value) <= 2.0 * tol + 1e-13);
            }
        }
    }

    SUBCASE("hand-computed split measure") {
        // mu = (delta_0 + delta_2)/2 vs nu = delta_1
        StateMeasure mu(2, {0.5, 0.0, 0.5, 0.0});
        StateMeasure nu(2, {0.0, 1.0, 0.0, 0.0});
        const double expected = 0.5 * (inv_rho(q, 0) + inv_rho(q, 1));
        CHECK(mk_distance(q, mu, nu, tol).value ==
              doctest::Approx(expected).epsilon(1e-14));
    }

    SUBCASE("mismatched support depth") {
        CHECK_THROWS_AS(mk_distance(q, StateMeasure::dirac(3, QPoint::zero()),
                                    StateMeasure::dirac(4, QPoint::zero()),
                                    tol),
                        std::invalid_argument);
    }
}

TEST_CASE("greedy transport oracle") {
    const QParam q(0.5);
    const double tol = 1e-12;

    SUBCASE("Dirac pair reduces to the point distance") {
        const auto cost =
            greedy_transport(q, StateMeasure::dirac(6, QPoint::index(2)),
                             StateMeasure::dirac(6, QPoint::zero()));
        CHECK(cost == doctest::Approx(
                          dq(q, QPoint::index(2), QPoint::zero(), tol).value)
                          .epsilon(1e-12));
    }

    SUBCASE("uniform vs Dirac, enumerated by hand") {
        StateMeasure mu(3, {0.25, 0.25, 0.25, 0.25, 0.0});
        StateMeasure nu = StateMeasure::dirac(3, QPoint::index(0));
        double expected = 0.0;
        for (int k = 1; k <= 3; ++k) {
            expected +=
                0.25 * dq(q, QPoint::index(k), QPoint::index(0), tol).value;
        }
        CHECK(greedy_transport(q, mu, nu) ==
              doctest::Approx(expected).epsilon(1e-13));
        CHECK(mk_distance(q, mu, nu, tol).value ==
              doctest::Approx(expected).epsilon(1e-12));
    }

    SUBCASE("random pairs agree with the CDF closed form") {
        std::mt19937_64 rng(31);
        for (int t = 0; t < 200; ++t) {
            const auto mu = random_measure(rng, 6);
            const auto nu = random_measure(rng, 6);
            const double a = mk_distance(q, mu, nu, 1e-13).value;
            const double b = greedy_transport(q, mu, nu);
            CHECK(std::abs(a - b) <= 1e-10);
        }
    }
}

TEST_CASE("mk_distance is a metric with the Lipschitz dual property") {
    const QParam q(0.6);
    const double tol = 1e-12;
    std::mt19937_64 rng(13);

    SUBCASE("symmetry and triangle") {
        for (int t = 0; t < 100; ++t) {
            const auto a = random_measure(rng, 5);
            const auto b = random_measure(rng, 5);
            const auto c = random_measure(rng, 5);
            CHECK(mk_distance(q, a, b, tol).value ==
                  mk_distance(q, b, a, tol).value);
            CHECK(mk_distance(q, a, c, tol).value <=
                  mk_distance(q, a, b, tol).value +
                      mk_distance(q, b, c, tol).value + 1e-10);
        }
    }

    SUBCASE("dual feasibility for normalised Lipschitz functions") {
        const int depth = 5;
        for (int t = 0; t < 100; ++t) {
            auto f = random_qfunction(rng, depth);
            const double L = seminorm(q, f).value;
            if (L == 0.0) continue;
            const auto mu = random_measure(rng, depth);
            const auto nu = random_measure(rng, depth);
            std::complex<double> diff = 0.0;
            for (int k = 0; k <= depth; ++k) {
                diff += (mu.weights()[k] - nu.weights()[k]) * f.value_at(k) / L;
            }
            diff += (mu.weight_at_zero() - nu.weight_at_zero()) * f.tail() / L;
            CHECK(std::abs(diff) <=
                  mk_distance(q, mu, nu, tol).value + 1e-9);
        }
    }

    SUBCASE("weak-* convergence witness") {
        // delta_{Index(n)} -> delta_Zero in mk, and integrals follow
        const int depth = 20;
        const auto target = StateMeasure::dirac(depth, QPoint::zero());
        double prev_mk = 1e9;
        for (int n : {2, 6, 12, 20}) {
            const auto mu = StateMeasure::dirac(depth, QPoint::index(n));
            const double m = mk_distance(q, mu, target, tol).value;
            CHECK(m < prev_mk);
            prev_mk = m;
            // indicator test function: integrals agree exactly off its atom
            CHECK(QFunction::indicator(0).eval(QPoint::index(n)) ==
                  QFunction::indicator(0).eval(QPoint::zero()));
            // identity profile: integral q^{2n} converges to the tail value 0
            CHECK(std::pow(q.q(), 2 * n) <= std::pow(q.q(), 4) + 1e-15);
        }
        CHECK(prev_mk < 1e-4);
    }
}

TEST_CASE("mk_diameter") {
    const double tol = 1e-10;
    for (double qv : {0.5, 0.9}) {
        const QParam q(qv);
        const auto diam = mk_diameter(q, 8, tol);
        const auto d = dq(q, QPoint::index(0), QPoint::zero(), tol);
        CHECK(std::abs(diam.value - d.value) <= 2.0 * tol);
        const auto [lo, hi] = diameter_bounds(q);
        CHECK(diam.value >= lo - 1e-9);
        CHECK(diam.value <= hi + 1e-9);
    }
    CHECK(mk_diameter(QParam(0.9), 8, tol).value >
          mk_diameter(QParam(0.5), 8, tol).value);
    CHECK_THROWS_AS(mk_diameter(QParam(0.5), 0, tol), std::invalid_argument);
}

TEST_CASE("StateMeasure JSON round trip") {
    std::mt19937_64 rng(91);
    for (int t = 0; t < 20; ++t) {
        const auto mu = random_measure(rng, 4);
        const auto j = state_to_json(mu);
        CHECK(j.at("depth") == 4);
        const auto nu = state_from_json(j);
        CHECK(nu.weights() == mu.weights());
    }
}
