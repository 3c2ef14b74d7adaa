#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <doctest.h>

#include "qint/qcore.hpp"

using namespace qint;

namespace {
const double kPi = std::numbers::pi;
}

TEST_CASE("QParam validates its range") {
    CHECK_THROWS_AS(QParam(0.0), std::invalid_argument);
    CHECK_THROWS_AS(QParam(1.0), std::invalid_argument);
    CHECK_THROWS_AS(QParam(-0.5), std::invalid_argument);
    CHECK_THROWS_AS(QParam(std::nan("")), std::invalid_argument);
    CHECK(QParam(0.5).q2() == doctest::Approx(0.25));
}

TEST_CASE("QPoint order matches positions on the line") {
    CHECK(QPoint::zero() < QPoint::index(5));
    CHECK(QPoint::index(5) < QPoint::index(2));
    CHECK_FALSE(QPoint::index(2) < QPoint::index(2));
    CHECK(QPoint::index(3) == QPoint::index(3));
    CHECK_THROWS_AS(QPoint::index(-1), std::invalid_argument);
}

TEST_CASE("rho closed form and endpoints") {
    const QParam q(0.5);
    CHECK(rho(q, 0) == doctest::Approx(std::sqrt(0.75) / 0.75).epsilon(1e-14));
    for (double qv : {0.1, 0.5, 0.9, 0.99}) {
        CHECK(rho(QParam(qv), -1.0) == 0.0);
    }
    // rho(k) q^k -> 1/(1-q^2)
    CHECK(rho(q, 40) * std::pow(0.5, 40) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-9));
    CHECK_THROWS_AS(rho(q, -1.5), std::domain_error);
}

TEST_CASE("inv_rho closed form and geometric majorant") {
    CHECK(inv_rho(QParam(0.5), 0) ==
          doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
    for (double qv : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
        const QParam q(qv);
        CHECK(inv_rho(q, 0) ==
              doctest::Approx(std::sqrt(1.0 - qv * qv)).epsilon(1e-13));
        for (int k = 0; k <= 1000; k += 7) {
            const double v = inv_rho(q, k);
            // q^k can underflow to zero for tiny q and huge k
            if (std::pow(qv, k) >= std::numeric_limits<double>::min()) {
                CHECK(v > 0.0);
            }
            CHECK(v <= std::pow(qv, k) * (1.0 + 1e-15));
        }
    }
    CHECK(inv_rho(QParam(0.9), 5) <= std::pow(0.9, 5));
}

TEST_CASE("tail_sum certificate") {
    const QParam q(0.5);

    SUBCASE("geometric majorant") {
        const auto t = tail_sum(q, 20, 1e-12);
        CHECK(t.value <= 2.0 * std::pow(0.5, 20));
        CHECK(t.radius <= 1e-12);
    }

    SUBCASE("full series lies in the diameter bracket") {
        const auto t = tail_sum(q, 0, 1e-12);
        const auto [lo, hi] = diameter_bounds(q);
        CHECK(t.value >= lo - 1e-9);
        CHECK(t.value <= hi + 1e-9);
    }

    SUBCASE("telescoping against inv_rho") {
        const double tol = 1e-12;
        for (int n : {0, 3, 11}) {
            const double diff =
                tail_sum(q, n, tol).value - tail_sum(q, n + 1, tol).value;
            CHECK(diff == doctest::Approx(inv_rho(q, n)).epsilon(1e-10));
        }
    }

    SUBCASE("monotone decreasing and positive") {
        double prev = tail_sum(q, 0, 1e-12).value;
        for (int n = 1; n <= 30; ++n) {
            const double cur = tail_sum(q, n, 1e-12).value;
            CHECK(cur > 0.0);
            CHECK(cur < prev);
            prev = cur;
        }
    }

    SUBCASE("term cap fails loudly") {
        CHECK_THROWS_AS(tail_sum(QParam(0.9999999), 0, 1e-12), ToleranceError);
    }
}

TEST_CASE("dq formula cases") {
    const QParam q(0.5);
    const double tol = 1e-12;

    CHECK(dq(q, QPoint::index(3), QPoint::index(3), tol).value == 0.0);
    CHECK(dq(q, QPoint::zero(), QPoint::zero(), tol).radius == 0.0);

    // d(1, q^2) = 1/rho(0) = sqrt(1-q^2), exact finite sum
    const auto d01idx = dq(q, QPoint::index(0), QPoint::index(1), tol);
    CHECK(d01idx.value == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
    CHECK(d01idx.radius == 0.0);

    const auto dz = dq(q, QPoint::index(0), QPoint::zero(), 1e-10);
    const auto [lo, hi] = diameter_bounds(q);
    CHECK(dz.value >= lo - 1e-9);
    CHECK(dz.value <= hi + 1e-9);
    CHECK(dz.radius <= 1e-10);
}

TEST_CASE("dq metric axioms on a finite truncation") {
    const QParam q(0.7);
    const double tol = 1e-12;
    const int N = 64;
    std::vector<QPoint> pts;
    for (int k = 0; k <= N; ++k) pts.push_back(QPoint::index(k));
    pts.push_back(QPoint::zero());

    SUBCASE("symmetry is exact") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
        for (int t = 0; t < 200; ++t) {
            const QPoint a = pts[pick(rng)], b = pts[pick(rng)];
            CHECK(dq(q, a, b, tol).value == dq(q, b, a, tol).value);
        }
    }

    SUBCASE("chain additivity between indices") {
        for (int n = 0; n < N; n += 5) {
            for (int m = n + 1; m <= N; m += 7) {
                for (int j = m + 1; j <= N; j += 9) {
                    const double lhs =
                        dq(q, QPoint::index(n), QPoint::index(j), tol).value;
                    const double rhs =
                        dq(q, QPoint::index(n), QPoint::index(m), tol).value +
                        dq(q, QPoint::index(m), QPoint::index(j), tol).value;
                    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
                }
            }
        }
    }

    SUBCASE("additivity through Zero") {
        for (int n = 0; n < 20; n += 3) {
            for (int m = n + 1; m < 24; m += 4) {
                const double lhs =
                    dq(q, QPoint::index(n), QPoint::zero(), tol).value;
                const double rhs =
                    dq(q, QPoint::index(n), QPoint::index(m), tol).value +
                    dq(q, QPoint::index(m), QPoint::zero(), tol).value;
                CHECK(std::abs(lhs - rhs) <= 2.0 * tol + 1e-14);
            }
        }
    }
}

TEST_CASE("diameter_bounds") {
    SUBCASE("closed form at q = 0.5") {
        const QParam q(0.5);
        const double pre = 0.75 / (0.5 * std::log(2.0));
        const auto [lo, hi] = diameter_bounds(q);
        CHECK(lo == doctest::Approx(pre * std::asin(0.25) + std::sqrt(0.75))
                        .epsilon(1e-13));
        CHECK(hi == doctest::Approx(pre * std::asin(0.5) + std::sqrt(0.75))
                        .epsilon(1e-13));
        CHECK(lo > 0.0);
        CHECK(lo <= hi);
    }

    SUBCASE("bracket contains the certified series") {
        for (double qv : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
            const QParam q(qv);
            const auto [lo, hi] = diameter_bounds(q);
            const auto d = dq(q, QPoint::index(0), QPoint::zero(), 1e-11);
            CHECK(d.value >= lo - 1e-9);
            CHECK(d.value <= hi + 1e-9);
        }
    }

    SUBCASE("both endpoints approach pi") {
        const auto [lo, hi] = diameter_bounds(QParam(0.9999));
        CHECK(std::abs(kPi - lo) < 0.03);
        CHECK(std::abs(kPi - hi) < 0.03);
    }

    SUBCASE("antiderivative vanishes at infinity") {
        const QParam q(0.5);
        const double pre = -q.one_minus_q2() / (q.q() * q.log_q());
        CHECK(std::abs(pre * std::asin(std::pow(0.5, 61.0))) < 1e-9);
    }
}

TEST_CASE("embed is the isometric line embedding") {
    const QParam q(0.5);
    const double tol = 1e-12;

    const auto origin = embed(q, QPoint::index(0), tol);
    CHECK(origin.value == -kPi / 2.0);
    CHECK(origin.radius == 0.0);

    // |embed(Index 2) - embed(Index 5)| = d(q^4, q^10), both finite sums
    const double lhs = std::abs(embed(q, QPoint::index(2), tol).value -
                                embed(q, QPoint::index(5), tol).value);
    const double rhs = dq(q, QPoint::index(2), QPoint::index(5), tol).value;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-15));

    SUBCASE("isometry on random pairs") {
        std::mt19937_64 rng(23);
        std::uniform_int_distribution<int> pick(-1, 40);
        for (int t = 0; t < 1000; ++t) {
            const int a = pick(rng), b = pick(rng);
            const QPoint x = a < 0 ? QPoint::zero() : QPoint::index(a);
            const QPoint y = b < 0 ? QPoint::zero() : QPoint::index(b);
            const auto ex = embed(q, x, tol);
            const auto ey = embed(q, y, tol);
            const auto d = dq(q, x, y, tol);
            CHECK(std::abs(std::abs(ex.value - ey.value) - d.value) <=
                  ex.radius + ey.radius + d.radius + 1e-13);
        }
    }

    SUBCASE("order-reversing in k") {
        double prev = embed(q, QPoint::index(10), tol).value;
        for (int k = 9; k >= 0; --k) {
            const double cur = embed(q, QPoint::index(k), tol).value;
            CHECK(cur < prev);
            prev = cur;
        }
        CHECK(embed(q, QPoint::zero(), tol).value >
              embed(q, QPoint::index(0), tol).value);
    }
}
