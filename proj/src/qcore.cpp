#include "qint/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qint {

QParam::QParam(double q) : q_(q) {
    if (!(q > 0.0) || !(q < 1.0) || !std::isfinite(q)) {
        throw std::invalid_argument("QParam: q must lie strictly inside (0,1)");
    }
}

double QParam::log_q() const { return std::log(q_); }

QPoint QPoint::index(int k) {
    if (k < 0) {
        throw std::invalid_argument("QPoint::index: k must be nonnegative");
    }
    return QPoint(k);
}

int QPoint::k() const {
    if (is_zero()) {
        throw std::logic_error("QPoint::k: point is Zero");
    }
    return k_;
}

bool operator<(QPoint a, QPoint b) {
    if (a.k_ == b.k_) return false;
    if (a.is_zero()) return true;   // 0 is the left endpoint
    if (b.is_zero()) return false;
    return a.k_ > b.k_;             // larger index, smaller q^{2k}
}

double rho(const QParam& q, double x) {
    if (x < -1.0) {
        throw std::domain_error("rho: x must be >= -1");
    }
    // 1 - q^{2(x+1)} via expm1 to keep precision for q near 1.
    const double t = -std::expm1(2.0 * (x + 1.0) * q.log_q());
    return std::sqrt(t) / (q.one_minus_q2() * std::pow(q.q(), x));
}

double inv_rho(const QParam& q, int k) {
    if (k < 0) {
        throw std::domain_error("inv_rho: k must be nonnegative");
    }
    const double t = -std::expm1(2.0 * (k + 1.0) * q.log_q());
    return std::pow(q.q(), k) * q.one_minus_q2() / std::sqrt(t);
}

namespace {

// Smallest N >= n with sqrt(1-q^2) q^N / (1-q) <= tol.
long truncation_index(const QParam& q, int n, double tol) {
    const double lhs = std::log(tol * (1.0 - q.q())) -
                       0.5 * std::log(q.one_minus_q2());
    long N = static_cast<long>(std::ceil(lhs / q.log_q()));
    return std::max<long>(N, n);
}

double geometric_tail_bound(const QParam& q, long N) {
    return std::sqrt(q.one_minus_q2()) * std::pow(q.q(), double(N)) /
           (1.0 - q.q());
}

// Compensated sum of inv_rho(k) for k in [lo, hi), smallest terms first.
double kahan_inv_rho_sum(const QParam& q, long lo, long hi) {
    double sum = 0.0;
    double carry = 0.0;
    for (long k = hi - 1; k >= lo; --k) {
        const double term = inv_rho(q, static_cast<int>(k));
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace

CertifiedValue tail_sum(const QParam& q, int n, double tol,
                        std::size_t term_cap) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tail_sum: tol must be positive");
    }
    if (n < 0) {
        throw std::invalid_argument("tail_sum: n must be nonnegative");
    }
    const long N = truncation_index(q, n, tol);
    if (static_cast<std::size_t>(N - n) > term_cap) {
        throw ToleranceError("tail_sum: tolerance needs more than the term cap");
    }
    CertifiedValue out;
    out.value = kahan_inv_rho_sum(q, n, N);
    out.radius = geometric_tail_bound(q, N);
    return out;
}

CertifiedValue dq(const QParam& q, QPoint x, QPoint y, double tol,
                  std::size_t term_cap) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("dq: tol must be positive");
    }
    if (x == y) return {0.0, 0.0};
    if (x.is_zero() || y.is_zero()) {
        const int n = x.is_zero() ? y.k() : x.k();
        return tail_sum(q, n, tol, term_cap);
    }
    const int lo = std::min(x.k(), y.k());
    const int hi = std::max(x.k(), y.k());
    return {kahan_inv_rho_sum(q, lo, hi), 0.0};
}

std::pair<double, double> diameter_bounds(const QParam& q) {
    const double prefactor = -q.one_minus_q2() / (q.q() * q.log_q());
    const double first_gap = std::sqrt(q.one_minus_q2());
    return {prefactor * std::asin(q.q2()) + first_gap,
            prefactor * std::asin(q.q()) + first_gap};
}

CertifiedValue embed(const QParam& q, QPoint x, double tol,
                     std::size_t term_cap) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!x.is_zero() && x.k() == 0) {
        return {-half_pi, 0.0};
    }
    CertifiedValue d = dq(q, QPoint::index(0), x, tol, term_cap);
    d.value -= half_pi;
    return d;
}

}  // namespace qint
