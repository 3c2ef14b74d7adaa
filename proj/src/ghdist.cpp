#include "qint/ghdist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qint {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     std::vector<std::vector<double>> dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
    const std::size_t n = labels_.size();
    if (n == 0) {
        throw std::invalid_argument("FiniteMetricSpace: empty space");
    }
    if (dist_.size() != n) {
        throw std::invalid_argument("FiniteMetricSpace: table size mismatch");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (dist_[i].size() != n || dist_[i][i] != 0.0) {
            throw std::invalid_argument("FiniteMetricSpace: bad row");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!(dist_[i][j] >= 0.0) || dist_[i][j] != dist_[j][i]) {
                throw std::invalid_argument(
                    "FiniteMetricSpace: table must be symmetric nonnegative");
            }
        }
    }
    constexpr double slack = 1e-10;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (dist_[i][j] > dist_[i][k] + dist_[k][j] + slack) {
                    throw std::invalid_argument(
                        "FiniteMetricSpace: triangle inequality violated");
                }
            }
        }
    }
}

double FiniteMetricSpace::diameter() const {
    double d = 0.0;
    for (const auto& row : dist_) {
        for (double v : row) d = std::max(d, v);
    }
    return d;
}

FiniteMetricSpace truncated_space(const QParam& q, int depth, double tol) {
    std::vector<QPoint> pts;
    std::vector<std::string> labels;
    for (int k = 0; k <= depth; ++k) {
        pts.push_back(QPoint::index(k));
        labels.push_back("k" + std::to_string(k));
    }
    pts.push_back(QPoint::zero());
    labels.push_back("zero");

    const std::size_t n = pts.size();
    std::vector<std::vector<double>> table(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            table[i][j] = table[j][i] = dq(q, pts[i], pts[j], tol).value;
        }
    }
    return FiniteMetricSpace(std::move(labels), std::move(table));
}

LineSet LineSet::points(std::vector<double> pts) {
    if (pts.empty()) {
        throw std::invalid_argument("LineSet: empty point set");
    }
    std::sort(pts.begin(), pts.end());
    LineSet s;
    s.pts_ = std::move(pts);
    return s;
}

LineSet LineSet::interval(double lo, double hi) {
    if (!(lo <= hi)) {
        throw std::invalid_argument("LineSet: interval needs lo <= hi");
    }
    LineSet s;
    s.is_interval_ = true;
    s.lo_ = lo;
    s.hi_ = hi;
    return s;
}

namespace {

double point_to_set(double x, const LineSet& b) {
    if (b.is_interval()) {
        return std::max({0.0, b.lo() - x, x - b.hi()});
    }
    const auto& p = b.pts();
    auto it = std::lower_bound(p.begin(), p.end(), x);
    double d = std::numeric_limits<double>::infinity();
    if (it != p.end()) d = std::min(d, *it - x);
    if (it != p.begin()) d = std::min(d, x - *(it - 1));
    return d;
}

double directed_deviation(const LineSet& a, const LineSet& b) {
    if (!a.is_interval()) {
        double d = 0.0;
        for (double x : a.pts()) d = std::max(d, point_to_set(x, b));
        return d;
    }
    // sup over [lo, hi] of dist(x, b); the distance function is piecewise
    // linear with local maxima at endpoints and at midpoints of b's gaps.
    double d = std::max(point_to_set(a.lo(), b), point_to_set(a.hi(), b));
    if (!b.is_interval()) {
        const auto& p = b.pts();
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            const double mid = 0.5 * (p[i] + p[i + 1]);
            if (mid > a.lo() && mid < a.hi()) {
                d = std::max(d, 0.5 * (p[i + 1] - p[i]));
            }
        }
    }
    return d;
}

}  // namespace

double hausdorff_line(const LineSet& a, const LineSet& b) {
    return std::max(directed_deviation(a, b), directed_deviation(b, a));
}

LineSet embedded_line(const QParam& q, int depth, double tol) {
    // Compensated prefix scan of the gap lengths; a per-point embed()
    // call would make this quadratic in depth.
    constexpr double half_pi = std::numbers::pi / 2.0;
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(depth) + 2);
    double sum = 0.0;
    double carry = 0.0;
    pts.push_back(-half_pi);
    for (int k = 0; k < depth; ++k) {
        const double y = inv_rho(q, k) - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        pts.push_back(sum - half_pi);
    }
    pts.push_back(embed(q, QPoint::zero(), tol).value);
    return LineSet::points(std::move(pts));
}

CertifiedValue gh_upper_bound_via_line(const QParam& q1, const QParam& q2,
                                       int depth, double tol) {
    if (depth < 0) {
        throw std::invalid_argument("gh_upper_bound_via_line: depth < 0");
    }
    const LineSet a = embedded_line(q1, depth, tol);
    const LineSet b = embedded_line(q2, depth, tol);
    CertifiedValue out;
    out.value = hausdorff_line(a, b);
    out.radius = tail_sum(q1, depth, tol).upper() +
                 tail_sum(q2, depth, tol).upper() + 2.0 * tol;
    return out;
}

namespace {

// Minimal distortion over correspondences of the form
// graph(f) ∪ graph(g)^T; such a correspondence always attains the
// minimum, so this is the exact value.
class CorrespondenceSearch {
public:
    CorrespondenceSearch(const FiniteMetricSpace& x, const FiniteMetricSpace& y)
        : x_(x), y_(y), f_(x.size()), g_(y.size()) {}

    double run() {
        assign_f(0, 0.0);
        return best_;
    }

private:
    void assign_f(int i, double cur) {
        if (cur >= best_) return;
        if (i == x_.size()) {
            assign_g(0, cur);
            return;
        }
        for (int j = 0; j < y_.size(); ++j) {
            double m = cur;
            for (int i2 = 0; i2 < i && m < best_; ++i2) {
                m = std::max(m, std::abs(x_.dist(i, i2) - y_.dist(j, f_[i2])));
            }
            if (m < best_) {
                f_[i] = j;
                assign_f(i + 1, m);
            }
        }
    }

    void assign_g(int j, double cur) {
        if (cur >= best_) return;
        if (j == y_.size()) {
            best_ = cur;
            return;
        }
        for (int i = 0; i < x_.size(); ++i) {
            double m = cur;
            for (int j2 = 0; j2 < j && m < best_; ++j2) {
                m = std::max(m, std::abs(y_.dist(j, j2) - x_.dist(i, g_[j2])));
            }
            for (int i2 = 0; i2 < x_.size() && m < best_; ++i2) {
                m = std::max(m, std::abs(x_.dist(i2, i) - y_.dist(f_[i2], j)));
            }
            if (m < best_) {
                g_[j] = i;
                assign_g(j + 1, m);
            }
        }
    }

    const FiniteMetricSpace& x_;
    const FiniteMetricSpace& y_;
    std::vector<int> f_, g_;
    double best_ = std::numeric_limits<double>::infinity();
};

}  // namespace

double gh_oracle_tiny(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    if (x.size() * y.size() > 36) {
        throw std::invalid_argument("gh_oracle_tiny: |X|*|Y| must be <= 36");
    }
    return 0.5 * CorrespondenceSearch(x, y).run();
}

ConvergenceCertificate convergence_certificate(const QParam& q, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("convergence_certificate: tol must be > 0");
    }
    const double budget = tol / 3.0;
    const double mesh = std::sqrt(q.one_minus_q2());
    long depth = 0;
    while (mesh * std::pow(q.q(), double(depth)) / (1.0 - q.q()) > budget) {
        if (++depth > static_cast<long>(kDefaultTermCap)) {
            throw ToleranceError("convergence_certificate: depth cap exceeded");
        }
    }

    constexpr double half_pi = std::numbers::pi / 2.0;
    const LineSet image = embedded_line(q, static_cast<int>(depth), budget);
    ConvergenceCertificate cert;
    cert.hdist.value =
        hausdorff_line(image, LineSet::interval(-half_pi, half_pi));
    cert.hdist.radius = 2.0 * budget;
    cert.mesh = mesh;
    const auto [lo, hi] = diameter_bounds(q);
    cert.diam_gap = std::max(std::abs(std::numbers::pi - lo),
                             std::abs(std::numbers::pi - hi));
    return cert;
}

}  // namespace qint
