#pragma once

#include <string>
#include <vector>

#include "qint/qcore.hpp"

namespace qint {

/// Labelled points with a symmetric distance table; triangle inequality
/// checked at construction (slack 1e-10).
class FiniteMetricSpace {
public:
    FiniteMetricSpace(std::vector<std::string> labels,
                      std::vector<std::vector<double>> dist);

    int size() const { return static_cast<int>(labels_.size()); }
    double dist(int i, int j) const { return dist_[i][j]; }
    const std::string& label(int i) const { return labels_[i]; }
    double diameter() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<double>> dist_;
};

/// The metric space d_q restricted to {Index(0..depth), Zero}.
FiniteMetricSpace truncated_space(const QParam& q, int depth, double tol);

/// A subset of the line: either finitely many points or a closed interval.
class LineSet {
public:
    static LineSet points(std::vector<double> pts);
    static LineSet interval(double lo, double hi);

    bool is_interval() const { return is_interval_; }
    const std::vector<double>& pts() const { return pts_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }

private:
    LineSet() = default;
    bool is_interval_ = false;
    std::vector<double> pts_;  // sorted ascending
    double lo_ = 0.0, hi_ = 0.0;
};

/// Hausdorff distance on the line; exact for finite-vs-finite and
/// finite-vs-interval (the interval side is handled analytically).
double hausdorff_line(const LineSet& a, const LineSet& b);

/// ι_q(X_q) truncated at depth: the points ι_q(q^{2k}), k = 0..depth,
/// plus the certified ι_q(0).
LineSet embedded_line(const QParam& q, int depth, double tol);

/// Gromov-Hausdorff upper bound through the line embeddings: `value` is
/// the exact Hausdorff distance between the embedded depth-truncations
/// (an upper bound for GH of the truncated spaces); `radius` adds both
/// certified tails, so upper() bounds GH of the full spaces.
CertifiedValue gh_upper_bound_via_line(const QParam& q1, const QParam& q2,
                                       int depth, double tol);

/// Exact GH distance for tiny spaces: half the minimal correspondence
/// distortion, by exhaustive search over function-pair correspondences.
/// Requires |X|·|Y| <= 36.
double gh_oracle_tiny(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

struct ConvergenceCertificate {
    CertifiedValue hdist;  // Hausdorff distance of ι_q(X_q) to [-π/2, π/2]
    double mesh = 0.0;     // 1/ρ_q(0) = √(1-q²), the largest chain gap
    double diam_gap = 0.0; // worst-case |d_q(0,1) - π| from diameter_bounds
};

/// Certificate for the convergence of (X_q, d_q) to the interval
/// [-π/2, π/2]: truncation depth budgeted so the certified tail stays
/// below tol/3.
ConvergenceCertificate convergence_certificate(const QParam& q, double tol);

}  // namespace qint
