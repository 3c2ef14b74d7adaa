#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace qint {

/// Thrown when a requested certified tolerance cannot be met within the
/// configured series-term cap (q too close to 1 for the budget).
class ToleranceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deformation parameter q, strictly inside (0,1).
class QParam {
public:
    explicit QParam(double q);

    double q() const { return q_; }
    double q2() const { return q_ * q_; }
    double one_minus_q2() const { return (1.0 - q_) * (1.0 + q_); }
    double log_q() const;

private:
    double q_;
};

/// A point of X_q = {0} ∪ {q^{2k}}: either the spectral index k or the
/// limit point 0. Stored by index, never as the floating value q^{2k}.
class QPoint {
public:
    static QPoint index(int k);
    static QPoint zero() { return QPoint(-1); }

    bool is_zero() const { return k_ < 0; }
    int k() const;

    friend bool operator==(QPoint a, QPoint b) { return a.k_ == b.k_; }
    friend bool operator!=(QPoint a, QPoint b) { return !(a == b); }
    // Order matches the position of the points on the real line:
    // Zero < Index(k) < Index(j) whenever k > j.
    friend bool operator<(QPoint a, QPoint b);

private:
    explicit QPoint(int k) : k_(k) {}
    int k_;
};

/// A numeric result with a rigorous truncation-error radius: the exact
/// quantity lies in [value - radius, value + radius].
struct CertifiedValue {
    double value = 0.0;
    double radius = 0.0;

    double lower() const { return value - radius; }
    double upper() const { return value + radius; }
};

inline constexpr std::size_t kDefaultTermCap = 1'000'000;

/// The weight ρ_q(x) = √(1-q^{2(x+1)}) / ((1-q²) q^x) on [-1, ∞).
/// ρ_q(-1) = 0; callers must not divide by it there.
double rho(const QParam& q, double x);

/// 1/ρ_q(k) in the stable product form q^k (1-q²)/√(1-q^{2(k+1)}).
/// Satisfies 0 < inv_rho(q,k) ≤ q^k.
double inv_rho(const QParam& q, int k);

/// Certified Σ_{k=n}^∞ 1/ρ_q(k). Truncation index chosen from the
/// geometric majorant √(1-q²) q^N / (1-q) ≤ tol; terms accumulated in
/// ascending magnitude (descending k) with compensated addition.
CertifiedValue tail_sum(const QParam& q, int n, double tol,
                        std::size_t term_cap = kDefaultTermCap);

/// The metric d_q of X_q. Index-vs-index pairs are exact finite sums
/// (radius 0); pairs involving Zero carry a certified tail radius ≤ tol.
CertifiedValue dq(const QParam& q, QPoint x, QPoint y, double tol,
                  std::size_t term_cap = kDefaultTermCap);

/// Rigorous bracket for the diameter d_q(0,1):
///   [ -(1-q²)/(q ln q)·arcsin(q²) + √(1-q²),
///     -(1-q²)/(q ln q)·arcsin(q)  + √(1-q²) ].
/// The arcsin endpoints bound the tail Σ_{k=1}^∞ 1/ρ_q(k) by integral
/// comparison of the decreasing integrand; the exact first gap
/// 1/ρ_q(0) = √(1-q²) is added to both. Both endpoints tend to π.
std::pair<double, double> diameter_bounds(const QParam& q);

/// The isometric line embedding ι_q(x) = d_q(1, x) - π/2.
/// embed(Index(0)) is exactly -π/2 with radius 0.
CertifiedValue embed(const QParam& q, QPoint x, double tol,
                     std::size_t term_cap = kDefaultTermCap);

}  // namespace qint
