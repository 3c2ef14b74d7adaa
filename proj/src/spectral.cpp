#include "qint/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace qint {

namespace {

double weight(const QParam& q, int k) {
    const double t = -std::expm1(2.0 * (k + 1.0) * q.log_q());
    return std::pow(q.q(), k) * std::sqrt(t);
}

void check_dim(int N, int min) {
    if (N < min) {
        throw std::invalid_argument("truncation dimension too small");
    }
}

double max_abs(const Eigen::MatrixXcd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

TruncatedOperator rep_A(const QParam& q, int N) {
    check_dim(N, 1);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(N, N);
    for (int k = 0; k < N; ++k) {
        m(k, k) = std::pow(q.q(), 2 * k);
    }
    return {N, std::move(m), "A"};
}

TruncatedOperator rep_B(const QParam& q, int N) {
    check_dim(N, 2);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(N, N);
    for (int k = 0; k + 1 < N; ++k) {
        m(k + 1, k) = weight(q, k);
    }
    return {N, std::move(m), "B"};
}

std::map<std::string, double> relation_residuals(const QParam& q, int N) {
    check_dim(N, 3);
    const Eigen::MatrixXcd A = rep_A(q, N).entries;
    const Eigen::MatrixXcd B = rep_B(q, N).entries;
    const Eigen::MatrixXcd Bs = B.adjoint();
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(N, N);
    const double q2 = q.q2();

    const Eigen::MatrixXcd r_comm = A * B - q2 * B * A;
    const Eigen::MatrixXcd r_bsb = Bs * B - A * (I - q2 * A);
    const Eigen::MatrixXcd r_bbs = B * Bs - A * (I - A) / q2;
    const Eigen::MatrixXcd r_sa = A - A.adjoint();

    const int M = N - 1;  // interior block
    std::map<std::string, double> out;
    out["AB_minus_q2BA_interior"] = max_abs(r_comm.topLeftCorner(M, M));
    out["BstarB_minus_A1mq2A_interior"] = max_abs(r_bsb.topLeftCorner(M, M));
    out["BBstar_minus_q2invA1mA_interior"] = max_abs(r_bbs.topLeftCorner(M, M));
    out["A_minus_Astar_interior"] = max_abs(r_sa.topLeftCorner(M, M));
    out["AB_minus_q2BA_boundary"] =
        std::max(max_abs(r_comm.row(M)), max_abs(r_comm.col(M)));
    out["BstarB_minus_A1mq2A_boundary"] =
        std::max(max_abs(r_bsb.row(M)), max_abs(r_bsb.col(M)));
    out["BBstar_minus_q2invA1mA_boundary"] =
        std::max(max_abs(r_bbs.row(M)), max_abs(r_bbs.col(M)));
    return out;
}

double derivative_norm(const QParam& q, const QFunction& f, int N) {
    if (N < f.support_bound() + 2) {
        throw std::invalid_argument(
            "derivative_norm: N must be >= support_bound + 2");
    }
    const Eigen::MatrixXcd A = rep_A(q, N).entries;
    double max_diag = 0.0;
    for (int k = 0; k < N; ++k) {
        const std::complex<double> diff = f.value_at(k) - f.value_at(k + 1);
        if (diff == 0.0) continue;
        const double a = A(k, k).real();
        const double coeff =
            std::abs(diff) / (std::pow(q.q(), 2 * k) * q.one_minus_q2());
        max_diag = std::max(max_diag, a * (1.0 - q.q2() * a) * coeff * coeff);
    }
    return std::sqrt(max_diag);
}

double haar_projection_mass(const QParam& q, int n) {
    if (n < 0) {
        throw std::invalid_argument("haar_projection_mass: n must be >= 0");
    }
    double sum = 0.0;
    for (int k = n; k >= 0; --k) {
        sum += std::pow(q.q(), 2 * k);
    }
    return q.one_minus_q2() * sum;
}

void write_matrix_csv(const TruncatedOperator& op, std::ostream& os) {
    os << "row,col,re,im\n";
    char buf[80];
    for (int r = 0; r < op.dim; ++r) {
        for (int c = 0; c < op.dim; ++c) {
            const auto v = op.entries(r, c);
            if (v == 0.0) continue;
            std::snprintf(buf, sizeof(buf), "%d,%d,%.17g,%.17g\n", r, c,
                          v.real(), v.imag());
            os << buf;
        }
    }
}

}  // namespace qint
