#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include <Eigen/Dense>

#include "qint/lipnorm.hpp"
#include "qint/qcore.hpp"

namespace qint {

/// Truncation of a Podleś-representation operator to span{e_0..e_{N-1}}.
struct TruncatedOperator {
    int dim = 0;
    Eigen::MatrixXcd entries;
    std::string label;
};

/// π(A): diagonal with entries q^{2k}, k = 0..N-1.
TruncatedOperator rep_A(const QParam& q, int N);

/// π(B): subdiagonal shift with weights q^k √(1-q^{2(k+1)}); the row
/// leaving the truncation is dropped.
TruncatedOperator rep_B(const QParam& q, int N);

/// Entrywise max residuals of the defining relations AB = q²BA,
/// B*B = A(1-q²A), BB* = q^{-2}A(1-A) and A = A*. Keys ending in
/// "_interior" restrict to the first N-1 rows/columns; "_boundary"
/// reports the dropped row separately (B*B picks up the truncation
/// defect there, the others do not).
std::map<std::string, double> relation_residuals(const QParam& q, int N);

/// ‖∂₁(f(A))‖ via the diagonal Gram A(1-q²A)·|𝒟-coefficient|²; equals
/// the metric seminorm max_k ρ_q(k)·|Δ_k f|. Requires
/// N >= f.support_bound() + 2.
double derivative_norm(const QParam& q, const QFunction& f, int N);

/// Haar-state mass of the projection Q_n: (1-q²) Σ_{k=0}^n q^{2k}.
double haar_projection_mass(const QParam& q, int n);

/// CSV rows "row,col,re,im" for nonzero entries.
void write_matrix_csv(const TruncatedOperator& op, std::ostream& os);

}  // namespace qint
