#pragma once

#include "qint/qcore.hpp"

namespace qint {

/// The value of the generator A at a sphere latitude: s = (1-x₃)/2 ∈ [0,1].
class LatitudeParam {
public:
    explicit LatitudeParam(double s);
    double s() const { return s_; }

private:
    double s_;
};

/// The q = 1 metric on [0,1] inherited from the round sphere:
/// |arccos(1-2s) - arccos(1-2t)|. The infimum over the latitude circles
/// is attained along a meridian, which makes the arccos difference exact.
double d1(LatitudeParam s, LatitudeParam t);

/// The isometry φ(t) = 1/2 + 1/2 sin(t) from [-π/2, π/2] onto ([0,1], d1).
LatitudeParam phi(double t);

/// Inverse of φ: t = arcsin(2s - 1).
double phi_inverse(LatitudeParam s);

/// Hausdorff distance of ι_q(X_q) to [-π/2, π/2]; delegates to
/// convergence_certificate and reports its hdist value.
double endpoint_gap(const QParam& q, double tol);

}  // namespace qint
