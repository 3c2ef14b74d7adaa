#include "qint/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qint/ghdist.hpp"

namespace qint {

LatitudeParam::LatitudeParam(double s) : s_(s) {
    if (!(s >= 0.0) || !(s <= 1.0)) {
        throw std::domain_error("LatitudeParam: s must lie in [0,1]");
    }
}

double d1(LatitudeParam s, LatitudeParam t) {
    return std::abs(std::acos(1.0 - 2.0 * s.s()) - std::acos(1.0 - 2.0 * t.s()));
}

LatitudeParam phi(double t) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(t >= -half_pi) || !(t <= half_pi)) {
        throw std::domain_error("phi: t must lie in [-pi/2, pi/2]");
    }
    return LatitudeParam(std::clamp(0.5 + 0.5 * std::sin(t), 0.0, 1.0));
}

double phi_inverse(LatitudeParam s) {
    return std::asin(2.0 * s.s() - 1.0);
}

double endpoint_gap(const QParam& q, double tol) {
    return convergence_certificate(q, tol).hdist.value;
}

}  // namespace qint
