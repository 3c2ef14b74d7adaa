#include "qint/transport.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace qint {

namespace {

QPoint atom(int depth, int pos) {
    // Chain order: Index(0), ..., Index(depth), Zero.
    return pos <= depth ? QPoint::index(pos) : QPoint::zero();
}

void check_compatible(const StateMeasure& mu, const StateMeasure& nu) {
    if (mu.depth() != nu.depth()) {
        throw std::invalid_argument("measures must share a support depth");
    }
}

}  // namespace

StateMeasure::StateMeasure(int depth, std::vector<double> weights)
    : depth_(depth), weights_(std::move(weights)) {
    if (depth_ < 0) {
        throw std::invalid_argument("StateMeasure: depth must be >= 0");
    }
    if (weights_.size() != static_cast<std::size_t>(depth_) + 2) {
        throw std::invalid_argument("StateMeasure: expected depth + 2 weights");
    }
    double sum = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0)) {
            throw std::invalid_argument("StateMeasure: weights must be >= 0");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("StateMeasure: weights must sum to 1");
    }
}

StateMeasure StateMeasure::dirac(int depth, QPoint at) {
    std::vector<double> w(static_cast<std::size_t>(depth) + 2, 0.0);
    if (at.is_zero()) {
        w.back() = 1.0;
    } else {
        if (at.k() > depth) {
            throw std::invalid_argument("dirac: atom outside support depth");
        }
        w[static_cast<std::size_t>(at.k())] = 1.0;
    }
    return StateMeasure(depth, std::move(w));
}

nlohmann::json state_to_json(const StateMeasure& mu) {
    return {{"depth", mu.depth()}, {"weights", mu.weights()}};
}

StateMeasure state_from_json(const nlohmann::json& j) {
    return StateMeasure(j.at("depth").get<int>(),
                        j.at("weights").get<std::vector<double>>());
}

CertifiedValue mk_distance(const QParam& q, const StateMeasure& mu,
                           const StateMeasure& nu, double tol) {
    check_compatible(mu, nu);
    const int depth = mu.depth();
    // Gap g_k separates chain positions k and k+1; the last gap reaches Zero.
    CertifiedValue out;
    double cum = 0.0;
    for (int k = 0; k <= depth; ++k) {
        cum += mu.weights()[k] - nu.weights()[k];
        const double flow = std::abs(cum);
        if (flow == 0.0) continue;
        if (k < depth) {
            out.value += inv_rho(q, k) * flow;
        } else {
            const CertifiedValue tail = tail_sum(q, depth, tol);
            out.value += tail.value * flow;
            out.radius = tail.radius * flow;
        }
    }
    return out;
}

double greedy_transport(const QParam& q, const StateMeasure& mu,
                        const StateMeasure& nu) {
    check_compatible(mu, nu);
    const int depth = mu.depth();
    const int n = depth + 2;
    constexpr double pair_tol = 1e-13;

    double cost = 0.0;
    int i = 0, j = 0;
    double a = mu.weights()[0], b = nu.weights()[0];
    while (i < n && j < n) {
        const double m = std::min(a, b);
        if (m > 0.0 && i != j) {
            cost += m * dq(q, atom(depth, i), atom(depth, j), pair_tol).value;
        }
        a -= m;
        b -= m;
        if (a <= 0.0) {
            if (++i < n) a = mu.weights()[static_cast<std::size_t>(i)];
        }
        if (b <= 0.0) {
            if (++j < n) b = nu.weights()[static_cast<std::size_t>(j)];
        }
    }
    return cost;
}

CertifiedValue mk_diameter(const QParam& q, int depth, double tol) {
    if (depth < 1) {
        throw std::invalid_argument("mk_diameter: depth must be >= 1");
    }
    return mk_distance(q, StateMeasure::dirac(depth, QPoint::index(0)),
                       StateMeasure::dirac(depth, QPoint::zero()), tol);
}

}  // namespace qint
