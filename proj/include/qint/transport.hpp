#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qint/qcore.hpp"

namespace qint {

/// A state on the truncation {Index(0..depth), Zero} of X_q: nonnegative
/// weights summing to 1, stored in chain order with the Zero atom last.
class StateMeasure {
public:
    StateMeasure(int depth, std::vector<double> weights);

    static StateMeasure dirac(int depth, QPoint at);

    int depth() const { return depth_; }
    double weight_at_index(int k) const { return weights_.at(k); }
    double weight_at_zero() const { return weights_.back(); }
    const std::vector<double>& weights() const { return weights_; }

private:
    int depth_;
    std::vector<double> weights_;  // size depth + 2
};

/// JSON schema: {"depth": N, "weights": [w0, ..., wN, wZero]}.
nlohmann::json state_to_json(const StateMeasure& mu);
StateMeasure state_from_json(const nlohmann::json& j);

/// Monge-Kantorovich (Wasserstein-1) distance on the chain via the CDF
/// closed form: Σ over consecutive gaps of gap length · |CDF difference|.
/// Exact on index gaps; the gap to Zero carries a certified tail radius.
CertifiedValue mk_distance(const QParam& q, const StateMeasure& mu,
                           const StateMeasure& nu, double tol);

/// Independent oracle: cost of the monotone (northwest-corner) coupling
/// along the chain order, with atom distances taken from d_q.
double greedy_transport(const QParam& q, const StateMeasure& mu,
                        const StateMeasure& nu);

/// mk between the extreme Diracs δ_{Index(0)} and δ_{Zero}; equals
/// d_q(1, 0).
CertifiedValue mk_diameter(const QParam& q, int depth, double tol);

}  // namespace qint
