#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qint/qcore.hpp"

namespace qint {

/// A continuous function on X_q given by finitely many stored values
/// f(q^{2k}) plus the tail value f(0). Evaluation at any index not
/// stored returns the tail, so every QFunction stabilises at f(0) and
/// is continuous on X_q by construction.
class QFunction {
public:
    using Value = std::complex<double>;
    using Entry = std::pair<int, Value>;

    QFunction() = default;
    QFunction(std::vector<Entry> values, Value tail);

    static QFunction constant(Value c) { return QFunction({}, c); }
    /// The indicator χ_{{q^{2k}}}: value 1 at index k, tail 0.
    static QFunction indicator(int k) { return QFunction({{k, 1.0}}, 0.0); }

    Value eval(QPoint x) const;
    Value value_at(int k) const;  // eval at Index(k)
    Value tail() const { return tail_; }

    /// Largest explicitly stored index; -1 when no values are stored.
    int support_bound() const;
    const std::vector<Entry>& values() const { return values_; }

private:
    std::vector<Entry> values_;  // sorted by index, indices distinct
    Value tail_ = 0.0;
};

/// JSON schema: {"q": real, "values": [[k, re, im], ...], "tail": [re, im]}.
nlohmann::json qfunction_to_json(const QParam& q, const QFunction& f);
std::pair<QParam, QFunction> qfunction_from_json(const nlohmann::json& j);

/// L_{d_q}(f) together with the gap attaining it and the full gap list
/// ρ_q(k)·|f(q^{2k}) - f(q^{2(k+1)})| for k = 0..support_bound.
struct SeminormReport {
    double value = 0.0;
    std::optional<int> argmax_k;
    std::vector<double> per_gap;
};

/// The Lipschitz seminorm via the successive-difference sup-formula.
/// Gaps beyond the stored support vanish by the tail convention, so the
/// sup is an exact finite max.
SeminormReport seminorm(const QParam& q, const QFunction& f);

/// Independent oracle: sup of |f(x)-f(y)| / d_q(x,y) enumerated over all
/// pairs from {Index(0..depth), Zero}. Requires depth >= support_bound + 2.
double brute_force_seminorm(const QParam& q, const QFunction& f, int depth,
                            double tol);

/// The q²-difference operator: value (f(q^{2k}) - f(q^{2(k+1)})) /
/// (q^{2k}(1-q²)) at index k, tail 0.
QFunction q2_difference(const QParam& q, const QFunction& f);

struct TruncationReport {
    std::vector<double> seminorms;  // L_{d_q}(f · χ_{{q^{2k}: k<=n}}), n = 0..n_max
    /// C = sup_n |f(q^{2n})| / d_q(q^{2n}, 0); every entry of the list is
    /// bounded by seminorm(f) + C/(1-q).
    double growth_constant = 0.0;
};

/// Seminorms of the hard truncations f_n = f · χ_{{q^{2k}: k<=n}}.
/// Requires f.tail() == 0.
TruncationReport truncation_seminorms(const QParam& q, const QFunction& f,
                                      int n_max);

}  // namespace qint
