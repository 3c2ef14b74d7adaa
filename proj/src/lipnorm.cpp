#include "qint/lipnorm.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace qint {

QFunction::QFunction(std::vector<Entry> values, Value tail)
    : values_(std::move(values)), tail_(tail) {
    std::sort(values_.begin(), values_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i].first < 0) {
            throw std::invalid_argument("QFunction: indices must be nonnegative");
        }
        if (i > 0 && values_[i].first == values_[i - 1].first) {
            throw std::invalid_argument("QFunction: indices must be distinct");
        }
    }
}

QFunction::Value QFunction::value_at(int k) const {
    auto it = std::lower_bound(
        values_.begin(), values_.end(), k,
        [](const Entry& e, int key) { return e.first < key; });
    if (it != values_.end() && it->first == k) return it->second;
    return tail_;
}

QFunction::Value QFunction::eval(QPoint x) const {
    if (x.is_zero()) return tail_;
    return value_at(x.k());
}

int QFunction::support_bound() const {
    return values_.empty() ? -1 : values_.back().first;
}

nlohmann::json qfunction_to_json(const QParam& q, const QFunction& f) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& [k, v] : f.values()) {
        vals.push_back({k, v.real(), v.imag()});
    }
    return {{"q", q.q()},
            {"values", vals},
            {"tail", {f.tail().real(), f.tail().imag()}}};
}

std::pair<QParam, QFunction> qfunction_from_json(const nlohmann::json& j) {
    QParam q(j.at("q").get<double>());
    std::vector<QFunction::Entry> vals;
    for (const auto& e : j.at("values")) {
        vals.emplace_back(e.at(0).get<int>(),
                          QFunction::Value(e.at(1).get<double>(),
                                           e.at(2).get<double>()));
    }
    const auto& t = j.at("tail");
    return {q, QFunction(std::move(vals),
                         QFunction::Value(t.at(0).get<double>(),
                                          t.at(1).get<double>()))};
}

SeminormReport seminorm(const QParam& q, const QFunction& f) {
    SeminormReport report;
    const int n = f.support_bound();
    for (int k = 0; k <= n; ++k) {
        const double gap =
            rho(q, k) * std::abs(f.value_at(k) - f.value_at(k + 1));
        report.per_gap.push_back(gap);
        if (gap > report.value) {
            report.value = gap;
            report.argmax_k = k;
        }
    }
    return report;
}

double brute_force_seminorm(const QParam& q, const QFunction& f, int depth,
                            double tol) {
    if (depth < f.support_bound() + 2) {
        throw std::invalid_argument(
            "brute_force_seminorm: depth must be >= support_bound + 2");
    }
    std::vector<QPoint> pts;
    pts.push_back(QPoint::zero());
    for (int k = 0; k <= depth; ++k) pts.push_back(QPoint::index(k));

    double sup = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double num = std::abs(f.eval(pts[i]) - f.eval(pts[j]));
            if (num == 0.0) continue;
            const double den = dq(q, pts[i], pts[j], tol).value;
            sup = std::max(sup, num / den);
        }
    }
    return sup;
}

QFunction q2_difference(const QParam& q, const QFunction& f) {
    std::vector<QFunction::Entry> vals;
    const int n = f.support_bound();
    for (int k = 0; k <= n + 1; ++k) {
        const QFunction::Value diff = f.value_at(k) - f.value_at(k + 1);
        if (diff == 0.0) continue;
        const double denom =
            std::pow(q.q(), 2 * k) * q.one_minus_q2();
        vals.emplace_back(k, diff / denom);
    }
    return QFunction(std::move(vals), 0.0);
}

TruncationReport truncation_seminorms(const QParam& q, const QFunction& f,
                                      int n_max) {
    if (f.tail() != 0.0) {
        throw std::invalid_argument("truncation_seminorms: f(0) must be 0");
    }
    if (n_max < 0) {
        throw std::invalid_argument("truncation_seminorms: n_max must be >= 0");
    }
    TruncationReport report;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<QFunction::Entry> vals;
        for (const auto& e : f.values()) {
            if (e.first <= n) vals.push_back(e);
        }
        report.seminorms.push_back(
            seminorm(q, QFunction(std::move(vals), 0.0)).value);
    }
    for (const auto& [k, v] : f.values()) {
        const double d = tail_sum(q, k, 1e-13).value;
        report.growth_constant =
            std::max(report.growth_constant, std::abs(v) / d);
    }
    return report;
}

}  // namespace qint
