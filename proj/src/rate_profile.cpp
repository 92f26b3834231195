// rate_profile.cpp

#include "qfib/rate_profile.hpp"

#include <algorithm>
#include <cmath>

namespace qfib {

RateProfile RateProfile::constant(double eta) {
    if (!std::isfinite(eta))
        throw DomainError("RateProfile: constant rate must be finite");
    RateProfile p;
    p.kind_ = Kind::Constant;
    p.constant_value_ = eta;
    return p;
}

RateProfile RateProfile::sampled(std::vector<double> taus, std::vector<double> etas) {
    if (taus.size() < 2 || taus.size() != etas.size())
        throw DomainError("RateProfile: sampled profile needs >= 2 matching knots");
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (!std::isfinite(taus[i]) || !std::isfinite(etas[i]))
            throw DomainError("RateProfile: knots must be finite");
        if (i > 0 && taus[i] <= taus[i - 1])
            throw DomainError("RateProfile: sample grid must be strictly increasing");
    }
    RateProfile p;
    p.kind_ = Kind::Sampled;
    p.taus_ = std::move(taus);
    p.etas_ = std::move(etas);
    return p;
}

double RateProfile::value(double tau) const {
    if (kind_ == Kind::Constant) return constant_value_;
    if (tau <= taus_.front()) return etas_.front();
    if (tau >= taus_.back()) return etas_.back();
    const auto it = std::upper_bound(taus_.begin(), taus_.end(), tau);
    const std::size_t j = static_cast<std::size_t>(it - taus_.begin());
    const double t0 = taus_[j - 1], t1 = taus_[j];
    const double w = (tau - t0) / (t1 - t0);
    return (1.0 - w) * etas_[j - 1] + w * etas_[j];
}

double RateProfile::primitive(double tau) const {
    // integral from taus_.front() to tau of the clamped interpolant
    double acc = 0.0;
    if (tau <= taus_.front()) return (tau - taus_.front()) * etas_.front();
    for (std::size_t j = 1; j < taus_.size(); ++j) {
        const double t0 = taus_[j - 1], t1 = taus_[j];
        if (tau <= t0) break;
        const double upper = std::min(tau, t1);
        const double e0 = etas_[j - 1];
        const double e1 = value(upper);
        acc += 0.5 * (e0 + e1) * (upper - t0);
    }
    if (tau > taus_.back()) acc += (tau - taus_.back()) * etas_.back();
    return acc;
}

double RateProfile::integral(double t0, double t1) const {
    if (kind_ == Kind::Constant) return constant_value_ * (t1 - t0);
    return primitive(t1) - primitive(t0);
}

double RateProfile::log_derivative(double tau) const {
    if (kind_ == Kind::Constant) return 0.0;
    const double eta = value(tau);
    if (eta == 0.0)
        throw ZeroLogDerivative("RateProfile: log-derivative undefined at eta = 0");
    if (tau < taus_.front() || tau > taus_.back()) return 0.0;  // clamped region
    std::size_t j;  // segment [taus_[j-1], taus_[j]]
    if (tau >= taus_.back()) {
        j = taus_.size() - 1;  // left segment at the final knot
    } else {
        const auto it = std::upper_bound(taus_.begin(), taus_.end(), tau);
        j = static_cast<std::size_t>(it - taus_.begin());
        if (j == 0) j = 1;
    }
    const double slope = (etas_[j] - etas_[j - 1]) / (taus_[j] - taus_[j - 1]);
    return slope / eta;
}

bool RateProfile::nonnegative() const {
    if (kind_ == Kind::Constant) return constant_value_ >= 0.0;
    return std::all_of(etas_.begin(), etas_.end(), [](double e) { return e >= 0.0; });
}

}  // namespace qfib
