// rate_profile.hpp - time-dependent jump rates, constant or piecewise linear
#pragma once

#include <vector>

#include "qfib/errors.hpp"

namespace qfib {

// A rate eta(tau). Sampled profiles interpolate linearly between knots and
// clamp to the end values outside the grid. Negative values are allowed
// (non-Markovian intervals); consumers decide how to react.
class RateProfile {
public:
    enum class Kind { Constant, Sampled };

    static RateProfile constant(double eta);
    // taus strictly increasing, same length as etas, at least two knots
    static RateProfile sampled(std::vector<double> taus, std::vector<double> etas);

    Kind kind() const { return kind_; }
    double value(double tau) const;
    // integral of eta over [t0, t1]; exact for the linear interpolant
    double integral(double t0, double t1) const;
    // d/dtau ln eta(tau); zero for constant profiles. Sampled profiles use
    // the slope of the segment containing tau (right segment at a knot).
    double log_derivative(double tau) const;
    bool nonnegative() const;

private:
    RateProfile() = default;
    // antiderivative of the interpolant from the first knot
    double primitive(double tau) const;

    Kind kind_ = Kind::Constant;
    double constant_value_ = 0.0;
    std::vector<double> taus_;
    std::vector<double> etas_;
};

}  // namespace qfib
