// fisher.hpp - symmetric logarithmic derivatives, quantum Fisher information,
// the vectorized-state information functional and the precision bounds built
// from it
#pragma once

#include <functional>
#include <optional>

#include "qfib/lindblad.hpp"

namespace qfib {

// Hermitian L solving d(rho) = (L rho + rho L)/2 on the support of rho.
// Spectral terms with r_i + r_j < support_tol are dropped.
Matrix sld(const DensityMatrix& rho, const Matrix& drho, double herm_tol = 1e-9,
           double trace_tol = 1e-9, double support_tol = 1e-12);

// Tr[rho L^2] with L the SLD of (rho, drho).
double qfi_exact(const DensityMatrix& rho, const Matrix& drho);

// Pure-state closed form for H(x) = x*hgen: 4 tau^2 (<hgen^2> - <hgen>^2).
double qfi_closed_pure(const Vector& psi, const Matrix& hgen, double tau);

// How the estimated scalar multiplies the generator shape: either a constant
// value over the duration, or a known profile x(.) whose instantaneous value
// at tau is estimated.
class ParameterizedEvolution {
public:
    enum class Kind { Constant, Profile };

    static ParameterizedEvolution constant(Matrix shape, double x, double tau);
    static ParameterizedEvolution profile(Matrix shape, double tau, double integrated_x,
                                          double dlnx_dtau);

    const Matrix& shape() const { return shape_; }
    Kind kind() const { return kind_; }
    double tau() const { return tau_; }
    double integrated_x() const { return integrated_x_; }
    // 4 tau^2 for the constant kind, 4 / (d ln x / d tau)^2 for profiles.
    // Throws ZeroLogDerivative for a profile with vanishing log-derivative.
    double prefactor() const;

private:
    ParameterizedEvolution() = default;
    Matrix shape_;
    Kind kind_ = Kind::Constant;
    double tau_ = 0.0;
    double integrated_x_ = 0.0;
    double dlnx_dtau_ = 0.0;
};

// prefactor * (<v|S^dag S|v> - |<v|S|v>|^2) with S the generator shape; the
// covariance is real and nonnegative by Cauchy-Schwarz.
double qfi_tilde_cov(const VectorizedState& v, const ParameterizedEvolution& evo);

// Independent finite-difference route: 4(<dv|dv> - |<v|dv>|^2) with dv by
// central difference. h <= 0 selects the default 1e-5 * max(1, |x0|).
double qfi_tilde_fd(const std::function<VectorizedState(double)>& family, double x0,
                    double h = 0.0);

// Identity route through the SLD of the unvectorized state:
//   (2/Tr[rho^2]) (Tr[rho L rho L] + Tr[rho^2 L^2] - 2 (Tr[rho^2 L])^2 / Tr[rho^2])
double qfi_tilde_from_sld(const DensityMatrix& rho, const Matrix& l);

// Conversion factor: 2 for pure states (Tr[rho^2] > 1 - purity_tol), else
// 4 lambda_max / Tr[rho^2].
double kappa(const DensityMatrix& rho, double purity_tol = 1e-9);

struct SandwichBounds {
    double lower = 0.0;
    // Withheld (nullopt) when lambda_min <= singular_tol: the upper bound is
    // useless for singular states.
    std::optional<double> upper;
    std::optional<double> correction;
};

// lower = Tr[rho^2]/(4 lambda_max) * f_tilde
// upper = Tr[rho^2]/(4 lambda_min) * f_tilde + (Tr[rho^2 L])^2/(lambda_min Tr[rho^2])
SandwichBounds sandwich_bounds(const DensityMatrix& rho, const Matrix& l, double f_tilde,
                               double singular_tol = 1e-9);

// Precision floor 1/sqrt(M * f). Throws NonpositiveInformation for f <= 0.
double qcrb(double f, int repetitions);

// Reparametrization: F(b) = (da/db)^2 F(a).
double chain_rule(double f_wrt_a, double dadb);

// Bundle for one model/parameter point.
struct QfiReport {
    std::optional<double> qfi_exact;  // absent when no exact route is available
    double qfi_tilde = 0.0;
    double kappa = 0.0;
    double bound_lower = 0.0;
    std::optional<double> bound_upper;
    std::optional<double> correction;
    double precision_bound = 0.0;  // sqrt(kappa / (M * qfi_tilde))
    int repetitions = 1;
};

// Assembles a QfiReport from an evolved state and its estimation structure.
QfiReport make_report(const DensityMatrix& rho, const Matrix& l_sld, double f_tilde,
                      std::optional<double> f_exact, int repetitions);

}  // namespace qfib
