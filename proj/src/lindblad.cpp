// lindblad.cpp - generators, vectorization and evolution

#include "qfib/lindblad.hpp"

#include <cmath>
#include <limits>

#include "qfib/ops.hpp"

namespace qfib {

DensityMatrix DensityMatrix::from_matrix(Matrix rho, double herm_tol, double trace_tol,
                                         double psd_tol) {
    if (rho.rows() != rho.cols() || rho.rows() == 0)
        throw DimensionMismatch("DensityMatrix: matrix must be square and non-empty");
    if (!all_finite(rho))
        throw NumericalOverflow("DensityMatrix: non-finite entries");
    if (!is_hermitian(rho, herm_tol))
        throw NotHermitian("DensityMatrix: not Hermitian within tolerance");
    const double trace_err = std::abs(rho.trace() - Complex(1.0, 0.0));
    if (trace_err > trace_tol)
        throw ToleranceNotMet("DensityMatrix: trace differs from 1 beyond tolerance");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(rho));
    if (solver.eigenvalues().minCoeff() < -psd_tol)
        throw ToleranceNotMet("DensityMatrix: negative eigenvalue beyond tolerance");
    return DensityMatrix(std::move(rho));
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
    const double n = psi.norm();
    if (n == 0.0) throw DomainError("DensityMatrix::pure: zero vector");
    const Vector u = psi / n;
    return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
    if (dim <= 0) throw DimensionMismatch("DensityMatrix: dimension must be positive");
    return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const {
    return (m_ * m_).trace().real();
}

LindbladGenerator LindbladGenerator::make(Matrix hamiltonian, std::vector<JumpTerm> jumps,
                                          double herm_tol) {
    if (hamiltonian.rows() != hamiltonian.cols() || hamiltonian.rows() == 0)
        throw DimensionMismatch("LindbladGenerator: Hamiltonian must be square");
    if (!is_hermitian(hamiltonian, herm_tol))
        throw NotHermitian("LindbladGenerator: Hamiltonian not Hermitian");
    for (const auto& j : jumps) {
        if (j.op.rows() != hamiltonian.rows() || j.op.cols() != hamiltonian.cols())
            throw DimensionMismatch("LindbladGenerator: jump operator dimension mismatch");
    }
    LindbladGenerator g;
    g.hamiltonian_ = std::move(hamiltonian);
    g.jumps_ = std::move(jumps);
    return g;
}

bool LindbladGenerator::any_negative_rate() const {
    for (const auto& j : jumps_)
        if (!j.rate.nonnegative()) return true;
    return false;
}

VectorizedState vectorize(const DensityMatrix& rho) {
    const Eigen::Index d = rho.dim();
    Vector v(d * d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) v(i * d + j) = rho.matrix()(i, j);
    const double purity = v.squaredNorm();  // sum |rho_ij|^2 = Tr[rho^2]
    return {v / std::sqrt(purity), purity};
}

Matrix unvec(const Vector& v, double scale) {
    const auto len = v.size();
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(len))));
    if (d * d != len)
        throw NotSquareLength("unvec: vector length is not a perfect square");
    Matrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) m(i, j) = scale * v(i * d + j);
    return m;
}

DensityMatrix devectorize(const VectorizedState& v, double herm_tol, double trace_tol,
                          double psd_tol) {
    return devectorize(v.amplitudes, std::sqrt(v.purity), herm_tol, trace_tol, psd_tol);
}

DensityMatrix devectorize(const Vector& v, double purity_scale, double herm_tol,
                          double trace_tol, double psd_tol) {
    return DensityMatrix::from_matrix(unvec(v, purity_scale), herm_tol, trace_tol, psd_tol);
}

Matrix apply_generator(const LindbladGenerator& gen, const Matrix& rho, double tau) {
    if (rho.rows() != gen.dim() || rho.cols() != gen.dim())
        throw DimensionMismatch("apply_generator: state dimension mismatch");
    const Complex minus_i(0.0, -1.0);
    Matrix out = minus_i * (gen.hamiltonian() * rho - rho * gen.hamiltonian());
    for (const auto& j : gen.jumps()) {
        const double eta = j.rate.value(tau);
        if (eta == 0.0) continue;
        const Matrix ada = j.op.adjoint() * j.op;
        out += eta * (j.op * rho * j.op.adjoint() - 0.5 * (ada * rho + rho * ada));
    }
    return out;
}

Matrix superoperator(const LindbladGenerator& gen, double tau) {
    const Eigen::Index d = gen.dim();
    const Matrix id = ops::identity(d);
    const Complex minus_i(0.0, -1.0);
    Matrix l = minus_i * (kron(gen.hamiltonian(), id) -
                          kron(id, gen.hamiltonian().transpose()));
    for (const auto& j : gen.jumps()) {
        const double eta = j.rate.value(tau);
        if (eta == 0.0) continue;
        const Matrix ada = j.op.adjoint() * j.op;
        l += eta * (kron(j.op, j.op.conjugate()) -
                    0.5 * (kron(ada, id) + kron(id, ada.transpose())));
    }
    return l;
}

DensityMatrix evolve_direct(const LindbladGenerator& gen, const DensityMatrix& rho0,
                            double tau, int steps, EvolveDiagnostics* diag) {
    if (steps < 1) throw DomainError("evolve_direct: steps must be >= 1");
    if (rho0.dim() != gen.dim())
        throw DimensionMismatch("evolve_direct: state dimension mismatch");

    const double h = tau / static_cast<double>(steps);
    Matrix rho = rho0.matrix();
    for (int n = 0; n < steps; ++n) {
        const double t = static_cast<double>(n) * h;
        const Matrix k1 = apply_generator(gen, rho, t);
        const Matrix k2 = apply_generator(gen, rho + 0.5 * h * k1, t + 0.5 * h);
        const Matrix k3 = apply_generator(gen, rho + 0.5 * h * k2, t + 0.5 * h);
        const Matrix k4 = apply_generator(gen, rho + h * k3, t + h);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    EvolveDiagnostics local;
    local.trace_drift = std::abs(rho.trace() - Complex(1.0, 0.0));
    local.hermiticity_residual = max_abs(rho - rho.adjoint());
    local.non_markovian_warning = gen.any_negative_rate();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(rho));
    local.min_eigenvalue = solver.eigenvalues().minCoeff();
    if (diag) *diag = local;

    constexpr double final_tol = 1e-7;
    if (!all_finite(rho))
        throw NumericalOverflow("evolve_direct: non-finite state");
    if (local.trace_drift > final_tol || local.hermiticity_residual > final_tol)
        throw ToleranceNotMet("evolve_direct: trace/Hermiticity drift beyond 1e-7");
    // Positivity is only guaranteed (and therefore only enforced) for
    // Markovian rate profiles.
    if (!local.non_markovian_warning && local.min_eigenvalue < -final_tol)
        throw ToleranceNotMet("evolve_direct: negative eigenvalue beyond 1e-7");
    return DensityMatrix::from_matrix(std::move(rho), final_tol, final_tol,
                                      local.non_markovian_warning
                                          ? std::numeric_limits<double>::infinity()
                                          : final_tol);
}

VectorizedState evolve_vectorized(const Matrix& lshape, const DensityMatrix& rho0,
                                  double integrated_x) {
    if (lshape.rows() != rho0.dim() * rho0.dim())
        throw DimensionMismatch("evolve_vectorized: superoperator/state mismatch");
    return evolve_vectorized(lshape, vectorize(rho0), integrated_x);
}

VectorizedState evolve_vectorized(const Matrix& lshape, const VectorizedState& v0,
                                  double integrated_x) {
    if (lshape.rows() != lshape.cols() || lshape.rows() != v0.dim())
        throw DimensionMismatch("evolve_vectorized: superoperator/state mismatch");
    if (!std::isfinite(integrated_x))
        throw DomainError("evolve_vectorized: integrated parameter must be finite");
    const Vector w = expm_action(integrated_x * lshape, v0.raw());
    const double norm = w.norm();
    if (!std::isfinite(norm) || norm == 0.0)
        throw NumericalOverflow("evolve_vectorized: state norm overflow/underflow");
    return {w / norm, norm * norm};
}

VectorizedState evolve_vectorized(const LindbladGenerator& gen, const DensityMatrix& rho0,
                                  double integrated_x) {
    for (const auto& j : gen.jumps())
        if (j.rate.kind() != RateProfile::Kind::Constant)
            throw DomainError(
                "evolve_vectorized: generator shape must have constant rates; "
                "time dependence enters only through the integrated parameter");
    return evolve_vectorized(superoperator(gen, 0.0), rho0, integrated_x);
}

}  // namespace qfib
