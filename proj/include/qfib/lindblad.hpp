// lindblad.hpp - density matrices, Lindblad generators, Liouville-space
// vectorization and state evolution
#pragma once

#include <optional>
#include <vector>

#include "qfib/errors.hpp"
#include "qfib/linalg.hpp"
#include "qfib/rate_profile.hpp"

namespace qfib {

// Hermitian, unit-trace, positive-semidefinite (within tolerance) operator.
class DensityMatrix {
public:
    static DensityMatrix from_matrix(Matrix rho, double herm_tol = 1e-10,
                                     double trace_tol = 1e-10, double psd_tol = 1e-9);
    static DensityMatrix pure(const Vector& psi);
    static DensityMatrix maximally_mixed(Eigen::Index dim);

    const Matrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }
    double purity() const;  // Tr[rho^2]

private:
    explicit DensityMatrix(Matrix m) : m_(std::move(m)) {}
    Matrix m_;
};

// Unit-norm vector on H (x) H with the purity Tr[rho^2] recorded at
// construction, so the raw (trace-correct) vector can be recovered as
// sqrt(purity) * amplitudes.
struct VectorizedState {
    Vector amplitudes;
    double purity = 1.0;

    Eigen::Index dim() const { return amplitudes.size(); }
    Vector raw() const { return std::sqrt(purity) * amplitudes; }
};

struct JumpTerm {
    Matrix op;
    RateProfile rate;
};

// Hamiltonian plus jump terms; the generator of the dynamical map
//   d(rho)/dtau = -i[H, rho] + sum_k eta_k (A_k rho A_k^dag - {A_k^dag A_k, rho}/2)
class LindbladGenerator {
public:
    static LindbladGenerator make(Matrix hamiltonian, std::vector<JumpTerm> jumps,
                                  double herm_tol = 1e-10);

    Eigen::Index dim() const { return hamiltonian_.rows(); }
    const Matrix& hamiltonian() const { return hamiltonian_; }
    const std::vector<JumpTerm>& jumps() const { return jumps_; }
    // true if any rate is negative somewhere (non-Markovian window)
    bool any_negative_rate() const;

private:
    LindbladGenerator() = default;
    Matrix hamiltonian_;
    std::vector<JumpTerm> jumps_;
};

// Row-major stacking: vec(rho)_(i*d+j) = rho_ij, so X rho Y -> (X kron Y^T) vec(rho)
// and vec(|psi><psi|) = |psi> (x) |psi*>.

// Unit-normalized vectorization with recorded purity.
VectorizedState vectorize(const DensityMatrix& rho);

// Raw inverse of the stacking (no validation, no normalization undone beyond
// the explicit scale factor).
Matrix unvec(const Vector& v, double scale = 1.0);

// Inverse of vectorize: validates the result as a DensityMatrix.
DensityMatrix devectorize(const VectorizedState& v, double herm_tol = 1e-10,
                          double trace_tol = 1e-10, double psd_tol = 1e-9);
DensityMatrix devectorize(const Vector& v, double purity_scale, double herm_tol = 1e-10,
                          double trace_tol = 1e-10, double psd_tol = 1e-9);

// d(rho)/dtau for an arbitrary operator argument (rates evaluated at tau).
Matrix apply_generator(const LindbladGenerator& gen, const Matrix& rho, double tau);

// d^2 x d^2 matrix representation:
//   -i(H (x) I - I (x) H^T)
//   + sum_k eta_k(tau) [A (x) A* - (A^dag A (x) I + I (x) (A^dag A)^T)/2]
Matrix superoperator(const LindbladGenerator& gen, double tau);

struct EvolveDiagnostics {
    double trace_drift = 0.0;          // |Tr rho - 1|
    double hermiticity_residual = 0.0; // max |rho - rho^dag|
    double min_eigenvalue = 0.0;
    bool non_markovian_warning = false;
};

// Fixed-step RK4 integration of the master equation; rates are sampled at the
// RK4 stage times. The trace is never renormalized. Throws ToleranceNotMet if
// the final state violates Hermiticity/trace beyond 1e-7 (or positivity, for
// all-nonnegative rate profiles).
DensityMatrix evolve_direct(const LindbladGenerator& gen, const DensityMatrix& rho0,
                            double tau, int steps, EvolveDiagnostics* diag = nullptr);

// Semigroup evolution exp(X * Lshape) applied to vec(rho0), unit-normalized
// with the purity recorded. X is the integrated parameter multiplying the
// generator shape.
VectorizedState evolve_vectorized(const Matrix& lshape, const DensityMatrix& rho0,
                                  double integrated_x);
VectorizedState evolve_vectorized(const Matrix& lshape, const VectorizedState& v0,
                                  double integrated_x);
// Convenience: builds the shape from a generator with constant rates.
VectorizedState evolve_vectorized(const LindbladGenerator& gen, const DensityMatrix& rho0,
                                  double integrated_x);

}  // namespace qfib
