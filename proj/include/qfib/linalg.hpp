// linalg.hpp - dense complex kernels: Kronecker products, Hermitian
// eigendecomposition, matrix exponentials and their directional derivatives
#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qfib {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermTol = 1e-10;

// Largest |entry|.
double max_abs(const Matrix& m);

// max_ij |m - m^dagger| <= tol
bool is_hermitian(const Matrix& m, double tol = kHermTol);

// (m + m^dagger)/2
Matrix hermitize(const Matrix& m);

// true iff every entry is finite
bool all_finite(const Matrix& m);
bool all_finite(const Vector& v);

Matrix kron(const Matrix& a, const Matrix& b);

struct HermitianEigensystem {
    RealVector eigenvalues;  // ascending
    Matrix eigenvectors;     // orthonormal columns, same order
};

// Throws NotHermitian if the input fails the Hermiticity tolerance.
// Degenerate eigenvalues get an arbitrary orthonormal basis of the
// eigenspace; output is deterministic for a fixed input.
HermitianEigensystem eigh(const Matrix& h, double herm_tol = kHermTol);

// Scaling-and-squaring with a diagonal Pade core (orders 3/5/7/9/13 chosen
// from the 1-norm). Relative accuracy ~1e-12 for ||m|| <= 20.
Matrix expm(const Matrix& m);

// Directional derivative D exp(m)[e], computed from the exponential of the
// block matrix [[m, e], [0, m]] whose top-right block is the answer.
Matrix expm_frechet(const Matrix& m, const Matrix& e);

// expm(m) * v without forming expm(m): scaled truncated Taylor series.
Vector expm_action(const Matrix& m, const Vector& v);

}  // namespace qfib
