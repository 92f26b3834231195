// ops.hpp - small operator builders: Pauli matrices, projectors, ladder ops
#pragma once

#include <cmath>

#include "qfib/errors.hpp"
#include "qfib/linalg.hpp"

namespace qfib::ops {

inline Matrix identity(Eigen::Index d) {
    return Matrix::Identity(d, d);
}

inline Matrix sigma_x() {
    Matrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

inline Matrix sigma_y() {
    Matrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}

inline Matrix sigma_z() {
    Matrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

// |i><j| in a d-dimensional space
inline Matrix basis_op(Eigen::Index d, Eigen::Index i, Eigen::Index j) {
    if (i >= d || j >= d) throw DimensionMismatch("basis_op: index out of range");
    Matrix m = Matrix::Zero(d, d);
    m(i, j) = 1.0;
    return m;
}

inline Vector basis_ket(Eigen::Index d, Eigen::Index i) {
    if (i >= d) throw DimensionMismatch("basis_ket: index out of range");
    Vector v = Vector::Zero(d);
    v(i) = 1.0;
    return v;
}

// a|n> = sqrt(n) |n-1> on the truncated Fock space {0, ..., d-1}
inline Matrix annihilation(Eigen::Index d) {
    Matrix m = Matrix::Zero(d, d);
    for (Eigen::Index n = 1; n < d; ++n)
        m(n - 1, n) = std::sqrt(static_cast<double>(n));
    return m;
}

inline Matrix number_op(Eigen::Index d) {
    Matrix m = Matrix::Zero(d, d);
    for (Eigen::Index n = 0; n < d; ++n) m(n, n) = static_cast<double>(n);
    return m;
}

// op acting on qubit `site` of an n-qubit register, identity elsewhere
inline Matrix embed_qubit_op(const Matrix& op, int site, int n_qubits) {
    Matrix out = Matrix::Identity(1, 1);
    for (int q = 0; q < n_qubits; ++q)
        out = kron(out, q == site ? op : identity(2));
    return out;
}

}  // namespace qfib::ops
