// linalg.cpp - dense complex kernels

#include "qfib/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "qfib/errors.hpp"

namespace qfib {

double max_abs(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - m.adjoint()) <= tol;
}

Matrix hermitize(const Matrix& m) {
    return 0.5 * (m + m.adjoint());
}

bool all_finite(const Matrix& m) {
    return m.allFinite();
}

bool all_finite(const Vector& v) {
    return v.allFinite();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

HermitianEigensystem eigh(const Matrix& h, double herm_tol) {
    if (h.rows() != h.cols())
        throw DimensionMismatch("eigh: matrix must be square");
    if (!is_hermitian(h, herm_tol))
        throw NotHermitian("eigh: input is not Hermitian within tolerance");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(h));
    if (solver.info() != Eigen::Success)
        throw ToleranceNotMet("eigh: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

double one_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().colwise().sum().maxCoeff();
}

// Diagonal Pade approximant of order `m` evaluated at `a`; coeffs are the
// standard numerator coefficients b_0..b_m (denominator uses alternating
// signs on the odd part).
Matrix pade_expm(const Matrix& a, int order) {
    const Eigen::Index n = a.rows();
    const Matrix id = Matrix::Identity(n, n);
    const Matrix a2 = a * a;

    Matrix u, v;
    switch (order) {
        case 3: {
            constexpr std::array<double, 4> b{120., 60., 12., 1.};
            u = a * (b[3] * a2 + b[1] * id);
            v = b[2] * a2 + b[0] * id;
            break;
        }
        case 5: {
            constexpr std::array<double, 6> b{30240., 15120., 3360., 420., 30., 1.};
            const Matrix a4 = a2 * a2;
            u = a * (b[5] * a4 + b[3] * a2 + b[1] * id);
            v = b[4] * a4 + b[2] * a2 + b[0] * id;
            break;
        }
        case 7: {
            constexpr std::array<double, 8> b{17297280., 8648640., 1995840., 277200.,
                                              25200.,    1512.,    56.,      1.};
            const Matrix a4 = a2 * a2;
            const Matrix a6 = a4 * a2;
            u = a * (b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
            v = b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
            break;
        }
        case 9: {
            constexpr std::array<double, 10> b{17643225600., 8821612800., 2075673600.,
                                               302702400.,   30270240.,   2162160.,
                                               110880.,      3960.,       90.,
                                               1.};
            const Matrix a4 = a2 * a2;
            const Matrix a6 = a4 * a2;
            const Matrix a8 = a6 * a2;
            u = a * (b[9] * a8 + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
            v = b[8] * a8 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
            break;
        }
        default: {  // 13
            constexpr std::array<double, 14> b{
                64764752532480000., 32382376266240000., 7771770303897600.,
                1187353796428800.,  129060195264000.,   10559470521600.,
                670442572800.,      33522128640.,       1323241920.,
                40840800.,          960960.,            16380.,
                182.,               1.};
            const Matrix a4 = a2 * a2;
            const Matrix a6 = a4 * a2;
            u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
                     b[3] * a2 + b[1] * id);
            v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
                b[2] * a2 + b[0] * id;
            break;
        }
    }
    // (v - u) x = (v + u)
    return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

Matrix expm(const Matrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("expm: matrix must be square");
    if (!all_finite(m))
        throw NumericalOverflow("expm: input has non-finite entries");
    if (m.size() == 0) return m;

    // Order thresholds on the 1-norm (Higham's scaling-and-squaring bounds).
    constexpr double theta3 = 1.495585217958292e-2;
    constexpr double theta5 = 2.539398330063230e-1;
    constexpr double theta7 = 9.504178996162932e-1;
    constexpr double theta9 = 2.097847961257068e0;
    constexpr double theta13 = 5.371920351148152e0;

    const double norm = one_norm(m);
    Matrix result;
    if (norm <= theta3) {
        result = pade_expm(m, 3);
    } else if (norm <= theta5) {
        result = pade_expm(m, 5);
    } else if (norm <= theta7) {
        result = pade_expm(m, 7);
    } else if (norm <= theta9) {
        result = pade_expm(m, 9);
    } else {
        int squarings = 0;
        if (norm > theta13)
            squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
        const double scale = std::ldexp(1.0, -squarings);
        result = pade_expm(scale * m, 13);
        for (int s = 0; s < squarings; ++s) result = result * result;
    }
    if (!all_finite(result))
        throw NumericalOverflow("expm: overflow while exponentiating");
    return result;
}

Matrix expm_frechet(const Matrix& m, const Matrix& e) {
    if (m.rows() != m.cols() || e.rows() != e.cols())
        throw DimensionMismatch("expm_frechet: matrices must be square");
    if (m.rows() != e.rows())
        throw DimensionMismatch("expm_frechet: matrices must have equal dimension");
    const Eigen::Index n = m.rows();
    Matrix block = Matrix::Zero(2 * n, 2 * n);
    block.topLeftCorner(n, n) = m;
    block.topRightCorner(n, n) = e;
    block.bottomRightCorner(n, n) = m;
    return expm(block).topRightCorner(n, n);
}

Vector expm_action(const Matrix& m, const Vector& v) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("expm_action: matrix must be square");
    if (m.cols() != v.size())
        throw DimensionMismatch("expm_action: matrix/vector dimension mismatch");
    if (!all_finite(m) || !all_finite(v))
        throw NumericalOverflow("expm_action: non-finite input");

    // Split exp(m) into stages of unit 1-norm; each stage is summed with a
    // truncated Taylor series that has converged to roundoff by ~20 terms.
    const double norm = one_norm(m);
    const int stages = std::max(1, static_cast<int>(std::ceil(norm)));
    const double inv = 1.0 / static_cast<double>(stages);
    constexpr int max_terms = 64;

    Vector f = v;
    for (int stage = 0; stage < stages; ++stage) {
        Vector term = f;
        for (int k = 1; k <= max_terms; ++k) {
            term = (m * term) * (inv / static_cast<double>(k));
            f += term;
            if (term.norm() <= 1e-18 * f.norm()) break;
        }
    }
    if (!all_finite(f))
        throw NumericalOverflow("expm_action: overflow while exponentiating");
    return f;
}

}  // namespace qfib
