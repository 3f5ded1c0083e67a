#ifndef EMOSC_LINALG_HPP
#define EMOSC_LINALG_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

// Small dense linear algebra used by the mode analysis and the test oracles:
// complex 4-vectors / 4x4 matrices with the handful of operations the
// symplectic construction needs, plus a cyclic Jacobi eigensolver for real
// symmetric matrices (used by the Lanczos post-processing and by numeric
// cross-checks).

namespace emosc {

using cplx = std::complex<double>;

struct Vec4 {
    std::array<cplx, 4> a{};

    cplx& operator[](std::size_t i) { return a[i]; }
    const cplx& operator[](std::size_t i) const { return a[i]; }
};

struct Mat4 {
    // Row-major storage.
    std::array<cplx, 16> a{};

    cplx& operator()(std::size_t i, std::size_t j) { return a[4 * i + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a[4 * i + j]; }

    static Mat4 identity();
    static Mat4 zero() { return Mat4{}; }
};

Mat4 operator*(const Mat4& lhs, const Mat4& rhs);
Mat4 operator+(const Mat4& lhs, const Mat4& rhs);
Mat4 operator-(const Mat4& lhs, const Mat4& rhs);
Mat4 operator*(cplx scale, const Mat4& m);

// Matrix times column vector.
Vec4 operator*(const Mat4& m, const Vec4& v);
// Row vector times matrix.
Vec4 operator*(const Vec4& v, const Mat4& m);

// Unconjugated contraction sum_i a_i b_i (row . column).
cplx dot_bilinear(const Vec4& lhs, const Vec4& rhs);

Vec4 conj(const Vec4& v);
Vec4 operator*(cplx scale, const Vec4& v);
Vec4 operator+(const Vec4& lhs, const Vec4& rhs);
Vec4 operator-(const Vec4& lhs, const Vec4& rhs);

// Conjugate transpose / plain transpose.
Mat4 adjoint(const Mat4& m);
Mat4 transpose(const Mat4& m);

// Largest |entry| of the matrix (convergence/residual metric).
double max_abs(const Mat4& m);
double max_abs(const Vec4& v);

// Determinant by cofactor expansion (used on real-valued matrices whose
// entries are stored as complex with zero imaginary part).
cplx det(const Mat4& m);

// Canonical block matrices of the phase-space formalism, ordered
// (x, p_x, y, p_y): sigma_y blocks on the diagonal and the diag(1,-1,1,-1)
// parity matrix.
Mat4 sigma_y_blocks();
Mat4 sigma_z_blocks();

// Cyclic Jacobi diagonalization of a real symmetric n x n matrix (row-major).
// Returns eigenvalues ascending; `vectors` (if non-null) receives the
// corresponding orthonormal eigenvectors as columns (row-major n x n).
std::vector<double> jacobi_symmetric(std::vector<double> matrix, std::size_t n,
                                     std::vector<double>* vectors = nullptr);

}  // namespace emosc

#endif
