#include "emosc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace emosc {

Mat4 Mat4::identity() {
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

Mat4 operator*(const Mat4& lhs, const Mat4& rhs) {
    Mat4 out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) {
            const cplx lik = lhs(i, k);
            if (lik == cplx{}) continue;
            for (std::size_t j = 0; j < 4; ++j) out(i, j) += lik * rhs(k, j);
        }
    return out;
}

Mat4 operator+(const Mat4& lhs, const Mat4& rhs) {
    Mat4 out;
    for (std::size_t i = 0; i < 16; ++i) out.a[i] = lhs.a[i] + rhs.a[i];
    return out;
}

Mat4 operator-(const Mat4& lhs, const Mat4& rhs) {
    Mat4 out;
    for (std::size_t i = 0; i < 16; ++i) out.a[i] = lhs.a[i] - rhs.a[i];
    return out;
}

Mat4 operator*(cplx scale, const Mat4& m) {
    Mat4 out;
    for (std::size_t i = 0; i < 16; ++i) out.a[i] = scale * m.a[i];
    return out;
}

Vec4 operator*(const Mat4& m, const Vec4& v) {
    Vec4 out;
    for (std::size_t i = 0; i < 4; ++i) {
        cplx s{};
        for (std::size_t j = 0; j < 4; ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

Vec4 operator*(const Vec4& v, const Mat4& m) {
    Vec4 out;
    for (std::size_t j = 0; j < 4; ++j) {
        cplx s{};
        for (std::size_t i = 0; i < 4; ++i) s += v[i] * m(i, j);
        out[j] = s;
    }
    return out;
}

cplx dot_bilinear(const Vec4& lhs, const Vec4& rhs) {
    cplx s{};
    for (std::size_t i = 0; i < 4; ++i) s += lhs[i] * rhs[i];
    return s;
}

Vec4 conj(const Vec4& v) {
    Vec4 out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = std::conj(v[i]);
    return out;
}

Vec4 operator*(cplx scale, const Vec4& v) {
    Vec4 out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = scale * v[i];
    return out;
}

Vec4 operator+(const Vec4& lhs, const Vec4& rhs) {
    Vec4 out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = lhs[i] + rhs[i];
    return out;
}

Vec4 operator-(const Vec4& lhs, const Vec4& rhs) {
    Vec4 out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = lhs[i] - rhs[i];
    return out;
}

Mat4 adjoint(const Mat4& m) {
    Mat4 out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(i, j) = std::conj(m(j, i));
    return out;
}

Mat4 transpose(const Mat4& m) {
    Mat4 out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(i, j) = m(j, i);
    return out;
}

double max_abs(const Mat4& m) {
    double best = 0.0;
    for (const cplx& z : m.a) best = std::max(best, std::abs(z));
    return best;
}

double max_abs(const Vec4& v) {
    double best = 0.0;
    for (const cplx& z : v.a) best = std::max(best, std::abs(z));
    return best;
}

namespace {

cplx det3(cplx a, cplx b, cplx c, cplx d, cplx e, cplx f, cplx g, cplx h, cplx i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace

cplx det(const Mat4& m) {
    cplx out{};
    for (std::size_t j = 0; j < 4; ++j) {
        std::array<cplx, 9> minor;
        std::size_t idx = 0;
        for (std::size_t r = 1; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) {
                if (c == j) continue;
                minor[idx++] = m(r, c);
            }
        const cplx cof = det3(minor[0], minor[1], minor[2], minor[3], minor[4], minor[5],
                              minor[6], minor[7], minor[8]);
        out += ((j % 2 == 0) ? 1.0 : -1.0) * m(0, j) * cof;
    }
    return out;
}

Mat4 sigma_y_blocks() {
    // Two sigma_y blocks on the diagonal in the (x, p_x, y, p_y) ordering.
    const cplx I{0.0, 1.0};
    Mat4 m;
    m(0, 1) = -I;
    m(1, 0) = I;
    m(2, 3) = -I;
    m(3, 2) = I;
    return m;
}

Mat4 sigma_z_blocks() {
    Mat4 m;
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    m(2, 2) = 1.0;
    m(3, 3) = -1.0;
    return m;
}

std::vector<double> jacobi_symmetric(std::vector<double> matrix, std::size_t n,
                                     std::vector<double>* vectors) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return matrix[n * i + j]; };

    std::vector<double> v;
    if (vectors) {
        v.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) v[n * i + i] = 1.0;
    }

    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-300) break;

        double diag = 0.0;
        for (std::size_t i = 0; i < n; ++i) diag = std::max(diag, std::abs(at(i, i)));
        if (std::sqrt(off) < 1e-15 * std::max(diag, 1.0)) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double app = at(p, p);
                const double aqq = at(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                // Stable rotation: pick the smaller-magnitude tangent root.
                const double t = (theta >= 0.0)
                                     ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                     : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                if (vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const double vkp = v[n * k + p];
                        const double vkq = v[n * k + q];
                        v[n * k + p] = c * vkp - s * vkq;
                        v[n * k + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return at(a, a) < at(b, b); });

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = at(order[i], order[i]);

    if (vectors) {
        vectors->assign(n * n, 0.0);
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t row = 0; row < n; ++row)
                (*vectors)[n * row + col] = v[n * row + order[col]];
    }
    return values;
}

}  // namespace emosc
