// Copyright 2026 The polcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLCAP_MATRIX_HPP
#define POLCAP_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "polcap/errors.hpp"

namespace polcap {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Dimensions in this library never exceed 9,
/// so everything is plain loops over a std::vector.
class ComplexMatrix {
public:
    ComplexMatrix() : ComplexMatrix(1) {}

    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
        if (dim == 0) {
            throw ContractError("matrix dimension must be positive");
        }
    }

    ComplexMatrix(std::size_t dim, std::initializer_list<cplx> entries) : ComplexMatrix(dim) {
        if (entries.size() != dim * dim) {
            throw ContractError("initializer size does not match dimension");
        }
        std::copy(entries.begin(), entries.end(), data_.begin());
    }

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static ComplexMatrix diagonal(std::span<const double> d) {
        ComplexMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            m(i, i) = d[i];
        }
        return m;
    }

    /// |v><v| for a (not necessarily normalized) vector.
    static ComplexMatrix outer(std::span<const cplx> v) {
        ComplexMatrix m(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (std::size_t j = 0; j < v.size(); ++j) {
                m(i, j) = v[i] * std::conj(v[j]);
            }
        }
        return m;
    }

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    [[nodiscard]] std::span<const cplx> entries() const noexcept { return data_; }

    [[nodiscard]] cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    [[nodiscard]] ComplexMatrix adjoint() const {
        ComplexMatrix m(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                m(j, i) = std::conj((*this)(i, j));
            }
        }
        return m;
    }

    ComplexMatrix &operator+=(const ComplexMatrix &o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] += o.data_[i];
        }
        return *this;
    }

    ComplexMatrix &operator-=(const ComplexMatrix &o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] -= o.data_[i];
        }
        return *this;
    }

    ComplexMatrix &operator*=(cplx s) {
        for (auto &x : data_) {
            x *= s;
        }
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
        a.check_same(b);
        const std::size_t n = a.dim_;
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) {
                    continue;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    m(i, j) += aik * b(k, j);
                }
            }
        }
        return m;
    }

    friend std::vector<cplx> operator*(const ComplexMatrix &a, std::span<const cplx> v) {
        if (v.size() != a.dim_) {
            throw ContractError("matrix-vector dimension mismatch");
        }
        std::vector<cplx> out(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i) {
            for (std::size_t j = 0; j < a.dim_; ++j) {
                out[i] += a(i, j) * v[j];
            }
        }
        return out;
    }

    bool operator==(const ComplexMatrix &) const = default;

private:
    void check_same(const ComplexMatrix &o) const {
        if (o.dim_ != dim_) {
            throw ContractError("matrix dimension mismatch");
        }
    }

    std::size_t dim_;
    std::vector<cplx> data_;
};

/// Kronecker product a ⊗ b with index (i_a * dim_b + i_b).
inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t na = a.dim(), nb = b.dim();
    ComplexMatrix m(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    m(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return m;
}

/// U ρ U†
inline ComplexMatrix conjugate(const ComplexMatrix &u, const ComplexMatrix &rho) {
    return u * rho * u.adjoint();
}

inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw ContractError("matrix dimension mismatch");
    }
    double d = 0.0;
    const auto ea = a.entries(), eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        d = std::max(d, std::abs(ea[i] - eb[i]));
    }
    return d;
}

/// Largest |M_ij - conj(M_ji)|.
inline double hermiticity_defect(const ComplexMatrix &m) {
    double d = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = i; j < m.dim(); ++j) {
            d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return d;
}

/// Largest deviation of U U† from the identity.
inline double unitarity_defect(const ComplexMatrix &u) {
    return max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(u.dim()));
}

namespace detail {

/// Cyclic Jacobi on a real symmetric matrix stored row-major; returns the diagonal after
/// convergence. Off-diagonal sweep stops when max |a_pq| < tol.
inline std::vector<double> jacobi_symmetric(std::vector<double> a, std::size_t n, double tol) {
    constexpr int kMaxSweeps = 100;
    auto at = [&](std::size_t r, std::size_t c) -> double & { return a[r * n + c]; };
    for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off = std::max(off, std::abs(at(p, q)));
            }
        }
        if (off < tol) {
            std::vector<double> d(n);
            for (std::size_t i = 0; i < n; ++i) {
                d[i] = at(i, i);
            }
            return d;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = 0.0;
                at(q, p) = 0.0;
            }
        }
    }
    throw NumericError("Jacobi eigensolver did not converge");
}

}  // namespace detail

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// The n×n Hermitian H = A + iB is embedded as the real symmetric 2n×2n matrix
/// [[A, -B], [B, A]], whose spectrum is that of H with every eigenvalue doubled.
/// Cyclic Jacobi runs on the embedding until every off-diagonal entry is below 1e-13.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix &h) {
    const std::size_t n = h.dim();
    const std::size_t m = 2 * n;
    std::vector<double> a(m * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // Symmetrize to absorb rounding-level anti-Hermitian noise.
            const cplx hij = 0.5 * (h(i, j) + std::conj(h(j, i)));
            a[i * m + j] = hij.real();
            a[(i + n) * m + (j + n)] = hij.real();
            a[i * m + (j + n)] = -hij.imag();
            a[(i + n) * m + j] = hij.imag();
        }
    }
    auto d = detail::jacobi_symmetric(std::move(a), m, 1e-13);
    std::sort(d.begin(), d.end());
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) {
        ev[i] = 0.5 * (d[2 * i] + d[2 * i + 1]);
    }
    return ev;
}

}  // namespace polcap

#endif  // POLCAP_MATRIX_HPP
