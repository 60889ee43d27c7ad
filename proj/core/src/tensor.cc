// Copyright 2026 The cvmap Authors
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

#include "cvmap/tensor.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace cvmap {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char *op) {
    if (a != b) {
        throw InvalidArgument(std::string(op) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                              std::to_string(b) + ")");
    }
}

double checked_real(Complex value, const char *op) {
    if (std::abs(value.imag()) >= kExpectationTol) {
        throw NumericalError(std::string(op) + ": imaginary residue " + std::to_string(value.imag()));
    }
    return value.real();
}

bool entry_less(const SparseEntry &a, const SparseEntry &b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    require(dim >= 1, "ComplexMatrix: dim must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
    require(dim >= 1, "ComplexMatrix: dim must be >= 1");
    require(entries_.size() == dim * dim, "ComplexMatrix: entry count must be dim*dim");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    std::vector<Complex> e(dim * dim);
    for (std::size_t k = 0; k < dim; ++k) {
        e[k * dim + k] = 1.0;
    }
    return ComplexMatrix(dim, std::move(e));
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    std::size_t dim = rows.size();
    std::vector<Complex> e;
    e.reserve(dim * dim);
    for (const auto &row : rows) {
        require(row.size() == dim, "ComplexMatrix::from_rows: matrix must be square");
        e.insert(e.end(), row.begin(), row.end());
    }
    return ComplexMatrix(dim, std::move(e));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    std::vector<Complex> e(entries_.size());
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            e[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
        }
    }
    return ComplexMatrix(dim_, std::move(e));
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (std::size_t k = 0; k < dim_; ++k) {
        t += entries_[k * dim_ + k];
    }
    return t;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

double ComplexMatrix::max_abs() const {
    double m = 0;
    for (const auto &v : entries_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim_, b.dim_, "operator+");
    std::vector<Complex> e(a.entries_);
    for (std::size_t k = 0; k < e.size(); ++k) {
        e[k] += b.entries_[k];
    }
    return ComplexMatrix(a.dim_, std::move(e));
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim_, b.dim_, "operator-");
    std::vector<Complex> e(a.entries_);
    for (std::size_t k = 0; k < e.size(); ++k) {
        e[k] -= b.entries_[k];
    }
    return ComplexMatrix(a.dim_, std::move(e));
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim_, b.dim_, "operator*");
    const std::size_t n = a.dim_;
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a.entries_[i * n + k];
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                e[i * n + j] += aik * b.entries_[k * n + j];
            }
        }
    }
    return ComplexMatrix(n, std::move(e));
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix &a) {
    std::vector<Complex> e(a.entries_);
    for (auto &v : e) {
        v *= scale;
    }
    return ComplexMatrix(a.dim_, std::move(e));
}

// ---------------------------------------------------------------------------
// ComplexVector

ComplexVector::ComplexVector(std::size_t dim) : entries_(dim) {
    require(dim >= 1, "ComplexVector: dim must be >= 1");
}

ComplexVector::ComplexVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
    require(!entries_.empty(), "ComplexVector: dim must be >= 1");
}

double ComplexVector::norm() const {
    double s = 0;
    for (const auto &v : entries_) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

ComplexVector ComplexVector::normalized() const {
    double n = norm();
    if (n == 0.0) {
        throw NumericalError("ComplexVector::normalized: zero vector");
    }
    std::vector<Complex> e(entries_);
    for (auto &v : e) {
        v /= n;
    }
    return ComplexVector(std::move(e));
}

ComplexMatrix ComplexVector::projector() const {
    const std::size_t n = entries_.size();
    std::vector<Complex> e(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            e[r * n + c] = entries_[r] * std::conj(entries_[c]);
        }
    }
    return ComplexMatrix(n, std::move(e));
}

Complex inner(const ComplexVector &a, const ComplexVector &b) {
    require_same_dim(a.dim(), b.dim(), "inner");
    Complex s = 0;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        s += std::conj(a[k]) * b[k];
    }
    return s;
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(std::size_t dim) : dim_(dim) {
    require(dim >= 1, "SparseMatrix: dim must be >= 1");
    index_rows();
}

SparseMatrix::SparseMatrix(std::size_t dim, std::vector<SparseEntry> entries) : dim_(dim) {
    require(dim >= 1, "SparseMatrix: dim must be >= 1");
    std::sort(entries.begin(), entries.end(), entry_less);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        require(entries[k].row < dim && entries[k].col < dim, "SparseMatrix: index out of range");
        require(k == 0 || entry_less(entries[k - 1], entries[k]), "SparseMatrix: duplicate (row, col) entry");
    }
    std::erase_if(entries, [](const SparseEntry &e) { return e.value == Complex{}; });
    entries_ = std::move(entries);
    index_rows();
}

SparseMatrix::SparseMatrix(Trusted, std::size_t dim, std::vector<SparseEntry> entries)
    : dim_(dim), entries_(std::move(entries)) {
    index_rows();
}

void SparseMatrix::index_rows() {
    row_offsets_.assign(dim_ + 1, 0);
    for (const auto &e : entries_) {
        ++row_offsets_[e.row + 1];
    }
    for (std::size_t r = 0; r < dim_; ++r) {
        row_offsets_[r + 1] += row_offsets_[r];
    }
}

SparseMatrix accumulate(std::size_t dim, std::vector<SparseEntry> unsorted) {
    require(dim >= 1, "SparseMatrix: dim must be >= 1");
    std::sort(unsorted.begin(), unsorted.end(), entry_less);
    std::vector<SparseEntry> merged;
    merged.reserve(unsorted.size());
    for (const auto &e : unsorted) {
        require(e.row < dim && e.col < dim, "SparseMatrix: index out of range");
        if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
            merged.back().value += e.value;
        } else {
            merged.push_back(e);
        }
    }
    std::erase_if(merged, [](const SparseEntry &e) { return e.value == Complex{}; });
    return SparseMatrix(SparseMatrix::Trusted{}, dim, std::move(merged));
}

SparseMatrix SparseMatrix::from_dense(const ComplexMatrix &m) {
    std::vector<SparseEntry> e;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (m(r, c) != Complex{}) {
                e.push_back({r, c, m(r, c)});
            }
        }
    }
    return SparseMatrix(Trusted{}, m.dim(), std::move(e));
}

SparseMatrix SparseMatrix::identity(std::size_t dim) {
    require(dim >= 1, "SparseMatrix: dim must be >= 1");
    std::vector<SparseEntry> e;
    e.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        e.push_back({k, k, 1.0});
    }
    return SparseMatrix(Trusted{}, dim, std::move(e));
}

std::span<const SparseEntry> SparseMatrix::row(std::size_t r) const {
    return std::span<const SparseEntry>(entries_).subspan(row_offsets_[r], row_offsets_[r + 1] - row_offsets_[r]);
}

Complex SparseMatrix::at(std::size_t r, std::size_t c) const {
    auto cells = row(r);
    auto it = std::lower_bound(cells.begin(), cells.end(), c,
                               [](const SparseEntry &e, std::size_t col) { return e.col < col; });
    return it != cells.end() && it->col == c ? it->value : Complex{};
}

ComplexMatrix SparseMatrix::to_dense() const {
    std::vector<Complex> d(dim_ * dim_);
    for (const auto &e : entries_) {
        d[e.row * dim_ + e.col] = e.value;
    }
    return ComplexMatrix(dim_, std::move(d));
}

ComplexVector SparseMatrix::apply(const ComplexVector &v) const {
    require_same_dim(dim_, v.dim(), "SparseMatrix::apply");
    std::vector<Complex> out(dim_);
    for (const auto &e : entries_) {
        out[e.row] += e.value * v[e.col];
    }
    return ComplexVector(std::move(out));
}

SparseMatrix SparseMatrix::adjoint() const {
    std::vector<SparseEntry> e;
    e.reserve(entries_.size());
    for (const auto &x : entries_) {
        e.push_back({x.col, x.row, std::conj(x.value)});
    }
    std::sort(e.begin(), e.end(), entry_less);
    return SparseMatrix(Trusted{}, dim_, std::move(e));
}

Complex SparseMatrix::trace() const {
    Complex t = 0;
    for (const auto &e : entries_) {
        if (e.row == e.col) {
            t += e.value;
        }
    }
    return t;
}

bool SparseMatrix::is_hermitian(double tol) const {
    for (const auto &e : entries_) {
        if (std::abs(e.value - std::conj(at(e.col, e.row))) > tol) {
            return false;
        }
    }
    return true;
}

double SparseMatrix::max_abs() const {
    double m = 0;
    for (const auto &e : entries_) {
        m = std::max(m, std::abs(e.value));
    }
    return m;
}

SparseMatrix operator+(const SparseMatrix &a, const SparseMatrix &b) {
    require_same_dim(a.dim_, b.dim_, "operator+");
    std::vector<SparseEntry> e(a.entries_);
    e.insert(e.end(), b.entries_.begin(), b.entries_.end());
    return accumulate(a.dim_, std::move(e));
}

SparseMatrix operator-(const SparseMatrix &a, const SparseMatrix &b) {
    return a + Complex(-1.0) * b;
}

SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b) {
    require_same_dim(a.dim_, b.dim_, "operator*");
    std::vector<SparseEntry> e;
    for (const auto &x : a.entries_) {
        for (const auto &y : b.row(x.col)) {
            e.push_back({x.row, y.col, x.value * y.value});
        }
    }
    return accumulate(a.dim_, std::move(e));
}

SparseMatrix operator*(Complex scale, const SparseMatrix &a) {
    if (scale == Complex{}) {
        return SparseMatrix(a.dim_);
    }
    std::vector<SparseEntry> e(a.entries_);
    for (auto &x : e) {
        x.value *= scale;
    }
    return SparseMatrix(SparseMatrix::Trusted{}, a.dim_, std::move(e));
}

// ---------------------------------------------------------------------------
// Free functions

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    e[(i * nb + k) * n + (j * nb + l)] = aij * b(k, l);
                }
            }
        }
    }
    return ComplexMatrix(n, std::move(e));
}

SparseMatrix kron(const SparseMatrix &a, const SparseMatrix &b) {
    const std::size_t nb = b.dim();
    std::vector<SparseEntry> e;
    e.reserve(a.nonzeros() * b.nonzeros());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t k = 0; k < nb; ++k) {
            for (const auto &x : a.row(i)) {
                for (const auto &y : b.row(k)) {
                    e.push_back({i * nb + k, x.col * nb + y.col, x.value * y.value});
                }
            }
        }
    }
    return accumulate(a.dim() * nb, std::move(e));
}

ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    std::vector<Complex> e;
    e.reserve(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t k = 0; k < b.dim(); ++k) {
            e.push_back(a[i] * b[k]);
        }
    }
    return ComplexVector(std::move(e));
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "commutator");
    return a * b - b * a;
}

SparseMatrix commutator(const SparseMatrix &a, const SparseMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "commutator");
    return a * b - b * a;
}

Complex trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "trace_product");
    const std::size_t n = a.dim();
    Complex t = 0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            t += a(j, k) * b(k, j);
        }
    }
    return t;
}

Complex trace_product(const SparseMatrix &a, const SparseMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "trace_product");
    Complex t = 0;
    for (const auto &e : a.entries()) {
        t += e.value * b.at(e.col, e.row);
    }
    return t;
}

Complex trace_product(const ComplexMatrix &rho, const SparseMatrix &op) {
    require_same_dim(rho.dim(), op.dim(), "trace_product");
    Complex t = 0;
    for (const auto &e : op.entries()) {
        t += rho(e.col, e.row) * e.value;
    }
    return t;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "max_abs_diff");
    double m = 0;
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    }
    return m;
}

Complex sandwich(const ComplexVector &psi, const SparseMatrix &op) {
    require_same_dim(psi.dim(), op.dim(), "sandwich");
    Complex s = 0;
    for (const auto &e : op.entries()) {
        s += std::conj(psi[e.row]) * e.value * psi[e.col];
    }
    return s;
}

double expectation(const ComplexVector &psi, const ComplexMatrix &obs) {
    require_same_dim(psi.dim(), obs.dim(), "expectation");
    require(obs.is_hermitian(), "expectation: observable is not Hermitian");
    require(psi.is_normalized(), "expectation: state vector is not normalized");
    Complex s = 0;
    for (std::size_t r = 0; r < obs.dim(); ++r) {
        for (std::size_t c = 0; c < obs.dim(); ++c) {
            s += std::conj(psi[r]) * obs(r, c) * psi[c];
        }
    }
    return checked_real(s, "expectation");
}

double expectation(const ComplexVector &psi, const SparseMatrix &obs) {
    require_same_dim(psi.dim(), obs.dim(), "expectation");
    require(obs.is_hermitian(), "expectation: observable is not Hermitian");
    require(psi.is_normalized(), "expectation: state vector is not normalized");
    return checked_real(sandwich(psi, obs), "expectation");
}

double expectation(const ComplexMatrix &rho, const ComplexMatrix &obs) {
    require_same_dim(rho.dim(), obs.dim(), "expectation");
    require(obs.is_hermitian(), "expectation: observable is not Hermitian");
    require(std::abs(rho.trace() - 1.0) < kExpectationTol, "expectation: density matrix must have unit trace");
    return checked_real(trace_product(rho, obs), "expectation");
}

double expectation(const ComplexMatrix &rho, const SparseMatrix &obs) {
    require_same_dim(rho.dim(), obs.dim(), "expectation");
    require(obs.is_hermitian(), "expectation: observable is not Hermitian");
    require(std::abs(rho.trace() - 1.0) < kExpectationTol, "expectation: density matrix must have unit trace");
    return checked_real(trace_product(rho, obs), "expectation");
}

}  // namespace cvmap
