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

#ifndef CVMAP_TENSOR_H
#define CVMAP_TENSOR_H

// Small complex linear-algebra layer shared by every other module.
//
// All types are value-semantic and have no mutating members after
// construction; every operation returns a fresh value. Indices are 0-based.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "cvmap/error.h"

namespace cvmap {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
   public:
    /// Zero matrix.
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> row_major);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t dim() const {
        return dim_;
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> data() const {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    bool is_hermitian(double tol = kAlgebraTol) const;
    double max_abs() const;

    friend ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator*(Complex scale, const ComplexMatrix &a);

   private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Complex column vector (ket).
class ComplexVector {
   public:
    explicit ComplexVector(std::size_t dim);
    explicit ComplexVector(std::vector<Complex> entries);

    std::size_t dim() const {
        return entries_.size();
    }
    const Complex &operator[](std::size_t k) const {
        return entries_[k];
    }
    std::span<const Complex> data() const {
        return entries_;
    }

    double norm() const;
    bool is_normalized(double tol = kAlgebraTol) const {
        return std::abs(norm() - 1.0) < tol;
    }
    ComplexVector normalized() const;
    /// |v><v|
    ComplexMatrix projector() const;

   private:
    std::vector<Complex> entries_;
};

/// <a|b>
Complex inner(const ComplexVector &a, const ComplexVector &b);

struct SparseEntry {
    std::size_t row;
    std::size_t col;
    Complex value;
};

/// Square sparse matrix stored as (row, col)-sorted triplets with row offsets.
///
/// Exact zeros are dropped on construction, so densify/re-sparsify is the
/// identity on the stored entry set.
class SparseMatrix {
   public:
    explicit SparseMatrix(std::size_t dim);
    /// Rejects duplicate (row, col) pairs and out-of-range indices.
    SparseMatrix(std::size_t dim, std::vector<SparseEntry> entries);

    static SparseMatrix from_dense(const ComplexMatrix &m);
    static SparseMatrix identity(std::size_t dim);

    std::size_t dim() const {
        return dim_;
    }
    std::size_t nonzeros() const {
        return entries_.size();
    }
    std::span<const SparseEntry> entries() const {
        return entries_;
    }
    /// Entries of one row, sorted by column.
    std::span<const SparseEntry> row(std::size_t r) const;

    Complex at(std::size_t row, std::size_t col) const;
    ComplexMatrix to_dense() const;
    ComplexVector apply(const ComplexVector &v) const;
    SparseMatrix adjoint() const;
    Complex trace() const;
    bool is_hermitian(double tol = kAlgebraTol) const;
    double max_abs() const;

    friend SparseMatrix operator+(const SparseMatrix &a, const SparseMatrix &b);
    friend SparseMatrix operator-(const SparseMatrix &a, const SparseMatrix &b);
    friend SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b);
    friend SparseMatrix operator*(Complex scale, const SparseMatrix &a);

   private:
    struct Trusted {};
    // Entries already sorted, unique, nonzero.
    SparseMatrix(Trusted, std::size_t dim, std::vector<SparseEntry> entries);
    void index_rows();

    std::size_t dim_;
    std::vector<SparseEntry> entries_;
    std::vector<std::size_t> row_offsets_;

    friend SparseMatrix accumulate(std::size_t dim, std::vector<SparseEntry> unsorted);
};

/// Builds a sparse matrix from unsorted triplets, summing duplicates.
SparseMatrix accumulate(std::size_t dim, std::vector<SparseEntry> unsorted);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
SparseMatrix kron(const SparseMatrix &a, const SparseMatrix &b);
ComplexVector kron(const ComplexVector &a, const ComplexVector &b);

/// ab - ba. Throws InvalidArgument on dimension mismatch.
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);
SparseMatrix commutator(const SparseMatrix &a, const SparseMatrix &b);

/// Tr(ab) without forming the product.
Complex trace_product(const ComplexMatrix &a, const ComplexMatrix &b);
Complex trace_product(const SparseMatrix &a, const SparseMatrix &b);
/// Tr(rho * op) for dense rho and sparse op.
Complex trace_product(const ComplexMatrix &rho, const SparseMatrix &op);

/// Largest entrywise |a - b|.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// <psi|obs|psi> for a normalized ket and Hermitian observable.
///
/// The imaginary residue is checked against kExpectationTol and then
/// discarded; a larger residue raises NumericalError.
double expectation(const ComplexVector &psi, const ComplexMatrix &obs);
double expectation(const ComplexVector &psi, const SparseMatrix &obs);
/// Tr(rho obs) for a unit-trace density matrix.
double expectation(const ComplexMatrix &rho, const ComplexMatrix &obs);
double expectation(const ComplexMatrix &rho, const SparseMatrix &obs);

/// <psi|op|psi> without Hermiticity or normalization checks.
Complex sandwich(const ComplexVector &psi, const SparseMatrix &op);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix &hermitian);
/// Normalized eigenvector of the largest eigenvalue of a Hermitian matrix.
ComplexVector dominant_eigenvector(const ComplexMatrix &hermitian);
/// Singular values (descending) of a bipartite ket reshaped to dim_a x dim_b.
std::vector<double> schmidt_coefficients(const ComplexVector &ket, std::size_t dim_a, std::size_t dim_b);
/// Trace norm of a Hermitian matrix divided by two.
double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace cvmap

#endif
