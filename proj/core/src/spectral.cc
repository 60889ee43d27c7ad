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

// Eigen-backed spectral helpers. Eigen stays an implementation detail of
// this translation unit.

#include <Eigen/Dense>

#include "cvmap/tensor.h"

namespace cvmap {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix &m) {
    Eigen::MatrixXcd out(m.dim(), m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hermitian_solver(const ComplexMatrix &m, bool vectors) {
    require(m.is_hermitian(1e-9), "spectral: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m),
                                                          vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("spectral: eigen-decomposition did not converge");
    }
    return solver;
}

}  // namespace

double min_eigenvalue(const ComplexMatrix &hermitian) {
    // Eigenvalues come back in increasing order.
    return hermitian_solver(hermitian, false).eigenvalues()(0);
}

ComplexVector dominant_eigenvector(const ComplexMatrix &hermitian) {
    auto solver = hermitian_solver(hermitian, true);
    const Eigen::Index last = solver.eigenvalues().size() - 1;
    Eigen::VectorXcd v = solver.eigenvectors().col(last);
    // Fix the global phase: largest-magnitude component real positive.
    Eigen::Index pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    v *= std::conj(v(pivot)) / std::abs(v(pivot));
    std::vector<Complex> e(v.data(), v.data() + v.size());
    return ComplexVector(std::move(e)).normalized();
}

std::vector<double> schmidt_coefficients(const ComplexVector &ket, std::size_t dim_a, std::size_t dim_b) {
    require(ket.dim() == dim_a * dim_b, "schmidt_coefficients: ket dimension must equal dim_a * dim_b");
    Eigen::MatrixXcd m(dim_a, dim_b);
    for (std::size_t i = 0; i < dim_a; ++i) {
        for (std::size_t k = 0; k < dim_b; ++k) {
            m(i, k) = ket[i * dim_b + k];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto &s = svd.singularValues();
    return std::vector<double>(s.data(), s.data() + s.size());
}

double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    auto solver = hermitian_solver(a - b, false);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace cvmap
