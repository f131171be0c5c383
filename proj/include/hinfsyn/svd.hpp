#pragma once

#include <vector>

#include "hinfsyn/polynomial.hpp"

namespace hinfsyn {

// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static ComplexMatrix identity(int n);

    int size() const { return n_; }
    Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Complex& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }

private:
    int n_;
    std::vector<Complex> a_;
};

struct Svd {
    std::vector<double> sigma; // singular values, descending
    ComplexMatrix v;           // right singular vectors in columns, same order
};

// One-sided cyclic Jacobi SVD: orthogonalizes column pairs with complex plane
// rotations until the implicit Gram matrix A^H A is diagonal. Working on the
// columns directly (never forming A^H A) keeps small singular values resolvable
// down to ~eps * sigma_max, which the singularity search relies on.
Svd jacobi_svd(const ComplexMatrix& a);

// sigma_min / sigma_max; 0 for an exactly rank-deficient matrix.
double sigma_min_ratio(const ComplexMatrix& a);

} // namespace hinfsyn
