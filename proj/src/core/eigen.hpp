#ifndef ENTBREAK_CORE_EIGEN_HPP
#define ENTBREAK_CORE_EIGEN_HPP

#include <vector>

#include "complex_matrix.hpp"

namespace entbreak {

struct EigenResult {
    std::vector<double> eigenvalues;  // sorted ascending
    ComplexMatrix eigenvectors;       // columns, same order as eigenvalues
};

/// Full spectrum of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Input must be square, Hermitian within 1e-10, size <= 16.
/// Satisfies ||V diag(l) V^dag - M||_max <= 1e-10 for ||M||_max <= 1.
EigenResult hermitian_eigen(const ComplexMatrix& m);

/// Smallest eigenvalue only (same solver underneath).
double min_eigenvalue(const ComplexMatrix& m);

}  // namespace entbreak

#endif
