#ifndef ENTBREAK_CORE_COMPLEX_MATRIX_HPP
#define ENTBREAK_CORE_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "error.hpp"

namespace entbreak {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. All states, Kraus operators and
/// unitaries in the library live in this type; dimensions never exceed
/// 16 so no attempt is made at blocking or sparsity.
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diag(const std::vector<double>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Complex>& data() const { return data_; }

    ComplexMatrix dagger() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;

    Complex trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    double hermiticity_defect() const;  // max |m_ij - conj(m_ji)|

    bool is_hermitian(double tolerance = tol::herm) const {
        return is_square() && hermiticity_defect() <= tolerance;
    }
    bool is_unitary(double tolerance) const;

    void check_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t rows_, cols_;
    std::vector<Complex> data_;
};

/// Kronecker product; output dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max-norm of the entry-wise difference.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace entbreak

#endif
