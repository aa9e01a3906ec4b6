#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qgshap {

// Dense row-major matrix; just enough linear algebra for the GIN engine.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {
        if (r < 0 || c < 0) throw std::invalid_argument("Matrix: negative dimension");
    }

    double& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

// c = a * b
Matrix matmul(const Matrix& a, const Matrix& b);
// c = a^T * b
Matrix matmul_at_b(const Matrix& a, const Matrix& b);
// c = a * b^T
Matrix matmul_a_bt(const Matrix& a, const Matrix& b);

}  // namespace qgshap
