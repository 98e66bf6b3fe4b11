#pragma once

#include <complex>
#include <vector>

namespace qsim {

using cplx = std::complex<double>;

// Dense square complex matrix, row major.  Gates are at most 8x8; the test
// oracles build somewhat larger embeddings, so nothing here chases speed.
struct Matrix {
  int dim = 0;
  std::vector<cplx> a;

  Matrix() = default;
  explicit Matrix(int d) : dim(d), a(std::size_t(d) * std::size_t(d)) {}

  cplx& at(int r, int c) { return a[std::size_t(r) * dim + c]; }
  const cplx& at(int r, int c) const { return a[std::size_t(r) * dim + c]; }
};

Matrix identity_matrix(int dim);
Matrix matmul(const Matrix& x, const Matrix& y);
Matrix adjoint(const Matrix& m);
Matrix kron(const Matrix& x, const Matrix& y);

// max-norm test of m * adjoint(m) == identity
bool is_unitary(const Matrix& m, double tol = 1e-10);

}  // namespace qsim
