#include "qsim/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qsim {

Matrix identity_matrix(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix matmul(const Matrix& x, const Matrix& y) {
  if (x.dim != y.dim)
    throw std::invalid_argument("matmul: dimension mismatch");
  Matrix out(x.dim);
  for (int r = 0; r < x.dim; ++r)
    for (int k = 0; k < x.dim; ++k) {
      cplx xv = x.at(r, k);
      if (xv == cplx{}) continue;
      for (int c = 0; c < x.dim; ++c) out.at(r, c) += xv * y.at(k, c);
    }
  return out;
}

Matrix adjoint(const Matrix& m) {
  Matrix out(m.dim);
  for (int r = 0; r < m.dim; ++r)
    for (int c = 0; c < m.dim; ++c) out.at(c, r) = std::conj(m.at(r, c));
  return out;
}

Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix out(x.dim * y.dim);
  for (int rx = 0; rx < x.dim; ++rx)
    for (int cx = 0; cx < x.dim; ++cx)
      for (int ry = 0; ry < y.dim; ++ry)
        for (int cy = 0; cy < y.dim; ++cy)
          out.at(rx * y.dim + ry, cx * y.dim + cy) = x.at(rx, cx) * y.at(ry, cy);
  return out;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.dim <= 0) return false;
  Matrix p = matmul(m, adjoint(m));
  for (int r = 0; r < m.dim; ++r)
    for (int c = 0; c < m.dim; ++c) {
      cplx want = (r == c) ? cplx{1.0, 0.0} : cplx{};
      if (std::abs(p.at(r, c) - want) > tol) return false;
    }
  return true;
}

}  // namespace qsim
