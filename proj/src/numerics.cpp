// Copyright 2026 The GSRP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gsrp/numerics.hpp"

#include <string>

namespace gsrp {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require(data_.size() == rows * cols, "entry count does not match rows*cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  require(cols_ == o.rows_, "matrix product dimension mismatch");
  ComplexMatrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex a = (*this)(r, k);
      for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) += a * o(k, c);
    }
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference dimension mismatch");
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

ComplexVector ComplexMatrix::operator*(std::span<const Complex> v) const {
  require(v.size() == cols_, "matrix-vector dimension mismatch");
  ComplexVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

HermitianMatrix::HermitianMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
  HermitianMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.data_[i * dim + i] = 1.0;
  return m;
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> diag) {
  HermitianMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.data_[i * diag.size() + i] = diag[i];
  return m;
}

HermitianMatrix HermitianMatrix::from_upper(const ComplexMatrix& m) {
  require(m.rows() == m.cols(), "Hermitian matrix must be square");
  HermitianMatrix out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r; c < m.cols(); ++c) out.set(r, c, m(r, c));
  return out;
}

void HermitianMatrix::set(std::size_t r, std::size_t c, Complex v) {
  if (r == c) {
    data_[r * dim_ + r] = v.real();
    return;
  }
  data_[r * dim_ + c] = v;
  data_[c * dim_ + r] = std::conj(v);
}

ComplexMatrix HermitianMatrix::to_matrix() const { return ComplexMatrix(dim_, dim_, data_); }

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  HermitianMatrix out(*this);
  out += o;
  return out;
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  require(dim_ == o.dim_, "Hermitian difference dimension mismatch");
  HermitianMatrix out(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

HermitianMatrix HermitianMatrix::operator*(double s) const {
  HermitianMatrix out(*this);
  out *= s;
  return out;
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  require(dim_ == o.dim_, "Hermitian sum dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  for (auto& v : data_) v *= s;
  return *this;
}

HermitianMatrix HermitianMatrix::plus_identity(double s) const {
  HermitianMatrix out(*this);
  for (std::size_t i = 0; i < dim_; ++i) out.data_[i * dim_ + i] += s;
  return out;
}

ComplexVector HermitianMatrix::operator*(std::span<const Complex> v) const {
  require(v.size() == dim_, "matrix-vector dimension mismatch");
  ComplexVector out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex acc = 0.0;
    const Complex* row = &data_[r * dim_];
    for (std::size_t c = 0; c < dim_; ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

NotPositiveDefinite::NotPositiveDefinite(std::size_t pivot)
    : NumericalError("matrix not positive definite (pivot " + std::to_string(pivot) + ")"),
      pivot_(pivot) {}

ComplexMatrix cholesky(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = m(j, j).real();
    for (std::size_t k = 0; k < j; ++k) diag -= std::norm(l(j, k));
    if (!(diag > 0.0)) throw NotPositiveDefinite(j);
    const double ljj = std::sqrt(diag);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex acc = m(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * std::conj(l(j, k));
      l(i, j) = acc / ljj;
    }
  }
  return l;
}

HermitianMatrix hermitian_inverse(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  const ComplexMatrix l = cholesky(m);
  // Forward substitution for L^{-1}, column by column.
  ComplexMatrix linv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    linv(c, c) = 1.0 / l(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      Complex acc = 0.0;
      for (std::size_t k = c; k < r; ++k) acc -= l(r, k) * linv(k, c);
      linv(r, c) = acc / l(r, r);
    }
  }
  // m^{-1} = L^{-H} L^{-1}
  HermitianMatrix inv(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      Complex acc = 0.0;
      for (std::size_t k = std::max(r, c); k < n; ++k) acc += std::conj(linv(k, r)) * linv(k, c);
      inv.set(r, c, acc);
    }
  return inv;
}

Complex quadratic_form(std::span<const Complex> a, const HermitianMatrix& m,
                       std::span<const Complex> b) {
  require(a.size() == m.dim() && b.size() == m.dim(), "quadratic form dimension mismatch");
  Complex acc = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Complex row = 0.0;
    for (std::size_t c = 0; c < m.dim(); ++c) row += m(r, c) * b[c];
    acc += std::conj(a[r]) * row;
  }
  if (a.data() == b.data()) return acc.real();
  return acc;
}

double hermitian_form(std::span<const Complex> a, const HermitianMatrix& m) {
  require(a.size() == m.dim(), "quadratic form dimension mismatch");
  const std::size_t n = m.dim();
  double diag = 0.0;
  Complex off = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    diag += std::norm(a[r]) * m(r, r).real();
    Complex row = 0.0;
    for (std::size_t c = r + 1; c < n; ++c) row += m(r, c) * a[c];
    off += std::conj(a[r]) * row;
  }
  return diag + 2.0 * off.real();
}

HermitianMatrix sandwich(const HermitianMatrix& outer, const HermitianMatrix& inner) {
  require(outer.dim() == inner.dim(), "sandwich dimension mismatch");
  const std::size_t n = outer.dim();
  ComplexMatrix tmp(n, n);  // inner·outer
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = inner(r, k);
      for (std::size_t c = 0; c < n; ++c) tmp(r, c) += a * outer(k, c);
    }
  HermitianMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += outer(r, k) * tmp(k, c);
      out.set(r, c, acc);
    }
  return out;
}

HermitianMatrix outer_product(std::span<const Complex> v) {
  HermitianMatrix out(v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = r; c < v.size(); ++c) out.set(r, c, v[r] * std::conj(v[c]));
  return out;
}

double frobenius_norm(const ComplexMatrix& m) {
  double acc = 0.0;
  for (const auto& v : m.entries()) acc += std::norm(v);
  return std::sqrt(acc);
}

double frobenius_norm(const HermitianMatrix& m) {
  double acc = 0.0;
  for (const auto& v : m.entries()) acc += std::norm(v);
  return std::sqrt(acc);
}

double trace(const HermitianMatrix& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) acc += m(i, i).real();
  return acc;
}

double trace_of_product(const HermitianMatrix& a, const HermitianMatrix& b) {
  require(a.dim() == b.dim(), "trace product dimension mismatch");
  // tr(AB) = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij)
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) acc += a.entries()[i] * std::conj(b.entries()[i]);
  return acc.real();
}

double squared_norm(std::span<const Complex> v) {
  double acc = 0.0;
  for (const auto& x : v) acc += std::norm(x);
  return acc;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  require(a.size() == b.size(), "inner product dimension mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

}  // namespace gsrp
