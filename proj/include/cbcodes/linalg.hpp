// Copyright 2026 The cbcodes Authors
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

#pragma once

#include <concepts>
#include <vector>

#include <Eigen/Core>

#include "cbcodes/gf.hpp"

namespace cbcodes {

template <class F>
concept FiniteField = requires(const F& f, typename F::value_type x) {
  { f.add(x, x) } -> std::same_as<typename F::value_type>;
  { f.sub(x, x) } -> std::same_as<typename F::value_type>;
  { f.mul(x, x) } -> std::same_as<typename F::value_type>;
  { f.inv(x) } -> std::same_as<typename F::value_type>;
};

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Matrix = DenseMatrix<gf_t>;
using Index = Eigen::Index;

template <class Scalar>
struct Echelon {
  DenseMatrix<Scalar> reduced;  // reduced row-echelon form, same shape as the input
  std::vector<Index> pivots;    // pivot column of each nonzero row

  Index rank() const noexcept { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination over `field`.
template <FiniteField F, class Derived>
Echelon<typename F::value_type> row_reduce(const F& field, const Eigen::MatrixBase<Derived>& input) {
  using V = typename F::value_type;
  Echelon<V> out{input, {}};
  auto& a = out.reduced;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = r;
    while (pivot < rows && a(pivot, c) == V{0}) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) a.row(pivot).swap(a.row(r));
    const V scale = field.inv(a(r, c));
    for (Index j = c; j < cols; ++j) a(r, j) = field.mul(a(r, j), scale);
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == V{0}) continue;
      const V factor = a(i, c);
      for (Index j = c; j < cols; ++j) a(i, j) = field.sub(a(i, j), field.mul(factor, a(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <FiniteField F, class Derived>
Index rank(const F& field, const Eigen::MatrixBase<Derived>& m) {
  return row_reduce(field, m).rank();
}

/// Basis of { v : M v = 0 }, one vector per row, in the usual free-column
/// parametrisation of the reduced form.
template <FiniteField F, class Derived>
DenseMatrix<typename F::value_type> kernel_basis(const F& field,
                                                 const Eigen::MatrixBase<Derived>& m) {
  using V = typename F::value_type;
  const auto ech = row_reduce(field, m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  DenseMatrix<V> basis(cols - ech.rank(), cols);
  basis.setZero();
  Index row = 0;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(row, free) = V{1};
    for (Index i = 0; i < ech.rank(); ++i)
      basis(row, ech.pivots[static_cast<std::size_t>(i)]) = field.sub(V{0}, ech.reduced(i, free));
    ++row;
  }
  return basis;
}

/// Reduced row-echelon basis of the row space.
template <FiniteField F, class Derived>
DenseMatrix<typename F::value_type> row_space_basis(const F& field,
                                                    const Eigen::MatrixBase<Derived>& m) {
  auto ech = row_reduce(field, m);
  return ech.reduced.topRows(ech.rank());
}

/// Product over `field`; Eigen's own operator* would use integer arithmetic.
template <FiniteField F, class A, class B>
DenseMatrix<typename F::value_type> multiply(const F& field, const Eigen::MatrixBase<A>& a,
                                             const Eigen::MatrixBase<B>& b) {
  using V = typename F::value_type;
  DenseMatrix<V> out(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) {
      V acc{0};
      for (Index k = 0; k < a.cols(); ++k) acc = field.add(acc, field.mul(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  return out;
}

}  // namespace cbcodes
