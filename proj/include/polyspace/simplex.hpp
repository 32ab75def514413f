#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <vector>

namespace polyspace {

enum class LpStatus { Optimal, Unbounded };

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct LpResult {
  LpStatus status = LpStatus::Optimal;
  DenseVector<Scalar> x;
  Scalar objective = 0;
  int pivots = 0;
};

/// Maximizes c.x over { x >= 0 : A x <= b } where b >= 0, so the origin is a
/// feasible starting basis and no phase one is needed. Dictionary-form simplex
/// with Bland's rule; exact whenever Scalar is.
template <typename Scalar>
LpResult<Scalar> maximize_from_origin(const DenseMatrix<Scalar>& A, const DenseVector<Scalar>& b,
                                      const DenseVector<Scalar>& c) {
  const Eigen::Index rows = A.rows();
  const Eigen::Index cols = A.cols();
  // Dictionary: basic_i = rhs_i - sum_j coef(i,j) * nonbasic_j ; z = z0 + sum_j cost_j * nonbasic_j.
  DenseMatrix<Scalar> coef = A;
  DenseVector<Scalar> rhs = b;
  DenseVector<Scalar> cost = c;
  Scalar z0 = 0;
  std::vector<Eigen::Index> basic(static_cast<std::size_t>(rows));
  std::vector<Eigen::Index> nonbasic(static_cast<std::size_t>(cols));
  for (Eigen::Index j = 0; j < cols; ++j) nonbasic[static_cast<std::size_t>(j)] = j;
  for (Eigen::Index i = 0; i < rows; ++i) basic[static_cast<std::size_t>(i)] = cols + i;

  LpResult<Scalar> result;
  while (true) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < cols; ++j)
      if (cost(j) > 0 && (enter < 0 || nonbasic[static_cast<std::size_t>(j)] < nonbasic[static_cast<std::size_t>(enter)]))
        enter = j;
    if (enter < 0) break;

    Eigen::Index leave = -1;
    Scalar best_ratio = 0;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (!(coef(i, enter) > 0)) continue;
      Scalar ratio = rhs(i) / coef(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basic[static_cast<std::size_t>(i)] < basic[static_cast<std::size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      result.status = LpStatus::Unbounded;
      return result;
    }

    const Scalar pivot = coef(leave, enter);
    for (Eigen::Index j = 0; j < cols; ++j)
      if (j != enter) coef(leave, j) /= pivot;
    rhs(leave) /= pivot;
    coef(leave, enter) = Scalar(1) / pivot;

    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == leave || coef(i, enter) == 0) continue;
      const Scalar factor = coef(i, enter);
      for (Eigen::Index j = 0; j < cols; ++j)
        if (j != enter) coef(i, j) -= factor * coef(leave, j);
      rhs(i) -= factor * rhs(leave);
      coef(i, enter) = -factor * coef(leave, enter);
    }
    const Scalar ce = cost(enter);
    for (Eigen::Index j = 0; j < cols; ++j)
      if (j != enter) cost(j) -= ce * coef(leave, j);
    z0 += ce * rhs(leave);
    cost(enter) = -ce * coef(leave, enter);

    std::swap(basic[static_cast<std::size_t>(leave)], nonbasic[static_cast<std::size_t>(enter)]);
    ++result.pivots;
  }

  result.x = DenseVector<Scalar>::Zero(cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    if (basic[static_cast<std::size_t>(i)] < cols) result.x(basic[static_cast<std::size_t>(i)]) = rhs(i);
  result.objective = z0;
  return result;
}

}  // namespace polyspace
