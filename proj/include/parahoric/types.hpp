#pragma once

#include <Eigen/Core>

#include "parahoric/rational.hpp"

namespace parahoric {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = DenseMatrix<Rational>;
using RatVector = DenseVector<Rational>;
using IntMatrix = DenseMatrix<long long>;
using IntVector = DenseVector<long long>;

using Index = Eigen::Index;

}  // namespace parahoric
