#pragma once

#include <Eigen/Core>

#include <cstdint>

namespace loopstab {

using Integer = std::int64_t;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

// r x r matrices over Z; GL-membership is checked where required.
using IntMatrix = Matrix<Integer>;

// Image of a word under abelianization F_r -> Z^r.
using AbelianVector = Vector<Integer>;

// Row vector over Z/2Z with entries in {0, 1}.
using ParityVector = RowVector<Integer>;

}  // namespace loopstab
