#pragma once
// Shared matrix aliases. Files and exchange formats carry 32-bit floats;
// everything numerical (embeddings, losses, gradients, metrics) runs in
// double and is cast at the boundary.

#include <Eigen/Dense>

namespace rrank {

// Row-major to match the on-disk layout of FMAT and checkpoint files.
using MatrixF = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatrixD = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using VectorD = Eigen::VectorXd;

}  // namespace rrank
