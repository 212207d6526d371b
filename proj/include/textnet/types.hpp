#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace textnet {

using Scalar = double;
using Index = Eigen::Index;

// Row-major throughout: vertices live in rows and nearly every access is
// a whole row (one vertex's embedding, one transition-matrix row).
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
using SparseMatrix = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;

using VertexId = int;

/// Malformed input files, bad configuration values, inconsistent shapes
/// coming from user data. Mapped to exit code 2 by the CLI.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Divergence or other numerical breakdown. Mapped to exit code 3.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace textnet
