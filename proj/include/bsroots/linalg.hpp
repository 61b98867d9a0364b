/*
  Exact rational linear algebra: solving, kernels, rank, span membership.
  Thin free-function layer over Eigen::FullPivLU on rational matrices.
*/
#ifndef BSROOTS_LINALG_HPP
#define BSROOTS_LINALG_HPP

#include "bsroots/numeric.hpp"

#include <optional>
#include <vector>

namespace bsr {

struct LinearSolution {
  QVec particular;
  std::vector<QVec> kernel;  // basis of the homogeneous solution space
};

// Solves A x = b exactly.  Returns a particular solution together with a
// kernel basis, or nullopt when the system is inconsistent.  Kernel vectors
// are normalized so their first nonzero entry is 1.
std::optional<LinearSolution> solve_linear(const QMat& A, const QVec& b);

std::vector<QVec> kernel_basis(const QMat& A);

Eigen::Index rank(const QMat& A);

// true iff v lies in the column span of B
bool in_span(const QMat& B, const QVec& v);

// matrix whose columns are the vectors (vectors may be empty: 0 columns)
QMat columns(const std::vector<QVec>& vs, Eigen::Index dim);

}  // namespace bsr

#endif
