#include "bsroots/linalg.hpp"

namespace bsr {

namespace {

std::vector<QVec> normalized_kernel(const Eigen::FullPivLU<QMat>& lu) {
  std::vector<QVec> out;
  if (lu.dimensionOfKernel() == 0) return out;
  QMat K = lu.kernel();
  out.reserve(static_cast<std::size_t>(K.cols()));
  for (Eigen::Index j = 0; j < K.cols(); ++j) {
    QVec v = K.col(j);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v[i] != 0) {
        Rational lead = v[i];
        for (Eigen::Index k = i; k < v.size(); ++k) v[k] /= lead;
        break;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::optional<LinearSolution> solve_linear(const QMat& A, const QVec& b) {
  if (A.rows() != b.size())
    throw std::invalid_argument("solve_linear: dimension mismatch");
  Eigen::FullPivLU<QMat> lu(A);
  QVec x = lu.solve(b);
  QVec r = A * x - b;
  for (Eigen::Index i = 0; i < r.size(); ++i)
    if (r[i] != 0) return std::nullopt;
  return LinearSolution{std::move(x), normalized_kernel(lu)};
}

std::vector<QVec> kernel_basis(const QMat& A) {
  Eigen::FullPivLU<QMat> lu(A);
  return normalized_kernel(lu);
}

Eigen::Index rank(const QMat& A) {
  if (A.rows() == 0 || A.cols() == 0) return 0;
  Eigen::FullPivLU<QMat> lu(A);
  return lu.rank();
}

bool in_span(const QMat& B, const QVec& v) {
  if (B.cols() == 0) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v[i] != 0) return false;
    return true;
  }
  Eigen::FullPivLU<QMat> lu(B);
  QVec x = lu.solve(v);
  QVec r = B * x - v;
  for (Eigen::Index i = 0; i < r.size(); ++i)
    if (r[i] != 0) return false;
  return true;
}

QMat columns(const std::vector<QVec>& vs, Eigen::Index dim) {
  QMat M(dim, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) M.col(static_cast<Eigen::Index>(j)) = vs[j];
  return M;
}

}  // namespace bsr
