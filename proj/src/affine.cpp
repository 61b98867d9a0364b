#include "bsroots/affine.hpp"

#include "bsroots/linalg.hpp"

namespace bsr {

namespace {

// keeps only vectors that grow the span, in input order
std::vector<QVec> independent_subset(const std::vector<QVec>& vs,
                                     Eigen::Index dim) {
  std::vector<QVec> kept;
  for (const QVec& v : vs) {
    bool zero = true;
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v[i] != 0) { zero = false; break; }
    if (zero) continue;
    if (!in_span(columns(kept, dim), v)) kept.push_back(v);
  }
  return kept;
}

}  // namespace

AffineSubspace affine_span(const std::vector<QVec>& points) {
  if (points.empty()) throw std::invalid_argument("affine_span: no points");
  AffineSubspace out;
  out.base = points.front();
  std::vector<QVec> diffs;
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.push_back(points[i] - points.front());
  out.directions = independent_subset(diffs, out.base.size());
  return out;
}

QMat linear_span(const std::vector<QVec>& points) {
  if (points.empty()) throw std::invalid_argument("linear_span: no points");
  std::vector<QVec> basis = independent_subset(points, points.front().size());
  return columns(basis, points.front().size());
}

}  // namespace bsr
