/*
  Affine and linear spans of rational point sets.
*/
#ifndef BSROOTS_AFFINE_HPP
#define BSROOTS_AFFINE_HPP

#include "bsroots/numeric.hpp"

#include <vector>

namespace bsr {

struct AffineSubspace {
  QVec base;
  std::vector<QVec> directions;  // linearly independent

  Eigen::Index affine_dim() const {
    return static_cast<Eigen::Index>(directions.size());
  }
};

// smallest affine subspace containing the points; base is the first point,
// directions are an independent subset of the differences to it
AffineSubspace affine_span(const std::vector<QVec>& points);

// basis (columns) of the span of the points taken as vectors
QMat linear_span(const std::vector<QVec>& points);

}  // namespace bsr

#endif
