#include "bsroots/lattice.hpp"

#include "bsroots/linalg.hpp"

namespace bsr {

namespace {

// In-place row HNF.  Returns the list of pivot columns.
std::vector<Eigen::Index> row_hnf(ZMat& M) {
  const Eigen::Index rows = M.rows(), cols = M.cols();
  Eigen::Index r = 0;
  std::vector<Eigen::Index> pivots;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // eliminate below row r in column c by repeated remainder steps
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < rows; ++i) {
        if (M(i, c) != 0 &&
            (best == -1 || abs(M(i, c)) < abs(M(best, c))))
          best = i;
      }
      if (best == -1) break;
      if (best != r) M.row(best).swap(M.row(r));
      bool clean = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (M(i, c) != 0) {
          Integer q = floor_div(M(i, c), M(r, c));
          M.row(i) -= q * M.row(r);
          if (M(i, c) != 0) clean = false;
        }
      }
      if (clean) break;
    }
    if (M(r, c) == 0) continue;
    if (M(r, c) < 0) M.row(r) = -M.row(r);
    // reduce the entries above the pivot into [0, pivot)
    for (Eigen::Index i = 0; i < r; ++i) {
      Integer q = floor_div(M(i, c), M(r, c));
      if (q != 0) M.row(i) -= q * M.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  M.conservativeResize(r, cols);
  return pivots;
}

}  // namespace

IntegerLattice hermite_form(const std::vector<ZVec>& vectors, Eigen::Index dim) {
  for (const ZVec& v : vectors)
    if (v.size() != dim)
      throw std::invalid_argument("hermite_form: inconsistent vector length");
  IntegerLattice out;
  out.dim = dim;
  if (vectors.empty()) {
    out.basis = ZMat(0, dim);
    return out;
  }
  ZMat M(static_cast<Eigen::Index>(vectors.size()), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    M.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  row_hnf(M);
  out.basis = std::move(M);
  return out;
}

bool lattice_contains(const IntegerLattice& lattice, const ZVec& v) {
  if (v.size() != lattice.dim)
    throw std::invalid_argument("lattice_contains: dimension mismatch");
  ZVec w = v;
  for (Eigen::Index i = 0; i < lattice.basis.rows(); ++i) {
    Eigen::Index c = 0;
    while (c < lattice.dim && lattice.basis(i, c) == 0) ++c;
    if (c == lattice.dim) continue;
    if (w[c] % lattice.basis(i, c) != 0) return false;
    Integer q = w[c] / lattice.basis(i, c);
    if (q != 0) w -= q * ZVec(lattice.basis.row(i).transpose());
  }
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w[i] != 0) return false;
  return true;
}

std::vector<ZVec> integer_kernel(const ZMat& A) {
  const Eigen::Index n = A.cols();
  // column HNF with a unimodular transform: A U = H, kernel = trailing
  // columns of U beyond the rank of H
  ZMat H = A;
  ZMat U = ZMat::Identity(n, n);
  Eigen::Index c = 0;
  for (Eigen::Index r = 0; r < H.rows() && c < n; ++r) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index j = c; j < n; ++j)
        if (H(r, j) != 0 && (best == -1 || abs(H(r, j)) < abs(H(r, best))))
          best = j;
      if (best == -1) break;
      if (best != c) {
        H.col(best).swap(H.col(c));
        U.col(best).swap(U.col(c));
      }
      bool clean = true;
      for (Eigen::Index j = c + 1; j < n; ++j) {
        if (H(r, j) != 0) {
          Integer q = floor_div(H(r, j), H(r, c));
          H.col(j) -= q * H.col(c);
          U.col(j) -= q * U.col(c);
          if (H(r, j) != 0) clean = false;
        }
      }
      if (clean) break;
    }
    if (c < n && H(r, c) != 0) ++c;
  }
  std::vector<ZVec> kernel;
  for (Eigen::Index j = c; j < n; ++j) kernel.push_back(U.col(j));
  return kernel;
}

ZVec primitive_integer(const QVec& v) {
  Integer den(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) den = lcm(den, v[i].get_den());
  ZVec w(v.size());
  Integer g(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    w[i] = v[i].get_num() * (den / v[i].get_den());
    g = gcd(g, w[i]);
  }
  if (g > 1)
    for (Eigen::Index i = 0; i < w.size(); ++i) w[i] /= g;
  return w;
}

IntegerLattice span_lattice(const QMat& span_basis) {
  const Eigen::Index n = span_basis.rows();
  // annihilator of the span, with integer entries
  std::vector<QVec> ann = kernel_basis(span_basis.transpose());
  if (ann.empty()) {
    // full span: the lattice is Z^n
    std::vector<ZVec> id;
    for (Eigen::Index i = 0; i < n; ++i) {
      ZVec e = ZVec::Zero(n);
      e[i] = 1;
      id.push_back(e);
    }
    return hermite_form(id, n);
  }
  ZMat C(static_cast<Eigen::Index>(ann.size()), n);
  for (std::size_t i = 0; i < ann.size(); ++i)
    C.row(static_cast<Eigen::Index>(i)) = primitive_integer(ann[i]).transpose();
  std::vector<ZVec> ker = integer_kernel(C);
  return hermite_form(ker, n);
}

ZVec reduce_mod(const IntegerLattice& lattice, ZVec v) {
  for (Eigen::Index i = 0; i < lattice.basis.rows(); ++i) {
    Eigen::Index c = 0;
    while (c < lattice.dim && lattice.basis(i, c) == 0) ++c;
    if (c == lattice.dim) continue;
    Integer q = floor_div(v[c], lattice.basis(i, c));
    if (q != 0) v -= q * ZVec(lattice.basis.row(i).transpose());
  }
  return v;
}

}  // namespace bsr
