#include "bsroots/semigroup.hpp"

#include <algorithm>

namespace bsr {

namespace {

std::vector<long> key_of(const ZVec& v) {
  std::vector<long> k(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p())
      throw std::overflow_error("semigroup search: coordinate out of range");
    k[static_cast<std::size_t>(i)] = v[i].get_si();
  }
  return k;
}

Integer dot(const ZVec& a, const ZVec& b) {
  Integer s(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Exact test for a single translation direction.
bool line_meets_orthant(const ZVec& v, const ZVec& w) {
  bool has_lo = false, has_hi = false;
  Integer lo(0), hi(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (w[i] == 0) {
      if (v[i] < 0) return false;
    } else if (w[i] > 0) {
      Integer k = rational_ceil(Rational(-v[i], w[i]));
      if (!has_lo || k > lo) { lo = k; has_lo = true; }
    } else {
      Integer k = rational_floor(Rational(v[i], -w[i]));
      if (!has_hi || k < hi) { hi = k; has_hi = true; }
    }
  }
  if (has_lo && has_hi) return lo <= hi;
  return true;  // unbounded on at least one side
}

struct OrthantTest {
  ZVec psi;
  Integer psi_value;
  long budget;
  bool truncated = false;

  bool run(ZVec v, std::vector<ZVec> rows) {
    // presolve: a row whose only unmasked nonzero sits at one coordinate
    // translates that coordinate freely; mask it out
    std::vector<bool> masked(static_cast<std::size_t>(v.size()), false);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        Eigen::Index pos = -1;
        int count = 0;
        for (Eigen::Index i = 0; i < v.size(); ++i) {
          if (masked[static_cast<std::size_t>(i)]) continue;
          if (rows[r][i] != 0) { ++count; pos = i; }
        }
        if (count == 1) {
          masked[static_cast<std::size_t>(pos)] = true;
          rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
          changed = true;
          break;
        }
        if (count == 0) {
          rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
          changed = true;
          break;
        }
      }
    }
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (masked[static_cast<std::size_t>(i)]) v[i] = 0;
    for (ZVec& w : rows)
      for (Eigen::Index i = 0; i < v.size(); ++i)
        if (masked[static_cast<std::size_t>(i)]) w[i] = 0;
    return recurse(v, rows, 0);
  }

  bool recurse(const ZVec& v, const std::vector<ZVec>& rows, std::size_t from) {
    if (rows.size() - from == 0) {
      for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i] < 0) return false;
      return true;
    }
    if (rows.size() - from == 1) return line_meets_orthant(v, rows[from]);
    const ZVec& w = rows[from];
    Eigen::Index p = 0;
    while (p < w.size() && w[p] == 0) ++p;
    if (p == w.size()) return recurse(v, rows, from + 1);
    // Rows below this one do not touch the pivot column, so the final
    // translate has coordinate v[p] + y * piv there.  Nonnegativity gives
    // the lower bound; the conserved psi value gives the upper bound when
    // psi is positive at the pivot (psi(u') = psi_value and u' >= 0 force
    // u'[p] <= psi_value / psi[p]).  HNF pivots are positive.
    Integer piv = w[p];
    Integer lo = rational_ceil(Rational(-v[p], piv));
    Integer hi;
    if (psi[p] > 0) {
      Rational bound(psi_value - v[p] * psi[p], piv * psi[p]);
      hi = rational_floor(bound);
    } else {
      hi = lo + 2 * budget;
      truncated = true;
    }
    for (Integer y = lo; y <= hi; ++y)
      if (recurse(v + y * w, rows, from + 1)) return true;
    return false;
  }
};

}  // namespace

Membership coset_meets_orthant(const ZVec& v, const IntegerLattice& dq,
                               const ZVec& psi, long budget) {
  if (dq.lattice_rank() == dq.dim) return Membership::yes;  // full lattice
  if (dq.is_zero()) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v[i] < 0) return Membership::no;
    return Membership::yes;
  }
  std::vector<ZVec> rows;
  for (Eigen::Index i = 0; i < dq.basis.rows(); ++i)
    rows.push_back(dq.basis.row(i).transpose());
  if (rows.size() == 1)
    return line_meets_orthant(v, rows[0]) ? Membership::yes : Membership::no;
  Integer psi_value(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) psi_value += psi[i] * v[i];
  OrthantTest t{psi, psi_value, budget};
  bool hit = t.run(v, rows);
  if (hit) return Membership::yes;
  return t.truncated ? Membership::unknown : Membership::no;
}

DifferenceSemigroup difference_semigroup(const MonomialIdeal& ideal,
                                         const NewtonPolyhedron& P,
                                         const Face& face, long box) {
  if (face.in_coordinate_hyperplane)
    throw std::invalid_argument(
        "difference_semigroup: face lies in a coordinate hyperplane");
  DifferenceSemigroup sg;
  const Eigen::Index n = ideal.dim;
  sg.dim = n;
  sg.base = ZVec::Ones(n);
  sg.face_points = face_gamma_points(ideal, P, face, box);
  if (sg.face_points.empty())
    throw std::invalid_argument(
        "difference_semigroup: no Gamma points on the face within the box");
  sg.psi = face.psi;

  for (Eigen::Index i = 0; i < n; ++i) {
    ZVec e = ZVec::Zero(n);
    e[i] = 1;
    sg.generators.push_back(e);
  }
  std::vector<ZVec> diffs;
  for (const ZVec& f : sg.face_points)
    diffs.push_back(f - sg.face_points.front());
  sg.dq = hermite_form(diffs, n);

  std::vector<std::vector<long>> seen;
  for (const ZVec& g : ideal.generators) {
    for (const ZVec& q : sg.face_points) {
      ZVec d = g - q;
      bool zero = true;
      for (Eigen::Index i = 0; i < n; ++i)
        if (d[i] != 0) { zero = false; break; }
      if (zero) continue;
      sg.generators.push_back(d);
      if (dot(sg.psi, d) > 0) {
        ZVec red = reduce_mod(sg.dq, d);
        std::vector<long> k = key_of(red);
        if (std::find(seen.begin(), seen.end(), k) == seen.end()) {
          seen.push_back(k);
          sg.steps.push_back(red);
        }
      }
    }
  }
  return sg;
}

MemberSearch::MemberSearch(const DifferenceSemigroup& sg, long budget)
    : sg_(sg), budget_(budget) {}

Membership MemberSearch::query(const ZVec& p) {
  if (p.size() != sg_.dim)
    throw std::invalid_argument("member: dimension mismatch");
  return explore(reduce_mod(sg_.dq, ZVec(p - sg_.base)));
}

Membership MemberSearch::explore(const ZVec& reduced) {
  if (dot(sg_.psi, reduced) < 0) return Membership::no;
  std::vector<long> key;
  try {
    key = key_of(reduced);
  } catch (const std::overflow_error&) {
    return Membership::unknown;
  }
  for (long c : key)
    if (c > budget_ || c < -budget_) return Membership::unknown;
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  Membership result = coset_meets_orthant(reduced, sg_.dq, sg_.psi, budget_);
  if (result != Membership::yes) {
    for (const ZVec& d : sg_.steps) {
      Membership sub = explore(reduce_mod(sg_.dq, ZVec(reduced - d)));
      if (sub == Membership::yes) { result = Membership::yes; break; }
      if (sub == Membership::unknown) result = Membership::unknown;
    }
  }
  memo_[key] = result;
  return result;
}

Membership member(const DifferenceSemigroup& sg, const ZVec& p, long budget) {
  MemberSearch search(sg, budget);
  return search.query(p);
}

long default_budget(const MonomialIdeal& ideal) {
  return 4 * (ideal.max_coordinate().get_si() + static_cast<long>(ideal.dim));
}

}  // namespace bsr
