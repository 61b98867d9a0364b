#include "bsroots/residues.hpp"

#include "bsroots/linalg.hpp"

#include <algorithm>
#include <thread>

namespace bsr {

namespace {

Rational dotq(const QVec& L, const ZVec& u) {
  Rational s(0);
  for (Eigen::Index i = 0; i < L.size(); ++i) s += L[i] * Rational(u[i]);
  return s;
}

// digit-box transversal of Z^k modulo the row lattice of T (HNF'd in place)
std::vector<ZVec> quotient_transversal(ZMat T) {
  const Eigen::Index k = T.cols();
  std::vector<ZVec> rows;
  for (Eigen::Index i = 0; i < T.rows(); ++i) rows.push_back(T.row(i).transpose());
  IntegerLattice H = hermite_form(rows, k);
  if (H.lattice_rank() != k)
    throw StabilizationError("face difference lattice has deficient rank");
  std::vector<Integer> diag;
  for (Eigen::Index i = 0; i < k; ++i) {
    Eigen::Index c = 0;
    while (H.basis(i, c) == 0) ++c;
    diag.push_back(H.basis(i, c));
  }
  std::vector<ZVec> reps;
  ZVec cur = ZVec::Zero(k);
  // odometer over 0 <= cur[i] < diag[i]
  while (true) {
    reps.push_back(cur);
    Eigen::Index i = 0;
    while (i < k) {
      cur[i] += 1;
      if (cur[i] < diag[static_cast<std::size_t>(i)]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  return reps;
}

struct ValuePass {
  std::set<Rational> diff, mem;
  bool cap_hit = false;
  bool unknown = false;
};

// single enumeration pass at a fixed box/budget
ValuePass value_pass(const MonomialIdeal& ideal, const NewtonPolyhedron& P,
                     const Face& face, const Rational& cap, long box,
                     long budget) {
  ValuePass out;
  const Eigen::Index n = ideal.dim;
  DifferenceSemigroup sg = difference_semigroup(ideal, P, face, box);
  const ZVec v0 = sg.face_points.front();

  const QVec L = *face.functional;
  IntegerLattice lambda = span_lattice(face.vspan);
  const Eigen::Index d = lambda.lattice_rank();
  if (sg.dq.lattice_rank() != d - 1) {
    out.unknown = true;  // box has not yet exposed the face's directions
    return out;
  }

  // value group of L on the lattice
  std::vector<Rational> lvals;
  for (Eigen::Index i = 0; i < d; ++i)
    lvals.push_back(dotq(L, ZVec(lambda.basis.row(i).transpose())));
  Rational delta = rational_gcd(lvals);
  if (delta == 0)
    throw std::logic_error("face functional vanishes on the face span");

  // u_star in the lattice with L(u_star) = delta, by a Bezout chain
  Integer den(1);
  for (const Rational& l : lvals) den = lcm(den, l.get_den());
  std::vector<Integer> scaled;
  for (const Rational& l : lvals) scaled.push_back(l.get_num() * (den / l.get_den()));
  Integer g(0);
  std::vector<Integer> bezout(scaled.size(), Integer(0));
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    if (scaled[i] == 0) continue;
    if (g == 0) {
      g = abs(scaled[i]);
      bezout[i] = scaled[i] > 0 ? 1 : -1;
    } else {
      Integer s, t, g2;
      mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
                 scaled[i].get_mpz_t());
      for (std::size_t j = 0; j < i; ++j) bezout[j] *= s;
      bezout[i] = t;
      g = g2;
    }
  }
  ZVec u_star = ZVec::Zero(n);
  for (Eigen::Index i = 0; i < d; ++i)
    u_star += bezout[static_cast<std::size_t>(i)] *
              ZVec(lambda.basis.row(i).transpose());

  // value-zero sublattice of lambda, in lattice coordinates
  ZMat row(1, d);
  for (Eigen::Index i = 0; i < d; ++i) row(0, i) = scaled[static_cast<std::size_t>(i)];
  std::vector<ZVec> zero_coords = integer_kernel(row);
  std::vector<ZVec> zero_basis;
  for (const ZVec& c : zero_coords) {
    ZVec v = ZVec::Zero(n);
    for (Eigen::Index i = 0; i < d; ++i)
      v += c[i] * ZVec(lambda.basis.row(i).transpose());
    zero_basis.push_back(v);
  }
  const Eigen::Index k = static_cast<Eigen::Index>(zero_basis.size());  // = d-1

  // coordinates of the dq basis with respect to the zero basis
  std::vector<ZVec> coset_shifts;  // ambient representatives of Lat0 / D_Q
  if (k == 0) {
    coset_shifts.push_back(ZVec::Zero(n));
  } else {
    QMat B0(n, k);
    for (Eigen::Index j = 0; j < k; ++j)
      B0.col(j) = to_rational(zero_basis[static_cast<std::size_t>(j)]);
    ZMat T(sg.dq.lattice_rank(), k);
    for (Eigen::Index i = 0; i < sg.dq.lattice_rank(); ++i) {
      auto sol = solve_linear(B0, to_rational(ZVec(sg.dq.basis.row(i).transpose())));
      if (!sol)
        throw std::logic_error("face difference not inside the value-zero lattice");
      for (Eigen::Index j = 0; j < k; ++j) {
        if (sol->particular[j].get_den() != 1)
          throw std::logic_error("face difference with fractional coordinates");
        T(i, j) = sol->particular[j].get_num();
      }
    }
    for (const ZVec& digits : quotient_transversal(T)) {
      ZVec v = ZVec::Zero(n);
      for (Eigen::Index j = 0; j < k; ++j)
        v += digits[j] * zero_basis[static_cast<std::size_t>(j)];
      coset_shifts.push_back(v);
    }
  }

  // candidate representatives first: the membership budget must cover their
  // coordinates, which scale with cap / delta rather than with the box
  const Integer kmax = rational_floor(cap / delta);
  std::vector<std::pair<Rational, ZVec>> candidates;
  long reach = 0;
  for (Integer kk(1); kk <= kmax; ++kk) {
    Rational value = Rational(kk) * delta;
    for (const ZVec& shift : coset_shifts) {
      ZVec u = reduce_mod(sg.dq, ZVec(kk * u_star + shift));
      ZVec w = u - v0;
      for (Eigen::Index i = 0; i < n; ++i) {
        reach = std::max(reach, std::abs(u[i].get_si()));
        reach = std::max(reach, std::abs(w[i].get_si()));
      }
      candidates.push_back({value, std::move(u)});
    }
  }
  MemberSearch search(sg, std::max(budget, 2 * reach + 8));
  std::set<Rational> mem_hit, diff_hit;
  for (const auto& [value, u] : candidates) {
    if (diff_hit.count(value)) continue;
    Membership in_m = search.query(u);
    if (in_m == Membership::unknown) { out.unknown = true; continue; }
    if (in_m == Membership::no) continue;
    mem_hit.insert(value);
    Membership in_mp = search.query(ZVec(u - v0));
    if (in_mp == Membership::unknown) { out.unknown = true; continue; }
    if (in_mp == Membership::no) diff_hit.insert(value);
  }
  out.mem = mem_hit;
  out.diff = diff_hit;
  for (const Rational& v : diff_hit)
    if (v == cap) out.cap_hit = true;
  return out;
}

std::vector<Rational> set_to_sorted_desc_negated(const std::set<Rational>& s) {
  std::vector<Rational> v;
  for (auto it = s.begin(); it != s.end(); ++it) v.push_back(-*it);
  std::sort(v.begin(), v.end(), std::greater<Rational>());
  return v;
}

}  // namespace

FaceValueData face_values(const MonomialIdeal& ideal, const NewtonPolyhedron& P,
                          const Face& face, const Rational& cap, long box,
                          long budget) {
  if (cap <= 0) throw std::invalid_argument("face_values: cap must be positive");
  if (face.in_coordinate_hyperplane)
    throw std::invalid_argument("face_values: ineligible face");
  FaceValueData out;
  if (face.whole) {
    out.whole = true;
    return out;
  }
  const long base_box = box > 0 ? box : default_face_box(ideal);
  const long base_budget = budget > 0 ? budget : default_budget(ideal);
  constexpr int kMaxAttempts = 7;

  ValuePass prev;
  bool have_prev = false;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const long b = base_box + 4 * attempt;
    const long bud = std::max(base_budget, 2 * b);
    ValuePass cur = value_pass(ideal, P, face, cap, b, bud);
    if (!cur.unknown && have_prev && !prev.unknown && cur.diff == prev.diff &&
        cur.mem == prev.mem) {
      out.diff_values.assign(cur.diff.begin(), cur.diff.end());
      out.mem_values.assign(cur.mem.begin(), cur.mem.end());
      out.cap_hit = cur.cap_hit;
      out.certificate = {b - 4, bud};
      return out;
    }
    prev = std::move(cur);
    have_prev = true;
  }
  throw StabilizationError(
      "residue enumeration did not stabilize under box enlargement");
}

ResidueSet residue_set(const MonomialIdeal& ideal, const NewtonPolyhedron& P,
                       const Face& face, const Rational& cap, long box) {
  FaceValueData data = face_values(ideal, P, face, cap, box);
  ResidueSet out;
  std::set<Rational> s(data.diff_values.begin(), data.diff_values.end());
  out.values = set_to_sorted_desc_negated(s);
  out.cap_hit = data.cap_hit;
  out.certificate = data.certificate;
  return out;
}

RootsResult roots(const MonomialIdeal& ideal, const NewtonPolyhedron& P,
                  const std::vector<Face>& faces, Rational cap, long box,
                  int jobs) {
  if (!ideal.is_nontrivial_proper())
    throw std::invalid_argument("roots: ideal must be nontrivial and proper");
  RootsResult out;
  out.cap = cap > 0 ? cap : Rational(static_cast<long>(ideal.dim));

  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].eligible()) eligible.push_back(i);

  std::vector<FaceContribution> slots(eligible.size());
  std::vector<int> status(eligible.size(), 0);  // 0 ok, 1 failed

  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t t = lo; t < hi; ++t) {
      const Face& f = faces[eligible[t]];
      try {
        FaceValueData data = face_values(ideal, P, f, out.cap, box);
        FaceContribution c;
        c.face_index = eligible[t];
        std::set<Rational> s(data.diff_values.begin(), data.diff_values.end());
        c.roots = set_to_sorted_desc_negated(s);
        c.certificate = data.certificate;
        if (data.cap_hit) status[t] = 2;
        slots[t] = std::move(c);
      } catch (const StabilizationError&) {
        status[t] = 1;
      }
    }
  };

  const int nthreads = std::max(1, jobs);
  if (nthreads == 1 || eligible.size() <= 1) {
    work(0, eligible.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk =
        (eligible.size() + static_cast<std::size_t>(nthreads) - 1) /
        static_cast<std::size_t>(nthreads);
    for (int t = 0; t < nthreads; ++t) {
      std::size_t lo = static_cast<std::size_t>(t) * chunk;
      std::size_t hi = std::min(eligible.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  std::set<Rational> all;
  for (std::size_t t = 0; t < eligible.size(); ++t) {
    if (status[t] == 1) {
      out.failed_faces.push_back(eligible[t]);
      continue;
    }
    if (status[t] == 2) out.cap_hit = true;
    for (const Rational& r : slots[t].roots) all.insert(r);
    out.contributions.push_back(slots[t]);
  }
  out.roots.assign(all.rbegin(), all.rend());  // descending
  return out;
}

ModZClasses roots_mod_z(const NewtonPolyhedron& P) {
  ModZClasses out;
  std::set<Integer> ms;
  for (const FacetData& f : P.facets)
    if (!f.is_coordinate) ms.insert(facet_m(f));
  out.facet_ms.assign(ms.begin(), ms.end());
  std::set<Rational> gens, cls;
  for (const Integer& m : ms) {
    Rational g(1, m);
    g.canonicalize();
    gens.insert(g);
    for (Integer k(0); k < m; ++k) {
      Rational c(k, m);
      c.canonicalize();
      cls.insert(c);
    }
  }
  out.generators.assign(gens.begin(), gens.end());
  out.classes.assign(cls.begin(), cls.end());
  return out;
}

std::vector<Rational> classes_of(const std::vector<Rational>& values) {
  std::set<Rational> cls;
  for (const Rational& v : values) {
    Rational c = v - Rational(rational_floor(v));
    cls.insert(c);
  }
  return std::vector<Rational>(cls.begin(), cls.end());
}

std::vector<Rational> product_face_values(const FaceValueData& a,
                                          const FaceValueData& b) {
  std::vector<Rational> out;
  if (a.whole && b.whole) return out;
  if (a.whole) return b.diff_values;
  if (b.whole) return a.diff_values;
  std::set<Rational> da(a.diff_values.begin(), a.diff_values.end());
  std::set<Rational> ma(a.mem_values.begin(), a.mem_values.end());
  std::set<Rational> db(b.diff_values.begin(), b.diff_values.end());
  std::set<Rational> mb(b.mem_values.begin(), b.mem_values.end());
  std::set<Rational> result;
  for (const Rational& v : da)
    if (mb.count(v)) result.insert(v);
  for (const Rational& v : db)
    if (ma.count(v)) result.insert(v);
  out.assign(result.begin(), result.end());
  return out;
}

ResidueSet product_face_residues(const FaceValueData& a, const FaceValueData& b,
                                 const Rational& cap) {
  if (cap <= 0)
    throw std::invalid_argument("product_face_residues: cap must be positive");
  ResidueSet out;
  std::set<Rational> s;
  for (const Rational& v : product_face_values(a, b))
    if (v <= cap) {
      s.insert(v);
      if (v == cap) out.cap_hit = true;
    }
  out.values = set_to_sorted_desc_negated(s);
  out.certificate = {std::max(a.certificate.box, b.certificate.box),
                     std::max(a.certificate.budget, b.certificate.budget)};
  return out;
}

CheckTsResult check_ts(const MonomialIdeal& a, const MonomialIdeal& b,
                       Rational cap, long box, int jobs) {
  if (!a.is_nontrivial_proper() || !b.is_nontrivial_proper())
    throw std::invalid_argument("check_ts: ideals must be nontrivial and proper");
  if (!a.names.empty() && !b.names.empty()) {
    for (const std::string& na : a.names)
      for (const std::string& nb : b.names)
        if (na == nb)
          throw std::invalid_argument("check_ts: variable name collision: " + na);
  }
  CheckTsResult out;
  out.cap = cap > 0 ? cap : Rational(static_cast<long>(a.dim + b.dim));

  NewtonPolyhedron Pa = build_polyhedron(a);
  NewtonPolyhedron Pb = build_polyhedron(b);
  ProductPolyhedron prod = product_polyhedron(Pa, Pb);

  out.wa = roots(a, Pa, prod.faces_a, out.cap, box, jobs);
  out.wb = roots(b, Pb, prod.faces_b, out.cap, box, jobs);
  if (!out.wa.failed_faces.empty() || !out.wb.failed_faces.empty())
    throw StabilizationError("check_ts: factor face residues did not stabilize");

  // value data per eligible factor face, at the joint cap
  std::vector<FaceValueData> data_a(prod.faces_a.size());
  std::vector<FaceValueData> data_b(prod.faces_b.size());
  for (std::size_t i = 0; i < prod.faces_a.size(); ++i)
    if (!prod.faces_a[i].in_coordinate_hyperplane)
      data_a[i] = face_values(a, Pa, prod.faces_a[i], out.cap, box);
  for (std::size_t j = 0; j < prod.faces_b.size(); ++j)
    if (!prod.faces_b[j].in_coordinate_hyperplane)
      data_b[j] = face_values(b, Pb, prod.faces_b[j], out.cap, box);

  std::set<Rational> wab;
  for (std::size_t i = 0; i < prod.faces_a.size(); ++i) {
    if (prod.faces_a[i].in_coordinate_hyperplane) continue;
    for (std::size_t j = 0; j < prod.faces_b.size(); ++j) {
      if (prod.faces_b[j].in_coordinate_hyperplane) continue;
      std::vector<Rational> vals = product_face_values(data_a[i], data_b[j]);
      if (vals.empty()) continue;
      PairContribution pc;
      pc.face_a = i;
      pc.face_b = j;
      for (const Rational& v : vals) {
        if (v > out.cap) continue;
        pc.roots.push_back(-v);
        wab.insert(-v);
      }
      std::sort(pc.roots.begin(), pc.roots.end(), std::greater<Rational>());
      if (!pc.roots.empty()) out.pair_contributions.push_back(std::move(pc));
    }
  }
  out.wab.assign(wab.rbegin(), wab.rend());

  std::set<Rational> wa_set(out.wa.roots.begin(), out.wa.roots.end());
  std::set<Rational> wb_set(out.wb.roots.begin(), out.wb.roots.end());
  out.inclusion = true;
  for (const Rational& r : wa_set)
    if (!wab.count(r)) { out.inclusion = false; break; }
  if (out.inclusion)
    for (const Rational& r : wb_set)
      if (!wab.count(r)) { out.inclusion = false; break; }
  for (const Rational& r : wab)
    if (!wa_set.count(r) && !wb_set.count(r)) out.extra_roots.push_back(r);
  std::sort(out.extra_roots.begin(), out.extra_roots.end(),
            std::greater<Rational>());

  out.classes_a = roots_mod_z(Pa);
  out.classes_b = roots_mod_z(Pb);
  out.classes_product = roots_mod_z(prod.poly);
  std::set<Rational> union_cls(out.classes_a.classes.begin(),
                               out.classes_a.classes.end());
  union_cls.insert(out.classes_b.classes.begin(), out.classes_b.classes.end());
  std::set<Rational> prod_cls(out.classes_product.classes.begin(),
                              out.classes_product.classes.end());
  out.modz_equal = (union_cls == prod_cls);
  return out;
}

}  // namespace bsr
