#include "boxvas/geometry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace boxvas {

std::string to_string(ConeClass c) {
  switch (c) {
    case ConeClass::ZeroOnly: return "ZeroOnly";
    case ConeClass::Ray: return "Ray";
    case ConeClass::Line: return "Line";
    case ConeClass::ProperCone: return "ProperCone";
    case ConeClass::HalfPlane: return "HalfPlane";
    case ConeClass::FullPlane: return "FullPlane";
  }
  return "?";
}

std::string to_string(QuadrantRelation q) {
  switch (q) {
    case QuadrantRelation::ContainsQuadrant: return "ContainsQuadrant";
    case QuadrantRelation::ContainedInQuadrant: return "ContainedInQuadrant";
    case QuadrantRelation::IntersectsViaXAxisSide: return "IntersectsViaXAxisSide";
    case QuadrantRelation::IntersectsViaYAxisSide: return "IntersectsViaYAxisSide";
    case QuadrantRelation::Other: return "Other";
  }
  return "?";
}

std::string to_string(DeepConstant::Provenance p) {
  return p == DeepConstant::Provenance::Configured ? "Configured" : "DefaultHeuristic";
}

DeepConstant default_deep_constant(const VasSystem& vas) {
  const Int& n = vas.norm();
  return {16 * n * n * n, DeepConstant::Provenance::DefaultHeuristic};
}

Int cross(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

namespace {

void require_dim2(const VasSystem& vas, const char* op) {
  if (vas.dim() != 2)
    throw UnsupportedDimensionError(std::string(op) + " requires a 2-VAS, got dimension " +
                                    std::to_string(vas.dim()));
}

// 0 for angles in [0,180), 1 for [180,360).
int half_of(const Vec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

bool angle_less(const Vec& a, const Vec& b) {
  int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

bool same_direction(const Vec& a, const Vec& b) { return cross(a, b) == 0 && dot(a, b) > 0; }

bool ge0(const Vec& v) { return v[0] >= 0 && v[1] >= 0; }
bool gt0(const Vec& v) { return v[0] > 0 && v[1] > 0; }

// Normal of chi that is nonnegative on every generator, if unique.
std::optional<Vec> inward_normal(const VasSystem& vas, const std::vector<std::size_t>& nz,
                                 const Vec& chi) {
  Vec c1{-chi[1], chi[0]}, c2{chi[1], -chi[0]};
  bool ok1 = true, ok2 = true;
  for (auto i : nz) {
    if (dot(c1, vas.generator(i)) < 0) ok1 = false;
    if (dot(c2, vas.generator(i)) < 0) ok2 = false;
  }
  if (ok1 && !ok2) return c1;
  if (ok2 && !ok1) return c2;
  return std::nullopt;
}

QuadrantRelation classify_proper(const Vec& chi1, const Vec& chi2) {
  // chi1 is counter-clockwise of chi2 by less than 180 degrees.
  if (ge0(chi1) && ge0(chi2)) return QuadrantRelation::ContainedInQuadrant;
  if (chi1[0] <= 0 && chi1[1] >= 0 && chi2[0] >= 0 && chi2[1] <= 0)
    return QuadrantRelation::ContainsQuadrant;
  if (gt0(chi2) && chi1[0] <= 0) return QuadrantRelation::IntersectsViaYAxisSide;
  if (gt0(chi1) && chi2[1] <= 0) return QuadrantRelation::IntersectsViaXAxisSide;
  return QuadrantRelation::Other;
}

Vec primitive(const Vec& v) {
  Int g = gcd_int(v[0], v[1]);
  return {v[0] / g, v[1] / g};
}

// Scalar t with v = t * b for primitive b, assuming v is on the line of b.
Int line_coordinate(const Vec& b, const Vec& v) {
  return b[0] != 0 ? Int(v[0] / b[0]) : Int(v[1] / b[1]);
}

// Coefficients c >= 1 on idx with sum c_i g_i = 0. Exists when the positive
// hull of idx is a linear subspace (a line or the plane).
std::optional<std::vector<Int>> positive_relation(const VasSystem& vas,
                                                  const std::vector<std::size_t>& idx) {
  Vec s{0, 0};
  for (auto i : idx) s = add(s, vas.generator(i));
  Vec neg = scale(-1, s);
  std::vector<Rational> lambda(idx.size(), Rational(0));
  bool found = is_zero(s);
  for (std::size_t a = 0; a < idx.size() && !found; ++a) {
    const Vec& g = vas.generator(idx[a]);
    if (same_direction(g, neg)) {
      lambda[a] = g[0] != 0 ? ratio(neg[0], g[0]) : ratio(neg[1], g[1]);
      found = true;
    }
  }
  for (std::size_t a = 0; a < idx.size() && !found; ++a)
    for (std::size_t b = a + 1; b < idx.size() && !found; ++b) {
      const Vec& ga = vas.generator(idx[a]);
      const Vec& gb = vas.generator(idx[b]);
      Int det = cross(ga, gb);
      if (det == 0) continue;
      Rational la = ratio(cross(neg, gb), det), lb = ratio(cross(ga, neg), det);
      if (la >= 0 && lb >= 0) {
        lambda[a] = la;
        lambda[b] = lb;
        found = true;
      }
    }
  if (!found) return std::nullopt;
  Int den = 1;
  for (const auto& l : lambda) {
    Int d = boost::multiprecision::denominator(l);
    den = den / gcd_int(den, d) * d;
  }
  std::vector<Int> c(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    Rational x = (Rational(1) + lambda[a]) * Rational(den);
    c[a] = boost::multiprecision::numerator(x);
  }
  return c;
}

// Shift integer coefficients (on idx) by a multiple of a positive relation
// until all are nonnegative.
std::vector<Int> make_nonnegative(std::vector<Int> lambda, const std::vector<Int>& rel) {
  Int k = 0;
  for (std::size_t j = 0; j < lambda.size(); ++j)
    if (lambda[j] < 0) k = std::max(k, ceil_div(-lambda[j], rel[j]));
  for (std::size_t j = 0; j < lambda.size(); ++j) lambda[j] += k * rel[j];
  return lambda;
}

// Enumerate c in prod [0, bound_i) lexicographically. visit returns true to stop.
// Returns false if the budget ran out first.
bool enumerate_box(const std::vector<Int>& bounds, std::uint64_t budget, std::uint64_t& work,
                   const std::function<bool(const std::vector<Int>&)>& visit, bool& stopped) {
  std::vector<Int> c(bounds.size(), 0);
  stopped = false;
  for (const auto& b : bounds)
    if (b <= 0) return true;
  while (true) {
    if (work >= budget) return false;
    ++work;
    if (visit(c)) {
      stopped = true;
      return true;
    }
    std::size_t k = c.size();
    while (k > 0) {
      --k;
      if (++c[k] < bounds[k]) break;
      c[k] = 0;
      if (k == 0) return true;
    }
    if (c.empty()) return true;
  }
}

std::vector<std::size_t> nonzero_indices(const VasSystem& vas) {
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < vas.size(); ++i)
    if (!is_zero(vas.generator(i))) nz.push_back(i);
  return nz;
}

}  // namespace

ConeData cone_from_generators(const VasSystem& vas) {
  require_dim2(vas, "cone_from_generators");
  ConeData cd;
  cd.source_norm = vas.norm();
  cd.nonzero_indices = nonzero_indices(vas);
  const auto& nz = cd.nonzero_indices;
  if (nz.empty()) {
    cd.classification = ConeClass::ZeroOnly;
    return cd;
  }
  std::vector<std::size_t> order = nz;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return angle_less(vas.generator(a), vas.generator(b));
  });
  std::vector<std::size_t> dirs;  // lowest index per direction
  for (auto i : order)
    if (dirs.empty() || !same_direction(vas.generator(dirs.back()), vas.generator(i)))
      dirs.push_back(i);
  if (dirs.size() > 1 && same_direction(vas.generator(dirs.front()), vas.generator(dirs.back())))
    dirs.pop_back();

  auto line_facets = [&](const Vec& g) {
    cd.facets = {Vec{-g[1], g[0]}, Vec{g[1], -g[0]}};
  };
  const std::size_t m = dirs.size();
  if (m == 1) {
    cd.classification = ConeClass::Ray;
    cd.chi1 = vas.generator(dirs[0]);
    cd.chi1_index = dirs[0];
    line_facets(*cd.chi1);
    cd.quadrant_relation =
        ge0(*cd.chi1) ? QuadrantRelation::ContainedInQuadrant : QuadrantRelation::Other;
    return cd;
  }
  if (m == 2 && cross(vas.generator(dirs[0]), vas.generator(dirs[1])) == 0) {
    cd.classification = ConeClass::Line;
    cd.chi1 = vas.generator(dirs[0]);
    cd.chi2 = vas.generator(dirs[1]);
    cd.chi1_index = dirs[0];
    cd.chi2_index = dirs[1];
    line_facets(*cd.chi1);
    cd.quadrant_relation = QuadrantRelation::Other;
    return cd;
  }
  std::optional<std::size_t> reflex, straight;
  for (std::size_t i = 0; i < m; ++i) {
    const Vec& a = vas.generator(dirs[i]);
    const Vec& b = vas.generator(dirs[(i + 1) % m]);
    Int c = cross(a, b);
    if (c < 0) reflex = i;
    else if (c == 0) straight = i;
  }
  if (reflex) {
    // Gap from a to b exceeds 180 degrees; the cone runs counter-clockwise from b to a.
    std::size_t ia = dirs[*reflex], ib = dirs[(*reflex + 1) % m];
    cd.classification = ConeClass::ProperCone;
    cd.chi1 = vas.generator(ia);
    cd.chi2 = vas.generator(ib);
    cd.chi1_index = ia;
    cd.chi2_index = ib;
    auto f1 = inward_normal(vas, nz, *cd.chi1);
    auto f2 = inward_normal(vas, nz, *cd.chi2);
    if (!f1 || !f2) throw InternalError("proper cone without unique inward normals");
    cd.facets = {*f1, *f2};
    cd.quadrant_relation = classify_proper(*cd.chi1, *cd.chi2);
    return cd;
  }
  if (straight) {
    std::size_t ia = dirs[*straight], ib = dirs[(*straight + 1) % m];
    cd.classification = ConeClass::HalfPlane;
    cd.chi1 = vas.generator(ia);
    cd.chi2 = vas.generator(ib);
    cd.chi1_index = ia;
    cd.chi2_index = ib;
    auto f = inward_normal(vas, nz, *cd.chi1);
    if (!f) throw InternalError("half-plane without unique inward normal");
    cd.facets = {*f};
    // Mixed-sign normal: the boundary line crosses the open quadrant.
    const Vec& n = *f;
    if (ge0(n)) cd.quadrant_relation = QuadrantRelation::ContainsQuadrant;
    else if (n[0] > 0 && n[1] < 0) cd.quadrant_relation = QuadrantRelation::IntersectsViaXAxisSide;
    else if (n[0] < 0 && n[1] > 0) cd.quadrant_relation = QuadrantRelation::IntersectsViaYAxisSide;
    else cd.quadrant_relation = QuadrantRelation::Other;
    return cd;
  }
  cd.classification = ConeClass::FullPlane;
  cd.quadrant_relation = QuadrantRelation::ContainsQuadrant;
  return cd;
}

Lattice::Lattice(const VasSystem& vas) : dim_(vas.dim()), n_(vas.size()) {
  a_.assign(dim_, std::vector<Int>(n_, 0));
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t r = 0; r < dim_; ++r) a_[r][j] = vas.generator(j)[r];
  u_.assign(n_, std::vector<Int>(n_, 0));
  for (std::size_t j = 0; j < n_; ++j) u_[j][j] = 1;
  pivot_col_.assign(dim_, n_);

  // Column operations: col_p <- x col_p + y col_j, col_j <- -(b/g) col_p + (a/g) col_j.
  auto combine = [&](std::vector<std::vector<Int>>& m, std::size_t p, std::size_t j,
                     const Int& x, const Int& y, const Int& s, const Int& t) {
    for (auto& row : m) {
      Int cp = row[p], cj = row[j];
      row[p] = x * cp + y * cj;
      row[j] = s * cp + t * cj;
    }
  };
  std::size_t piv = 0;
  for (std::size_t r = 0; r < dim_ && piv < n_; ++r) {
    for (std::size_t j = piv + 1; j < n_; ++j) {
      Int a = a_[r][piv], b = a_[r][j];
      if (b == 0) continue;
      Int x, y;
      Int g = ext_gcd(a, b, x, y);
      Int s = -(b / g), t = a / g;
      combine(a_, piv, j, x, y, s, t);
      combine(u_, piv, j, x, y, s, t);
    }
    if (a_[r][piv] != 0) {
      if (a_[r][piv] < 0) {
        for (auto& row : a_) row[piv] = -row[piv];
        for (auto& row : u_) row[piv] = -row[piv];
      }
      pivot_col_[r] = piv++;
    }
  }
}

LatticeResult Lattice::member(const Vec& v) const {
  LatticeResult res;
  std::vector<Int> cp(n_, 0);
  for (std::size_t r = 0; r < dim_; ++r) {
    Int rest = v[r];
    for (std::size_t j = 0; j < n_; ++j)
      if (j != pivot_col_[r]) rest -= a_[r][j] * cp[j];
    if (pivot_col_[r] == n_) {
      if (rest != 0) return res;
      continue;
    }
    const Int& p = a_[r][pivot_col_[r]];
    if (rest % p != 0) return res;
    cp[pivot_col_[r]] = rest / p;
  }
  res.coefficients.assign(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) res.coefficients[i] += u_[i][j] * cp[j];
  res.member = true;
  return res;
}

LatticeResult lattice_member(const VasSystem& vas, const Vec& v) {
  require_dim2(vas, "lattice_member");
  LatticeResult r = Lattice(vas).member(v);
  if (r.member) {
    Vec chk(2, 0);
    for (std::size_t i = 0; i < vas.size(); ++i)
      chk = add(chk, scale(r.coefficients[i], vas.generator(i)));
    if (chk != v) throw InternalError("lattice coefficients do not reproduce the vector");
  }
  return r;
}

bool in_cone(const ConeData& cone, const Vec& v) {
  switch (cone.classification) {
    case ConeClass::ZeroOnly: return is_zero(v);
    case ConeClass::Ray: return cross(*cone.chi1, v) == 0 && dot(*cone.chi1, v) >= 0;
    case ConeClass::Line: return cross(*cone.chi1, v) == 0;
    case ConeClass::FullPlane: return true;
    default:
      for (const auto& f : cone.facets)
        if (dot(f, v) < 0) return false;
      return true;
  }
}

bool is_m_deep(const ConeData& cone, const Vec& v, const DeepConstant& M) {
  for (const auto& f : cone.facets)
    if (dot(f, v) < M.value) return false;
  return true;
}

IntConeResult int_cone_member(const VasSystem& vas, const Vec& v,
                              std::optional<std::uint64_t> coeff_budget) {
  return int_cone_member(vas, cone_from_generators(vas), v, coeff_budget);
}

IntConeResult int_cone_member(const VasSystem& vas, const ConeData& cone, const Vec& v,
                              std::optional<std::uint64_t> coeff_budget) {
  require_dim2(vas, "int_cone_member");
  const std::uint64_t budget = coeff_budget.value_or(kDefaultIntConeBudget);
  IntConeResult res;
  res.coefficients.assign(vas.size(), 0);
  using S = IntConeResult::Status;
  if (is_zero(v)) {
    res.status = S::Member;
    return res;
  }
  if (!in_cone(cone, v)) {
    res.status = S::NonMember;
    return res;
  }
  const auto& nz = cone.nonzero_indices;

  // Nonnegative coefficients for r in lattice(sub) where the positive hull of
  // sub is a linear space.
  auto linear_part = [&](const std::vector<std::size_t>& sub,
                         const Vec& r) -> std::optional<std::vector<Int>> {
    std::vector<Vec> gens;
    for (auto i : sub) gens.push_back(vas.generator(i));
    VasSystem sv(2, gens);
    auto lm = Lattice(sv).member(r);
    if (!lm.member) return std::nullopt;
    auto rel = positive_relation(vas, sub);
    if (!rel) throw InternalError("no positive relation on a linear generator set");
    return make_nonnegative(lm.coefficients, *rel);
  };

  switch (cone.classification) {
    case ConeClass::ZeroOnly:
      res.status = S::NonMember;
      return res;

    case ConeClass::Line:
    case ConeClass::FullPlane: {
      auto c = linear_part(nz, v);
      if (!c) {
        res.status = S::NonMember;
        return res;
      }
      for (std::size_t j = 0; j < nz.size(); ++j) res.coefficients[nz[j]] = (*c)[j];
      res.status = S::Member;
      return res;
    }

    case ConeClass::Ray: {
      Vec b = primitive(*cone.chi1);
      Int t = line_coordinate(b, v);
      if (scale(t, b) != v) {
        res.status = S::NonMember;
        return res;
      }
      std::vector<Int> mult;
      for (auto i : nz) mult.push_back(line_coordinate(b, vas.generator(i)));
      std::size_t h = 0;
      for (std::size_t j = 1; j < nz.size(); ++j)
        if (mult[j] < mult[h]) h = j;
      std::vector<std::size_t> others;
      std::vector<Int> bounds;
      for (std::size_t j = 0; j < nz.size(); ++j)
        if (j != h) {
          others.push_back(j);
          bounds.push_back(mult[h]);
        }
      std::vector<Int> found;
      bool stopped = false;
      bool done = enumerate_box(bounds, budget, res.work, [&](const std::vector<Int>& c) {
        Int rem = t;
        for (std::size_t k = 0; k < c.size(); ++k) rem -= c[k] * mult[others[k]];
        if (rem < 0 || rem % mult[h] != 0) return false;
        found = c;
        found.push_back(rem / mult[h]);
        return true;
      }, stopped);
      if (stopped) {
        for (std::size_t k = 0; k < others.size(); ++k) res.coefficients[nz[others[k]]] = found[k];
        res.coefficients[nz[h]] = found.back();
        res.status = S::Member;
      } else {
        res.status = done ? S::NonMember : S::Undecided;
      }
      return res;
    }

    case ConeClass::HalfPlane: {
      const Vec& n = cone.facets[0];
      std::vector<std::size_t> boundary, interior;
      for (auto i : nz) (dot(n, vas.generator(i)) == 0 ? boundary : interior).push_back(i);
      Vec b = primitive(*cone.chi1);
      Int m = 0;
      for (auto i : boundary) m = gcd_int(m, line_coordinate(b, vas.generator(i)));
      Int level = dot(n, v);
      std::size_t h = 0;
      std::vector<Int> lev;
      for (auto i : interior) lev.push_back(dot(n, vas.generator(i)));
      for (std::size_t j = 1; j < interior.size(); ++j)
        if (lev[j] < lev[h]) h = j;
      std::vector<std::size_t> others;
      std::vector<Int> bounds;
      for (std::size_t j = 0; j < interior.size(); ++j)
        if (j != h) {
          others.push_back(j);
          bounds.push_back(lev[h] * m);
        }
      std::vector<Int> found_c;
      Int found_h = 0;
      Vec residual;
      bool stopped = false;
      bool done = enumerate_box(bounds, budget, res.work, [&](const std::vector<Int>& c) {
        Int rem = level;
        for (std::size_t k = 0; k < c.size(); ++k) rem -= c[k] * lev[others[k]];
        if (rem < 0 || rem % lev[h] != 0) return false;
        Int ch = rem / lev[h];
        Vec r = sub(v, scale(ch, vas.generator(interior[h])));
        for (std::size_t k = 0; k < c.size(); ++k)
          r = sub(r, scale(c[k], vas.generator(interior[others[k]])));
        Int t = line_coordinate(b, r);
        if (scale(t, b) != r || t % m != 0) return false;
        found_c = c;
        found_h = ch;
        residual = r;
        return true;
      }, stopped);
      if (!stopped) {
        res.status = done ? S::NonMember : S::Undecided;
        return res;
      }
      auto bc = linear_part(boundary, residual);
      if (!bc) throw InternalError("half-plane residual not in boundary lattice");
      for (std::size_t j = 0; j < boundary.size(); ++j) res.coefficients[boundary[j]] = (*bc)[j];
      for (std::size_t k = 0; k < others.size(); ++k)
        res.coefficients[interior[others[k]]] = found_c[k];
      res.coefficients[interior[h]] = found_h;
      res.status = S::Member;
      return res;
    }

    case ConeClass::ProperCone: {
      // Any other generator g satisfies det*g in intCone(chi1, chi2), so its
      // coefficient can be reduced below |det| without loss.
      std::size_t ia = *cone.chi1_index, ib = *cone.chi2_index;
      const Vec& ga = vas.generator(ia);
      const Vec& gb = vas.generator(ib);
      Int det = cross(ga, gb);
      Int adet = abs_int(det);
      std::vector<std::size_t> others;
      std::vector<Int> bounds;
      for (auto i : nz)
        if (i != ia && i != ib) {
          others.push_back(i);
          bounds.push_back(adet);
        }
      std::vector<Int> found;
      Int fa, fb;
      bool stopped = false;
      bool done = enumerate_box(bounds, budget, res.work, [&](const std::vector<Int>& c) {
        Vec r = v;
        for (std::size_t k = 0; k < c.size(); ++k)
          if (c[k] != 0) r = sub(r, scale(c[k], vas.generator(others[k])));
        Int na = cross(r, gb), nb = cross(ga, r);
        if (na % det != 0 || nb % det != 0) return false;
        Int alpha = na / det, beta = nb / det;
        if (alpha < 0 || beta < 0) return false;
        found = c;
        fa = alpha;
        fb = beta;
        return true;
      }, stopped);
      if (!stopped) {
        res.status = done ? S::NonMember : S::Undecided;
        return res;
      }
      for (std::size_t k = 0; k < others.size(); ++k) res.coefficients[others[k]] = found[k];
      res.coefficients[ia] += fa;
      res.coefficients[ib] += fb;
      res.status = S::Member;
      return res;
    }
  }
  return res;
}

DitcScanResult ditc_falsification_scan(const VasSystem& vas, const DeepConstant& M,
                                       std::int64_t radius,
                                       std::optional<std::uint64_t> coeff_budget) {
  require_dim2(vas, "ditc_falsification_scan");
  if (radius < 0) throw PreconditionError("scan radius must be nonnegative");
  DitcScanResult out;
  ConeData cone = cone_from_generators(vas);
  Lattice lat(vas);
  for (std::int64_t x = -radius; x <= radius; ++x)
    for (std::int64_t y = -radius; y <= radius; ++y) {
      ++out.scanned;
      Vec v{x, y};
      if (!in_cone(cone, v) || !is_m_deep(cone, v, M)) continue;
      if (!lat.member(v).member) continue;
      ++out.deep_lattice_points;
      auto r = int_cone_member(vas, cone, v, coeff_budget);
      if (r.status == IntConeResult::Status::NonMember) out.counterexamples.push_back(v);
      else if (r.status == IntConeResult::Status::Undecided) out.undecided.push_back(v);
    }
  return out;
}

bool has_rank_two(const VasSystem& vas) {
  require_dim2(vas, "has_rank_two");
  for (std::size_t i = 0; i < vas.size(); ++i)
    for (std::size_t j = i + 1; j < vas.size(); ++j)
      if (cross(vas.generator(i), vas.generator(j)) != 0) return true;
  return false;
}

SeedVector compute_seed(const VasSystem& vas) {
  require_dim2(vas, "compute_seed");
  const Int& norm = vas.norm();
  SeedVector sv;
  Path zeta;
  std::optional<std::size_t> pos;
  for (std::size_t i = 0; i < vas.size() && !pos; ++i)
    if (gt0(vas.generator(i))) pos = i;
  if (pos) {
    zeta = {*pos};
    sv.from_positive_generator = true;
  } else {
    // Axis generator u1 on coordinate a, partner u2 positive on coordinate b.
    bool built = false;
    for (int a = 0; a < 2 && !built; ++a) {
      const int b = 1 - a;
      std::optional<std::size_t> u1, u2;
      for (std::size_t i = 0; i < vas.size(); ++i) {
        const Vec& g = vas.generator(i);
        if (!u1 && g[a] > 0 && g[b] == 0) u1 = i;
        if (!u2 && g[b] > 0) u2 = i;
      }
      if (!u1 || !u2) continue;
      const Int xp = vas.generator(*u2)[a];  // <= 0, no positive generator exists
      auto reps = to_i64(-xp);
      if (!reps) throw ResourceError("seed path too long");
      for (std::int64_t k = 0; k < *reps; ++k) zeta.push_back(*u1);
      zeta.push_back(*u2);
      for (std::int64_t k = 0; k < *reps + 1; ++k) zeta.push_back(*u1);
      built = true;
    }
    if (!built) {
      bool any_nonneg = false;
      for (const auto& g : vas.generators())
        if (!is_zero(g) && ge0(g)) any_nonneg = true;
      if (!any_nonneg)
        throw DegenerateSystemError(
            "every nonzero generator has a negative coordinate, so reach(V) = {0}");
      throw DegenerateSystemError(
          "no strictly positive generator and no axis generator with a partner rising in the "
          "other coordinate; reach(V) is one-dimensional (use the 1-VAS route)");
    }
  }
  sv.witness = make_path_record(vas, zeta);
  sv.s = sv.witness.effect;
  Int reps = 2 * norm;
  sv.s_pos = scale(reps, sv.s);
  auto r64 = to_i64(reps);
  if (!r64 || Int(zeta.size()) * reps > Int(200'000'000))
    throw ResourceError("seed witness path exceeds 2e8 steps");
  sv.s_pos_witness.reserve(zeta.size() * static_cast<std::size_t>(*r64));
  for (std::int64_t k = 0; k < *r64; ++k)
    sv.s_pos_witness.insert(sv.s_pos_witness.end(), zeta.begin(), zeta.end());

  // Observation-level invariants.
  if (!(sv.s[0] >= 1 && sv.s[1] >= 1)) throw InternalError("seed s is not >= (1,1)");
  if (!(sv.s_pos[0] >= 2 * norm && sv.s_pos[1] >= 2 * norm))
    throw InternalError("s_pos below (2||V||, 2||V||)");
  if (inf_norm(sv.s_pos) > 8 * norm * norm * norm)
    throw InternalError("s_pos exceeds 8||V||^3");
  if (!is_box_reaching_trace(vas, zeta, sv.s)) throw InternalError("seed witness not box-reaching");
  return sv;
}

bool facet_product_bound_check(const ConeData& cone, const Vec& v) {
  if (cone.classification != ConeClass::ProperCone)
    throw PreconditionError("facet_product_bound_check needs a proper cone");
  // Orientation: v1 positive, v2 negative, v2 counter-clockwise of v1.
  const Vec& v1 = *cone.chi2;
  const Vec& v2 = *cone.chi1;
  if (!gt0(v1) || !(v2[0] < 0 && v2[1] < 0))
    throw PreconditionError(
        "facet_product_bound_check needs a (>0,>0) clockwise extreme and a (<0,<0) "
        "counter-clockwise extreme");
  const Vec& f1 = cone.facets[1];
  const Vec& f2 = cone.facets[0];
  if (!all_nonneg(v)) throw PreconditionError("v must be nonnegative");
  if (dot(v, f1) < 0 || dot(v, f2) < 0) throw PreconditionError("v must lie in the cone");
  return dot(v, f1) <= cone.source_norm * dot(v, f2);
}

}  // namespace boxvas
