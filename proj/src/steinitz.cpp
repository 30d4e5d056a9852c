#include "boxvas/steinitz.hpp"

#include <algorithm>

namespace boxvas {

namespace {

bool fractional(const Rational& x) { return x > 0 && x < 1; }

// Nonzero z with sum z = 0 and sum z_j v_j = 0 over the given columns.
// Requires cols.size() > dim + 1.
std::vector<Rational> null_vector(const std::vector<Vec>& vectors,
                                  const std::vector<std::size_t>& cols, std::size_t dim) {
  const std::size_t rows = dim + 1, m = cols.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(m));
  for (std::size_t j = 0; j < m; ++j) {
    a[0][j] = 1;
    for (std::size_t r = 0; r < dim; ++r) a[r + 1][j] = Rational(vectors[cols[j]][r]);
  }
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(m, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = Rational(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t q = 0; q < rows; ++q)
      if (q != r && a[q][c] != 0) {
        Rational f = a[q][c];
        for (std::size_t k = 0; k < m; ++k) a[q][k] -= f * a[r][k];
      }
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> z(m, Rational(0));
  z[free_col] = 1;
  for (std::size_t q = 0; q < pivot_of_row.size(); ++q) z[pivot_of_row[q]] = -a[q][free_col];
  return z;
}

// Moves mu to a vertex of its polytope: at most dim+1 fractional coordinates.
void walk_to_vertex(const std::vector<Vec>& vectors, const std::vector<std::size_t>& active,
                    std::vector<Rational>& mu, std::size_t dim) {
  while (true) {
    std::vector<std::size_t> pos;  // positions in active
    for (std::size_t j = 0; j < active.size() && pos.size() < dim + 2; ++j)
      if (fractional(mu[j])) pos.push_back(j);
    if (pos.size() <= dim + 1) return;
    std::vector<std::size_t> cols;
    for (auto p : pos) cols.push_back(active[p]);
    auto z = null_vector(vectors, cols, dim);
    std::optional<Rational> t;
    for (std::size_t q = 0; q < pos.size(); ++q) {
      if (z[q] == 0) continue;
      Rational lim = z[q] > 0 ? (Rational(1) - mu[pos[q]]) / z[q] : mu[pos[q]] / -z[q];
      if (!t || lim < *t) t = lim;
    }
    for (std::size_t q = 0; q < pos.size(); ++q) mu[pos[q]] += *t * z[q];
  }
}

bool corridor_ok(const std::vector<Vec>& vectors, const std::vector<std::size_t>& perm,
                 const Int& bound) {
  const std::size_t k = vectors.size(), d = vectors[0].size();
  Vec total(d, 0);
  for (const auto& v : vectors) total = add(total, v);
  Vec prefix(d, 0);
  for (std::size_t n = 1; n <= k; ++n) {
    prefix = add(prefix, vectors[perm[n - 1]]);
    if (n < d) continue;
    // k * prefix - (n-d) * total, compared against k * bound.
    Vec dev = sub(scale(Int(k), prefix), scale(Int(n - d), total));
    if (inf_norm(dev) > Int(k) * bound) return false;
  }
  return true;
}

}  // namespace

Rational corridor_width(const std::vector<Vec>& vectors, const std::vector<std::size_t>& perm) {
  if (vectors.empty()) return Rational(0);
  const std::size_t k = vectors.size(), d = vectors[0].size();
  Vec total(d, 0);
  for (const auto& v : vectors) total = add(total, v);
  Vec prefix(d, 0);
  Int worst = 0;
  for (std::size_t n = 1; n <= k; ++n) {
    prefix = add(prefix, vectors[perm[n - 1]]);
    if (n < d) continue;
    worst = std::max(worst, inf_norm(sub(scale(Int(k), prefix), scale(Int(n - d), total))));
  }
  return Rational(worst, Int(k));
}

SteinitzResult steinitz_reorder(const std::vector<Vec>& vectors) {
  if (vectors.empty()) throw PreconditionError("steinitz_reorder needs at least one vector");
  const std::size_t k = vectors.size(), d = vectors[0].size();
  for (const auto& v : vectors)
    if (v.size() != d) throw PreconditionError("steinitz_reorder: mixed dimensions");
  SteinitzResult res;
  Int I = 0;
  for (const auto& v : vectors) I = std::max(I, inf_norm(v));
  res.corridor_bound = Int(d) * I;

  std::vector<std::size_t> active(k);
  for (std::size_t i = 0; i < k; ++i) active[i] = i;
  std::vector<std::size_t> removed;  // removal order, A_k first
  if (k > d) {
    std::vector<Rational> mu(k, Rational(Int(k - d), Int(k)));
    for (std::size_t n = k - 1; n >= d; --n) {
      // mu on A_{n+1} satisfies sum = n+1-d; rescale to sum = n-d.
      Rational f(Int(n - d), Int(n + 1 - d));
      for (auto& x : mu) x *= f;
      walk_to_vertex(vectors, active, mu, d);
      std::size_t pos = active.size();
      for (std::size_t j = 0; j < active.size(); ++j)
        if (mu[j] == 0) {
          pos = j;
          break;
        }
      if (pos == active.size()) throw InternalError("Steinitz vertex has no zero coordinate");
      removed.push_back(active[pos]);
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(pos));
      mu.erase(mu.begin() + static_cast<std::ptrdiff_t>(pos));
      if (n == d) break;
    }
  }
  res.permutation = active;
  res.permutation.insert(res.permutation.end(), removed.rbegin(), removed.rend());
  if (!corridor_ok(vectors, res.permutation, res.corridor_bound))
    throw InternalError("Steinitz corridor bound violated");
  res.verified = true;
  return res;
}

std::vector<std::size_t> quota_order(const std::vector<Int>& counts) {
  Int K = 0;
  for (const auto& c : counts) {
    if (c < 0) throw PreconditionError("quota_order: negative count");
    K += c;
  }
  auto k64 = to_i64(K);
  if (!k64 || *k64 > 500'000'000) throw ResourceError("quota_order: multiset too large");
  const std::size_t T = counts.size();
  std::vector<std::int64_t> c(T), used(T, 0);
  for (std::size_t t = 0; t < T; ++t) c[t] = *to_i64(counts[t]);
  std::vector<std::size_t> order;
  order.reserve(static_cast<std::size_t>(*k64));
  using I128 = __int128;
  for (std::int64_t j = 1; j <= *k64; ++j) {
    std::size_t best = T;
    I128 best_def = 0;
    for (std::size_t t = 0; t < T; ++t) {
      if (used[t] == c[t]) continue;
      I128 def = I128(j) * c[t] - I128(*k64) * used[t];
      if (best == T || def > best_def) {
        best = t;
        best_def = def;
      }
    }
    ++used[best];
    order.push_back(best);
  }
  return order;
}

Path steinitz_path(const VasSystem& vas, const std::vector<Int>& coefficients,
                   std::size_t exact_limit) {
  if (coefficients.size() != vas.size())
    throw PreconditionError("steinitz_path: one coefficient per generator expected");
  Int total = 0;
  for (const auto& c : coefficients) {
    if (c < 0) throw PreconditionError("steinitz_path: negative coefficient");
    total += c;
  }
  if (total == 0) return {};
  if (total <= Int(exact_limit)) {
    std::vector<Vec> items;
    std::vector<std::size_t> gen_of;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
      for (Int r = 0; r < coefficients[i]; ++r) {
        items.push_back(vas.generator(i));
        gen_of.push_back(i);
      }
    auto sr = steinitz_reorder(items);
    Path p;
    for (auto j : sr.permutation) p.push_back(gen_of[j]);
    return p;
  }
  return quota_order(coefficients);
}

bool check_steinitz_drop_peak(const VasSystem& vas, const Path& path, const Int& bound) {
  auto rec = make_path_record(vas, path);
  if (!all_nonneg(rec.effect))
    throw PreconditionError("check_steinitz_drop_peak needs a nonnegative effect");
  for (std::size_t k = 0; k < vas.dim(); ++k) {
    if (rec.drop[k] > bound) return false;
    if (rec.peak[k] > rec.effect[k] + bound) return false;
  }
  return true;
}

bool check_steinitz_drop_peak(const VasSystem& vas, const Path& path) {
  return check_steinitz_drop_peak(vas, path, 2 * vas.norm());
}

}  // namespace boxvas
