#include "acr/cone.hpp"

#include <algorithm>
#include <cstdint>

#include "acr/errors.hpp"
#include "acr/linalg.hpp"

namespace acr {

std::vector<Rational> ConeRays::ray_sum() const {
  if (rays.empty()) return {};
  std::vector<Rational> sum(rays.front().size());
  for (const auto& ray : rays)
    for (std::size_t j = 0; j < ray.size(); ++j) sum[j] += ray[j];
  return sum;
}

namespace {

struct Ray {
  std::vector<Rational> y;   // kernel coordinates
  std::uint64_t active = 0;  // processed constraints with a_j . y = 0
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(std::vector<Rational>& u, const Rational& c, const std::vector<Rational>& v) {
  for (std::size_t i = 0; i < u.size(); ++i) u[i] -= c * v[i];
}

}  // namespace

ConeRays extreme_rays(const RationalMatrix& N) {
  if (N.cols() > 64) throw DimensionError("extreme_rays: more than 64 reactions");
  const std::size_t r = N.cols();

  ConeRays out;
  RationalMatrix K = kernel_basis(N);  // rows span ker(N)
  const std::size_t m = K.rows();
  if (m == 0 || r == 0) return out;

  // Constraint j in kernel coordinates: v_j = sum_i y_i K(i,j) >= 0.
  std::vector<std::vector<Rational>> constraint(r, std::vector<Rational>(m));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < m; ++i) constraint[j][i] = K(i, j);

  // Lineality basis starts as all of the kernel (identity in y-coordinates).
  std::vector<std::vector<Rational>> lineality;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> e(m);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t j = 0; j < r; ++j) {
    const auto& a = constraint[j];

    // If the constraint cuts the lineality space, one lineality direction
    // becomes a ray and the rest are projected into the hyperplane.
    std::size_t hit = lineality.size();
    for (std::size_t i = 0; i < lineality.size(); ++i)
      if (dot(a, lineality[i]) != 0) {
        hit = i;
        break;
      }
    if (hit < lineality.size()) {
      std::vector<Rational> l = std::move(lineality[hit]);
      lineality.erase(lineality.begin() + static_cast<std::ptrdiff_t>(hit));
      Rational al = dot(a, l);
      if (al < 0)
        for (auto& e : l) e = -e;
      al = dot(a, l);
      for (auto& other : lineality) axpy(other, dot(a, other) / al, l);
      for (auto& ray : rays) {
        axpy(ray.y, dot(a, ray.y) / al, l);
        ray.active |= std::uint64_t{1} << j;  // now on the hyperplane
      }
      std::uint64_t previous = j == 0 ? 0 : ((std::uint64_t{1} << j) - 1);
      rays.push_back(Ray{primitive_vector(l), previous});  // active on all previous hyperplanes
      continue;
    }

    // Lineality is orthogonal to a: split the rays by sign.
    std::vector<Rational> value(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) value[i] = dot(a, rays[i].y);

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (value[i] >= 0) {
        Ray kept = rays[i];
        if (value[i] == 0) kept.active |= std::uint64_t{1} << j;
        next.push_back(std::move(kept));
      }

    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (value[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (value[q] >= 0) continue;
        // Adjacency: no third generator is active on every constraint both
        // p and q are active on.
        std::uint64_t common = rays[p].active & rays[q].active;
        bool adjacent = true;
        for (std::size_t w = 0; w < rays.size(); ++w) {
          if (w == p || w == q) continue;
          if ((common & ~rays[w].active) == 0) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Ray combo;
        combo.y.resize(m);
        for (std::size_t i = 0; i < m; ++i)
          combo.y[i] = value[p] * rays[q].y[i] - value[q] * rays[p].y[i];
        combo.y = primitive_vector(combo.y);
        // Recompute activity exactly; the combination can vanish on earlier
        // constraints incidentally, and the adjacency test needs the truth.
        for (std::size_t t = 0; t <= j; ++t)
          if (dot(constraint[t], combo.y) == 0) combo.active |= std::uint64_t{1} << t;
        next.push_back(std::move(combo));
      }
    }
    rays = std::move(next);
  }

  // The final cone sits inside the non-negative orthant, so no lineality can
  // survive all r constraints.
  if (!lineality.empty()) throw Error("extreme_rays: internal error, lineality survived");

  for (const Ray& ray : rays) {
    std::vector<Rational> v(r);
    for (std::size_t j = 0; j < r; ++j) v[j] = dot(constraint[j], ray.y);
    v = primitive_vector(v);
    bool zero = true;
    for (std::size_t j = 0; j < r; ++j) {
      if (v[j] < 0) throw Error("extreme_rays: internal error, negative ray coordinate");
      if (v[j] != 0) zero = false;
    }
    if (zero) throw Error("extreme_rays: internal error, zero ray");
    for (const auto& q : N * v)
      if (q != 0) throw Error("extreme_rays: internal error, ray outside the kernel");
    out.rays.push_back(std::move(v));
  }
  std::sort(out.rays.begin(), out.rays.end());
  if (std::adjacent_find(out.rays.begin(), out.rays.end()) != out.rays.end())
    throw Error("extreme_rays: internal error, duplicate ray");

  std::vector<Rational> sum = out.ray_sum();
  out.has_positive_point =
      !sum.empty() && std::all_of(sum.begin(), sum.end(), [](const Rational& q) { return q > 0; });
  return out;
}

}  // namespace acr
