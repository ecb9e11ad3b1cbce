#pragma once

// Gaussian polynomials [A B]_k in base q^k, built by the Pascal-type
// recurrence [A B]_k = [A-1 B-1]_k + q^{kB} [A-1 B]_k.

#include <map>
#include <tuple>
#include <vector>

#include "seppart/coefficient.hpp"
#include "seppart/series.hpp"

namespace seppart {

struct QBinomial {
  int top = 0;
  int bottom = 0;
  int k = 1;
  std::vector<Coeff> poly;  // poly[d] is the coefficient of q^d; empty for zero

  bool is_zero() const { return poly.empty(); }
  int degree() const { return static_cast<int>(poly.size()) - 1; }
};

namespace detail {

using GaussianPoly = std::vector<Coeff>;

inline const GaussianPoly& gaussian_poly(int top, int bottom, int k) {
  static const GaussianPoly zero;
  if (bottom < 0 || top < bottom) return zero;
  // Per-thread memo: no locking, and each thread sees a consistent cache.
  thread_local std::map<std::tuple<int, int, int>, GaussianPoly> cache;
  const auto key = std::make_tuple(top, bottom, k);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  GaussianPoly poly;
  if (bottom == 0 || bottom == top) {
    poly = {1};
  } else {
    const GaussianPoly& left = gaussian_poly(top - 1, bottom - 1, k);
    const GaussianPoly& right = gaussian_poly(top - 1, bottom, k);
    const std::size_t shift = static_cast<std::size_t>(k) * bottom;
    poly.assign(std::max(left.size(), right.size() + shift), 0);
    for (std::size_t d = 0; d < left.size(); ++d) poly[d] = left[d];
    for (std::size_t d = 0; d < right.size(); ++d) poly[d + shift] = checked_add(poly[d + shift], right[d]);
  }
  return cache.emplace(key, std::move(poly)).first->second;
}

}  // namespace detail

/// Zero unless top >= bottom >= 0.
inline QBinomial gaussian(int top, int bottom, int k) {
  if (k < 1) throw Error(ErrorCode::Domain, "gaussian base exponent k must be positive");
  return QBinomial{top, bottom, k, detail::gaussian_poly(top, bottom, k)};
}

/// Product of two dense q-polynomials.
inline std::vector<Coeff> poly_mul(const std::vector<Coeff>& a, const std::vector<Coeff>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Coeff> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  }
  return out;
}

/// Adds c * q^shift * aux * poly into s; degrees above the order are dropped.
inline void add_poly(TruncatedSeries& s, const std::vector<Coeff>& poly, long long shift, AuxMonomial c) {
  if (shift < 0 && !poly.empty()) throw Error(ErrorCode::Domain, "negative q-shift of a nonzero polynomial");
  for (std::size_t d = 0; d < poly.size(); ++d) {
    const long long degree = shift + static_cast<long long>(d);
    if (degree > s.order()) break;
    if (poly[d] != 0) s.add_term(static_cast<int>(degree), c.aux, checked_mul(poly[d], c.coeff));
  }
}

inline TruncatedSeries to_series(const QBinomial& g, int order, int arity = 0) {
  TruncatedSeries s(order, arity);
  add_poly(s, g.poly, 0, {});
  return s;
}

}  // namespace seppart
