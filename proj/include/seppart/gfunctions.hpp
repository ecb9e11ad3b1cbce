#pragma once

// Closed-form generating functions of the bases B_{a,b,k}(m) and B_{k,r}(m),
// split by largest part, the recurrences linking them, and the class
// generating functions assembled from them.
//
// Sums written over all h, i, j >= 0 are cut off where the Gaussian factors
// vanish. Recurrences are compared in product form, so no negative q-power is
// ever built.

#include <optional>
#include <utility>
#include <vector>

#include "seppart/class_spec.hpp"
#include "seppart/gaussian.hpp"
#include "seppart/overpartition.hpp"
#include "seppart/series.hpp"

namespace seppart {

enum class Residue { A, B };

/// Largest part kh+a or kh+b of an (a,b,k) basis element.
struct AbkLargest {
  int h = 0;
  Residue residue = Residue::A;

  int value(const AbkClass& c) const { return c.k * h + (residue == Residue::A ? c.a : c.b); }
  friend auto operator<=>(const AbkLargest&, const AbkLargest&) = default;
};

inline AbkLargest abk_largest_of(int value, const AbkClass& c) {
  if (mod(value - c.a, c.k) == 0) return {(value - c.a) / c.k, Residue::A};
  if (mod(value - c.b, c.k) == 0) return {(value - c.b) / c.k, Residue::B};
  throw Error(ErrorCode::Domain, "part is neither a nor b modulo k");
}

/// Largest part of a (k,r) basis element: k(j-1)+s, or overline(k(j-1)+r).
/// For overlined parts s is always r.
struct KrLargest {
  int j = 1;
  int s = 1;
  bool overlined = false;

  friend auto operator<=>(const KrLargest&, const KrLargest&) = default;
};

inline KrLargest kr_largest_of(OverPart part, int k, int r) {
  if (part.overlined) {
    if (mod(part.value - r, k) != 0) throw Error(ErrorCode::Domain, "overlined part not congruent to r");
    return {(part.value - r) / k + 1, r, true};
  }
  const int s = phi(part.value, k, r);
  return {(part.value - s) / k + 1, s, false};
}

namespace detail {

inline constexpr AuxMonomial aux_mu_nu(long long mu, long long nu) {
  return {1, {static_cast<std::uint32_t>(mu), static_cast<std::uint32_t>(nu)}};
}

inline long long choose2(long long j) { return j * (j - 1) / 2; }

/// Adds c * q^shift * [t1 b1]_k1 * [t2 b2]_k2 to s when both factors are nonzero.
inline void add_gaussian_term(TruncatedSeries& s, AuxMonomial c, long long shift, const QBinomial& g1,
                              const QBinomial& g2) {
  if (g1.is_zero() || g2.is_zero() || shift > s.order()) return;
  add_poly(s, poly_mul(g1.poly, g2.poly), shift, c);
}

}  // namespace detail

/// Sum of mu^{#a-parts} nu^{#b-parts} q^{|lambda|} over B_{a,b,k}(m) with the
/// given largest part.
inline TruncatedSeries g_abk_closed(int m, AbkLargest largest, const AbkClass& c, int order) {
  check_params(c);
  if (m < 1 || largest.h < 0) throw Error(ErrorCode::Domain, "g_abk needs m >= 1 and h >= 0");
  TruncatedSeries out(order, 2);
  const long long a = c.a, b = c.b, k = c.k, h = largest.h;
  if (largest.residue == Residue::A && h == 0) {
    out.add_term(m * c.a, {static_cast<std::uint32_t>(m), 0}, 1);
    return out;
  }
  if (largest.residue == Residue::A) {
    for (long long i = 0; m - h - i >= h; ++i) {
      detail::add_gaussian_term(out, detail::aux_mu_nu(m - h - i, h + i), m * a + k * h * h + (b - a) * (h + i),
                                gaussian(static_cast<int>(h + i - 1), static_cast<int>(h - 1), c.k),
                                gaussian(static_cast<int>(m - h - i), static_cast<int>(h), c.k));
    }
  } else {
    for (long long i = 0; m - h - i - 1 >= h; ++i) {
      detail::add_gaussian_term(out, detail::aux_mu_nu(m - h - i - 1, h + i + 1),
                                m * a + k * h * h + k * h + (b - a) * (h + i + 1),
                                gaussian(static_cast<int>(h + i), static_cast<int>(h), c.k),
                                gaussian(static_cast<int>(m - h - i - 1), static_cast<int>(h), c.k));
    }
  }
  return out;
}

/// g_{a,b,k}(m): the same sum over all of B_{a,b,k}(m).
inline TruncatedSeries g_abk_total_closed(int m, const AbkClass& c, int order) {
  check_params(c);
  if (m < 1) throw Error(ErrorCode::Domain, "g_abk needs m >= 1");
  TruncatedSeries out(order, 2);
  const long long a = c.a, b = c.b, k = c.k;
  for (long long h = 0; 2 * h <= m; ++h) {
    for (long long i = 0; m - h - i >= h; ++i) {
      detail::add_gaussian_term(out, detail::aux_mu_nu(m - h - i, h + i), m * a + k * h * h + (b - a) * (h + i),
                                gaussian(static_cast<int>(h + i), static_cast<int>(h), c.k),
                                gaussian(static_cast<int>(m - h - i), static_cast<int>(h), c.k));
    }
  }
  return out;
}

/// Both sides of g(m+1, kh+b) = nu q^{kh+b} (g(m, kh+a) + g(m, kh+b)).
inline std::pair<TruncatedSeries, TruncatedSeries> recurrence_abk_sides(int m, int h, const AbkClass& c, int order) {
  TruncatedSeries lhs = g_abk_closed(m + 1, {h, Residue::B}, c, order);
  TruncatedSeries inner = g_abk_closed(m, {h, Residue::A}, c, order) + g_abk_closed(m, {h, Residue::B}, c, order);
  const long long shift = static_cast<long long>(c.k) * h + c.b;
  TruncatedSeries rhs = shift > order ? TruncatedSeries(order, 2)
                                      : inner.times_monomial(detail::aux_mu_nu(0, 1), static_cast<int>(shift));
  return {std::move(lhs), std::move(rhs)};
}

inline bool check_recurrence_abk(int m, int h, const AbkClass& c, int order) {
  const auto [lhs, rhs] = recurrence_abk_sides(m, h, c, order);
  return lhs == rhs;
}

/// Sum of q^{|lambda|} over B_{k,r}(m) with the given largest part. The
/// result has arity 1 with the x slot unused, so it composes with
/// basis_gf_kr_closed.
inline TruncatedSeries g_kr_closed(int m, KrLargest largest, int k, int r, int order) {
  check_params(MkrClass{k, r});
  if (m < 1) throw Error(ErrorCode::Domain, "g_kr needs m >= 1");
  const long long j = largest.j;
  const long long s = largest.overlined ? r : largest.s;
  const bool in_range = largest.overlined ? j >= 1
                                          : ((j == 1 && 1 <= s && s <= r) || (j >= 2 && -k + r + 1 <= s && s <= r));
  if (!in_range) throw Error(ErrorCode::Domain, "largest part (j, s) outside its admissible range");
  TruncatedSeries out(order, 1);
  const QBinomial g = gaussian(static_cast<int>(m - j + k * (j - 1) + s - 1), static_cast<int>(k * (j - 1) + s - 1), 1);
  if (g.is_zero()) return out;
  add_poly(out, g.poly, m - j + k * detail::choose2(j) + r * (j - 1) + s, {});
  return out;
}

/// Both sides of the recurrences for g_{k,r}(m+1, overline(kj+r)).
inline std::pair<TruncatedSeries, TruncatedSeries> recurrence_kr_sides(int m, int j, int k, int r, int order) {
  if (j < 0) throw Error(ErrorCode::Domain, "recurrence needs j >= 0");
  TruncatedSeries lhs = g_kr_closed(m + 1, {j + 1, r, true}, k, r, order);
  TruncatedSeries inner(order, 1);
  if (j == 0) {
    for (int s = 1; s <= r; ++s) inner += g_kr_closed(m, {1, s, false}, k, r, order);
  } else {
    inner += g_kr_closed(m, {j, r, true}, k, r, order);
    for (int s = -k + r + 1; s <= r; ++s) inner += g_kr_closed(m, {j + 1, s, false}, k, r, order);
  }
  const long long shift = static_cast<long long>(k) * j + r;
  TruncatedSeries rhs = shift > order ? TruncatedSeries(order, 1) : inner.times_monomial({}, static_cast<int>(shift));
  return {std::move(lhs), std::move(rhs)};
}

inline bool check_recurrence_kr(int m, int j, int k, int r, int order) {
  const auto [lhs, rhs] = recurrence_kr_sides(m, j, k, r, order);
  return lhs == rhs;
}

/// Sum of x^{#overlined} q^{|lambda|} over B_{k,r}(m) (arity 1, x in slot 0).
inline TruncatedSeries basis_gf_kr_closed(int m, int k, int r, int order) {
  check_params(MkrClass{k, r});
  if (m < 1) throw Error(ErrorCode::Domain, "basis length must be at least 1");
  TruncatedSeries out(order, 1);
  for (long long j = 0; j <= m; ++j) {
    const QBinomial g = gaussian(static_cast<int>(m - j + k * j + r - 1), static_cast<int>(k * j + r - 1), 1);
    const long long shift = m - j + k * detail::choose2(j) + r * j;
    if (g.is_zero() || shift > order) continue;
    add_poly(out, g.poly, shift, {1, {static_cast<std::uint32_t>(j), 0}});
  }
  return out;
}

/// sum_{m=0}^{M} terms[m] / (q^k; q^k)_m, evaluated Horner-style so that
/// each geometric factor is divided out once.
inline TruncatedSeries sum_over_q_poch(const std::vector<TruncatedSeries>& terms, int k) {
  if (terms.empty()) throw Error(ErrorCode::Domain, "empty term list");
  TruncatedSeries acc = terms.back();
  for (std::size_t m = terms.size() - 1; m >= 1; --m) {
    const long long shift = static_cast<long long>(k) * static_cast<long long>(m);
    if (shift <= acc.order()) acc = inv_factor(acc, {}, static_cast<int>(shift));
    acc = terms[m - 1] + acc;
  }
  return acc;
}

/// Class generating function 1 + sum_m basis_sum(m) / (q^k;q^k)_m, with basis
/// sums taken from the closed forms. Arity 2: (mu, nu) for abk, (x, z) for mkr.
/// A negative m_max means "as many as the order needs".
inline TruncatedSeries gf_from_basis(const ClassSpec& c, int order, int m_max = -1) {
  check_params(c);
  if (order < 0) throw Error(ErrorCode::Domain, "order must be nonnegative");
  const int k = modulus(c);
  std::vector<TruncatedSeries> terms;
  if (const auto* abk = std::get_if<AbkClass>(&c)) {
    const int needed = (order + abk->a - 1) / abk->a;
    if (m_max < 0) m_max = order;
    if (m_max < needed) throw Error(ErrorCode::Incomplete, "m_max too small for the requested order");
    terms.push_back(TruncatedSeries::one(order, 2));
    for (int m = 1; m <= m_max; ++m) terms.push_back(g_abk_total_closed(m, *abk, order));
  } else if (const auto* mkr = std::get_if<MkrClass>(&c)) {
    if (m_max < 0) m_max = order;
    if (m_max < order) throw Error(ErrorCode::Incomplete, "m_max too small for the requested order");
    terms.push_back(TruncatedSeries::one(order, 2));
    for (int m = 1; m <= m_max; ++m) {
      TruncatedSeries term(order, 2);
      const TruncatedSeries basis_sum = basis_gf_kr_closed(m, mkr->k, mkr->r, order);
      for (const auto& [key, value] : basis_sum.terms()) {
        term.add_term(key.degree, {key.aux.e0, static_cast<std::uint32_t>(m)}, value);
      }
      terms.push_back(std::move(term));
    }
  } else {
    throw Error(ErrorCode::Domain, "basis generating functions exist for abk and mkr classes");
  }
  return sum_over_q_poch(terms, k);
}

}  // namespace seppart
