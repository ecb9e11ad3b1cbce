#pragma once

// Independent constructions of each generating function (infinite products,
// closed-form sums, basis assembly, brute-force enumeration) and the checks
// that compare them coefficient by coefficient.

#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seppart/basis.hpp"
#include "seppart/bijection.hpp"
#include "seppart/enumerate.hpp"
#include "seppart/gaussian.hpp"
#include "seppart/gfunctions.hpp"
#include "seppart/report.hpp"
#include "seppart/series.hpp"

namespace seppart {

// --- product forms -------------------------------------------------------

/// 1 / ((mu q^a; q^k)_inf (nu q^b; q^k)_inf), tracking mu and nu.
inline TruncatedSeries abk_product(const AbkClass& c, int order) {
  check_params(c);
  TruncatedSeries s = TruncatedSeries::one(order, 2);
  s = inv_poch_infinite(std::move(s), {1, {1, 0}}, c.a, c.k);
  return inv_poch_infinite(std::move(s), {1, {0, 1}}, c.b, c.k);
}

/// (-x z q^r; q^k)_inf / (z q; q)_inf.
inline TruncatedSeries okr_product(int k, int r, int order) {
  check_params(OkrClass{k, r});
  return inv_poch_infinite(poch_infinite({-1, {1, 1}}, r, k, order, 2), {1, {0, 1}}, 1, 1);
}

/// (-x z^k q^k; q^k)_inf / (z q; q)_inf.
inline TruncatedSeries kpart_product(int k, int order) {
  check_params(KpartClass{k});
  return inv_poch_infinite(poch_infinite({-1, {1, static_cast<std::uint32_t>(k)}}, k, k, order, 2), {1, {0, 1}}, 1, 1);
}

// --- closed-form sums ----------------------------------------------------

/// sum over m, h, i of mu^{m-h-i} nu^{h+i} q^{ma+kh^2+(b-a)(h+i)}
/// [h+i h]_k [m-h-i h]_k / (q^k;q^k)_m.
inline TruncatedSeries abk_triple_sum(const AbkClass& c, int order) {
  check_params(c);
  const long long a = c.a, b = c.b, k = c.k;
  std::vector<TruncatedSeries> by_m;
  for (long long m = 0; m * a <= order; ++m) {
    TruncatedSeries term(order, 2);
    for (long long h = 0; 2 * h <= m; ++h) {
      for (long long i = 0; m - h - i >= h; ++i) {
        const long long shift = m * a + k * h * h + (b - a) * (h + i);
        if (shift > order) break;
        const QBinomial g1 = gaussian(static_cast<int>(h + i), static_cast<int>(h), c.k);
        const QBinomial g2 = gaussian(static_cast<int>(m - h - i), static_cast<int>(h), c.k);
        add_poly(term, poly_mul(g1.poly, g2.poly), shift,
                 {1, {static_cast<std::uint32_t>(m - h - i), static_cast<std::uint32_t>(h + i)}});
      }
    }
    by_m.push_back(std::move(term));
  }
  return sum_over_q_poch(by_m, c.k);
}

/// sum over n, j of x^j z^{n+j} q^{n+k C(j,2)+rj} [n+kj+r-1 kj+r-1]_1
/// / (q^k;q^k)_{n+j}.
inline TruncatedSeries mkr_double_sum(int k, int r, int order) {
  check_params(MkrClass{k, r});
  std::vector<TruncatedSeries> by_length(static_cast<std::size_t>(order) + 1, TruncatedSeries(order, 2));
  for (long long j = 0; k * (j * (j - 1) / 2) + r * j <= order; ++j) {
    for (long long n = 0; n + j <= order; ++n) {
      const long long shift = n + k * (j * (j - 1) / 2) + r * j;
      if (shift > order) break;
      const QBinomial g = gaussian(static_cast<int>(n + k * j + r - 1), static_cast<int>(k * j + r - 1), 1);
      add_poly(by_length[n + j], g.poly, shift,
               {1, {static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(n + j)}});
    }
  }
  return sum_over_q_poch(by_length, k);
}

/// Substitutes x -> x z^{-(k-1)}: a k-partition with lo overlined parts and
/// m parts moves to the (lo, m - (k-1) lo) slot.
inline TruncatedSeries shift_kpart_stats(const TruncatedSeries& s, int k) {
  TruncatedSeries out(s.order(), s.arity());
  for (const auto& [key, value] : s.terms()) {
    const long long parts = static_cast<long long>(key.aux.e1) - static_cast<long long>(k - 1) * key.aux.e0;
    if (parts < 0) throw Error(ErrorCode::Domain, "term has fewer parts than (k-1) times its overlines");
    out.add_term(key.degree, {key.aux.e0, static_cast<std::uint32_t>(parts)}, value);
  }
  return out;
}

// --- direct basis sums -----------------------------------------------------

/// mu^{#a} nu^{#b} q^{|lambda|} summed over basis elements, grouped by largest part.
inline std::map<AbkLargest, TruncatedSeries> abk_basis_sums_by_largest(int m, const AbkClass& c, int order,
                                                                        const Limits& limits = {}) {
  std::map<AbkLargest, TruncatedSeries> out;
  for (const Overpartition& lambda : gen_basis_abk(m, c, limits)) {
    auto [it, _] = out.try_emplace(abk_largest_of(lambda.parts.front().value, c), order, 2);
    if (lambda.weight() <= order) it->second.add_term(static_cast<int>(lambda.weight()), stat_key(lambda, c), 1);
  }
  return out;
}

/// x^{#overlined} q^{|lambda|} summed over B_{k,r}(m) (arity 1), grouped by largest part.
inline std::map<KrLargest, TruncatedSeries> kr_basis_sums_by_largest(int m, int k, int r, int order,
                                                                      const Limits& limits = {}) {
  std::map<KrLargest, TruncatedSeries> out;
  for (const Overpartition& lambda : gen_basis_kr(m, k, r, limits)) {
    auto [it, _] = out.try_emplace(kr_largest_of(lambda.parts.front(), k, r), order, 1);
    if (lambda.weight() <= order) {
      it->second.add_term(static_cast<int>(lambda.weight()), {static_cast<std::uint32_t>(lambda.overlined_count()), 0}, 1);
    }
  }
  return out;
}

inline TruncatedSeries sum_all(const std::map<KrLargest, TruncatedSeries>& parts, int order, int arity) {
  TruncatedSeries out(order, arity);
  for (const auto& [_, s] : parts) out += s;
  return out;
}

// --- verification ----------------------------------------------------------

namespace detail {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Compares `reference` against each of `others` in turn and keeps the first failure.
inline std::optional<Mismatch> compare_all(const TruncatedSeries& reference, std::string_view reference_name,
                                           const std::vector<std::pair<std::string, TruncatedSeries>>& others) {
  for (const auto& [name, s] : others) {
    if (auto m = first_difference(reference, s, std::string(reference_name) + " vs " + name)) return m;
  }
  return std::nullopt;
}

}  // namespace detail

inline VerificationReport verify_abk_11(const AbkClass& c, int order, const Limits& limits = {}) {
  detail::Stopwatch clock;
  VerificationReport report{"ABK_11", {{"a", c.a}, {"b", c.b}, {"k", c.k}}, order, std::nullopt, 0};
  const TruncatedSeries product = abk_product(c, order);
  report.first_mismatch = detail::compare_all(product, "product",
                                              {{"triple sum", abk_triple_sum(c, order)},
                                               {"enumeration", class_gf_enumerated(c, order, limits)},
                                               {"basis assembly", gf_from_basis(c, order)}});
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

inline VerificationReport verify_okr_12(int k, int r, int order, const Limits& limits = {}) {
  detail::Stopwatch clock;
  VerificationReport report{"OKR_12", {{"k", k}, {"r", r}}, order, std::nullopt, 0};
  report.first_mismatch = detail::compare_all(okr_product(k, r, order), "product",
                                              {{"enumeration", class_gf_enumerated(OkrClass{k, r}, order, limits)}});
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

inline VerificationReport verify_mkr_14(int k, int r, int order, const Limits& limits = {}) {
  detail::Stopwatch clock;
  VerificationReport report{"MKR_14", {{"k", k}, {"r", r}}, order, std::nullopt, 0};
  report.first_mismatch = detail::compare_all(mkr_double_sum(k, r, order), "double sum",
                                              {{"enumeration", class_gf_enumerated(MkrClass{k, r}, order, limits)},
                                               {"basis assembly", gf_from_basis(MkrClass{k, r}, order)}});
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

inline VerificationReport verify_okk_31(int k, int order, const Limits& limits = {}) {
  detail::Stopwatch clock;
  VerificationReport report{"OKK_31", {{"k", k}}, order, std::nullopt, 0};
  report.first_mismatch = detail::compare_all(
      okr_product(k, k, order), "product",
      {{"enumeration", class_gf_enumerated(OkrClass{k, k}, order, limits)},
       {"shifted k-partition enumeration", shift_kpart_stats(class_gf_enumerated(KpartClass{k}, order, limits), k)}});
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

inline VerificationReport verify_kpart_32(int k, int order, const Limits& limits = {}) {
  detail::Stopwatch clock;
  VerificationReport report{"KPART_32", {{"k", k}}, order, std::nullopt, 0};
  report.first_mismatch = detail::compare_all(kpart_product(k, order), "product",
                                              {{"enumeration", class_gf_enumerated(KpartClass{k}, order, limits)}});
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

/// Recurrence for g_{a,b,k}(m+1, kh+b) on m in [m_lo, m_hi], h in [h_lo, h_hi].
inline VerificationReport verify_rec_abk(const AbkClass& c, int order, int m_lo, int m_hi, int h_lo, int h_hi) {
  detail::Stopwatch clock;
  VerificationReport report{"REC_ABK", {{"a", c.a}, {"b", c.b}, {"k", c.k}}, order, std::nullopt, 0};
  for (int m = m_lo; m <= m_hi && report.passed(); ++m) {
    for (int h = h_lo; h <= h_hi && report.passed(); ++h) {
      const auto [lhs, rhs] = recurrence_abk_sides(m, h, c, order);
      report.first_mismatch = first_difference(lhs, rhs, "m=" + std::to_string(m) + " h=" + std::to_string(h));
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

/// Recurrences for g_{k,r}(m+1, overline(kj+r)) on the given (m, j) box.
inline VerificationReport verify_rec_kr(int k, int r, int order, int m_lo, int m_hi, int j_lo, int j_hi) {
  detail::Stopwatch clock;
  VerificationReport report{"REC_KR", {{"k", k}, {"r", r}}, order, std::nullopt, 0};
  for (int m = m_lo; m <= m_hi && report.passed(); ++m) {
    for (int j = j_lo; j <= j_hi && report.passed(); ++j) {
      const auto [lhs, rhs] = recurrence_kr_sides(m, j, k, r, order);
      report.first_mismatch = first_difference(lhs, rhs, "m=" + std::to_string(m) + " j=" + std::to_string(j));
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

/// Closed form of the B_{k,r}(m) generating function against direct basis sums.
inline VerificationReport verify_gf_basis_47(int k, int r, int order, int m_lo, int m_hi, const Limits& limits = {}) {
  detail::Stopwatch clock;
  VerificationReport report{"GF_BASIS_47", {{"k", k}, {"r", r}}, order, std::nullopt, 0};
  for (int m = m_lo; m <= m_hi && report.passed(); ++m) {
    report.first_mismatch = first_difference(basis_gf_kr_closed(m, k, r, order),
                                             sum_all(kr_basis_sums_by_largest(m, k, r, order, limits), order, 1),
                                             "m=" + std::to_string(m) + " closed form vs basis");
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// --- dispatch by identity name ---------------------------------------------

inline constexpr std::array<std::string_view, 9> kIdentityIds = {
    "ABK_11", "OKR_12", "MKR_14", "OKK_31", "KPART_32", "THM1", "REC_ABK", "REC_KR", "GF_BASIS_47"};

struct IdentityRequest {
  std::string id;
  std::map<std::string, long long> params;
  int order = 30;
  int n_max = 20;
};

/// Runs one identity check. Optional parameters m/h/j narrow the recurrence
/// and basis checks to a single case; otherwise they sweep m <= 6 and
/// h, j <= 4.
inline VerificationReport run_identity(const IdentityRequest& req, const Limits& limits = {}) {
  auto get = [&](const char* name) -> int {
    const auto it = req.params.find(name);
    if (it == req.params.end()) throw Error(ErrorCode::Parse, req.id + " needs parameter " + name);
    return static_cast<int>(it->second);
  };
  auto range = [&](const char* name, int lo, int hi) -> std::pair<int, int> {
    const auto it = req.params.find(name);
    if (it == req.params.end()) return {lo, hi};
    return {static_cast<int>(it->second), static_cast<int>(it->second)};
  };
  if (req.order < 0) throw Error(ErrorCode::Domain, "order must be nonnegative");
  const std::string& id = req.id;
  if (id == "ABK_11") {
    const AbkClass c{get("a"), get("b"), get("k")};
    check_params(c);
    return verify_abk_11(c, req.order, limits);
  }
  if (id == "OKR_12") return verify_okr_12(get("k"), get("r"), req.order, limits);
  if (id == "MKR_14") return verify_mkr_14(get("k"), get("r"), req.order, limits);
  if (id == "OKK_31") return verify_okk_31(get("k"), req.order, limits);
  if (id == "KPART_32") return verify_kpart_32(get("k"), req.order, limits);
  if (id == "THM1") return verify_theorem1(get("k"), req.n_max, limits);
  if (id == "REC_ABK") {
    const AbkClass c{get("a"), get("b"), get("k")};
    check_params(c);
    const auto [m_lo, m_hi] = range("m", 1, 6);
    const auto [h_lo, h_hi] = range("h", 0, 4);
    if (m_lo < 1 || h_lo < 0) throw Error(ErrorCode::Domain, "recurrence needs m >= 1 and h >= 0");
    return verify_rec_abk(c, req.order, m_lo, m_hi, h_lo, h_hi);
  }
  if (id == "REC_KR") {
    const int k = get("k"), r = get("r");
    check_params(MkrClass{k, r});
    const auto [m_lo, m_hi] = range("m", 1, 6);
    const auto [j_lo, j_hi] = range("j", 0, 4);
    if (m_lo < 1 || j_lo < 0) throw Error(ErrorCode::Domain, "recurrence needs m >= 1 and j >= 0");
    return verify_rec_kr(k, r, req.order, m_lo, m_hi, j_lo, j_hi);
  }
  if (id == "GF_BASIS_47") {
    const int k = get("k"), r = get("r");
    check_params(MkrClass{k, r});
    const auto [m_lo, m_hi] = range("m", 1, 6);
    if (m_lo < 1) throw Error(ErrorCode::Domain, "basis length must be at least 1");
    return verify_gf_basis_47(k, r, req.order, m_lo, m_hi, limits);
  }
  throw Error(ErrorCode::Parse, "unknown identity '" + id + "'");
}

}  // namespace seppart
