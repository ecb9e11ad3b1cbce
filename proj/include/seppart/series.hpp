#pragma once

// Truncated formal power series in q with up to two auxiliary tracking
// variables. Coefficients are exact 128-bit integers; every stored term has
// q-degree at most the series order and a nonzero coefficient.

#include <compare>
#include <cstdint>
#include <map>
#include <utility>

#include "seppart/coefficient.hpp"
#include "seppart/error.hpp"

namespace seppart {

/// Exponents of the tracking variables. Slot 0 holds mu (or x), slot 1 holds
/// nu (or z).
struct AuxExponents {
  std::uint32_t e0 = 0;
  std::uint32_t e1 = 0;

  friend auto operator<=>(const AuxExponents&, const AuxExponents&) = default;

  AuxExponents operator+(const AuxExponents& o) const { return {e0 + o.e0, e1 + o.e1}; }
};

/// Signed coefficient times a product of tracking variables, e.g. -x*z.
struct AuxMonomial {
  Coeff coeff = 1;
  AuxExponents aux{};
};

struct SeriesKey {
  int degree = 0;
  AuxExponents aux{};

  friend auto operator<=>(const SeriesKey&, const SeriesKey&) = default;
};

class TruncatedSeries {
 public:
  using Terms = std::map<SeriesKey, Coeff>;

  TruncatedSeries(int order, int arity) : order_(order), arity_(arity) {
    if (order < 0) throw Error(ErrorCode::Domain, "series order must be nonnegative");
    if (arity < 0 || arity > 2) throw Error(ErrorCode::Domain, "series arity must be 0, 1 or 2");
  }

  static TruncatedSeries one(int order, int arity) {
    TruncatedSeries s(order, arity);
    s.add_term(0, {}, 1);
    return s;
  }

  static TruncatedSeries monomial(int order, int arity, Coeff c, int degree, AuxExponents aux = {}) {
    TruncatedSeries s(order, arity);
    s.add_term(degree, aux, c);
    return s;
  }

  int order() const { return order_; }
  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c*q^degree*aux. Terms above the order are dropped silently.
  void add_term(int degree, AuxExponents aux, Coeff c) {
    if (degree < 0) throw Error(ErrorCode::Domain, "negative q-degree");
    check_aux(aux);
    if (degree > order_ || c == 0) return;
    auto [it, inserted] = terms_.try_emplace(SeriesKey{degree, aux}, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Coeff coeff(int degree, AuxExponents aux = {}) const {
    if (degree < 0 || degree > order_) throw Error(ErrorCode::OutOfRange, "q-degree outside series order");
    auto it = terms_.find(SeriesKey{degree, aux});
    return it == terms_.end() ? Coeff{0} : it->second;
  }

  /// Multiplies by c*q^degree*aux, dropping what falls above the order.
  TruncatedSeries times_monomial(AuxMonomial m, int degree) const {
    if (degree < 0) throw Error(ErrorCode::Domain, "negative q-degree");
    check_aux(m.aux);
    TruncatedSeries out(order_, arity_);
    if (m.coeff == 0) return out;
    for (const auto& [key, value] : terms_) {
      if (key.degree + degree > order_) break;
      out.terms_.emplace_hint(out.terms_.end(), SeriesKey{key.degree + degree, key.aux + m.aux},
                              checked_mul(value, m.coeff));
    }
    return out;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& other) {
    require_same_shape(other);
    for (const auto& [key, value] : other.terms_) add_term(key.degree, key.aux, value);
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& other) {
    require_same_shape(other);
    for (const auto& [key, value] : other.terms_) add_term(key.degree, key.aux, checked_sub(0, value));
    return *this;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries out(order_, arity_);
    for (const auto& [key, value] : terms_) out.terms_.emplace_hint(out.terms_.end(), key, checked_sub(0, value));
    return out;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  /// Truncated convolution. q-degrees and aux exponents add.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_shape(b);
    TruncatedSeries out(a.order_, a.arity_);
    for (const auto& [ka, va] : a.terms_) {
      for (const auto& [kb, vb] : b.terms_) {
        if (ka.degree + kb.degree > a.order_) break;
        out.add_term(ka.degree + kb.degree, ka.aux + kb.aux, checked_mul(va, vb));
      }
    }
    return out;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  void require_same_shape(const TruncatedSeries& other) const {
    if (order_ != other.order_ || arity_ != other.arity_) {
      throw Error(ErrorCode::MismatchedShape, "series differ in order or arity");
    }
  }

 private:
  void check_aux(const AuxExponents& aux) const {
    if ((arity_ < 1 && aux.e0 != 0) || (arity_ < 2 && aux.e1 != 0)) {
      throw Error(ErrorCode::MismatchedShape, "aux exponent beyond series arity");
    }
  }

  int order_;
  int arity_;
  Terms terms_;

  friend TruncatedSeries inv_factor(const TruncatedSeries&, AuxMonomial, int);
  friend TruncatedSeries collapse_aux(const TruncatedSeries&);
};

/// s / (1 - c q^d), expanded as a geometric series.
inline TruncatedSeries inv_factor(const TruncatedSeries& s, AuxMonomial c, int d) {
  if (d < 1) throw Error(ErrorCode::IllegalShift, "geometric factor needs a positive q-shift");
  s.check_aux(c.aux);
  TruncatedSeries out = s;
  if (c.coeff == 0) return out;
  // out = s + c q^d out. Shifted keys sort after their source, so a single
  // ordered pass sees each term after all of its contributions arrived.
  auto& terms = out.terms_;
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    const int target = it->first.degree + d;
    if (target > out.order_) break;
    const Coeff add = checked_mul(it->second, c.coeff);
    if (add == 0) continue;
    auto [slot, inserted] = terms.try_emplace(SeriesKey{target, it->first.aux + c.aux}, add);
    if (!inserted) slot->second = checked_add(slot->second, add);
  }
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// (c q^d; q^k)_n = prod_{i<n} (1 - c q^{d+k i}).
inline TruncatedSeries poch_finite(AuxMonomial c, int d, int k, int n, int order, int arity) {
  if (d < 0 || k < 1 || n < 0) throw Error(ErrorCode::Domain, "pochhammer needs d >= 0, k >= 1, n >= 0");
  TruncatedSeries out = TruncatedSeries::one(order, arity);
  for (int i = 0; i < n; ++i) {
    const long long shift = d + static_cast<long long>(k) * i;
    if (shift > order) break;
    out -= out.times_monomial(c, static_cast<int>(shift));
  }
  return out;
}

/// Number of factors of (c q^d; q^k)_inf that can touch degrees up to order.
inline int poch_factor_count(int d, int k, int order) { return d > order ? 0 : (order - d) / k + 1; }

/// (c q^d; q^k)_inf truncated at order.
inline TruncatedSeries poch_infinite(AuxMonomial c, int d, int k, int order, int arity) {
  if (c.coeff == 0) return TruncatedSeries::one(order, arity);
  if (d < 1) throw Error(ErrorCode::IllegalShift, "infinite pochhammer needs a positive q-shift");
  if (k < 1) throw Error(ErrorCode::Domain, "pochhammer step must be positive");
  return poch_finite(c, d, k, poch_factor_count(d, k, order), order, arity);
}

/// s / (c q^d; q^k)_n.
inline TruncatedSeries inv_poch_finite(TruncatedSeries s, AuxMonomial c, int d, int k, int n) {
  if (k < 1 || n < 0) throw Error(ErrorCode::Domain, "pochhammer needs k >= 1, n >= 0");
  for (int i = 0; i < n; ++i) {
    const long long shift = d + static_cast<long long>(k) * i;
    if (shift > s.order()) break;
    s = inv_factor(s, c, static_cast<int>(shift));
  }
  return s;
}

/// s / (c q^d; q^k)_inf.
inline TruncatedSeries inv_poch_infinite(TruncatedSeries s, AuxMonomial c, int d, int k) {
  if (c.coeff == 0) return s;
  if (d < 1) throw Error(ErrorCode::IllegalShift, "infinite pochhammer needs a positive q-shift");
  if (k < 1) throw Error(ErrorCode::Domain, "pochhammer step must be positive");
  const int factors = poch_factor_count(d, k, s.order());
  return inv_poch_finite(std::move(s), c, d, k, factors);
}

/// Sets every tracking variable to 1.
inline TruncatedSeries collapse_aux(const TruncatedSeries& s) {
  TruncatedSeries out(s.order(), 0);
  for (const auto& [key, value] : s.terms()) out.add_term(key.degree, {}, value);
  return out;
}

/// Re-embeds a series into a larger arity (or the same one) without touching terms.
inline TruncatedSeries widen(const TruncatedSeries& s, int arity) {
  if (arity < s.arity()) throw Error(ErrorCode::MismatchedShape, "cannot narrow a series");
  TruncatedSeries out(s.order(), arity);
  for (const auto& [key, value] : s.terms()) out.add_term(key.degree, key.aux, value);
  return out;
}

}  // namespace seppart
