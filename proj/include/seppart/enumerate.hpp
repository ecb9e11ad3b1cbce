#pragma once

// Exhaustive generation and membership tests for the four partition classes.
// These are the brute-force side of every identity check.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "seppart/class_spec.hpp"
#include "seppart/overpartition.hpp"
#include "seppart/series.hpp"

namespace seppart {

struct Limits {
  /// Maximum number of members generated by one enumeration call.
  std::size_t member_capacity = 10'000'000;
  /// Maximum length m accepted by the (a,b,k) basis generator (2^m elements).
  int abk_basis_max_length = 20;

  /// Defaults, with the member capacity taken from SEP_PARTITIONS_CAPACITY when set.
  static Limits from_env() {
    Limits limits;
    if (const char* env = std::getenv("SEP_PARTITIONS_CAPACITY"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end == nullptr || *end != '\0') throw Error(ErrorCode::Parse, "SEP_PARTITIONS_CAPACITY is not a number");
      limits.member_capacity = static_cast<std::size_t>(v);
    }
    return limits;
  }
};

namespace detail {

inline bool has_residue_ab(int v, const AbkClass& c) {
  const int res = mod(v, c.k);
  return res == mod(c.a, c.k) || res == mod(c.b, c.k);
}

/// Shared structural check: non-increasing values, and among equal values
/// only the position allowed by the flavor may carry the single overline.
inline bool canonical_order(const Overpartition& p, int overline_slot) {
  std::size_t i = 0;
  while (i < p.parts.size()) {
    if (p.parts[i].value < 1) return false;
    std::size_t j = i;
    while (j < p.parts.size() && p.parts[j].value == p.parts[i].value) ++j;
    for (std::size_t t = i; t < j; ++t) {
      if (p.parts[t].overlined && t - i != static_cast<std::size_t>(overline_slot)) return false;
    }
    if (j < p.parts.size() && p.parts[j].value > p.parts[i].value) return false;
    i = j;
  }
  return true;
}

inline bool mkr_transitions(const Overpartition& p, int k, int r) {
  if (p.empty()) return true;
  if (phi(p.parts.back().value, k, r) < 1) return false;
  for (std::size_t i = 0; i + 1 < p.parts.size(); ++i) {
    if (phi(p.parts[i].value, k, r) < phi(p.parts[i + 1].value, k, r) && !p.parts[i + 1].overlined) return false;
  }
  return true;
}

}  // namespace detail

/// True iff p, read in display order, is a member of the class.
inline bool validate(const Overpartition& p, const ClassSpec& c) {
  check_params(c);
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AbkClass>) {
          if (!detail::canonical_order(p, 0)) return false;
          return std::all_of(p.parts.begin(), p.parts.end(),
                             [&](const OverPart& x) { return !x.overlined && detail::has_residue_ab(x.value, s); });
        } else if constexpr (std::is_same_v<T, KpartClass>) {
          return detail::canonical_order(p, s.k - 1);
        } else {
          if (!detail::canonical_order(p, 0)) return false;
          for (const auto& x : p.parts) {
            if (x.overlined && mod(x.value - s.r, s.k) != 0) return false;
          }
          if constexpr (std::is_same_v<T, MkrClass>) return detail::mkr_transitions(p, s.k, s.r);
          return true;
        }
      },
      c);
}

/// Statistic key of a member: (parts = a, parts = b mod k) for abk classes,
/// (overlined parts, parts) for the rest.
inline AuxExponents stat_key(const Overpartition& p, const ClassSpec& c) {
  if (const auto* abk = std::get_if<AbkClass>(&c)) {
    AuxExponents key;
    for (const auto& x : p.parts) (mod(x.value, abk->k) == mod(abk->a, abk->k) ? key.e0 : key.e1)++;
    return key;
  }
  return {static_cast<std::uint32_t>(p.overlined_count()), static_cast<std::uint32_t>(p.length())};
}

namespace detail {

/// Depth-first generation by blocks of equal values, largest value first.
template <class Visit>
class MemberWalker {
 public:
  MemberWalker(const ClassSpec& spec, Visit& visit, std::size_t capacity)
      : spec_(spec), visit_(visit), capacity_(capacity) {}

  void run(int n) { walk(n, n); }

 private:
  void walk(int remaining, int max_value) {
    if (remaining == 0) {
      if (accept_end()) emit();
      return;
    }
    for (int v = std::min(remaining, max_value); v >= 1; --v) {
      if (!value_allowed(v)) continue;
      for (int count = 1; count * v <= remaining; ++count) {
        for (int over = 0; over < 2; ++over) {
          if (over && !overline_allowed(v, count)) continue;
          if (!transition_ok(v, over != 0)) continue;
          push_block(v, count, over != 0);
          walk(remaining - count * v, v - 1);
          parts_.resize(parts_.size() - count);
        }
      }
    }
  }

  bool value_allowed(int v) const {
    if (const auto* abk = std::get_if<AbkClass>(&spec_)) return has_residue_ab(v, *abk);
    return true;
  }

  bool overline_allowed(int v, int count) const {
    return std::visit(
        [&](const auto& s) -> bool {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, AbkClass>) return false;
          else if constexpr (std::is_same_v<T, KpartClass>) return count >= s.k;
          else return mod(v - s.r, s.k) == 0;
        },
        spec_);
  }

  bool transition_ok(int v, bool first_overlined) const {
    const auto* mkr = std::get_if<MkrClass>(&spec_);
    if (mkr == nullptr || parts_.empty()) return true;
    return first_overlined || phi(parts_.back().value, mkr->k, mkr->r) >= phi(v, mkr->k, mkr->r);
  }

  bool accept_end() const {
    const auto* mkr = std::get_if<MkrClass>(&spec_);
    return mkr == nullptr || parts_.empty() || phi(parts_.back().value, mkr->k, mkr->r) >= 1;
  }

  void push_block(int v, int count, bool overlined) {
    const int slot = overlined ? (std::holds_alternative<KpartClass>(spec_) ? std::get<KpartClass>(spec_).k - 1 : 0) : -1;
    for (int i = 0; i < count; ++i) parts_.push_back({v, i == slot});
  }

  void emit() {
    if (++emitted_ > capacity_) {
      throw Error(ErrorCode::Capacity, "more than " + std::to_string(capacity_) + " members");
    }
    current_.parts = parts_;
    visit_(static_cast<const Overpartition&>(current_));
  }

  const ClassSpec& spec_;
  Visit& visit_;
  std::size_t capacity_;
  std::size_t emitted_ = 0;
  std::vector<OverPart> parts_;
  Overpartition current_;
};

}  // namespace detail

/// Calls visit(const Overpartition&) once per class member of weight n.
template <class Visit>
void for_each_member(int n, const ClassSpec& c, Visit&& visit, const Limits& limits = {}) {
  check_params(c);
  if (n < 0) throw Error(ErrorCode::Domain, "weight must be nonnegative");
  detail::MemberWalker<std::remove_reference_t<Visit>> walker(c, visit, limits.member_capacity);
  walker.run(n);
}

/// All members of weight n, lexicographically descending in display order.
inline std::vector<Overpartition> enumerate(int n, const ClassSpec& c, const Limits& limits = {}) {
  std::vector<Overpartition> out;
  for_each_member(n, c, [&](const Overpartition& p) { out.push_back(p); }, limits);
  std::sort(out.begin(), out.end(), [](const Overpartition& x, const Overpartition& y) { return y < x; });
  return out;
}

using StatTable = std::map<AuxExponents, std::uint64_t>;

inline StatTable count_by_stats(int n, const ClassSpec& c, const Limits& limits = {}) {
  StatTable table;
  for_each_member(n, c, [&](const Overpartition& p) { ++table[stat_key(p, c)]; }, limits);
  return table;
}

/// Sum over members of weight <= order of aux^stat * q^weight (arity 2).
inline TruncatedSeries class_gf_enumerated(const ClassSpec& c, int order, const Limits& limits = {}) {
  TruncatedSeries out(order, 2);
  for (int n = 0; n <= order; ++n) {
    for (const auto& [key, count] : count_by_stats(n, c, limits)) out.add_term(n, key, static_cast<Coeff>(count));
  }
  return out;
}

}  // namespace seppart
