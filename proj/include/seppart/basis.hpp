#pragma once

// Bases of the separable classes P_{a,b,k} and M_{k,r}, and the unique
// basis-plus-multiples-of-k decomposition of a class member.
//
// Both bases are grown from the smallest part upward: every part has a short
// list of admissible successors determined by the part below it, and the
// successors of one part never share a residue class together with an
// overline flag. That is what makes the decomposition unique and lets it be
// reconstructed bottom-up from residues alone.

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "seppart/class_spec.hpp"
#include "seppart/enumerate.hpp"
#include "seppart/overpartition.hpp"

namespace seppart {

/// pi_i = basis_i + mu_i for every i, overline flags carried by the basis.
struct Decomposition {
  Overpartition basis;
  std::vector<int> mu;
};

inline Overpartition recompose(const Decomposition& d) {
  if (d.basis.length() != d.mu.size()) throw Error(ErrorCode::Domain, "basis and mu differ in length");
  Overpartition out = d.basis;
  for (std::size_t i = 0; i < d.mu.size(); ++i) out.parts[i].value += d.mu[i];
  return out;
}

namespace detail {

// (a,b,k): kh+a may be followed (upward) by kh+a or kh+b, kh+b by kh+b or
// k(h+1)+a.
inline std::vector<OverPart> abk_starts(const AbkClass& c) { return {{c.a, false}, {c.b, false}}; }

inline std::vector<OverPart> abk_successors(OverPart below, const AbkClass& c) {
  if (mod(below.value - c.a, c.k) == 0) return {below, {below.value - c.a + c.b, false}};
  return {below, {below.value - c.b + c.k + c.a, false}};
}

/// Index j of the window [overline(k(j-1)+r), kj+r] containing part e; the
/// window below r-bar is j = 0.
inline int kr_window(OverPart e, int k, int r) {
  if (e.overlined) return (e.value - r) / k + 1;
  if (e.value <= r) return 0;
  return (e.value - r + k - 1) / k;
}

inline std::vector<OverPart> kr_starts(int k, int r) {
  (void)k;
  std::vector<OverPart> out;
  for (int v = 1; v <= r; ++v) out.push_back({v, false});
  out.push_back({r, true});
  return out;
}

/// Parts x with below <= x <= overline(kj+r) in the overline-aware order,
/// ascending. An overlined part cannot repeat.
inline std::vector<OverPart> kr_successors(OverPart below, int k, int r) {
  const int top = k * kr_window(below, k, r) + r;
  std::vector<OverPart> out;
  for (int v = below.value; v <= top; ++v) {
    if (OverPart{v, false} >= below) out.push_back({v, false});
    if (mod(v - r, k) == 0 && OverPart{v, true} > below) out.push_back({v, true});
  }
  return out;
}

/// Grows all bases of length m bottom-up; each result is in display order.
/// Children are visited in ascending order.
template <class Starts, class Successors>
std::vector<Overpartition> grow_basis(int m, Starts starts, Successors successors, std::size_t capacity) {
  std::vector<Overpartition> out;
  std::vector<OverPart> stack;  // smallest part first
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(stack.size()) == m) {
      if (out.size() >= capacity) throw Error(ErrorCode::Capacity, "basis larger than " + std::to_string(capacity));
      out.emplace_back(std::vector<OverPart>(stack.rbegin(), stack.rend()));
      return;
    }
    for (const OverPart& next : successors(stack.back())) {
      stack.push_back(next);
      self(self);
      stack.pop_back();
    }
  };
  for (const OverPart& s : starts) {
    stack.assign(1, s);
    rec(rec);
  }
  return out;
}

}  // namespace detail

/// B_{a,b,k}(m): m parts, smallest part a or b, consecutive parts closer than k.
/// Exactly 2^m elements.
inline std::vector<Overpartition> gen_basis_abk(int m, const AbkClass& c, const Limits& limits = {}) {
  check_params(c);
  if (m < 1) throw Error(ErrorCode::Domain, "basis length must be at least 1");
  if (m > limits.abk_basis_max_length) {
    throw Error(ErrorCode::Capacity, "abk basis length above " + std::to_string(limits.abk_basis_max_length));
  }
  return detail::grow_basis(
      m, detail::abk_starts(c), [&](OverPart below) { return detail::abk_successors(below, c); },
      limits.member_capacity);
}

/// B_{k,r}(m), generated in the order smallest part first, then upward.
inline std::vector<Overpartition> gen_basis_kr(int m, int k, int r, const Limits& limits = {}) {
  check_params(MkrClass{k, r});
  if (m < 1) throw Error(ErrorCode::Domain, "basis length must be at least 1");
  return detail::grow_basis(
      m, detail::kr_starts(k, r), [&](OverPart below) { return detail::kr_successors(below, k, r); },
      limits.member_capacity);
}

/// Unique (basis, mu) with mu non-increasing multiples of k. Supports abk and
/// mkr classes.
inline Decomposition decompose(const Overpartition& p, const ClassSpec& c) {
  if (!std::holds_alternative<AbkClass>(c) && !std::holds_alternative<MkrClass>(c)) {
    throw Error(ErrorCode::Domain, "decomposition is defined for abk and mkr classes");
  }
  if (!validate(p, c)) throw Error(ErrorCode::NotAMember, to_text(p) + " is not in " + to_string(c));
  const int k = modulus(c);
  const std::size_t m = p.length();
  Decomposition d;
  if (m == 0) return d;

  std::vector<OverPart> lambda(m);
  std::vector<OverPart> candidates;
  for (std::size_t step = 0; step < m; ++step) {
    const std::size_t i = m - 1 - step;
    if (step == 0) {
      candidates = std::visit(
          [&](const auto& s) -> std::vector<OverPart> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AbkClass>) return detail::abk_starts(s);
            else return detail::kr_starts(s.k, std::get<MkrClass>(c).r);
          },
          c);
    } else {
      const OverPart below = lambda[i + 1];
      if (const auto* abk = std::get_if<AbkClass>(&c)) candidates = detail::abk_successors(below, *abk);
      else candidates = detail::kr_successors(below, k, std::get<MkrClass>(c).r);
    }
    const OverPart target = p.parts[i];
    int found = 0;
    for (const OverPart& cand : candidates) {
      if (cand.overlined == target.overlined && mod(cand.value - target.value, k) == 0) {
        lambda[i] = cand;
        ++found;
      }
    }
    if (found != 1) throw Error(ErrorCode::Internal, "no unique basis part for " + to_text(p));
  }

  d.basis = Overpartition(lambda);
  d.mu.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    d.mu[i] = p.parts[i].value - lambda[i].value;
    if (d.mu[i] < 0 || d.mu[i] % k != 0 || (i > 0 && d.mu[i] > d.mu[i - 1])) {
      throw Error(ErrorCode::Internal, "reconstructed mu is not admissible for " + to_text(p));
    }
  }
  return d;
}

}  // namespace seppart
