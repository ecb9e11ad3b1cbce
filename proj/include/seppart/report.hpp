#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seppart/coefficient.hpp"
#include "seppart/series.hpp"

namespace seppart {

struct Mismatch {
  int degree = 0;
  AuxExponents aux{};
  Coeff lhs = 0;
  Coeff rhs = 0;
  std::string where;  // which pair of representations disagreed
};

/// Outcome of one identity check. Passing iff first_mismatch is empty.
struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, long long>> params;
  int order = 0;
  std::optional<Mismatch> first_mismatch;
  double elapsed_ms = 0.0;

  bool passed() const { return !first_mismatch.has_value(); }
};

/// Smallest key (degree, then aux exponents) at which the two series differ.
inline std::optional<Mismatch> first_difference(const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                                                std::string where = {}) {
  lhs.require_same_shape(rhs);
  auto a = lhs.terms().begin();
  auto b = rhs.terms().begin();
  const auto a_end = lhs.terms().end();
  const auto b_end = rhs.terms().end();
  while (a != a_end || b != b_end) {
    if (b == b_end || (a != a_end && a->first < b->first)) {
      return Mismatch{a->first.degree, a->first.aux, a->second, 0, where};
    }
    if (a == a_end || b->first < a->first) {
      return Mismatch{b->first.degree, b->first.aux, 0, b->second, where};
    }
    if (a->second != b->second) return Mismatch{a->first.degree, a->first.aux, a->second, b->second, where};
    ++a;
    ++b;
  }
  return std::nullopt;
}

}  // namespace seppart
