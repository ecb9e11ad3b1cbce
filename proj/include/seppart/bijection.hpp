#pragma once

// Weight-preserving bijection between (k,k)-overpartitions and k-partitions.
// Forward: each overlined part k*zeta becomes k-1 plain copies of zeta plus
// one overlined zeta. Backward undoes that for every overlined value.

#include <chrono>
#include <map>
#include <set>
#include <vector>

#include "seppart/class_spec.hpp"
#include "seppart/enumerate.hpp"
#include "seppart/overpartition.hpp"
#include "seppart/report.hpp"

namespace seppart {

struct BijectionRecord {
  Overpartition source;  // (k,k)-overpartition
  Overpartition target;  // k-partition
  std::vector<int> zeta;  // strictly decreasing
};

namespace detail {

/// value -> (number of plain copies, overlined copy present)
using PartMultiset = std::map<int, std::pair<int, bool>, std::greater<>>;

inline PartMultiset to_multiset(const Overpartition& p) {
  PartMultiset out;
  for (const auto& x : p.parts) {
    auto& slot = out[x.value];
    if (x.overlined) slot.second = true;
    else ++slot.first;
  }
  return out;
}

/// Display order with the overline of value v placed at position `slot`
/// among the copies of v (0 = first).
inline Overpartition from_multiset(const PartMultiset& ms, int overline_slot) {
  Overpartition out;
  for (const auto& [value, entry] : ms) {
    const auto [plain, over] = entry;
    const int total = plain + (over ? 1 : 0);
    for (int i = 0; i < total; ++i) out.parts.push_back({value, over && i == overline_slot});
  }
  return out;
}

}  // namespace detail

inline BijectionRecord okk_to_kpartition_record(const Overpartition& p, int k) {
  if (!validate(p, OkrClass{k, k})) {
    throw Error(ErrorCode::NotAMember, to_text(p) + " is not a (" + std::to_string(k) + "," + std::to_string(k) + ")-overpartition");
  }
  BijectionRecord rec{p, {}, {}};
  detail::PartMultiset ms;
  for (const auto& x : p.parts) {
    if (x.overlined) rec.zeta.push_back(x.value / k);
    else ++ms[x.value].first;
  }
  for (int z : rec.zeta) {
    auto& slot = ms[z];
    slot.first += k - 1;
    slot.second = true;
  }
  rec.target = detail::from_multiset(ms, k - 1);
  return rec;
}

inline Overpartition okk_to_kpartition(const Overpartition& p, int k) { return okk_to_kpartition_record(p, k).target; }

inline Overpartition kpartition_to_okk(const Overpartition& p, int k) {
  if (!validate(p, KpartClass{k})) {
    throw Error(ErrorCode::NotAMember, to_text(p) + " is not a " + std::to_string(k) + "-partition");
  }
  detail::PartMultiset ms = detail::to_multiset(p);
  std::vector<int> zeta;
  for (auto& [value, entry] : ms) {
    if (!entry.second) continue;
    zeta.push_back(value);
    entry.first -= k - 1;
    entry.second = false;
  }
  for (int z : zeta) ms[z * k].second = true;
  std::erase_if(ms, [](const auto& kv) { return kv.second.first == 0 && !kv.second.second; });
  return detail::from_multiset(ms, 0);
}

/// Checks O_{k,k}(lo, m, n) = P_k(lo, m + (k-1) lo, n) on the count tables
/// for every n <= n_max, then checks that the forward map is a
/// statistic-respecting bijection with the backward map as its inverse.
inline VerificationReport verify_theorem1(int k, int n_max, const Limits& limits = {}) {
  if (k < 1 || n_max < 0) throw Error(ErrorCode::Domain, "theorem check needs k >= 1 and n_max >= 0");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report{"THM1", {{"k", k}, {"n_max", n_max}}, n_max, std::nullopt, 0.0};
  const ClassSpec source_class = OkrClass{k, k};
  const ClassSpec target_class = KpartClass{k};
  const auto shift = [k](AuxExponents key) { return AuxExponents{key.e0, key.e1 + (k - 1) * key.e0}; };
  auto fail = [&](int n, AuxExponents aux, Coeff lhs, Coeff rhs, std::string where) {
    report.first_mismatch = Mismatch{n, aux, lhs, rhs, std::move(where)};
  };

  for (int n = 0; n <= n_max && report.passed(); ++n) {
    const StatTable o_table = count_by_stats(n, source_class, limits);
    const StatTable p_table = count_by_stats(n, target_class, limits);
    for (const auto& [key, count] : o_table) {
      const auto it = p_table.find(shift(key));
      const std::uint64_t other = it == p_table.end() ? 0 : it->second;
      if (other != count) {
        fail(n, key, static_cast<Coeff>(count), static_cast<Coeff>(other), "count table");
        break;
      }
    }
    if (!report.passed()) break;
    for (const auto& [key, count] : p_table) {
      const long long m = static_cast<long long>(key.e1) - static_cast<long long>(k - 1) * key.e0;
      const auto it = m < 0 ? o_table.end() : o_table.find({key.e0, static_cast<std::uint32_t>(m)});
      if (it == o_table.end()) {
        fail(n, key, 0, static_cast<Coeff>(count), "count table");
        break;
      }
    }
    if (!report.passed()) break;

    std::set<Overpartition> images;
    for_each_member(n, source_class, [&](const Overpartition& p) {
      if (!report.passed()) return;
      const Overpartition image = okk_to_kpartition(p, k);
      const AuxExponents key = stat_key(p, source_class);
      if (!validate(image, target_class) || image.weight() != p.weight() || stat_key(image, target_class) != shift(key)) {
        fail(n, key, 1, 0, "forward image " + to_text(image) + " of " + to_text(p));
      } else if (kpartition_to_okk(image, k) != p) {
        fail(n, key, 1, 0, "round trip of " + to_text(p));
      } else if (!images.insert(image).second) {
        fail(n, key, 1, 2, "two sources share the image " + to_text(image));
      }
    }, limits);
    if (!report.passed()) break;

    std::size_t targets = 0;
    for_each_member(n, target_class, [&](const Overpartition& p) {
      ++targets;
      if (!report.passed()) return;
      const Overpartition back = kpartition_to_okk(p, k);
      if (!images.contains(p) || okk_to_kpartition(back, k) != p) {
        fail(n, stat_key(p, target_class), 0, 1, "target " + to_text(p) + " not reached");
      }
    }, limits);
    if (report.passed() && targets != images.size()) {
      fail(n, {}, static_cast<Coeff>(images.size()), static_cast<Coeff>(targets), "image size");
    }
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace seppart
