#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "seppart/error.hpp"

namespace seppart {

/// Parts congruent to a or b modulo k, 1 <= a < b <= k.
struct AbkClass {
  int a, b, k;
  friend bool operator==(const AbkClass&, const AbkClass&) = default;
};

/// Overpartitions where only parts congruent to r modulo k may be overlined.
struct OkrClass {
  int k, r;
  friend bool operator==(const OkrClass&, const OkrClass&) = default;
};

/// Partitions where the k-th occurrence of a part may be overlined.
struct KpartClass {
  int k;
  friend bool operator==(const KpartClass&, const KpartClass&) = default;
};

/// (k,r)-overpartitions whose smallest part is 1..r mod k and where a rise of
/// the residue representative between consecutive parts forces an overline.
struct MkrClass {
  int k, r;
  friend bool operator==(const MkrClass&, const MkrClass&) = default;
};

using ClassSpec = std::variant<AbkClass, OkrClass, KpartClass, MkrClass>;

inline void check_params(const ClassSpec& c) {
  auto fail = [](const char* what) { throw Error(ErrorCode::Domain, what); };
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AbkClass>) {
          if (!(1 <= s.a && s.a < s.b && s.b <= s.k)) fail("abk needs 1 <= a < b <= k");
        } else if constexpr (std::is_same_v<T, KpartClass>) {
          if (s.k < 1) fail("kpart needs k >= 1");
        } else {
          if (!(1 <= s.r && s.r <= s.k)) fail("class needs 1 <= r <= k");
        }
      },
      c);
}

/// Statistics tracked by the generating functions: (parts = a mod k, parts = b
/// mod k) for abk classes, (overlined parts, parts) for the others.
inline bool tracks_residues(const ClassSpec& c) { return std::holds_alternative<AbkClass>(c); }

inline int modulus(const ClassSpec& c) {
  return std::visit([](const auto& s) { return s.k; }, c);
}

inline std::string to_string(const ClassSpec& c) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AbkClass>) {
          return "abk:" + std::to_string(s.a) + "," + std::to_string(s.b) + "," + std::to_string(s.k);
        } else if constexpr (std::is_same_v<T, OkrClass>) {
          return "okr:" + std::to_string(s.k) + "," + std::to_string(s.r);
        } else if constexpr (std::is_same_v<T, KpartClass>) {
          return "kpart:" + std::to_string(s.k);
        } else {
          return "mkr:" + std::to_string(s.k) + "," + std::to_string(s.r);
        }
      },
      c);
}

/// Parses "abk:a,b,k", "okr:k,r", "kpart:k" or "mkr:k,r" and checks ranges.
inline ClassSpec parse_class(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::Parse, "class needs the form name:params");
  const std::string_view name = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  std::vector<int> nums;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    int v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size()) {
      throw Error(ErrorCode::Parse, "bad class parameter '" + std::string(tok) + "'");
    }
    nums.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  auto expect = [&](std::size_t n) {
    if (nums.size() != n) throw Error(ErrorCode::Parse, "wrong parameter count for class " + std::string(name));
  };
  ClassSpec spec;
  if (name == "abk") {
    expect(3);
    spec = AbkClass{nums[0], nums[1], nums[2]};
  } else if (name == "okr") {
    expect(2);
    spec = OkrClass{nums[0], nums[1]};
  } else if (name == "kpart") {
    expect(1);
    spec = KpartClass{nums[0]};
  } else if (name == "mkr") {
    expect(2);
    spec = MkrClass{nums[0], nums[1]};
  } else {
    throw Error(ErrorCode::Parse, "unknown class '" + std::string(name) + "'");
  }
  check_params(spec);
  return spec;
}

/// Nonnegative remainder.
inline int mod(long long v, int k) {
  const long long m = v % k;
  return static_cast<int>(m < 0 ? m + k : m);
}

/// The representative s of v modulo k with r-k+1 <= s <= r.
inline int phi(int v, int k, int r) { return r - mod(static_cast<long long>(r) - v, k); }

}  // namespace seppart
