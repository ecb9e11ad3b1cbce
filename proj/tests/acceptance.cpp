// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion holds.

#include <chrono>
#include <cmath>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "seppart/seppart.hpp"

namespace {

using namespace seppart;

struct Criterion {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) notes << " first failure: " << what;
    ok = ok && cond;
  }
  void expect_report(const VerificationReport& r) {
    std::string what = r.identity;
    for (const auto& [k, v] : r.params) what += " " + k + "=" + std::to_string(v);
    if (r.first_mismatch) {
      what += " q^" + std::to_string(r.first_mismatch->degree) + " " + r.first_mismatch->where;
    }
    expect(r.passed(), what);
  }
};

const std::vector<AbkClass> kAbkParams = {{1, 2, 3}, {1, 4, 5}, {2, 3, 5}, {3, 5, 7}};

Overpartition op(std::string_view text) { return parse_overpartition(text); }

Coeff collapsed(const TruncatedSeries& s, int degree) { return collapse_aux(s).coeff(degree); }

void criterion1(Criterion& c) {
  for (const AbkClass& p : kAbkParams) c.expect_report(verify_abk_11(p, 40));
}

void criterion2(Criterion& c) {
  for (auto [k, r] : std::vector<std::pair<int, int>>{{1, 1}, {3, 1}, {3, 3}, {4, 2}}) c.expect_report(verify_okr_12(k, r, 30));
  c.expect(collapsed(okr_product(3, 3, 30), 6) == 15, "product q^6 for (3,3)");
  c.expect(collapsed(class_gf_enumerated(OkrClass{3, 3}, 30), 6) == 15, "enumeration q^6 for (3,3)");
}

void criterion3(Criterion& c) {
  for (int k = 1; k <= 4; ++k) c.expect_report(verify_kpart_32(k, 30));
  c.expect(collapsed(kpart_product(3, 30), 6) == 15, "product q^6 for k=3");
  c.expect(collapsed(class_gf_enumerated(KpartClass{3}, 30), 6) == 15, "enumeration q^6 for k=3");
}

void criterion4(Criterion& c) {
  for (int k = 1; k <= 4; ++k) c.expect_report(verify_theorem1(k, 20));
  const BijectionRecord rec = okk_to_kpartition_record(op("9~,7,6,6,5,3~,3,1,1"), 3);
  c.expect(rec.target == op("7,6,6,5,3,3,3~,3,1,1,1~,1,1"), "worked example forward");
  c.expect(kpartition_to_okk(rec.target, 3) == rec.source, "worked example reverse");
}

void criterion5(Criterion& c) {
  for (auto [k, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 3}, {4, 2}}) c.expect_report(verify_mkr_14(k, r, 25));
  c.expect(collapsed(mkr_double_sum(3, 1, 25), 6) == 11, "double sum q^6 for (3,1)");
  c.expect(collapsed(class_gf_enumerated(MkrClass{3, 1}, 25), 6) == 11, "enumeration q^6 for (3,1)");
}

void criterion6(Criterion& c) {
  for (const AbkClass& p : kAbkParams) {
    for (int m = 1; m <= 12; ++m) {
      const auto basis = gen_basis_abk(m, p);
      std::set<std::vector<int>> distinct;
      bool valid = true;
      for (const auto& lambda : basis) {
        valid = valid && oracle::is_basis_abk(lambda.values(), p.a, p.b, p.k);
        distinct.insert(lambda.values());
      }
      const std::string where = "abk " + to_string(ClassSpec{p}) + " m=" + std::to_string(m);
      c.expect(basis.size() == (std::size_t{1} << m) && distinct.size() == basis.size() && valid, where);
      if (m <= 8) c.expect(distinct == oracle::basis_abk_by_definition(m, p.a, p.b, p.k), where + " vs definition");
    }
  }
  std::set<Overpartition> nineteen;
  for (const char* t : {"1,1,1", "1~,1,1", "2,1~,1", "3,1~,1", "4,1~,1", "4~,1~,1", "2,2,1~", "3,2,1~", "4,2,1~",
                        "4~,2,1~", "3,3,1~", "4,3,1~", "4~,3,1~", "4,4,1~", "4~,4,1~", "5,4~,1~", "6,4~,1~",
                        "7,4~,1~", "7~,4~,1~"}) {
    nineteen.insert(op(t));
  }
  const auto b31 = gen_basis_kr(3, 3, 1);
  c.expect(b31.size() == 19 && std::set<Overpartition>(b31.begin(), b31.end()) == nineteen, "B_{3,1}(3)");
  c.expect(oracle::basis_kr_by_definition(3, 3, 1) == nineteen, "B_{3,1}(3) by definition");
  for (int k = 1; k <= 5; ++k) {
    for (int r = 1; r <= k; ++r) {
      for (int m = 1; m <= 8; ++m) {
        const double bound = (r + 1) * std::pow(k + 1, m - 1);
        c.expect(static_cast<double>(gen_basis_kr(m, k, r).size()) <= bound,
                 "bound k=" + std::to_string(k) + " r=" + std::to_string(r) + " m=" + std::to_string(m));
      }
    }
  }
}

template <class InBasis>
void check_decompositions(Criterion& c, const ClassSpec& spec, int k, InBasis in_basis) {
  for (int n = 1; n <= 22; ++n) {
    for (const auto& p : enumerate(n, spec)) {
      const Decomposition d = decompose(p, spec);
      c.expect(recompose(d) == p && in_basis(d.basis), "decompose " + to_text(p));
      c.expect(oracle::count_decompositions(p, k, in_basis) == 1, "unique " + to_text(p));
    }
  }
}

void criterion7(Criterion& c) {
  check_decompositions(c, AbkClass{1, 2, 3}, 3, [](const Overpartition& l) {
    return l.overlined_count() == 0 && oracle::is_basis_abk(l.values(), 1, 2, 3);
  });
  check_decompositions(c, MkrClass{3, 1}, 3, [](const Overpartition& l) { return oracle::is_basis_kr(l, 3, 1); });
}

void criterion8(Criterion& c) {
  constexpr int kOrder = 40;
  for (const AbkClass& p : kAbkParams) {
    for (int m = 1; m <= 6; ++m) {
      std::map<AbkLargest, TruncatedSeries> by_largest;
      TruncatedSeries total(kOrder, 2);
      for (const auto& lambda : oracle::basis_abk_by_definition(m, p.a, p.b, p.k)) {
        const int top = lambda.front();
        const AbkLargest key = oracle::residue(top - p.a, p.k) == 0 ? AbkLargest{(top - p.a) / p.k, Residue::A}
                                                                    : AbkLargest{(top - p.b) / p.k, Residue::B};
        std::uint32_t na = 0, nb = 0;
        int weight = 0;
        for (int v : lambda) {
          (oracle::residue(v - p.a, p.k) == 0 ? na : nb)++;
          weight += v;
        }
        auto [it, _] = by_largest.try_emplace(key, kOrder, 2);
        if (weight <= kOrder) {
          it->second.add_term(weight, {na, nb}, 1);
          total.add_term(weight, {na, nb}, 1);
        }
      }
      for (int h = 0; h <= m; ++h) {
        for (Residue res : {Residue::A, Residue::B}) {
          const auto it = by_largest.find({h, res});
          const TruncatedSeries expected = it == by_largest.end() ? TruncatedSeries(kOrder, 2) : it->second;
          c.expect(g_abk_closed(m, {h, res}, p, kOrder) == expected,
                   "g_abk m=" + std::to_string(m) + " h=" + std::to_string(h));
        }
      }
      c.expect(g_abk_total_closed(m, p, kOrder) == total, "g_abk total m=" + std::to_string(m));
    }
  }
  for (int k = 1; k <= 5; ++k) {
    for (int r = 1; r <= k; ++r) {
      for (int m = 1; m <= 6; ++m) {
        std::map<KrLargest, TruncatedSeries> by_largest;
        TruncatedSeries with_x(kOrder, 1);
        for (const auto& lambda : gen_basis_kr(m, k, r)) {
          const OverPart top = lambda.parts.front();
          const int s = top.overlined ? r : oracle::window_rep(top.value, k, r);
          auto [it, _] = by_largest.try_emplace(KrLargest{(top.value - s) / k + 1, s, top.overlined}, kOrder, 1);
          if (lambda.weight() <= kOrder) {
            it->second.add_term(static_cast<int>(lambda.weight()), {}, 1);
            with_x.add_term(static_cast<int>(lambda.weight()),
                            {static_cast<std::uint32_t>(lambda.overlined_count()), 0}, 1);
          }
        }
        const std::string where = " k=" + std::to_string(k) + " r=" + std::to_string(r) + " m=" + std::to_string(m);
        for (int j = 1; j <= m; ++j) {
          for (int s = (j == 1 ? 1 : -k + r + 1); s <= r; ++s) {
            for (bool over : {false, true}) {
              if (over && s != r) continue;
              const auto it = by_largest.find({j, s, over});
              const TruncatedSeries expected = it == by_largest.end() ? TruncatedSeries(kOrder, 1) : it->second;
              c.expect(g_kr_closed(m, {j, s, over}, k, r, kOrder) == expected, "g_kr" + where);
            }
          }
        }
        c.expect(basis_gf_kr_closed(m, k, r, kOrder) == with_x, "basis gf" + where);
      }
    }
  }
  for (int k = 1; k <= 5; ++k) {
    for (int m = 1; m <= 6; ++m) {
      // Large enough to hold every term of both sides at the top of the grid.
      const int order = (m + 1) * (k * (m + 1) + k);
      for (int r = 1; r <= k; ++r) {
        const VerificationReport rec = verify_rec_kr(k, r, order, m, m, 0, 4);
        c.expect_report(rec);
      }
      for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) c.expect_report(verify_rec_abk({a, b, k}, order, m, m, 0, 4));
    }
  }
}

void criterion9(Criterion& c) {
  for (int k = 1; k <= 5; ++k) {
    for (int a = 0; a <= 12; ++a) {
      for (int b = 0; b <= a; ++b) {
        const std::string where = "[" + std::to_string(a) + " " + std::to_string(b) + "]_" + std::to_string(k);
        const QBinomial g = gaussian(a, b, k);
        c.expect(g.poly == gaussian(a, a - b, k).poly, "symmetry " + where);
        c.expect(g.degree() == k * b * (a - b), "degree " + where);
        Coeff sum = 0;
        bool nonneg = true;
        for (Coeff x : g.poly) {
          nonneg = nonneg && x >= 0;
          sum += x;
        }
        c.expect(nonneg, "nonnegative " + where);
        c.expect(sum == oracle::binomial(a, b), "q=1 " + where);
        c.expect(std::vector<long long>(g.poly.begin(), g.poly.end()) == oracle::gaussian_by_ratio(a, b, k),
                 "ratio " + where);
        if (a >= 1) {
          std::vector<Coeff> rhs(g.poly.size(), 0);
          const auto left = gaussian(a - 1, b - 1, k).poly;
          const auto right = gaussian(a - 1, b, k).poly;
          for (std::size_t d = 0; d < left.size(); ++d) rhs[d] += left[d];
          for (std::size_t d = 0; d < right.size(); ++d) rhs[d + k * b] += right[d];
          c.expect(g.poly == rhs, "recurrence " + where);
        }
      }
    }
  }
  // Column sums: [A+B+1, B+1] = sum_{s=0}^{A} q^s [B+s, B].
  for (int a = 0; a <= 12; ++a) {
    for (int b = 0; a + b + 1 <= 12; ++b) {
      const auto lhs = gaussian(a + b + 1, b + 1, 1).poly;
      std::vector<Coeff> rhs(lhs.size(), 0);
      for (int s = 0; s <= a; ++s) {
        const auto term = gaussian(b + s, b, 1).poly;
        for (std::size_t d = 0; d < term.size(); ++d) rhs[d + s] += term[d];
      }
      c.expect(lhs == rhs, "column sum A=" + std::to_string(a) + " B=" + std::to_string(b));
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Criterion&)>> criteria = {
      {"three-way (a,b,k) identity at N=40", criterion1},
      {"(k,r)-overpartition product at N=30", criterion2},
      {"k-partition product at N=30", criterion3},
      {"(k,k)-overpartition / k-partition bijection, n <= 20", criterion4},
      {"modulo overpartition double sum at N=25", criterion5},
      {"basis cardinalities", criterion6},
      {"decomposition uniqueness, weight <= 22", criterion7},
      {"closed forms and recurrences vs basis sums", criterion8},
      {"q-binomial properties, A <= 12", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << ms
              << " ms)" << c.notes.str() << std::endl;
    failures += c.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
