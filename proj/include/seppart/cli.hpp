#pragma once

// Command-line front end: verify, list, basis, decompose, map.
//
// Exit codes: 0 every report passed, 1 a report failed, 2 usage error,
// 3 capacity exceeded, 4 input is not a member of the class, 5 internal
// error (overflow or broken invariant).

#include <charconv>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seppart/seppart.hpp"

namespace seppart::cli {

inline constexpr const char* kSchema = "sep-partitions/1";

using Json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kCapacity = 3, kNotAMember = 4, kInternal = 5 };

inline Json to_json(const Overpartition& p) {
  Json parts = Json::array();
  for (const auto& x : p.parts) parts.push_back({{"v", x.value}, {"o", x.overlined}});
  return Json{{"parts", std::move(parts)}};
}

inline Json coeff_json(Coeff c) {
  if (fits_int64(c)) return static_cast<std::int64_t>(c);
  return to_string(c);
}

inline Json to_json(const VerificationReport& r, bool timing) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json j{{"schema", kSchema}, {"identity", r.identity}, {"params", std::move(params)}, {"order", r.order},
         {"status", r.passed() ? "pass" : "fail"}};
  if (r.first_mismatch) {
    const Mismatch& m = *r.first_mismatch;
    j["first_mismatch"] = Json{{"degree", m.degree},
                               {"aux", Json::array({m.aux.e0, m.aux.e1})},
                               {"lhs", coeff_json(m.lhs)},
                               {"rhs", coeff_json(m.rhs)},
                               {"where", m.where}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline std::string to_text(const VerificationReport& r, bool timing) {
  std::string line = r.identity;
  for (const auto& [k, v] : r.params) line += " " + k + "=" + std::to_string(v);
  if (r.identity != "THM1") line += " N=" + std::to_string(r.order);
  if (r.passed()) {
    line += ": pass";
  } else {
    const Mismatch& m = *r.first_mismatch;
    line += ": fail at q^" + std::to_string(m.degree) + " aux=(" + std::to_string(m.aux.e0) + "," +
            std::to_string(m.aux.e1) + ") lhs=" + seppart::to_string(m.lhs) + " rhs=" + seppart::to_string(m.rhs) +
            " [" + m.where + "]";
  }
  if (timing) line += " (" + std::to_string(static_cast<long long>(r.elapsed_ms)) + " ms)";
  return line;
}

/// "key=value" tokens with integer values.
inline std::map<std::string, long long> parse_params(const std::vector<std::string>& tokens) {
  std::map<std::string, long long> out;
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::Parse, "expected key=value, got '" + tok + "'");
    long long v = 0;
    const char* first = tok.data() + eq + 1;
    const char* last = tok.data() + tok.size();
    const auto [end, ec] = std::from_chars(first, last, v);
    if (first == last || ec != std::errc{} || end != last) throw Error(ErrorCode::Parse, "bad value in '" + tok + "'");
    out[tok.substr(0, eq)] = v;
  }
  return out;
}

inline int require_int(const std::map<std::string, long long>& params, const char* name) {
  const auto it = params.find(name);
  if (it == params.end()) throw Error(ErrorCode::Parse, std::string("missing parameter ") + name);
  return static_cast<int>(it->second);
}

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::Domain:
    case ErrorCode::MismatchedShape:
    case ErrorCode::OutOfRange:
    case ErrorCode::IllegalShift:
    case ErrorCode::Incomplete:
      return kUsage;
    case ErrorCode::Capacity: return kCapacity;
    case ErrorCode::NotAMember: return kNotAMember;
    case ErrorCode::Overflow:
    case ErrorCode::Internal:
      return kInternal;
  }
  return kInternal;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separable partition classes: enumeration, bases and identity checks"};
  app.require_subcommand(1);

  std::string format = "text";
  long long capacity = -1;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--capacity", capacity, "Maximum members generated per call")->check(CLI::NonNegativeNumber);
  };

  std::string identity;
  std::vector<std::string> verify_params;
  int order = 30;
  int n_max = 20;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Check a generating-function identity or theorem");
  verify->add_option("identity", identity, "ABK_11, OKR_12, MKR_14, OKK_31, KPART_32, THM1, REC_ABK, REC_KR, GF_BASIS_47")
      ->required();
  verify->add_option("params", verify_params, "Parameters as key=value (a, b, k, r, m, h, j, N, n_max)");
  verify->add_option("-N,--order", order, "Truncation order")->check(CLI::NonNegativeNumber);
  verify->add_option("--n-max", n_max, "Largest weight for THM1")->check(CLI::NonNegativeNumber);
  verify->add_flag("--timing", timing, "Report elapsed time");
  add_common(verify);

  std::string class_text;
  int weight = 0;
  auto* list = app.add_subcommand("list", "List the members of a class of a given weight");
  list->add_option("class", class_text, "abk:a,b,k | okr:k,r | kpart:k | mkr:k,r")->required();
  list->add_option("n", weight, "Weight")->required()->check(CLI::NonNegativeNumber);
  add_common(list);

  std::string basis_kind;
  std::vector<std::string> basis_params;
  auto* basis = app.add_subcommand("basis", "Dump the basis elements with m parts");
  basis->add_option("kind", basis_kind, "abk or kr")->required()->check(CLI::IsMember({"abk", "kr"}));
  basis->add_option("params", basis_params, "m=.. and a=.. b=.. k=.. (abk) or k=.. r=.. (kr)");
  add_common(basis);

  std::string decompose_class;
  std::string partition_text;
  auto* decompose_cmd = app.add_subcommand("decompose", "Split a member into basis element plus multiples of k");
  decompose_cmd->add_option("class", decompose_class, "abk:a,b,k or mkr:k,r")->required();
  decompose_cmd->add_option("partition", partition_text, "Parts such as 8,7,5,2 or 2,2,1~,1")->required();
  add_common(decompose_cmd);

  std::string direction;
  int map_k = 1;
  auto* map_cmd = app.add_subcommand("map", "Apply the (k,k)-overpartition / k-partition bijection");
  map_cmd->add_option("direction", direction, "okk2kp or kp2okk")->required()->check(CLI::IsMember({"okk2kp", "kp2okk"}));
  map_cmd->add_option("k", map_k, "Modulus")->required()->check(CLI::PositiveNumber);
  map_cmd->add_option("partition", partition_text, "Parts such as 9~,7,6,6,5,3~,3,1,1")->required();
  add_common(map_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  const bool json = format == "json";
  try {
    Limits limits = Limits::from_env();
    if (capacity >= 0) limits.member_capacity = static_cast<std::size_t>(capacity);

    if (*verify) {
      IdentityRequest req{identity, parse_params(verify_params), order, n_max};
      if (auto it = req.params.find("N"); it != req.params.end()) {
        req.order = static_cast<int>(it->second);
        req.params.erase(it);
      }
      if (auto it = req.params.find("n_max"); it != req.params.end()) {
        req.n_max = static_cast<int>(it->second);
        req.params.erase(it);
      }
      const VerificationReport report = run_identity(req, limits);
      out << (json ? to_json(report, timing).dump() : to_text(report, timing)) << '\n';
      return report.passed() ? kPass : kFail;
    }

    if (*list) {
      const ClassSpec spec = parse_class(class_text);
      for (const Overpartition& p : enumerate(weight, spec, limits)) {
        if (json) {
          Json line{{"schema", kSchema}};
          line.update(to_json(p));
          out << line.dump() << '\n';
        } else {
          out << seppart::to_text(p) << '\n';
        }
      }
      return kPass;
    }

    if (*basis) {
      const auto params = parse_params(basis_params);
      const int m = require_int(params, "m");
      std::vector<Overpartition> elements;
      Json jparams = Json::object();
      if (basis_kind == "abk") {
        const AbkClass c{require_int(params, "a"), require_int(params, "b"), require_int(params, "k")};
        elements = gen_basis_abk(m, c, limits);
        jparams = Json{{"a", c.a}, {"b", c.b}, {"k", c.k}};
      } else {
        const int k = require_int(params, "k"), r = require_int(params, "r");
        elements = gen_basis_kr(m, k, r, limits);
        jparams = Json{{"k", k}, {"r", r}};
      }
      if (json) {
        Json arr = Json::array();
        for (const auto& e : elements) arr.push_back(to_json(e));
        out << Json{{"schema", kSchema}, {"kind", basis_kind}, {"m", m}, {"params", jparams}, {"elements", arr}}.dump()
            << '\n';
      } else {
        for (const auto& e : elements) out << seppart::to_text(e) << '\n';
      }
      return kPass;
    }

    if (*decompose_cmd) {
      const ClassSpec spec = parse_class(decompose_class);
      const Overpartition p = parse_overpartition(partition_text);
      const Decomposition d = decompose(p, spec);
      if (json) {
        out << Json{{"schema", kSchema}, {"class", to_string(spec)}, {"input", to_json(p)},
                    {"lambda", to_json(d.basis)}, {"mu", d.mu}}
                   .dump()
            << '\n';
      } else {
        std::string mu;
        for (std::size_t i = 0; i < d.mu.size(); ++i) mu += (i ? "," : "") + std::to_string(d.mu[i]);
        const std::string lambda = d.basis.empty() ? "()" : "(" + seppart::to_text(d.basis) + ")";
        out << "lambda=" << lambda << '\n' << "mu=(" << mu << ")\n";
      }
      return kPass;
    }

    if (*map_cmd) {
      const Overpartition p = parse_overpartition(partition_text);
      Overpartition image;
      std::vector<int> zeta;
      if (direction == "okk2kp") {
        BijectionRecord rec = okk_to_kpartition_record(p, map_k);
        image = std::move(rec.target);
        zeta = std::move(rec.zeta);
      } else {
        image = kpartition_to_okk(p, map_k);
      }
      if (json) {
        Json j{{"schema", kSchema}, {"direction", direction}, {"k", map_k}, {"input", to_json(p)},
               {"output", to_json(image)}};
        if (direction == "okk2kp") j["zeta"] = zeta;
        out << j.dump() << '\n';
      } else {
        out << seppart::to_text(image) << '\n';
      }
      return kPass;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace seppart::cli
