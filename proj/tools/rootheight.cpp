#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rootheight/errors.hpp"
#include "rootheight/identities.hpp"

using namespace rootheight;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json poly_json(const Polynomial<Rat>& p) {
  json coeffs = json::array();
  for (const Rat& c : p.coeffs()) coeffs.push_back(c.str());
  return {{"coeffs", coeffs}, {"pretty", to_string(p)}};
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

RootSystemId parse_selector(const std::string& family, const std::string& rank_text) {
  Family f;
  try {
    f = parse_family(family);
  } catch (const std::exception&) {
    throw UsageError("unknown family '" + family + "'");
  }
  long rank = 0;
  std::size_t used = 0;
  try {
    rank = std::stol(rank_text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != rank_text.size() || rank_text.empty()) throw UsageError("rank must be an integer, got '" + rank_text + "'");
  if (rank > kMaxRank) throw UsageError("rank " + rank_text + " exceeds the limit " + std::to_string(kMaxRank));
  try {
    return RootSystemId(f, static_cast<int>(rank));
  } catch (const InvalidRank& e) {
    throw UsageError(e.what());
  }
}

std::vector<RootSystemId> parse_selectors(const std::vector<std::string>& words) {
  if (words.empty() || (words.size() == 1 && words[0] == "all")) return default_catalog();
  if (words.size() == 2) return {parse_selector(words[0], words[1])};
  if (words.size() == 1) {
    try {
      return {RootSystemId::parse(words[0])};
    } catch (const std::exception&) {
    }
  }
  throw UsageError("expected '<family> <rank>' or 'all'");
}

long default_bfs_cap() {
  if (const char* env = std::getenv("ROOTHEIGHT_BFS_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw UsageError(std::string("ROOTHEIGHT_BFS_CAP must be a positive integer, got '") + env + "'");
  }
  return kDefaultBfsCap;
}

template <class T>
json list_json(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x);
  return out;
}

int cmd_info(const RootSystemId& id, const std::string& format) {
  const RootSystem rs = build(id);
  const auto B = b_poly(rs), D = dynkin_poly(rs), M = antichain_poly(rs);
  const auto C = coxeter_element(rs).charpoly;
  const std::string factored = factorization_string(rs.e_of_d());

  json e_of_d = json::object();
  for (const auto& [d, e] : rs.e_of_d()) e_of_d[std::to_string(d)] = e;
  json j{{"system", id.name()},
         {"rank", id.rank()},
         {"h", rs.coxeter_number()},
         {"exponents", list_json(rs.exponents())},
         {"b", list_json(rs.height_counts())},
         {"m", list_json(rs.m())},
         {"e", e_of_d},
         {"p", list_json(rs.p())},
         {"positive_roots", rs.positive_roots().size()},
         {"weyl_order", weyl_group_order(rs).get_str()},
         {"B", poly_json(B)},
         {"D", poly_json(D)},
         {"M", poly_json(M)},
         {"C", poly_json(C)},
         {"C_factored", factored}};
  if (id.simply_laced()) {
    const auto s = singularity_data(rs);
    j["singularity"] = {{"a", s.a.str()}, {"b", s.b.str()}, {"c", s.c.str()}, {"g", s.g}, {"cartan_det", s.cartan_det}};
  }
  if (format == "json") {
    emit(j);
    return 0;
  }
  auto join = [](const auto& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    return os.str();
  };
  std::cout << id.name() << "\n"
            << "  h               " << rs.coxeter_number() << "\n"
            << "  exponents       " << join(rs.exponents()) << "\n"
            << "  b_k             " << join(rs.height_counts()) << "\n"
            << "  m(k)            " << join(rs.m()) << "\n"
            << "  p(k)            " << join(rs.p()) << "\n"
            << "  e(d)           ";
  for (const auto& [d, e] : rs.e_of_d()) std::cout << " " << d << ":" << e;
  std::cout << "\n"
            << "  positive roots  " << rs.positive_roots().size() << "\n"
            << "  |W|             " << weyl_group_order(rs).get_str() << "\n"
            << "  B(q)            " << to_string(B) << "\n"
            << "  D(q)            " << to_string(D) << "\n"
            << "  M(q)            " << to_string(M) << "\n"
            << "  C(q)            " << factored << " = " << to_string(C) << "\n";
  return 0;
}

std::vector<std::string> parse_props(const std::string& list) {
  std::vector<std::string> ids;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    if (std::find(check_ids().begin(), check_ids().end(), item) == check_ids().end())
      throw UsageError("unknown check id '" + item + "'");
    ids.push_back(item);
  }
  if (ids.empty()) throw UsageError("--props needs at least one check id");
  return ids;
}

int cmd_verify(const std::vector<RootSystemId>& ids, const std::vector<std::string>& props, bool many, long cap,
               int jobs, const std::string& format) {
  std::vector<RootSystem> systems;
  for (const auto& id : ids) systems.push_back(build(id));
  const auto reports = run_suite(systems, props, CheckOptions{cap}, jobs);
  const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });

  if (format == "json") {
    std::map<std::string, json> by_system;
    for (const auto& id : ids) by_system[id.name()] = json::array();
    for (const auto& r : reports) {
      json c{{"id", r.identity_id}, {"verdict", r.passed() ? "pass" : "fail"}};
      if (r.witness) c["witness"] = *r.witness;
      if (!r.note.empty()) c["note"] = r.note;
      by_system[r.system].push_back(c);
    }
    json out = json::array();
    for (const auto& id : ids) out.push_back({{"system", id.name()}, {"checks", by_system[id.name()]}});
    emit(many ? out : out[0]);
  } else {
    std::size_t failed = 0;
    for (const auto& r : reports) {
      std::cout << std::left << std::setw(5) << r.system << std::setw(12) << r.identity_id
                << (r.passed() ? "pass" : "FAIL");
      if (r.witness) std::cout << "  " << *r.witness;
      if (!r.note.empty()) std::cout << "  (" << r.note << ")";
      std::cout << "\n";
      failed += !r.passed();
    }
    std::cout << reports.size() << " checks, " << failed << " failed\n";
  }
  return all_pass ? 0 : kExitFail;
}

int cmd_munagi(const std::string& coeff_list, int h, bool roundtrip, const std::string& format) {
  if (h < 1) throw UsageError("--h must be positive");
  std::vector<Rat> coeffs;
  std::stringstream ss(coeff_list);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      coeffs.push_back(Rat::parse(item));
    } catch (const std::exception&) {
      throw UsageError("bad coefficient '" + item + "'");
    }
  }
  if (coeffs.empty()) throw UsageError("no coefficients given");
  if (coeffs.size() > static_cast<std::size_t>(h))
    throw UsageError(std::to_string(coeffs.size()) + " coefficients exceed the period h=" + std::to_string(h));
  const Polynomial<Rat> numer(coeffs);
  const auto dec = munagi_decompose(numer, h);
  const bool ok = !roundtrip || dec.reconstruct() == numer;

  if (format == "json") {
    json parts = json::array();
    for (const auto& [d, part] : dec.parts) {
      json pj = poly_json(part);
      pj["d"] = d;
      parts.push_back(pj);
    }
    json out{{"h", h}, {"parts", parts}, {"all_constant", dec.all_constant()}};
    if (roundtrip) out["roundtrip"] = ok;
    emit(out);
  } else {
    for (const auto& [d, part] : dec.parts) std::cout << "H_" << d << "(q) = " << to_string(part) << "\n";
    if (roundtrip) std::cout << "roundtrip: " << (ok ? "ok" : "MISMATCH") << "\n";
  }
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Height distribution of positive roots: catalog data and exact identity checks"};
  app.require_subcommand(1);

  std::string format = "table";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  };

  auto* info = app.add_subcommand("info", "Show the invariants of one root system");
  std::string family, rank;
  info->add_option("family", family, "A, B, C, D, E, F or G")->required();
  info->add_option("rank", rank, "Rank")->required();
  add_format(info);

  auto* verify = app.add_subcommand("verify", "Run the identity checks");
  std::vector<std::string> selector;
  std::string props;
  bool all_props = false;
  long cap = 0;
  int jobs = 1;
  verify->add_option("selector", selector, "'<family> <rank>' or 'all' (default)");
  verify->add_option("--props", props, "Comma-separated check ids");
  verify->add_flag("--all", all_props, "Run every check (default)");
  verify->add_option("--bfs-cap", cap, "Largest Weyl group enumerated by brute force")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format(verify);

  auto* munagi = app.add_subcommand("munagi", "Munagi q-partial fractions of a numerator over 1-q^h");
  munagi->set_help_flag("--help", "Print this help message and exit");
  std::string coeffs;
  int h = 0;
  bool roundtrip = false;
  munagi->add_option("coeffs", coeffs, "c0,c1,... (rationals p/q allowed)")->required();
  munagi->add_option("--h", h, "Period h")->required();
  munagi->add_flag("--roundtrip", roundtrip, "Re-expand and confirm");
  add_format(munagi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*info) return cmd_info(parse_selector(family, rank), format);
    if (*verify) {
      if (all_props && !props.empty()) throw UsageError("--all and --props are exclusive");
      const auto ids = parse_selectors(selector);
      const auto checks = props.empty() ? check_ids() : parse_props(props);
      const long bfs_cap = cap > 0 ? cap : default_bfs_cap();
      const bool many = selector.empty() || selector == std::vector<std::string>{"all"};
      return cmd_verify(ids, checks, many, bfs_cap, jobs, format);
    }
    if (*munagi) return cmd_munagi(coeffs, h, roundtrip, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
