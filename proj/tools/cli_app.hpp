#pragma once

#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lgrp/lgrp.hpp"

namespace lgrp::cli {

using json = json_io::json;

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kBudgetExceeded = 3 };

struct Options {
  std::string command;
  std::string lattice_path;
  std::string group_path;
  std::string subset_path;
  std::string subset2_path;
  std::string format = "table";
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::size_t trials = 200;
};

struct Workspace {
  LatticePtr lattice;
  GroupPtr group;
  std::optional<LSubset> first;
  std::optional<LSubset> second;
};

inline Workspace load(const Options& opt) {
  Workspace ws;
  if (!opt.lattice_path.empty()) ws.lattice = make_lattice(json_io::lattice_from_json(json_io::load_file(opt.lattice_path)));
  if (!opt.group_path.empty()) ws.group = make_group(json_io::group_from_json(json_io::load_file(opt.group_path)));
  auto subset = [&](const std::string& path) -> std::optional<LSubset> {
    if (path.empty()) return std::nullopt;
    if (!ws.lattice || !ws.group)
      throw Error(ErrorKind::CrossValidation, "L-subset documents need both -l and -g");
    return json_io::lsubset_from_json(json_io::load_file(path), ws.group, ws.lattice);
  };
  ws.first = subset(opt.subset_path);
  ws.second = subset(opt.subset2_path);
  return ws;
}

inline const LSubset& need(const std::optional<LSubset>& s, const char* flag) {
  if (!s) throw Error(ErrorKind::CrossValidation, std::string("this command needs ") + flag);
  return *s;
}

inline void print_value_table(std::ostream& out, const std::vector<std::string>& headers,
                              const std::vector<const LSubset*>& columns) {
  const auto& g = columns.front()->group();
  const auto& l = columns.front()->lattice();
  std::size_t width = 9;
  for (const auto& name : g.names()) width = std::max(width, name.size() + 2);
  out << std::left << std::setw(static_cast<int>(width)) << "element";
  for (const auto& h : headers) out << std::setw(static_cast<int>(std::max<std::size_t>(h.size() + 2, 8))) << h;
  out << "\n";
  for (Element x = 0; x < g.order(); ++x) {
    out << std::setw(static_cast<int>(width)) << g.name(x);
    for (std::size_t i = 0; i < columns.size(); ++i)
      out << std::setw(static_cast<int>(std::max<std::size_t>(headers[i].size() + 2, 8))) << l.name((*columns[i])(x));
    out << "\n";
  }
  out << std::right;
}

inline std::string set_text(const FiniteGroup& g, ElementSet s) {
  std::string text = "{";
  bool first = true;
  for (Element x : s) {
    text += (first ? "" : ", ") + g.name(x);
    first = false;
  }
  return text + "}";
}

inline json profile_json(const LevelProfile& p, const FiniteGroup& g, const FiniteLattice& l) {
  json levels = json::array();
  for (const auto& e : p.witness_levels)
    levels.push_back({{"level", l.name(e.level)},
                      {"relation", to_string(e.relation)},
                      {"eta", json_io::element_set_to_json(g, e.eta_level)},
                      {"mu", json_io::element_set_to_json(g, e.mu_level)}});
  return {{"levels", std::move(levels)},
          {"uniqueDefectLevel", p.unique_defect_level ? json(l.name(*p.unique_defect_level)) : json(nullptr)}};
}

inline int cmd_validate(const Options& opt, std::ostream& out) {
  const Workspace ws = load(opt);
  json report = json::object();
  if (ws.lattice)
    report["lattice"] = {{"size", ws.lattice->size()},
                         {"top", ws.lattice->name(ws.lattice->top())},
                         {"bottom", ws.lattice->name(ws.lattice->bottom())},
                         {"distributive", ws.lattice->is_distributive()},
                         {"chain", ws.lattice->is_chain()}};
  if (ws.group)
    report["group"] = {{"order", ws.group->order()},
                       {"identity", ws.group->name(ws.group->identity())},
                       {"subgroups", ws.group->subgroups().size()}};
  auto describe = [&](const LSubset& s) {
    json j = {{"tip", s.lattice().name(tip(s))}, {"tail", s.lattice().name(tail(s))}};
    json image = json::array();
    for (Value v : image_set(s)) image.push_back(s.lattice().name(v));
    j["image"] = std::move(image);
    const bool distributive = s.lattice().is_distributive();
    j["lsubgroup"] = distributive ? json(is_lsubgroup(s)) : json(nullptr);
    j["normal"] = distributive && is_lsubgroup(s) ? json(is_normal_in_group(s)) : json(nullptr);
    j["supProperty"] = has_sup_property(s);
    return j;
  };
  if (ws.first) report["s"] = describe(*ws.first);
  if (ws.second) {
    report["s2"] = describe(*ws.second);
    if (ws.lattice->is_distributive()) {
      report["s2InS"] = is_lsubgroup_of(*ws.second, *ws.first);
      report["s2ProperInS"] = is_proper(*ws.second, *ws.first);
    }
  }
  if (opt.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    for (const auto& [section, body] : report.items()) {
      if (!body.is_object()) {
        out << section << ": " << body.dump() << "\n";
        continue;
      }
      out << section << ":\n";
      for (const auto& [k, v] : body.items()) out << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
  return kOk;
}

inline int cmd_levels(const Options& opt, std::ostream& out) {
  const Workspace ws = load(opt);
  const LSubset& mu = need(ws.first, "-s");
  if (opt.format == "dot") {
    out << dot::levels_to_dot(mu);
    return kOk;
  }
  json levels = json::array();
  for (Value a : mu.lattice().values()) {
    const ElementSet level = level_subset(mu, a);
    levels.push_back({{"level", mu.lattice().name(a)},
                      {"elements", json_io::element_set_to_json(mu.group(), level)},
                      {"subgroup", !level.empty() && mu.group().is_subgroup(level)}});
  }
  if (opt.format == "json") {
    out << json{{"levels", levels}}.dump(2) << "\n";
    return kOk;
  }
  for (Value a : mu.lattice().values()) {
    const ElementSet level = level_subset(mu, a);
    out << mu.lattice().name(a) << ": " << set_text(mu.group(), level)
        << (level.empty() ? "" : mu.group().is_subgroup(level) ? "  subgroup" : "  not a subgroup") << "\n";
  }
  return kOk;
}

inline int cmd_generate(const Options& opt, std::ostream& out) {
  const Workspace ws = load(opt);
  const LSubset& eta = need(ws.first, "-s");
  const LSubset g = generate(eta);
  if (opt.format == "json") {
    out << json_io::lsubset_to_json(g).dump(2) << "\n";
  } else if (opt.format == "dot") {
    out << dot::levels_to_dot(g);
  } else {
    print_value_table(out, {"eta", "<eta>"}, {&eta, &g});
  }
  return kOk;
}

inline int cmd_maximals(const Options& opt, std::ostream& out) {
  const Workspace ws = load(opt);
  const LSubset& mu = need(ws.first, "-s");
  const LSubgroupUniverse universe(mu, opt.budget);
  const auto maximals = maximal_lsubgroups(universe);
  json report = json::object();
  json list = json::array();
  for (const auto& eta : maximals) {
    list.push_back({{"values", json_io::values_to_json(eta)},
                    {"tipRelation", to_string(tip_relation(eta, mu))},
                    {"sufficientCheck", sufficient_maximal_check(eta, mu)},
                    {"levelProfile", profile_json(level_profile(eta, mu), mu.group(), mu.lattice())}});
  }
  report["count"] = maximals.size();
  report["maximals"] = std::move(list);
  if (ws.second) {
    const auto verdict = is_maximal(*ws.second, universe, MaximalityStrategy::Both);
    json v = {{"maximal", verdict.maximal}, {"reason", to_string(verdict.reason)}};
    v["between"] = verdict.between ? json_io::values_to_json(*verdict.between) : json(nullptr);
    v["point"] = verdict.point ? json{{"element", mu.group().name(verdict.point->point)},
                                      {"height", mu.lattice().name(verdict.point->height)}}
                               : json(nullptr);
    v["levelProfile"] = profile_json(level_profile(*ws.second, mu), mu.group(), mu.lattice());
    report["s2"] = std::move(v);
  }
  if (opt.format == "json") {
    out << report.dump(2) << "\n";
    return kOk;
  }
  out << maximals.size() << " maximal L-subgroup(s)\n";
  std::vector<std::string> headers{"mu"};
  std::vector<const LSubset*> columns{&mu};
  for (std::size_t i = 0; i < maximals.size(); ++i) {
    headers.push_back("eta" + std::to_string(i + 1));
    columns.push_back(&maximals[i]);
  }
  print_value_table(out, headers, columns);
  for (std::size_t i = 0; i < maximals.size(); ++i)
    out << "eta" << i + 1 << ": tip " << to_string(tip_relation(maximals[i], mu))
        << ", sufficient check " << (sufficient_maximal_check(maximals[i], mu) ? "yes" : "no") << "\n";
  if (ws.second) {
    const auto& v = report["s2"];
    out << "s2: " << (v["maximal"].get<bool>() ? "maximal" : "not maximal") << " ("
        << v["reason"].get<std::string>() << ")\n";
    if (!v["between"].is_null()) out << "  between: " << v["between"].dump() << "\n";
    if (!v["point"].is_null())
      out << "  point: " << v["point"]["height"].get<std::string>() << "_" << v["point"]["element"].get<std::string>()
          << "\n";
  }
  return kOk;
}

inline int cmd_frattini(const Options& opt, std::ostream& out) {
  const Workspace ws = load(opt);
  const LSubset& mu = need(ws.first, "-s");
  const auto report = frattini(mu, opt.budget);
  if (opt.format == "json") {
    json maximals = json::array();
    for (const auto& eta : report.maximals) maximals.push_back(json_io::values_to_json(eta));
    out << json{{"phi", json_io::lsubset_to_json(report.phi)},
                {"lambda", json_io::lsubset_to_json(report.lambda)},
                {"maximalCount", report.maximal_count},
                {"usedFallback", report.used_fallback},
                {"equalityHolds", report.equality_holds},
                {"maximals", std::move(maximals)}}
               .dump(2)
        << "\n";
  } else if (opt.format == "dot") {
    out << dot::levels_to_dot(report.phi);
  } else {
    print_value_table(out, {"mu", "phi", "lambda"}, {&mu, &report.phi, &report.lambda});
    out << "maximal L-subgroups: " << report.maximal_count << (report.used_fallback ? " (phi = mu)" : "") << "\n";
    out << "lambda = phi: " << (report.equality_holds ? "yes" : "no") << "\n";
  }
  return kOk;
}

inline int cmd_nongen(const Options& opt, std::ostream& out) {
  const Workspace ws = load(opt);
  const LSubset& mu = need(ws.first, "-s");
  const LSubgroupUniverse universe(mu, opt.budget);
  const LSubset lambda = non_generator_subgroup(universe);
  const auto& g = mu.group();
  const auto& l = mu.lattice();
  json points = json::array();
  for (Element x = 0; x < g.order(); ++x)
    for (Value a : l.down_set(mu(x))) {
      const auto verdict = is_non_generator({x, a}, universe);
      points.push_back({{"element", g.name(x)},
                        {"height", l.name(a)},
                        {"nonGenerator", verdict.non_generator},
                        {"witness", verdict.witness ? json_io::values_to_json(*verdict.witness) : json(nullptr)}});
    }
  if (opt.format == "json") {
    out << json{{"lambda", json_io::lsubset_to_json(lambda)}, {"points", std::move(points)}}.dump(2) << "\n";
    return kOk;
  }
  print_value_table(out, {"mu", "lambda"}, {&mu, &lambda});
  for (const auto& p : points) {
    out << p["height"].get<std::string>() << "_" << p["element"].get<std::string>() << ": "
        << (p["nonGenerator"].get<bool>() ? "non-generator" : "generator");
    if (!p["witness"].is_null()) out << "  witness " << p["witness"].dump();
    out << "\n";
  }
  return kOk;
}

inline int cmd_verify(const Options& opt, std::ostream& out) {
  const Workspace ws = load(opt);
  harness::SuiteSpec suite;
  suite.seed = opt.seed;
  suite.trials = opt.trials;
  suite.budget = opt.budget;
  if (ws.first) {
    const LSubset& mu = *ws.first;
    const LSubset& eta = ws.second ? *ws.second : mu;
    suite.pinned.push_back({mu, eta, eta});
  }
  const auto report = harness::run_suite(suite);
  if (opt.format == "json") {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.instances << " instance(s)\n";
    for (const auto& p : report.properties) {
      out << std::left << std::setw(30) << p.name << std::right << " trials " << std::setw(4) << p.trials
          << "  failures " << std::setw(4) << p.failures << "  skipped " << std::setw(4) << p.skipped << "\n";
      if (p.first_counterexample) out << "  " << p.first_counterexample->dump() << "\n";
    }
  }
  return report.all_passed() ? kOk : kVerificationFailed;
}

inline int cmd_hasse(const Options& opt, std::ostream& out) {
  const Workspace ws = load(opt);
  if (ws.first) {
    out << dot::levels_to_dot(*ws.first);
    return kOk;
  }
  if (!ws.lattice) throw Error(ErrorKind::CrossValidation, "hasse needs -l");
  out << dot::lattice_to_dot(*ws.lattice);
  return kOk;
}

/// Runs one command. `args` excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  // CLI11 does not accept multi-character single-dash options.
  for (auto& a : args)
    if (a == "-s2") a = "--s2";

  Options opt;
  CLI::App app{"Maximal and Frattini L-subgroups of finite L-groups"};
  app.require_subcommand(1, 1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-l,--lattice", opt.lattice_path, "lattice document");
    sub->add_option("-g,--group", opt.group_path, "group document");
    sub->add_option("-s,--subset", opt.subset_path, "L-subset document");
    sub->add_option("--s2", opt.subset2_path, "second L-subset document");
    sub->add_option("--format", opt.format, "table, json or dot")->check(CLI::IsMember({"table", "json", "dot"}));
    sub->add_option("--budget", opt.budget, "candidate budget for enumeration");
    sub->add_option("--seed", opt.seed, "random seed");
  };
  const std::vector<std::pair<std::string, std::string>> commands{
      {"validate", "check documents and report structure"},
      {"levels", "level subsets of -s"},
      {"generate", "L-subgroup generated by -s"},
      {"maximals", "maximal L-subgroups of -s (and a verdict for --s2)"},
      {"frattini", "Frattini and non-generator L-subgroups of -s"},
      {"nongen", "non-generator verdict for every L-point of -s"},
      {"verify", "run the property suite"},
      {"hasse", "DOT diagram of the lattice, or of the levels of -s"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name == "verify") sub->add_option("--trials", opt.trials, "random instances");
    sub->callback([&opt, name = name] { opt.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (opt.command == "validate") return cmd_validate(opt, out);
    if (opt.command == "levels") return cmd_levels(opt, out);
    if (opt.command == "generate") return cmd_generate(opt, out);
    if (opt.command == "maximals") return cmd_maximals(opt, out);
    if (opt.command == "frattini") return cmd_frattini(opt, out);
    if (opt.command == "nongen") return cmd_nongen(opt, out);
    if (opt.command == "verify") return cmd_verify(opt, out);
    if (opt.command == "hasse") return cmd_hasse(opt, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    if (e.kind() == ErrorKind::InstanceTooLarge) return kBudgetExceeded;
    if (e.kind() == ErrorKind::SearchExhausted) return kVerificationFailed;
    return kInputError;
  }
  err << "unknown command\n";
  return kInputError;
}

}  // namespace lgrp::cli
