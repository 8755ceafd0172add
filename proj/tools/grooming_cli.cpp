// Copyright 2026 The Ring Grooming Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// grooming_cli: tables, bounds, constructions, exact solving, validation.
//
// Exit status: 0 ok, 1 usage or malformed input, 2 validation failure,
// 3 unknown or nonexistent design, 4 solver budget exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "grooming.hpp"

namespace {

using grooming::io::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kNoDesign = 3;
constexpr int kBudget = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "3", "1..10", "2,4,8" or a mix such as "1..3,7".
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw UsageError("empty item in range '" + text + "'");
    auto dots = part.find("..");
    try {
      std::size_t used = 0;
      if (dots == std::string::npos) {
        out.push_back(std::stoi(part, &used));
        if (used != part.size()) throw UsageError("bad number '" + part + "'");
      } else {
        int lo = std::stoi(part.substr(0, dots), &used);
        int hi = std::stoi(part.substr(dots + 2));
        if (hi < lo) throw UsageError("empty range '" + part + "'");
        if (hi - lo > 100000) throw UsageError("range '" + part + "' is too long");
        for (int x = lo; x <= hi; ++x) out.push_back(x);
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad range '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty range");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw UsageError("cannot write " + out_path);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

grooming::DesignSources design_sources(std::optional<grooming::io::DesignCache>& cache) {
  if (!cache) cache = grooming::io::DesignCache::from_environment();
  if (cache) return cache->sources();
  return {};
}

grooming::RingInstance make_instance(int c, int n, const std::string& rule, const std::string& orientation) {
  if (n < 2) throw UsageError("--n must be >= 2");
  if (c < 1) throw UsageError("--c must be >= 1");
  if (orientation.empty()) {
    if (rule == "explicit") throw UsageError("--rule explicit needs --orientation");
    return grooming::RingInstance(n, c);
  }
  if (n % 2 == 1) throw UsageError("--orientation only applies to even N");
  std::vector<bool> fwd;
  for (char ch : orientation) {
    if (ch == '1' || ch == 'f' || ch == 'F') fwd.push_back(true);
    else if (ch == '0' || ch == 'b' || ch == 'B') fwd.push_back(false);
    else if (ch != ',') throw UsageError("--orientation takes digits 0/1 (or f/b)");
  }
  try {
    return grooming::RingInstance::explicit_orientation(n, c, fwd);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Traffic grooming on bidirectional WDM rings"};
  app.require_subcommand(1);
  std::optional<grooming::io::DesignCache> cache;

  // gamma-table
  std::string gt_c = "1..10", gt_p = "2..16", gt_format = "text", gt_out;
  auto* gamma_cmd = app.add_subcommand("gamma-table", "gamma(C,p) grid with rho(C)");
  gamma_cmd->add_option("--c", gt_c, "grooming factors, e.g. 1..10");
  gamma_cmd->add_option("--p", gt_p, "vertex counts, e.g. 2..16");
  gamma_cmd->add_option("--format", gt_format)->check(CLI::IsMember({"json", "csv", "text"}));
  gamma_cmd->add_option("--out", gt_out, "output file");

  // bound
  std::string b_c, b_n, b_format = "json", b_out;
  auto* bound_cmd = app.add_subcommand("bound", "lower bounds for A(C,N)");
  bound_cmd->add_option("--c", b_c)->required();
  bound_cmd->add_option("--n", b_n)->required();
  bound_cmd->add_option("--format", b_format)->check(CLI::IsMember({"json", "csv", "text"}));
  bound_cmd->add_option("--out", b_out);

  // construct
  int k_c = 0, k_n = 0;
  std::string k_name = "best", k_out, k_format = "json";
  bool k_all = false;
  auto* construct_cmd = app.add_subcommand("construct", "build a validated solution");
  construct_cmd->add_option("--c", k_c)->required();
  construct_cmd->add_option("--n", k_n)->required();
  construct_cmd->add_option("--name", k_name)
      ->check(CLI::IsMember({"best", "c1", "c2-recursive", "c2-tripartite", "c3", "triangular"}));
  construct_cmd->add_flag("--all", k_all, "summarize every construction");
  construct_cmd->add_option("--format", k_format)->check(CLI::IsMember({"json", "text"}));
  construct_cmd->add_option("--out", k_out);

  // solve
  int s_c = 0, s_n = 0;
  std::string s_rule = "all-forward", s_orientation, s_out;
  std::int64_t s_nodes = grooming::SolverOptions{}.node_budget;
  std::int64_t s_ms = grooming::SolverOptions{}.time_budget.count();
  bool s_opt_orient = false;
  auto* solve_cmd = app.add_subcommand("solve", "exact branch and bound");
  solve_cmd->add_option("--c", s_c)->required();
  solve_cmd->add_option("--n", s_n)->required();
  solve_cmd->add_option("--rule", s_rule)->check(CLI::IsMember({"all-forward", "explicit"}));
  solve_cmd->add_option("--orientation", s_orientation, "diameter choices for even N, e.g. 101");
  solve_cmd->add_flag("--optimize-orientation", s_opt_orient, "minimize over all diameter orientations");
  solve_cmd->add_option("--node-budget", s_nodes)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--time-budget-ms", s_ms)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--out", s_out);

  // validate
  std::string v_file;
  auto* validate_cmd = app.add_subcommand("validate", "check a solution file");
  validate_cmd->add_option("file", v_file)->required();

  // compare
  std::string cmp_c, cmp_n = "100", cmp_format = "json", cmp_out;
  auto* compare_cmd = app.add_subcommand("compare", "unidirectional vs bidirectional routing bounds");
  compare_cmd->add_option("--c", cmp_c)->required();
  compare_cmd->add_option("--n", cmp_n);
  compare_cmd->add_option("--format", cmp_format)->check(CLI::IsMember({"json", "csv", "text"}));
  compare_cmd->add_option("--out", cmp_out);

  // designs
  std::string d_kind, d_type, d_file, d_out;
  int d_v = 0, d_k = 3, d_q = 0;
  std::int64_t d_nodes = grooming::SearchBudget{}.nodes;
  auto* designs_cmd = app.add_subcommand("designs", "generate or validate block designs");
  designs_cmd->add_option("kind", d_kind, "sts | td3 | pg | ag | bibd | gdd3 | exists | validate")
      ->required()
      ->check(CLI::IsMember({"sts", "td3", "pg", "ag", "bibd", "gdd3", "exists", "validate"}));
  designs_cmd->add_option("--v", d_v, "points (sts, bibd) or order (td3)");
  designs_cmd->add_option("--k", d_k, "block size (bibd)");
  designs_cmd->add_option("--q", d_q, "plane order (pg, ag)");
  designs_cmd->add_option("--type", d_type, "group type, e.g. \"2^6 4^1\"");
  designs_cmd->add_option("--file", d_file, "design file (validate)");
  designs_cmd->add_option("--node-budget", d_nodes)->check(CLI::PositiveNumber);
  designs_cmd->add_option("--out", d_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*gamma_cmd) {
      auto table = grooming::gamma_table(parse_range(gt_c), parse_range(gt_p));
      for (int c : table.cs)
        if (c < 1) throw UsageError("--c values must be >= 1");
      if (gt_format == "csv") emit(grooming::io::to_csv(table), gt_out);
      else if (gt_format == "json") emit(dump(grooming::io::to_json(table)), gt_out);
      else emit(grooming::io::to_text(table), gt_out);
      return kOk;
    }

    if (*bound_cmd) {
      json all = json::array();
      std::ostringstream csv;
      csv << "C,N,bound,value,ceiling,formula\n";
      std::ostringstream text;
      for (int c : parse_range(b_c))
        for (int n : parse_range(b_n)) {
          if (c < 1 || n < 2) throw UsageError("need C >= 1 and N >= 2");
          json bounds = json::array();
          for (const auto& r : grooming::applicable_bounds(c, n)) {
            bounds.push_back(grooming::io::to_json(r));
            csv << c << "," << n << "," << r.name << "," << grooming::to_string(r.value) << "," << r.ceiling << ",\""
                << r.formula << "\"\n";
          }
          const auto best = grooming::lb_best(c, n);
          const auto w = grooming::wavelength_report(c, n);
          csv << c << "," << n << "," << w.name << "," << grooming::to_string(w.value) << "," << w.ceiling << ",\""
              << w.formula << "\"\n";
          text << "A(" << c << "," << n << ") >= " << best.ceiling << "  [" << best.name << ": " << best.formula
               << "]\n  wavelengths >= " << w.ceiling << "\n";
          all.push_back({{"c", c},
                         {"n", n},
                         {"bounds", bounds},
                         {"lb_best", grooming::io::to_json(best)},
                         {"wavelengths", grooming::io::to_json(w)},
                         {"chow_lin", grooming::io::to_json(grooming::lb_chow_lin(c, n))}});
        }
      if (b_format == "csv") emit(csv.str(), b_out);
      else if (b_format == "text") emit(text.str(), b_out);
      else emit(dump(all.size() == 1 ? all[0] : all), b_out);
      return kOk;
    }

    if (*construct_cmd) {
      if (k_c < 1 || k_n < 2) throw UsageError("need C >= 1 and N >= 2");
      auto sources = design_sources(cache);
      if (k_all) {
        json all = json::array();
        std::ostringstream text;
        for (const auto& r : grooming::all_constructions(k_c, k_n, sources)) {
          json j{{"construction", r.name}, {"applicable", r.applicable}};
          if (!r.note.empty()) j["note"] = r.note;
          if (r.applicable) {
            j["adm"] = r.achieved_adm;
            j["certificate"] = grooming::to_string(r.certificate);
            j["lower_bound"] = r.lower_bound.ceiling;
            if (r.predicted_adm) j["predicted_adm"] = *r.predicted_adm;
          }
          text << r.name << ": " << (r.applicable ? std::to_string(r.achieved_adm) + " ADMs" : "n/a") << "  "
               << r.note << "\n";
          all.push_back(j);
        }
        emit(k_format == "text" ? text.str() : dump(all), k_out);
        return kOk;
      }
      auto r = grooming::construct_named(k_name, k_c, k_n, sources);
      if (!r.applicable) {
        std::cerr << r.name << " does not apply: " << r.note << "\n";
        return kUsage;
      }
      if (k_format == "text") {
        std::ostringstream t;
        t << r.name << " C=" << k_c << " N=" << k_n << ": " << r.achieved_adm << " ADMs, lower bound "
          << r.lower_bound.ceiling << " (" << r.lower_bound.name << "), " << grooming::to_string(r.certificate)
          << "\n";
        emit(t.str(), k_out);
      } else {
        emit(dump(grooming::io::to_json(r)), k_out);
      }
      return kOk;
    }

    if (*solve_cmd) {
      auto inst = make_instance(s_c, s_n, s_rule, s_orientation);
      grooming::SolverOptions opt;
      opt.node_budget = s_nodes;
      opt.time_budget = std::chrono::milliseconds(s_ms);
      opt.optimize_orientation = s_opt_orient;
      if (s_opt_orient && !inst.even()) throw UsageError("--optimize-orientation needs even N");
      auto outcome = grooming::solve_exact(inst, opt);
      json j = grooming::io::to_json(outcome);
      j["lb_best"] = grooming::io::to_json(grooming::lb_best(s_c, s_n));
      emit(dump(j), s_out);
      return outcome.status == grooming::SolveStatus::kProvedOptimal ? kOk : kBudget;
    }

    if (*validate_cmd) {
      grooming::GroomingSolution s = grooming::io::read_solution(v_file);
      grooming::Verdict v = grooming::validate_solution(s);
      if (!v) {
        std::cerr << "INVALID: " << v.summary() << "\n";
        return kInvalid;
      }
      std::cout << "OK: N=" << s.instance.n() << " C=" << s.instance.c() << " blocks=" << s.blocks.size()
                << " adm=" << grooming::adm_count(s) << "\n";
      return kOk;
    }

    if (*compare_cmd) {
      json all = json::array();
      std::ostringstream csv, text;
      csv << "C,N,k,r,rho,eta,lb_bidirectional,lb_unidirectional,ratio,ratio_upper,chow_lin\n";
      for (int c : parse_range(cmp_c))
        for (int n : parse_range(cmp_n)) {
          if (c < 1 || n < 2) throw UsageError("need C >= 1 and N >= 2");
          auto r = grooming::compare_routings(c, n);
          auto cl = grooming::lb_chow_lin(c, n);
          json j = grooming::io::to_json(r);
          j["chow_lin_any_routing"] = grooming::io::to_json(cl);
          all.push_back(j);
          using grooming::to_string;
          csv << c << "," << n << "," << r.k << "," << r.r << "," << to_string(r.rho) << "," << to_string(r.eta) << ","
              << to_string(r.lb_bidirectional) << "," << to_string(r.lb_unidirectional) << "," << to_string(r.ratio)
              << "," << to_string(r.ratio_upper) << "," << cl.value << "\n";
          text << "C=" << c << " N=" << n << "\n"
               << "  symmetric shortest-path bound  N(N-1)/rho = " << to_string(r.lb_bidirectional) << "\n"
               << "  unidirectional bound           N(N-1)/(2 eta) = " << to_string(r.lb_unidirectional) << "\n"
               << "  ratio " << to_string(r.ratio) << " (at most " << to_string(r.ratio_upper) << ")\n"
               << "  Chow-Lin figure, any routing (comparison only): " << cl.value << "\n";
        }
      if (cmp_format == "csv") emit(csv.str(), cmp_out);
      else if (cmp_format == "text") emit(text.str(), cmp_out);
      else emit(dump(all.size() == 1 ? all[0] : all), cmp_out);
      return kOk;
    }

    if (*designs_cmd) {
      if (d_kind == "validate") {
        if (d_file.empty()) throw UsageError("designs validate needs --file");
        std::ifstream in(d_file);
        if (!in) throw UsageError("cannot open " + d_file);
        json j;
        try {
          in >> j;
        } catch (const json::parse_error& e) {
          throw grooming::io::SchemaError(std::string("malformed JSON: ") + e.what());
        }
        auto d = grooming::io::design_from_json(j);
        auto verdict = grooming::validate_design(d);
        if (!verdict) {
          std::cerr << "INVALID: " << verdict.issues.front() << "\n";
          return kInvalid;
        }
        std::cout << "OK: " << d.blocks.size() << " blocks on " << d.v << " points, type " << d.type().to_string()
                  << "\n";
        return kOk;
      }
      if (d_kind == "exists") {
        if (d_type.empty()) throw UsageError("designs exists needs --type");
        auto type = grooming::GroupType::parse(d_type);
        emit(dump({{"type", type.to_string()}, {"exists", grooming::to_string(grooming::gdd3_exists(type))}}), d_out);
        return kOk;
      }
      grooming::BlockDesign d;
      if (d_kind == "sts") {
        d = grooming::steiner_triple_system(d_v);
      } else if (d_kind == "td3") {
        d = grooming::transversal_design_3(d_v);
      } else if (d_kind == "pg") {
        d = grooming::projective_plane(d_q);
      } else if (d_kind == "ag") {
        d = grooming::affine_plane(d_q);
      } else if (d_kind == "bibd") {
        if (cache || grooming::io::DesignCache::from_environment()) d = design_sources(cache).bibd(d_v, d_k);
        else d = grooming::bibd(d_v, d_k, grooming::SearchBudget{d_nodes});
      } else {
        if (d_type.empty()) throw UsageError("designs gdd3 needs --type");
        d = design_sources(cache).gdd3(grooming::GroupType::parse(d_type));
      }
      emit(dump(grooming::io::to_json(d)), d_out);
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const grooming::io::SchemaError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kUsage;
  } catch (const grooming::DesignError& e) {
    std::cerr << "design: " << e.what() << "\n";
    switch (e.kind()) {
      case grooming::DesignError::Kind::kNonexistent:
      case grooming::DesignError::Kind::kUnknown: return kNoDesign;
      default: return kUsage;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
