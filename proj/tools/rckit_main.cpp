// Copyright 2026 The rckit Authors
//
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

// Command-line front end over the rckit C API: analysis reports for state
// files, bound-table and curve reproduction, Werner-family scans, channel
// audits, and spectrum-class dimensions.

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rckit.h"

namespace {

using nlohmann::json;

struct StateDeleter {
  void operator()(rck_state* p) const { rck_state_free(p); }
};
struct ChannelDeleter {
  void operator()(rck_channel* p) const { rck_channel_free(p); }
};
struct TableDeleter {
  void operator()(rck_bound_table* p) const { rck_bound_table_free(p); }
};
using StatePtr = std::unique_ptr<rck_state, StateDeleter>;
using ChannelPtr = std::unique_ptr<rck_channel, ChannelDeleter>;
using TablePtr = std::unique_ptr<rck_bound_table, TableDeleter>;

std::string take_string(char* text) {
  std::string out = text == nullptr ? "" : text;
  rck_string_free(text);
  return out;
}

void check(rck_status status) {
  if (status != RCK_OK) {
    throw std::runtime_error(std::string(rck_status_name(status)) + ": " +
                             rck_last_error());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

void parse_dims(const std::string& text, int* na, int* nb) {
  char extra = 0;
  if (std::sscanf(text.c_str(), "%dx%d%c", na, nb, &extra) != 2) {
    throw std::runtime_error("--dims expects AxB, got: " + text);
  }
}

// start:stop:count, endpoints included.
std::vector<double> parse_grid(const std::string& text) {
  double start = 0.0, stop = 0.0;
  int count = 0;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &start, &stop, &count,
                  &extra) != 3 ||
      count < 1) {
    throw std::runtime_error("--grid expects start:stop:count, got: " + text);
  }
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) {
    grid[i] = count == 1 ? start
                         : start + (stop - start) * i / double(count - 1);
  }
  return grid;
}

// start:stop:step, endpoints included up to rounding.
std::vector<double> parse_scan(const std::string& text) {
  double start = 0.0, stop = 0.0, step = 0.0;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step,
                  &extra) != 3 ||
      step <= 0.0) {
    throw std::runtime_error("scan expects start:stop:step, got: " + text);
  }
  std::vector<double> points;
  for (double p = start; p <= stop + 0.5 * step; p += step) {
    points.push_back(p < stop ? p : stop);
  }
  return points;
}

std::vector<int> parse_multiplicities(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::runtime_error("empty multiplicity list");
  return out;
}

std::string join_doubles(const double* values, int count, const char* fmt) {
  std::string out;
  char buf[64];
  for (int i = 0; i < count; ++i) {
    std::snprintf(buf, sizeof(buf), fmt, values[i]);
    if (i > 0) out += ", ";
    out += buf;
  }
  return out;
}

bool has_exact_separability(int na, int nb) {
  return (na == 2 && (nb == 2 || nb == 3)) || (na == 3 && nb == 2);
}

json verdict_to_json(const rck_verdict& v) {
  return json{{"entangled", v.entangled != 0},
              {"l", v.l},
              {"value", v.value},
              {"bound", v.bound}};
}

struct CommonOpts {
  uint64_t seed = 0;
  bool json_out = false;
  std::string out_path;
  std::string dims = "";
  int l = 0;
  int restarts = 0;
  int iters = 0;
  int terms = 0;
  bool fail_on_entangled = false;
};

rck_search_config make_config(const CommonOpts& opts, int set) {
  rck_search_config config;
  rck_search_config_default(&config);
  config.seed = opts.seed;
  config.set = set;
  if (opts.restarts > 0) config.restarts = opts.restarts;
  if (opts.iters > 0) config.iters_per_restart = opts.iters;
  if (opts.terms > 0) config.sep_terms = opts.terms;
  return config;
}

// ---- analyze ----

int cmd_analyze(const std::string& path, const std::string& bounds_path,
                const CommonOpts& opts) {
  const std::string text = read_file(path);
  rck_state* raw = nullptr;
  check(rck_state_from_json(text.c_str(), &raw));
  StatePtr state(raw);

  int na = 0, nb = 0;
  check(rck_state_dims(state.get(), &na, &nb));
  double pur = 0.0;
  check(rck_state_purity(state.get(), &pur));

  double schmidt[16];
  int d = 0, rank = 0;
  check(rck_state_schmidt(state.get(), schmidt, 16, &d, &rank));
  double polys[16];
  int pd = 0;
  check(rck_state_sym_polys(state.get(), polys, 16, &pd));

  rck_verdict rc;
  check(rck_state_rc_check(state.get(), &rc));

  rck_bound_table* naive_raw = nullptr;
  check(rck_naive_table(na, nb, &naive_raw));
  TablePtr naive(naive_raw);
  double naive_values[16];
  int naive_count = 0;
  check(rck_bound_table_values(naive.get(), naive_values, 16, &naive_count));
  rck_verdict naive_verdict;
  check(rck_state_rcl_check(state.get(), naive.get(), &naive_verdict));

  TablePtr strict;
  rck_verdict strict_verdict{};
  const char* strict_kind = nullptr;
  if (!bounds_path.empty()) {
    const std::string table_text = read_file(bounds_path);
    rck_bound_table* strict_raw = nullptr;
    check(rck_bound_table_from_json(table_text.c_str(), &strict_raw));
    strict.reset(strict_raw);
    check(rck_state_rcl_check(state.get(), strict.get(), &strict_verdict));
    check(rck_bound_table_kind(strict.get(), &strict_kind));
  }

  double min_eig = 0.0;
  int is_ppt = 0;
  check(rck_state_ppt(state.get(), &min_eig, &is_ppt));
  const bool exact_2xn = has_exact_separability(na, nb);
  int separable = 0;
  if (exact_2xn) {
    check(rck_state_is_separable_2xn(state.get(), &separable));
  }

  bool entangled = rc.entangled != 0 || naive_verdict.entangled != 0 ||
                   (strict != nullptr && strict_verdict.entangled != 0) ||
                   is_ppt == 0;

  if (opts.json_out) {
    json report;
    report["dims"] = {na, nb};
    report["purity"] = pur;
    report["schmidt"] = {
        {"values", std::vector<double>(schmidt, schmidt + d)},
        {"rank", rank}};
    report["m"] = std::vector<double>(polys, polys + pd);
    report["rc"] = verdict_to_json(rc);
    report["naive"] = verdict_to_json(naive_verdict);
    report["naive"]["bounds"] =
        std::vector<double>(naive_values, naive_values + naive_count);
    if (strict != nullptr) {
      report["strict"] = verdict_to_json(strict_verdict);
      report["strict"]["kind"] = strict_kind;
    }
    report["ppt"] = {{"min_eigenvalue", min_eig}, {"is_ppt", is_ppt != 0}};
    if (exact_2xn) report["separable_2xn"] = separable != 0;
    report["entangled"] = entangled;
    char* state_json = nullptr;
    check(rck_state_to_json(state.get(), &state_json));
    report["state"] = json::parse(take_string(state_json));
    std::printf("%s\n", report.dump(2).c_str());
  } else {
    std::printf("dims: %dx%d\n", na, nb);
    std::printf("purity: %.6f\n", pur);
    std::printf("Schmidt spectrum (rank %d): %s\n", rank,
                join_doubles(schmidt, d, "%.6f").c_str());
    std::printf("M^[l]: %s\n", join_doubles(polys, pd, "%.6f").c_str());
    if (rc.entangled != 0) {
      std::printf("RC: ENTANGLED (M1=%.4f > 1)\n", rc.value);
    } else {
      std::printf("RC: inconclusive (M1=%.4f <= 1)\n", rc.value);
    }
    if (naive_verdict.entangled != 0) {
      std::printf("naive bounds: ENTANGLED (M%d=%.6f > y%d=%.6f)\n",
                  naive_verdict.l, naive_verdict.value, naive_verdict.l,
                  naive_verdict.bound);
    } else {
      std::printf("naive bounds: inconclusive (closest M%d=%.6f <= %.6f)\n",
                  naive_verdict.l, naive_verdict.value, naive_verdict.bound);
    }
    if (strict != nullptr) {
      if (strict_verdict.entangled != 0) {
        std::printf("strict bounds (%s): ENTANGLED (M%d=%.6f > %.6f)\n",
                    strict_kind, strict_verdict.l, strict_verdict.value,
                    strict_verdict.bound);
      } else {
        std::printf(
            "strict bounds (%s): inconclusive (closest M%d=%.6f <= %.6f)\n",
            strict_kind, strict_verdict.l, strict_verdict.value,
            strict_verdict.bound);
      }
    }
    if (exact_2xn) {
      std::printf("PPT: %s (min eigenvalue %.6f)\n",
                  separable != 0 ? "separable" : "ENTANGLED", min_eig);
    } else {
      std::printf("PPT: %s (min eigenvalue %.6f)\n",
                  is_ppt != 0 ? "holds" : "violated", min_eig);
    }
  }
  return opts.fail_on_entangled && entangled ? 1 : 0;
}

// ---- bounds ----

int cmd_bounds(const CommonOpts& opts, const std::string& set_name) {
  int na = 0, nb = 0;
  parse_dims(opts.dims, &na, &nb);
  int set = RCK_SET_RC_BALL;
  if (set_name == "separable") {
    set = RCK_SET_SEPARABLE;
  } else if (set_name == "rc-ball") {
    set = RCK_SET_RC_BALL;
  } else if (set_name == "all") {
    set = RCK_SET_ALL;
  } else {
    throw std::runtime_error("--set expects separable|rc-ball|all");
  }
  const rck_search_config config = make_config(opts, set);
  double value = 0.0;
  int best_restart = 0;
  rck_state* argmax_raw = nullptr;
  check(rck_maximize(na, nb, opts.l, &config, &value, &best_restart,
                     &argmax_raw));
  StatePtr argmax(argmax_raw);

  if (opts.json_out) {
    json report;
    report["dims"] = {na, nb};
    report["l"] = opts.l;
    report["set"] = set_name;
    report["value"] = value;
    report["best_restart"] = best_restart;
    report["seed"] = opts.seed;
    std::printf("%s\n", report.dump(2).c_str());
  } else {
    std::printf("max M^[%d] over %s states in %dx%d: %.6f\n", opts.l,
                set_name.c_str(), na, nb, value);
    std::printf("best restart: %d\n", best_restart);
  }
  if (!opts.out_path.empty()) {
    char* state_json = nullptr;
    check(rck_state_to_json(argmax.get(), &state_json));
    write_file(opts.out_path, take_string(state_json));
    if (!opts.json_out) {
      std::printf("argmax written to %s\n", opts.out_path.c_str());
    }
  }
  return 0;
}

// ---- tables ----

int cmd_tables(const CommonOpts& opts) {
  int na = 0, nb = 0;
  parse_dims(opts.dims, &na, &nb);
  const rck_search_config config = make_config(opts, RCK_SET_SEPARABLE);

  rck_bound_table* sep_raw = nullptr;
  rck_bound_table* ball_raw = nullptr;
  check(rck_reproduce_tables(na, nb, &config, &sep_raw, &ball_raw));
  TablePtr sep(sep_raw), ball(ball_raw);

  rck_bound_table* naive_raw = nullptr;
  check(rck_naive_table(na, nb, &naive_raw));
  TablePtr naive(naive_raw);

  double naive_v[16], sep_v[16], ball_v[16];
  int d = 0, tmp = 0;
  check(rck_bound_table_values(naive.get(), naive_v, 16, &d));
  check(rck_bound_table_values(sep.get(), sep_v, 16, &tmp));
  check(rck_bound_table_values(ball.get(), ball_v, 16, &tmp));

  char* sep_json = nullptr;
  char* ball_json = nullptr;
  check(rck_bound_table_to_json(sep.get(), &sep_json));
  check(rck_bound_table_to_json(ball.get(), &ball_json));
  const std::string prefix = opts.out_path.empty()
                                 ? "bounds-" + std::to_string(na) + "x" +
                                       std::to_string(nb)
                                 : opts.out_path;
  const std::string sep_path = prefix + "-separable.json";
  const std::string ball_path = prefix + "-rcball.json";
  write_file(sep_path, take_string(sep_json));
  write_file(ball_path, take_string(ball_json));

  if (opts.json_out) {
    json report;
    report["dims"] = {na, nb};
    report["naive"] = std::vector<double>(naive_v, naive_v + d);
    report["strict_separable"] = std::vector<double>(sep_v, sep_v + d);
    report["strict_rc_ball"] = std::vector<double>(ball_v, ball_v + d);
    report["files"] = {sep_path, ball_path};
    std::printf("%s\n", report.dump(2).c_str());
  } else {
    std::printf("%-3s %-12s %-18s %-18s\n", "l", "naive",
                "strict-separable", "strict-rc-ball");
    for (int l = 1; l <= d; ++l) {
      std::printf("%-3d %-12.6g %-18.6g %-18.6g\n", l, naive_v[l - 1],
                  sep_v[l - 1], ball_v[l - 1]);
    }
    std::printf("wrote %s\n", sep_path.c_str());
    std::printf("wrote %s\n", ball_path.c_str());
  }
  return 0;
}

// ---- curve ----

int cmd_curve(const CommonOpts& opts, const std::string& grid_text) {
  int na = 0, nb = 0;
  parse_dims(opts.dims, &na, &nb);
  const std::vector<double> grid = parse_grid(grid_text);
  const rck_search_config config = make_config(opts, RCK_SET_ALL);
  char* csv = nullptr;
  check(rck_curve_csv(na, nb, opts.l, grid.data(),
                      static_cast<int>(grid.size()), &config, &csv));
  const std::string text = take_string(csv);
  const std::string path =
      opts.out_path.empty() ? "curve.csv" : opts.out_path;
  write_file(path, text);
  std::printf("wrote %s (%d points)\n", path.c_str(),
              static_cast<int>(grid.size()));
  return 0;
}

// ---- werner ----

int cmd_werner(const std::string& scan_text, const CommonOpts& opts) {
  const std::vector<double> points = parse_scan(scan_text);
  bool any_entangled = false;
  json rows = json::array();
  for (double p : points) {
    rck_state* raw = nullptr;
    check(rck_state_werner(p, &raw));
    StatePtr state(raw);
    double polys[4];
    int pd = 0;
    check(rck_state_sym_polys(state.get(), polys, 4, &pd));
    rck_verdict rc;
    check(rck_state_rc_check(state.get(), &rc));
    double min_eig = 0.0;
    int is_ppt = 0;
    check(rck_state_ppt(state.get(), &min_eig, &is_ppt));
    int separable = 0;
    check(rck_state_is_separable_2xn(state.get(), &separable));
    const bool entangled = rc.entangled != 0 || separable == 0;
    any_entangled = any_entangled || entangled;
    if (opts.json_out) {
      rows.push_back(json{{"p", p},
                          {"m", std::vector<double>(polys, polys + pd)},
                          {"rc_entangled", rc.entangled != 0},
                          {"ppt_separable", separable != 0}});
    } else {
      std::printf("p=%-8.6g M1=%-10.6g M2=%-10.6g M3=%-10.6g M4=%-10.6g "
                  "RC: %s  PPT: %s\n",
                  p, polys[0], polys[1], polys[2], polys[3],
                  rc.entangled != 0 ? "ENTANGLED" : "inconclusive",
                  separable != 0 ? "separable" : "ENTANGLED");
    }
  }
  if (opts.json_out) std::printf("%s\n", rows.dump(2).c_str());
  return opts.fail_on_entangled && any_entangled ? 1 : 0;
}

// ---- channel ----

int cmd_channel(const std::string& path, const CommonOpts& opts) {
  const std::string text = read_file(path);
  rck_channel* raw = nullptr;
  check(rck_channel_from_json(text.c_str(), &raw));
  ChannelPtr channel(raw);
  int n_in = 0, n_out = 0;
  check(rck_channel_dims(channel.get(), &n_in, &n_out));

  const rck_status cpt = rck_channel_validate_cpt(channel.get());
  const bool is_cpt = cpt == RCK_OK;
  std::string cpt_message;
  if (!is_cpt && cpt != RCK_NOT_CPT) check(cpt);
  if (!is_cpt) cpt_message = rck_last_error();

  double spectrum[16];
  int count = 0, rank = 0;
  check(rck_channel_spectrum(channel.get(), spectrum, 16, &count, &rank));

  rck_verdict eb{};
  int eb_exact = -1;
  if (is_cpt) {
    check(rck_channel_eb_check(channel.get(), &eb));
    if (has_exact_separability(n_out, n_in)) {
      int value = 0;
      check(rck_channel_is_eb_2xn(channel.get(), &value));
      eb_exact = value;
    }
  }

  const bool not_eb = is_cpt && eb.entangled != 0;
  if (opts.json_out) {
    json report;
    report["n_in"] = n_in;
    report["n_out"] = n_out;
    report["cpt"] = is_cpt;
    if (!is_cpt) report["cpt_error"] = cpt_message;
    report["spectrum"] = {
        {"values", std::vector<double>(spectrum, spectrum + count)},
        {"rank", rank}};
    if (is_cpt) report["eb_check"] = verdict_to_json(eb);
    if (eb_exact >= 0) report["eb_exact"] = eb_exact != 0;
    std::printf("%s\n", report.dump(2).c_str());
  } else {
    std::printf("channel: nIn=%d nOut=%d\n", n_in, n_out);
    if (is_cpt) {
      std::printf("CPT: valid\n");
    } else {
      std::printf("CPT: INVALID (%s)\n", cpt_message.c_str());
    }
    std::printf("spectrum (rank %d): %s\n", rank,
                join_doubles(spectrum, count, "%.6f").c_str());
    if (is_cpt) {
      if (eb.entangled != 0) {
        std::printf("EB check: NotEB (M%d=%.6f > bound=%.6f)\n", eb.l,
                    eb.value, eb.bound);
      } else {
        std::printf("EB check: inconclusive (closest M%d=%.6f <= %.6f)\n",
                    eb.l, eb.value, eb.bound);
      }
      if (eb_exact >= 0) {
        std::printf("EB exact (2xN): %s\n",
                    eb_exact != 0 ? "entanglement breaking"
                                  : "not entanglement breaking");
      }
    }
  }
  return opts.fail_on_entangled && not_eb ? 1 : 0;
}

// ---- dim ----

int cmd_dim(int d, const std::string& mults_text) {
  const std::vector<int> mults = parse_multiplicities(mults_text);
  long out = 0;
  check(rck_class_dimension(d, mults.data(),
                            static_cast<int>(mults.size()), &out));
  std::printf("%ld\n", out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite entanglement detection via realignment "
               "criteria, bound searches, and channel audits"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string state_path, bounds_path, channel_path;
  std::string set_name = "rc-ball";
  std::string grid_text = "0.6:1.0:20";
  std::string scan_text = "0:1:0.25";
  std::string mults_text;
  int dim_d = 0;

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze a state file");
  analyze->add_option("path", state_path, "StateFile JSON path")->required();
  analyze->add_option("--bounds", bounds_path,
                      "strict bound-table JSON for extra verdicts");
  analyze->add_flag("--json", opts.json_out, "machine-readable report");
  analyze->add_flag("--fail-on-entangled", opts.fail_on_entangled,
                    "exit 1 when any criterion flags entanglement");

  CLI::App* bounds = app.add_subcommand(
      "bounds", "Maximize M^[l] over a search set");
  bounds->add_option("--dims", opts.dims, "dimensions AxB")->required();
  bounds->add_option("--l", opts.l, "polynomial degree")->required();
  bounds->add_option("--set", set_name, "separable|rc-ball|all");
  bounds->add_option("--seed", opts.seed, "RNG seed")->required();
  bounds->add_option("--restarts", opts.restarts, "search restarts");
  bounds->add_option("--iters", opts.iters, "iterations per restart");
  bounds->add_option("--terms", opts.terms, "separable mixture terms");
  bounds->add_option("--out", opts.out_path, "write argmax StateFile here");
  bounds->add_flag("--json", opts.json_out, "machine-readable report");

  CLI::App* tables = app.add_subcommand(
      "tables", "Reproduce strict bound tables for 2x2 or 2x3");
  tables->add_option("--dims", opts.dims, "dimensions AxB")->required();
  tables->add_option("--seed", opts.seed, "RNG seed")->required();
  tables->add_option("--restarts", opts.restarts, "search restarts");
  tables->add_option("--iters", opts.iters, "iterations per restart");
  tables->add_option("--terms", opts.terms, "separable mixture terms");
  tables->add_option("--out", opts.out_path, "output file prefix");
  tables->add_flag("--json", opts.json_out, "machine-readable report");

  CLI::App* curve = app.add_subcommand(
      "curve", "Max M^[l] at fixed M^[1] over a grid, CSV output");
  curve->add_option("--dims", opts.dims, "dimensions AxB")->required();
  curve->add_option("--l", opts.l, "polynomial degree")->required();
  curve->add_option("--grid", grid_text, "m1 grid start:stop:count");
  curve->add_option("--seed", opts.seed, "RNG seed")->required();
  curve->add_option("--restarts", opts.restarts, "search restarts");
  curve->add_option("--iters", opts.iters, "iterations per restart");
  curve->add_option("--terms", opts.terms, "separable mixture terms");
  curve->add_option("--out", opts.out_path, "CSV output path");

  CLI::App* werner = app.add_subcommand(
      "werner", "Scan the Werner family p in start:stop:step");
  werner->add_option("scan", scan_text, "grid start:stop:step");
  werner->add_flag("--json", opts.json_out, "machine-readable report");
  werner->add_flag("--fail-on-entangled", opts.fail_on_entangled,
                   "exit 1 when any grid point is entangled");

  CLI::App* channel = app.add_subcommand("channel",
                                         "Audit a channel file");
  channel->add_option("path", channel_path, "ChannelFile JSON path")
      ->required();
  channel->add_flag("--json", opts.json_out, "machine-readable report");
  channel->add_flag("--fail-on-entangled", opts.fail_on_entangled,
                    "exit 1 when the channel is provably NotEB");

  CLI::App* dim = app.add_subcommand(
      "dim", "Dimension of a spectrum equivalence class");
  dim->add_option("d", dim_d, "total dimension")->required();
  dim->add_option("multiplicities", mults_text,
                  "comma-separated eigenvalue multiplicities")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return cmd_analyze(state_path, bounds_path, opts);
    if (*bounds) return cmd_bounds(opts, set_name);
    if (*tables) return cmd_tables(opts);
    if (*curve) return cmd_curve(opts, grid_text);
    if (*werner) return cmd_werner(scan_text, opts);
    if (*channel) return cmd_channel(channel_path, opts);
    if (*dim) return cmd_dim(dim_d, mults_text);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
