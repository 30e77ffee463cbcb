/* Copyright 2026 The Multispace Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "multispace/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "multispace/io.hpp"

namespace msp::cli {

namespace {

using io::Json;

struct Options {
  std::string field = "2^1";
  std::string big;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t d_min = 1;
  std::size_t radius = 0;
  std::size_t s = 0;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::uint64_t seeds = 1;
  std::uint64_t limit = kDefaultEnumerationLimit;
  std::string format;
  std::string output;
  std::string a, b, w, vectors, poly, code, mode = "full-rank", trial_log;
  bool optimal = false;
  bool canonicalize = false;
  bool random_generators = false;
};

std::string read_text(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '['))
    return source;
  std::ifstream in(source);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read '" + source + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json(const std::string& source) { return io::parse_json(read_text(source)); }

std::string basis_text(const Subspace& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < s.ambient_dim(); ++c) os << (c ? "," : "") << s.basis().at(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string describe(const Multispace& w) {
  std::ostringstream os;
  os << "rank " << w.rank() << ", dim " << w.dim() << ", height " << w.height() << ", basis "
     << basis_text(w.underlying());
  return os.str();
}

std::string count_text(const BigCount& c) { return c.str(); }

std::string node_id(const Multispace& w) {
  std::ostringstream os;
  os << w.rank() << ':' << w.dim() << ':' << std::hex << std::setw(16) << std::setfill('0')
     << w.hash();
  return os.str();
}

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err, bool tty)
      : opt_(opt), out_(out), err_(err), tty_(tty) {}

  std::string format(std::initializer_list<const char*> allowed, const char* fallback = nullptr) const {
    std::string f = opt_.format;
    if (f.empty()) f = fallback ? fallback : (tty_ ? "table" : "json");
    for (const char* a : allowed)
      if (f == a) return f;
    throw Error(ErrorCode::kConfigInvalid, "format '" + f + "' not supported by this command");
  }

  // Writes to --output when given, else to stdout.
  void emit(const std::string& text) {
    if (opt_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(opt_.output, std::ios::binary);
    if (!file) throw Error(ErrorCode::kConfigInvalid, "cannot write '" + opt_.output + "'");
    file << text;
  }

  void emit_json(const Json& j) { emit(j.dump(2) + "\n"); }

  int count() {
    const Field field = io::parse_field_spec(opt_.field);
    const std::string f = format({"table", "json", "csv"});
    std::vector<BigCount> counts;
    BigCount cumulative = 0;
    for (std::size_t j = 0; j <= opt_.m; ++j) {
      counts.push_back(count_multispaces(opt_.n, j, field.order()));
      cumulative += counts.back();
    }
    std::ostringstream os;
    if (f == "json") {
      Json j;
      j["q-spec"] = field.spec();
      j["n"] = opt_.n;
      j["m"] = opt_.m;
      Json arr = Json::array();
      for (const auto& c : counts) arr.push_back(count_text(c));
      j["counts"] = std::move(arr);
      j["cumulative"] = count_text(cumulative);
      emit_json(j);
      return kExitOk;
    }
    BigCount running = 0;
    os << (f == "csv" ? "j,count,cumulative\n" : "j\t|M_q(n,j)|\tcumulative\n");
    const char sep = f == "csv" ? ',' : '\t';
    for (std::size_t j = 0; j < counts.size(); ++j) {
      running += counts[j];
      os << j << sep << counts[j] << sep << running << '\n';
    }
    emit(os.str());
    return kExitOk;
  }

  int enumerate() {
    const Field field = io::parse_field_spec(opt_.field);
    const std::string f = format({"table", "json"});
    const auto all = enumerate_multispaces(field, opt_.n, opt_.m, opt_.limit);
    if (f == "json") {
      Json arr = Json::array();
      for (const auto& w : all) arr.push_back(io::multispace_to_json(w));
      emit_json(arr);
    } else {
      std::ostringstream os;
      for (std::size_t i = 0; i < all.size(); ++i) os << i << '\t' << describe(all[i]) << '\n';
      emit(os.str());
    }
    err_ << "multispaces: " << all.size() << '\n';
    return kExitOk;
  }

  int hasse() {
    const Field field = io::parse_field_spec(opt_.field);
    const std::string f = format({"dot", "json"}, "dot");
    Lattice lattice(field, opt_.n, opt_.m, opt_.limit);
    if (f == "json") {
      Json j;
      Json nodes = Json::array();
      for (const auto& w : lattice.elements()) {
        Json node = io::multispace_to_json(w);
        node["id"] = node_id(w);
        nodes.push_back(std::move(node));
      }
      Json edges = Json::array();
      for (auto [lo, hi] : lattice.hasse_edges())
        edges.push_back(Json::array({node_id(lattice[lo]), node_id(lattice[hi])}));
      j["nodes"] = std::move(nodes);
      j["edges"] = std::move(edges);
      emit_json(j);
    } else {
      std::ostringstream os;
      os << "digraph multispaces {\n  rankdir=BT;\n  node [shape=ellipse];\n";
      std::size_t i = 0;
      for (std::size_t r = 0; r <= opt_.m; ++r) {
        os << "  subgraph cluster_rank_" << r << " {\n    label=\"rank " << r
           << "\";\n    rank=same;\n";
        for (; i < lattice.size() && lattice[i].rank() == r; ++i) {
          const Multispace& w = lattice[i];
          os << "    \"" << node_id(w) << "\" [label=\"" << node_id(w) << "\"";
          if (w.height() == 0) os << ", style=filled, fillcolor=lightblue";
          os << "];\n";
        }
        os << "  }\n";
      }
      for (auto [lo, hi] : lattice.hasse_edges())
        os << "  \"" << node_id(lattice[lo]) << "\" -> \"" << node_id(lattice[hi]) << "\";\n";
      os << "}\n";
      emit(os.str());
    }
    err_ << "nodes: " << lattice.size() << "\nedges: " << lattice.hasse_edges().size() << '\n';
    return kExitOk;
  }

  std::pair<Multispace, Multispace> pair() {
    if (opt_.a.empty() || opt_.b.empty())
      throw Error(ErrorCode::kConfigInvalid, "--a and --b are required");
    return {io::multispace_from_json(load_json(opt_.a), opt_.canonicalize),
            io::multispace_from_json(load_json(opt_.b), opt_.canonicalize)};
  }

  int distance_cmd() {
    const std::string f = format({"table", "json"});
    const auto [a, b] = pair();
    const DistanceParts parts = distance_parts(a, b);
    if (parts.total != parts.underlying + parts.height) {
      err_ << "distance decomposition violated\n";
      return kExitViolation;
    }
    if (f == "json") {
      Json j;
      j["distance"] = parts.total;
      j["underlying"] = parts.underlying;
      j["height"] = parts.height;
      emit_json(j);
    } else {
      std::ostringstream os;
      os << "distance " << parts.total << " = " << parts.underlying << " (underlying) + "
         << parts.height << " (height)\n";
      emit(os.str());
    }
    return kExitOk;
  }

  int multispace_result(const Multispace& w) {
    const std::string f = format({"table", "json"});
    if (f == "json")
      emit_json(io::multispace_to_json(w));
    else
      emit(describe(w) + "\n");
    return kExitOk;
  }

  int meet_cmd() {
    const auto [a, b] = pair();
    return multispace_result(meet(a, b));
  }

  int join_cmd() {
    const auto [a, b] = pair();
    return multispace_result(join(a, b));
  }

  int mspan_cmd() {
    const Field field = io::parse_field_spec(opt_.field);
    const Json rows = load_json(opt_.vectors);
    if (!rows.is_array()) throw Error(ErrorCode::kParseError, "--vectors must be a JSON array");
    VectorMultiset b(field, opt_.n);
    for (const auto& r : rows) {
      std::vector<Elem> coords;
      try {
        coords = r.get<std::vector<Elem>>();
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::kParseError, e.what());
      }
      b.push_back(FqVector(field, std::move(coords)));
    }
    return multispace_result(mspan(b));
  }

  int poly_cmd() {
    const std::string f = format({"table", "json"});
    const Multispace w = io::multispace_from_json(load_json(opt_.w), opt_.canonicalize);
    const Extension ext = Extension::build(w.field(), static_cast<std::uint32_t>(w.ambient_dim()));
    const LinearizedPoly poly = poly_from_multispace(w, ext);
    const auto l = poly.coefficient_subfield_degree(ext.degree());
    if (f == "json") {
      Json j = io::linearized_to_json(poly);
      j["subfield-degree"] = l;
      emit_json(j);
    } else {
      emit(poly.to_text() + "\n");
      err_ << "field: " << ext.big().spec() << "\nsubfield degree: " << l << '\n';
    }
    return kExitOk;
  }

  int roots_cmd() {
    // With --big the polynomial is in text form; otherwise JSON.
    const LinearizedPoly poly = [&] {
      if (opt_.big.empty()) return io::linearized_from_json(load_json(opt_.poly));
      std::string text = opt_.poly;
      if (std::ifstream in(opt_.poly); in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      return LinearizedPoly::parse_text(text, io::parse_field_spec(opt_.big),
                                        io::parse_field_spec(opt_.field).order());
    }();
    const Field& big = poly.field();
    // Base field: --field when its order matches base-q, else the default
    // modulus for that order.
    const Field base = [&] {
      const Field given = io::parse_field_spec(opt_.field);
      if (given.order() == poly.base_order()) return given;
      std::uint32_t e = 0, q = 1;
      while (q < poly.base_order()) {
        q *= big.characteristic();
        ++e;
      }
      if (q != poly.base_order())
        throw Error(ErrorCode::kContextMismatch, "base-q is not a power of the characteristic");
      return Field::create(big.characteristic(), e);
    }();
    if (big.degree() % base.degree() != 0)
      throw Error(ErrorCode::kContextMismatch, "field is not an extension of the base");
    const Extension ext = Extension::build(base, big.degree() / base.degree());
    if (ext.big() != big)
      throw Error(ErrorCode::kContextMismatch,
                  "polynomial field " + big.spec() + " differs from " + ext.big().spec());
    return multispace_result(roots_multiset(poly, ext));
  }

  int search_cmd() {
    const Field field = io::parse_field_spec(opt_.field);
    const std::string f = format({"json", "csv"}, "json");
    const GreedySweep sweep =
        greedy_sweep(field, opt_.n, opt_.m, opt_.d_min, opt_.seed, opt_.seeds, opt_.limit);
    const MultispaceCode& greedy = sweep.code;
    std::optional<MultispaceCode> optimal;
    if (opt_.optimal)
      optimal = exhaustive_optimal_code(field, opt_.n, opt_.m, opt_.d_min, opt_.limit);
    const BigCount bound = sphere_packing_bound(field, opt_.n, opt_.m, opt_.d_min, opt_.limit);
    const MultispaceCode& chosen = optimal ? *optimal : greedy;

    if (chosen.size() >= 2 && min_distance(chosen) < opt_.d_min) {
      err_ << "code violates its minimum distance\n";
      return kExitViolation;
    }
    if (optimal && (optimal->size() < greedy.size() || BigCount(optimal->size()) > bound)) {
      err_ << "optimal code size inconsistent with greedy or packing bound\n";
      return kExitViolation;
    }
    if (f == "csv") {
      std::ostringstream os;
      io::write_search_csv(os, {{field.order(), opt_.n, opt_.m, opt_.d_min, greedy.size(),
                                 optimal ? std::optional(optimal->size()) : std::nullopt, bound,
                                 sweep.seed}});
      emit(os.str());
    } else {
      emit_json(io::code_to_json(chosen));
    }
    err_ << "size: " << chosen.size() << "\nmin_distance: ";
    if (chosen.size() >= 2)
      err_ << min_distance(chosen);
    else
      err_ << "inf";
    err_ << "\ngreedy_size: " << greedy.size() << "\nseed: " << sweep.seed;
    if (optimal) err_ << "\noptimal_size: " << optimal->size();
    err_ << "\npacking_bound: " << bound << '\n';
    return kExitOk;
  }

  int ball_cmd() {
    const std::string f = format({"table", "json"});
    const Multispace w = io::multispace_from_json(load_json(opt_.w), opt_.canonicalize);
    const BallProfile ball = ball_size(w, opt_.radius, opt_.m, opt_.limit);
    if (f == "json") {
      Json j;
      j["center"] = io::multispace_to_json(w);
      j["radius"] = ball.radius;
      j["m_max"] = opt_.m;
      j["size"] = count_text(ball.size);
      emit_json(j);
    } else {
      emit(count_text(ball.size) + "\n");
    }
    return kExitOk;
  }

  int bound_cmd() {
    const Field field = io::parse_field_spec(opt_.field);
    const std::string f = format({"table", "json"});
    const BigCount bound = sphere_packing_bound(field, opt_.n, opt_.m, opt_.d_min, opt_.limit);
    if (f == "json") {
      Json j;
      j["q-spec"] = field.spec();
      j["n"] = opt_.n;
      j["m_max"] = opt_.m;
      j["d_min"] = opt_.d_min;
      j["packing_bound"] = count_text(bound);
      emit_json(j);
    } else {
      emit(count_text(bound) + "\n");
    }
    return kExitOk;
  }

  void summary_table(std::ostream& os, const Json& j) {
    for (const auto& [key, value] : j.items()) {
      if (key == "histogram") {
        os << "histogram:";
        for (const auto& [d, c] : value.items()) os << ' ' << d << '=' << c;
        os << '\n';
      } else {
        os << key << ": " << value << '\n';
      }
    }
  }

  int simulate_cmd() {
    const std::string f = format({"table", "json"});
    ChannelConfig cfg;
    cfg.mode = parse_channel_mode(opt_.mode);
    cfg.s = opt_.s;
    cfg.trials = opt_.trials;
    cfg.seed = opt_.seed;
    cfg.random_generators = opt_.random_generators;

    Json summary;
    std::size_t violations = 0;
    std::vector<TrialRecord> records;
    std::vector<TrialRecord>* sink = opt_.trial_log.empty() ? nullptr : &records;
    if (!opt_.code.empty()) {
      const MultispaceCode code = io::code_from_json(load_json(opt_.code), opt_.canonicalize);
      const EndToEndSummary s = end_to_end(code, cfg, sink);
      summary = io::summary_to_json(s);
      violations = s.violations;
    } else if (!opt_.w.empty()) {
      const Multispace w = io::multispace_from_json(load_json(opt_.w), opt_.canonicalize);
      const TrialSummary s = run_trials(w, cfg, sink);
      summary = io::summary_to_json(s);
      violations = s.violations;
    } else {
      throw Error(ErrorCode::kConfigInvalid, "simulate needs --code or --w");
    }
    if (sink) {
      std::ofstream log(opt_.trial_log, std::ios::binary);
      if (!log) throw Error(ErrorCode::kConfigInvalid, "cannot write '" + opt_.trial_log + "'");
      io::write_trial_csv(log, records);
    }
    if (f == "json") {
      emit_json(summary);
    } else {
      std::ostringstream os;
      summary_table(os, summary);
      emit(os.str());
    }
    if (violations > 0) {
      err_ << "violations: " << violations << '\n';
      return kExitViolation;
    }
    return kExitOk;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  bool tty_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool out_is_tty) {
  Options opt;
  CLI::App app{"Vector multispaces over F_q^n: lattice, counting, codes, channel simulation"};
  app.name("multispace");
  app.require_subcommand(1);

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("-q,--field", opt.field, "field spec p^e or p^e/modulus")
        ->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("-f,--format", opt.format, "json, csv, dot or table");
    sub->add_option("-o,--output", opt.output, "write the result to this file");
  };
  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--limit", opt.limit, "maximum q^n for enumerations")->capture_default_str();
  };
  auto add_canon = [&](CLI::App* sub) {
    sub->add_flag("--canonicalize", opt.canonicalize, "accept bases not in RREF");
  };

  auto* count = app.add_subcommand("count", "number of multispaces of each rank");
  add_field(count);
  count->add_option("-n", opt.n, "ambient dimension")->required();
  count->add_option("-m", opt.m, "largest rank")->required();
  add_format(count);

  auto* enumerate = app.add_subcommand("enumerate", "list all multispaces of rank m");
  add_field(enumerate);
  enumerate->add_option("-n", opt.n)->required();
  enumerate->add_option("-m", opt.m)->required();
  add_format(enumerate);
  add_limit(enumerate);

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram up to rank m as DOT");
  add_field(hasse);
  hasse->add_option("-n", opt.n)->required();
  hasse->add_option("-m,--m-max", opt.m)->required();
  add_format(hasse);
  add_limit(hasse);

  std::vector<std::pair<CLI::App*, int (Runner::*)()>> binary = {
      {app.add_subcommand("distance", "lattice distance with its decomposition"),
       &Runner::distance_cmd},
      {app.add_subcommand("meet", "greatest lower bound"), &Runner::meet_cmd},
      {app.add_subcommand("join", "least upper bound"), &Runner::join_cmd},
  };
  for (auto& [sub, fn] : binary) {
    sub->add_option("-a,--a", opt.a, "multispace JSON or file")->required();
    sub->add_option("-b,--b", opt.b, "multispace JSON or file")->required();
    add_format(sub);
    add_canon(sub);
  }

  auto* mspan_sub = app.add_subcommand("mspan", "multispan of a list of vectors");
  add_field(mspan_sub);
  mspan_sub->add_option("-n", opt.n)->required();
  mspan_sub->add_option("--vectors", opt.vectors, "JSON array of vectors or file")->required();
  add_format(mspan_sub);

  auto* poly = app.add_subcommand("poly", "linearized polynomial whose roots are a multispace");
  poly->add_option("-w,--w", opt.w, "multispace JSON or file")->required();
  add_format(poly);
  add_canon(poly);

  auto* roots = app.add_subcommand("roots", "root multispace of a linearized polynomial");
  roots->add_option("-p,--poly", opt.poly, "linearized polynomial: JSON, text or file")
      ->required();
  roots->add_option("--big", opt.big, "extension field spec; selects the text form");
  add_field(roots);
  add_format(roots);

  auto* search = app.add_subcommand("search", "greedy (and optionally optimal) code search");
  add_field(search);
  search->add_option("-n", opt.n)->required();
  search->add_option("-m,--m-max", opt.m)->required();
  search->add_option("-d,--d-min", opt.d_min)->required()->check(CLI::PositiveNumber);
  search->add_option("--seed", opt.seed, "first shuffle seed")->capture_default_str();
  search->add_option("--seeds", opt.seeds, "number of consecutive seeds to try")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  search->add_flag("--optimal", opt.optimal, "exact maximum code by clique search");
  add_format(search);
  add_limit(search);

  auto* ball = app.add_subcommand("ball", "number of multispaces within a radius");
  ball->add_option("-w,--w", opt.w)->required();
  ball->add_option("-r,--radius", opt.radius)->required();
  ball->add_option("-m,--m-max", opt.m)->required();
  add_format(ball);
  add_limit(ball);
  add_canon(ball);

  auto* bound = app.add_subcommand("bound", "sphere-packing upper bound");
  add_field(bound);
  bound->add_option("-n", opt.n)->required();
  bound->add_option("-m,--m-max", opt.m)->required();
  bound->add_option("-d,--d-min", opt.d_min)->required()->check(CLI::PositiveNumber);
  add_format(bound);
  add_limit(bound);

  auto* simulate = app.add_subcommand("simulate", "random linear network coding channel");
  auto* code_opt = simulate->add_option("-c,--code", opt.code, "code file");
  auto* w_opt = simulate->add_option("-w,--w", opt.w, "single multispace instead of a code");
  code_opt->excludes(w_opt);
  simulate->add_option("--mode", opt.mode, "full-rank, deletion, rank-deficient, compound")
      ->capture_default_str();
  simulate->add_option("-s", opt.s)->capture_default_str();
  simulate->add_option("--trials", opt.trials)->capture_default_str();
  simulate->add_option("--seed", opt.seed)->capture_default_str();
  simulate->add_flag("--random-generators", opt.random_generators);
  simulate->add_option("--trial-log", opt.trial_log, "per-trial CSV log");
  add_format(simulate);
  add_canon(simulate);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Runner runner(opt, out, err, out_is_tty);
  try {
    if (*count) return runner.count();
    if (*enumerate) return runner.enumerate();
    if (*hasse) return runner.hasse();
    for (auto& [sub, fn] : binary)
      if (*sub) return (runner.*fn)();
    if (*mspan_sub) return runner.mspan_cmd();
    if (*poly) return runner.poly_cmd();
    if (*roots) return runner.roots_cmd();
    if (*search) return runner.search_cmd();
    if (*ball) return runner.ball_cmd();
    if (*bound) return runner.bound_cmd();
    if (*simulate) return runner.simulate_cmd();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kLimitExceeded ? kExitLimit : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace msp::cli
