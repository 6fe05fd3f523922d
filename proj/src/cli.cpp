#include "aoiadv/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "aoiadv/adversary.hpp"
#include "aoiadv/bounds.hpp"
#include "aoiadv/exact_age.hpp"
#include "aoiadv/io.hpp"
#include "aoiadv/parallel.hpp"
#include "aoiadv/sched_sim.hpp"
#include "aoiadv/verify.hpp"

namespace aoiadv::cli {

namespace {

constexpr std::size_t kMaxSweepPoints = 10'000;

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("bad integer '" + std::string(s) + "' in " + std::string(what));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

}  // namespace

std::vector<int> parse_range(std::string_view text) {
  if (text.empty()) throw UsageError("empty range");
  std::vector<int> values;
  if (text.find(':') != std::string_view::npos) {
    auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3) throw UsageError("range must be a:b or a:b:step");
    const int lo = parse_int(parts[0], "range");
    const int hi = parse_int(parts[1], "range");
    const int step = parts.size() == 3 ? parse_int(parts[2], "range") : 1;
    if (step <= 0) throw UsageError("range step must be positive");
    for (long long v = lo; v <= hi; v += step) values.push_back(static_cast<int>(v));
  } else {
    for (auto part : split(text, ',')) values.push_back(parse_int(part, "list"));
  }
  if (values.empty()) throw UsageError("range '" + std::string(text) + "' is empty");
  return values;
}

BlockingMatrix generate_sigma(const SystemConfig& config, std::string_view generator) {
  auto parts = split(generator, ':');
  const std::string_view kind = parts.front();
  std::vector<int> args;
  for (std::size_t i = 1; i < parts.size(); ++i) args.push_back(parse_int(parts[i], "--gen"));

  auto check_row = [&](int row) {
    if (row < 1 || row > config.rows()) throw UsageError("generator row out of range");
  };
  auto check_budget = [&](int zeros) {
    if (zeros > config.budget()) {
      throw InfeasibleError("generator blocks " + std::to_string(zeros) + " slots, budget is " +
                            std::to_string(config.budget()));
    }
  };
  auto build = [&](const CbsDescriptor& d) {
    check_row(d.row);
    check_budget(d.length);
    try {
      return cbs_to_matrix(config, d);
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
  };

  if (kind == "cbs" && args.size() == 3) return build({args[0], args[1], args[2]});
  if (kind == "centered" && args.size() == 2) {
    if (args[1] < 0 || args[1] > config.horizon()) throw UsageError("generator length out of range");
    return build(centered_cbs(config.horizon(), args[0], args[1]));
  }
  if (kind == "twoblock" && args.size() == 5) {
    const int row = args[0];
    check_row(row);
    check_budget(args[2] + args[4]);
    BlockingMatrix sigma = BlockingMatrix::all_ones(config.rows(), config.horizon());
    for (auto [start, len] : {std::pair{args[1], args[2]}, std::pair{args[3], args[4]}}) {
      if (len < 1 || start < 1 || start + len - 1 > config.horizon()) {
        throw UsageError("twoblock block out of range");
      }
      for (int t = start; t < start + len; ++t) sigma = sigma.with(row, t, 0);
    }
    return sigma;
  }
  throw UsageError("unknown generator '" + std::string(generator) +
                   "' (cbs:<row>:<start>:<len> | centered:<row>:<len> | "
                   "twoblock:<row>:<s1>:<l1>:<s2>:<l2>)");
}

std::string git_blob_hash(std::string_view content) {
  std::string blob = "blob " + std::to_string(content.size());
  blob.push_back('\0');
  blob.append(content);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(blob.data(), blob.size(), digest, &length, EVP_sha1(), nullptr) != 1) {
    throw std::runtime_error("SHA-1 digest failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

namespace {

struct Params {
  int n = 2;
  int t = 10;
  std::string alpha = "0";
  int nsub = 0;
  std::uint64_t runs = 1000;
  std::uint64_t seed = 1;
  std::string sigma_path;
  std::string gen;
  std::string out_path;
  std::string format = "json";
  std::uint64_t cap = 100'000'000;
  int workers = 0;

  // exact
  std::string indexing = "raw";
  // simulate
  std::string scheme = "auto";
  int rr_start = 0;
  bool compare = false;
  std::string dump_traces;
  std::uint64_t dump_limit = 10;
  // sweep
  std::string sweep_t;
  std::string sweep_n;
  std::string sweep_nsub;

  // Options given explicitly on the command line.
  bool n_given = false;
  bool t_given = false;
  bool alpha_given = false;
  bool nsub_given = false;
};

SystemConfig make_config(const Params& p) {
  std::optional<int> nsub;
  if (p.nsub != 0) nsub = p.nsub;
  Rational alpha;
  try {
    alpha = parse_rational(p.alpha);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--alpha: ") + e.what());
  }
  try {
    return SystemConfig(p.n, p.t, alpha, nsub);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Resolves the blocking matrix and, for a JSON wrapper, the configuration it
// carries. Checks feasibility.
std::pair<SystemConfig, BlockingMatrix> load_input(const Params& p) {
  SystemConfig config = make_config(p);
  if (!p.sigma_path.empty() && !p.gen.empty()) throw UsageError("use either --sigma or --gen");
  std::optional<BlockingMatrix> sigma;
  if (!p.sigma_path.empty()) {
    const std::string text = read_file(p.sigma_path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::exception& e) {
        throw UsageError(std::string("bad JSON in --sigma: ") + e.what());
      }
      auto [file_config, file_sigma] = matrix_from_json(j);
      if ((p.n_given && p.n != file_config.n_users()) || (p.t_given && p.t != file_config.horizon()) ||
          (p.alpha_given && parse_rational(p.alpha) != file_config.alpha()) ||
          (p.nsub_given && std::optional<int>(p.nsub) != file_config.n_subcarriers())) {
        throw UsageError("command-line configuration disagrees with the --sigma file");
      }
      config = file_config;
      sigma = std::move(file_sigma);
    } else {
      sigma = parse_grid(text);
    }
  } else if (!p.gen.empty()) {
    sigma = generate_sigma(config, p.gen);
  } else {
    sigma = BlockingMatrix::all_ones(config.rows(), config.horizon());
  }
  try {
    require_feasible(config, *sigma);
  } catch (const ShapeError& e) {
    throw UsageError(e.what());
  }
  return {config, *sigma};
}

json spec_json(const std::string& command, const Params& p, const SystemConfig& config,
               const std::optional<BlockingMatrix>& sigma) {
  json spec{{"command", command},
            {"config", to_json(config)},
            {"runs", p.runs},
            {"seed", p.seed},
            {"sigma_source", !p.sigma_path.empty() ? "file:" + p.sigma_path
                             : !p.gen.empty()      ? "gen:" + p.gen
                                                   : "all_ones"}};
  if (sigma) spec["sigma"] = matrix_to_json(config, *sigma).at("grid");
  if (command == "sweep") {
    spec["sweep"] = {{"t", p.sweep_t}, {"n", p.sweep_n}, {"nsub", p.sweep_nsub}};
  }
  if (command == "brute") spec["cap"] = p.cap;
  if (command == "simulate") spec["scheme"] = p.scheme;
  spec["input_hash"] = git_blob_hash(spec.dump());
  return spec;
}

// Writes a temporary sibling, then renames it over the target.
void write_atomically(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw UsageError("cannot write '" + path + "'");
    os << content;
    if (!os) throw UsageError("failed writing '" + path + "'");
  }
  std::filesystem::rename(tmp, target);
}

void emit(const Params& p, const json& spec, const json& result,
          const std::function<void(std::ostream&)>& csv_body) {
  if (p.out_path.empty()) return;
  if (p.format == "json") {
    write_atomically(p.out_path, json{{"spec", spec}, {"result", result}}.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "# spec: " << spec.dump() << "\n";
    csv_body(os);
    write_atomically(p.out_path, os.str());
  }
}

std::string show(const Rational& r) {
  std::ostringstream os;
  os << to_string(r) << " (" << std::setprecision(8) << to_double(r) << ")";
  return os.str();
}

int cmd_exact(const Params& p, std::ostream& out) {
  auto [config, sigma] = load_input(p);
  const auto raw = expected_age(config, sigma, Indexing::raw);
  const auto shifted = raw.with_indexing(Indexing::shifted);
  out << "config N=" << config.n_users() << " T=" << config.horizon()
      << " alpha=" << to_string(config.alpha()) << " budget=" << config.budget();
  if (config.n_subcarriers()) out << " Nsub=" << *config.n_subcarriers();
  out << "\n";
  out << "overall_mean " << show(objective(config, raw)) << "\n";
  out << "overall_mean_shifted " << show(objective(config, shifted)) << "\n";
  for (int i = 1; i <= config.n_users(); ++i) {
    out << "user " << i << " mean " << show(raw.per_user_mean(i)) << " shifted "
        << show(shifted.per_user_mean(i)) << "\n";
  }
  const auto& chosen = p.indexing == "shifted" ? shifted : raw;
  emit(p, spec_json("exact", p, config, sigma), to_json(chosen),
       [&](std::ostream& os) { write_trajectory_csv(os, chosen); });
  return kOk;
}

int cmd_brute(const Params& p, std::ostream& out) {
  const SystemConfig config = make_config(p);
  BruteForceOptions options;
  options.cap = p.cap;
  options.workers = p.workers;
  const auto set = brute_force_optimum(config, options);
  out << "best_value " << show(set.best_value) << "\n";
  out << "enumerated " << set.enumerated_count << "\n";
  out << "maximizers " << set.maximizers.size() << "\n";
  for (const auto& m : set.maximizers) out << "\n" << to_grid(m);
  emit(p, spec_json("brute", p, config, std::nullopt), to_json(set), [&](std::ostream& os) {
    os << "index,row,grid\n";
    for (std::size_t k = 0; k < set.maximizers.size(); ++k) {
      const auto& m = set.maximizers[k];
      for (int r = 1; r <= m.rows(); ++r) {
        os << k << ',' << r << ',';
        for (auto v : m.row(r)) os << (v ? '1' : '0');
        os << '\n';
      }
    }
  });
  return kOk;
}

int cmd_simulate(const Params& p, std::ostream& out) {
  auto [config, sigma] = load_input(p);
  std::string scheme = p.scheme;
  if (scheme == "auto") scheme = config.subcarrier_model() ? "subcarrier" : "randomized";
  const SimOptions options{p.workers, false};
  SimulationReport report;
  if (scheme == "randomized") {
    report = simulate_randomized(config, sigma, p.runs, p.seed, options);
  } else if (scheme == "subcarrier") {
    report = simulate_randomized_subcarrier(config, sigma, p.runs, p.seed, options);
  } else if (scheme == "round_robin") {
    const bool explicit_sigma = !p.sigma_path.empty() || !p.gen.empty();
    RoundRobinAdversary adversary =
        explicit_sigma ? RoundRobinAdversary{sigma}
                       : RoundRobinAdversary{WorstCaseAdversary{
                             p.rr_start > 0 ? std::optional<int>(p.rr_start) : std::nullopt}};
    report = simulate_round_robin(config, adversary, p.runs, p.seed);
  } else {
    throw UsageError("unknown --scheme '" + scheme + "'");
  }
  out << "scheme " << to_string(report.scheme) << " runs " << report.n_runs << " seed "
      << report.seed << "\n";
  out << std::setprecision(8) << "overall_mean " << report.empirical_overall_mean << " se "
      << report.std_error << "\n";
  for (std::size_t i = 0; i < report.empirical_per_user_mean.size(); ++i) {
    out << "user " << i + 1 << " mean " << report.empirical_per_user_mean[i] << " se "
        << report.per_user_std_error[i] << "\n";
  }
  json result = to_json(report);
  if (p.compare && scheme != "round_robin") {
    const auto cmp = empirical_vs_exact(config, sigma, p.runs, p.seed, p.workers);
    out << "max_standardized_deviation " << cmp.max_standardized_deviation << " at user "
        << cmp.worst_user << " slot " << cmp.worst_slot << (cmp.flagged ? " FLAGGED" : "") << "\n";
    result["comparison"] = to_json(cmp);
  }
  if (!p.dump_traces.empty() && scheme != "round_robin") {
    std::ostringstream os;
    os << "run,t,user,served,subcarrier,age\n";
    for (std::uint64_t run = 0; run < std::min(p.runs, p.dump_limit); ++run) {
      write_trace_csv(os, config.subcarrier_model()
                              ? trace_randomized_subcarrier(config, sigma, p.seed, run)
                              : trace_randomized(config, sigma, p.seed, run));
    }
    write_atomically(p.dump_traces, os.str());
  }
  emit(p, spec_json("simulate", p, config, sigma), result,
       [&](std::ostream& os) { write_report_csv(os, report); });
  return kOk;
}

int cmd_bounds(const Params& p, std::ostream& out) {
  const SystemConfig config = make_config(p);
  const auto table = bounds_table(config);
  json rows = json::array();
  for (const auto& b : table) {
    out << std::left << std::setw(28) << b.name << " " << show(b.value)
        << (b.diagnostic ? "  [diagnostic]" : "") << "\n";
    rows.push_back(to_json(b));
  }
  emit(p, spec_json("bounds", p, config, std::nullopt), rows, [&](std::ostream& os) {
    os << "name,value,value_float,diagnostic\n";
    for (const auto& b : table) {
      os << b.name << ',' << to_string(b.value) << ',' << std::setprecision(17) << to_double(b.value)
         << ',' << (b.diagnostic ? 1 : 0) << '\n';
    }
  });
  return kOk;
}

struct SweepRow {
  int n;
  int t;
  std::optional<int> nsub;
  std::string metric;
  std::string value;
};

int cmd_sweep(const Params& p, std::ostream& out) {
  const SystemConfig base = make_config(p);
  if (p.sweep_t.empty() && p.sweep_n.empty() && p.sweep_nsub.empty()) {
    throw UsageError("sweep needs at least one of --sweep-t, --sweep-n, --sweep-nsub");
  }
  const auto ts = p.sweep_t.empty() ? std::vector<int>{p.t} : parse_range(p.sweep_t);
  const auto ns = p.sweep_n.empty() ? std::vector<int>{p.n} : parse_range(p.sweep_n);
  const auto nsubs = p.sweep_nsub.empty() ? std::vector<int>{p.nsub} : parse_range(p.sweep_nsub);
  const std::size_t n_points = ts.size() * ns.size() * nsubs.size();
  if (n_points > kMaxSweepPoints) {
    throw CapExceeded("sweep has " + std::to_string(n_points) + " points, limit is " +
                          std::to_string(kMaxSweepPoints),
                      kMaxSweepPoints);
  }
  struct Point {
    int n, t, nsub;
  };
  std::vector<Point> points;
  for (int n : ns) {
    for (int t : ts) {
      for (int nsub : nsubs) points.push_back({n, t, nsub});
    }
  }
  // validate every point first
  std::vector<SystemConfig> configs;
  for (const auto& pt : points) {
    try {
      configs.emplace_back(pt.n, pt.t, base.alpha(),
                           pt.nsub != 0 ? std::optional<int>(pt.nsub) : std::nullopt);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<std::vector<SweepRow>> rows(points.size());
  parallel_for(points.size(), worker_count(p.workers), [&](std::size_t k) {
    const SystemConfig& config = configs[k];
    const auto sigma = cbs_to_matrix(config, centered_cbs(config, 1, config.budget()));
    auto add = [&](std::string metric, std::string value) {
      rows[k].push_back({config.n_users(), config.horizon(), config.n_subcarriers(),
                         std::move(metric), std::move(value)});
    };
    auto num = [](double v) {
      std::ostringstream os;
      os << std::setprecision(17) << v;
      return os.str();
    };
    if (config.subcarrier_model()) {
      // serial within a point
      const auto report =
          simulate_randomized_subcarrier(config, sigma, p.runs, p.seed, SimOptions{1, false});
      add("empirical_overall_mean", num(report.empirical_overall_mean));
      add("std_error", num(report.std_error));
      add("thm4_upper", to_string(thm4_upper(config.n_users(), *config.n_subcarriers())));
      add("lb_modified", to_string(lb_modified(config.n_users())));
    } else {
      const auto traj = age_by_recursion(config, sigma, Indexing::shifted);
      add("overall_mean", num(to_double(traj.overall_mean())));
      add("blocked_user_mean", num(to_double(traj.per_user_mean(1))));
      add("lemma2_lower", to_string(lemma2_lower(config.horizon(), config.alpha(), config.n_users())));
      add("thm2_upper", to_string(thm2_upper(config.horizon(), config.n_users())));
    }
  });

  std::ostringstream csv;
  csv << "n,t,alpha,nsub,metric,value\n";
  json result = json::array();
  for (const auto& point_rows : rows) {
    for (const auto& r : point_rows) {
      csv << r.n << ',' << r.t << ',' << to_string(base.alpha()) << ','
          << (r.nsub ? std::to_string(*r.nsub) : "") << ',' << r.metric << ',' << r.value << '\n';
      result.push_back({{"n", r.n},
                        {"t", r.t},
                        {"alpha", to_string(base.alpha())},
                        {"nsub", r.nsub ? json(*r.nsub) : json(nullptr)},
                        {"metric", r.metric},
                        {"value", r.value}});
    }
  }
  out << csv.str();
  emit(p, spec_json("sweep", p, base, std::nullopt), result,
       [&](std::ostream& os) { os << csv.str(); });
  return kOk;
}

int cmd_verify(const Params& p, std::ostream& out) {
  VerifyOptions options;
  options.seed = p.seed;
  options.workers = p.workers;
  const auto results = verify_claims(options);
  bool all = true;
  json rows = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checked)";
    if (!r.passed) out << ": " << r.detail;
    out << "\n";
    rows.push_back({{"claim", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"detail", r.detail}});
  }
  const SystemConfig config = make_config(p);
  emit(p, spec_json("verify", p, config, std::nullopt), rows, [&](std::ostream& os) {
    os << "claim,passed,checked\n";
    for (const auto& r : results) os << r.name << ',' << (r.passed ? 1 : 0) << ',' << r.checked << '\n';
  });
  return all ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and simulated age of information under a budget-constrained jammer", "aoiadv"};
  app.require_subcommand(1, 1);
  Params p;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", p.n, "number of users");
    sub->add_option("--t", p.t, "horizon in slots");
    sub->add_option("--alpha", p.alpha, "adversary budget fraction (decimal or p/q)");
    sub->add_option("--nsub", p.nsub, "number of sub-carriers (enables the sub-carrier model)");
    sub->add_option("--runs", p.runs, "Monte Carlo runs");
    sub->add_option("--seed", p.seed, "random seed");
    sub->add_option("--out", p.out_path, "artifact path");
    sub->add_option("--format", p.format, "artifact format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--workers", p.workers, "worker threads (default: $AOIADV_WORKERS or all cores)");
  };
  auto add_sigma = [&](CLI::App* sub) {
    sub->add_option("--sigma", p.sigma_path, "blocking matrix file (grid text or JSON wrapper)");
    sub->add_option("--gen", p.gen, "cbs:<row>:<start>:<len> | centered:<row>:<len> | twoblock:...");
  };

  auto* exact = app.add_subcommand("exact", "exact expected-age trajectory");
  add_common(exact);
  add_sigma(exact);
  exact->add_option("--indexing", p.indexing, "artifact indexing")
      ->check(CLI::IsMember({"raw", "shifted"}));

  auto* brute = app.add_subcommand("brute", "exhaustive search for the optimal adversary");
  add_common(brute);
  brute->add_option("--cap", p.cap, "limit on (rows+1)^T");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo simulation");
  add_common(simulate);
  add_sigma(simulate);
  simulate->add_option("--scheme", p.scheme, "auto | randomized | round_robin | subcarrier");
  simulate->add_option("--rr-start", p.rr_start, "first slot of the worst-case round-robin block");
  simulate->add_flag("--compare", p.compare, "compare per-slot means with the exact engine");
  simulate->add_option("--dump-traces", p.dump_traces, "write per-run traces to this CSV");
  simulate->add_option("--dump-limit", p.dump_limit, "number of runs to dump");

  auto* bounds = app.add_subcommand("bounds", "bound and ratio table");
  add_common(bounds);

  auto* sweep = app.add_subcommand("sweep", "parameter sweep, long-form output");
  add_common(sweep);
  sweep->add_option("--sweep-t", p.sweep_t, "horizon range a:b[:step] or list");
  sweep->add_option("--sweep-n", p.sweep_n, "user-count range");
  sweep->add_option("--sweep-nsub", p.sweep_nsub, "sub-carrier range");

  auto* verify = app.add_subcommand("verify", "check the structural claims on small instances");
  add_common(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  p.n_given = chosen->count("--n") > 0;
  p.t_given = chosen->count("--t") > 0;
  p.alpha_given = chosen->count("--alpha") > 0;
  p.nsub_given = chosen->count("--nsub") > 0;

  try {
    const std::string name = chosen->get_name();
    if (name == "exact") return cmd_exact(p, out);
    if (name == "brute") return cmd_brute(p, out);
    if (name == "simulate") return cmd_simulate(p, out);
    if (name == "bounds") return cmd_bounds(p, out);
    if (name == "sweep") return cmd_sweep(p, out);
    return cmd_verify(p, out);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const CapExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kOverCap;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace aoiadv::cli
