// Copyright 2026 The wga-toolkit authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wga/freegroup.hpp"
#include "wga/group.hpp"
#include "wga/littlewood.hpp"
#include "wga/vn.hpp"
#include "wga/weights.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Exit codes: 0 ok, 2 usage/precondition, 3 resource cap, 4 inconclusive.
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitInconclusive = 4;

// Flat "section.key = value" config, '#' comments.
class Config {
 public:
  void load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config: " + path);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      values_[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
  }

  void set(const std::string& key, const std::string& value) {
    values_[key] = value;
  }

  std::string get(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }
  double get_double(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : std::stod(it->second);
  }
  long long get_int(const std::string& key, long long fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : std::stoll(it->second);
  }

  /// FNV-1a over the canonical sorted key=value listing.
  std::string hash() const {
    std::uint64_t h = 14695981039346656037ull;
    for (const auto& [k, v] : values_)
      for (char c : k + "=" + v + "\n") {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
      }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
  }

 private:
  static std::string trim(std::string s) {
    auto notspace = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    return s;
  }
  std::map<std::string, std::string> values_;  // ordered for hashing
};

wga::GroupDescriptor group_from_config(const Config& cfg) {
  auto kind = wga::group_kind_from_string(cfg.get("group.kind", "zd"));
  switch (kind) {
    case wga::GroupKind::Zd:
      return wga::GroupDescriptor::zd(
          static_cast<int>(cfg.get_int("group.dim", 1)));
    case wga::GroupKind::Heisenberg:
      return wga::GroupDescriptor::heisenberg();
    case wga::GroupKind::Free2:
      return wga::GroupDescriptor::free2();
  }
  throw std::invalid_argument("bad group kind");
}

wga::WeightSpec weight_from_config(const Config& cfg) {
  std::string kind = cfg.get("weight.kind", "polynomial");
  if (kind == "polynomial")
    return wga::WeightSpec::polynomial(cfg.get_double("weight.beta", 1.0));
  if (kind == "exponential")
    return wga::WeightSpec::exponential(cfg.get_double("weight.alpha", 0.5),
                                        cfg.get_double("weight.C", 1.0));
  if (kind == "composite")
    return wga::WeightSpec::composite(cfg.get_double("weight.alpha", 0.5),
                                      cfg.get_double("weight.C", 1.0),
                                      cfg.get_double("weight.beta", 1.0));
  if (kind == "constant")
    return wga::WeightSpec::constant(cfg.get_double("weight.c", 1.0));
  throw std::invalid_argument("unknown weight.kind: " + kind);
}

json weight_json(const wga::WeightSpec& w) {
  json j;
  switch (w.kind) {
    case wga::WeightSpec::Kind::Polynomial:
      j["kind"] = "polynomial";
      j["beta"] = w.beta;
      break;
    case wga::WeightSpec::Kind::Exponential:
      j["kind"] = "exponential";
      j["alpha"] = w.alpha;
      j["C"] = w.C;
      break;
    case wga::WeightSpec::Kind::Composite:
      j["kind"] = "composite";
      j["alpha"] = w.alpha;
      j["C"] = w.C;
      j["beta"] = w.beta;
      break;
    case wga::WeightSpec::Kind::Constant:
      j["kind"] = "constant";
      j["c"] = w.c;
      break;
  }
  return j;
}

json series_json(const wga::SeriesBound& z) {
  return {{"s", z.s},       {"N", z.N},
          {"partial", z.partial}, {"tail", z.tail},
          {"upper", z.upper()},   {"rigorous", z.rigorous},
          {"divergent", z.divergent}};
}

struct Session {
  Config cfg;
  std::string out_dir = ".";
  bool rigorous = false;
  bool print_json = false;

  /// Growth parameters for the theorem dispatch. Z^d has exact growth order
  /// dim and lambda = 1; H3 has order 4 (Bass-Guivarch) and no explicit
  /// lambda, so the lambda < 1 branch is used.
  std::pair<int, bool> growth_data(const wga::GroupDescriptor& desc) const {
    switch (desc.kind) {
      case wga::GroupKind::Zd: return {desc.dim, true};
      case wga::GroupKind::Heisenberg:
        return {static_cast<int>(wga::bass_guivarch({{1, 2}, {2, 1}})), false};
      case wga::GroupKind::Free2: return {0, false};
    }
    throw std::logic_error("bad kind");
  }

  void emit(const std::string& command, const json& payload) const {
    fs::create_directories(out_dir);
    json record;
    record["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                              std::chrono::system_clock::now()
                                  .time_since_epoch())
                              .count();
    record["config_hash"] = cfg.hash();
    record["command"] = command;
    record["payload"] = payload;
    record["artifact_version"] = "1.0";
    std::ofstream ledger(fs::path(out_dir) / "ledger.jsonl", std::ios::app);
    ledger << record.dump() << "\n";
    if (print_json) std::cout << payload.dump(2) << "\n";
  }

  void write_csv(const std::string& name, const std::string& content) const {
    fs::create_directories(out_dir);
    std::ofstream out(fs::path(out_dir) / name);
    out << content;
  }
};

int cmd_growth(Session& s) {
  auto desc = group_from_config(s.cfg);
  int radius = static_cast<int>(s.cfg.get_int("radii.ball", 10));
  auto cap = static_cast<std::size_t>(
      s.cfg.get_int("radii.cap", wga::kDefaultBallCap));
  wga::BallTable table = wga::bfs_balls(desc, radius, cap);

  json payload;
  payload["group"] = desc.name();
  json gens = json::array();
  for (const auto& g : desc.generators()) gens.push_back(g.to_string());
  payload["generators"] = gens;
  payload["radius"] = radius;
  payload["sphere_sizes"] = table.sphere_sizes;
  payload["cumulative"] = table.cumulative;
  // The default fit window [radius/2, radius] needs radius >= n_min + 4.
  if (radius >= 7) {
    auto n_min = static_cast<int>(s.cfg.get_int("fit.n_min", -1));
    wga::GrowthFit fit = wga::growth_order_fit(table, n_min);
    payload["fit"] = {{"exponent", fit.exponent},
                      {"residual", fit.residual},
                      {"n_min", fit.n_min},
                      {"n_max", fit.n_max}};
  }

  std::ostringstream csv;
  csv << "n,sphere,cumulative\n";
  for (int n = 0; n <= radius; ++n)
    csv << n << ',' << table.sphere_sizes[n] << ',' << table.cumulative[n]
        << '\n';
  s.write_csv("growth_" + wga::to_string(desc.kind) + ".csv", csv.str());

  if (s.cfg.get("export.elements", "0") == "1") {
    std::ostringstream elems;
    elems << "normal_form\n";
    for (const auto& e : table.elements) elems << e.to_string() << '\n';
    s.write_csv("elements_" + wga::to_string(desc.kind) + ".csv", elems.str());
  }

  s.emit("growth", payload);
  return 0;
}

int cmd_bound(Session& s) {
  auto desc = group_from_config(s.cfg);
  auto w = weight_from_config(s.cfg);
  double kg = s.cfg.get_double("kg", wga::kDefaultGrothendieck);
  auto zeta_N = s.cfg.get_int("radii.zeta_cutoff", 0);
  auto [d, lambda_is_one] = s.growth_data(desc);

  // Pick the beta at which the zeta series is needed.
  double beta = w.beta;
  if (w.kind == wga::WeightSpec::Kind::Exponential && w.alpha > 0 &&
      w.alpha < 1)
    beta = wga::beta_selection(w.alpha, w.C, d, lambda_is_one);

  std::optional<wga::SeriesBound> zeta;
  if (desc.kind == wga::GroupKind::Zd && 2 * beta > d) {
    zeta = wga::length_zeta_zd(d, 2 * beta, zeta_N);
  } else if (desc.kind == wga::GroupKind::Heisenberg && 2 * beta > d) {
    int radius = static_cast<int>(s.cfg.get_int("radii.ball", 12));
    wga::BallTable table = wga::bfs_balls(desc, radius);
    zeta = wga::length_zeta(table, 2 * beta,
                            static_cast<int>(std::min<long long>(zeta_N, radius)));
  }
  if (s.rigorous && zeta && !zeta->rigorous)
    throw std::invalid_argument(
        "--rigorous: no rigorous tail available for this group; supply a "
        "majorant");

  wga::Verdict verdict = wga::operator_alg_verdict(
      desc, d, lambda_is_one, w, kg, zeta ? &*zeta : nullptr);

  json payload;
  payload["group"] = desc.name();
  payload["weight"] = weight_json(w);
  payload["kg"] = kg;
  payload["growth_order"] = d;
  payload["lambda_is_one"] = lambda_is_one;
  payload["verdict"] = wga::to_string(verdict.status);
  if (!verdict.reason.empty()) payload["reason"] = verdict.reason;
  if (zeta) payload["zeta"] = series_json(*zeta);
  if (verdict.bound) {
    payload["m_eps_bound"] = verdict.bound->bound;
    payload["beta_used"] = verdict.bound->beta_used;
    payload["M_used"] = verdict.bound->M_used;
    payload["rigorous"] = verdict.bound->rigorous;
    wga::VNConstants vn = wga::delta_from_bound(verdict.bound->bound);
    payload["delta"] = vn.delta;
    payload["L"] = vn.L;
  }
  s.emit("bound", payload);
  return 0;
}

int cmd_weight_check(Session& s) {
  auto desc = group_from_config(s.cfg);
  auto w = weight_from_config(s.cfg);
  int R = static_cast<int>(s.cfg.get_int("submult.radius", 6));
  double M = s.cfg.get_double("submult.M", w.subm_constant());

  int table_radius = desc.has_closed_length() ? R : 2 * R;
  wga::BallTable table = wga::bfs_balls(desc, table_radius);
  wga::SubmultReport report = wga::check_submultiplicative(w, table, R, M);

  json payload;
  payload["group"] = desc.name();
  payload["weight"] = weight_json(w);
  payload["radius"] = report.radius;
  payload["claimed_M"] = report.claimed_M;
  payload["worst_log_ratio"] = report.worst_log_ratio;
  payload["worst_pair"] = {report.worst_x.to_string(),
                           report.worst_y.to_string()};
  payload["pairs"] = report.pairs;
  payload["skipped"] = report.skipped;
  payload["pass"] = report.pass;

  if (w.kind == wga::WeightSpec::Kind::Composite) {
    double K = wga::k_threshold(w.alpha, w.C, w.beta);
    double hi = s.cfg.get_double("mono.hi", K + 100.0);
    double step = s.cfg.get_double("mono.step", 0.01);
    wga::MonotonicityReport mono =
        wga::monotonicity_check(w.alpha, w.C, w.beta, K, hi, step);
    payload["m_constant"] = wga::m_constant(w.alpha, w.C, w.beta);
    payload["k_threshold"] = K;
    payload["monotonicity"] = {{"points", mono.points},
                               {"p_violations", mono.p_violations},
                               {"q_violations", mono.q_violations},
                               {"pass", mono.pass()}};
  }
  s.emit("weight-check", payload);
  return report.pass ? 0 : kExitInconclusive;
}

int cmd_vn(Session& s) {
  auto desc = group_from_config(s.cfg);
  if (desc.kind != wga::GroupKind::Zd)
    throw std::invalid_argument("vn: commutative (Z^d) groups only");
  auto w = weight_from_config(s.cfg);
  double kg = s.cfg.get_double("kg", wga::kDefaultGrothendieck);
  auto [d, lambda_is_one] = s.growth_data(desc);

  double beta = w.beta;
  if (w.kind == wga::WeightSpec::Kind::Exponential)
    beta = wga::beta_selection(w.alpha, w.C, d, lambda_is_one);
  wga::SeriesBound zeta =
      wga::length_zeta_zd(d, 2 * beta, s.cfg.get_int("radii.zeta_cutoff", 0));
  wga::Verdict verdict =
      wga::operator_alg_verdict(desc, d, lambda_is_one, w, kg, &zeta);
  if (verdict.status != wga::Verdict::Status::InjectiveAlgebra || !verdict.bound)
    throw std::invalid_argument(
        "vn: the stress test needs an affirmative verdict; got " +
        wga::to_string(verdict.status));
  wga::VNConstants vn = wga::delta_from_bound(verdict.bound->bound);

  int trials = static_cast<int>(s.cfg.get_int("vn.trials", 0));
  json payload;
  payload["group"] = desc.name();
  payload["weight"] = weight_json(w);
  payload["kg"] = kg;
  payload["m_eps_bound"] = verdict.bound->bound;
  payload["delta"] = vn.delta;
  payload["L"] = vn.L;
  if (trials > 0) {
    auto seed = static_cast<std::uint64_t>(s.cfg.get_int("seed", 42));
    wga::StressReport report = wga::vn_stress_test(
        vn, desc, w, trials,
        static_cast<int>(s.cfg.get_int("vn.max_vars", 3)),
        static_cast<int>(s.cfg.get_int("vn.max_degree", 4)),
        static_cast<int>(s.cfg.get_int("vn.support", 6)), seed);
    payload["trials"] = report.trials;
    payload["passes"] = report.passes;
    payload["worst_margin"] = report.worst_margin;
    payload["seed"] = report.seed;
  }
  s.emit("vn", payload);
  return 0;
}

int cmd_free_group(Session& s) {
  double kg = s.cfg.get_double("kg", wga::kDefaultGrothendieck);
  int d = static_cast<int>(s.cfg.get_int("free.d", 2));
  double beta = s.cfg.get_double("free.beta", 0.5);
  int k_max = static_cast<int>(s.cfg.get_int("free.kmax", 10));
  int rs_kmax = static_cast<int>(s.cfg.get_int("free.rs_kmax", 10));
  int hankel_kmax = static_cast<int>(s.cfg.get_int("free.hankel_kmax", 8));

  json payload;
  payload["kg"] = kg;
  payload["d"] = d;
  payload["beta"] = beta;

  bool inconclusive = false;

  json flatness = json::array();
  for (int k = 0; k <= rs_kmax; ++k) {
    wga::FlatnessReport r = wga::flatness_check(wga::rudin_shapiro(k), 256);
    flatness.push_back({{"k", k},
                        {"max_identity_deviation", r.max_identity_deviation},
                        {"pass", r.pass}});
  }
  payload["flatness"] = flatness;

  json certs = json::array();
  for (int k = 1; k <= hankel_kmax; ++k) {
    wga::SpectralCertificate c = wga::hankel_certificate(k);
    certs.push_back({{"id", c.matrix_id},
                     {"norm", c.computed_norm},
                     {"bound", c.claimed_bound},
                     {"converged", c.converged},
                     {"pass", c.pass}});
    if (!c.converged) inconclusive = true;
  }
  for (int n : {2, 4, 8, 16}) {
    wga::SpectralCertificate c = wga::omega_lower_bound_check(d, n, beta);
    certs.push_back({{"id", c.matrix_id},
                     {"norm", c.computed_norm},
                     {"bound", c.claimed_bound},
                     {"converged", c.converged},
                     {"pass", c.pass}});
    if (!c.converged) inconclusive = true;
  }
  payload["certificates"] = certs;

  auto seq = wga::divergence_sequence(d, beta, kg, k_max);
  std::ostringstream csv;
  csv << "n,S_n,L_n\n";
  json points = json::array();
  for (const auto& pt : seq) {
    csv << pt.n << ',' << pt.s << ',' << pt.L << '\n';
    points.push_back({{"n", pt.n}, {"S", pt.s}, {"L", pt.L}});
  }
  s.write_csv("divergence.csv", csv.str());
  payload["divergence"] = points;

  s.emit("free-group", payload);
  return inconclusive ? kExitInconclusive : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted group algebra toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out";
  double kg = -1;
  long long seed = -1;
  bool rigorous = false, print_json = false;
  app.add_option("--config", config_path, "flat key=value config file");
  app.add_option("--kg", kg, "override the Grothendieck constant");
  app.add_option("--out", out_dir, "output directory");
  app.add_flag("--rigorous", rigorous, "fail unless all enclosures are rigorous");
  app.add_option("--seed", seed, "override the random seed");
  app.add_flag("--json", print_json, "print the result payload to stdout");

  auto* growth = app.add_subcommand(
      "growth", "BFS balls and growth-order fit; CSV columns n,sphere,cumulative");
  auto* bound = app.add_subcommand(
      "bound", "zeta enclosure, multiplication-norm bound, verdict and delta");
  auto* weight_check = app.add_subcommand(
      "weight-check", "submultiplicativity sweep, M constant, monotonicity");
  auto* vn = app.add_subcommand("vn", "von Neumann constants and stress test");
  auto* free_group = app.add_subcommand(
      "free-group",
      "Rudin-Shapiro flatness, spectral certificates, divergence CSV "
      "columns n,S_n,L_n");

  CLI11_PARSE(app, argc, argv);

  Session session;
  try {
    if (!config_path.empty()) session.cfg.load(config_path);
    if (kg > 0) session.cfg.set("kg", std::to_string(kg));
    if (seed >= 0) session.cfg.set("seed", std::to_string(seed));
    session.out_dir = out_dir;
    session.rigorous = rigorous;
    session.print_json = print_json;

    if (growth->parsed()) return cmd_growth(session);
    if (bound->parsed()) return cmd_bound(session);
    if (weight_check->parsed()) return cmd_weight_check(session);
    if (vn->parsed()) return cmd_vn(session);
    if (free_group->parsed()) return cmd_free_group(session);
  } catch (const wga::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wga::OutOfBallError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
