#include "rsgs/serialize.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "rsgs/errors.hpp"
#include "rsgs/version.hpp"

namespace rsgs {

json to_json(const ProblemParams& p) {
  return json{{"n", p.n},
              {"q", p.q},
              {"lambda", p.lambda},
              {"mu", p.mu},
              {"nu", p.nu},
              {"lambda_max", p.lambda_max},
              {"beta", p.beta},
              {"q_crit", p.q_crit},
              {"omega_n", p.omega_n},
              {"a_coeff", p.a_coeff},
              {"b_coeff", p.b_coeff}};
}

ProblemParams params_from_json(const json& j) {
  ProblemParams p;
  p.n = j.at("n").get<int>();
  p.q = j.at("q").get<double>();
  p.lambda = j.at("lambda").get<double>();
  p.mu = j.at("mu").get<double>();
  p.nu = j.at("nu").get<double>();
  p.lambda_max = j.at("lambda_max").get<double>();
  p.beta = j.at("beta").get<double>();
  p.q_crit = j.at("q_crit").get<double>();
  p.omega_n = j.at("omega_n").get<double>();
  p.a_coeff = j.at("a_coeff").get<double>();
  p.b_coeff = j.at("b_coeff").get<double>();
  return p;
}

json to_json(const EnergyBreakdown& e) {
  return json{{"i_w2pp", e.i_w2pp}, {"i_w2p", e.i_w2p},
              {"i_w2", e.i_w2},     {"i_wq", e.i_wq},
              {"u0", e.u0},         {"u1", e.u1},
              {"u2", e.u2},         {"a_value", e.a_value},
              {"b_value", e.b_value}, {"zero_profile", e.zero_profile}};
}

EnergyBreakdown breakdown_from_json(const json& j) {
  EnergyBreakdown e;
  e.i_w2pp = j.at("i_w2pp").get<double>();
  e.i_w2p = j.at("i_w2p").get<double>();
  e.i_w2 = j.at("i_w2").get<double>();
  e.i_wq = j.at("i_wq").get<double>();
  e.u0 = j.at("u0").get<double>();
  e.u1 = j.at("u1").get<double>();
  e.u2 = j.at("u2").get<double>();
  e.a_value = j.at("a_value").get<double>();
  e.b_value = j.at("b_value").get<double>();
  e.zero_profile = j.at("zero_profile").get<bool>();
  return e;
}

json to_json(const IdentityReport& r) {
  return json{{"name", r.name},         {"lhs", r.lhs},
              {"rhs", r.rhs},           {"residual", r.residual},
              {"pass", r.pass},         {"tolerance", r.tolerance}};
}

IdentityReport report_from_json(const json& j) {
  IdentityReport r;
  r.name = j.at("name").get<std::string>();
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.residual = j.at("residual").get<double>();
  r.pass = j.at("pass").get<bool>();
  r.tolerance = j.at("tolerance").get<double>();
  return r;
}

json to_json(const GroundState& gs, const std::string& profile_csv_path) {
  return json{{"params", to_json(gs.params)},
              {"s_rad", gs.s_rad},
              {"el_residual", gs.el_residual},
              {"iterations", gs.iterations},
              {"boundary_leak", gs.boundary_leak},
              {"boundary_leak_flagged", gs.boundary_leak_flagged},
              {"positive", gs.positive},
              {"even_after_centering", gs.even_after_centering},
              {"breakdown", to_json(gs.breakdown)},
              {"profile_csv", profile_csv_path}};
}

json to_json(const SymmetryCertificate& c) {
  return json{{"params", to_json(c.params)},
              {"u0", c.u0},
              {"u1", c.u1},
              {"u2", c.u2},
              {"a_u", c.a_u},
              {"a_uphi", c.a_uphi},
              {"second_variation_gap", c.second_variation_gap},
              {"verdict", to_string(c.verdict)},
              {"margin", c.margin},
              {"thm4_coefficient_c1", c.thm4_coefficient_c1},
              {"thm4_condition_met", c.thm4_condition_met}};
}

SymmetryCertificate certificate_from_json(const json& j) {
  SymmetryCertificate c;
  c.params = params_from_json(j.at("params"));
  c.u0 = j.at("u0").get<double>();
  c.u1 = j.at("u1").get<double>();
  c.u2 = j.at("u2").get<double>();
  c.a_u = j.at("a_u").get<double>();
  c.a_uphi = j.at("a_uphi").get<double>();
  c.second_variation_gap = j.at("second_variation_gap").get<double>();
  c.verdict = j.at("verdict").get<std::string>() == "SymmetryBroken"
                  ? Verdict::SymmetryBroken
                  : Verdict::RadiallyStable;
  c.margin = j.at("margin").get<double>();
  c.thm4_coefficient_c1 = j.at("thm4_coefficient_c1").get<double>();
  c.thm4_condition_met = j.at("thm4_condition_met").get<bool>();
  return c;
}

json to_json(const ScanResult& scan) {
  json rows = json::array();
  for (const ScanRow& r : scan.rows) {
    rows.push_back(json{{"lambda", r.lambda},
                        {"D", r.d_value},
                        {"s_rad", r.s_rad},
                        {"verdict", to_string(r.verdict)}});
  }
  json brackets = json::array();
  for (const auto& b : scan.brackets) {
    brackets.push_back(json{{"lo", b[0]}, {"hi", b[1]}});
  }
  return json{{"rows", rows},
              {"brackets", brackets},
              {"sign_change_found", !scan.brackets.empty()}};
}

json to_json(const std::vector<BubbleRow>& rows) {
  json out = json::array();
  for (const BubbleRow& r : rows) {
    out.push_back(json{{"offset", r.offset},
                       {"R", r.r_value},
                       {"S_star", r.s_star},
                       {"gap", r.gap}});
  }
  return out;
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_profile_csv(const Profile& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::UsageError, "cannot open " + path);
  out << "t,w\n";
  for (int j = 0; j < p.grid.points; ++j) {
    out << fmt17(p.grid.node(j)) << ',' << fmt17(p.values[j]) << '\n';
  }
  json meta{{"half_width", p.grid.half_width}, {"points", p.grid.points}};
  std::ofstream side(path + ".meta.json");
  if (!side) fail(ErrorCode::UsageError, "cannot open " + path + ".meta.json");
  side << meta.dump(2) << '\n';
}

Profile read_profile_csv(const std::string& path) {
  std::ifstream side(path + ".meta.json");
  if (!side) fail(ErrorCode::UsageError, "missing sidecar for " + path);
  json meta = json::parse(side);
  const Grid g = make_grid(meta.at("half_width").get<double>(),
                           meta.at("points").get<int>());
  std::ifstream in(path);
  if (!in) fail(ErrorCode::UsageError, "cannot open " + path);
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> values;
  values.reserve(g.points);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    values.push_back(std::stod(line.substr(comma + 1)));
  }
  return make_profile(g, std::move(values));
}

std::string scan_csv(const ScanResult& scan) {
  std::ostringstream out;
  out << "lambda,D,s_rad,verdict\n";
  for (const ScanRow& r : scan.rows) {
    out << fmt17(r.lambda) << ',' << fmt17(r.d_value) << ','
        << fmt17(r.s_rad) << ',' << to_string(r.verdict) << '\n';
  }
  return out.str();
}

std::string bubble_csv(const std::vector<BubbleRow>& rows) {
  std::ostringstream out;
  out << "offset,R,S_star,gap\n";
  for (const BubbleRow& r : rows) {
    out << fmt17(r.offset) << ',' << fmt17(r.r_value) << ','
        << fmt17(r.s_star) << ',' << fmt17(r.gap) << '\n';
  }
  return out.str();
}

std::string rfc3339_utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json make_envelope(const std::string& command, const json& config_echo,
                   const json& payload,
                   const std::vector<IdentityReport>& reports) {
  json reps = json::array();
  for (const IdentityReport& r : reports) reps.push_back(to_json(r));
  return json{{"tool_version", kVersion},
              {"timestamp", rfc3339_utc_now()},
              {"command", command},
              {"config", config_echo},
              {"payload", payload},
              {"identity_reports", reps}};
}

}  // namespace rsgs
