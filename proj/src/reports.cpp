#include "qrconf/reports.hpp"

#include "report_util.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <array>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>

namespace qrconf {

namespace detail {

json real_json(const Real& x)
{
  if (boost::multiprecision::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  if (boost::multiprecision::isnan(x)) {
    return "nan";
  }
  return static_cast<double>(x);
}

json number_json(const Rational& x) { return {{"exact", to_string(x)}, {"float", static_cast<double>(x.get_d())}}; }

json number_json(const Real& x) { return {{"float", real_json(x)}}; }

json estimate_json(const Estimate& e) { return {{"value", real_json(e.value)}, {"error", real_json(e.error)}}; }

std::string cell(const Rational& x) { return to_string(x); }

std::string cell(const Real& x) { return to_decimal(x); }

template <class S>
std::vector<std::pair<std::string, S>> parse_weights(const RunConfig& config)
{
  std::vector<std::pair<std::string, S>> out;
  for (const auto& text : config.h_values) {
    try {
      if constexpr (std::is_same_v<S, Rational>) {
        out.emplace_back(text, parse_rational(text));
      } else {
        out.emplace_back(text, parse_real(text));
      }
    } catch (const std::invalid_argument&) {
      throw ConfigError("malformed h value '" + text + "'");
    }
  }
  return out;
}

template std::vector<std::pair<std::string, Rational>> parse_weights(const RunConfig&);
template std::vector<std::pair<std::string, Real>> parse_weights(const RunConfig&);

json config_json(const RunConfig& config, const std::string& command)
{
  return {{"command", command},
          {"h", config.h_values},
          {"N", config.N},
          {"M", config.M},
          {"cutoffs", config.cutoffs},
          {"mode", config.mode == ScalarMode::rational ? "rational" : "float"},
          {"format", config.format == ReportFormat::json ? "json" : "csv"}};
}

}  // namespace detail

using detail::json;

std::string tool_version() { return "0.1.0"; }

void validate(const RunConfig& config, bool contracts)
{
  if (config.cutoffs.empty()) {
    throw ConfigError("empty cutoff ladder");
  }
  for (std::size_t i = 0; i < config.cutoffs.size(); ++i) {
    if (config.cutoffs[i] <= 0 || (i > 0 && config.cutoffs[i] <= config.cutoffs[i - 1])) {
      throw ConfigError("cutoff ladder must be positive and strictly increasing");
    }
  }
  if (config.N < 1) {
    throw ConfigError("truncation N must be positive");
  }
  if (contracts) {
    if (config.M < 2) {
      throw ConfigError("contraction cutoff M must be at least 2");
    }
    if (config.N < 10 * config.M) {
      throw ConfigError("truncation N = " + std::to_string(config.N) + " is below 10 M = " +
                        std::to_string(10 * config.M));
    }
  }
  if (config.mode == ScalarMode::rational) {
    detail::parse_weights<Rational>(config);
  } else {
    detail::parse_weights<Real>(config);
  }
}

namespace {

std::string csv_escape(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + "\"";
}

// ---- sweep ---------------------------------------------------------------

template <class S>
std::vector<std::string> sweep_row(const std::string& label, const S& h, const RunConfig& config, json& block,
                                   bool& residual_ok)
{
  const auto w = classify_weight(h);
  const S k = kappa(w);
  const auto c = central_charge(w);
  block["weight"] = detail::weight_json(w);
  block["kappa"] = detail::number_json(k);
  block["c"] = detail::number_json(c.direct);

  std::string q = "undefined", c_qr = "undefined", alpha = "undefined", res27 = "undefined", res_q = "undefined";
  if (w.q_r) {
    const auto id = identity_check(w);
    q = detail::cell(*w.q_r);
    c_qr = detail::cell(*c.from_qr);
    alpha = detail::cell(id.alpha);
    res27 = detail::cell(id.residual_27);
    res_q = detail::cell(id.residual_alpha_qr);
    block["c_from_qR"] = detail::number_json(*c.from_qr);
    block["alpha"] = detail::number_json(id.alpha);
    block["residual_27"] = detail::number_json(id.residual_27);
    block["residual_alpha_qR"] = detail::number_json(id.residual_alpha_qr);
    if constexpr (std::is_same_v<S, Rational>) {
      residual_ok = residual_ok && is_zero(id.residual_27) && is_zero(id.residual_alpha_qr) &&
                    *c.from_qr == c.direct;
    } else {
      const Real tol("1e-30");
      residual_ok = residual_ok && abs_of(id.residual_27) < tol * 27 &&
                    abs_of(id.residual_alpha_qr) < tol * (abs_of(id.alpha) + 1);
    }
  }

  std::string trace = "degenerate", trace_err = "degenerate";
  if (w.nondegenerate) {
    const auto t = fundamental_form_empirical(2, w, config.cutoffs);
    block["trace_A_2_-2"] = detail::tail_json(t);
    trace = to_decimal(t.extrapolated);
    trace_err = to_decimal(t.error_bound);
  }
  const S closed = fundamental_form(w)(2, -2);
  block["alpha_2_-2_closed"] = detail::number_json(closed);

  return {label,
          to_decimal(to_real(h)),
          w.nondegenerate ? "true" : "false",
          w.unitarizable ? "true" : "false",
          q,
          detail::cell(k),
          to_decimal(to_real(k)),
          detail::cell(c.direct),
          c_qr,
          alpha,
          res27,
          res_q,
          detail::cell(closed),
          trace,
          trace_err};
}

template <class S>
void sweep_all(const RunConfig& config, Report& report)
{
  const auto weights = detail::parse_weights<S>(config);
  bool ok = true;
  std::vector<std::future<std::pair<json, std::vector<std::string>>>> jobs;
  std::vector<char> row_ok(weights.size(), 1);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      json block;
      bool flag = true;
      auto row = sweep_row(weights[i].first, weights[i].second, config, block, flag);
      row_ok[i] = flag;
      return std::make_pair(block, row);
    }));
  }
  json rows = json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto [block, row] = jobs[i].get();
    block["h_label"] = weights[i].first;
    rows.push_back(block);
    report.csv_rows.push_back(row);
    ok = ok && row_ok[i];
  }
  report.json["rows"] = rows;
  report.exit_status = ok ? exit_pass : exit_fail;
}

// ---- explore -------------------------------------------------------------

struct Row
{
  std::string h, quantity, indices, value, error, status;
};

template <class S>
json explore_h(const std::string& label, const S& h, const RunConfig& config, std::vector<Row>& rows)
{
  const auto w = classify_weight(h);
  json block{{"weight", detail::weight_json(w)}};
  auto emit = [&](const std::string& q, const std::string& idx, const Real& v, const Real& e,
                  const std::string& status = "ok") {
    rows.push_back({label, q, idx, to_decimal(v), to_decimal(e), status});
  };
  auto flag = [&](const std::string& q, const std::string& idx, const std::string& status) {
    rows.push_back({label, q, idx, "", "", status});
  };
  if (!w.nondegenerate) {
    block["status"] = "degenerate weight";
    flag("all", "", "degenerate weight");
    return block;
  }

  // Ricci-identity residuals need no contraction and work for every valid h.
  const std::vector<std::array<int, 4>> quads = {
      {{-1, 0, 1, 0}}, {{0, 1, -1, 0}}, {{2, -2, 3, -3}}, {{2, 3, -2, -3}}, {{3, -5, 4, -2}}, {{2, -4, 5, -3}}};
  json ricci_identity = json::array();
  for (const auto& q : quads) {
    const std::string idx = std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
                            std::to_string(q[3]);
    const auto r = ricci_identity_residual(q[0], q[1], q[2], q[3], w, config.cutoffs);
    ricci_identity.push_back({{"indices", q}, {"residual", detail::estimate_json(r)}});
    emit("ricci_identity_residual", idx, r.value, r.error);
  }
  block["ricci_identity"] = ricci_identity;

  if (detail::near_root(w)) {
    block["status"] = "fundamental form vanishes";
    flag("contractions", "", "ZeroForm");
    return block;
  }

  json grid = json::array();
  for (int i = 2; i <= 5; ++i) {
    for (int j = 2; j <= 5; ++j) {
      const auto k = scalar_curvature(i, j, w, config.cutoffs);
      grid.push_back({{"i", i}, {"j", j}, {"K", detail::estimate_json(k)}});
      emit("K", std::to_string(i) + "," + std::to_string(j), k.value, k.error);
    }
  }
  json asym = json::array();
  for (int i = 2; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      const auto a = grid[static_cast<std::size_t>((i - 2) * 4 + (j - 2))]["K"];
      const auto b = grid[static_cast<std::size_t>((j - 2) * 4 + (i - 2))]["K"];
      asym.push_back({{"i", i}, {"j", j}, {"K_ij_minus_K_ji", a["value"].get<double>() - b["value"].get<double>()}});
    }
  }
  block["K"] = grid;
  block["K_symmetry"] = asym;

  if (!detail::in_contraction_domain(w)) {
    block["contractions"] = "ConvergenceDomain: the inverse-pairing sums need h > 1/2";
    flag("mean_deviation", "", "ConvergenceDomain");
    flag("rho", "", "ConvergenceDomain");
    flag("qhat", "", "ConvergenceDomain");
    return block;
  }

  const S alpha = deviation_constant(w);
  // Contractions run at 50 digits; exact rationals grow too large here.
  const auto wr = classify_weight(to_real(w.h));
  block["alpha"] = detail::number_json(alpha);
  json rho = json::array();
  const auto ladder = ricci_cutoffs(config.cutoffs, config.M);
  block["ricci_cutoffs"] = ladder;
  for (int n = 2; n <= 4; ++n) {
    const auto r1 = ricci(1, n, -n, wr, config.M, ladder);
    const auto r2 = ricci(2, n, -n, wr, config.M, ladder);
    const std::string idx = std::to_string(n) + "," + std::to_string(-n);
    rho.push_back({{"n", n},
                   {"rho1", detail::estimate_json(r1.rho)},
                   {"rho2", detail::estimate_json(r2.rho)},
                   {"rho1_minus_rho2", detail::estimate_json({r1.rho.value - r2.rho.value, r1.rho.error + r2.rho.error})}});
    emit("rho1", idx, r1.rho.value, r1.rho.error);
    emit("rho2", idx, r2.rho.value, r2.rho.error);
  }
  block["rho"] = rho;

  const int degrees = 10;
  auto entries_json = [&](const Contraction<Real>& c, const std::string& q) {
    json arr = json::array();
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      arr.push_back({{"column", c.columns[i]}, {"entry", detail::tail_json(c.entries[i])}});
      emit(q, std::to_string(c.band) + ":" + std::to_string(c.columns[i]), c.entries[i].extrapolated,
           c.entries[i].error_bound);
    }
    return arr;
  };
  const auto q_id = qhat<Real>([](int) { return Real(1); }, wr, config.M, config.N, degrees);
  const auto q_ad = qhat<Real>([](int k) { return Real(-k); }, wr, config.M, config.N, degrees);
  block["qhat_identity"] = entries_json(q_id, "qhat_identity");
  block["qhat_ad_e0"] = entries_json(q_ad, "qhat_ad_e0");

  json bops = json::array();
  for (int n : {0, 2, -2}) {
    const auto b = b_operator(n, wr, config.M, config.N, degrees);
    const auto ln = make_L(n, w, config.N);
    Real worst = 0;
    json arr = json::array();
    for (std::size_t i = 0; i < b.entries.size(); ++i) {
      const Real target = to_real(alpha * ln.coeff(-n, b.columns[i]));
      const Real diff = b.entries[i].extrapolated - target;
      worst = std::max(worst, abs_of(diff));
      arr.push_back({{"column", b.columns[i]},
                     {"B", detail::tail_json(b.entries[i])},
                     {"alpha_L", detail::real_json(target)}});
    }
    bops.push_back({{"n", n}, {"entries", arr}, {"max_abs_residual", detail::real_json(worst)}});
    emit("B_minus_alpha_L_max", std::to_string(n), worst, Real(0));
  }
  block["b_operator"] = bops;
  return block;
}

template <class S>
void explore_all(const RunConfig& config, Report& report)
{
  const auto weights = detail::parse_weights<S>(config);
  std::vector<std::vector<Row>> rows(weights.size());
  std::vector<std::future<json>> jobs;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    jobs.push_back(std::async(std::launch::async,
                              [&, i] { return explore_h(weights[i].first, weights[i].second, config, rows[i]); }));
  }
  json results = json::object();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    results[weights[i].first] = jobs[i].get();
    for (const auto& r : rows[i]) {
      report.csv_rows.push_back({r.h, r.quantity, r.indices, r.value, r.error, r.status});
    }
  }
  report.json["results"] = results;
}

}  // namespace

Report run_sweep(const RunConfig& config)
{
  validate(config, false);
  Report report;
  report.json = {{"tool", "qrconf"}, {"version", tool_version()}, {"config", detail::config_json(config, "sweep")}};
  report.csv_schema = "sweep/1";
  report.csv_header = {"h",     "h_float", "nondegenerate", "unitarizable",      "q_R",
                       "kappa", "kappa_float", "c",         "c_from_qR",         "alpha",
                       "residual_27", "residual_alpha_qR", "alpha_2_-2_closed", "trace_A_2_-2", "trace_A_2_-2_error"};
  if (config.mode == ScalarMode::rational) {
    sweep_all<Rational>(config, report);
  } else {
    sweep_all<Real>(config, report);
  }
  return report;
}

Report run_explore(const RunConfig& config)
{
  validate(config, true);
  if (config.h_values.empty()) {
    throw ConfigError("explore needs at least one --h value");
  }
  Report report;
  report.json = {{"tool", "qrconf"}, {"version", tool_version()}, {"config", detail::config_json(config, "explore")}};
  report.csv_schema = "explore/1";
  report.csv_header = {"h", "quantity", "indices", "value", "error", "status"};
  if (config.mode == ScalarMode::rational) {
    explore_all<Rational>(config, report);
  } else {
    explore_all<Real>(config, report);
  }
  return report;
}

std::string render(const Report& report, ReportFormat format)
{
  if (format == ReportFormat::json) {
    return report.json.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# qrconf " << tool_version() << " schema " << report.csv_schema << "\n";
  for (std::size_t i = 0; i < report.csv_header.size(); ++i) {
    os << (i ? "," : "") << csv_escape(report.csv_header[i]);
  }
  os << "\n";
  for (const auto& row : report.csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << csv_escape(row[i]);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace qrconf
