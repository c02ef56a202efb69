// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include "config.hpp"
#include "ldseq/brs.hpp"
#include "ldseq/error.hpp"
#include "ldseq/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace ldseq::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 24;

std::string one_line(std::string s) {
  for (auto& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

std::string decimal(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

Json rational_json(const Rational& q) {
  Json j;
  j["num"] = numerator(q).str();
  j["den"] = denominator(q).str();
  j["value"] = to_string(q);
  return j;
}

struct Context {
  Config cfg;
  std::ostream* out = nullptr;
};

void emit(const Context& ctx, const std::string& text) {
  const std::string path = ctx.cfg.get("output");
  if (path.empty() || path == "-") {
    *ctx.out << text;
    ctx.out->flush();
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot write output '" + path + "'");
    f << text;
    if (!f) throw ConfigError("cannot write output '" + path + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw ConfigError("cannot write output '" + path + "': " + ec.message());
}

void emit_json(const Context& ctx, const Json& j) { emit(ctx, j.dump(2) + "\n"); }

std::string format_of(const Context& ctx, std::initializer_list<const char*> allowed, const char* command) {
  const std::string f = ctx.cfg.get("format");
  for (const char* a : allowed)
    if (f == a) return f;
  throw ConfigError(std::string("format '") + f + "' is not supported by '" + command + "'");
}

Json header(const char* command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

std::uint32_t require_base(const BuiltSequence& b, const char* command) {
  if (b.base == 0)
    throw ConfigError(std::string("'") + command + "' needs a single digit base; kind '" + b.kind +
                      "' mixes radices");
  return b.base;
}

std::size_t get_m(const Config& cfg, std::uint32_t base) {
  const std::uint64_t m = cfg.get_uint("m");
  if (static_cast<double>(m) * std::log2(static_cast<double>(base)) > 24.0)
    throw ConfigError("key 'm': b^m exceeds the 2^24 point limit");
  return static_cast<std::size_t>(m);
}

std::vector<Point> first_points(const BuiltSequence& b, const Config& cfg, std::uint64_t count) {
  if (count > kMaxPoints) throw ConfigError("point count exceeds the 2^24 limit");
  return b.seq->points(cfg.get_uint("n_start"), count);
}

std::optional<std::int64_t> d_param(const BuiltSequence& b, const Config& cfg) {
  if (auto d = cfg.get_opt_int("d")) return d;
  if (b.kind == "niederreiter") return static_cast<std::int64_t>(b.e0);
  return std::nullopt;
}

Json admissibility_json(const AdmissibilityReport& r, std::uint32_t base) {
  Json j;
  j["admissible"] = r.admissible;
  j["min"] = rational_json(r.min_value(base));
  j["worst_pair"] = {r.worst_k, r.worst_n};
  j["pairs_checked"] = r.pairs_checked;
  j["violations"] = r.violations;
  return j;
}

// generate ------------------------------------------------------------------

int cmd_generate(Context& ctx, const std::string& export_path) {
  const BuiltSequence b = build_sequence(ctx.cfg);
  const std::string fmt = format_of(ctx, {"json", "csv", "text"}, "generate");
  std::uint64_t count = 0;
  if (auto n = ctx.cfg.get_opt_uint("n_count")) {
    count = *n;
  } else {
    count = upow(require_base(b, "generate"), get_m(ctx.cfg, b.base));
  }
  const std::vector<Point> pts = first_points(b, ctx.cfg, count);
  const std::uint64_t start = ctx.cfg.get_uint("n_start");

  if (!export_path.empty()) {
    if (!b.digital) throw ConfigError("kind '" + b.kind + "' has no generating matrices to export");
    const std::size_t cols = ctx.cfg.has("m") ? static_cast<std::size_t>(ctx.cfg.get_uint("m")) : 0;
    std::ofstream f(export_path, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot write matrices to '" + export_path + "'");
    f << matrices_to_json(*b.digital, b.digital->precision, cols) << "\n";
  }

  if (fmt == "json") {
    Json j = header("generate");
    j["sequence"] = b.seq->describe();
    j["base"] = b.base;
    j["n_start"] = start;
    j["n_count"] = count;
    j["points"] = Json::array();
    for (std::size_t k = 0; k < pts.size(); ++k) {
      Json p;
      p["n"] = start + k;
      Json digits = Json::array();
      Json values = Json::array();
      for (const auto& c : pts[k]) {
        digits.push_back(c.str());
        values.push_back(decimal(c.approx()));
      }
      p["digits"] = std::move(digits);
      p["decimal"] = std::move(values);
      j["points"].push_back(std::move(p));
    }
    emit_json(ctx, j);
    return kExitOk;
  }

  std::ostringstream os;
  if (fmt == "csv" && !pts.empty()) {
    os << "n";
    for (std::size_t i = 1; i <= pts.front().size(); ++i) os << ",x" << i << "_digits,x" << i << "_decimal";
    os << "\n";
  }
  for (std::size_t k = 0; k < pts.size(); ++k) {
    os << start + k;
    for (const auto& c : pts[k]) {
      if (fmt == "csv")
        os << "," << c.str() << "," << decimal(c.approx());
      else
        os << " " << c.str() << " " << decimal(c.approx());
    }
    os << "\n";
  }
  emit(ctx, os.str());
  return kExitOk;
}

// verify / t-value / admissibility -------------------------------------------

int cmd_verify(Context& ctx) {
  const BuiltSequence b = build_sequence(ctx.cfg);
  format_of(ctx, {"json"}, "verify");
  const std::uint32_t base = require_base(b, "verify");
  const std::size_t m = get_m(ctx.cfg, base);
  std::size_t t = 0;
  if (auto tv = ctx.cfg.get_opt_uint("t")) {
    t = static_cast<std::size_t>(*tv);
  } else if (b.kind == "niederreiter") {
    const std::size_t s = b.seq->dimension();
    t = b.e0 > s ? b.e0 - s : 0;
  } else {
    throw ConfigError("key 't' is required for kind '" + b.kind + "'");
  }
  if (t > m) throw ConfigError("key 't' exceeds m");
  const std::vector<Point> pts = first_points(b, ctx.cfg, upow(base, m));
  const NetReport rep = is_net(pts, base, t, m);

  Json j = header("verify");
  j["sequence"] = b.seq->describe();
  j["b"] = base;
  j["m"] = m;
  j["s"] = rep.s;
  j["n_start"] = ctx.cfg.get_uint("n_start");
  j["t"] = t;
  j["verified"] = rep.verified;
  j["exact_t"] = rep.exact_t ? Json(*rep.exact_t) : Json();
  if (rep.violation) {
    Json v;
    v["a"] = rep.violation->a;
    v["d"] = rep.violation->d;
    v["count"] = rep.violation_count;
    v["expected"] = upow(base, t);
    j["violation"] = std::move(v);
  } else {
    j["violation"] = nullptr;
  }
  bool ok = rep.verified;
  if (auto d = d_param(b, ctx.cfg)) {
    const AdmissibilityReport a = is_d_admissible(pts, base, *d);
    Json aj = admissibility_json(a, base);
    aj["d"] = *d;
    aj["threshold"] = rational_json(Rational(1, ipow(base, static_cast<std::uint64_t>(std::max<std::int64_t>(*d, 0)))));
    j["admissibility"] = std::move(aj);
    ok = ok && a.admissible;
  }
  j["passed"] = ok;
  emit_json(ctx, j);
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_t_value(Context& ctx) {
  const BuiltSequence b = build_sequence(ctx.cfg);
  const std::string fmt = format_of(ctx, {"json", "text"}, "t-value");
  const std::uint32_t base = require_base(b, "t-value");
  const std::size_t m = get_m(ctx.cfg, base);
  const std::vector<Point> pts = first_points(b, ctx.cfg, upow(base, m));
  const std::size_t t = exact_t_value(pts, base, m);
  if (fmt == "text") {
    emit(ctx, std::to_string(t) + "\n");
    return kExitOk;
  }
  Json j = header("t-value");
  j["sequence"] = b.seq->describe();
  j["b"] = base;
  j["m"] = m;
  j["s"] = b.seq->dimension();
  j["n_start"] = ctx.cfg.get_uint("n_start");
  j["exact_t"] = t;
  emit_json(ctx, j);
  return kExitOk;
}

int cmd_admissibility(Context& ctx) {
  const BuiltSequence b = build_sequence(ctx.cfg);
  format_of(ctx, {"json"}, "admissibility");
  const std::uint32_t base = require_base(b, "admissibility");
  const std::size_t m = get_m(ctx.cfg, base);
  const std::vector<Point> pts = first_points(b, ctx.cfg, upow(base, m));

  Json j = header("admissibility");
  j["sequence"] = b.seq->describe();
  j["b"] = base;
  j["m"] = m;
  const AdmissibilityReport weak = weak_admissibility(pts, base);
  Json wj = admissibility_json(weak, base);
  wj["kappa_m"] = wj["min"];
  j["weak"] = std::move(wj);
  bool ok = weak.admissible;
  if (auto d = d_param(b, ctx.cfg)) {
    const AdmissibilityReport seq = is_d_admissible(pts, base, *d);
    const AdmissibilityReport net = is_d_admissible_net(pts, base, *d, m);
    j["d"] = *d;
    j["sequence_form"] = admissibility_json(seq, base);
    j["point_set_form"] = admissibility_json(net, base);
    ok = ok && seq.admissible && net.admissible;
  }
  j["passed"] = ok;
  emit_json(ctx, j);
  return ok ? kExitOk : kExitVerificationFailed;
}

// brs / discrepancy / dual ---------------------------------------------------

int cmd_brs(Context& ctx, std::ostream& err) {
  const BuiltSequence b = build_sequence(ctx.cfg);
  const std::string fmt = format_of(ctx, {"json", "csv"}, "brs");
  const std::uint32_t base = b.base == 0 ? 2 : b.base;
  const std::vector<GammaSpec> gammas = parse_gammas(ctx.cfg, base);
  const std::uint64_t m_max = ctx.cfg.get_uint("m_max");
  if (static_cast<double>(m_max) * std::log2(static_cast<double>(base)) > 24.0)
    throw ConfigError("key 'm_max': b^m_max exceeds the 2^24 point limit");
  if (fmt == "csv" && gammas.size() != 1) throw ConfigError("csv output takes exactly one gamma; use json for several");
  for (const auto& g : gammas)
    if (g.dimension() != b.seq->dimension())
      throw ConfigError("gamma '" + g.str() + "' has dimension " + std::to_string(g.dimension()) +
                        ", sequence has " + std::to_string(b.seq->dimension()));

  bool anomaly = false;
  Json j = header("brs");
  j["sequence"] = b.seq->describe();
  j["base"] = base;
  j["m_max"] = m_max;
  j["experiments"] = Json::array();
  std::ostringstream csv;
  for (const auto& g : gammas) {
    const DeltaProfile prof = delta_profile(*b.seq, g, static_cast<std::size_t>(m_max));
    const BoundedVerdict v = bounded_verdict(prof, g);
    anomaly = anomaly || v.anomaly;
    if (fmt == "csv") {
      csv << "m,N_at_sup,sup_abs_delta_num,sup_abs_delta_den\n";
      for (const auto& e : prof.entries)
        csv << e.m << "," << e.n_at_sup << "," << numerator(e.sup_abs_delta) << ","
            << denominator(e.sup_abs_delta) << "\n";
      err << "verdict gamma=" << g.str() << " bounded=" << (v.bounded ? "true" : "false")
          << " cond=" << (v.cond ? "true" : "false") << " m0=" << v.m0 << (v.anomaly ? " ANOMALY" : "") << "\n";
      continue;
    }
    Json e;
    e["gamma"] = g.str();
    e["lambda"] = rational_json(g.volume());
    e["cond"] = v.cond;
    e["bounded"] = v.bounded;
    e["m0"] = v.m0;
    e["verdict"] = v.anomaly ? "ANOMALY" : "consistent";
    e["profile"] = Json::array();
    for (const auto& p : prof.entries) {
      Json row;
      row["m"] = p.m;
      row["N_at_sup"] = p.n_at_sup;
      row["sup_abs_delta_num"] = numerator(p.sup_abs_delta).str();
      row["sup_abs_delta_den"] = denominator(p.sup_abs_delta).str();
      e["profile"].push_back(std::move(row));
    }
    j["experiments"].push_back(std::move(e));
  }
  if (fmt == "csv")
    emit(ctx, csv.str());
  else
    emit_json(ctx, j);
  return anomaly ? kExitVerificationFailed : kExitOk;
}

int cmd_discrepancy(Context& ctx) {
  const BuiltSequence b = build_sequence(ctx.cfg);
  format_of(ctx, {"json"}, "discrepancy");
  std::uint64_t count = 0;
  if (auto n = ctx.cfg.get_opt_uint("n_count"))
    count = *n;
  else
    count = upow(require_base(b, "discrepancy"), get_m(ctx.cfg, b.base));
  const std::vector<Point> pts = first_points(b, ctx.cfg, count);
  const StarDiscrepancy d = star_discrepancy_exact(pts);
  Json j = header("discrepancy");
  j["sequence"] = b.seq->describe();
  j["n_start"] = ctx.cfg.get_uint("n_start");
  j["N"] = count;
  j["s"] = b.seq->dimension();
  j["star_discrepancy"] = rational_json(d.value);
  j["decimal"] = decimal(to_double(d.value));
  Json corner = Json::array();
  for (const auto& c : d.corner) corner.push_back(to_string(c));
  j["corner"] = std::move(corner);
  j["closed"] = d.closed;
  emit_json(ctx, j);
  return kExitOk;
}

int cmd_dual(Context& ctx) {
  const BuiltSequence b = build_sequence(ctx.cfg);
  format_of(ctx, {"json"}, "dual");
  if (!b.digital) throw ConfigError("kind '" + b.kind + "' is not a digital sequence");
  const std::size_t m = get_m(ctx.cfg, b.base);
  const Matrix cm = overall_matrix(*b.digital, m);
  const DualBasis dual = dual_space(*b.digital, m);
  Json j = header("dual");
  j["sequence"] = b.seq->describe();
  j["field"] = b.digital->field.describe();
  j["m"] = m;
  j["s"] = dual.s;
  std::vector<std::vector<std::uint32_t>> grid;
  for (std::size_t r = 0; r < cm.rows(); ++r) grid.push_back(cm.row(r));
  j["overall_matrix"] = grid;
  j["row_space_dim"] = dual.row_space_dim;
  j["dual_dim"] = dual.basis.size();
  j["basis"] = dual.basis;
  emit_json(ctx, j);
  return kExitOk;
}

int cmd_describe(Context& ctx) {
  const std::string fmt = format_of(ctx, {"json", "text"}, "describe");
  if (fmt == "text") {
    std::ostringstream os;
    for (const auto& k : config_keys()) {
      os << k.key << " = " << ctx.cfg.get(k.key) << "\n";
      os << "  # " << k.help << "; default: " << (k.default_value.empty() ? "(unset)" : k.default_value) << "\n";
    }
    emit(ctx, os.str());
    return kExitOk;
  }
  Json j = header("describe");
  j["keys"] = Json::array();
  for (const auto& k : config_keys()) {
    Json e;
    e["key"] = k.key;
    e["value"] = ctx.cfg.get(k.key);
    e["default"] = k.default_value;
    e["help"] = k.help;
    j["keys"].push_back(std::move(e));
  }
  emit_json(ctx, j);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ldseq: low-discrepancy digital sequences, net verification and bounded remainder experiments"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  struct Options {
    std::string config_path;
    std::vector<std::string> sets;
    std::map<std::string, std::string> flags;
    std::string export_path;
  } opts;

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"generate", "Write points x_n for the configured index range"},
      {"verify", "Check the (t,m,s)-net property and d-admissibility"},
      {"t-value", "Compute the exact t-value of the first b^m points"},
      {"admissibility", "Compute kappa_m and test d-admissibility"},
      {"brs", "Bounded remainder profiles sup |Delta| per scale for each gamma"},
      {"discrepancy", "Exact star discrepancy of a point set"},
      {"dual", "Overall generating matrix and its dual space"},
      {"describe", "Print every configuration key with its default"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-c,--config", opts.config_path, "Key-value configuration file");
    sub->add_option("--set", opts.sets, "Override a key: --set key=value");
    for (const auto& k : config_keys()) {
      sub->add_option_function<std::string>(
          "--" + k.key, [&opts, key = k.key](const std::string& v) { opts.flags[key] = v; }, k.help);
    }
    if (std::string(name) == "generate")
      sub->add_option("--export-matrices", opts.export_path, "Write generating matrices as row-major JSON");
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: config: " << one_line(e.what()) << "\n";
    return kExitConfigError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Context ctx;
  ctx.out = &out;
  try {
    if (!opts.config_path.empty()) ctx.cfg.load_file(opts.config_path);
    for (const auto& s : opts.sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + s + "'");
      ctx.cfg.set(s.substr(0, eq), s.substr(eq + 1));
    }
    for (const auto& [k, v] : opts.flags) ctx.cfg.set(k, v);

    if (command == "generate") return cmd_generate(ctx, opts.export_path);
    if (command == "verify") return cmd_verify(ctx);
    if (command == "t-value") return cmd_t_value(ctx);
    if (command == "admissibility") return cmd_admissibility(ctx);
    if (command == "brs") return cmd_brs(ctx, err);
    if (command == "discrepancy") return cmd_discrepancy(ctx);
    if (command == "dual") return cmd_dual(ctx);
    return cmd_describe(ctx);
  } catch (const CertificationError& e) {
    err << "error: certification: " << one_line(e.what()) << "\n";
    return kExitCertificationError;
  } catch (const Error& e) {
    err << "error: config: " << one_line(e.what()) << "\n";
    return kExitConfigError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: config: " << one_line(e.what()) << "\n";
    return kExitConfigError;
  }
}

}  // namespace ldseq::cli
