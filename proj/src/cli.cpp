// Copyright 2026 The HPDA Authors
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

#include "hpda/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hpda/analysis.hpp"
#include "hpda/cache_sim.hpp"
#include "hpda/constructions.hpp"
#include "hpda/errors.hpp"
#include "hpda/io.hpp"

namespace hpda {

namespace {

// A failure with a chosen exit status, raised inside a subcommand.
struct Exit {
  int status;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kUsageError, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes `text` to `path`, or to `out` when the path is empty or "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Exit{kUsageError, "cannot write " + path};
  file << text;
}

std::string loads_summary(const SchemeLoads& l, int z1, int z2) {
  std::ostringstream s;
  s << "F=" << l.f << " R1=" << to_fraction_string(l.r1) << " R2=" << to_fraction_string(l.r2)
    << " Z1=" << z1 << " Z2=" << z2 << " R1~" << to_decimal_string(l.r1)
    << " R2~" << to_decimal_string(l.r2);
  return s.str();
}

Pda read_input_pda(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_pda(text);
  } catch (const ParseError& e) {
    throw Exit{kArtifactError, path + ": " + e.what()};
  } catch (const DimensionError& e) {
    throw Exit{kArtifactError, path + ": " + e.what()};
  }
}

struct PdaOptions {
  std::string kind;
  int k = 0;
  int t = 0;
  std::string out;
};

struct HpdaOptions {
  std::string kind;
  int k1 = 0;
  int k2 = 0;
  int t = 0;
  std::string a;
  std::string b;
  std::string out;
};

struct VerifyOptions {
  std::string path;
};

struct SimulateOptions {
  std::string path;
  int n = 0;
  int packet_bytes = 8;
  std::uint64_t seed = 1;
  std::vector<int> demand;
  std::string dump;
};

struct CompareOptions {
  int k1 = 0;
  int k2 = 0;
  int n = 0;
  std::vector<int> ts;
  std::string grid_step;
  std::string format;
  std::string out;
};

int construct_pda(const PdaOptions& o, std::ostream& out) {
  const Pda p = mn_pda(o.k, o.t);
  emit(o.out, format_pda(p), out);
  return kOk;
}

int construct_hpda(const HpdaOptions& o, std::ostream& out, std::ostream& err) {
  Hpda h;
  if (o.kind == "thm2" || o.kind == "grouping") {
    if (o.k1 == 0 || o.k2 == 0 || o.t == 0) {
      throw Exit{kUsageError, o.kind + " needs --k1, --k2 and --t"};
    }
    h = build_grouping_hpda(o.k1, o.k2, o.t);
  } else {
    if (o.a.empty() || o.b.empty()) throw Exit{kUsageError, o.kind + " needs --a and --b"};
    h = build_hybrid_hpda(read_input_pda(o.a), read_input_pda(o.b));
  }
  emit(o.out, format_hpda(h), out);
  const std::string summary = loads_summary(loads_from_hpda(h), h.params().z1, h.params().z2);
  (o.out.empty() || o.out == "-" ? err : out) << summary << '\n';
  return kOk;
}

template <class Report>
void list_violations(const Report& r, std::ostream& out) {
  for (const auto& v : r.violations) out << "  " << to_string(v.condition) << ": " << v.message << '\n';
}

int verify(const VerifyOptions& o, std::ostream& out) {
  const auto parsed = parse_array(read_file(o.path));
  if (const Pda* p = std::get_if<Pda>(&parsed)) {
    const VerificationReport r = verify_pda(*p);
    const PdaParams& d = p->params();
    out << (r.valid() ? "valid" : "invalid") << " PDA K=" << d.k << " F=" << d.f << " Z=" << d.z
        << " S=" << d.s << '\n';
    list_violations(r, out);
    return r.valid() ? kOk : kSemanticFailure;
  }
  const Hpda& h = std::get<Hpda>(parsed);
  const HpdaReport r = verify_hpda(h);
  const HpdaParams& d = h.params();
  if (r.valid()) {
    out << "valid HPDA K1=" << d.k1 << " K2=" << d.k2 << " "
        << loads_summary(loads_from_hpda(h), d.z1, d.z2) << '\n';
    return kOk;
  }
  out << "invalid HPDA K1=" << d.k1 << " K2=" << d.k2 << " F=" << d.f << '\n';
  list_violations(r, out);
  return kSemanticFailure;
}

int simulate_cmd(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
  const Hpda h = parse_hpda(read_file(o.path));
  DemandVector d;
  if (o.demand.empty()) {
    d = worst_case_demand(h.params().k1, h.params().k2, o.n);
  } else {
    if (o.demand.size() != static_cast<std::size_t>(h.params().k1) * h.params().k2) {
      throw Exit{kUsageError, "--demand needs K1*K2 = " +
                                  std::to_string(h.params().k1 * h.params().k2) + " entries"};
    }
    d = DemandVector{h.params().k1, h.params().k2, {}};
    for (int file : o.demand) d.files.push_back(file - 1);
  }
  const SimulationResult r = simulate(h, o.n, o.packet_bytes, d, o.seed);
  const Transcript& t = r.transcript;
  std::size_t widest = 0;
  for (const auto& m : t.mirrors) widest = std::max(widest, m.size());
  out << (r.success ? "success" : "failure") << " R1=" << t.server.size() << '/' << t.f
      << " R2=" << widest << '/' << t.f << '\n';
  out << "R1~" << to_decimal_string(t.r1()) << " R2~" << to_decimal_string(t.r2()) << '\n';
  out << "server signals: " << t.server.size() << '\n';
  for (std::size_t k = 0; k < t.mirrors.size(); ++k) {
    out << "mirror " << k + 1 << " signals: " << t.mirrors[k].size() << '\n';
  }
  for (const std::string& f : r.failures) err << f << '\n';
  if (!o.dump.empty()) emit(o.dump, t.dump(), out);
  return r.success ? kOk : kSemanticFailure;
}

std::string opt_fraction(const std::optional<Rational>& r) {
  return r ? to_fraction_string(*r) : "";
}

std::string opt_decimal(const std::optional<Rational>& r) {
  return r ? to_decimal_string(*r) : "";
}

std::string comparison_table(const std::vector<ComparisonRow>& rows) {
  std::ostringstream s;
  s << "scheme,t,M1/N,M2/N,R1,R2,F,R1_exact,R2_exact,alpha,beta,status\n";
  for (const ComparisonRow& r : rows) {
    s << r.scheme << ',' << r.t << ',' << to_fraction_string(r.m1_ratio) << ','
      << to_fraction_string(r.m2_ratio) << ',' << opt_decimal(r.r1) << ',' << opt_decimal(r.r2)
      << ',' << (r.f ? r.f->str() : "") << ',' << opt_fraction(r.r1) << ',' << opt_fraction(r.r2)
      << ',' << (r.split ? to_fraction_string(r.split->alpha) : "") << ','
      << (r.split ? to_fraction_string(r.split->beta) : "") << ','
      << (r.feasible ? "ok" : "infeasible") << '\n';
  }
  return s.str();
}

std::string comparison_json(const std::vector<ComparisonRow>& rows) {
  using nlohmann::json;
  auto exact = [](const std::optional<Rational>& r) -> json {
    if (!r) return nullptr;
    return json{{"exact", to_fraction_string(*r)}, {"value", to_decimal_string(*r)}};
  };
  json arr = json::array();
  for (const ComparisonRow& r : rows) {
    json j{{"scheme", r.scheme},
           {"t", r.t},
           {"m1_ratio", to_fraction_string(r.m1_ratio)},
           {"m2_ratio", to_fraction_string(r.m2_ratio)},
           {"r1", exact(r.r1)},
           {"r2", exact(r.r2)},
           {"f", r.f ? json(r.f->str()) : json(nullptr)},
           {"feasible", r.feasible}};
    if (r.split) {
      j["alpha"] = to_fraction_string(r.split->alpha);
      j["beta"] = to_fraction_string(r.split->beta);
    }
    if (!r.note.empty()) j["note"] = r.note;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

int compare(const CompareOptions& o, std::ostream& out) {
  std::optional<Rational> step;
  if (!o.grid_step.empty()) {
    try {
      step = parse_rational(o.grid_step);
    } catch (const Error& e) {
      throw Exit{kUsageError, "--grid-step: " + std::string(e.what())};
    }
  }
  std::string format = o.format;
  if (format.empty()) {
    const char* env = std::getenv("HPDA_FORMAT");
    format = env != nullptr && *env != '\0' ? env : "table";
  }
  if (format != "table" && format != "json") {
    throw Exit{kUsageError, "unknown format '" + format + "', expected table or json"};
  }
  const auto rows = compare_sweep(o.k1, o.k2, o.n, o.ts, step);
  emit(o.out, format == "json" ? comparison_json(rows) : comparison_table(rows), out);
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hierarchical placement delivery arrays: build, verify, simulate, compare"};
  app.require_subcommand(1);

  PdaOptions pda_opts;
  auto* pda_cmd = app.add_subcommand("construct-pda", "Write an MN placement delivery array");
  pda_cmd->add_option("kind", pda_opts.kind, "Array family")->required()->check(CLI::IsMember({"mn"}));
  pda_cmd->add_option("--k", pda_opts.k, "Number of users")->required();
  pda_cmd->add_option("--t", pda_opts.t, "Memory level")->required();
  pda_cmd->add_option("--out", pda_opts.out, "Output file (default stdout)");

  HpdaOptions hpda_opts;
  auto* hpda_cmd = app.add_subcommand("construct-hpda", "Write a two-layer array");
  hpda_cmd->add_option("kind", hpda_opts.kind, "thm2 (grouping) or thm3 (hybrid)")
      ->required()
      ->check(CLI::IsMember({"thm2", "thm3", "grouping", "hybrid"}));
  hpda_cmd->add_option("--k1", hpda_opts.k1, "Mirror count (grouping)");
  hpda_cmd->add_option("--k2", hpda_opts.k2, "Users per mirror (grouping)");
  hpda_cmd->add_option("--t", hpda_opts.t, "Memory level of the MN array (grouping)");
  hpda_cmd->add_option("--a", hpda_opts.a, "Outer PDA file (hybrid)");
  hpda_cmd->add_option("--b", hpda_opts.b, "Inner PDA file (hybrid)");
  hpda_cmd->add_option("--out", hpda_opts.out, "Output file (default stdout)");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Check a PDA or HPDA file");
  verify_cmd->add_option("path", verify_opts.path, "Array file")->required();

  SimulateOptions sim_opts;
  auto* sim_cmd = app.add_subcommand("simulate", "Run placement, delivery and decoding");
  sim_cmd->add_option("path", sim_opts.path, "HPDA file")->required();
  sim_cmd->add_option("--n", sim_opts.n, "Number of files")->required();
  sim_cmd->add_option("--packet-bytes", sim_opts.packet_bytes, "Bytes per packet")
      ->capture_default_str();
  sim_cmd->add_option("--seed", sim_opts.seed, "Library seed")->capture_default_str();
  sim_cmd->add_option("--demand", sim_opts.demand,
                      "Requested files, 1-based, mirror-major (default: all distinct)")
      ->delimiter(',');
  sim_cmd->add_option("--dump", sim_opts.dump, "Write the signal transcript here ('-' = stdout)");

  CompareOptions cmp_opts;
  auto* cmp_cmd = app.add_subcommand("compare", "Tabulate loads of all schemes per memory level");
  cmp_cmd->add_option("--k1", cmp_opts.k1, "Mirror count")->required();
  cmp_cmd->add_option("--k2", cmp_opts.k2, "Users per mirror")->required();
  cmp_cmd->add_option("--n", cmp_opts.n, "Number of files")->required();
  cmp_cmd->add_option("--t", cmp_opts.ts, "Memory levels, comma separated")->delimiter(',');
  cmp_cmd->add_option("--grid-step", cmp_opts.grid_step,
                      "Also search alpha and beta on this grid, e.g. 0.01 or 1/100");
  cmp_cmd->add_option("--format", cmp_opts.format, "table or json (default $HPDA_FORMAT, else table)");
  cmp_cmd->add_option("--out", cmp_opts.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, msg, msg);
    (code == 0 ? out : err) << msg.str();
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*pda_cmd) return construct_pda(pda_opts, out);
    if (*hpda_cmd) return construct_hpda(hpda_opts, out, err);
    if (*verify_cmd) return verify(verify_opts, out);
    if (*sim_cmd) return simulate_cmd(sim_opts, out, err);
    if (*cmp_cmd) return compare(cmp_opts, out);
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.status;
  } catch (const InvalidArtifactError& e) {
    err << "error: " << e.what() << '\n';
    return kArtifactError;
  } catch (const DecodeError& e) {
    err << "error: " << e.what() << '\n';
    return kSemanticFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace hpda
