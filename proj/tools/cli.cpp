#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "mmk/classification.hpp"
#include "mmk/errors.hpp"
#include "mmk/fusion.hpp"
#include "serialize.hpp"
#include "tables.hpp"
#include "verify.hpp"

namespace mmk::cli {
namespace {

using io::json;

constexpr int kMaxEnumerateLevel = 32;
constexpr int kMaxEnumerateM = 12;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Options shared by the subcommands; each subcommand registers the ones it accepts.
struct Options {
  std::string algebra;
  std::optional<int> level;
  std::optional<int> m;
  std::optional<int> max_m;
  std::string left;
  std::string right;
  std::string input;
  std::string format;
  std::string which;
  bool allow_large = false;
};

void add_selector(CLI::App* app, Options& o) {
  app->add_option("--algebra", o.algebra, "su2 or minimal")->check(CLI::IsMember({"su2", "minimal"}));
  app->add_option("--level", o.level, "SU(2) level k");
  app->add_option("--m", o.m, "minimal model parameter m");
}

void add_format(CLI::App* app, Options& o, std::vector<std::string> allowed) {
  app->add_option("--format", o.format, "output format")->check(CLI::IsMember(std::move(allowed)));
}

Algebra resolve_algebra(const Options& o) {
  if (o.level && o.m) throw UsageError("--level and --m are mutually exclusive");
  if (o.algebra == "su2" || (o.algebra.empty() && o.level)) {
    if (o.m) throw UsageError("--m conflicts with --algebra su2");
    if (!o.level) throw UsageError("--algebra su2 needs --level");
    return Algebra::su2(*o.level);
  }
  if (o.algebra == "minimal" || (o.algebra.empty() && o.m)) {
    if (o.level) throw UsageError("--level conflicts with --algebra minimal");
    if (!o.m) throw UsageError("--algebra minimal needs --m");
    return Algebra::minimal(*o.m);
  }
  throw UsageError("select an algebra with --level K or --m M");
}

ModularDatum datum_for(const Algebra& a) {
  return a.family == Family::su2 ? su2_data(a.level) : minimal_data(a.level);
}

unsigned workers_from_env() {
  const char* raw = std::getenv("MMK_WORKERS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v <= 0) throw UsageError("MMK_WORKERS must be a positive integer");
  return static_cast<unsigned>(v);
}

json read_json(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("invalid JSON in " + path + ": " + e.what());
  }
}

std::vector<json> as_items(const json& j) {
  if (j.is_array()) return {j.begin(), j.end()};
  return {j};
}

Label parse_label(const std::string& text, const Algebra& a, const char* flag) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + " expects integers, got '" + text + "'");
    }
  }
  if (a.family == Family::su2) {
    if (parts.size() != 1 || parts[0] < 0 || parts[0] > a.level)
      throw UsageError(std::string(flag) + " expects a spin label 0.." + std::to_string(a.level));
    return Su2Label{parts[0]};
  }
  if (parts.size() != 2) throw UsageError(std::string(flag) + " expects p,q");
  const MinimalLabel l{parts[0], parts[1]};
  if (canonical_label(a.level, l.p, l.q) != l)
    throw DomainError("label " + text + " is not canonical for m=" + std::to_string(a.level));
  return l;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_modular_data(const Options& o, std::ostream& out) {
  const auto d = datum_for(resolve_algebra(o));
  if (o.format == "csv") {
    out << "label,h,t";
    for (std::size_t i = 0; i < d.size(); ++i) out << ",S_" << i;
    out << "\n";
    for (std::size_t i = 0; i < d.size(); ++i) {
      out << '"' << to_string(d.labels[i]) << "\"," << io::rational_string(d.h[i]) << ","
          << io::rational_string(d.t[i]);
      for (std::size_t j = 0; j < d.size(); ++j)
        out << "," << json(d.S(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))).dump();
      out << "\n";
    }
    return 0;
  }
  print_json(out, io::datum_json(d));
  return 0;
}

int cmd_fusion(const Options& o, std::ostream& out) {
  const Algebra a = resolve_algebra(o);
  if (o.left.empty() || o.right.empty()) throw UsageError("fusion needs --left and --right");
  const Label left = parse_label(o.left, a, "--left");
  const Label right = parse_label(o.right, a, "--right");
  std::vector<Label> result;
  if (a.family == Family::minimal) {
    for (const auto& l : minimal_fusion(a.level, std::get<MinimalLabel>(left), std::get<MinimalLabel>(right)))
      result.emplace_back(l);
  } else {
    const auto d = su2_data(a.level);
    const auto N = verlinde(d);
    const auto x = static_cast<std::size_t>(std::get<Su2Label>(left).a);
    const auto y = static_cast<std::size_t>(std::get<Su2Label>(right).a);
    for (std::size_t c = 0; c < d.size(); ++c)
      for (int r = 0; r < N(x, y, c); ++r) result.push_back(d.labels[c]);
  }
  print_json(out, io::fusion_json(left, right, result));
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Algebra a = resolve_algebra(o);
  const int cap = a.family == Family::su2 ? kMaxEnumerateLevel : kMaxEnumerateM;
  if (a.level > cap && !o.allow_large)
    throw UsageError("enumeration beyond " + std::string(a.family == Family::su2 ? "level " : "m=") +
                     std::to_string(cap) + " needs --allow-large");
  const auto d = datum_for(a);
  const auto invariants = enumerate_invariants(d, {workers_from_env()});
  if (o.format == "csv" || o.format == "markdown") {
    tables::Table t;
    t.header = {"index", "label", "typeI", "trace"};
    for (std::size_t i = 0; i < invariants.size(); ++i) {
      std::string label = "?";
      try {
        label = label_invariant(invariants[i]).to_string();
      } catch (const LabelingError&) {
      }
      t.rows.push_back({std::to_string(i), label, is_type_I(invariants[i]).type_I ? "true" : "false",
                        std::to_string(invariants[i].Z.trace())});
    }
    out << tables::render(t, o.format == "csv" ? tables::Format::csv : tables::Format::markdown);
    return 0;
  }
  json arr = json::array();
  for (const auto& inv : invariants) arr.push_back(io::invariant_json(d, inv));
  print_json(out, arr);
  return 0;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const json input = read_json(o.input);
  json results = json::array();
  bool all = true;
  for (const auto& item : as_items(input)) {
    const auto inv = io::invariant_from_json(item);
    const auto d = datum_for(inv.algebra);
    const auto check = is_modular_invariant(d, inv.Z);
    json r = {{"ok", check.ok}};
    if (!check.ok) {
      r["condition"] = check.condition;
      r["row"] = check.row;
      r["col"] = check.col;
      r["message"] = check.message;
      err << "violation (" << check.condition << "): " << check.message << "\n";
      all = false;
    }
    results.push_back(std::move(r));
  }
  print_json(out, input.is_array() ? results : results.at(0));
  return all ? 0 : 1;
}

int cmd_label(const Options& o, std::ostream& out) {
  const json input = read_json(o.input);
  json results = json::array();
  for (const auto& item : as_items(input)) {
    const auto inv = io::invariant_from_json(item);
    results.push_back(io::label_result_json(datum_for(inv.algebra), inv));
  }
  print_json(out, input.is_array() ? results : results.at(0));
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  std::vector<std::pair<ModularDatum, std::vector<ClassificationEntry>>> groups;
  if (o.m && o.max_m) throw UsageError("--m and --max-m are mutually exclusive");
  if (o.max_m) {
    if (!o.algebra.empty() && o.algebra != "minimal") throw UsageError("--max-m applies to the minimal models");
    if (o.level) throw UsageError("--max-m conflicts with --level");
    for (int m = 3; m <= *o.max_m; ++m) groups.emplace_back(minimal_data(m), std::vector<ClassificationEntry>{});
  } else {
    const Algebra a = resolve_algebra(o);
    groups.emplace_back(datum_for(a), std::vector<ClassificationEntry>{});
  }
  for (auto& [d, entries] : groups) {
    if (d.algebra.family == Family::su2) {
      entries = classify_su2(d.algebra.level);
    } else {
      entries = classify_minimal(d.algebra.level);
      for (auto& e : classify_minimal_type_II(d.algebra.level)) entries.push_back(std::move(e));
      std::stable_sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
        return x.label.to_string() < y.label.to_string();
      });
    }
  }
  if (o.format == "csv" || o.format == "markdown") {
    tables::Table t;
    t.header = {"algebra", "level", "label", "typeI", "index", "mu_extension", "ab", "full", "chiral", "ambichiral", "subnets"};
    for (const auto& [d, entries] : groups)
      for (const auto& e : entries)
        t.rows.push_back({d.algebra.family == Family::su2 ? "su2" : "minimal", std::to_string(d.algebra.level),
                          e.label.to_string(), e.type_I ? "true" : "false", json(e.index).dump(),
                          json(e.mu_extension).dump(), std::to_string(e.counts.ab), std::to_string(e.counts.full),
                          std::to_string(e.counts.chiral), std::to_string(e.counts.ambichiral),
                          std::to_string(e.subnets)});
    out << tables::render(t, o.format == "csv" ? tables::Format::csv : tables::Format::markdown);
    return 0;
  }
  json arr = json::array();
  for (const auto& [d, entries] : groups)
    for (const auto& e : entries) arr.push_back(io::entry_json(d, e));
  print_json(out, arr);
  return 0;
}

int cmd_tables(const Options& o, std::ostream& out) {
  if (o.which.empty()) throw UsageError("tables needs --which");
  const auto& ids = tables::table_ids();
  if (std::find(ids.begin(), ids.end(), o.which) == ids.end()) throw UsageError("unknown table '" + o.which + "'");
  const auto t = tables::build(o.which, o.max_m.value_or(30));
  out << tables::render(t, o.format == "csv" ? tables::Format::csv : tables::Format::markdown);
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const int max_m = o.max_m.value_or(12);
  if (max_m < 3) throw UsageError("--max-m must be >= 3");
  const auto results = verify::run_all(max_m, workers_from_env());
  return verify::report(results, out) ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Modular data, fusion rings and modular invariants of SU(2)_k and the minimal models", "mmk"};
  app.require_subcommand(1);

  auto* modular = app.add_subcommand("modular-data", "S, T, weights and central charge");
  add_selector(modular, o);
  add_format(modular, o, {"json", "csv"});

  auto* fusion = app.add_subcommand("fusion", "fusion product of two labels");
  add_selector(fusion, o);
  fusion->add_option("--left", o.left, "p,q (minimal) or a (su2)");
  fusion->add_option("--right", o.right, "p,q (minimal) or a (su2)");
  add_format(fusion, o, {"json"});

  auto* invariants = app.add_subcommand("invariants", "modular invariants");
  invariants->require_subcommand(1);
  auto* enumerate = invariants->add_subcommand("enumerate", "enumerate all invariants of a datum");
  add_selector(enumerate, o);
  add_format(enumerate, o, {"json", "csv", "markdown"});
  enumerate->add_flag("--allow-large", o.allow_large, "permit enumeration beyond the supported scale");
  auto* check = invariants->add_subcommand("check", "check invariants read from a JSON file");
  check->add_option("--input", o.input, "JSON file")->required();
  add_format(check, o, {"json"});
  auto* label = invariants->add_subcommand("label", "A-D-E label and type I blocks of invariants in a JSON file");
  label->add_option("--input", o.input, "JSON file")->required();
  add_format(label, o, {"json"});

  auto* classify = app.add_subcommand("classify", "classify extensions");
  add_selector(classify, o);
  classify->add_option("--max-m", o.max_m, "classify every minimal model 3..M");
  add_format(classify, o, {"json", "csv", "markdown"});

  auto* tables_cmd = app.add_subcommand("tables", "emit a classification table");
  tables_cmd->add_option("--which", o.which, "vir-mod-I, min-I, min-II or su2-ext");
  tables_cmd->add_option("--max-m", o.max_m, "largest m checked against the closed forms (default 30)");
  add_format(tables_cmd, o, {"markdown", "csv"});

  auto* verify_cmd = app.add_subcommand("verify", "run the property suite");
  verify_cmd->add_option("--max-m", o.max_m, "largest minimal model (default 12)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "mmk: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*modular) return cmd_modular_data(o, out);
    if (*fusion) return cmd_fusion(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*check) return cmd_check(o, out, err);
    if (*label) return cmd_label(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*tables_cmd) return cmd_tables(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "mmk: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "mmk: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "mmk: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace mmk::cli
