#include "taquin/acceptance.hpp"
#include "taquin/characters.hpp"
#include "taquin/content_algebra.hpp"
#include "taquin/derivation.hpp"
#include "taquin/jeu_de_taquin.hpp"
#include "taquin/tableau.hpp"
#include "taquin/trace_forest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

using namespace taquin;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "taquin/1";

enum class Format { text, tsv, json, dot };

// A request the chosen subcommand cannot honour; exits with status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  Format format = Format::text;
  std::uint64_t seed = AcceptanceOptions{}.seed;
  std::string shape;
  std::string class_partition;
  std::string mu;
  std::string method = "mn";
  std::string order = "both";
  std::string target = "skew";
  std::string tableau_file;
  std::string remove;
  std::string cell;
  std::string expression_file;
  int n = 0;
  int n_max = 8;
  int hook = 0;
  bool trace = false;
  bool dot = false;
  bool serial = false;
};

json stamped(const std::string& command) { return {{"schema", kSchema}, {"command", command}}; }

void require(const Config& cfg, std::initializer_list<Format> allowed, const std::string& command) {
  for (Format f : allowed)
    if (f == cfg.format) return;
  throw UsageError(command + ": unsupported --format");
}

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + item + "'");
    }
    if (used != item.size()) throw UsageError("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

SkewShape parse_shape(const std::string& text) {
  try {
    return SkewShape::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Tableau load_tableau(const Config& cfg) {
  if (cfg.tableau_file.empty()) throw UsageError("--tableau is required");
  const std::string text = read_source(cfg.tableau_file);
  std::optional<SkewShape> shape;
  if (!cfg.shape.empty()) shape = parse_shape(cfg.shape);
  Tableau t;
  try {
    t = parse_tableau(text, shape);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!validate(t)) throw UsageError("tableau is not increasing with entries 1.." + std::to_string(t.size()));
  return t;
}

int cmd_count_standard(const Config& cfg) {
  require(cfg, {Format::text, Format::json}, "count-standard");
  const Partition p = parse_partition(cfg.shape);
  const BigInt f = count_standard(p);
  if (cfg.format == Format::json) {
    json j = stamped("count-standard");
    j["shape"] = p.parts();
    j["count"] = to_string(f);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << f << '\n';
  }
  return 0;
}

int cmd_count_skew(const Config& cfg) {
  require(cfg, {Format::text, Format::json}, "count-skew");
  const SkewShape s = parse_shape(cfg.shape);
  json counts = json::object();
  std::optional<BigInt> value;
  bool agree = true;
  for (const auto& [name, order] : {std::pair{"forward", EnumerationOrder::forward},
                                    std::pair{"reverse", EnumerationOrder::reverse}}) {
    if (cfg.order != "both" && cfg.order != name) continue;
    const BigInt c = count_skew(s, order);
    counts[name] = to_string(c);
    if (value && *value != c) agree = false;
    value = c;
  }
  if (cfg.format == Format::json) {
    json j = stamped("count-skew");
    j["shape"] = s.to_string();
    j["counts"] = counts;
    j["agree"] = agree;
    std::cout << j.dump(2) << '\n';
  } else if (agree) {
    std::cout << *value << '\n';
  } else {
    std::cout << "forward " << counts["forward"].get<std::string>() << " != reverse "
              << counts["reverse"].get<std::string>() << '\n';
  }
  return agree ? 0 : 1;
}

int cmd_char(const Config& cfg) {
  require(cfg, {Format::text, Format::json}, "char");
  const Partition lambda = parse_partition(cfg.shape);
  const Partition cls = parse_partition(cfg.class_partition);
  if (lambda.size() != cls.size()) throw UsageError("shape and class must have the same size");
  std::vector<int> head;
  for (int p : cls.parts())
    if (p > 1) head.push_back(p);
  const Partition mu(head);

  BigInt value;
  if (cfg.method == "mn") {
    value = chi_mn(lambda, cls);
  } else if (cfg.method == "skew") {
    value = chi_via_skew(lambda, mu, enumeration_skew_counter());
  } else {
    DerivationEngine engine;
    const auto rec = engine.character_formula(mu);
    if (!rec) {
      std::cerr << "derivation failed (" << rec.failure().stage << "): " << rec.failure().detail << '\n';
      return 3;
    }
    const Rational scaled = eval_on_shape(rec.value().expression, lambda) * Rational(count_standard(lambda)) /
                            Rational(falling_factorial(lambda.size(), mu.size()));
    if (denominator(scaled) != 1) {
      std::cerr << "formula value " << to_string(scaled) << " is not an integer\n";
      return 1;
    }
    value = numerator(scaled);
  }
  if (cfg.format == Format::json) {
    json j = stamped("char");
    j["shape"] = lambda.parts();
    j["class"] = cls.parts();
    j["method"] = cfg.method;
    j["value"] = to_string(value);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << value << '\n';
  }
  return 0;
}

int cmd_char_table(const Config& cfg) {
  require(cfg, {Format::text, Format::tsv, Format::json}, "char-table");
  if (cfg.n < 1) throw UsageError("--n must be positive");
  const CharacterTable table = character_table(cfg.n);
  if (cfg.format == Format::json) {
    json j = stamped("char-table");
    j["n"] = cfg.n;
    j["partitions"] = json::array();
    for (const Partition& p : table.partitions) j["partitions"].push_back(p.parts());
    j["values"] = json::array();
    for (const auto& row : table.values) {
      json r = json::array();
      for (const BigInt& v : row) r.push_back(to_string(v));
      j["values"].push_back(r);
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "lambda\\mu";
  for (const Partition& p : table.partitions) std::cout << '\t' << p.to_string();
  std::cout << '\n';
  for (std::size_t i = 0; i < table.partitions.size(); ++i) {
    std::cout << table.partitions[i].to_string();
    for (const BigInt& v : table.values[i]) std::cout << '\t' << v;
    std::cout << '\n';
  }
  return 0;
}

std::string path_text(const std::vector<Cell>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) out += (i ? " -> " : "") + to_string(path[i]);
  return out;
}

json cells_json(const std::vector<Cell>& cs) {
  json out = json::array();
  for (const Cell& c : cs) out.push_back({c.col, c.row});
  return out;
}

int cmd_jdt(const Config& cfg) {
  require(cfg, {Format::text, Format::json}, "jdt");
  const Tableau t = load_tableau(cfg);
  const std::vector<int> removed = parse_list(cfg.remove);
  json steps = json::array();
  std::ostringstream text;
  text << "start: " << to_string(t) << '\n';
  const BijectionImage image = bijection_forward(t, removed, [&](std::size_t i, const SlideResult& slide,
                                                                 const Tableau& after) {
    if (cfg.format == Format::json) {
      steps.push_back({{"entry", removed[i]},
                       {"path", cells_json(slide.path)},
                       {"slid", to_string(slide.tableau)},
                       {"after", to_string(after)},
                       {"inner", after.inner().parts()}});
      return;
    }
    if (!cfg.trace) return;
    text << "slide " << removed[i] << ": " << path_text(slide.path) << '\n';
    text << "  slid:   " << to_string(slide.tableau) << '\n';
    text << "  vacate: " << to_string(after) << "  (inner " << after.inner().to_string() << ")\n";
  });
  const auto [back, back_removed] = bijection_backward(image);
  const bool inverse_ok = back == t && back_removed == removed;
  if (cfg.format == Format::json) {
    json j = stamped("jdt");
    j["tableau"] = to_string(t);
    j["removed"] = removed;
    j["steps"] = steps;
    j["skew"] = {{"shape", image.skew.shape().to_string()}, {"tableau", to_string(image.skew)}};
    j["exit_order"] = {{"shape", image.exit_order.outer().to_string()}, {"tableau", to_string(image.exit_order)}};
    j["inverse_ok"] = inverse_ok;
    std::cout << j.dump(2) << '\n';
  } else {
    text << "skew " << image.skew.shape().to_string() << ": " << to_string(image.skew) << '\n';
    text << "exit order " << image.exit_order.outer().to_string() << ": " << to_string(image.exit_order) << '\n';
    text << "inverse " << (inverse_ok ? "ok" : "MISMATCH") << '\n';
    std::cout << text.str();
  }
  return inverse_ok ? 0 : 1;
}

int cmd_trace_forest(const Config& cfg) {
  const Format format = cfg.dot ? Format::dot : cfg.format;
  if (format == Format::tsv) throw UsageError("trace-forest: unsupported --format");
  const Tableau t = load_tableau(cfg);
  const TraceForest f = TraceForest::build(t);
  if (format == Format::dot) {
    std::cout << to_dot(f, t);
    return 0;
  }
  std::optional<Cell> cell;
  if (!cfg.cell.empty()) {
    const std::vector<int> xy = parse_list(cfg.cell);
    if (xy.size() != 2 || !t.has_cell({xy[0], xy[1]})) throw UsageError("--cell must be col,row of a cell");
    cell = Cell{xy[0], xy[1]};
  }
  if (format == Format::json) {
    json j = stamped("trace-forest");
    j["tableau"] = to_string(t);
    j["arcs"] = json::array();
    for (const Cell& c : cells(t.shape()))
      if (const auto p = f.parent(c)) j["arcs"].push_back({{"from", {c.col, c.row}}, {"to", {p->col, p->row}}});
    j["roots"] = cells_json(f.roots());
    if (cell) {
      const CellClassification k = classify(f, f.root_of(*cell), *cell);
      j["classification"] = {{"cell", {cell->col, cell->row}}, {"D1", cells_json(k.d1)}, {"D2", cells_json(k.d2)},
                             {"P1", cells_json(k.p1)},         {"P2", cells_json(k.p2)}, {"R", cells_json(k.r)},
                             {"A", cells_json(k.a)},           {"separation", verify_separation(t, *cell)}};
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  for (const Cell& c : cells(t.shape())) {
    std::cout << to_string(c) << ' ' << t.at(c);
    if (const auto p = f.parent(c)) std::cout << " -> " << to_string(*p);
    std::cout << '\n';
  }
  if (cell) {
    const CellClassification k = classify(f, f.root_of(*cell), *cell);
    auto show = [](const char* name, const std::vector<Cell>& cs) {
      std::cout << name << ':';
      for (const Cell& c : cs) std::cout << ' ' << to_string(c);
      std::cout << '\n';
    };
    show("D1", k.d1);
    show("D2", k.d2);
    show("P1", k.p1);
    show("P2", k.p2);
    show("R", k.r);
    show("A", k.a);
    std::cout << "separation " << (verify_separation(t, *cell) ? "holds" : "FAILS") << '\n';
  }
  return 0;
}

FormulaTarget parse_target(const std::string& s) {
  return s == "character" ? FormulaTarget::character : FormulaTarget::skew_count;
}

void print_record(const FormulaRecord& rec, const BracketExpression* delta) {
  std::cout << "target: " << to_string(rec.target) << '\n';
  std::cout << "mu: " << rec.mu.to_string() << '\n';
  std::cout << "normalization: (n)_k / f^lambda\n";
  std::cout << "expression: " << to_string(rec.expression) << '\n';
  std::cout << "serialized: " << to_json(rec.expression).dump() << '\n';
  if (delta) std::cout << "delta: " << to_string(*delta) << '\n';
  for (const std::string& step : rec.route) std::cout << "route: " << step << '\n';
}

int report_failure(const DerivationFailure& f) {
  std::cerr << "derivation failed (" << f.stage << "): " << f.detail << '\n';
  return 3;
}

int cmd_derive(const Config& cfg) {
  require(cfg, {Format::text, Format::json}, "derive");
  DerivationEngine engine;
  if (cfg.hook > 0) {
    const auto g = engine.derive_hook(cfg.hook);
    if (!g) return report_failure(g.failure());
    FormulaRecord rec;
    rec.mu = g.value().mu;
    rec.expression = g.value().closed_form;
    rec.route.push_back("(" + rec.mu.to_string() + ") derived directly");
    if (cfg.format == Format::json) {
      json j = stamped("derive");
      j["record"] = to_json(rec);
      j["kernel"] = to_json(g.value().kernel);
      j["delta"] = to_json(g.value().delta);
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "kernel: " << to_string(g.value().kernel) << '\n';
      print_record(rec, &g.value().delta);
    }
    return 0;
  }
  if (cfg.mu.empty()) throw UsageError("derive: give --hook or --mu");
  const Partition mu = parse_partition(cfg.mu);
  const auto rec = parse_target(cfg.target) == FormulaTarget::character ? engine.character_formula(mu)
                                                                         : engine.skew_formula(mu);
  if (!rec) return report_failure(rec.failure());
  if (cfg.format == Format::json) {
    json j = stamped("derive");
    j["record"] = to_json(rec.value());
    std::cout << j.dump(2) << '\n';
  } else {
    print_record(rec.value(), nullptr);
  }
  return 0;
}

int cmd_verify(const Config& cfg) {
  require(cfg, {Format::text, Format::tsv, Format::json}, "verify");
  if (cfg.mu.empty()) throw UsageError("verify: --mu is required");
  const Partition mu = parse_partition(cfg.mu);
  FormulaRecord rec;
  if (!cfg.expression_file.empty()) {
    rec.target = parse_target(cfg.target);
    rec.mu = mu;
    try {
      rec.expression = cp_expression_from_json(json::parse(read_source(cfg.expression_file)));
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad expression file: ") + e.what());
    }
    rec.route.push_back("read from " + cfg.expression_file);
  } else {
    DerivationEngine engine;
    const auto derived = parse_target(cfg.target) == FormulaTarget::character ? engine.character_formula(mu)
                                                                               : engine.skew_formula(mu);
    if (!derived) return report_failure(derived.failure());
    rec = derived.value();
  }
  if (cfg.n_max < mu.size()) throw UsageError("--nmax must be at least |mu|");
  const VerificationReport report = verify_formula(rec, cfg.n_max);
  if (cfg.format == Format::json) {
    json j = stamped("verify");
    j["record"] = to_json(rec);
    j["n_max"] = cfg.n_max;
    j["shapes"] = report.rows.size();
    j["mismatches"] = report.mismatches();
    j["rows"] = json::array();
    for (const VerificationRow& r : report.rows)
      j["rows"].push_back({{"lambda", r.lambda.parts()},
                           {"value", to_string(r.value)},
                           {"f_lambda", to_string(r.f_lambda)},
                           {"scaled", to_string(r.scaled)},
                           {"expected", to_string(r.expected)},
                           {"ok", r.match && r.integral}});
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << to_tsv(report);
    std::cerr << report.rows.size() << " shapes, " << report.mismatches() << " mismatches\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_selftest(const Config& cfg) {
  require(cfg, {Format::text, Format::json}, "selftest");
  AcceptanceOptions options;
  options.seed = cfg.seed;
  if (cfg.serial) options.execution = Execution::serial;
  const std::vector<CriterionResult> results = run_acceptance(options);
  bool all = true;
  json j = stamped("selftest");
  j["seed"] = cfg.seed;
  j["criteria"] = json::array();
  for (const CriterionResult& r : results) {
    all = all && r.pass;
    if (cfg.format == Format::json)
      j["criteria"].push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    else
      std::cout << format_line(r) << '\n';
  }
  if (cfg.format == Format::json) {
    j["pass"] = all;
    std::cout << j.dump(2) << '\n';
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jeu de taquin, trace forests, characters and content formulas"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"tsv", Format::tsv}, {"json", Format::json}, {"dot", Format::dot}};
  app.add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats));
  app.add_option("--seed", cfg.seed, "Seed for randomised checks");

  auto* count_standard_cmd = app.add_subcommand("count-standard", "Number of standard tableaux f^λ");
  count_standard_cmd->add_option("--shape", cfg.shape, "Partition, e.g. 5,3,3,2")->required();

  auto* count_skew_cmd = app.add_subcommand("count-skew", "Number of skew tableaux f^{λ/μ}");
  count_skew_cmd->add_option("--shape", cfg.shape, "Skew shape, e.g. 5,3,3,2/3,2")->required();
  count_skew_cmd->add_option("--order", cfg.order, "Enumeration order")
      ->check(CLI::IsMember({"forward", "reverse", "both"}));

  auto* char_cmd = app.add_subcommand("char", "Character value χ^λ_μ");
  char_cmd->add_option("--shape", cfg.shape, "Irreducible λ")->required();
  char_cmd->add_option("--class", cfg.class_partition, "Conjugacy class μ")->required();
  char_cmd->add_option("--method", cfg.method, "mn, skew or formula")
      ->check(CLI::IsMember({"mn", "skew", "formula"}));

  auto* table_cmd = app.add_subcommand("char-table", "Character table of S_n");
  table_cmd->add_option("--n", cfg.n, "n")->required();

  auto* jdt_cmd = app.add_subcommand("jdt", "Slide entries out of a standard tableau");
  jdt_cmd->add_option("--shape", cfg.shape, "Shape of the tableau (optional)");
  jdt_cmd->add_option("--tableau", cfg.tableau_file, "File with rows bottom first, '-' for stdin")->required();
  jdt_cmd->add_option("--remove", cfg.remove, "Entries to slide out, in order, e.g. 12,5")->required();
  jdt_cmd->add_flag("--trace", cfg.trace, "Print every slide");

  auto* forest_cmd = app.add_subcommand("trace-forest", "Trace forest of a tableau");
  forest_cmd->add_option("--shape", cfg.shape, "Shape (outer or outer/inner)");
  forest_cmd->add_option("--tableau", cfg.tableau_file, "File with rows bottom first, '-' for stdin")->required();
  forest_cmd->add_option("--cell", cfg.cell, "Classify the cells around col,row");
  forest_cmd->add_flag("--dot", cfg.dot, "Graphviz output");

  auto* derive_cmd = app.add_subcommand("derive", "Derive a content formula");
  derive_cmd->add_option("--hook", cfg.hook, "One-row inner shape (k)");
  derive_cmd->add_option("--mu", cfg.mu, "Inner shape or class μ");
  derive_cmd->add_option("--target", cfg.target, "skew or character")
      ->check(CLI::IsMember({"skew", "character"}));

  auto* verify_cmd = app.add_subcommand("verify", "Check a formula against the oracles");
  verify_cmd->add_option("--mu", cfg.mu, "Inner shape or class μ")->required();
  verify_cmd->add_option("--nmax", cfg.n_max, "Largest n checked");
  verify_cmd->add_option("--target", cfg.target, "skew or character")
      ->check(CLI::IsMember({"skew", "character"}));
  verify_cmd->add_option("--expression", cfg.expression_file, "JSON expression to check instead of deriving");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance checks");
  selftest_cmd->add_flag("--serial", cfg.serial, "Use the serial reference kernels");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count_standard_cmd) return cmd_count_standard(cfg);
    if (*count_skew_cmd) return cmd_count_skew(cfg);
    if (*char_cmd) return cmd_char(cfg);
    if (*table_cmd) return cmd_char_table(cfg);
    if (*jdt_cmd) return cmd_jdt(cfg);
    if (*forest_cmd) return cmd_trace_forest(cfg);
    if (*derive_cmd) return cmd_derive(cfg);
    if (*verify_cmd) return cmd_verify(cfg);
    if (*selftest_cmd) return cmd_selftest(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
