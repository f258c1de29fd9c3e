#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "queueposet/constructions.hpp"
#include "queueposet/errors.hpp"
#include "queueposet/exact_solver.hpp"
#include "queueposet/io.hpp"
#include "queueposet/layout.hpp"
#include "queueposet/strategies.hpp"

namespace qp = queueposet;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

// Bad command-line input that is not a library error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

struct Input {
  qp::Poset poset;
  std::optional<qp::UpwardDiagram> diagram;
};

Input load(const std::string& path) {
  auto parsed = qp::parse_poset(read_file(path));
  if (auto* d = std::get_if<qp::UpwardDiagram>(&parsed)) return {d->poset(), *d};
  return {std::get<qp::Poset>(std::move(parsed)), std::nullopt};
}

std::string names_of(const qp::Poset& p, const std::vector<qp::Element>& elements) {
  std::string out;
  for (auto e : elements) {
    if (!out.empty()) out += ' ';
    out += p.name(e);
  }
  return out;
}

void print_crown(const qp::Poset& p, const qp::CrownEmbedding& crown, std::ostream& out) {
  out << "crown k=" << crown.k << "\n";
  out << "  a: " << names_of(p, crown.a) << "\n";
  out << "  b: " << names_of(p, crown.b) << "\n";
  out << "  c: " << names_of(p, crown.c) << "\n";
}

void print_violations(const qp::Poset& p, const qp::ViolationReport& report) {
  for (const auto& v : report.violations) {
    std::cout << "violation: " << v.message;
    if (v.kind == qp::Violation::Kind::kNestedInQueue) {
      std::cout << " (" << p.name(v.first.lower) << ',' << p.name(v.first.upper) << ") inside ("
                << p.name(v.second.lower) << ',' << p.name(v.second.upper) << ')';
    }
    std::cout << "\n";
  }
}

int run_analyze(const std::string& file) {
  const Input in = load(file);
  const qp::Poset& p = in.poset;
  const auto w = qp::width(p);
  const auto h = qp::height(p);
  std::cout << "elements: " << p.size() << "\n";
  std::cout << "covers: " << p.covers().size() << "\n";
  std::cout << "width: " << w.width << "\n";
  std::cout << "max antichain: " << names_of(p, w.antichain) << "\n";
  std::cout << "height: " << h.height << "\n";
  std::cout << "longest chain: " << names_of(p, h.chain) << "\n";
  std::cout << "zero: " << (p.zero() ? p.name(*p.zero()) : std::string("none")) << "\n";
  std::cout << "one: " << (p.one() ? p.name(*p.one()) : std::string("none")) << "\n";
  std::cout << "diagram: " << (in.diagram ? "yes" : "no") << "\n";
  if (p.empty()) return kOk;
  const auto result = qp::crown_free_layout(p);
  if (const auto* crown = std::get_if<qp::CrownEmbedding>(&result)) {
    print_crown(p, *crown, std::cout);
  } else {
    std::cout << "crown: none (crown-free layout uses "
              << std::get<qp::QueueLayout>(result).queue_count << " queues)\n";
  }
  return kOk;
}

int run_layout(const std::string& file, const std::string& strategy, const std::string& output,
               std::optional<std::size_t> max_queues) {
  const Input in = load(file);
  const qp::Poset& p = in.poset;
  qp::QueueLayout layout;
  if (strategy == "any") {
    layout = qp::any_extension_layout(p);
  } else if (strategy == "lazy2") {
    layout = qp::lazy_width2_layout(p);
  } else if (strategy == "paired") {
    layout = qp::paired_chain_layout(p);
  } else if (strategy == "crownfree") {
    auto result = qp::crown_free_layout(p);
    if (const auto* crown = std::get_if<qp::CrownEmbedding>(&result)) {
      print_crown(p, *crown, std::cerr);
      return kViolation;
    }
    layout = std::get<qp::QueueLayout>(std::move(result));
  } else if (strategy == "leftmost") {
    layout = qp::leftmost_layout(p, in.diagram ? &*in.diagram : nullptr);
  } else if (strategy == "planarw") {
    if (!in.diagram) throw UsageError("strategy planarw needs coordinates for every element");
    layout = qp::planar_width_layout(*in.diagram);
  } else {  // colorsplit
    const auto levels = qp::minimal_levels(p);
    const auto ext = qp::color_split_extension(p, qp::min_index_extension(p).order(), levels);
    layout = qp::assign_queues(p, ext);
  }
  const auto report = qp::verify_layout(p, layout);
  write_output(output, qp::layout_to_json(p, layout));
  std::ostream& log = (output.empty() || output == "-") ? std::cerr : std::cout;
  log << "queues: " << layout.queue_count << "\n";
  if (!report.ok()) {
    print_violations(p, report);
    return kViolation;
  }
  if (max_queues && layout.queue_count > *max_queues) return kViolation;
  return kOk;
}

int run_exact(const std::string& file, std::optional<std::size_t> limit,
              std::optional<double> budget, const std::string& output) {
  const Input in = load(file);
  qp::SolverOptions options;
  options.limit = limit;
  if (budget) options.time_budget = std::chrono::duration<double>(*budget);
  const auto result = qp::exact_queue_number(in.poset, options);
  if (const auto* solved = std::get_if<qp::Solved>(&result)) {
    std::cout << "queue number: " << solved->queue_number << "\n";
    if (!output.empty()) write_output(output, qp::layout_to_json(in.poset, solved->layout));
    return kOk;
  }
  if (const auto* lower = std::get_if<qp::LowerBoundOnly>(&result)) {
    std::cout << "queue number: at least " << lower->lower_bound << "\n";
    return kViolation;
  }
  const auto& timeout = std::get<qp::Timeout>(result);
  std::cout << "timeout: queue number in [" << timeout.lower_bound << ", " << timeout.upper_bound
            << "]\n";
  return kViolation;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long value = std::stol(item, &used);
      if (used != item.size() || value < 1) throw std::invalid_argument(item);
      sizes.push_back(static_cast<std::size_t>(value));
    } catch (const std::exception&) {
      throw UsageError("bad level size '" + item + "'");
    }
  }
  if (sizes.empty()) throw UsageError("weak needs --param like 2,3");
  return sizes;
}

std::size_t parse_count(const std::string& text) {
  try {
    std::size_t used = 0;
    const long value = std::stol(text, &used);
    if (used == text.size() && value >= 0) return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
  }
  throw UsageError("expected a nonnegative integer, got '" + text + "'");
}

int run_generate(const std::string& kind, const std::string& param, const std::string& output) {
  std::string text;
  if (kind == "crown") {
    text = qp::poset_to_json(qp::subdivided_crown(parse_count(param.empty() ? "3" : param)));
  } else if (kind == "weak") {
    text = qp::poset_to_json(qp::weak_order(parse_sizes(param.empty() ? "2,2" : param)));
  } else if (kind == "qw") {
    text = qp::diagram_to_json(qp::q_width(parse_count(param.empty() ? "2" : param)));
  } else if (kind == "qh") {
    text = qp::poset_to_json(qp::q_height(parse_count(param.empty() ? "3" : param)).poset);
  } else if (kind == "counterexample") {
    text = qp::poset_to_json(qp::height2_counterexample().poset);
  } else {  // pattern
    text = qp::poset_to_json(qp::small_pattern(param.empty() ? "N" : param));
  }
  write_output(output, text);
  return kOk;
}

int run_verify(const std::string& poset_file, const std::string& layout_file) {
  const Input in = load(poset_file);
  const auto layout = qp::parse_layout(in.poset, read_file(layout_file));
  const auto report = qp::verify_layout(in.poset, layout);
  if (report.ok()) {
    std::cout << "ok: " << layout.queue_count << " queues\n";
    return kOk;
  }
  print_violations(in.poset, report);
  return kViolation;
}

int run_export(const std::string& file, const std::string& format, const std::string& layout_file,
               const std::string& output) {
  const Input in = load(file);
  if (format == "json") {
    write_output(output, in.diagram ? qp::diagram_to_json(*in.diagram) : qp::poset_to_json(in.poset));
    return kOk;
  }
  std::optional<qp::QueueLayout> layout;
  if (!layout_file.empty()) layout = qp::parse_layout(in.poset, read_file(layout_file));
  qp::DotOptions options;
  if (in.diagram) options.positions = &in.diagram->positions();
  if (layout) options.layout = &*layout;
  write_output(output, qp::to_dot(in.poset, options));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Queue layouts of posets"};
  app.require_subcommand(1);

  std::string file, file2, output, strategy = "any", format = "dot", kind, param, layout_file;
  std::optional<std::size_t> limit, max_queues;
  std::optional<double> budget;

  auto* analyze = app.add_subcommand("analyze", "Width, height, bounds and crown certificate");
  analyze->add_option("file", file, "Poset JSON")->required();

  auto* layout = app.add_subcommand("layout", "Compute a queue layout");
  layout->add_option("file", file, "Poset JSON")->required();
  layout->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"any", "lazy2", "paired", "crownfree", "leftmost", "planarw",
                             "colorsplit"}));
  layout->add_option("-o,--output", output, "Layout JSON destination (default stdout)");
  layout->add_option("--max-queues", max_queues, "Exit 1 if the layout uses more queues");

  auto* exact = app.add_subcommand("exact", "Exact queue number by exhaustive search");
  exact->add_option("file", file, "Poset JSON")->required();
  exact->add_option("--limit", limit, "Stop once the queue number exceeds K");
  exact->add_option("--budget", budget, "Time budget in seconds")->check(CLI::PositiveNumber);
  exact->add_option("-o,--output", output, "Write an optimal layout here");

  auto* generate = app.add_subcommand("generate", "Print a generated poset or diagram");
  generate->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"crown", "weak", "qw", "qh", "counterexample", "pattern"}));
  generate->add_option("--param", param, "k, w, h, level sizes (2,3) or pattern name");
  generate->add_option("-o,--output", output);

  auto* verify = app.add_subcommand("verify", "Check a layout against a poset");
  verify->add_option("poset", file, "Poset JSON")->required();
  verify->add_option("layout", file2, "Layout JSON")->required();

  auto* exporter = app.add_subcommand("export", "Export as DOT or JSON");
  exporter->add_option("file", file, "Poset JSON")->required();
  exporter->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  exporter->add_option("--layout", layout_file, "Layout JSON for queue colors");
  exporter->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (analyze->parsed()) return run_analyze(file);
    if (layout->parsed()) return run_layout(file, strategy, output, max_queues);
    if (exact->parsed()) return run_exact(file, limit, budget, output);
    if (generate->parsed()) return run_generate(kind, param, output);
    if (verify->parsed()) return run_verify(file, file2);
    return run_export(file, format, layout_file, output);
  } catch (const qp::ParseError& e) {
    std::cerr << "error: line " << e.line() << ": " << e.what() << "\n";
    return kInputError;
  } catch (const qp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
