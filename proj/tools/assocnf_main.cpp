// Copyright 2026 The assocnf Authors
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

// assocnf: normalize terms under (x*y)*z -> x*(y*z), print their measures,
// and run the exhaustive small-size verification.
//
// Exit status: 0 on success, 1 if verification finds a failing size, 2 on
// usage or parse errors. Data goes to stdout, diagnostics to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "assocnf/enumerate.hpp"
#include "assocnf/measures.hpp"
#include "assocnf/report_io.hpp"
#include "assocnf/rewrite.hpp"
#include "assocnf/rewrite_graph.hpp"
#include "assocnf/term_text.hpp"
#include "assocnf/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string term;
  std::string file;
  std::string strategy = "shortest";
  std::string format = "table";
  std::string output;
  std::size_t n = 0;
  std::size_t cap = assocnf::kDefaultGraphCap;
  std::size_t enumeration_cap = assocnf::kDefaultEnumerationCap;
  bool quiet = false;
  bool count_only = false;
  bool serial = false;
};

assocnf::Strategy strategy_or_default(const Options& opt) {
  return assocnf::strategy_from_string(opt.strategy)
      .value_or(assocnf::Strategy::kShortest);
}

// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_nf(const Options& opt) {
  const auto strategy = strategy_or_default(opt);
  auto one = [&](const std::string& text) {
    const assocnf::Trace trace = assocnf::normalize(
        assocnf::parse(text), strategy, assocnf::TraceDetail::kCountOnly);
    std::cout << assocnf::render(trace.final) << " steps=" << trace.step_count
              << '\n';
  };
  if (opt.file.empty()) {
    one(opt.term);
    return kExitOk;
  }
  std::ifstream in(opt.file);
  if (!in) {
    std::cerr << "error: cannot read " << opt.file << '\n';
    return kExitUsage;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      one(line);
    } catch (const assocnf::ParseError& e) {
      std::cerr << opt.file << ':' << line_no << ": " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return kExitOk;
}

int cmd_trace(const Options& opt) {
  const assocnf::Term term = assocnf::parse(opt.term);
  const auto detail = opt.quiet ? assocnf::TraceDetail::kCountOnly
                                : assocnf::TraceDetail::kFull;
  const assocnf::Trace trace =
      assocnf::normalize(term, strategy_or_default(opt), detail);
  if (!opt.quiet) {
    std::cout << "start " << assocnf::render(trace.start) << '\n';
    for (const assocnf::Step& step : trace.steps) {
      std::cout << step.position.to_string() << " \xE2\x8A\xB3 "  // ⊳
                << assocnf::render(step.term_after) << '\n';
    }
    std::cout << "final " << assocnf::render(trace.final) << '\n';
  }
  std::cout << "steps=" << trace.step_count << '\n';
  return kExitOk;
}

int cmd_metrics(const Options& opt) {
  const assocnf::Metrics m = assocnf::metrics(assocnf::parse(opt.term));
  std::cout << "n=" << m.size << " sigma=" << m.sigma << " d_rm=" << m.d_rm
            << " nf=" << (m.is_nf ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_enumerate(const Options& opt) {
  const auto shapes =
      assocnf::enumerate_shape_strings(opt.n, opt.enumeration_cap);
  if (opt.count_only) {
    std::cout << shapes.size() << '\n';
    return kExitOk;
  }
  for (const std::string& s : shapes) std::cout << s << '\n';
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  const auto execution =
      opt.serial ? assocnf::Execution::kSerial : assocnf::Execution::kParallel;
  const auto reports = assocnf::verify_all(opt.n, execution, opt.cap);
  Sink sink(opt.output);
  if (opt.format == "jsonl") {
    assocnf::write_report_jsonl(sink.stream(), reports);
  } else {
    assocnf::write_report_table(sink.stream(), reports);
  }
  bool all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed();
  if (!all_passed) std::cerr << "verification FAILED\n";
  return all_passed ? kExitOk : kExitVerifyFailed;
}

int cmd_graph(const Options& opt) {
  const auto execution =
      opt.serial ? assocnf::Execution::kSerial : assocnf::Execution::kParallel;
  const assocnf::RewriteGraph graph =
      assocnf::build_graph(opt.n, execution, opt.cap);
  Sink sink(opt.output);
  sink.stream() << assocnf::export_dot(graph);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms under (x*y)*z -> x*(y*z)", "assocnf"};
  app.require_subcommand(1);
  Options opt;
  int (*command)(const Options&) = nullptr;

  const auto strategies = CLI::IsMember({"shortest", "longest"});

  auto* nf = app.add_subcommand("nf", "Print the normal form and step count");
  nf->add_option("term", opt.term, "Term in canonical syntax, e.g. ((a*b)*c)");
  nf->add_option("--file", opt.file, "Read one term per line")
      ->check(CLI::ExistingFile);
  nf->add_option("--strategy", opt.strategy, "shortest (default) or longest")
      ->check(strategies);
  nf->callback([&] {
    if (opt.term.empty() == opt.file.empty()) {
      throw CLI::ValidationError("nf", "give exactly one of TERM or --file");
    }
    command = cmd_nf;
  });

  auto* trace = app.add_subcommand("trace", "Print every rewrite step");
  trace->add_option("term", opt.term, "Term in canonical syntax")->required();
  trace->add_option("--strategy", opt.strategy, "shortest (default) or longest")
      ->check(strategies);
  trace->add_flag("--quiet", opt.quiet, "Print only the step count");
  trace->callback([&] { command = cmd_trace; });

  auto* metrics = app.add_subcommand("metrics", "Print n, sigma, d_rm, nf");
  metrics->add_option("term", opt.term, "Term in canonical syntax")->required();
  metrics->callback([&] { command = cmd_metrics; });

  auto* enumerate =
      app.add_subcommand("enumerate", "List every shape with n internal nodes");
  enumerate->add_option("--n", opt.n, "Number of internal nodes")->required();
  enumerate->add_flag("--count-only", opt.count_only, "Print only the count");
  enumerate->add_option("--cap", opt.enumeration_cap, "Size limit")
      ->capture_default_str();
  enumerate->callback([&] { command = cmd_enumerate; });

  auto* verify =
      app.add_subcommand("verify", "Exhaustively check sizes 0..max-n");
  verify->add_option("--max-n", opt.n, "Largest size to check")->required();
  verify->add_option("--format", opt.format, "table (default) or jsonl")
      ->check(CLI::IsMember({"table", "jsonl"}));
  verify->add_option("--output", opt.output, "Write the report here");
  verify->add_option("--cap", opt.cap, "Size limit")->capture_default_str();
  verify->add_flag("--serial", opt.serial, "Use the serial reference kernels");
  verify->callback([&] { command = cmd_verify; });

  auto* graph = app.add_subcommand("graph", "Write the rewrite graph as DOT");
  graph->add_option("--n", opt.n, "Number of internal nodes")->required();
  graph->add_option("--output", opt.output, "DOT file (default stdout)");
  graph->add_option("--cap", opt.cap, "Size limit")->capture_default_str();
  graph->add_flag("--serial", opt.serial, "Use the serial reference kernels");
  graph->callback([&] { command = cmd_graph; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return command(opt);
  } catch (const assocnf::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
