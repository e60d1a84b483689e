#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nashtoric/cli.hpp"

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += " ";
    out += p;
  }
  return out;
}

std::string read_stdin() {
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Nash modification of toric curves and chart "
               "construction for toric varieties"};
  app.require_subcommand(1);

  struct SubSpec {
    nashtoric::cli::Command command;
    const char* name;
    const char* help;
    bool takes_input;
  };
  const SubSpec specs[] = {
      {nashtoric::cli::Command::resolve, "resolve",
       "Iterate Nash steps until 1 appears; print the trace", true},
      {nashtoric::cli::Command::summary, "summary",
       "Segment the trace into division algorithms", true},
      {nashtoric::cli::Command::bounds, "bounds",
       "Report v, eta and delta bounds against actual values", true},
      {nashtoric::cli::Command::charts, "charts",
       "Chart construction and iteration for Z^d generator sets", true},
      {nashtoric::cli::Command::ideal, "ideal",
       "Log jacobian monomials and bounded kernel binomials", true},
      {nashtoric::cli::Command::check, "check",
       "Run invariant checks over a batch file of curve sets", false},
  };

  struct SubState {
    CLI::App* sub;
    nashtoric::cli::Command command;
    std::vector<std::string> input;
    std::string batch;
    bool json = false;
    unsigned degree = 4;
    unsigned depth = 8;
    std::uint64_t cap = 1'000'000;
  };
  std::vector<SubState> states(std::size(specs));

  for (std::size_t i = 0; i < std::size(specs); ++i) {
    SubState& state = states[i];
    state.command = specs[i].command;
    state.sub = app.add_subcommand(specs[i].name, specs[i].help);
    if (specs[i].takes_input) {
      state.sub->add_option("input", state.input,
                            "Generators: 12,28,33 or (1,0),(1,1); - for stdin");
    } else {
      state.sub->add_option("--batch", state.batch, "File of inputs, one per line")
          ->required();
    }
    state.sub->add_flag("--json", state.json, "Machine-readable output");
    state.sub->add_option("--deg", state.degree, "Binomial degree bound");
    state.sub->add_option("--depth", state.depth, "Chart iteration depth cap");
    state.sub->add_option("--cap", state.cap, "Iteration safety cap");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[BadInput]: " << e.what() << "\n";
    return 2;
  }

  for (SubState& state : states) {
    if (!state.sub->parsed()) continue;
    nashtoric::cli::RunRequest request;
    request.command = state.command;
    request.input = join(state.input);
    if (request.input == "-") request.input = read_stdin();
    request.batch_path = state.batch;
    request.json = state.json;
    request.degree = state.degree;
    request.depth = state.depth;
    request.cap = state.cap;
    const nashtoric::cli::RunReport report = nashtoric::cli::run(request);
    std::cout << report.out;
    std::cerr << report.err;
    return report.exit_code;
  }
  return 2;
}
