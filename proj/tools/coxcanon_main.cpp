#include "coxcanon/job.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct CommonFlags {
  std::string input;
  std::string box;
  std::string sublattice;
  std::string format = "json";
  std::string out;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool needs_input) {
  auto* input = cmd->add_option("--input,-i", flags.input, "JSON job description");
  if (needs_input) input->required();
  cmd->add_option("--box", flags.box, "degree box, lo:hi per axis, comma separated");
  cmd->add_option("--sublattice", flags.sublattice,
                  "sublattice basis, vectors ';'-separated, entries ','-separated");
  cmd->add_option("--format,-f", flags.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out,-o", flags.out, "write the report to a file instead of stdout");
}

int run(const std::string& subcommand, const CommonFlags& flags) {
  coxcanon::CliRequest request;
  request.subcommand = subcommand;
  request.format = flags.format;
  if (!flags.box.empty()) request.box_spec = flags.box;
  if (!flags.sublattice.empty()) request.sublattice_spec = flags.sublattice;

  if (!flags.input.empty()) {
    std::ifstream in(flags.input);
    if (!in) {
      std::cerr << "error: cannot open input file " << flags.input << "\n";
      return 2;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    request.input_text = buffer.str();
  }

  coxcanon::JobResult result = coxcanon::run_job(request);
  if (result.exit_code != 0) {
    std::cerr << "error: " << result.error << "\n";
    return result.exit_code;
  }
  if (!flags.out.empty()) {
    std::ofstream out(flags.out);
    if (!out) {
      std::cerr << "error: cannot open output file " << flags.out << "\n";
      return 2;
    }
    out << result.output;
  } else {
    std::cout << result.output;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multigraded section rings: class groups, canonical-module tables, freeness"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    bool needs_input;
  };
  const Sub subs[] = {
      {"classgroup", "divisor class group of X and of the section ring", true},
      {"sections", "table of graded section dimensions", true},
      {"canonical", "canonical-module dimension table", true},
      {"freeness", "is the canonical module free of rank one?", true},
      {"restrict", "compare the canonical module along a degree sublattice", true},
      {"duality", "top local cohomology against the closed-form oracle", true},
      {"probe", "search a degree box for units of positive degree", true},
      {"examples", "regenerate the built-in worked examples", false},
  };

  std::vector<std::pair<std::string, CommonFlags>> jobs;
  jobs.reserve(std::size(subs));
  for (const Sub& s : subs) {
    jobs.emplace_back(s.name, CommonFlags{});
    CLI::App* cmd = app.add_subcommand(s.name, s.help);
    add_common_flags(cmd, jobs.back().second, s.needs_input);
  }

  CLI11_PARSE(app, argc, argv);

  for (const auto& [name, flags] : jobs) {
    if (app.got_subcommand(name)) return run(name, flags);
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
