// chaincert: batch front end. One command per process; see README.md.

#include "chaincert/commands.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

bool read_text(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return static_cast<bool>(out);
}

bool use_color() {
  const char* env = std::getenv("CHAINCERT_COLOR");
  if (env && std::string(env) == "0") return false;
  return isatty(STDOUT_FILENO) != 0;
}

std::string utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Highlights the verdict lines; everything else passes through unchanged.
std::string colorize(const std::string& report, int exit_code) {
  const char* on = exit_code == chaincert::exit_true ? "\033[32m" : "\033[31m";
  std::istringstream in(report);
  std::string line, out;
  while (std::getline(in, line)) {
    bool verdict = line.rfind("verdict: ", 0) == 0 || line.rfind("result: ", 0) == 0 ||
                   line.rfind("certificate for ", 0) == 0 || line.rfind("error: ", 0) == 0;
    out += verdict ? on + line + "\033[0m\n" : line + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace chaincert;
  CLI::App app{"chaincert: homology, UV^n checks and certified chain constructions on finite complexes"};
  app.set_version_flag("--version", "chaincert 1.0");

  CommandOptions options;
  std::string input, ring_text, certificate_path, output_path;
  std::optional<int> n, dim;
  bool strict = false, relaxed = false, timestamps = false;

  app.add_option("command", options.command, "Command to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("input", input, "Problem file, or certificate for verify-certificate ('-' for stdin)");
  app.add_option("--ring", ring_text, "Coefficient ring: Z, Q or Zmod:<m>");
  app.add_option("--n", n, "Top degree n");
  app.add_option("--dim", dim, "Homology degree (all degrees when omitted)");
  auto* strict_flag = app.add_flag("--strict-vertices", strict, "check-alcn: companion on the same vertices (default)");
  app.add_flag("--relaxed-vertices", relaxed, "check-alcn: companion on a nonempty part of the vertices")
      ->excludes(strict_flag);
  app.add_option("--certificate", certificate_path, "Write the certificate to this path");
  app.add_option("--seed", options.seed, "gen-instance: random seed");
  app.add_option("--family", options.family, "gen-instance: uvn, prism, obstruction-h1 or obstruction-h2");
  app.add_option("--output", output_path, "gen-instance: write the problem file here instead of stdout");
  app.add_flag("--timestamps", timestamps, "Prefix the report with the current UTC time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_bad_input;
  }

  try {
    if (!ring_text.empty()) options.ring = Ring::parse(ring_text);
  } catch (const Error& e) {
    std::cerr << "error: bad input: " << e.what() << "\n";
    return exit_bad_input;
  }
  options.n = n;
  options.dim = dim;
  if (strict) options.strict_vertices = true;
  if (relaxed) options.strict_vertices = false;

  std::string text;
  if (options.command != "gen-instance") {
    if (input.empty()) {
      std::cerr << "error: bad input: " << options.command << " needs an input file\n";
      return exit_bad_input;
    }
    if (!read_text(input, text)) {
      std::cerr << "error: bad input: cannot read '" << input << "'\n";
      return exit_bad_input;
    }
  }

  CommandOutcome outcome = run_command(options, text);

  if (options.command == "gen-instance" && !output_path.empty() && outcome.exit_code == exit_true) {
    if (!write_text(output_path, outcome.report)) {
      std::cerr << "error: cannot write '" << output_path << "'\n";
      return exit_bad_input;
    }
    outcome.report = "wrote " + output_path + "\n";
  }
  if (!certificate_path.empty() && outcome.certificate) {
    if (!write_text(certificate_path, certificate_text(*outcome.certificate))) {
      std::cerr << "error: cannot write '" << certificate_path << "'\n";
      return exit_bad_input;
    }
  }

  std::string report = outcome.report;
  if (timestamps) report = "generated " + utc_now() + "\n" + report;
  if (use_color()) report = colorize(report, outcome.exit_code);
  std::ostream& stream = outcome.exit_code >= exit_bad_input ? std::cerr : std::cout;
  stream << report;
  return outcome.exit_code;
}
