#pragma once

#include "chaincert/problem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chaincert {

/// Process exit codes. 3 is reserved for internal errors (a bug, not an
/// answer about the input).
enum ExitCode : int { exit_true = 0, exit_false = 1, exit_bad_input = 2, exit_internal = 3 };

struct CommandOptions {
  std::string command;
  std::optional<Ring> ring;  // overrides the problem file's ring
  std::optional<int> n;
  std::optional<int> dim;
  std::optional<bool> strict_vertices;  // default true
  // gen-instance only
  std::string family = "uvn";
  std::uint64_t seed = 1;
};

struct CommandOutcome {
  int exit_code = exit_true;
  std::string report;                // deterministic, newline-terminated lines
  std::optional<Json> certificate;   // present whenever a verdict was reached
};

std::vector<std::string> command_names();

/// Runs one command on the text of its input document (a problem file, or a
/// certificate for verify-certificate; ignored by gen-instance). Errors are
/// turned into exit codes and a report line, never thrown.
CommandOutcome run_command(const CommandOptions& options, const std::string& input_text);

/// Canonical certificate text: sorted keys, two-space indent, trailing newline.
std::string certificate_text(const Json& certificate);

inline constexpr const char* kCertificateFormat = "chaincert-certificate/1";

/// Re-validates a certificate from scratch: rebuilds the inputs from the
/// embedded problem and arguments and checks the result with the predicates
/// of the chains, homology and constructors modules. Returns the problems
/// found; empty means valid. Throws InputError for a malformed certificate.
std::vector<std::string> verify_certificate(const Json& certificate);

// Certificate pieces, shared between the runners and the verifier.
Json extension_json(const ExtensionCertificate& cert, const std::string& k, const std::string& x);
ExtensionCertificate parse_extension(const Json& j, const ComplexRef& k, const ComplexRef& x, const Ring& ring,
                                     const std::string& path);
Json close_json(const CloseReport& r);
CloseReport parse_close(const Json& j, const std::string& path);
Json triviality_json(const TrivialityReport& r);

}  // namespace chaincert
