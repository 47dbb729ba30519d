#pragma once

#include <iosfwd>

namespace mmods::cli {

enum ExitCode : int {
  kOk = 0,
  kParseFailure = 1,
  kIoFailure = 2,
  kValidationErrors = 3,
  kUnknownVocabulary = 4,
};

/// Entry point of the `mmods` tool: convert, validate, infer, emit-ontology,
/// vocab. Artifacts go to `out` (or --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mmods::cli
