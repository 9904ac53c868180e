#pragma once

#include <convexiq/corpus.hpp>
#include <convexiq/inequalities.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace convexiq::cli {

// sysexits-style codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a repro row missed its tolerance
inline constexpr int kExitProvenViolation = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;
inline constexpr int kExitUnsupported = 69;
inline constexpr int kExitIo = 74;

struct Context {
  std::ostream& out;
  std::ostream& err;
  /// Replaces the default measure oracle in check; tests inject broken ones.
  MeasureOracle* oracle = nullptr;
};

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::optional<int> quad_res;
  std::string out;  // directory (make, check, repro, search) or file (jcurve); empty = stdout
};

struct CheckOptions {
  std::vector<std::string> inequalities;  // "id" or "id:params"
  std::vector<std::string> bodies;        // body/1 files
};

int cmd_make(const CorpusSpec& spec, const GlobalOptions& g, Context& ctx);
int cmd_check(const CheckOptions& opts, const GlobalOptions& g, Context& ctx);
int cmd_repro(const std::string& target, const GlobalOptions& g, Context& ctx);
int cmd_search(const std::string& config_path, const GlobalOptions& g, Context& ctx);
int cmd_jcurve(const std::string& body_path, int samples, const GlobalOptions& g, Context& ctx);

/// Parses argv and dispatches; returns the exit code.
int run(int argc, const char* const* argv, Context& ctx);

}  // namespace convexiq::cli
