#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steincalc/document.hpp"

namespace steincalc {

inline constexpr const char* kToolName = "steincalc";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitParse = 2, kExitPrecondition = 3, kExitAlarm = 4 };

struct CommandOptions {
  std::vector<std::string> words;
  std::optional<std::string> relator;
  std::vector<std::pair<std::string, Int>> baselines;  // override document baselines
  bool reverse = false;
  bool assert_same_boundary = false;
  int g_max = 3;
  int b_min = 2;
  int b_max = 12;
};

struct CommandResult {
  Json report;
  int exit_code = kExitOk;
};

/// invariants, substitute, detect, verify-relator, esig-compare. Library
/// errors propagate as exceptions; see `run_guarded`.
CommandResult run(const std::string& command, const Document& doc, const CommandOptions& options);

/// tau_boundary sweep over 0 <= g <= g_max, b_min <= b <= b_max; rows are
/// computed concurrently and reported in (g, b) order.
CommandResult run_family(const CommandOptions& options);

/// {"tool": {...}, "report": ...}
Json envelope(Json report);
/// {"tool": {...}, "error": {kind, message, location?}}
Json error_envelope(const std::string& kind, const std::string& message, const std::string& location = {});

/// Runs `f` and maps exceptions to error envelopes and exit codes: parse
/// errors 2, precondition failures 3, anything unexpected 4.
template <class F>
CommandResult run_guarded(F&& f);

Json to_json(const FillingInvariants& inv);
Json to_json(const PlanarityCertificate& cert);
Json to_json(const AbelianGroup& g);

}  // namespace steincalc

#include "steincalc/error.hpp"

namespace steincalc {

template <class F>
CommandResult run_guarded(F&& f) {
  try {
    CommandResult r = f();
    r.report = envelope(std::move(r.report));
    return r;
  } catch (const ParseError& e) {
    return {error_envelope("parse", e.message(), e.location()), kExitParse};
  } catch (const Error& e) {
    return {error_envelope("precondition", e.what()), kExitPrecondition};
  } catch (const std::exception& e) {
    return {error_envelope("internal", e.what()), kExitAlarm};
  }
}

}  // namespace steincalc
