#pragma once

#include <stdexcept>
#include <string>

namespace walkbound {

// Every failure the library reports deliberately. Codes let callers branch
// without parsing messages; messages carry the context (line numbers, vertex
// labels, residuals).
enum class Errc {
  malformed_line,
  duplicate_edge,
  self_loop,
  non_positive_weight,
  negative_cost,
  invalid_argument,
  unreachable,
  not_a_tree,
  not_simple_walk,
  solve_failure,
  censored_sample,
  invalid_config,
  io_failure,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed_line: return "MalformedLine";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::self_loop: return "SelfLoop";
    case Errc::non_positive_weight: return "NonPositiveWeight";
    case Errc::negative_cost: return "NegativeCost";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::unreachable: return "Unreachable";
    case Errc::not_a_tree: return "NotATree";
    case Errc::not_simple_walk: return "NotSimpleWalk";
    case Errc::solve_failure: return "SolveFailure";
    case Errc::censored_sample: return "CensoredSample";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::io_failure: return "IoFailure";
  }
  return "Error";
}

}  // namespace walkbound
