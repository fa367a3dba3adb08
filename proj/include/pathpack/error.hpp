#pragma once

#include <stdexcept>
#include <string>

namespace pathpack {

// Every domain failure carries one of these codes so callers (and the CLI
// exit-code mapping) can react without parsing messages.
enum class errc {
  unknown_node,
  unknown_terminal,
  same_terminal,
  empty_set,
  bad_partition,
  path_not_in_graph,
  too_many_paths,
  too_many_expansions,
  search_budget_exceeded,
  switch_creates_closed_walk,
  switch_creates_non_simple_walk,
  class_pattern_mismatch,
  no_common_inner_node,
  not_maximum_flow,
  odd_degree,
  not_inner,
  bad_pairing,
  not_eulerian,
  not_dual_solution,
  half_integer_gap_detected,
  common_solution_gap_detected,
  parse_error,
  inconsistent_style,
  terminal_limit_exceeded,
  invalid_argument,
  arithmetic_overflow,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}
  Error(errc code, std::string message, int line)
      : std::runtime_error(std::string(errc_name(code)) + " (line " +
                           std::to_string(line) + "): " + message),
        code_(code),
        line_(line) {}

  errc code() const { return code_; }
  int line() const { return line_; }

 private:
  errc code_;
  int line_ = 0;
};

}  // namespace pathpack
