#ifndef AZBENCH_CLI_HPP_
#define AZBENCH_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace azbench {

  // Exit codes.
  inline constexpr int exit_ok           = 0;
  inline constexpr int exit_falsified    = 1;
  inline constexpr int exit_bad_input    = 2;
  inline constexpr int exit_insufficient = 3;

  // `args` excludes the program name. Results go to `out`, diagnostics and
  // usage text to `err`.
  int run_command(std::vector<std::string> const& args,
                  std::ostream&                   out,
                  std::ostream&                   err);

}  // namespace azbench

#endif  // AZBENCH_CLI_HPP_
