#ifndef CHROMHAM_CLI_HH
#define CHROMHAM_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace chromham {

/// exit_code: 0 verified, 1 counterexample or failed check, 2 usage or input error.
struct CommandOutcome {
  int exit_code = 0;
  std::string payload;
};

/// args excludes the program name. Graphs missing from the command line are
/// read from in, one graph6 (or edge-list, for g6 encode) per line.
CommandOutcome run(const std::vector<std::string>& args, std::istream& in);

}  // namespace chromham

#endif
