#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fog {

// Runs the command-line interface on the given arguments (program name
// excluded). Returns the process exit code:
//   0 — all requested properties hold, or the search completed;
//   1 — a requested property fails (a witness is printed);
//   2 — input or usage errors (bad flags, unreadable files, parse errors).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace fog
