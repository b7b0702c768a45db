#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace triwidth {

// Runs one command (args exclude the program name) and writes a single JSON document.
// Returns 0 on success and 1 with {"error": {...}} otherwise.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace triwidth
