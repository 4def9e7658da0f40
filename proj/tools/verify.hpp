#pragma once

#include <ostream>
#include <string>

// Runs the golden cases listed in <dir>/manifest.json. Returns 0 when all
// pass, 1 on any failure and 2 when a fixture file is missing or malformed.
int run_verify(const std::string& dir, const std::string& only, std::ostream& out, std::ostream& err);
