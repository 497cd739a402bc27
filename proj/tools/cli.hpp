#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace infinitary::cli {

// Runs one command line (without the program name). Exit status: 0 success or
// true, 1 checked-false, 2 usage or parse error, 3 resource limit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Writes every golden artifact into dir; output is byte-identical across runs.
std::vector<std::filesystem::path> emitGoldens(const std::filesystem::path& dir);

}  // namespace infinitary::cli
