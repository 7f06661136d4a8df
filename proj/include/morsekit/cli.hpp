#pragma once
// Entry point behind the morsekit binary, callable in-process so tests can
// drive it without spawning. Exit codes: 0 success, 1 a verification or
// sequence check failed, 2 usage or domain errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace morsekit::cli {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace morsekit::cli
