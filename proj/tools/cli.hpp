#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abc2d::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDomain = 2,
    kVerifyFailed = 3,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17 significant digits, '.' separator, independent of the locale.
std::string format_number(double v);

}  // namespace abc2d::cli
