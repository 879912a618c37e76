#pragma once

// Command-line front end. run() is the whole program minus process setup so
// tests and the Python module can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace qvbs::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// "0.5,1,2"
std::vector<double> parse_q_list(const std::string& text);
/// "start:stop:count:log" or "...:lin"
std::vector<double> parse_q_grid(const std::string& text);
/// Comma-separated integers and inclusive ranges: "2..6", "4", "2..4,8".
std::vector<int> parse_int_list(const std::string& text);

/// %.17g, with nan/inf spelled out.
std::string format_double(double x);
/// RFC 4180 quoting when the field contains a comma, quote, CR or LF.
std::string csv_field(const std::string& s);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qvbs::cli
