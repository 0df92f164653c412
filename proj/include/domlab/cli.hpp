#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domlab::cli {

// Runs one subcommand (args exclude the program name). Exit status:
//   0  success, or every verified inequality and claim passed
//   1  an inequality or ledger claim failed, or a certificate was invalid
//   2  usage or input error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace domlab::cli
