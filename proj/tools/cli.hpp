#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seqcolor::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,   // verification failed, bound missed, or invariant chain broken
    kPrecondition = 2,  // bad arguments, malformed input, unmet hypotheses, oracle refusal
    kClassTwo = 3,
    kUnknownClass = 4,
    kIoError = 5,
};

/// Runs one command line (args excludes the program name). Standard input
/// is read when an input path is "-" or omitted.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace seqcolor::cli
