#include "seqcolor/errors.hpp"

namespace seqcolor {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
    std::string out = "precondition failed";
    for (std::size_t i = 0; i < violations.size(); ++i) {
        out += i == 0 ? ": " : "; ";
        out += violations[i];
    }
    return out;
}

}  // namespace

PreconditionError::PreconditionError(std::vector<std::string> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

}  // namespace seqcolor
