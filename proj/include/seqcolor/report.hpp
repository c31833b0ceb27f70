#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "seqcolor/chromatic_sum.hpp"
#include "seqcolor/oracle.hpp"
#include "seqcolor/sequentializer.hpp"

namespace seqcolor::report {

using Record = nlohmann::ordered_json;

// Each record starts with a "kind" key; key order is fixed so that the
// same input always serializes to the same bytes.

Record certificate(const Graph& g, const SequentialCertificate& cert);
Record sums(const SumReport& rep);
Record sum_oracle(const OracleResult& res);
Record sequential_oracle(const Graph& g, const OracleResult& res);
Record bounds(std::int64_t n, std::int64_t n_r, std::int64_t r);

/// One compact JSON object per line.
std::string line(const Record& rec);

/// "u v c" strings, one per edge in edge order.
Record coloring_lines(const Graph& g, const EdgeColoring& c);

}  // namespace seqcolor::report
