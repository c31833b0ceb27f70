#include "seqcolor/report.hpp"

namespace seqcolor::report {

Record coloring_lines(const Graph& g, const EdgeColoring& c) {
    Record out = Record::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        out.push_back(std::to_string(ed.u) + " " + std::to_string(ed.v) + " " + std::to_string(c[e]));
    }
    return out;
}

Record certificate(const Graph& g, const SequentialCertificate& cert) {
    Record rec;
    rec["kind"] = "certificate";
    rec["r"] = cert.r;
    rec["n"] = cert.n;
    rec["n_r"] = cert.n_r;
    rec["source"] = cert.injected ? "injected" : std::string(to_string(cert.source));
    rec["class_sizes"] = cert.class_sizes;
    rec["swap_color"] = cert.swap_color ? Record(*cert.swap_color) : Record(nullptr);
    rec["R"] = cert.R;
    rec["bound"] = cert.bound;
    rec["R_size"] = cert.R.size();
    rec["verified"] = cert.verified;
    rec["coloring"] = coloring_lines(g, cert.coloring);
    return rec;
}

Record sums(const SumReport& rep) {
    Record rec;
    rec["kind"] = "sum";
    rec["r"] = rep.r;
    rec["n"] = rep.n;
    rec["n_r"] = rep.n_r;
    rec["actual_sum"] = rep.actual_sum;
    rec["per_vertex_bound"] = rep.per_vertex_bound;
    rec["bound"] = rep.bound;
    rec["exact_sum"] = rep.exact_sum ? Record(*rep.exact_sum) : Record(nullptr);
    rec["terms"] = {
        {"full_palette", {{"count", rep.decomposition.full_palette.vertices.size()},
                          {"sum", rep.decomposition.full_palette.sum}}},
        {"missing_top", {{"count", rep.decomposition.missing_top.vertices.size()},
                         {"sum", rep.decomposition.missing_top.sum}}},
        {"other_deficient", {{"count", rep.decomposition.other_deficient.vertices.size()},
                             {"sum", rep.decomposition.other_deficient.sum}}},
    };
    rec["chain_holds"] = rep.chain_holds;
    return rec;
}

Record sum_oracle(const OracleResult& res) {
    Record rec;
    rec["kind"] = "oracle_sum";
    rec["value"] = res.value;
    rec["cap"] = res.cap;
    rec["cap_stable"] = res.cap_stable;
    rec["explored"] = res.explored;
    rec["witness"] = res.witness.colors;
    return rec;
}

Record sequential_oracle(const Graph& g, const OracleResult& res) {
    Record rec;
    rec["kind"] = "oracle_sequential";
    rec["r"] = res.cap;
    rec["value"] = res.value;
    rec["R"] = res.sequential_vertices;
    rec["explored"] = res.explored;
    rec["witness"] = coloring_lines(g, res.witness);
    return rec;
}

Record bounds(std::int64_t n, std::int64_t n_r, std::int64_t r) {
    Record rec;
    rec["kind"] = "bounds";
    rec["n"] = n;
    rec["n_r"] = n_r;
    rec["r"] = r;
    rec["theorem3"] = theorem3_bound(n, n_r, r);
    // Only (r-1, r)-biregular profiles: n = (2r-1)k, n_r = (r-1)k.
    const bool biregular = n > 0 && n % (2 * r - 1) == 0 && n_r == (r - 1) * (n / (2 * r - 1));
    rec["corollary1"] = biregular ? Record(corollary1_bound(n, r)) : Record(nullptr);
    rec["corollary2"] = corollary2_bound(n, n_r, r);
    return rec;
}

std::string line(const Record& rec) { return rec.dump() + "\n"; }

}  // namespace seqcolor::report
