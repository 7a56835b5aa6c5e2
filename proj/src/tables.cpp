#include "k3lat/tables.hpp"

#include <sstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3lat {

const std::vector<TableRow>& builtin_tables() {
    static const std::vector<TableRow> rows = {
        {1, 1, "U+A1", 1, 35, "U+E8+E7", "2_1^{+1}"},
        {1, 2, "U+2A1", 1, 34, "U+E8+D6", "2_2^{+2}"},
        {1, 3, "U+A2", 1, 45, "U+E8+E6", "3^{-1}"},
        {1, 4, "U+3A1", 1, 33, "U+E7+D6", "2_3^{+3}"},
        {1, 5, "U+A3", 1, 54, "U+E8+D5", "4_3^{-1}"},
        {1, 6, "U+4A1", 1, 32, "U+D6+D6", "2_4^{+4}"},
        {1, 7, "U+2A2", 1, 42, "U+E6+E6", "3^{+2}"},
        {1, 8, "U+A4", 1, 62, "U+E8+A4", "5^{+1}"},
        {1, 9, "U+D4", 1, 72, "U+E8+D4", "2_{II}^{-2}"},
        {1, 10, "U+D4", 2, 40, "U(2)+E8+D4", "2_{II}^{-4}"},
        {1, 11, "U+A5", 1, 69, "U+E8+A2+A1", "2_{-1}^{+1},3^{+1}"},
        {1, 12, "U+D5", 1, 88, "U+E8+A3", "4_5^{-1}"},
        {1, 13, "U+3A2", 1, 39, "U+E6+2A2", "3^{-3}"},
        {1, 14, "U+2A3", 1, 48, "U+2D5", "4_6^{+2}"},
        {1, 15, "U+A6", 1, 75, "U+E8+[[-2,1],[1,-4]]", "7^{-1}"},
        {1, 16, "U+D6", 1, 102, "U+E8+2A1", "2_{-2}^{+2}"},
        {1, 17, "U+E6", 1, 120, "U+E8+A2", "3^{+1}"},
        {1, 18, "U+A7", 1, 80, "U+E8+<-8>", "8_{-1}^{+1}"},
        {1, 19, "U+D7", 1, 114, "U+E8+<-4>", "4_{-1}^{+1}"},
        {1, 20, "U+E7", 1, 165, "U+E8+A1", "2_{-1}^{+1}"},
        {1, 21, "U+2D4", 1, 60, "U+2D4", "2_{II}^{+4}"},
        {1, 22, "U+D8", 1, 124, "U+D8", "2_{II}^{+2}"},
        {1, 23, "U+E8", 1, 252, "U+E8", "0"},
        {1, 24, "U(2)+2D4", 1, 28, "U(2)+2D4", "2_{II}^{+6}"},
        {1, 25, "U+2E8", 1, 132, "U", "0"},

        {2, 1, "U", 1, 12, "U+E8+E8", "0"},
        {2, 2, "U+A1(2)", 1, 12, "U+E8+D7", "4_1^{+1}"},
        {2, 3, "U+A1(3)", 1, 12, "U+E8+E6+A1", "2_{-1}^{+1},3^{-1}"},
        {2, 4, "U+A1(4)", 1, 12, "U+E8+A7", "8_1^{+1}"},
        {2, 5, "U+2<-4>", 1, 12, "U+D7+D7", "4_2^{+2}"},
        {2, 6, "U+A2(2)", 1, 12, "U+E8+D4+A2", "2_{II}^{-2},3^{+1}"},
        {2, 7, "U+A2(3)", 1, 12, "U+E8+perp(A2(3); E8)", "3^{-1},9^{-1}"},
        {2, 8, "U+A3(2)", 1, 12, "U+E8+perp(A3(2); E8)", "2_{II}^{-2},8_3^{-1}"},
        {2, 9, "U+D4(2)", 1, 12, "U+E8+D4(2)", "2_{II}^{-2},4_{II}^{-2}"},
        {2, 10, "U+E8(2)", 1, 12, "U+E8(2)", "2_{II}^{+8}"},

        {3, 1, "<2>+A1", 2, 12, "U(2)+E8+E7+A1", "2_0^{+4}"},
        {3, 2, "<2>+2A1", 2, 11, "U(2)+E7+E7+A1", "2_1^{+5}"},
        {3, 3, "<2>+3A1", 2, 10, "U(2)+E7+D6+A1", "2_2^{+6}"},
        {3, 4, "<2>+4A1", 2, 9, "U(2)+D6+D6+A1", "2_3^{+7}"},
        {3, 5, "<2>+5A1", 2, 8, "U+D6+6A1", "2_4^{+8}"},
        {3, 6, "<2>+6A1", 2, 7, "U(2)+D6+5A1", "2_5^{+9}"},
        {3, 7, "<2>+7A1", 2, 6, "U(2)+D4+6A1", "2_6^{+10}"},
        {3, 8, "<2>+8A1", 2, 5, "U(2)+E8(2)+A1", "2_7^{+11}"},

        {4, 1, "U(2)+D4", 1, 40, "U(2)+E8+D4", "2_{II}^{-4}"},
        {4, 2, "U(2)+D4", 2, 24, "U+3D4", "2_{II}^{-6}"},
        {4, 3, "U(4)+D4", 4, 6, "U(4)+perp(U(4)+D4; U+2E8)", "2_{II}^{-2},4_{II}^{+4}"},

        {5, 1, "U(4)+A1", 4, 5, "U(4)+perp(U(4); U+E8)+E7", "2_1^{+1},4_{II}^{+4}"},
        {5, 2, "U(4)+2A1", 4, 4, "U(4)+perp(U(4); U+E8)+D6", "2_2^{+2},4_{II}^{+4}"},
        {5, 3, "U(4)+3A1", 4, 3, "U(4)+perp(U(4); U+E8)+D4+A1", "2_3^{+3},4_{II}^{+4}"},
        {5, 4, "U(4)+4A1", 4, 2, "U(4)+perp(U(4); U+E8)+4A1", "2_4^{+4},4_{II}^{+4}"},

        {6, 1, "U(3)+A2", 3, 9, "U(3)+perp(U(3); U+E8)+E6", "3^{-5}"},
        {6, 2, "U(3)+2A2", 3, 6, "U(3)+perp(U(3); U+E8)+2A2", "3^{+6}"},
        {6, 3, "U(3)+3A2", 3, 3, "U(3)+perp(U(3)+A2; U+E8)+2A2", "3^{-7}"},
    };
    return rows;
}

std::uint64_t tables_checksum() {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= 0xff;
        h *= 1099511628211ULL;
    };
    for (const TableRow& r : builtin_tables()) {
        mix(std::to_string(r.table_id));
        mix(std::to_string(r.row));
        mix(r.s_mir);
        mix(std::to_string(r.m));
        mix(std::to_string(r.weight));
        mix(r.s);
        mix(r.q_s);
    }
    return h;
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Uniruled:
            return "Uniruled";
        case Classification::KodairaZeroCandidate:
            return "KodairaZeroCandidate";
        case Classification::LowDim:
            return "LowDim";
        case Classification::Unknown:
            return "Unknown";
    }
    return "Unknown";
}

Classification classify_moduli(int weight, int n, int mult) {
    if (weight < 1 || n < 1 || mult < 1) throw std::invalid_argument("classify_moduli: arguments must be >= 1");
    if (n <= 2) return Classification::LowDim;
    if (weight > mult * n) return Classification::Uniruled;
    if (weight == mult * n) return Classification::KodairaZeroCandidate;
    return Classification::Unknown;
}

VerificationReport verify_row(const TableRow& row) {
    VerificationReport rep;
    rep.row = row;
    try {
        LatticeLike s_mir = dsl::evaluate(row.s_mir);
        if (!is_concrete(s_mir)) throw std::domain_error("mirror expression must be concrete");
        Lattice t = direct_sum({rescale(lattices::U(), row.m), std::get<Lattice>(s_mir)});
        LatticeLike s = dsl::evaluate(row.s);

        const int rk_s = rank_of(s), rk_t = t.rank();
        rep.checks.rank_sum = rk_s + rk_t == 22;
        Signature sig_s = signature_of(s), sig_t = t.signature();
        rep.checks.signature_sum = sig_s.t_plus + sig_t.t_plus == 3 && sig_s.t_minus + sig_t.t_minus == 19 &&
                                   sig_t.t_plus == 2 && sig_t.t_minus == rk_t - 2;

        FiniteQuadraticForm q_s = form_of(s);
        FiniteQuadraticForm q_t = discriminant_form(t);
        rep.checks.q_s_matches_table = canonical_equal(genus_symbol(q_s), parse_genus_symbol(row.q_s));
        rep.checks.q_t_is_minus_q_s = is_isomorphic(q_t, negate(q_s));

        rep.checks.milgram_s =
            gauss_signature(q_s) == ((sig_s.t_plus - sig_s.t_minus) % 8 + 8) % 8;
        rep.checks.milgram_t =
            gauss_signature(q_t) == ((sig_t.t_plus - sig_t.t_minus) % 8 + 8) % 8;

        GenusTriple gs{sig_s.t_plus, sig_s.t_minus, q_s};
        GenusTriple gt{sig_t.t_plus, sig_t.t_minus, q_t};
        rep.checks.existence_s = existence_check(gs).consistent;
        rep.checks.existence_t = existence_check(gt).consistent;
        rep.uniqueness_s = nikulin_unique(gs);
        rep.uniqueness_t = nikulin_unique(gt);

        rep.n = rk_t - 2;
        rep.classification = classify_moduli(row.weight, rep.n, 1);
    } catch (const std::exception& e) {
        rep.error = e.what();
    }
    return rep;
}

std::vector<VerificationReport> verify_tables(int table_filter, int row_filter, bool parallel) {
    std::vector<TableRow> rows;
    for (const TableRow& r : builtin_tables()) {
        if (table_filter > 0 && r.table_id != table_filter) continue;
        if (row_filter > 0 && r.row != row_filter) continue;
        rows.push_back(r);
    }
    std::vector<VerificationReport> reports(rows.size());
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long i = 0; i < static_cast<long>(rows.size()); ++i) reports[i] = verify_row(rows[i]);
    } else {
        for (size_t i = 0; i < rows.size(); ++i) reports[i] = verify_row(rows[i]);
    }
    return reports;
}

Theorem34Report theorem34_check(const std::vector<VerificationReport>& reports) {
    Theorem34Report r;
    for (const VerificationReport& rep : reports) {
        if (rep.classification == Classification::Uniruled || rep.classification == Classification::LowDim)
            r.computed_positive.emplace_back(rep.row.table_id, rep.row.row);
        if (rep.error.empty() && rep.row.table_id >= 3 && rep.row.weight == rep.n)
            r.weight_equals_dim.emplace_back(rep.row.table_id, rep.row.row);
    }
    for (const TableRow& row : builtin_tables()) {
        bool in = false;
        if (row.table_id == 1 || row.table_id == 2) in = true;
        if (row.table_id == 3 && row.row <= 5) in = true;
        if (row.table_id == 4 && row.row <= 2) in = true;
        if ((row.table_id == 5 || row.table_id == 6) && row.row == 1) in = true;
        if (in) r.expected_positive.emplace_back(row.table_id, row.row);
    }
    r.membership_ok = r.computed_positive == r.expected_positive;
    // Exactly one weight-equals-dimension row in each of tables 3..6.
    std::vector<int> counts(7, 0);
    for (auto& [tid, rid] : r.weight_equals_dim) ++counts[tid];
    r.weight_dim_ok = counts[3] == 1 && counts[4] == 1 && counts[5] == 1 && counts[6] == 1;
    return r;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, const std::string& command,
                            const std::vector<std::string>& inputs) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["command"] = command;
    doc["inputs"] = inputs;
    nlohmann::json rows = nlohmann::json::array();
    int passed = 0, failed = 0;
    for (const VerificationReport& r : reports) {
        nlohmann::json j;
        j["table"] = r.row.table_id;
        j["row"] = r.row.row;
        j["s"] = r.row.s;
        j["s_mir"] = r.row.s_mir;
        j["m"] = r.row.m;
        j["weight"] = r.row.weight;
        nlohmann::json checks;
        checks["rank_sum"] = r.checks.rank_sum;
        checks["signature_sum"] = r.checks.signature_sum;
        checks["q_s_matches_table"] = r.checks.q_s_matches_table;
        checks["q_t_is_minus_q_s"] = r.checks.q_t_is_minus_q_s;
        checks["milgram_s"] = r.checks.milgram_s;
        checks["milgram_t"] = r.checks.milgram_t;
        checks["existence_s"] = r.checks.existence_s;
        checks["existence_t"] = r.checks.existence_t;
        checks["uniqueness_s"] = to_string(r.uniqueness_s);
        checks["uniqueness_t"] = to_string(r.uniqueness_t);
        j["checks"] = checks;
        j["n"] = r.n;
        j["classification"] = to_string(r.classification);
        if (!r.error.empty()) j["error"] = r.error;
        rows.push_back(j);
        (r.pass() ? passed : failed) += 1;
    }
    doc["rows"] = rows;
    doc["summary"] = {{"passed", passed}, {"failed", failed}};
    return doc.dump(2);
}

}  // namespace k3lat
