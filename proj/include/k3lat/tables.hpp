#pragma once

#include <cstdint>

#include "k3lat/dsl.hpp"

namespace k3lat {

// One table row: mirror lattice S^mir, gluing scale m, weight of the
// discriminant form, the polarization lattice S and its discriminant
// quadratic form in genus-symbol notation.
struct TableRow {
    int table_id = 0;  // 1..6
    int row = 0;       // 1-based within the table
    std::string s_mir;
    int m = 1;
    int weight = 0;
    std::string s;
    std::string q_s;
};

// All 53 rows (25 + 10 + 8 + 3 + 4 + 3), embedded as data.
const std::vector<TableRow>& builtin_tables();

// FNV-1a over the serialized rows; tests pin the value against edits.
std::uint64_t tables_checksum();

enum class Classification { Uniruled, KodairaZeroCandidate, LowDim, Unknown };

std::string to_string(Classification c);

// LowDim for n <= 2; otherwise by comparing the weight k with mult * n.
Classification classify_moduli(int weight, int n, int mult = 1);

struct RowChecks {
    bool rank_sum = false;         // rk S + rk T = 22
    bool signature_sum = false;    // sig S + sig T = (3,19), sig T = (2, rk T - 2)
    bool q_s_matches_table = false;
    bool q_t_is_minus_q_s = false;
    bool milgram_s = false;
    bool milgram_t = false;
    bool existence_s = false;
    bool existence_t = false;
    bool all_pass() const {
        return rank_sum && signature_sum && q_s_matches_table && q_t_is_minus_q_s && milgram_s && milgram_t &&
               existence_s && existence_t;
    }
};

struct VerificationReport {
    TableRow row;
    RowChecks checks;
    Uniqueness uniqueness_s = Uniqueness::Inconclusive;
    Uniqueness uniqueness_t = Uniqueness::Inconclusive;
    int n = 0;  // moduli dimension rk T - 2
    Classification classification = Classification::Unknown;
    std::string error;  // nonempty if the row failed to evaluate

    bool pass() const { return error.empty() && checks.all_pass(); }
};

VerificationReport verify_row(const TableRow& row);

// Verifies all rows (optionally a single table), in parallel by default;
// reports come back in row order regardless of scheduling.
std::vector<VerificationReport> verify_tables(int table_filter = 0, int row_filter = 0, bool parallel = true);

struct Theorem34Report {
    bool membership_ok = false;
    bool weight_dim_ok = false;
    std::vector<std::pair<int, int>> computed_positive;  // rows with Uniruled or LowDim
    std::vector<std::pair<int, int>> expected_positive;
    std::vector<std::pair<int, int>> weight_equals_dim;  // one expected per table 3..6
    bool pass() const { return membership_ok && weight_dim_ok; }
};

Theorem34Report theorem34_check(const std::vector<VerificationReport>& reports);

// JSON document for the CLI (schema_version 1).
std::string reports_to_json(const std::vector<VerificationReport>& reports, const std::string& command,
                            const std::vector<std::string>& inputs);

}  // namespace k3lat
