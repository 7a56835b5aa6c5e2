#include "k3lat/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "k3lat/roots.hpp"
#include "k3lat/tables.hpp"
#include "k3lat/witness_io.hpp"

namespace k3lat::cli {

namespace {

std::string signature_str(const Signature& s) {
    return "(" + std::to_string(s.t_plus) + "," + std::to_string(s.t_minus) + ")";
}

void print_info(const LatticeLike& l, std::ostream& out) {
    out << "rank: " << rank_of(l) << "\n";
    out << "signature: " << signature_str(signature_of(l)) << "\n";
    if (is_concrete(l)) {
        const Lattice& lat = std::get<Lattice>(l);
        out << "determinant: " << lat.determinant().get_str() << "\n";
        out << "even: yes\n";
        out << "unimodular: " << (lat.is_unimodular() ? "yes" : "no") << "\n";
        out << "hyperbolic: " << (lat.is_hyperbolic() ? "yes" : "no") << "\n";
    } else {
        out << "determinant: |A| = " << form_of(l).group_order().get_str() << " (genus level)\n";
    }
    out << "q: " << genus_symbol(form_of(l)).str() << "\n";
}

GenusSymbol symbol_from_arg(const std::string& arg) {
    try {
        return parse_genus_symbol(arg);
    } catch (const std::exception&) {
        return genus_symbol(form_of(dsl::evaluate(arg)));
    }
}

IntVec parse_csv_ints(const std::string& csv) {
    IntVec v;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.emplace_back(tok);
    return v;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact lattice and discriminant-form toolkit for the K3 mirror tables"};
    app.require_subcommand(1);

    std::string expr, expr_b, norm_str = "-2", csv_h, witness_path, ambient_expr, sub_expr;
    int table_filter = 0, row_filter = 0;
    int weight = 0, dim = 0, mult = 1;
    bool json = false, serial = false;

    CLI::App* cmd_parse = app.add_subcommand("parse", "parse an expression and print its canonical form");
    cmd_parse->add_option("expr", expr)->required();

    CLI::App* cmd_info = app.add_subcommand("info", "rank, signature and invariants of a lattice expression");
    cmd_info->add_option("expr", expr)->required();

    CLI::App* cmd_disc = app.add_subcommand("disc", "discriminant form of a lattice expression");
    cmd_disc->add_option("expr", expr)->required();

    CLI::App* cmd_genus = app.add_subcommand("genus", "canonical genus symbol of the discriminant form");
    cmd_genus->add_option("expr", expr)->required();

    CLI::App* cmd_iso = app.add_subcommand("iso", "compare two forms (expressions or genus symbols)");
    cmd_iso->add_option("a", expr)->required();
    cmd_iso->add_option("b", expr_b)->required();

    CLI::App* cmd_comp = app.add_subcommand("complement", "orthogonal complement inside an even unimodular lattice");
    cmd_comp->add_option("--ambient", ambient_expr)->required();
    cmd_comp->add_option("--sub", sub_expr);
    cmd_comp->add_option("--witness", witness_path);

    CLI::App* cmd_sv = app.add_subcommand("shortvec", "vectors of a given norm in a negative definite lattice");
    cmd_sv->add_option("expr", expr)->required();
    cmd_sv->add_option("--norm", norm_str)->required();

    CLI::App* cmd_deg = app.add_subcommand("degenerate", "-2-vector degeneracy test for a polarization witness");
    cmd_deg->add_option("--witness", witness_path)->required();
    cmd_deg->add_option("--ambient", ambient_expr);

    CLI::App* cmd_ch = app.add_subcommand("chamber", "chamber-interior test for a vector h");
    cmd_ch->set_help_flag("--help", "print help");  // frees -h for the vector option
    cmd_ch->add_option("expr", expr)->required();
    cmd_ch->add_option("--h", csv_h)->required();

    CLI::App* cmd_cl = app.add_subcommand("classify", "moduli classification from weight and dimension");
    cmd_cl->add_option("--weight", weight)->required();
    cmd_cl->add_option("--dim", dim)->required();
    cmd_cl->add_option("--mult", mult);

    CLI::App* cmd_vt = app.add_subcommand("verify-tables", "verify the built-in tables");
    cmd_vt->add_option("--table", table_filter);
    cmd_vt->add_option("--row", row_filter);
    cmd_vt->add_flag("--json", json);
    cmd_vt->add_flag("--serial", serial);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help goes to stdout with success
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    if (cmd_parse->parsed()) {
        out << dsl::render(dsl::parse(expr)) << "\n";
        return 0;
    }
    if (cmd_info->parsed()) {
        print_info(dsl::evaluate(expr), out);
        return 0;
    }
    if (cmd_disc->parsed()) {
        FiniteQuadraticForm q = form_of(dsl::evaluate(expr));
        out << q.str() << "\n";
        if (!q.is_trivial()) {
            out << "b = " << std::string("[");
            for (int i = 0; i < q.gens(); ++i) {
                out << "[";
                for (int j = 0; j < q.gens(); ++j)
                    out << q.b_value(i, j).get_str() << (j + 1 < q.gens() ? "," : "");
                out << "]" << (i + 1 < q.gens() ? "," : "");
            }
            out << "]\n";
        }
        out << "genus symbol: " << genus_symbol(q).str() << "\n";
        return 0;
    }
    if (cmd_genus->parsed()) {
        out << genus_symbol(form_of(dsl::evaluate(expr))).str() << "\n";
        return 0;
    }
    if (cmd_iso->parsed()) {
        bool same = canonical_equal(symbol_from_arg(expr), symbol_from_arg(expr_b));
        out << (same ? "isomorphic" : "not isomorphic") << "\n";
        return same ? 0 : 1;
    }
    if (cmd_comp->parsed()) {
        LatticeLike ambient_like = dsl::evaluate(ambient_expr);
        if (!is_concrete(ambient_like)) throw std::domain_error("ambient must be concrete");
        const Lattice& ambient = std::get<Lattice>(ambient_like);
        if (!witness_path.empty()) {
            EmbeddingWitness w = load_witness(witness_path);
            if (w.ambient.gram() != ambient.gram())
                throw std::invalid_argument("witness ambient does not match --ambient");
            Lattice comp = complement_explicit(w);
            out << "complement gram: " << comp.gram().str() << "\n";
            out << "rank: " << comp.rank() << ", signature: " << signature_str(comp.signature())
                << ", det: " << comp.determinant().get_str() << "\n";
            out << "q: " << genus_symbol(discriminant_form(comp)).str() << "\n";
            return 0;
        }
        if (sub_expr.empty()) throw std::invalid_argument("complement: need --sub or --witness");
        GenusTriple g = complement_genus(dsl::evaluate(sub_expr), ambient);
        out << "genus: signature " << signature_str(g.signature()) << ", q = " << genus_symbol(g.q).str()
            << "\n";
        ExistenceVerdict v = existence_check(g);
        out << "existence: " << (v.consistent ? "Consistent" : "Impossible (" + v.reason + ")") << "\n";
        out << "uniqueness: " << to_string(nikulin_unique(g)) << "\n";
        return 0;
    }
    if (cmd_sv->parsed()) {
        LatticeLike l = dsl::evaluate(expr);
        if (!is_concrete(l)) throw std::domain_error("shortvec: expression must be concrete");
        std::vector<IntVec> vs = short_vectors(std::get<Lattice>(l), Int(norm_str));
        for (const IntVec& v : vs) out << vec_str(v) << "\n";
        out << vs.size() << " vectors up to sign (" << 2 * vs.size() << " total)\n";
        return 0;
    }
    if (cmd_deg->parsed()) {
        EmbeddingWitness w = load_witness(witness_path);
        if (!ambient_expr.empty()) {
            LatticeLike a = dsl::evaluate(ambient_expr);
            if (!is_concrete(a) || std::get<Lattice>(a).gram() != w.ambient.gram())
                throw std::invalid_argument("witness ambient does not match --ambient");
        }
        out << (is_degenerate(w) ? "degenerate" : "non-degenerate") << "\n";
        return 0;
    }
    if (cmd_ch->parsed()) {
        LatticeLike l = dsl::evaluate(expr);
        if (!is_concrete(l)) throw std::domain_error("chamber: expression must be concrete");
        bool inside = in_chamber_interior(std::get<Lattice>(l), parse_csv_ints(csv_h));
        out << (inside ? "interior" : "on a wall") << "\n";
        return 0;
    }
    if (cmd_cl->parsed()) {
        out << to_string(classify_moduli(weight, dim, mult)) << "\n";
        return 0;
    }
    if (cmd_vt->parsed()) {
        std::vector<VerificationReport> reports = verify_tables(table_filter, row_filter, !serial);
        if (json) {
            std::vector<std::string> inputs;
            if (table_filter) inputs.push_back("--table " + std::to_string(table_filter));
            if (row_filter) inputs.push_back("--row " + std::to_string(row_filter));
            out << reports_to_json(reports, "verify-tables", inputs) << "\n";
        } else {
            int passed = 0;
            for (const VerificationReport& r : reports) {
                out << "table " << r.row.table_id << " row " << std::setw(2) << r.row.row << "  "
                    << (r.pass() ? "PASS" : "FAIL") << "  S = " << r.row.s << "  q_S = " << r.row.q_s
                    << "  n = " << r.n << "  " << to_string(r.classification) << "  S "
                    << to_string(r.uniqueness_s) << ", T " << to_string(r.uniqueness_t) << "\n";
                if (!r.error.empty()) out << "    error: " << r.error << "\n";
                if (r.pass()) ++passed;
            }
            out << passed << "/" << reports.size() << " rows pass\n";
            if (!reports.empty() && passed == static_cast<int>(reports.size())) {
                Theorem34Report t34 = theorem34_check(verify_tables(0, 0, !serial));
                if (table_filter == 0 && row_filter == 0)
                    out << "uniruledness membership: " << (t34.membership_ok ? "matches" : "MISMATCH")
                        << "; weight=dim rows: " << (t34.weight_dim_ok ? "one per table 3-6" : "MISMATCH")
                        << "\n";
            }
        }
        for (const VerificationReport& r : reports)
            if (!r.pass()) return 1;
        return reports.empty() ? 2 : 0;
    }
    err << "unknown command\n";
    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const dsl::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace k3lat::cli
