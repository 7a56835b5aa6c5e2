#include "k3lat/witness_io.hpp"

#include <fstream>
#include <sstream>

namespace k3lat {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Lattice eval_concrete(const std::string& expr, const std::string& what) {
    LatticeLike l = dsl::evaluate(expr);
    if (!is_concrete(l)) throw std::invalid_argument("witness: " + what + " expression must be concrete");
    return std::get<Lattice>(l);
}

}  // namespace

EmbeddingWitness read_witness(std::istream& in) {
    std::string sub_expr, ambient_expr;
    std::vector<IntVec> rows;
    bool in_matrix = false;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        if (!in_matrix) {
            if (t.rfind("sub:", 0) == 0)
                sub_expr = strip(t.substr(4));
            else if (t.rfind("ambient:", 0) == 0)
                ambient_expr = strip(t.substr(8));
            else if (t == "matrix:")
                in_matrix = true;
            else
                throw std::invalid_argument("witness: unexpected line '" + t + "'");
        } else {
            std::istringstream ls(t);
            IntVec row;
            std::string tok;
            while (ls >> tok) row.emplace_back(tok);
            if (!rows.empty() && rows[0].size() != row.size())
                throw std::invalid_argument("witness: ragged matrix");
            rows.push_back(std::move(row));
        }
    }
    if (sub_expr.empty() || ambient_expr.empty() || rows.empty())
        throw std::invalid_argument("witness: missing sub, ambient or matrix section");
    EmbeddingWitness w{eval_concrete(sub_expr, "sub"), eval_concrete(ambient_expr, "ambient"),
                       IntMatrix(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()))};
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) w.map(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    validate_witness(w);
    return w;
}

EmbeddingWitness load_witness(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("witness: cannot open " + path);
    return read_witness(in);
}

void write_witness(std::ostream& out, const EmbeddingWitness& w, const std::string& sub_expr,
                   const std::string& ambient_expr) {
    out << "sub: " << sub_expr << "\n";
    out << "ambient: " << ambient_expr << "\n";
    out << "matrix:\n";
    for (int i = 0; i < w.map.rows(); ++i) {
        for (int j = 0; j < w.map.cols(); ++j) {
            out << w.map(i, j).get_str();
            if (j + 1 < w.map.cols()) out << " ";
        }
        out << "\n";
    }
}

}  // namespace k3lat
