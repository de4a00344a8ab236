#include "gridfloer/grid.hpp"

#include <algorithm>
#include <sstream>

namespace gridfloer {

void GridDiagram::validate() const {
    if (n <= 0) throw ParseError("grid size must be positive, got n=" + std::to_string(n));
    auto check_perm = [&](const std::vector<int>& rows, const char* label) {
        if ((int)rows.size() != n)
            throw NotAPermutation(std::string(label) + ": expected " + std::to_string(n) +
                                  " entries, got " + std::to_string(rows.size()));
        std::vector<char> seen(n, 0);
        for (int j = 0; j < n; ++j) {
            int r = rows[j];
            if (r < 0 || r >= n)
                throw NotAPermutation(std::string(label) + ": entry " + std::to_string(r) +
                                      " at column " + std::to_string(j) + " out of range [0," +
                                      std::to_string(n) + ")");
            if (seen[r])
                throw NotAPermutation(std::string(label) + ": row " + std::to_string(r) +
                                      " repeated at column " + std::to_string(j));
            seen[r] = 1;
        }
    };
    check_perm(o_rows, "O");
    check_perm(x_rows, "X");
    for (int j = 0; j < n; ++j)
        if (o_rows[j] == x_rows[j])
            throw OverlappingMarkings("X and O share cell at column " + std::to_string(j) +
                                      ", row " + std::to_string(o_rows[j]));
}

int GridDiagram::o_col(int r) const {
    for (int j = 0; j < n; ++j)
        if (o_rows[j] == r) return j;
    throw DomainError("row out of range");
}

int GridDiagram::x_col(int r) const {
    for (int j = 0; j < n; ++j)
        if (x_rows[j] == r) return j;
    throw DomainError("row out of range");
}

GridDiagram parse_grid(std::string_view text) {
    GridDiagram g;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool have_n = false, have_o = false, have_x = false;

    auto parse_rows = [&](const std::string& body, const char* label) {
        std::istringstream row_in(body);
        std::vector<int> rows;
        int v;
        while (row_in >> v) rows.push_back(v);
        row_in.clear();
        std::string junk;
        if (row_in >> junk)
            throw ParseError(std::string(label) + " line " + std::to_string(lineno) +
                             ": unexpected token '" + junk + "'");
        return rows;
    };

    while (std::getline(in, line)) {
        ++lineno;
        // strip leading whitespace
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        line = line.substr(start);
        if (line[0] == '#') continue;
        if (line.rfind("n=", 0) == 0) {
            try {
                g.n = std::stoi(line.substr(2));
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": malformed grid size '" +
                                 line + "'");
            }
            have_n = true;
        } else if (line.rfind("O:", 0) == 0) {
            g.o_rows = parse_rows(line.substr(2), "O");
            have_o = true;
        } else if (line.rfind("X:", 0) == 0) {
            g.x_rows = parse_rows(line.substr(2), "X");
            have_x = true;
        } else if (line.rfind("name=", 0) == 0) {
            g.name = line.substr(5);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unrecognized line '" + line +
                             "'");
        }
    }
    if (!have_n) throw ParseError("missing 'n=' line");
    if (!have_o) throw ParseError("missing 'O:' line");
    if (!have_x) throw ParseError("missing 'X:' line");
    g.validate();
    return g;
}

std::string serialize_grid(const GridDiagram& g) {
    std::ostringstream out;
    out << "n=" << g.n << "\n";
    out << "O:";
    for (int r : g.o_rows) out << ' ' << r;
    out << "\nX:";
    for (int r : g.x_rows) out << ' ' << r;
    out << "\n";
    if (!g.name.empty()) out << "name=" << g.name << "\n";
    return out.str();
}

ComponentPartition trace_components(const GridDiagram& g) {
    const int n = g.n;
    std::vector<int> o_col(n), column_owner(n, -1), row_owner(n, -1);
    for (int j = 0; j < n; ++j) o_col[g.o_rows[j]] = j;

    ComponentPartition parts;
    parts.column_owner.assign(n, -1);
    parts.row_owner.assign(n, -1);
    int comp = 0;
    for (int start = 0; start < n; ++start) {
        if (parts.column_owner[start] >= 0) continue;
        int marks = 0;
        int j = start;
        do {
            parts.column_owner[j] = comp;
            int r = g.x_rows[j];
            parts.row_owner[r] = comp;
            ++marks;
            j = o_col[r];
        } while (j != start);
        parts.marks_per_component.push_back(marks);
        ++comp;
    }
    parts.count = comp;
    return parts;
}

int linking_number(const GridDiagram& g, const ComponentPartition& parts, int i, int j) {
    if (i == j) throw SameComponent("linking_number: components equal (" + std::to_string(i) + ")");
    if (i < 0 || i >= parts.count || j < 0 || j >= parts.count)
        throw InvalidComponent("linking_number: component index out of range");
    const int n = g.n;
    std::vector<int> x_col(n), o_col(n);
    for (int c = 0; c < n; ++c) {
        x_col[g.x_rows[c]] = c;
        o_col[g.o_rows[c]] = c;
    }
    int signed_crossings = 0;
    for (int c = 0; c < n; ++c) {
        int ci = parts.column_owner[c];
        if (ci != i && ci != j) continue;
        int lo = std::min(g.o_rows[c], g.x_rows[c]);
        int hi = std::max(g.o_rows[c], g.x_rows[c]);
        int dv = g.x_rows[c] > g.o_rows[c] ? 1 : -1;  // vertical runs O -> X
        for (int r = lo + 1; r < hi; ++r) {
            int rj = parts.row_owner[r];
            if ((ci == i && rj != j) || (ci == j && rj != i)) continue;
            int a = x_col[r], b = o_col[r];
            if (c <= std::min(a, b) || c >= std::max(a, b)) continue;
            int dh = b > a ? 1 : -1;  // horizontal runs X -> O
            signed_crossings += dv * dh;
        }
    }
    return signed_crossings / 2;
}

LinkingMatrix linking_matrix(const GridDiagram& g, const ComponentPartition& parts) {
    LinkingMatrix m;
    m.count = parts.count;
    m.lk.assign(parts.count, std::vector<int>(parts.count, 0));
    for (int i = 0; i < parts.count; ++i)
        for (int j = i + 1; j < parts.count; ++j)
            m.lk[i][j] = m.lk[j][i] = linking_number(g, parts, i, j);
    return m;
}

int LinkingMatrix::total_linking_with_rest(int i) const {
    int total = 0;
    for (int j = 0; j < count; ++j)
        if (j != i) total += lk[i][j];
    return total;
}

GridDiagram disjoint_union(const GridDiagram& g1, const GridDiagram& g2) {
    g1.validate();
    g2.validate();
    GridDiagram g;
    g.n = g1.n + g2.n;
    g.o_rows = g1.o_rows;
    g.x_rows = g1.x_rows;
    for (int r : g2.o_rows) g.o_rows.push_back(r + g1.n);
    for (int r : g2.x_rows) g.x_rows.push_back(r + g1.n);
    if (!g1.name.empty() || !g2.name.empty()) g.name = g1.name + "+" + g2.name;
    return g;
}

GridDiagram remove_component(const GridDiagram& g, int i) {
    ComponentPartition parts = trace_components(g);
    if (i < 0 || i >= parts.count)
        throw InvalidComponent("remove_component: component " + std::to_string(i) +
                               " out of range [0," + std::to_string(parts.count) + ")");
    if (parts.count == 1) throw LastComponent("remove_component: cannot remove the last component");

    std::vector<int> new_col(g.n, -1), new_row(g.n, -1);
    int nc = 0, nr = 0;
    for (int c = 0; c < g.n; ++c)
        if (parts.column_owner[c] != i) new_col[c] = nc++;
    for (int r = 0; r < g.n; ++r)
        if (parts.row_owner[r] != i) new_row[r] = nr++;

    GridDiagram out;
    out.n = nc;
    out.o_rows.resize(nc);
    out.x_rows.resize(nc);
    for (int c = 0; c < g.n; ++c) {
        if (new_col[c] < 0) continue;
        out.o_rows[new_col[c]] = new_row[g.o_rows[c]];
        out.x_rows[new_col[c]] = new_row[g.x_rows[c]];
    }
    out.validate();
    return out;
}

}  // namespace gridfloer
