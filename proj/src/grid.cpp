#include "permwqo/grid.hpp"

#include <set>
#include <sstream>

#include "permwqo/errors.hpp"

namespace permwqo {

ZeroPmOneMatrix::ZeroPmOneMatrix(std::size_t cols, std::size_t rows)
    : cols_(cols), rows_(rows), entries_(cols * rows, 0) {
    if (cols == 0 || rows == 0) throw InvalidInput("matrix: needs at least one row and one column");
}

ZeroPmOneMatrix ZeroPmOneMatrix::from_rows_top_down(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows.front().empty()) throw InvalidInput("matrix: empty");
    ZeroPmOneMatrix m(rows.front().size(), rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw InvalidInput("matrix: ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m.set(c + 1, m.rows_ - r, rows[r][c]);
    }
    return m;
}

ZeroPmOneMatrix ZeroPmOneMatrix::x_matrix() { return from_rows_top_down({{-1, 1}, {1, -1}}); }

int ZeroPmOneMatrix::at(std::size_t col, std::size_t row) const {
    if (col < 1 || col > cols_ || row < 1 || row > rows_) throw InvalidInput("matrix: cell out of range");
    return entries_[(col - 1) * rows_ + (row - 1)];
}

void ZeroPmOneMatrix::set(std::size_t col, std::size_t row, int value) {
    if (value < -1 || value > 1) throw InvalidInput("matrix: entries must be -1, 0 or 1");
    if (col < 1 || col > cols_ || row < 1 || row > rows_) throw InvalidInput("matrix: cell out of range");
    entries_[(col - 1) * rows_ + (row - 1)] = value;
}

std::vector<std::vector<int>> ZeroPmOneMatrix::rows_top_down() const {
    std::vector<std::vector<int>> out;
    for (std::size_t row = rows_; row >= 1; --row) {
        std::vector<int> line;
        for (std::size_t col = 1; col <= cols_; ++col) line.push_back(at(col, row));
        out.push_back(std::move(line));
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> ZeroPmOneMatrix::nonzero_cells() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t col = 1; col <= cols_; ++col)
        for (std::size_t row = 1; row <= rows_; ++row)
            if (at(col, row) != 0) out.emplace_back(col, row);
    return out;
}

std::string ZeroPmOneMatrix::str() const {
    std::ostringstream out;
    bool first_row = true;
    for (const auto& line : rows_top_down()) {
        if (!first_row) out << " / ";
        first_row = false;
        for (std::size_t c = 0; c < line.size(); ++c) out << (c ? " " : "") << line[c];
    }
    return out.str();
}

Graph cell_graph(const ZeroPmOneMatrix& m) {
    const auto cells = m.nonzero_cells();
    Graph g(cells.size());
    auto index_of = [&](std::size_t col, std::size_t row) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i] == std::make_pair(col, row)) return i + 1;
        return std::size_t{0};
    };
    // Consecutive nonzero cells along each column and each row.
    for (std::size_t col = 1; col <= m.cols(); ++col) {
        std::size_t prev = 0;
        for (std::size_t row = 1; row <= m.rows(); ++row) {
            if (m.at(col, row) == 0) continue;
            const std::size_t cur = index_of(col, row);
            if (prev) g.add_edge(prev, cur);
            prev = cur;
        }
    }
    for (std::size_t row = 1; row <= m.rows(); ++row) {
        std::size_t prev = 0;
        for (std::size_t col = 1; col <= m.cols(); ++col) {
            if (m.at(col, row) == 0) continue;
            const std::size_t cur = index_of(col, row);
            if (prev) g.add_edge(prev, cur);
            prev = cur;
        }
    }
    return g;
}

bool is_valid_gridding(const GriddedPermutation& g, const ZeroPmOneMatrix& m) {
    const std::size_t n = g.perm.size();
    if (g.cells.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const auto [col, row] = g.cells[i];
        if (col < 1 || col > m.cols() || row < 1 || row > m.rows() || m.at(col, row) == 0) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto [ci, ri] = g.cells[i];
            const auto [cj, rj] = g.cells[j];
            if (ci > cj) return false;
            // Rows must weakly increase with value.
            if (g.perm[i] < g.perm[j] ? ri > rj : ri < rj) return false;
            if (ci == cj && ri == rj) {
                const bool increasing = g.perm[i] < g.perm[j];
                if (increasing != (m.at(ci, ri) == 1)) return false;
            }
        }
    }
    return true;
}

namespace {

/// Weakly increasing cut sequences 0 <= c_1 <= ... <= c_{parts-1} <= n in lexicographic order.
std::vector<std::vector<std::size_t>> cut_sequences(std::size_t parts, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() + 1 == parts) {
            out.push_back(cur);
            return;
        }
        for (std::size_t c = from; c <= n; ++c) {
            cur.push_back(c);
            self(self, c);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Block index (1-based) of an item at 0-based rank r given cut points.
std::size_t block_of(std::size_t r, const std::vector<std::size_t>& cuts) {
    std::size_t b = 1;
    for (auto c : cuts)
        if (r >= c) ++b;
    return b;
}

}  // namespace

std::vector<GriddedPermutation> griddings(const Permutation& pi, const ZeroPmOneMatrix& m, std::size_t max_n) {
    check_guard("gridding search", pi.size(), max_n);
    const std::size_t n = pi.size();
    const auto col_cuts = cut_sequences(m.cols(), n);
    const auto row_cuts = cut_sequences(m.rows(), n);

    std::vector<GriddedPermutation> out;
    std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
    for (const auto& cc : col_cuts) {
        for (const auto& rc : row_cuts) {
            GriddedPermutation g{pi, std::vector<std::pair<std::size_t, std::size_t>>(n)};
            bool ok = true;
            // Last value seen in each cell, to check monotonicity incrementally.
            std::vector<int> last(m.cols() * m.rows(), 0);
            for (std::size_t i = 0; i < n && ok; ++i) {
                const std::size_t col = block_of(i, cc);
                const std::size_t row = block_of(static_cast<std::size_t>(pi[i] - 1), rc);
                const int sign = m.at(col, row);
                int& prev = last[(col - 1) * m.rows() + (row - 1)];
                if (sign == 0 || (prev != 0 && (sign == 1 ? pi[i] < prev : pi[i] > prev))) ok = false;
                prev = pi[i];
                g.cells[i] = {col, row};
            }
            if (ok && seen.insert(g.cells).second) out.push_back(std::move(g));
        }
    }
    return out;
}

std::optional<GriddedPermutation> grid_member(const Permutation& pi, const ZeroPmOneMatrix& m, std::size_t max_n) {
    auto all = griddings(pi, m, max_n);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::vector<LinearConstraint> drawing_constraints(const GriddedPermutation& g, const ZeroPmOneMatrix& m) {
    const std::size_t n = g.perm.size();
    std::vector<LinearConstraint> out;
    auto add = [&](std::size_t i, long long ci, std::size_t j, long long cj, long long bound) {
        LinearConstraint c{std::vector<Rational>(n, Rational(0)), Rational(bound), true};
        c.coeffs[i] += ci;
        c.coeffs[j] += cj;
        out.push_back(std::move(c));
    };
    for (std::size_t i = 0; i < n; ++i) {
        add(i, -1, i, 0, 0);  // t_i > 0
        add(i, 1, i, 0, 1);   // t_i < 1
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto [ci, ri] = g.cells[i];
            const auto [cj, rj] = g.cells[j];
            // Horizontal order inside a column follows position.
            if (ci == cj && i < j) add(i, 1, j, -1, 0);
            // Vertical order inside a row follows value.
            if (ri == rj && g.perm[i] < g.perm[j]) {
                const int si = m.at(ci, ri);
                const int sj = m.at(cj, rj);
                if (si == 1 && sj == 1) add(i, 1, j, -1, 0);         // t_i < t_j
                else if (si == -1 && sj == -1) add(i, -1, j, 1, 0);  // t_i > t_j
                else if (si == 1) add(i, 1, j, 1, 1);                // t_i < 1 - t_j
                else add(i, -1, j, -1, -1);                          // 1 - t_i < t_j
            }
        }
    }
    return out;
}

std::vector<std::pair<Rational, Rational>> drawing_points(const GeometricDrawing& d, const ZeroPmOneMatrix& m) {
    std::vector<std::pair<Rational, Rational>> out;
    for (std::size_t i = 0; i < d.params.size(); ++i) {
        const auto [col, row] = d.gridded.cells[i];
        const Rational t = d.params[i];
        const Rational x = Rational(static_cast<long long>(col) - 1) + t;
        const Rational y = m.at(col, row) == 1 ? Rational(static_cast<long long>(row) - 1) + t
                                               : Rational(static_cast<long long>(row)) - t;
        out.emplace_back(x, y);
    }
    return out;
}

std::optional<GeometricDrawing> geom_member(const Permutation& pi, const ZeroPmOneMatrix& m, std::size_t max_n) {
    check_guard("geom_member", pi.size(), max_n);
    for (auto& g : griddings(pi, m, max_n)) {
        auto constraints = drawing_constraints(g, m);
        if (auto t = solve_linear_system(pi.size(), constraints)) return GeometricDrawing{std::move(g), std::move(*t)};
    }
    return std::nullopt;
}

PermSet enumerate_grid(const ZeroPmOneMatrix& m, std::size_t n, GridKind kind, std::size_t max_n) {
    check_guard("enumerate_grid", n, max_n);
    PermSet out;
    for_each_permutation(n, [&](const Permutation& p) {
        const bool in = kind == GridKind::monotone ? grid_member(p, m, max_n).has_value()
                                                   : geom_member(p, m, max_n).has_value();
        if (in) out.insert(p);
        return true;
    });
    return out;
}

GriddabilityReport griddability_evidence(const PermClass& c, std::size_t depth, std::size_t max_n) {
    check_guard("griddability_evidence", 2 * depth, max_n);
    GriddabilityReport report;
    Permutation sum_chain, skew_chain;
    for (std::size_t j = 1; j <= depth; ++j) {
        sum_chain = sum(sum_chain, Permutation{2, 1}, SumKind::direct);
        skew_chain = sum(skew_chain, Permutation{1, 2}, SumKind::skew);
        report.sum_chain.push_back(c.contains(sum_chain));
        report.skew_chain.push_back(c.contains(skew_chain));
    }
    report.note =
        "bounded evidence only: whether a class avoids one or both of the two closures is not decided here, "
        "and the griddability criterion admits both the 'not both' and the 'neither' reading";
    return report;
}

}  // namespace permwqo
