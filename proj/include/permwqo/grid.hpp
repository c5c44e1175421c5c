#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permwqo/fourier_motzkin.hpp"
#include "permwqo/graph.hpp"
#include "permwqo/perm_class.hpp"
#include "permwqo/permutation.hpp"

namespace permwqo {

/// A 0/+-1 matrix in Cartesian indexing: at(col, row) with col counted from the
/// left and row from the bottom, both 1-based.
class ZeroPmOneMatrix {
public:
    ZeroPmOneMatrix() = default;
    /// All-zero matrix; throws unless cols, rows >= 1.
    ZeroPmOneMatrix(std::size_t cols, std::size_t rows);

    /// Builds from display rows listed top row first, as in the JSON format.
    static ZeroPmOneMatrix from_rows_top_down(const std::vector<std::vector<int>>& rows);

    /// The 2x2 matrix with -1 top-left, 1 top-right, 1 bottom-left, -1 bottom-right.
    static ZeroPmOneMatrix x_matrix();

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rows() const noexcept { return rows_; }

    int at(std::size_t col, std::size_t row) const;
    void set(std::size_t col, std::size_t row, int value);

    /// Display rows, top row first.
    std::vector<std::vector<int>> rows_top_down() const;

    /// Nonzero cells as (col, row), ordered by column then row.
    std::vector<std::pair<std::size_t, std::size_t>> nonzero_cells() const;

    std::string str() const;

    friend bool operator==(const ZeroPmOneMatrix&, const ZeroPmOneMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::size_t rows_ = 0;
    std::vector<int> entries_;  // column-major: (col - 1) * rows + (row - 1)
};

/// Vertices are the nonzero cells in nonzero_cells() order; two cells are
/// adjacent when they share a row or column with no nonzero cell between them.
Graph cell_graph(const ZeroPmOneMatrix& m);

/// A permutation with a (col, row) cell per position.
struct GriddedPermutation {
    Permutation perm;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
};

/// Checks the gridding invariants directly: nonzero cells, columns weakly
/// increasing with position, rows weakly increasing with value, and monotone
/// cell contents.
bool is_valid_gridding(const GriddedPermutation& g, const ZeroPmOneMatrix& m);

inline constexpr std::size_t kDefaultGridCap = 12;
inline constexpr std::size_t kDefaultGeomCap = 10;
inline constexpr std::size_t kDefaultGridEnumCap = 7;

/// Every legal gridding of pi, column cuts outermost, value cuts innermost,
/// both in lexicographic order.
std::vector<GriddedPermutation> griddings(const Permutation& pi, const ZeroPmOneMatrix& m,
                                          std::size_t max_n = kDefaultGridCap);

/// First legal gridding, if any.
std::optional<GriddedPermutation> grid_member(const Permutation& pi, const ZeroPmOneMatrix& m,
                                              std::size_t max_n = kDefaultGridCap);

/// A drawing on the standard figure: the gridding plus the position t in (0,1)
/// of every point along its cell's segment.
struct GeometricDrawing {
    GriddedPermutation gridded;
    std::vector<Rational> params;
};

/// Inequalities on the per-point segment parameters that make the drawing of
/// a gridded permutation realize it. One variable per position.
std::vector<LinearConstraint> drawing_constraints(const GriddedPermutation& g, const ZeroPmOneMatrix& m);

/// Plane coordinates of each point: cell (k, l) with parameter t sits at
/// (k - 1 + t, l - 1 + t) on an increasing cell and (k - 1 + t, l - t) on a decreasing one.
std::vector<std::pair<Rational, Rational>> drawing_points(const GeometricDrawing& d, const ZeroPmOneMatrix& m);

std::optional<GeometricDrawing> geom_member(const Permutation& pi, const ZeroPmOneMatrix& m,
                                            std::size_t max_n = kDefaultGeomCap);

enum class GridKind { monotone, geometric };

PermSet enumerate_grid(const ZeroPmOneMatrix& m, std::size_t n, GridKind kind,
                       std::size_t max_n = kDefaultGridEnumCap);

/// Status of the two canonical chains 21+21+...+21 and 12-12-...-12 (j
/// summands) in a class, for j = 1..depth.
struct GriddabilityReport {
    std::vector<bool> sum_chain;   // index j-1: j-fold direct sum of 21 lies in the class
    std::vector<bool> skew_chain;  // index j-1: j-fold skew sum of 12 lies in the class
    std::string note;
};

GriddabilityReport griddability_evidence(const PermClass& c, std::size_t depth, std::size_t max_n = 9);

}  // namespace permwqo
