#pragma once

#include <string>
#include <vector>

#include "lorenz/lorenz_core.hpp"
#include "lorenz/planar.hpp"

namespace lorenz {

/// Diagonal grid diagram of a shuffle on an n x n grid: O-vertex at (i, i) and
/// X-vertex at (i, sigma(i)) in each column i. Columns and heights are 1-based,
/// x left to right and y bottom to top.
///
/// The link runs O -> X along each vertical edge and X -> O along each
/// horizontal edge, so the vertical edge in column i points up iff
/// sigma(i) > i. Vertical edges pass over horizontal ones.
class GridDiagram {
public:
    explicit GridDiagram(const Shuffle& sigma);

    int n() const noexcept { return static_cast<int>(x_heights_.size()); }
    int k() const noexcept { return k_; }
    /// Height of the X-vertex in column i.
    int x_height(int column) const { return x_heights_.at(column - 1); }
    /// Height of the O-vertex in column i (always i).
    int o_height(int column) const { return column; }
    /// Column of the X-vertex in row h.
    int x_column(int height) const { return x_columns_.at(height - 1); }
    const std::vector<int>& x_heights() const noexcept { return x_heights_; }

    bool column_points_up(int column) const { return x_height(column) > column; }
    /// Columns 1..k (edges pointing up).
    std::vector<int> up_columns() const;
    /// Columns k+1..n (edges pointing down).
    std::vector<int> down_columns() const;

private:
    int k_;
    std::vector<int> x_heights_;
    std::vector<int> x_columns_;
};

/// Interior intersection of the vertical edge in `column` with the
/// horizontal edge at `height`.
struct GridCrossing {
    int column;
    int height;
    int sign;
    friend bool operator==(const GridCrossing&, const GridCrossing&) = default;
};

GridDiagram build_grid(const Shuffle& sigma);

/// All crossings, sorted by (column, height).
std::vector<GridCrossing> grid_crossings(const GridDiagram& g);

PlanarDiagram grid_to_planar(const GridDiagram& g);

/// Number of link components (cycles of sigma).
int grid_components(const GridDiagram& g);

/// n lines of n characters from {X, O, .}, top row (y = n) first, each line
/// terminated by '\n'.
std::string render_ascii(const GridDiagram& g);

/// Standalone SVG 1.1 drawing with oriented edges and gaps in the horizontal
/// edges where vertical edges pass over them.
std::string render_svg(const GridDiagram& g);

}  // namespace lorenz
