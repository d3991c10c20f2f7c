#include "lorenz/grid.hpp"

#include <algorithm>
#include <sstream>

namespace lorenz {

GridDiagram::GridDiagram(const Shuffle& sigma)
    : k_(sigma.k()), x_heights_(sigma.images()), x_columns_(sigma.images().size()) {
    for (int col = 1; col <= n(); ++col) x_columns_[x_heights_[col - 1] - 1] = col;
}

std::vector<int> GridDiagram::up_columns() const {
    std::vector<int> out;
    for (int col = 1; col <= n(); ++col)
        if (column_points_up(col)) out.push_back(col);
    return out;
}

std::vector<int> GridDiagram::down_columns() const {
    std::vector<int> out;
    for (int col = 1; col <= n(); ++col)
        if (!column_points_up(col)) out.push_back(col);
    return out;
}

GridDiagram build_grid(const Shuffle& sigma) { return GridDiagram(sigma); }

namespace {

bool strictly_between(int v, int a, int b) { return std::min(a, b) < v && v < std::max(a, b); }

// Under strand is horizontal (direction +-x), over strand vertical (+-y).
// Rotating +x by +90 degrees gives +y, so the crossing is positive iff the
// two directions have the same sign.
int crossing_sign(const GridDiagram& g, int column, int height) {
    const int vertical = g.column_points_up(column) ? 1 : -1;
    const int horizontal = height > g.x_column(height) ? 1 : -1;  // X at x_column -> O at column `height`
    return vertical * horizontal;
}

}  // namespace

std::vector<GridCrossing> grid_crossings(const GridDiagram& g) {
    std::vector<GridCrossing> out;
    for (int col = 1; col <= g.n(); ++col)
        for (int h = 1; h <= g.n(); ++h)
            if (strictly_between(h, col, g.x_height(col)) && strictly_between(col, g.x_column(h), h))
                out.push_back({col, h, crossing_sign(g, col, h)});
    return out;
}

PlanarDiagram grid_to_planar(const GridDiagram& g) {
    const int n = g.n();
    const auto crossings = grid_crossings(g);
    std::vector<std::vector<int>> on_column(n + 1), on_row(n + 1);  // crossing ids
    for (int id = 0; id < static_cast<int>(crossings.size()); ++id) {
        on_column[crossings[id].column].push_back(id);
        on_row[crossings[id].height].push_back(id);
    }
    std::vector<Crossing> slots(crossings.size());
    for (std::size_t id = 0; id < crossings.size(); ++id) slots[id].sign = crossings[id].sign;

    PlanarBuilder b;
    std::vector<bool> visited(n + 1, false);
    for (int start = 1; start <= n; ++start) {
        if (visited[start]) continue;
        // Walk one component starting at the O-vertex (start, start).
        const int first_arc = b.new_arc();
        int arc = first_arc;
        int col = start;
        do {
            visited[col] = true;
            // vertical edge: (col, col) -> (col, x_height(col)), over strand
            const int top = g.x_height(col);
            auto ids = on_column[col];
            std::sort(ids.begin(), ids.end(), [&](int a, int c) {
                return top > col ? crossings[a].height < crossings[c].height
                                 : crossings[a].height > crossings[c].height;
            });
            for (int id : ids) {
                slots[id].over_in = arc;
                arc = b.new_arc();
                slots[id].over_out = arc;
            }
            // horizontal edge: (col, top) -> (top, top), under strand
            ids = on_row[top];
            std::sort(ids.begin(), ids.end(), [&](int a, int c) {
                return top > col ? crossings[a].column < crossings[c].column
                                 : crossings[a].column > crossings[c].column;
            });
            for (int id : ids) {
                slots[id].under_in = arc;
                arc = b.new_arc();
                slots[id].under_out = arc;
            }
            col = top;
        } while (col != start);
        b.glue(first_arc, arc);
    }
    for (const auto& c : slots) b.add_crossing(c);
    return b.finish();
}

int grid_components(const GridDiagram& g) { return count_cycles(g.x_heights()); }

std::string render_ascii(const GridDiagram& g) {
    const int n = g.n();
    std::string out;
    out.reserve(static_cast<std::size_t>(n * (n + 1)));
    for (int y = n; y >= 1; --y) {
        for (int x = 1; x <= n; ++x) out += g.x_height(x) == y ? 'X' : (x == y ? 'O' : '.');
        out += '\n';
    }
    return out;
}

std::string render_svg(const GridDiagram& g) {
    constexpr int cell = 40;
    constexpr int margin = 30;
    constexpr int gap = 7;
    const int n = g.n();
    const int size = 2 * margin + (n - 1) * cell;
    auto px = [&](int x) { return margin + (x - 1) * cell; };
    auto py = [&](int y) { return margin + (n - y) * cell; };

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
      << "  <defs>\n"
      << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto\">\n"
      << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"black\"/>\n"
      << "    </marker>\n"
      << "  </defs>\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Edges are drawn as two halves so the arrowhead sits at the midpoint.
    auto edge = [&](const char* cls, int x1, int y1, int x2, int y2) {
        const int mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
        s << "  <g class=\"" << cls << "\" stroke=\"black\" stroke-width=\"2\">"
          << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << mx << "\" y2=\"" << my
          << "\" marker-end=\"url(#arrow)\"/>"
          << "<line x1=\"" << mx << "\" y1=\"" << my << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\"/></g>\n";
    };

    for (int h = 1; h <= n; ++h) edge("edge horizontal", px(g.x_column(h)), py(h), px(h), py(h));
    for (const auto& c : grid_crossings(g))
        s << "  <line class=\"gap\" x1=\"" << px(c.column) << "\" y1=\"" << py(c.height) - gap << "\" x2=\""
          << px(c.column) << "\" y2=\"" << py(c.height) + gap << "\" stroke=\"white\" stroke-width=\"" << 2 * gap
          << "\"/>\n";
    for (int col = 1; col <= n; ++col) edge("edge vertical", px(col), py(col), px(col), py(g.x_height(col)));

    for (int col = 1; col <= n; ++col) {
        s << "  <circle class=\"vertex o\" cx=\"" << px(col) << "\" cy=\"" << py(col)
          << "\" r=\"6\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
        const int xx = px(col), xy = py(g.x_height(col));
        s << "  <text class=\"vertex x\" x=\"" << xx << "\" y=\"" << xy + 5
          << "\" font-family=\"sans-serif\" font-size=\"16\" font-weight=\"bold\" text-anchor=\"middle\">X</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace lorenz
