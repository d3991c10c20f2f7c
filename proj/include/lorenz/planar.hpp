#pragma once

#include <vector>

namespace lorenz {

/// One crossing of an oriented link diagram, given by the four arc ids that
/// meet there. The cyclic order of the slots follows from the sign: for a
/// positive crossing the counterclockwise order is
/// (under_in, over_in, under_out, over_out), for a negative one it is
/// (under_in, over_out, under_out, over_in).
struct Crossing {
    int over_in;
    int over_out;
    int under_in;
    int under_out;
    int sign;  // +1 or -1
};

/// Oriented link diagram as a 4-valent graph. Arcs are numbered
/// 0..arc_count-1. An arc either occurs in exactly two crossing slots (once
/// as an "in" slot, once as an "out" slot) or in none, in which case it is a
/// crossingless closed component.
struct PlanarDiagram {
    int arc_count = 0;
    std::vector<Crossing> crossings;

    int writhe() const noexcept;
    int crossing_count() const noexcept { return static_cast<int>(crossings.size()); }
    /// Number of link components, by following arcs through crossings.
    int components() const;
    /// Checks the structural invariants; throws std::logic_error on failure.
    void validate() const;

    /// Slots around a crossing in counterclockwise order starting at under_in.
    static std::vector<int> ccw_slots(const Crossing& c);
};

/// Incremental assembly of a PlanarDiagram from strand walks. Temporary arc
/// ids are merged with glue() and then renumbered densely by finish().
class PlanarBuilder {
public:
    int new_arc();
    /// Declares that arcs a and b are the same arc.
    void glue(int a, int b);
    void add_crossing(const Crossing& c) { crossings_.push_back(c); }
    PlanarDiagram finish();

private:
    int find(int a);
    std::vector<int> parent_;
    std::vector<Crossing> crossings_;
};

}  // namespace lorenz
