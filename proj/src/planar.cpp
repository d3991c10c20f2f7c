#include "lorenz/planar.hpp"

#include <stdexcept>
#include <string>

namespace lorenz {

int PlanarDiagram::writhe() const noexcept {
    int w = 0;
    for (const auto& c : crossings) w += c.sign;
    return w;
}

std::vector<int> PlanarDiagram::ccw_slots(const Crossing& c) {
    if (c.sign > 0) return {c.under_in, c.over_in, c.under_out, c.over_out};
    return {c.under_in, c.over_out, c.under_out, c.over_in};
}

int PlanarDiagram::components() const {
    // successor of an arc along the orientation: the out-arc at the crossing
    // where it ends
    std::vector<int> next(arc_count, -1);
    for (const auto& c : crossings) {
        next[c.over_in] = c.over_out;
        next[c.under_in] = c.under_out;
    }
    std::vector<bool> seen(arc_count, false);
    int count = 0;
    for (int a = 0; a < arc_count; ++a) {
        if (seen[a]) continue;
        ++count;
        for (int x = a; x >= 0 && !seen[x]; x = next[x])
            seen[x] = true;
    }
    return count;
}

void PlanarDiagram::validate() const {
    std::vector<int> ins(arc_count, 0);
    std::vector<int> outs(arc_count, 0);
    auto check = [&](int a) {
        if (a < 0 || a >= arc_count)
            throw std::logic_error("planar diagram references arc " + std::to_string(a) +
                                   " outside 0.." + std::to_string(arc_count - 1));
    };
    for (const auto& c : crossings) {
        if (c.sign != 1 && c.sign != -1) throw std::logic_error("crossing sign must be +1 or -1");
        for (int a : {c.over_in, c.over_out, c.under_in, c.under_out}) check(a);
        ++ins[c.over_in];
        ++ins[c.under_in];
        ++outs[c.over_out];
        ++outs[c.under_out];
    }
    for (int a = 0; a < arc_count; ++a) {
        const int i = ins[a];
        const int o = outs[a];
        if (!((i == 1 && o == 1) || (i == 0 && o == 0)))
            throw std::logic_error("arc " + std::to_string(a) + " is not 4-valent consistent (in=" +
                                   std::to_string(i) + ", out=" + std::to_string(o) + ")");
    }
}

int PlanarBuilder::new_arc() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
}

int PlanarBuilder::find(int a) {
    while (parent_[a] != a) {
        parent_[a] = parent_[parent_[a]];
        a = parent_[a];
    }
    return a;
}

void PlanarBuilder::glue(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[b] = a;
}

PlanarDiagram PlanarBuilder::finish() {
    std::vector<int> dense(parent_.size(), -1);
    PlanarDiagram d;
    for (std::size_t a = 0; a < parent_.size(); ++a) {
        const int r = find(static_cast<int>(a));
        if (dense[r] < 0) dense[r] = d.arc_count++;
    }
    auto map = [&](int a) { return dense[find(a)]; };
    d.crossings.reserve(crossings_.size());
    for (const auto& c : crossings_)
        d.crossings.push_back({map(c.over_in), map(c.over_out), map(c.under_in), map(c.under_out), c.sign});
    d.validate();
    return d;
}

}  // namespace lorenz
