#include "lorenz/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <thread>

namespace lorenz {

LaurentMatrix burau_reduced(const BraidWord& w) {
    const int n = w.strands();
    if (n < 2) throw InvalidInput("reduced Burau representation needs at least 2 strands");
    const int m = n - 1;
    LaurentMatrix mat(m, std::vector<LaurentPoly>(m));
    for (int i = 0; i < m; ++i) mat[i][i] = LaurentPoly(1);

    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    const LaurentPoly minus_t = LaurentPoly::monomial(-1, 1);
    const LaurentPoly t_inv = LaurentPoly::monomial(1, -1);
    const LaurentPoly minus_t_inv = LaurentPoly::monomial(-1, -1);

    // Right multiplication by a generator only touches columns r-1, r, r+1.
    for (const auto& letter : w.letters()) {
        const int r = letter.index - 1;
        for (int row = 0; row < m; ++row) {
            const LaurentPoly col_r = mat[row][r];
            if (col_r.is_zero()) continue;
            if (letter.sign > 0) {
                if (r >= 1) mat[row][r - 1] += t * col_r;
                if (r + 1 < m) mat[row][r + 1] += col_r;
                mat[row][r] = minus_t * col_r;
            } else {
                if (r >= 1) mat[row][r - 1] += col_r;
                if (r + 1 < m) mat[row][r + 1] += t_inv * col_r;
                mat[row][r] = minus_t_inv * col_r;
            }
        }
    }
    return mat;
}

LaurentPoly determinant(LaurentMatrix m) {
    const std::size_t size = m.size();
    if (size == 0) return LaurentPoly(1);
    bool negate = false;
    LaurentPoly prev(1);
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < size && m[r][k].is_zero()) ++r;
            if (r == size) return {};
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j)
                m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = LaurentPoly();
        }
        prev = m[k][k];
    }
    return negate ? -m[size - 1][size - 1] : m[size - 1][size - 1];
}

LaurentPoly burau_determinant(const BraidWord& w) {
    if (w.strands() == 1) return LaurentPoly(1);
    LaurentMatrix mat = burau_reduced(w);
    for (std::size_t i = 0; i < mat.size(); ++i) {
        for (auto& entry : mat[i]) entry = -entry;
        mat[i][i] += LaurentPoly(1);
    }
    return determinant(std::move(mat));
}

LaurentPoly alexander(const BraidWord& w) {
    const LaurentPoly one_minus_t = LaurentPoly::from_terms({{0, 1}, {1, -1}});
    const LaurentPoly one_minus_tn = LaurentPoly::from_terms({{0, 1}, {w.strands(), -1}});
    const auto [quotient, remainder] = divmod_unit_lead(burau_determinant(w) * one_minus_t, one_minus_tn);
    if (!remainder.is_zero())
        throw std::logic_error("Burau determinant not divisible by (1 - t^n)/(1 - t): remainder " +
                               remainder.to_string());
    return quotient.canonical_unit_form();
}

std::string KauffmanOutcome::status_text() const {
    switch (status) {
        case Status::computed: return "computed";
        case Status::skipped_crossing_limit: return "skipped: crossing limit";
        case Status::disabled: return "skipped: disabled";
    }
    return "unknown";
}

bool operator==(const KauffmanOutcome& a, const KauffmanOutcome& b) {
    return a.status == b.status && a.value == b.value && a.crossings == b.crossings;
}

namespace {

// For each crossing, the two arc pairs joined by its A- and B-smoothing.
// The labelling is taken relative to the crossing-sign rule, so that a
// positive curl evaluates to -A^3 and a negative one to -A^-3.
struct Smoothing {
    int a_pairs[2][2];
    int b_pairs[2][2];
};

std::vector<Smoothing> smoothings(const PlanarDiagram& d) {
    std::vector<Smoothing> out;
    out.reserve(d.crossings.size());
    for (const auto& c : d.crossings) {
        const auto s = PlanarDiagram::ccw_slots(c);
        out.push_back({{{s[0], s[3]}, {s[1], s[2]}}, {{s[0], s[1]}, {s[2], s[3]}}});
    }
    return out;
}

using Histogram = std::vector<std::vector<std::uint64_t>>;  // [b-smoothings][loops]

void accumulate_states(const std::vector<Smoothing>& sm, int arc_count, std::uint64_t begin, std::uint64_t end,
                       Histogram& hist) {
    std::vector<int> parent(arc_count);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        for (int i = 0; i < arc_count; ++i) parent[i] = i;
        int loops = arc_count;
        for (std::size_t i = 0; i < sm.size(); ++i) {
            const auto& pairs = ((mask >> i) & 1u) ? sm[i].b_pairs : sm[i].a_pairs;
            for (const auto& pr : pairs) {
                const int x = find(pr[0]), y = find(pr[1]);
                if (x != y) {
                    parent[y] = x;
                    --loops;
                }
            }
        }
        ++hist[std::popcount(mask)][loops];
    }
}

}  // namespace

KauffmanOutcome kauffman_bracket(const PlanarDiagram& d, int max_crossings, unsigned workers) {
    const int c = d.crossing_count();
    KauffmanOutcome out;
    out.crossings = c;
    if (c > max_crossings || c > 62) {
        out.status = KauffmanOutcome::Status::skipped_crossing_limit;
        return out;
    }
    const auto sm = smoothings(d);
    const int arcs = d.arc_count;
    const std::uint64_t states = std::uint64_t{1} << c;

    // Split the state space across threads for large diagrams; the partial
    // histograms are summed afterwards.
    if (workers == 0) workers = c >= 16 ? std::clamp(std::thread::hardware_concurrency(), 1u, 16u) : 1u;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, states));
    std::vector<Histogram> partial(workers, Histogram(c + 1, std::vector<std::uint64_t>(arcs + 1, 0)));
    if (workers == 1) {
        accumulate_states(sm, arcs, 0, states, partial[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (states + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = std::min(states, w * chunk);
            const std::uint64_t hi = std::min(states, lo + chunk);
            pool.emplace_back(accumulate_states, std::cref(sm), arcs, lo, hi, std::ref(partial[w]));
        }
        for (auto& th : pool) th.join();
    }

    const LaurentPoly delta = LaurentPoly::from_terms({{2, -1}, {-2, -1}});
    std::vector<LaurentPoly> delta_pow(arcs + 1, LaurentPoly(1));
    for (int i = 1; i <= arcs; ++i) delta_pow[i] = delta_pow[i - 1] * delta;

    LaurentPoly sum;
    for (int b = 0; b <= c; ++b) {
        LaurentPoly row;
        for (int loops = 1; loops <= arcs; ++loops) {
            std::uint64_t n = 0;
            for (const auto& h : partial) n += h[b][loops];
            if (n) row += delta_pow[loops - 1] * LaurentPoly(static_cast<LaurentPoly::Coeff>(n));
        }
        sum += row.shifted(c - 2 * b);
    }
    // A diagram with no arcs at all is the empty link; treat it as one loop.
    if (arcs == 0) sum = LaurentPoly(1);
    out.status = KauffmanOutcome::Status::computed;
    out.value = std::move(sum);
    return out;
}

KauffmanOutcome normalized_f(const PlanarDiagram& d, int writhe, int max_crossings) {
    KauffmanOutcome out = kauffman_bracket(d, max_crossings);
    if (!out.computed()) return out;
    // (-A^3)^(-w) = (-1)^w A^(-3w)
    out.value = out.value.shifted(-3 * writhe);
    if (writhe % 2 != 0) out.value = -out.value;
    return out;
}

std::optional<LaurentPoly> jones_from_f(const LaurentPoly& f) {
    std::map<int, LaurentPoly::Coeff> m;
    for (const auto& [e, c] : f.terms()) {
        if (e % 4 != 0) return std::nullopt;
        m[-e / 4] = c;
    }
    return LaurentPoly::from_map(m);
}

std::string source_tag(Source s) {
    switch (s) {
        case Source::lorenz_braid: return "lorenz-braid";
        case Source::t_braid: return "t-braid";
        case Source::grid: return "grid";
    }
    return "unknown";
}

Source source_from_tag(const std::string& tag) {
    if (tag == "lorenz-braid") return Source::lorenz_braid;
    if (tag == "t-braid") return Source::t_braid;
    if (tag == "grid") return Source::grid;
    throw InvalidInput("unknown representation tag '" + tag + "'");
}

bool operator==(const InvariantReport& a, const InvariantReport& b) {
    return a.source == b.source && a.components == b.components && a.crossings == b.crossings &&
           a.writhe == b.writhe && a.euler_characteristic == b.euler_characteristic && a.genus == b.genus &&
           a.alexander == b.alexander && a.kauffman_f == b.kauffman_f;
}

namespace {

KauffmanOutcome f_or_disabled(const PlanarDiagram& d, const ReportOptions& opts) {
    if (opts.skip_jones) {
        KauffmanOutcome off;
        off.status = KauffmanOutcome::Status::disabled;
        off.crossings = d.crossing_count();
        return off;
    }
    return normalized_f(d, d.writhe(), opts.max_bracket_crossings);
}

}  // namespace

InvariantReport full_report(const BraidWord& w, Source source, const ReportOptions& opts) {
    InvariantReport r;
    r.source = source;
    r.components = closure_components(w);
    r.crossings = w.length();
    r.writhe = exponent_sum(w);
    if (w.is_positive()) {
        r.euler_characteristic = positive_braid_euler(w);
        const int twice_genus = 2 - r.components - *r.euler_characteristic;
        // split closures (an unused generator) have a disconnected surface
        if (twice_genus >= 0 && twice_genus % 2 == 0) r.genus = genus_from_euler(*r.euler_characteristic, r.components);
    }
    if (!opts.skip_alexander) r.alexander = alexander(w);
    r.kauffman_f = f_or_disabled(closure_planar(w), opts);
    return r;
}

InvariantReport full_report(const GridDiagram& g, const ReportOptions& opts) {
    const PlanarDiagram d = grid_to_planar(g);
    InvariantReport r;
    r.source = Source::grid;
    r.components = grid_components(g);
    r.crossings = d.crossing_count();
    r.writhe = d.writhe();
    r.kauffman_f = f_or_disabled(d, opts);
    return r;
}

}  // namespace lorenz
