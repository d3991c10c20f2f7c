#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lorenz/braid.hpp"
#include "lorenz/grid.hpp"
#include "lorenz/laurent.hpp"
#include "lorenz/planar.hpp"

namespace lorenz {

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/// Reduced Burau matrix of the word, (n-1) x (n-1). s_i maps to the identity
/// except M[i][i] = -t, M[i][i-1] = t (i >= 2) and M[i][i+1] = 1 (i <= n-2),
/// with 1-based indices. Throws InvalidInput for fewer than two strands.
LaurentMatrix burau_reduced(const BraidWord& w);

/// Determinant by fraction-free (Bareiss) elimination with exact division.
LaurentPoly determinant(LaurentMatrix m);

/// det(I - burau_reduced(w)), or 1 for a single strand.
LaurentPoly burau_determinant(const BraidWord& w);

/// Alexander polynomial of the closure in canonical unit form, from
/// D(t) = det(I - B(t)) and Delta * (1 - t^n) = D * (1 - t). The zero
/// polynomial is returned for split closures. A non-exact division throws
/// std::logic_error.
LaurentPoly alexander(const BraidWord& w);

/// Outcome of a Kauffman bracket (or normalized f) computation.
struct KauffmanOutcome {
    enum class Status { computed, skipped_crossing_limit, disabled };

    Status status = Status::disabled;
    LaurentPoly value;
    int crossings = 0;

    bool computed() const noexcept { return status == Status::computed; }
    std::string status_text() const;
};

inline constexpr int kDefaultMaxBracketCrossings = 22;

/// Kauffman bracket <D> in A by the 2^c state sum, with delta = -A^2 - A^-2.
/// Diagrams above max_crossings are reported as skipped, not truncated.
/// `workers` threads share the state space (0 picks a count from the
/// hardware for diagrams of 16 or more crossings).
KauffmanOutcome kauffman_bracket(const PlanarDiagram& d, int max_crossings = kDefaultMaxBracketCrossings,
                                 unsigned workers = 0);

/// (-A^3)^(-writhe) * <D>.
KauffmanOutcome normalized_f(const PlanarDiagram& d, int writhe, int max_crossings = kDefaultMaxBracketCrossings);

/// Jones polynomial in t = A^-4 when every exponent of f is divisible by 4.
std::optional<LaurentPoly> jones_from_f(const LaurentPoly& f);

enum class Source { lorenz_braid, t_braid, grid };
std::string source_tag(Source s);
Source source_from_tag(const std::string& tag);

struct InvariantReport {
    Source source = Source::lorenz_braid;
    int components = 0;
    int crossings = 0;
    int writhe = 0;
    std::optional<int> euler_characteristic;  // positive braid sources only
    std::optional<int> genus;
    std::optional<LaurentPoly> alexander;  // braid sources only
    KauffmanOutcome kauffman_f;

    friend bool operator==(const InvariantReport&, const InvariantReport&);
};

bool operator==(const KauffmanOutcome& a, const KauffmanOutcome& b);

struct ReportOptions {
    int max_bracket_crossings = kDefaultMaxBracketCrossings;
    bool skip_jones = false;
    bool skip_alexander = false;
};

InvariantReport full_report(const BraidWord& w, Source source, const ReportOptions& opts = {});
InvariantReport full_report(const GridDiagram& g, const ReportOptions& opts = {});

}  // namespace lorenz
