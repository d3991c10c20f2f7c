#include "lorenz/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lorenz {

BraidLetter BraidLetter::from_signed(int value) {
    if (value == 0) throw InvalidInput("braid letter 0 is not a generator");
    return {std::abs(value), value > 0 ? 1 : -1};
}

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)), positive_(true) {
    if (strands_ < 1) throw InvalidInput("braid needs at least one strand");
    for (const auto& l : letters_) {
        if (l.index < 1 || l.index >= strands_)
            throw InvalidInput("generator s" + std::to_string(l.index) + " out of range for " +
                               std::to_string(strands_) + " strands");
        if (l.sign != 1 && l.sign != -1) throw InvalidInput("braid letter sign must be +1 or -1");
        if (l.sign < 0) positive_ = false;
    }
}

BraidWord BraidWord::from_signed(int strands, const std::vector<int>& values) {
    std::vector<BraidLetter> letters;
    letters.reserve(values.size());
    for (int v : values) letters.push_back(BraidLetter::from_signed(v));
    return BraidWord(strands, std::move(letters));
}

std::vector<int> BraidWord::signed_values() const {
    std::vector<int> out;
    out.reserve(letters_.size());
    for (const auto& l : letters_) out.push_back(l.signed_value());
    return out;
}

std::string BraidWord::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out << ' ';
        out << 's' << letters_[i].index;
        if (letters_[i].sign < 0) out << '\'';
    }
    return out.str();
}

BraidWord tlink_word(const TLinkParams& t) {
    std::vector<BraidLetter> letters;
    for (const auto& [p, q] : t.pairs())
        for (int rep = 0; rep < q; ++rep)
            for (int i = 1; i < p; ++i) letters.push_back({i, 1});
    return BraidWord(t.max_p(), std::move(letters));
}

BraidWord lorenz_word(const Shuffle& sigma) {
    std::vector<BraidLetter> letters;
    for (int i = sigma.k(); i >= 1; --i)
        for (int j = i; j < sigma(i); ++j) letters.push_back({j, 1});
    return BraidWord(sigma.n(), std::move(letters));
}

std::vector<int> braid_permutation(const BraidWord& w) {
    // strand_at[pos] = starting position of the strand currently at pos
    std::vector<int> strand_at(w.strands() + 1);
    std::iota(strand_at.begin(), strand_at.end(), 0);
    for (const auto& l : w.letters()) std::swap(strand_at[l.index], strand_at[l.index + 1]);
    std::vector<int> image(w.strands());
    for (int pos = 1; pos <= w.strands(); ++pos) image[strand_at[pos] - 1] = pos;
    return image;
}

int closure_components(const BraidWord& w) { return count_cycles(braid_permutation(w)); }

int exponent_sum(const BraidWord& w) {
    int s = 0;
    for (const auto& l : w.letters()) s += l.sign;
    return s;
}

PlanarDiagram closure_planar(const BraidWord& w) {
    // Strands run top to bottom. For s_i the strand entering at position i
    // crosses over; for the inverse the one at i+1 does. Both choices give
    // the crossing the letter's sign under the rotation rule.
    PlanarBuilder b;
    std::vector<int> top(w.strands() + 1), current(w.strands() + 1);
    for (int pos = 1; pos <= w.strands(); ++pos) top[pos] = current[pos] = b.new_arc();
    for (const auto& l : w.letters()) {
        const int left_in = current[l.index];
        const int right_in = current[l.index + 1];
        const int left_out = b.new_arc();   // leaves at position i+1
        const int right_out = b.new_arc();  // leaves at position i
        if (l.sign > 0)
            b.add_crossing({left_in, left_out, right_in, right_out, +1});
        else
            b.add_crossing({right_in, right_out, left_in, left_out, -1});
        current[l.index] = right_out;
        current[l.index + 1] = left_out;
    }
    for (int pos = 1; pos <= w.strands(); ++pos) b.glue(top[pos], current[pos]);
    return b.finish();
}

int positive_braid_euler(const BraidWord& w) {
    if (!w.is_positive()) throw InvalidInput("positive_braid_euler requires a positive braid word");
    return w.strands() - w.length();
}

int genus_from_euler(int euler, int components) {
    const int twice = 2 - components - euler;
    if (twice < 0 || twice % 2 != 0)
        throw std::domain_error("inconsistent surface data: euler " + std::to_string(euler) +
                                " with " + std::to_string(components) + " components");
    return twice / 2;
}

bool crosses_at_most_once(const BraidWord& w) {
    std::vector<int> strand_at(w.strands() + 1);
    std::iota(strand_at.begin(), strand_at.end(), 0);
    std::set<std::pair<int, int>> crossed;
    for (const auto& l : w.letters()) {
        int a = strand_at[l.index], b = strand_at[l.index + 1];
        if (!crossed.insert(std::minmax(a, b)).second) return false;
        std::swap(strand_at[l.index], strand_at[l.index + 1]);
    }
    return true;
}

}  // namespace lorenz
