#pragma once

#include <string>
#include <vector>

#include "lorenz/lorenz_core.hpp"
#include "lorenz/planar.hpp"

namespace lorenz {

/// Artin generator sigma_index or its inverse.
struct BraidLetter {
    int index;  // 1..strands-1
    int sign;   // +1 or -1

    /// +index for sigma_index, -index for its inverse.
    int signed_value() const noexcept { return sign * index; }
    static BraidLetter from_signed(int value);

    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
public:
    explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});
    static BraidWord from_signed(int strands, const std::vector<int>& values);

    int strands() const noexcept { return strands_; }
    const std::vector<BraidLetter>& letters() const noexcept { return letters_; }
    int length() const noexcept { return static_cast<int>(letters_.size()); }
    bool empty() const noexcept { return letters_.empty(); }
    bool is_positive() const noexcept { return positive_; }

    std::vector<int> signed_values() const;
    /// Text form "s1 s2 s1'"; the empty word renders as "".
    std::string to_text() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<BraidLetter> letters_;
    bool positive_;
};

/// (s1...s_{p1-1})^q1 ... (s1...s_{ps-1})^qs on p_s strands.
BraidWord tlink_word(const TLinkParams& t);

/// Positive permutation braid of the shuffle: for i = k down to 1 the factor
/// s_i s_{i+1} ... s_{sigma(i)-1}.
BraidWord lorenz_word(const Shuffle& sigma);

/// Final position (1-based) of the strand starting at each position.
std::vector<int> braid_permutation(const BraidWord& w);

int closure_components(const BraidWord& w);
int exponent_sum(const BraidWord& w);

/// Diagram of the braid closure: one crossing per letter, sign = letter sign.
PlanarDiagram closure_planar(const BraidWord& w);

/// Euler characteristic strands - length of the canonical Seifert surface of a
/// positive braid closure. Throws InvalidInput on words with inverse letters.
int positive_braid_euler(const BraidWord& w);

/// Genus (2 - components - euler) / 2. Throws std::domain_error when that
/// value is odd or negative.
int genus_from_euler(int euler, int components);

/// Whether each pair of strands crosses at most once.
bool crosses_at_most_once(const BraidWord& w);

}  // namespace lorenz
