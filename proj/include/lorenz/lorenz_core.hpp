#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lorenz {

/// Raised when a value violates the invariants of a domain type.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Nondecreasing sequence of positive integers <v_1, ..., v_k>.
class LorenzVector {
public:
    explicit LorenzVector(std::vector<int> entries);

    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_.at(i); }
    int back() const { return entries_.back(); }
    int sum() const noexcept;

    std::string to_string() const;

    friend bool operator==(const LorenzVector&, const LorenzVector&) = default;
    friend auto operator<=>(const LorenzVector&, const LorenzVector&) = default;

private:
    std::vector<int> entries_;
};

struct TLinkPair {
    int p;
    int q;
    friend bool operator==(const TLinkPair&, const TLinkPair&) = default;
};

/// Parameters ((p_1,q_1),...,(p_s,q_s)) of a twisted link, p strictly increasing.
class TLinkParams {
public:
    explicit TLinkParams(std::vector<TLinkPair> pairs);

    const std::vector<TLinkPair>& pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    int max_p() const { return pairs_.back().p; }
    /// Sum of all q_j.
    int total_q() const noexcept;
    /// Sum of all q_j * p_j.
    int weighted_sum() const noexcept;

    std::string to_string() const;

    friend bool operator==(const TLinkParams&, const TLinkParams&) = default;

private:
    std::vector<TLinkPair> pairs_;
};

/// Fixpoint-free permutation of {1..n}, increasing on {1..k} and on {k+1..n}.
/// Images are 1-based.
class Shuffle {
public:
    Shuffle(int k, std::vector<int> images);

    int n() const noexcept { return static_cast<int>(images_.size()); }
    int k() const noexcept { return k_; }
    /// sigma(i) for 1 <= i <= n.
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& images() const noexcept { return images_; }

    /// Number of cycles of the permutation.
    int cycle_count() const;

    friend bool operator==(const Shuffle&, const Shuffle&) = default;

private:
    int k_;
    std::vector<int> images_;
};

/// Number of cycles of a 1-based permutation given by its images.
int count_cycles(const std::vector<int>& images);

TLinkParams compress(const LorenzVector& v);
LorenzVector decompress(const TLinkParams& t);

Shuffle shuffle_from_vector(const LorenzVector& v);
LorenzVector vector_from_shuffle(const Shuffle& sigma);

/// Strand count k + p_s of the Lorenz braid that shares a link type with T(t).
int lorenz_strand_count(const TLinkParams& t);

}  // namespace lorenz
