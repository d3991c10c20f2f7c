#include "lorenz/lorenz_core.hpp"

#include <numeric>
#include <sstream>

namespace lorenz {

namespace {

std::string join_ints(const std::vector<int>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ',';
        out << xs[i];
    }
    return out.str();
}

}  // namespace

LorenzVector::LorenzVector(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidInput("Lorenz vector must have at least one entry");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 1)
            throw InvalidInput("Lorenz vector entry " + std::to_string(i + 1) + " is " +
                               std::to_string(entries_[i]) + ", entries must be >= 1");
        if (i > 0 && entries_[i - 1] > entries_[i])
            throw InvalidInput("Lorenz vector is not nondecreasing at position " +
                               std::to_string(i + 1) + ": " + join_ints(entries_));
    }
}

int LorenzVector::sum() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::string LorenzVector::to_string() const { return "<" + join_ints(entries_) + ">"; }

TLinkParams::TLinkParams(std::vector<TLinkPair> pairs) : pairs_(std::move(pairs)) {
    if (pairs_.empty()) throw InvalidInput("T-link parameters must have at least one pair");
    for (std::size_t j = 0; j < pairs_.size(); ++j) {
        if (pairs_[j].p < 1) throw InvalidInput("T-link p values must be >= 1");
        if (pairs_[j].q < 1) throw InvalidInput("T-link q values must be >= 1");
        if (j > 0 && pairs_[j - 1].p >= pairs_[j].p)
            throw InvalidInput("T-link p values must be strictly increasing: " + to_string());
    }
}

int TLinkParams::total_q() const noexcept {
    int s = 0;
    for (const auto& pq : pairs_) s += pq.q;
    return s;
}

int TLinkParams::weighted_sum() const noexcept {
    int s = 0;
    for (const auto& pq : pairs_) s += pq.p * pq.q;
    return s;
}

std::string TLinkParams::to_string() const {
    std::ostringstream out;
    for (std::size_t j = 0; j < pairs_.size(); ++j) {
        if (j) out << ',';
        out << '(' << pairs_[j].p << ',' << pairs_[j].q << ')';
    }
    return out.str();
}

Shuffle::Shuffle(int k, std::vector<int> images) : k_(k), images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n < 2) throw InvalidInput("shuffle needs n >= 2");
    if (k < 1 || k >= n) throw InvalidInput("shuffle split index must satisfy 1 <= k < n");
    std::vector<bool> seen(n + 1, false);
    for (int i = 1; i <= n; ++i) {
        const int s = images_[i - 1];
        if (s < 1 || s > n || seen[s])
            throw InvalidInput("shuffle images are not a permutation of 1..n");
        seen[s] = true;
        if (s == i) throw InvalidInput("shuffle has a fixed point at " + std::to_string(i));
        if (i != 1 && i != k + 1 && images_[i - 2] > s)
            throw InvalidInput("shuffle is not increasing within its blocks");
    }
}

int Shuffle::cycle_count() const { return count_cycles(images_); }

int count_cycles(const std::vector<int>& images) {
    std::vector<bool> visited(images.size(), false);
    int cycles = 0;
    for (std::size_t start = 0; start < images.size(); ++start) {
        if (visited[start]) continue;
        ++cycles;
        for (std::size_t i = start; !visited[i]; i = static_cast<std::size_t>(images[i] - 1))
            visited[i] = true;
    }
    return cycles;
}

TLinkParams compress(const LorenzVector& v) {
    std::vector<TLinkPair> pairs;
    for (int e : v.entries()) {
        if (!pairs.empty() && pairs.back().p == e)
            ++pairs.back().q;
        else
            pairs.push_back({e, 1});
    }
    return TLinkParams(std::move(pairs));
}

LorenzVector decompress(const TLinkParams& t) {
    std::vector<int> entries;
    for (const auto& [p, q] : t.pairs()) entries.insert(entries.end(), static_cast<std::size_t>(q), p);
    return LorenzVector(std::move(entries));
}

Shuffle shuffle_from_vector(const LorenzVector& v) {
    const int k = static_cast<int>(v.size());
    const int n = k + v.back();
    std::vector<int> images(n);
    std::vector<bool> used(n + 1, false);
    for (int i = 1; i <= k; ++i) {
        const int s = i + v[i - 1];
        images[i - 1] = s;
        used[s] = true;
    }
    int next = 1;
    for (int i = k + 1; i <= n; ++i) {
        while (used[next]) ++next;
        images[i - 1] = next++;
    }
    // The constructor re-checks every shuffle invariant.
    return Shuffle(k, std::move(images));
}

LorenzVector vector_from_shuffle(const Shuffle& sigma) {
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(sigma.k()));
    for (int i = 1; i <= sigma.k(); ++i) entries.push_back(sigma(i) - i);
    return LorenzVector(std::move(entries));
}

int lorenz_strand_count(const TLinkParams& t) { return t.total_q() + t.max_p(); }

}  // namespace lorenz
