#include "lorenz/notation.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

namespace lorenz {

namespace {

constexpr std::size_t kMaxEntries = 1'000'000;

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

class Cursor {
public:
    explicit Cursor(std::string s) : s_(std::move(s)) {}

    bool done() const { return pos_ == s_.size(); }
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    int integer() {
        int value = 0;
        const char* first = s_.data() + pos_;
        const char* last = s_.data() + s_.size();
        if (first == last || !std::isdigit(static_cast<unsigned char>(*first))) fail("expected a decimal integer");
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range) fail("integer out of range");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidInput("parse error at position " + std::to_string(pos_) + " in '" + s_ + "': " + what);
    }

private:
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

LorenzVector parse_vector_spec(std::string_view text) {
    Cursor cur(strip_spaces(text));
    if (cur.done()) throw InvalidInput("empty vector spec");
    std::vector<int> entries;
    do {
        const int value = cur.integer();
        int repeat = 1;
        if (cur.accept('^')) {
            repeat = cur.integer();
            if (repeat < 1) cur.fail("multiplicity must be >= 1");
        }
        if (entries.size() + static_cast<std::size_t>(repeat) > kMaxEntries) cur.fail("vector too long");
        entries.insert(entries.end(), static_cast<std::size_t>(repeat), value);
    } while (cur.accept(','));
    if (!cur.done()) cur.fail("unexpected trailing characters");
    return LorenzVector(std::move(entries));
}

TLinkParams parse_tlink_spec(std::string_view text) {
    Cursor cur(strip_spaces(text));
    if (cur.done()) throw InvalidInput("empty T-link spec");
    std::vector<TLinkPair> pairs;
    do {
        cur.expect('(');
        const int p = cur.integer();
        cur.expect(',');
        const int q = cur.integer();
        cur.expect(')');
        pairs.push_back({p, q});
    } while (cur.accept(','));
    if (!cur.done()) cur.fail("unexpected trailing characters");
    return TLinkParams(std::move(pairs));
}

}  // namespace lorenz
