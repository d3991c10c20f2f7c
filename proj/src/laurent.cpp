#include "lorenz/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lorenz {

namespace {

using Coeff = LaurentPoly::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
}

Coeff checked_neg(Coeff a) { return checked_mul(a, -1); }

}  // namespace

LaurentPoly::LaurentPoly(int min_deg, std::vector<Coeff> coeffs)
    : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
    normalize();
}

LaurentPoly::LaurentPoly(Coeff c) {
    if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent) { return LaurentPoly(exponent, {c}); }

LaurentPoly LaurentPoly::from_terms(std::initializer_list<std::pair<int, Coeff>> terms) {
    std::map<int, Coeff> m;
    for (const auto& [e, c] : terms) m[e] = checked_add(m[e], c);
    return from_map(m);
}

LaurentPoly LaurentPoly::from_map(const std::map<int, Coeff>& terms) {
    if (terms.empty()) return {};
    const int lo = terms.begin()->first;
    const int hi = terms.rbegin()->first;
    std::vector<Coeff> c(static_cast<std::size_t>(hi - lo + 1), 0);
    for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] = v;
    return LaurentPoly(lo, std::move(c));
}

void LaurentPoly::normalize() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        min_deg_ = 0;
        return;
    }
    min_deg_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    while (coeffs_.back() == 0) coeffs_.pop_back();
}

Coeff LaurentPoly::coeff(int exponent) const noexcept {
    if (exponent < min_deg_ || exponent > max_deg()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - min_deg_)];
}

std::map<int, Coeff> LaurentPoly::terms() const {
    std::map<int, Coeff> m;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) m[min_deg_ + static_cast<int>(i)] = coeffs_[i];
    return m;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = checked_neg(c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(min_deg_, o.min_deg_);
    const int hi = std::max(max_deg(), o.max_deg());
    std::vector<Coeff> c(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + static_cast<std::size_t>(min_deg_ - lo)] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        auto& slot = c[i + static_cast<std::size_t>(o.min_deg_ - lo)];
        slot = checked_add(slot, o.coeffs_[i]);
    }
    min_deg_ = lo;
    coeffs_ = std::move(c);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    if (is_zero() || o.is_zero()) return *this = LaurentPoly();
    std::vector<Coeff> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
    }
    min_deg_ += o.min_deg_;
    coeffs_ = std::move(c);
    normalize();
    return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    if (is_zero()) return {};
    LaurentPoly r = *this;
    r.min_deg_ += k;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::substitute_power(int factor) const {
    if (factor == 0) {
        Coeff s = 0;
        for (Coeff c : coeffs_) s = checked_add(s, c);
        return LaurentPoly(s);
    }
    std::map<int, Coeff> m;
    for (const auto& [e, c] : terms()) m[e * factor] = c;
    return from_map(m);
}

Coeff LaurentPoly::evaluate(Coeff t) const {
    if (is_zero()) return 0;
    if (t == 0) {
        if (min_deg_ < 0) throw std::domain_error("cannot evaluate a negative power at 0");
        return coeff(0);
    }
    if (min_deg_ < 0 && t != 1 && t != -1)
        throw std::domain_error("integer evaluation of negative powers needs t = +-1");
    // Horner over the stored range, then multiply by t^min_deg.
    Coeff acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, t), *it);
    const int shift = min_deg_ < 0 ? -min_deg_ : min_deg_;
    Coeff factor = 1;
    for (int i = 0; i < shift; ++i) factor = checked_mul(factor, t);
    // for t = +-1, t^-m == t^m
    return checked_mul(acc, factor);
}

LaurentPoly LaurentPoly::canonical_unit_form() const {
    if (is_zero()) return {};
    LaurentPoly r = coeffs_.front() < 0 ? -*this : *this;
    r.min_deg_ = 0;
    return r;
}

std::string LaurentPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        Coeff c = coeffs_[i];
        if (c == 0) continue;
        const int e = min_deg_ + static_cast<int>(i);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        const Coeff mag = c < 0 ? -c : c;
        if (e == 0) {
            out << mag;
            continue;
        }
        if (mag != 1) out << mag << '*';
        out << var;
        if (e != 1) out << '^' << e;
    }
    return out.str();
}

DivisionResult divmod_unit_lead(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    const Coeff lead = b.coeffs().back();
    if (lead != 1 && lead != -1) throw std::domain_error("divisor leading coefficient must be +-1");
    if (a.is_zero()) return {};

    const auto& bc = b.coeffs();
    std::vector<Coeff> rem = a.coeffs();  // A(t), degree-0 based
    const std::size_t db = bc.size() - 1;
    if (rem.size() <= db) return {LaurentPoly(), a};
    std::vector<Coeff> quot(rem.size() - db, 0);
    for (std::size_t top = rem.size() - 1;; --top) {
        const Coeff c = rem[top];
        if (c != 0) {
            const Coeff qc = checked_mul(c, lead);  // c / lead for lead = +-1
            quot[top - db] = qc;
            for (std::size_t j = 0; j <= db; ++j)
                rem[top - db + j] = checked_add(rem[top - db + j], checked_neg(checked_mul(qc, bc[j])));
        }
        if (top == db) break;
    }
    return {LaurentPoly(a.min_deg() - b.min_deg(), std::move(quot)), LaurentPoly(a.min_deg(), std::move(rem))};
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.is_zero()) return {};
    const auto& bc = b.coeffs();
    const Coeff lead = bc.back();
    std::vector<Coeff> rem = a.coeffs();
    const std::size_t db = bc.size() - 1;
    if (rem.size() <= db) throw std::domain_error("inexact Laurent division");
    std::vector<Coeff> quot(rem.size() - db, 0);
    for (std::size_t top = rem.size() - 1;; --top) {
        const Coeff c = rem[top];
        if (c != 0) {
            if (c % lead != 0) throw std::domain_error("inexact Laurent division");
            const Coeff qc = c / lead;
            quot[top - db] = qc;
            for (std::size_t j = 0; j <= db; ++j)
                rem[top - db + j] = checked_add(rem[top - db + j], checked_neg(checked_mul(qc, bc[j])));
        }
        if (top == db) break;
    }
    for (Coeff c : rem)
        if (c != 0) throw std::domain_error("inexact Laurent division");
    return LaurentPoly(a.min_deg() - b.min_deg(), std::move(quot));
}

bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q) {
    return p.canonical_unit_form() == q.canonical_unit_form();
}

}  // namespace lorenz
