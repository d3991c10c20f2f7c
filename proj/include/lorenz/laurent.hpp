#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lorenz {

/// Laurent polynomial with int64 coefficients in one formal variable.
///
/// Stored densely as the coefficient of t^min_deg followed by higher powers.
/// The representation is canonical: the first and last stored coefficients
/// are nonzero, and the zero polynomial has no coefficients (min_deg 0).
/// Every arithmetic operation is exact; coefficient overflow throws
/// std::overflow_error rather than wrapping.
class LaurentPoly {
public:
    using Coeff = std::int64_t;

    LaurentPoly() = default;
    LaurentPoly(int min_deg, std::vector<Coeff> coeffs);
    /// Constant polynomial.
    LaurentPoly(Coeff c);  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(Coeff c, int exponent);
    /// Builds from (exponent, coefficient) terms; repeated exponents add up.
    static LaurentPoly from_terms(std::initializer_list<std::pair<int, Coeff>> terms);
    static LaurentPoly from_map(const std::map<int, Coeff>& terms);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int min_deg() const noexcept { return min_deg_; }
    /// Highest exponent; equals min_deg() - 1 for the zero polynomial.
    int max_deg() const noexcept { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
    Coeff coeff(int exponent) const noexcept;
    std::map<int, Coeff> terms() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

    /// Multiplication by t^k.
    LaurentPoly shifted(int k) const;
    LaurentPoly pow(unsigned e) const;
    /// Substitutes t -> t^factor (factor may be negative).
    LaurentPoly substitute_power(int factor) const;
    /// Evaluation at an integer point (t = 0 only if min_deg >= 0).
    Coeff evaluate(Coeff t) const;

    /// Shift so the lowest exponent is 0 and its coefficient is positive.
    LaurentPoly canonical_unit_form() const;

    std::string to_string(char var = 't') const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void normalize();

    int min_deg_ = 0;
    std::vector<Coeff> coeffs_;
};

struct DivisionResult {
    LaurentPoly quotient;
    LaurentPoly remainder;
};

/// Division with remainder by a divisor whose leading coefficient is +1 or -1.
/// Writing a = t^ma A and b = t^mb B with A(0), B(0) nonzero, the ordinary
/// division A = Q B + R gives quotient t^(ma-mb) Q and remainder t^ma R, so
/// the remainder vanishes iff b divides a in Z[t, 1/t].
DivisionResult divmod_unit_lead(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b in Z[t, 1/t]; throws std::domain_error when b does
/// not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// True iff q = +-t^m * p for some integer m.
bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace lorenz
