#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grothmn {

using Int = boost::multiprecision::cpp_int;

/// binomial(a, b) with the summation convention: 0 whenever b < 0 or b > a.
Int binomial(long long a, long long b);

/// Power product x_1^{e_1}...x_n^{e_n} * b^{bexp}, where b is the formal
/// parameter written beta in the mathematics.
struct Monomial {
    std::vector<int> xexp;
    int bexp = 0;

    int xdegree() const;
    int grade() const { return xdegree() + bexp; }
    bool operator==(const Monomial&) const = default;
};

/// Canonical term order: ascending total grade, ties broken by descending
/// lexicographic x-exponents, then ascending beta exponent. A valid
/// monomial order, so division against the largest term terminates.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int ga = a.grade(), gb = b.grade();
        if (ga != gb)
            return ga < gb;
        if (a.xexp != b.xexp)
            return a.xexp > b.xexp;
        return a.bexp < b.bexp;
    }
};

/// Sparse exact polynomial in x_1..x_n and the parameter b over
/// arbitrary-precision integers. Terms are kept in canonical order with no
/// zero coefficients, so equality is structural.
class Poly {
public:
    using TermMap = std::map<Monomial, Int, MonomialOrder>;

    explicit Poly(int arity);
    static Poly constant(int arity, Int value);
    static Poly variable(int arity, int index); // x_index, 1-indexed
    static Poly beta(int arity);
    static Poly monomial(int arity, Monomial m, Int coeff);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Adds coeff * m, erasing the term if the result cancels.
    void add_term(const Monomial& m, const Int& coeff);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Int& scalar);
    Poly operator-() const;

    bool operator==(const Poly& other) const {
        return arity_ == other.arity_ && terms_ == other.terms_;
    }

private:
    int arity_;
    TermMap terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Poly a, const Int& scalar);
Poly operator*(const Int& scalar, Poly a);

Poly pow(const Poly& base, int exponent);

/// Exact quotient num / den in the integer polynomial ring. Throws
/// std::domain_error if den does not divide num.
Poly exact_div(const Poly& num, const Poly& den);

/// Exact determinant: cofactor expansion for size <= 4, fraction-free
/// Bareiss elimination above.
Poly determinant(const std::vector<std::vector<Poly>>& matrix);

/// Evaluates the parameter b at an integer, keeping the x's formal.
Poly substitute_beta(const Poly& p, const Int& value);

/// Term map c*x^a*b^e -> c*x^a*b^{d - |a| + e}; the formal counterpart of
/// b^d * p(x/b). Throws std::domain_error if an exponent would go negative.
Poly beta_rescale(const Poly& p, int d);

/// Applies x_i -> x_{perm[i-1]}; perm is a permutation of 1..arity.
Poly permute_variables(const Poly& p, std::span<const int> perm);

/// Canonical text form, e.g. "x1^2*x2 + x1*x2^2 + b*x1^2*x2^2"; zero is "0".
std::string to_string(const Poly& p);

/// Parses the same grammar as to_string produces.
Poly parse_poly(std::string_view text, int arity);

/// coeff * b^beta_power. The canonical zero has beta_power 0.
struct BetaCoeff {
    Int coeff;
    int beta_power = 0;

    static BetaCoeff zero() { return {Int(0), 0}; }
    bool is_zero() const { return coeff == 0; }
    bool operator==(const BetaCoeff&) const = default;
};

Poly to_poly(const BetaCoeff& c, int arity);

} // namespace grothmn
