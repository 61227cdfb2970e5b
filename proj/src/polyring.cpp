#include "grothmn/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace grothmn {

Int binomial(long long a, long long b) {
    if (b < 0 || b > a)
        return 0;
    b = std::min(b, a - b);
    Int result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i; // exact at every step
    }
    return result;
}

int Monomial::xdegree() const {
    return std::accumulate(xexp.begin(), xexp.end(), 0);
}

namespace {

void check_same_arity(const Poly& a, const Poly& b, const char* op) {
    if (a.arity() != b.arity())
        throw std::invalid_argument(std::string(op) + ": arity mismatch");
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.xexp.size(); ++i)
        r.xexp[i] += b.xexp[i];
    r.bexp += b.bexp;
    return r;
}

bool mono_divides(const Monomial& den, const Monomial& num) {
    for (std::size_t i = 0; i < den.xexp.size(); ++i)
        if (den.xexp[i] > num.xexp[i])
            return false;
    return den.bexp <= num.bexp;
}

Monomial mono_div(const Monomial& num, const Monomial& den) {
    Monomial r = num;
    for (std::size_t i = 0; i < r.xexp.size(); ++i)
        r.xexp[i] -= den.xexp[i];
    r.bexp -= den.bexp;
    return r;
}

} // namespace

Poly::Poly(int arity) : arity_(arity) {
    if (arity < 0)
        throw std::invalid_argument("Poly: negative arity");
}

Poly Poly::constant(int arity, Int value) {
    Poly p(arity);
    if (value != 0)
        p.terms_.emplace(Monomial{std::vector<int>(static_cast<std::size_t>(arity), 0), 0},
                         std::move(value));
    return p;
}

Poly Poly::variable(int arity, int index) {
    if (index < 1 || index > arity)
        throw std::invalid_argument("Poly::variable: index out of range");
    Monomial m{std::vector<int>(static_cast<std::size_t>(arity), 0), 0};
    m.xexp[static_cast<std::size_t>(index - 1)] = 1;
    return monomial(arity, std::move(m), 1);
}

Poly Poly::beta(int arity) {
    return monomial(arity, Monomial{std::vector<int>(static_cast<std::size_t>(arity), 0), 1}, 1);
}

Poly Poly::monomial(int arity, Monomial m, Int coeff) {
    if (static_cast<int>(m.xexp.size()) != arity)
        throw std::invalid_argument("Poly::monomial: exponent vector length != arity");
    Poly p(arity);
    if (coeff != 0)
        p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

void Poly::add_term(const Monomial& m, const Int& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    check_same_arity(*this, other, "add");
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    check_same_arity(*this, other, "sub");
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& other) {
    *this = *this * other;
    return *this;
}

Poly& Poly::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= scalar;
    return *this;
}

Poly Poly::operator-() const {
    Poly r(arity_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Poly operator+(Poly a, const Poly& b) {
    a += b;
    return a;
}

Poly operator-(Poly a, const Poly& b) {
    a -= b;
    return a;
}

Poly operator*(const Poly& a, const Poly& b) {
    check_same_arity(a, b, "mul");
    Poly r(a.arity());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Poly operator*(Poly a, const Int& scalar) {
    a *= scalar;
    return a;
}

Poly operator*(const Int& scalar, Poly a) {
    a *= scalar;
    return a;
}

Poly pow(const Poly& base, int exponent) {
    if (exponent < 0)
        throw std::invalid_argument("pow: negative exponent");
    Poly result = Poly::constant(base.arity(), 1);
    for (int i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

Poly exact_div(const Poly& num, const Poly& den) {
    check_same_arity(num, den, "exact_div");
    if (den.is_zero())
        throw std::invalid_argument("exact_div: division by zero");
    Poly quotient(num.arity());
    Poly rem = num;
    const auto& lead = *den.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& top = *rem.terms().rbegin();
        if (!mono_divides(lead.first, top.first) || top.second % lead.second != 0)
            throw std::domain_error("exact_div: not divisible");
        Monomial qm = mono_div(top.first, lead.first);
        Int qc = top.second / lead.second;
        quotient.add_term(qm, qc);
        rem -= Poly::monomial(num.arity(), qm, qc) * den;
    }
    return quotient;
}

namespace {

Poly det_cofactor(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 1)
        return m[0][0];
    Poly result(m[0][0].arity());
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero())
            continue;
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (std::size_t t = 0; t < n; ++t)
                if (t != j)
                    row.push_back(m[i][t]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * det_cofactor(minor);
        if (j % 2 == 0)
            result += term;
        else
            result -= term;
    }
    return result;
}

Poly det_bareiss(std::vector<std::vector<Poly>> a) {
    const std::size_t n = a.size();
    const int arity = a[0][0].arity();
    bool negate = false;
    Poly prev = Poly::constant(arity, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k].is_zero())
            ++pivot;
        if (pivot == n)
            return Poly(arity);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

} // namespace

Poly determinant(const std::vector<std::vector<Poly>>& matrix) {
    const std::size_t n = matrix.size();
    if (n == 0)
        throw std::invalid_argument("determinant: empty matrix");
    const int arity = matrix[0][0].arity();
    for (const auto& row : matrix) {
        if (row.size() != n)
            throw std::invalid_argument("determinant: matrix not square");
        for (const Poly& entry : row)
            if (entry.arity() != arity)
                throw std::invalid_argument("determinant: arity mismatch");
    }
    return n <= 4 ? det_cofactor(matrix) : det_bareiss(matrix);
}

Poly substitute_beta(const Poly& p, const Int& value) {
    Poly r(p.arity());
    for (const auto& [m, c] : p.terms()) {
        Monomial plain{m.xexp, 0};
        r.add_term(plain, c * boost::multiprecision::pow(value, static_cast<unsigned>(m.bexp)));
    }
    return r;
}

Poly beta_rescale(const Poly& p, int d) {
    Poly r(p.arity());
    for (const auto& [m, c] : p.terms()) {
        int bexp = d - m.xdegree() + m.bexp;
        if (bexp < 0)
            throw std::domain_error("beta_rescale: negative beta exponent");
        r.add_term(Monomial{m.xexp, bexp}, c);
    }
    return r;
}

Poly permute_variables(const Poly& p, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != p.arity())
        throw std::invalid_argument("permute_variables: permutation length != arity");
    Poly r(p.arity());
    for (const auto& [m, c] : p.terms()) {
        Monomial moved{std::vector<int>(m.xexp.size(), 0), m.bexp};
        for (std::size_t i = 0; i < m.xexp.size(); ++i)
            moved.xexp[static_cast<std::size_t>(perm[i] - 1)] = m.xexp[i];
        r.add_term(moved, c);
    }
    return r;
}

std::string to_string(const Poly& p) {
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        bool unit_monomial = m.bexp == 0 && m.xdegree() == 0;
        if (mag != 1 || unit_monomial)
            factors.push_back(mag.str());
        if (m.bexp == 1)
            factors.push_back("b");
        else if (m.bexp > 1)
            factors.push_back("b^" + std::to_string(m.bexp));
        for (std::size_t i = 0; i < m.xexp.size(); ++i) {
            if (m.xexp[i] == 0)
                continue;
            std::string f = "x" + std::to_string(i + 1);
            if (m.xexp[i] > 1)
                f += "^" + std::to_string(m.xexp[i]);
            factors.push_back(std::move(f));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0)
                out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

namespace {

struct PolyParser {
    std::string_view text;
    std::size_t pos = 0;
    int arity;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos));
    }

    long long parse_integer() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            fail("expected integer");
        return std::stoll(std::string(text.substr(start, pos - start)));
    }

    int parse_exponent() {
        if (eat('^'))
            return static_cast<int>(parse_integer());
        return 1;
    }

    // factor := integer | b[^e] | x<idx>[^e]
    void parse_factor(Monomial& m, Int& coeff) {
        skip_space();
        if (pos >= text.size())
            fail("expected factor");
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= parse_integer();
        } else if (c == 'b') {
            ++pos;
            m.bexp += parse_exponent();
        } else if (c == 'x') {
            ++pos;
            long long index = parse_integer();
            if (index < 1 || index > arity)
                fail("variable index out of range");
            m.xexp[static_cast<std::size_t>(index - 1)] += parse_exponent();
        } else {
            fail("unexpected character");
        }
    }

    Poly parse() {
        Poly result(arity);
        bool first = true;
        while (true) {
            skip_space();
            if (pos >= text.size()) {
                if (first)
                    fail("empty input");
                break;
            }
            int sign = 1;
            if (eat('-'))
                sign = -1;
            else if (eat('+')) {
                // explicit plus
            } else if (!first) {
                fail("expected + or -");
            }
            Monomial m{std::vector<int>(static_cast<std::size_t>(arity), 0), 0};
            Int coeff = sign;
            parse_factor(m, coeff);
            while (eat('*'))
                parse_factor(m, coeff);
            result.add_term(m, coeff);
            first = false;
        }
        return result;
    }
};

} // namespace

Poly parse_poly(std::string_view text, int arity) {
    PolyParser parser{text, 0, arity};
    return parser.parse();
}

Poly to_poly(const BetaCoeff& c, int arity) {
    return Poly::monomial(arity, Monomial{std::vector<int>(static_cast<std::size_t>(arity), 0),
                                          c.beta_power},
                          c.coeff);
}

} // namespace grothmn
