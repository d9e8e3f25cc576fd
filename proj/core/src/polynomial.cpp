#include "mwc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace mwc {

namespace {

const Integer& zero_integer()
{
    static const Integer zero{0};
    return zero;
}

}  // namespace

Polynomial::Polynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients))
{
    normalize();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients)
{
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    normalize();
}

Polynomial Polynomial::constant(const Integer& c)
{
    return Polynomial(std::vector<Integer>{c});
}

Polynomial Polynomial::monomial(const Integer& c, std::size_t degree)
{
    if (c == 0) return {};
    std::vector<Integer> coeffs(degree + 1);
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const
{
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

const Integer& Polynomial::operator[](std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : zero_integer();
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& scale)
{
    if (scale == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scale;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial Polynomial::compose_power(unsigned k) const
{
    if (k == 0) throw std::invalid_argument("compose_power: exponent must be positive");
    if (is_zero()) return {};
    std::vector<Integer> out((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
    return Polynomial(std::move(out));
}

Integer Polynomial::eval_at(const Integer& x) const
{
    // Horner
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool Polynomial::is_palindromic() const
{
    return std::equal(coeffs_.begin(), coeffs_.begin() + coeffs_.size() / 2, coeffs_.rbegin());
}

std::string Polynomial::to_string() const
{
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        Integer magnitude = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || magnitude != 1) os << magnitude.get_str();
        if (i >= 1) os << 'p';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& poly)
{
    return os << poly.to_string();
}

// Literal grammar (whitespace anywhere between tokens):
//   literal := sign? term (sign term)*
//   term    := INT ("*"? "p" ("^" INT)?)? | "p" ("^" INT)?
Polynomial Polynomial::parse(std::string_view text)
{
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_digits = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return std::string(text.substr(start, pos - start));
    };

    std::vector<Integer> coeffs;
    bool any_term = false;
    skip_ws();
    while (true) {
        skip_ws();
        int sign = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (any_term) {
            if (pos >= text.size()) break;
            throw PolynomialSyntaxError("expected '+' or '-' between terms", pos);
        }
        if (pos >= text.size())
            throw PolynomialSyntaxError(any_term ? "dangling sign at end of literal" : "empty polynomial literal",
                                        pos);

        Integer coeff = 1;
        bool has_coeff = false;
        std::size_t exponent = 0;
        std::string digits = read_digits();
        if (!digits.empty()) {
            coeff = Integer(digits);
            has_coeff = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
                if (pos >= text.size() || text[pos] != 'p')
                    throw PolynomialSyntaxError("expected 'p' after '*'", pos);
            }
        }
        if (pos < text.size() && text[pos] == 'p') {
            ++pos;
            exponent = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                std::size_t at = pos;
                std::string e = read_digits();
                if (e.empty()) throw PolynomialSyntaxError("expected exponent after '^'", at);
                if (e.size() > 6) throw PolynomialSyntaxError("exponent too large", at);
                exponent = std::stoul(e);
            }
        } else if (!has_coeff) {
            throw PolynomialSyntaxError("expected coefficient or 'p'", pos);
        }

        if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
        coeffs[exponent] += sign * coeff;
        any_term = true;
        skip_ws();
        if (pos >= text.size()) break;
    }
    return Polynomial(std::move(coeffs));
}

NotDivisibleError::NotDivisibleError(Polynomial quotient, Polynomial remainder)
    : std::runtime_error("not divisible: remainder " + remainder.to_string()),
      quotient_(std::move(quotient)),
      remainder_(std::move(remainder))
{
}

PolynomialSyntaxError::PolynomialSyntaxError(const std::string& what, std::size_t offset)
    : std::invalid_argument("malformed polynomial literal at offset " + std::to_string(offset) + ": " + what),
      offset_(offset)
{
}

Polynomial div_exact(const Polynomial& dividend, const Polynomial& divisor)
{
    if (divisor.is_zero()) throw std::domain_error("div_exact: division by the zero polynomial");
    if (dividend.is_zero()) return {};

    const std::size_t dd = *divisor.degree();
    const Integer& lead = divisor[dd];
    std::vector<Integer> rem(dividend.coefficients().begin(), dividend.coefficients().end());
    std::vector<Integer> quot;
    if (rem.size() > dd) quot.resize(rem.size() - dd);

    for (std::size_t top = rem.size(); top-- > dd;) {
        if (rem[top] == 0) continue;
        if (!mpz_divisible_p(rem[top].get_mpz_t(), lead.get_mpz_t()))
            throw NotDivisibleError(Polynomial(quot), Polynomial(rem));
        Integer q = rem[top] / lead;
        const std::size_t shift = top - dd;
        for (std::size_t j = 0; j <= dd; ++j) rem[shift + j] -= q * divisor[j];
        quot[shift] = std::move(q);
    }
    Polynomial remainder(std::move(rem));
    if (!remainder.is_zero()) throw NotDivisibleError(Polynomial(std::move(quot)), std::move(remainder));
    return Polynomial(std::move(quot));
}

}  // namespace mwc
