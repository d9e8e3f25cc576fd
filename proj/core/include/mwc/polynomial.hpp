#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mwc {

using Integer = mpz_class;

/// Dense univariate polynomial in p with arbitrary-precision integer
/// coefficients.
///
/// p stands for the class of the affine line, so one power of p accounts
/// for two real cohomological degrees: P(P^n) = 1 + p + ... + p^n. The
/// classical Poincare polynomial is recovered downstream by p -> t^2.
///
/// Values are kept canonical: the last stored coefficient is nonzero and
/// the zero polynomial stores nothing.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Integer> coefficients);
    Polynomial(std::initializer_list<long> coefficients);

    static Polynomial constant(const Integer& c);
    static Polynomial monomial(const Integer& c, std::size_t degree);

    /// Parses the textual literal form, e.g. "1 + 3p + 9p^2" or "-1 + p^3".
    static Polynomial parse(std::string_view text);

    /// Degree, or nullopt for the zero polynomial (degree minus infinity).
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of p^i; zero beyond the stored range.
    const Integer& operator[](std::size_t i) const;
    std::span<const Integer> coefficients() const { return coeffs_; }

    /// Substitutes p -> p^k. k must be positive.
    Polynomial compose_power(unsigned k) const;

    Integer eval_at(const Integer& x) const;

    /// True iff the coefficient sequence reads the same reversed.
    bool is_palindromic() const;

    /// Canonical literal text, ascending degree, e.g. "1 + 2p + p^2".
    std::string to_string() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Integer& scale);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
    friend Polynomial operator*(const Integer& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize();

    std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& poly);

/// Raised by div_exact when the divisor does not divide the dividend over Z.
class NotDivisibleError : public std::runtime_error {
public:
    NotDivisibleError(Polynomial quotient, Polynomial remainder);

    const Polynomial& partial_quotient() const { return quotient_; }
    const Polynomial& remainder() const { return remainder_; }

private:
    Polynomial quotient_;
    Polynomial remainder_;
};

/// Raised when a polynomial literal cannot be parsed; offset is the
/// byte position inside the literal text.
class PolynomialSyntaxError : public std::invalid_argument {
public:
    PolynomialSyntaxError(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Exact division over the integers. Throws std::domain_error on a zero
/// divisor and NotDivisibleError if a remainder is left or a quotient
/// coefficient is not an integer.
Polynomial div_exact(const Polynomial& dividend, const Polynomial& divisor);

}  // namespace mwc
