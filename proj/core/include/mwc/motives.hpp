#pragma once

// Closed-form virtual Poincare polynomials of the building-block spaces.

#include "mwc/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mwc {

/// Precondition violation on an atom (e.g. Gr(k,n) with k > n).
class AtomDomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The relative Hilbert scheme B(d,n) is only a projective bundle over
/// Hilb^n(P^2) for n <= d; outside that range there is no closed form.
class NotABundleError : public AtomDomainError {
public:
    using AtomDomainError::AtomDomainError;
};

enum class AtomKind { Projective, Affine, Point, Grassmannian, HilbP2, RelHilbert };

struct AtomSpec {
    AtomKind kind = AtomKind::Point;
    std::vector<long> params;

    friend bool operator==(const AtomSpec&, const AtomSpec&) = default;
};

namespace motives {

Polynomial point();
Polynomial affine(long n);
Polynomial projective(long n);

/// Gaussian binomial [n choose k]_p, the class of Gr(k,n).
Polynomial grassmannian(long k, long n);

/// Class of the Hilbert scheme of n points on P^2, read off Goettsche's
/// product  prod_k [(1 - p^{k-1} t^k)(1 - p^k t^k)(1 - p^{k+1} t^k)]^{-1}.
Polynomial hilb_p2(long n);

/// Z/2 quotient classes of X x X: (P(p)^2 + P(p^2))/2 and (P(p)^2 - P(p^2))/2.
Polynomial sym2(const Polynomial& poly);
Polynomial wedge2(const Polynomial& poly);

/// (X x X - diagonal)/Z2, i.e. sym2(P) - P.
Polynomial sym2_off_diagonal(const Polynomial& poly);

/// B(d,n) = P^{d(d+3)/2 - n} bundle over Hilb^n(P^2), valid for 0 <= n <= d.
Polynomial rel_hilbert(long d, long n);

Polynomial evaluate(const AtomSpec& atom);

}  // namespace motives

std::string atom_name(AtomKind kind);

}  // namespace mwc
