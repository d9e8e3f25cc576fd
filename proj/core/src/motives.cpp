#include "mwc/motives.hpp"

namespace mwc {

namespace motives {

namespace {

void require_nonnegative(long n, const char* what)
{
    if (n < 0) throw AtomDomainError(std::string(what) + ": argument must be non-negative, got " + std::to_string(n));
}

// (P(p)^2 +/- P(p^2)) / 2, checked to be integral.
Polynomial half_of(const Polynomial& twice, const char* what)
{
    std::vector<Integer> coeffs(twice.coefficients().begin(), twice.coefficients().end());
    for (auto& c : coeffs) {
        if (!mpz_even_p(c.get_mpz_t())) throw std::logic_error(std::string(what) + ": half-integral coefficient");
        c /= 2;
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial point()
{
    return Polynomial{1};
}

Polynomial affine(long n)
{
    require_nonnegative(n, "affine");
    return Polynomial::monomial(1, static_cast<std::size_t>(n));
}

Polynomial projective(long n)
{
    require_nonnegative(n, "projective");
    return Polynomial(std::vector<Integer>(static_cast<std::size_t>(n) + 1, Integer(1)));
}

Polynomial grassmannian(long k, long n)
{
    if (k < 0 || n < 0 || k > n)
        throw AtomDomainError("grassmannian: need 0 <= k <= n, got k=" + std::to_string(k) +
                              ", n=" + std::to_string(n));
    // q-Pascal: [m, j] = [m-1, j-1] + p^j [m-1, j], row by row.
    std::vector<Polynomial> row(static_cast<std::size_t>(k) + 1);
    row[0] = point();
    for (long m = 1; m <= n; ++m) {
        for (long j = std::min(m, k); j >= 1; --j) {
            auto& cell = row[static_cast<std::size_t>(j)];
            cell = row[static_cast<std::size_t>(j - 1)] + Polynomial::monomial(1, static_cast<std::size_t>(j)) * cell;
        }
    }
    return row[static_cast<std::size_t>(k)];
}

Polynomial hilb_p2(long n)
{
    require_nonnegative(n, "hilb_p2");
    const auto order = static_cast<std::size_t>(n);
    // Power series in t with polynomial coefficients, truncated at t^n.
    std::vector<Polynomial> series(order + 1);
    series[0] = point();
    for (std::size_t k = 1; k <= order; ++k) {
        for (std::size_t e : {k - 1, k, k + 1}) {
            // Multiply by 1 / (1 - p^e t^k): s[i] += p^e s[i-k], ascending i.
            const Polynomial shift = Polynomial::monomial(1, e);
            for (std::size_t i = k; i <= order; ++i) series[i] += shift * series[i - k];
        }
    }
    return series[order];
}

Polynomial sym2(const Polynomial& poly)
{
    return half_of(poly * poly + poly.compose_power(2), "sym2");
}

Polynomial wedge2(const Polynomial& poly)
{
    return half_of(poly * poly - poly.compose_power(2), "wedge2");
}

Polynomial sym2_off_diagonal(const Polynomial& poly)
{
    return sym2(poly) - poly;
}

Polynomial rel_hilbert(long d, long n)
{
    if (d < 1) throw AtomDomainError("rel_hilbert: degree must be positive, got " + std::to_string(d));
    require_nonnegative(n, "rel_hilbert");
    if (n > d)
        throw NotABundleError("rel_hilbert(" + std::to_string(d) + "," + std::to_string(n) +
                              "): no closed form: relative Hilbert scheme is not a bundle (need n <= d)");
    return projective(d * (d + 3) / 2 - n) * hilb_p2(n);
}

Polynomial evaluate(const AtomSpec& atom)
{
    auto arity = [&](std::size_t expected) {
        if (atom.params.size() != expected)
            throw AtomDomainError(atom_name(atom.kind) + ": expected " + std::to_string(expected) + " parameter(s)");
    };
    switch (atom.kind) {
    case AtomKind::Point:
        arity(0);
        return point();
    case AtomKind::Affine:
        arity(1);
        return affine(atom.params[0]);
    case AtomKind::Projective:
        arity(1);
        return projective(atom.params[0]);
    case AtomKind::Grassmannian:
        arity(2);
        return grassmannian(atom.params[0], atom.params[1]);
    case AtomKind::HilbP2:
        arity(1);
        return hilb_p2(atom.params[0]);
    case AtomKind::RelHilbert:
        arity(2);
        return rel_hilbert(atom.params[0], atom.params[1]);
    }
    throw std::logic_error("unknown atom kind");
}

}  // namespace motives

std::string atom_name(AtomKind kind)
{
    switch (kind) {
    case AtomKind::Projective: return "proj";
    case AtomKind::Affine: return "aff";
    case AtomKind::Point: return "point";
    case AtomKind::Grassmannian: return "gr";
    case AtomKind::HilbP2: return "hilb";
    case AtomKind::RelHilbert: return "relhilb";
    }
    return "?";
}

}  // namespace mwc
