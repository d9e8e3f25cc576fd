#include "mwc/ledger.hpp"

#include "mwc/motives.hpp"

#include <algorithm>
#include <stdexcept>

namespace mwc::ledger {

namespace {

using E = SpaceExpr;

Polynomial from_coefficients(std::initializer_list<long> coeffs)
{
    return Polynomial(coeffs);
}

}  // namespace

long PairClass::point_count() const
{
    // d(3 - d) is always even.
    return chi - static_cast<long>(d) * (3 - d) / 2;
}

std::vector<WallCandidate> wall_enumerate(PairClass c)
{
    if (c.d < 2) throw std::invalid_argument("wall_enumerate: need d >= 2, got d=" + std::to_string(c.d));
    std::vector<WallCandidate> out;
    for (int sub_d = 1; sub_d < c.d; ++sub_d) {
        const PairClass shape{c.d - sub_d, 0};
        // quotient_points >= 0  <=>  sub_chi <= chi - (d-d')(3-(d-d'))/2
        const long max_sub_chi = c.chi + (shape.point_count() - shape.chi);
        // alpha > 0  <=>  d * sub_chi > d' * chi
        long sub_chi = (static_cast<long>(sub_d) * c.chi) / c.d - 1;
        for (; sub_chi <= max_sub_chi; ++sub_chi) {
            Rational alpha(static_cast<long>(c.d) * sub_chi - static_cast<long>(sub_d) * c.chi, sub_d);
            alpha.canonicalize();
            if (alpha <= 0) continue;
            PairClass quotient{c.d - sub_d, static_cast<int>(c.chi - sub_chi)};
            const long points = quotient.point_count();
            if (points < 0) continue;
            out.push_back({alpha, PairClass{sub_d, static_cast<int>(sub_chi)}, 0, quotient, points});
        }
    }
    std::ranges::stable_sort(out, [](const WallCandidate& a, const WallCandidate& b) {
        if (a.alpha != b.alpha) return a.alpha > b.alpha;
        return a.sub.d < b.sub.d;
    });
    return out;
}

std::vector<Rational> distinct_walls(const std::vector<WallCandidate>& candidates)
{
    std::vector<Rational> out;
    for (const auto& c : candidates) {
        if (out.empty() || out.back() != c.alpha) out.push_back(c.alpha);
    }
    return out;
}

long chi_sheaves(long d, long d2)
{
    if (d < 1 || d2 < 1) throw std::invalid_argument("chi_sheaves: degrees must be positive");
    return -d * d2;
}

long chi_pair_self(PairClass c)
{
    if (c.d < 1) throw std::invalid_argument("chi_pair_self: degree must be positive");
    return -static_cast<long>(c.d) * c.d - c.chi + 1;
}

long expected_dim(PairClass c)
{
    return 1 - chi_pair_self(c);
}

long ext_dim(const ChiRecord& r)
{
    if (r.h0 < 0 || r.h1 < 0) throw std::invalid_argument("ext_dim: h0 and h1 must be non-negative");
    return r.h0 - r.h1 - chi_sheaves(r.d, r.d2);
}

long ext_dim_from_chi(long h0, long d, long d2)
{
    return ext_dim({d, d2, h0, 0});
}

std::vector<ExtDimensionEntry> printed_ext_dimensions()
{
    // h0 of F_{m+k} is max(k, 0); a section-free source contributes no h0/h1.
    return {
        {"alpha=18 C+: Ext^1((1,F_{4m-2}),(0,F_{m+4}))", {4, 1, 4, 0}, 8, 7},
        {"alpha=18 C- (L not in C): Ext^1((0,F_{m+4}),(1,F_{4m-2}))", {4, 1, 0, 0}, 4, 3},
        {"alpha=13 C+: Ext^1((1,F_{4m-1}),(0,F_{m+3}))", {4, 1, 3, 0}, 7, 6},
        {"alpha=13 C-: Ext^1((0,F_{m+3}),(1,F_{4m-1}))", {4, 1, 0, 0}, 3, 3},
        {"alpha=8 C+: Ext^1((1,F_{4m}),(0,F_{m+2}))", {4, 1, 2, 0}, 6, 5},
        {"alpha=8 C-: Ext^1((0,F_{m+2}),(1,F_{4m}))", {4, 1, 0, 0}, 3, 3},
        {"alpha=3 A+: Ext^1((1,F_{4m+1}),(0,F_{m+1}))", {4, 1, 1, 0}, 5, 4},
        {"alpha=3 A-: Ext^1((0,F_{m+1}),(1,F_{4m+1}))", {4, 1, 0, 0}, 4, 3},
        {"alpha=3 D+: Ext^1((1,F_{3m}),(0,F'_{m+1}))", {3, 1, 1, 0}, 4, 3},
        {"alpha=3 D-: Ext^1((0,F'_{m+1}),(1,F_{3m}))", {3, 1, 0, 0}, 3, 2},
        {"alpha=3 B+: Ext^1((1,F_{3m}),(0,F_{2m+2}))", {3, 2, 2, 0}, 8, 7},
        {"alpha=3 B-: Ext^1((0,F_{2m+2}),(1,F_{3m}))", {3, 2, 0, 0}, 6, 5},
        {"(5,-2) alpha=2: Ext^1((1,F_{4m-2}),(0,F_m))", {4, 1, 0, 0}, 4, 3},
        {"(5,-2) alpha=2: Ext^1((0,F_m),(1,F_{4m-2}))", {4, 1, 0, 0}, 4, 3},
    };
}

Polynomial m52_sheaves()
{
    return from_coefficients({1,   2,   6,   13,  26,  45,  68,  87,  100, 107, 111, 112, 113, 113,
                              113, 112, 111, 107, 100, 87,  68,  45,  26,  13,  6,   2,   1});
}

Polynomial m52_h0_3()
{
    return from_coefficients({1,  3,  8,  14, 19, 21, 22, 22, 22, 22, 22, 22,
                              22, 22, 22, 22, 22, 22, 21, 19, 14, 8,  3,  1});
}

Polynomial mplus52_printed()
{
    return from_coefficients({1,   3,   9,   22,  47,  85,  132, 176, 209, 229, 240, 245, 247, 248,
                              248, 247, 245, 240, 229, 209, 176, 132, 85,  47,  22,  9,   3,   1});
}

Polynomial wall3_delta_printed()
{
    return from_coefficients({0,  0,  0,  0,  1,  4,  13, 27, 44, 57, 66, 70,
                              72, 72, 72, 72, 70, 66, 57, 44, 27, 13, 4,  1});
}

Polynomial minf52_printed()
{
    return from_coefficients({1,   3,   9,   22,  50,  99,  173, 256, 330, 379, 407, 420, 426, 428,
                              429, 428, 423, 410, 382, 333, 259, 176, 101, 51,  22,  9,   3,   1});
}

namespace {

// M(5,2)_3 ~ M^+(5,-2): B(5,0)-type P^17-bundle over Hilb^3, then the
// alpha = 2 wall with P^3 fibers on both sides over P^2 x P^14.
SpaceExpr m3_expr()
{
    return E::bundle(E::proj(17), E::atom({AtomKind::HilbP2, {3}})) +
           E::bundle(E::proj(3) - E::proj(3), E::proj(2) * E::proj(14));
}

SpaceExpr off_diagonal_square(long n)
{
    return E::proj(n) * E::proj(n) - E::proj(n);
}

}  // namespace

Polynomial m3_pipeline()
{
    return eval_expr(m3_expr(), Environment{});
}

Polynomial forgetful(const Polynomial& sheaves, const Polynomial& h0_3_locus)
{
    return (sheaves - h0_3_locus) * motives::projective(1) + h0_3_locus * motives::projective(2);
}

Scenario builtin_scenario_52()
{
    Scenario s;
    s.name = "builtin_52";

    const E sheaves = E::ident("m52_sheaves");
    const E locus3 = E::ident("m52_h0_3");
    s.bindings.push_back({"m52_sheaves", E::literal(m52_sheaves()), {}});
    s.bindings.push_back({"m52_h0_3", m3_expr(), {}});
    s.bindings.push_back({"m_plus_52", (sheaves - locus3) * E::proj(1) + locus3 * E::proj(2), {}});

    const E base18 = E::proj(2) * E::proj(14);
    const E base13 = E::proj(2) * E::relhilb(4, 1);
    const E base8 = E::proj(2) * E::relhilb(4, 2);
    const E base_half = E::proj(5) * E::relhilb(3, 1);

    s.walls.push_back({Rational(18),
                       {E::bundle(E::proj(7), base18)},
                       {E::bundle(E::proj(3), E::proj(2) * (E::proj(14) - E::proj(9))),
                        E::bundle(E::proj(4), E::proj(2) * E::proj(9))},
                       {}});
    s.walls.push_back({Rational(13), {E::bundle(E::proj(6), base13)}, {E::bundle(E::proj(3), base13)}, {}});
    s.walls.push_back({Rational(8), {E::bundle(E::proj(5), base8)}, {E::bundle(E::proj(3), base8)}, {}});
    s.walls.push_back({Rational(3), {E::literal(wall3_delta_printed())}, {E::literal(Polynomial{})}, {}});
    s.walls.push_back({Rational(1, 2), {E::bundle(E::proj(6), base_half)}, {E::bundle(E::proj(5), base_half)}, {}});

    s.models.push_back({kModelLocus3, locus3, false, {}});
    s.models.push_back({kModelPlus, E::ident("m_plus_52"), false, {}});
    s.models.push_back({kModelInfinity, E::ident("m_plus_52"), true, {}});

    s.expectations.push_back({kModelLocus3, m52_h0_3(), {}});
    s.expectations.push_back({kModelPlus, mplus52_printed(), {}});
    s.expectations.push_back({kModelInfinity, minf52_printed(), {}});
    return s;
}

Polynomial mplus41()
{
    // Below its own wall at 3, (4,1) trades P^3 fibers (C^4 extensions) for
    // P^2 fibers (C^3) over P^2 x B(3,0).
    const E expr = E::relhilb(4, 3) + (E::proj(2) - E::proj(3)) * E::proj(2) * E::proj(9);
    return eval_expr(expr, Environment{});
}

C3Reconstruction reconstruct_c3()
{
    Environment env;
    env.bind("mplus41", mplus41());
    const E b30 = E::proj(9);  // B(3,0)
    const E mplus = E::ident("mplus41");

    // A^+ minus A^+ n D^+, then A^- minus A^- n D^-.
    const E a_plus = E::bundle(E::proj(4), E::proj(2) * E::relhilb(4, 3));
    const E a_plus_d = E::bundle(E::proj(3), E::bundle(E::proj(3), off_diagonal_square(2) * b30)) +
                       E::bundle(E::proj(2), E::bundle(E::proj(3), E::proj(2) * b30));
    const E a_minus = E::bundle(E::proj(3), E::proj(2) * mplus);
    const E a_minus_d = E::bundle(E::proj(2), E::bundle(E::proj(2), off_diagonal_square(2) * b30)) +
                        E::bundle(E::proj(1), E::bundle(E::proj(2), E::proj(2) * b30));
    const E a_bracket = (a_plus - a_plus_d) - (a_minus - a_minus_d);

    // D^{+/-}: (F x F)-fibration over P^9 x (V - diagonal) plus a
    // Grassmannian bundle over P^9 x diagonal.
    const E v_off = E::sym2_off_diagonal(E::proj(2));
    const E anti = off_diagonal_square(2) - v_off;
    auto d_side = [&](long fiber, long ext, bool equivariant) {
        E square = equivariant ? E::equivariant_square(E::proj(fiber), v_off, anti)
                               : E::bundle(E::proj(fiber) * E::proj(fiber), v_off);
        return E::bundle(square, b30) +
               E::bundle(E::atom({AtomKind::Grassmannian, {2, ext}}), b30 * E::proj(2));
    };

    C3Reconstruction out;
    out.a_bracket = eval_expr(a_bracket, env);
    out.divisor = (motives::projective(7) - motives::projective(5)) *
                  (motives::projective(5) - motives::sym2(motives::projective(2)));

    const Polynomial printed = wall3_delta_printed();
    for (bool equivariant : {true, false}) {
        C3Variant v;
        v.name = equivariant ? "equivariant" : "naive";
        v.d_bracket = eval_expr(d_side(3, 4, equivariant) - d_side(2, 3, equivariant), env);
        v.b_bracket_implied = printed - out.a_bracket - v.d_bracket;
        try {
            v.mplus30_recovered = div_exact(v.b_bracket_implied, out.divisor);
        } catch (const NotDivisibleError& e) {
            v.remainder = e.remainder();
        }
        out.variants.push_back(std::move(v));
    }
    return out;
}

}  // namespace mwc::ledger
