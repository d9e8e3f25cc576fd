"""Independent oracle for frozen expected values (sympy, brute force).

Run: python3 tests/oracle/oracle.py
"""
from itertools import combinations
from fractions import Fraction
import sympy as sp

p, t = sp.symbols("p t")


def P(n):
    return sum(p**i for i in range(n + 1))


def gr_enum(k, n):
    # Schubert cells: k-subsets of {0..n-1}, dimension = sum(s_i - i)
    return sp.expand(sum(p**sum(s - i for i, s in enumerate(c)) for c in combinations(range(n), k)))


def hilb_series(n):
    prod = 1
    for k in range(1, n + 1):
        for e in (k - 1, k, k + 1):
            prod *= sum((p**e * t**k) ** j for j in range(n // k + 1))
    prod = sp.expand(prod)
    return sp.expand(prod.coeff(t, n))


def sym2(f):
    return sp.expand((f**2 + f.subs(p, p**2)) / 2)


def wedge2(f):
    return sp.expand((f**2 - f.subs(p, p**2)) / 2)


def coeffs(f):
    return sp.Poly(sp.expand(f), p).all_coeffs()[::-1] if sp.expand(f) != 0 else []


def relhilb(d, n):
    return P(d * (d + 3) // 2 - n) * hilb_series(n)


print("gr(2,4)", coeffs(gr_enum(2, 4)))
print("gr(2,15) deg/e", sp.degree(gr_enum(2, 15), p), gr_enum(2, 15).subs(p, 1))
for n in range(4):
    h = hilb_series(n)
    print("hilb", n, coeffs(h), h.subs(p, 1))
print("sym2 P2", coeffs(sym2(P(2))), "wedge2 P3", coeffs(wedge2(P(3))))

cor34 = [1, 2, 6, 13, 26, 45, 68, 87, 100, 107, 111, 112, 113, 113, 113, 112, 111, 107, 100, 87, 68, 45, 26, 13, 6, 2, 1]
cor13 = [1, 3, 9, 22, 50, 99, 173, 256, 330, 379, 407, 420, 426, 428, 429, 428, 423, 410, 382, 333, 259, 176, 101, 51, 22, 9, 3, 1]
mplus = [1, 3, 9, 22, 47, 85, 132, 176, 209, 229, 240, 245, 247, 248, 248, 247, 245, 240, 229, 209, 176, 132, 85, 47, 22, 9, 3, 1]
c3 = [0, 0, 0, 0, 1, 4, 13, 27, 44, 57, 66, 70, 72, 72, 72, 72, 70, 66, 57, 44, 27, 13, 4, 1]
m3_printed = [1, 3, 8, 14, 19, 21] + [22] * 12 + [21, 19, 14, 8, 3, 1]
lit = lambda cs: sum(c * p**i for i, c in enumerate(cs))

m3 = sp.expand(P(17) * hilb_series(3) + (P(3) - P(3)) * P(2) * P(14))
print("m3", coeffs(m3) == m3_printed, m3.subs(p, 1), sp.degree(m3, p))
fg = sp.expand((lit(cor34) - m3) * P(1) + m3 * P(2))
print("forgetful", coeffs(fg) == mplus, fg.subs(p, 1))

w18 = sp.expand(P(7) * P(2) * P(14) - P(3) * P(2) * (P(14) - P(9)) - P(4) * P(2) * P(9))
w13 = sp.expand((P(6) - P(3)) * P(2) * relhilb(4, 1))
w8 = sp.expand((P(5) - P(3)) * P(2) * relhilb(4, 2))
w3 = lit(c3)
wh = sp.expand((P(6) - P(5)) * P(5) * relhilb(3, 1))
print("w18 low", coeffs(w18)[:6], [w.subs(p, 1) for w in (w18, w13, w8, w3, wh)])
print("w13", coeffs(w13))
print("wh", coeffs(wh))
tot = sp.expand(fg + w18 + w13 + w8 + w3 + wh)
print("assembled", coeffs(tot) == cor13, tot.subs(p, 1))

# wall enumeration
def walls(d, chi):
    out = []
    for dp in range(1, d):
        dq = d - dp
        hi = chi - Fraction(dq * (3 - dq), 2)
        for cp in range(-50, 50):
            a = Fraction(d * cp - dp * chi, dp)
            nq = (chi - cp) - Fraction(dq * (3 - dq), 2)
            if a > 0 and nq >= 0:
                out.append((a, (dp, cp), (dq, chi - cp), nq))
    return sorted(out, key=lambda r: -r[0])
for c in ((5, 2), (5, -2), (4, 1)):
    print("walls", c, [(str(a), s, q, str(n)) for a, s, q, n in walls(*c)])

# C3 reconstruction
mp41 = sp.expand(relhilb(4, 3) + (P(2) - P(3)) * P(2) * P(9))
print("mplus41", mp41.subs(p, 1), sp.degree(mp41, p))
off = sp.expand(P(2)**2 - P(2))
a = sp.expand(P(4) * P(2) * relhilb(4, 3)
              - (P(3) * P(3) * off * P(9) + P(2) * P(3) * P(2) * P(9))
              - P(3) * P(2) * mp41
              + (P(2) * P(2) * off * P(9) + P(1) * P(2) * P(2) * P(9)))
xp = sp.expand(sym2(P(2)) - P(2))
xm = sp.expand(off - xp)
eq = lambda Y: sp.expand(xp * sym2(Y) + xm * wedge2(Y))
d_eq = sp.expand((eq(P(3)) + gr_enum(2, 4) * P(2)) * P(9) - (eq(P(2)) + gr_enum(2, 3) * P(2)) * P(9))
d_nv = sp.expand((P(3)**2 * xp + gr_enum(2, 4) * P(2)) * P(9) - (P(2)**2 * xp + gr_enum(2, 3) * P(2)) * P(9))
print("a e", a.subs(p, 1), "d e", d_eq.subs(p, 1), d_nv.subs(p, 1), "c3 e", w3.subs(p, 1))
div = sp.expand((P(7) - P(5)) * (p**5 - p**2))
for name, dd in (("equivariant", d_eq), ("naive", d_nv)):
    b = sp.expand(w3 - a - dd)
    q, r = sp.div(b, div, p)
    print(name, "b", coeffs(b), "q", coeffs(q), "r", coeffs(r))
print("eq sq example", coeffs(eq(P(3))))
