#!/usr/bin/env python3
"""Generate closed-form smoothness indicators as weighted sums of squares.

For a stencil of r cells starting at offset s relative to cell i, the
polynomial h of degree r-1 whose cell averages equal the stencil values is
built exactly, and

    beta = sum_{l=1}^{r-1} int_{-1/2}^{1/2} (d^l h / dx^l)^2 dx

is expanded into a quadratic form f^T M f.  M annihilates constants, so it is
rewritten on first differences and factored with a rational LDL^T, giving
beta = sum_j D_j (c_j . f)^2 with D_j > 0 and sum(c_j) = 0.

Usage: gen_smoothness.py > core/include/tenom/detail/smoothness_tables.hpp
"""
import sympy as sp

# (name, start offset, width)
STENCILS = [
    ("kCentered3", -1, 3),
    ("kDownwind3", 0, 3),
    ("kUpwind3", -2, 3),
    ("kDownwind4", 0, 4),
    ("kUpwind4", -3, 4),
    ("kDownwind5", 0, 5),
    ("kFull6", -2, 6),
    ("kFull8", -3, 8),
]

x = sp.symbols("x")


def quadratic_form(start, width):
    f = sp.symbols(f"f0:{width}")
    a = sp.symbols(f"a0:{width}")
    h = sum(a[l] * x**l for l in range(width))
    eqs = []
    for m in range(width):
        j = start + m
        avg = sp.integrate(h, (x, sp.Rational(2 * j - 1, 2), sp.Rational(2 * j + 1, 2)))
        eqs.append(sp.Eq(avg, f[m]))
    sol = sp.solve(eqs, a, dict=True)[0]
    hf = sp.expand(h.subs(sol))
    beta = 0
    for l in range(1, width):
        d = sp.diff(hf, x, l)
        beta += sp.integrate(sp.expand(d * d), (x, -sp.Rational(1, 2), sp.Rational(1, 2)))
    beta = sp.expand(beta)
    M = sp.zeros(width, width)
    for p in range(width):
        for q in range(width):
            c = beta.coeff(f[p], 1).coeff(f[q], 1) if p != q else beta.coeff(f[p], 2)
            M[p, q] = c / 2 if p != q else c
    return M


def sum_of_squares(start, width):
    """Factor beta over the Taylor coefficients of h, lowest derivative first."""
    f = sp.symbols(f"f0:{width}")
    a = sp.symbols(f"a0:{width}")
    h = sum(a[l] * x**l for l in range(width))
    eqs = []
    for m in range(width):
        j = start + m
        avg = sp.integrate(h, (x, sp.Rational(2 * j - 1, 2), sp.Rational(2 * j + 1, 2)))
        eqs.append(sp.Eq(avg, f[m]))
    sol = sp.solve(eqs, a, dict=True)[0]
    n = width - 1
    # A maps f to (a_1 .. a_{r-1})
    A = sp.zeros(n, width)
    for l in range(1, width):
        expr = sp.expand(sol[a[l]])
        for q in range(width):
            A[l - 1, q] = expr.coeff(f[q])
    # Gram matrix of the derivative functional on the monomial coefficients.
    b = sp.symbols(f"b1:{width}")
    hb = sum(b[l - 1] * x**l for l in range(1, width))
    beta = 0
    for l in range(1, width):
        d = sp.diff(hb, x, l)
        beta += sp.integrate(sp.expand(d * d), (x, -sp.Rational(1, 2), sp.Rational(1, 2)))
    beta = sp.expand(beta)
    Q = sp.zeros(n, n)
    for p in range(n):
        for q in range(n):
            Q[p, q] = beta.coeff(b[p], 2) if p == q else beta.coeff(b[p], 1).coeff(b[q], 1) / 2
    perm = list(range(n))
    P = sp.zeros(n, n)
    for i, p in enumerate(perm):
        P[i, p] = 1
    L, D = ldl(P * Q * P.T)
    C = L.T * P * A
    terms = []
    for j in range(n):
        row = [sp.Rational(C[j, q]) for q in range(width)]
        den = sp.ilcm(*[r.q for r in row])
        num = sp.igcd(*[(r * den).p for r in row if r != 0])
        s = sp.Rational(den, num)
        terms.append((sp.Rational(D[j, j]) / s**2, [r * s for r in row]))
    return terms


def ldl(G):
    n = G.shape[0]
    L = sp.eye(n)
    D = sp.zeros(n, n)
    for j in range(n):
        D[j, j] = G[j, j] - sum(L[j, k] ** 2 * D[k, k] for k in range(j))
        for i in range(j + 1, n):
            L[i, j] = (G[i, j] - sum(L[i, k] * L[j, k] * D[k, k] for k in range(j))) / D[j, j]
    return L, D


def cxx(v):
    v = sp.Rational(v)
    if v.q == 1:
        return f"{v.p}.0"
    return f"{v.p}.0 / {v.q}.0"


def main():
    out = []
    out.append("// Generated by scripts/gen_smoothness.py. Do not edit.")
    out.append("//")
    out.append("// Each table lists weighted squares: beta = sum_j weight_j * (coeff_j . f)^2,")
    out.append("// where f are the stencil point values from left to right.")
    out.append("#pragma once\n")
    out.append("#include <array>\n")
    out.append("namespace tenom::stencil::detail {\n")
    out.append("template <int R>")
    out.append("struct SquareTerm {")
    out.append("  double weight;")
    out.append("  std::array<double, R> coeff;")
    out.append("};\n")
    for name, start, width in STENCILS:
        M = quadratic_form(start, width)
        terms = sum_of_squares(start, width)
        # sanity: reassemble
        f = sp.symbols(f"f0:{width}")
        fv = sp.Matrix(f)
        recon = sum(w * (sum(c * fi for c, fi in zip(cs, f))) ** 2 for w, cs in terms)
        assert sp.expand(recon - (fv.T * M * fv)[0]) == 0
        assert all(w > 0 for w, _ in terms)
        out.append(f"// cells i{start:+d} .. i{start + width - 1:+d}")
        out.append(f"inline constexpr std::array<SquareTerm<{width}>, {width - 1}> {name}{{{{")
        for w, cs in terms:
            coeffs = ", ".join(cxx(c) for c in cs)
            out.append(f"    {{{cxx(w)}, {{{coeffs}}}}},")
        out.append("}};\n")
    out.append("}  // namespace tenom::stencil::detail")
    print("\n".join(out))


if __name__ == "__main__":
    main()
