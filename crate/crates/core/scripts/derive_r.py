#!/usr/bin/env python3
"""Expand tr(ABC) - 1 for the parametrized triple and print the Laurent
coefficients in r as a Rust table. Regenerate with

    python3 scripts/derive_r.py > src/surface/generated.rs
"""
import sympy as sp

q, r, s, i = sp.symbols("q r s i")
A = sp.Matrix([[q, r], [(-1 + q - q**2) / r, 1 - q]])
B = sp.Matrix([[i, 0], [0, -i]])
C = sp.Matrix([[s, 1], [-1 - s**2, -s]])

expr = sp.expand((A * B * C).trace() - 1)
expr = sp.expand(expr.subs(i**2, -1))
laurent = sp.expand(expr * r)
poly = sp.Poly(laurent, r)
assert poly.degree() <= 2

names = {2: "R_COEFF_POS", 1: "R_COEFF_ZERO", 0: "R_COEFF_NEG"}
labels = {2: "r", 1: "1", 0: "1/r"}

print("// @generated by scripts/derive_r.py; do not edit.")
print("//")
print("// tr(ABC) - 1 = R_COEFF_POS * r + R_COEFF_ZERO + R_COEFF_NEG / r, each")
print("// coefficient a sum of terms (c, e_i, e_s, e_q) meaning c * i^e_i * s^e_s * q^e_q.")
print()
for k in (2, 1, 0):
    c = sp.expand(poly.coeff_monomial(r**k))
    terms = sp.Poly(c, i, s, q).terms() if c != 0 else []
    print(f"/// Coefficient of {labels[k]}: {sp.sstr(sp.factor(c))}")
    body = ", ".join(f"({int(coef)}, {ei}, {es}, {eq})" for (ei, es, eq), coef in sorted(terms, reverse=True))
    print(f"pub const {names[k]}: &[(i64, u32, u32, u32)] = &[{body}];")
