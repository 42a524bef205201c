#!/usr/bin/env python3
"""A tour of the counting formulas: one worked type, specializations, sequences.

Run:  python demos/counting_tour.py
"""

from z2z8 import (
    TypeProfile,
    count,
    count_product,
    count_z2z4,
    count_z8,
    delta_exponents,
    dual_type,
    q_binomial,
    q_multinomial,
)

print("How many additive codes in Z2^2 x Z8^2 have type (2,2;1,1,1,0)?")
p = TypeProfile(2, 2, 1, 1, 1, 0)
b = count_product(p)
print(f"  product formula: N1..N4 = {b.n1},{b.n2},{b.n3},{b.n4}  "
      f"D1..D4 = {b.d1},{b.d2},{b.d3},{b.d4}")
print(f"  quotient {b.numerator}/{b.denominator} = {b.total}")

d = delta_exponents(p).delta
qb = q_binomial(2, 1, 2)
qm = q_multinomial(2, [1, 1, 0], 2)
print(f"  closed form: 2^{d} * [2;1]_2 * [2;1,1,0]_2 = {2**d} * {qb} * {qm} = {count(p)}")
print()

print("The same machinery specializes to single-alphabet counts:")
print(f"  linear codes over Z8, length 4, type (2,1,1): {count_z8(4, 2, 1, 1)}")
print(f"  additive Z2Z4 codes of type (3,4;2,1,2):      {count_z2z4(3, 4, 2, 1, 2)}")
print(f"  2-binomial [4;2]_2 via count(4,1;2,0,0,1):     {count(TypeProfile(4, 1, 2, 0, 0, 1))}")
print()

print("Each type has a dual type with its own count:")
print(f"  dual of {p} is {dual_type(p)}: {count(p)} codes vs {count(dual_type(p))} duals")
print()

print("Families of types give integer sequences, e.g. (r+1,2;r,1,1,0):")
terms = [count(TypeProfile(r + 1, 2, r, 1, 1, 0)) for r in range(1, 9)]
print(" ", ", ".join(str(t) for t in terms), "...")
print("and the central Gaussian binomials from (r,2r;r,r,r,0):")
terms = [count(TypeProfile(r, 2 * r, r, r, r, 0)) for r in range(1, 7)]
print(" ", ", ".join(str(t) for t in terms), "...")
