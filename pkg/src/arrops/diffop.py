"""Homogeneous-order differential operators with polynomial coefficients.

An order-m operator is a finite sum over multi-indices a with |a| = m of
coefficient polynomials f_a times the monomial derivative d^a.  Operators
are immutable by convention, like polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch
from .polynomial import (
    MultiIndex,
    Poly,
    grlex_key,
    midx_add,
    midx_factorial,
    monomials_of_degree,
    primitive_int_vector,
)


class DiffOp:
    """Operator sum(f_a * d^a) with all |a| equal to ``order``."""

    __slots__ = ("nvars", "order", "coeffs")

    def __init__(self, nvars: int, order: int, coeffs: Mapping[MultiIndex, Poly] | None = None):
        self.nvars = nvars
        self.order = order
        clean: dict[MultiIndex, Poly] = {}
        if coeffs:
            for a, f in coeffs.items():
                if f.is_zero():
                    continue
                if len(a) != nvars or sum(a) != order:
                    raise DimensionMismatch(f"multi-index {a} invalid for order {order} in {nvars} variables")
                clean[tuple(a)] = f
        self.coeffs = clean

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant_coefficient(self) -> bool:
        return all(f.total_degree() <= 0 for f in self.coeffs.values())

    def degree(self) -> int | None:
        """Common homogeneous degree of all coefficients, or None."""
        degs = set()
        for f in self.coeffs.values():
            d = f.homogeneous_degree()
            if d is None:
                return None
            degs.add(d)
        return degs.pop() if len(degs) == 1 else None

    def sorted_coeffs(self) -> list[tuple[MultiIndex, Poly]]:
        return sorted(self.coeffs.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DiffOp)
            and (self.nvars, self.order) == (other.nvars, other.order)
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.order, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        return f"DiffOp({self.text()!r})"

    def text(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for a, f in self.sorted_coeffs():
            mono = "*".join(f"d{i + 1}" if e == 1 else f"d{i + 1}^{e}" for i, e in enumerate(a) if e)
            parts.append(f"({f.text()}){('*' + mono) if mono else ''}")
        return " + ".join(parts)

    # -- algebra -----------------------------------------------------------

    def __add__(self, other: DiffOp) -> DiffOp:
        if (self.nvars, self.order) != (other.nvars, other.order):
            raise DimensionMismatch("operators must share variable count and order")
        out = dict(self.coeffs)
        for a, f in other.coeffs.items():
            s = out.get(a)
            s = f if s is None else s + f
            if s.is_zero():
                out.pop(a, None)
            else:
                out[a] = s
        return DiffOp(self.nvars, self.order, out)

    def __neg__(self) -> DiffOp:
        return DiffOp(self.nvars, self.order, {a: -f for a, f in self.coeffs.items()})

    def __sub__(self, other: DiffOp) -> DiffOp:
        return self + (-other)

    def scale(self, c: Fraction | int) -> DiffOp:
        return DiffOp(self.nvars, self.order, {a: f * c for a, f in self.coeffs.items()})

    def mul_poly(self, p: Poly) -> DiffOp:
        return DiffOp(self.nvars, self.order, {a: f * p for a, f in self.coeffs.items()})

    def apply(self, f: Poly) -> Poly:
        """Apply the operator to a polynomial."""
        if f.nvars != self.nvars:
            raise DimensionMismatch("operator and polynomial variable counts differ")
        out = Poly.zero(self.nvars)
        for a, coeff in self.coeffs.items():
            d = f.partial(a)
            if not d.is_zero():
                out = out + coeff * d
        return out

    def compose_constant(self, eta: DiffOp) -> DiffOp:
        """Compose with a constant-coefficient operator on the right.

        The right factor commutes with the coefficient polynomials, so the
        product is the multi-index convolution of the two coefficient maps.
        """
        if eta.nvars != self.nvars:
            raise DimensionMismatch("operators must share variable count")
        if not eta.is_constant_coefficient():
            raise ValueError("right factor must have constant coefficients")
        out: dict[MultiIndex, Poly] = {}
        for a, f in self.coeffs.items():
            for b, g in eta.coeffs.items():
                k = midx_add(a, b)
                term = f * g.constant_value()
                s = out.get(k)
                s = term if s is None else s + term
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return DiffOp(self.nvars, self.order + eta.order, out)

    # -- normalization and serialization -----------------------------------

    def leading_key(self) -> tuple[MultiIndex, MultiIndex]:
        """Graded-lex-largest (multi-index, monomial) pair with nonzero coefficient."""
        if not self.coeffs:
            raise ValueError("zero operator")
        a = max(self.coeffs, key=grlex_key)
        return a, self.coeffs[a].leading_monomial()

    def normalized_primitive(self) -> DiffOp:
        """Canonical scaling: integer coefficients, joint content 1, leading > 0."""
        if not self.coeffs:
            return self
        den = 1
        num = 0
        for f in self.coeffs.values():
            c = f.content()
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        factor = Fraction(den, num)
        a, mono = self.leading_key()
        if self.coeffs[a].terms[mono] < 0:
            factor = -factor
        return self.scale(factor)

    def to_json(self) -> list:
        return [[list(a), f.text()] for a, f in self.sorted_coeffs()]


# -- constructors -----------------------------------------------------------


def identity_op(nvars: int) -> DiffOp:
    return DiffOp(nvars, 0, {(0,) * nvars: Poly.constant(nvars, 1)})


def partial_op(nvars: int, a: MultiIndex, coeff: Poly | int | Fraction = 1) -> DiffOp:
    f = coeff if isinstance(coeff, Poly) else Poly.constant(nvars, coeff)
    return DiffOp(nvars, sum(a), {tuple(a): f})


def power_of_derivation(coeffs: Sequence[Fraction | int], k: int, nvars: int | None = None) -> DiffOp:
    """Expand (sum c_i d_i)^k with multinomial coefficients k!/a! * c^a."""
    if k < 0:
        raise ValueError("negative power")
    n = len(coeffs) if nvars is None else nvars
    cs = [Fraction(c) for c in coeffs]
    if len(cs) != n:
        raise DimensionMismatch("coefficient vector length must equal variable count")
    out: dict[MultiIndex, Poly] = {}
    for a in monomials_of_degree(n, k):
        c = Fraction(factorial(k), midx_factorial(a))
        for ci, ai in zip(cs, a):
            if ai:
                c *= ci**ai
        if c:
            out[a] = Poly.constant(n, c)
    return DiffOp(n, k, out)


def euler_op(m: int, nvars: int) -> DiffOp:
    """Order-m Euler operator sum (m!/a!) x^a d^a.

    Acts on a homogeneous polynomial of degree d as multiplication by the
    falling factorial d(d-1)...(d-m+1); belongs to every operator module of
    a central arrangement.
    """
    if m < 0 or nvars < 1:
        raise ValueError("need m >= 0 and at least one variable")
    out = {}
    for a in monomials_of_degree(nvars, m):
        c = Fraction(factorial(m), midx_factorial(a))
        out[a] = Poly(nvars, {a: c})
    return DiffOp(nvars, m, out)


# -- coefficient matrices ----------------------------------------------------

# Interface constant: the coefficient matrix of a candidate basis has one row
# per operator and one column per multi-index d^a, columns in graded-lex
# descending order.

def saito_columns(nvars: int, order: int) -> list[MultiIndex]:
    return monomials_of_degree(nvars, order)


def saito_matrix(ops: Iterable[DiffOp]) -> list[list[Poly]]:
    ops = list(ops)
    if not ops:
        raise ValueError("no operators")
    nvars, order = ops[0].nvars, ops[0].order
    cols = saito_columns(nvars, order)
    zero = Poly.zero(nvars)
    return [[op.coeffs.get(a, zero) for a in cols] for op in ops]


__all__ = [
    "DiffOp",
    "identity_op",
    "partial_op",
    "power_of_derivation",
    "euler_op",
    "saito_columns",
    "saito_matrix",
    "primitive_int_vector",
]
