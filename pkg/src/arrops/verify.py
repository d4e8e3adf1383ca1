"""Independent verification: membership, determinant certificates, dimension oracle.

The oracle computes the exact dimension of the degree-d slice of the order-m
operator module.  The defining conditions say that for every hyperplane H
and every monomial x^b of degree m-1 the combination

    sum_i  c_i (b + e_i)!  f_{b+e_i}        (c = normal of H)

is divisible by the form of H, i.e. vanishes on H.  Vanishing of a degree-d
polynomial on H is equivalent to vanishing at finitely many fixed rational
points of H (enough points to separate the restricted monomials), so the
whole system is an exact rational linear system in the coefficient unknowns.
The production path additionally quotients out the subspace of value
patterns realized by polynomials, which shrinks the elimination to matrices
indexed by points and multi-indices; ``oracle_dim_direct`` keeps the literal
coefficient-space formulation and is used to cross-check the fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .arrangement import Arrangement
from .diffop import DiffOp, saito_matrix
from .errors import (
    IdentityViolated,
    NotDivisible,
    NotEssential,
    NotPurePower,
    ZeroDet,
)
from .extension import ExtendedArrangement, flat_profiles
from .linalg import det_poly_matrix, nullspace, rank_int
from .polynomial import (
    MultiIndex,
    Poly,
    midx_factorial,
    monomials_of_degree,
    primitive_int_vector,
)


def s_dim(m: int, l: int) -> int:
    return comb(m + l - 1, m) if m >= 0 else 0


# -- membership ---------------------------------------------------------------


def is_member(theta: DiffOp, arr: Arrangement) -> bool:
    """Exact membership test: theta(alpha_H * x^b) in alpha_H * S for all H, b."""
    if theta.order == 0:
        return True
    if theta.nvars != arr.dim:
        raise NotDivisible("operator and arrangement dimensions differ")
    for h in arr.hyperplanes:
        alpha = h.poly()
        for b in monomials_of_degree(arr.dim, theta.order - 1):
            value = theta.apply(alpha * Poly(arr.dim, {b: Fraction(1)}))
            if value.is_zero():
                continue
            if not alpha.divides(value):
                return False
    return True


# -- determinant certificate ----------------------------------------------------


@dataclass(frozen=True)
class SaitoCertificate:
    """det = c * Q^t witness that a candidate set is a free basis."""

    det: Poly
    c: Fraction
    t: int

    def to_json(self) -> dict:
        return {"c": str(self.c), "t": self.t, "det": self.det.text()}


def saito_check(ops: list[DiffOp], arr: Arrangement) -> SaitoCertificate:
    """Certify a candidate basis by reducing its determinant to c * Q^t."""
    if not ops:
        raise ZeroDet("empty candidate basis")
    order = ops[0].order
    expected = s_dim(order, arr.dim)
    if len(ops) != expected:
        raise ZeroDet(f"candidate basis has {len(ops)} operators, need {expected}")
    det = det_poly_matrix(saito_matrix(ops))
    if det.is_zero():
        raise ZeroDet("candidate basis matrix is singular")
    q = arr.defining_polynomial()
    if q.total_degree() == 0:
        if det.total_degree() != 0:
            raise NotPurePower("determinant of an empty-arrangement basis must be constant")
        return SaitoCertificate(det, det.constant_value(), 0)
    rem = det
    t = 0
    while rem.total_degree() > 0:
        try:
            rem = rem.exact_div(q)
        except NotDivisible as exc:
            raise NotPurePower(f"determinant has a factor outside Q (stuck at degree {rem.total_degree()})") from exc
        t += 1
    return SaitoCertificate(det, rem.constant_value(), t)


# -- dimension oracle -------------------------------------------------------------


def _hyperplane_points(arr: Arrangement, d: int) -> tuple[list[tuple[int, ...]], list[int]]:
    """Deterministic rational points on each hyperplane, enough to separate
    restricted degree-d polynomials; returns (points, owner hyperplane index)."""
    points: list[tuple[int, ...]] = []
    owners: list[int] = []
    for hi, h in enumerate(arr.hyperplanes):
        basis = [primitive_int_vector(v) for v in nullspace([[Fraction(c) for c in h.normal]], arr.dim)]
        if arr.dim == 2:
            points.append(basis[0])
            owners.append(hi)
        else:
            u, v = basis
            for t in range(d + 1):
                points.append(tuple(a + t * b for a, b in zip(u, v)))
                owners.append(hi)
    return points, owners


def _contraction_kernel(normal: tuple[int, ...], m: int) -> list[tuple[int, ...]]:
    """Integer basis of the operators of order m killed by contraction with the normal."""
    l = len(normal)
    a_idx = monomials_of_degree(l, m)
    col = {a: i for i, a in enumerate(a_idx)}
    rows = []
    for b in monomials_of_degree(l, m - 1):
        row = [Fraction(0)] * len(a_idx)
        for i in range(l):
            if normal[i] == 0:
                continue
            a = tuple(b[k] + (k == i) for k in range(l))
            row[col[a]] += Fraction(normal[i] * midx_factorial(a))
        rows.append(row)
    return [primitive_int_vector(v) for v in nullspace(rows, len(a_idx))]


def oracle_dim(arr: Arrangement, m: int, d: int) -> int:
    """Exact dimension of the space of order-m members with degree-d coefficients."""
    l = arr.dim
    if d < 0 or m < 0:
        return 0
    n = arr.n
    if n == 0 or m == 0:
        return s_dim(m, l) * s_dim(d, l)

    points, owners = _hyperplane_points(arr, d)
    mon_d = monomials_of_degree(l, d)
    evaluation = [
        [_int_pow(p, c) for c in mon_d]
        for p in points
    ]
    # functionals vanishing on every achievable value pattern
    transpose = [[Fraction(evaluation[r][c]) for r in range(len(points))] for c in range(len(mon_d))]
    etas = [primitive_int_vector(v) for v in nullspace(transpose, len(points))]

    kernels = {h.normal: _contraction_kernel(h.normal, m) for h in arr.hyperplanes}
    kappa = s_dim(m, l) - s_dim(m - 1, l)
    for basis in kernels.values():
        if len(basis) != kappa:
            raise IdentityViolated("contraction kernel has unexpected dimension")

    free_part = s_dim(m, l) * s_dim(d - n, l)
    if not etas:
        return free_part + len(points) * kappa

    rows: list[list[int]] = []
    for pi, hi in enumerate(owners):
        weights = [eta[pi] for eta in etas]
        if all(w == 0 for w in weights):
            continue  # the point's whole kernel block maps to zero in the quotient
        for w in kernels[arr.hyperplanes[hi].normal]:
            rows.append([wq * wa for wq in weights for wa in w])
    rank_q = rank_int(rows) if rows else 0
    return free_part + len(points) * kappa - rank_q


def _int_pow(point: tuple[int, ...], exp: MultiIndex) -> int:
    v = 1
    for x, e in zip(point, exp):
        if e:
            v *= x**e
    return v


def oracle_dim_direct(arr: Arrangement, m: int, d: int) -> int:
    """Literal coefficient-space formulation (small instances; cross-check)."""
    l = arr.dim
    if d < 0 or m < 0:
        return 0
    mon_m = monomials_of_degree(l, m)
    mon_d = monomials_of_degree(l, d)
    col = {(a, c): i * len(mon_d) + ci for i, a in enumerate(mon_m) for ci, c in enumerate(mon_d)}
    ncols = len(mon_m) * len(mon_d)
    if m == 0 or arr.n == 0:
        return ncols

    rows: list[list[Fraction]] = []
    for h in arr.hyperplanes:
        normal = h.normal
        p = next(i for i, c in enumerate(normal) if c)
        # substitution x_p -> -(sum_{i != p} c_i x_i) / c_p realizes reduction mod alpha_H
        images = []
        for i in range(l):
            if i == p:
                images.append(
                    Poly(l, {tuple(int(k == i2) for k in range(l)): Fraction(-normal[i2], normal[p]) for i2 in range(l) if i2 != p})
                )
            else:
                images.append(Poly.variable(l, i))
        reduced = {c: Poly(l, {c: Fraction(1)}).substitute(images) for c in mon_d}
        reduced_monomials = sorted({mono for poly in reduced.values() for mono in poly.terms}, reverse=True)
        rmcol = {mono: i for i, mono in enumerate(reduced_monomials)}
        for b in monomials_of_degree(l, m - 1):
            block = [[Fraction(0)] * ncols for _ in reduced_monomials]
            for i in range(l):
                if normal[i] == 0:
                    continue
                a = tuple(b[k] + (k == i) for k in range(l))
                w = Fraction(normal[i] * midx_factorial(a))
                for c in mon_d:
                    for mono, cv in reduced[c].terms.items():
                        block[rmcol[mono]][col[(a, c)]] += w * cv
            rows.extend(block)

    int_rows = []
    for row in rows:
        if any(row):
            den = 1
            for v in row:
                den = den * v.denominator // gcd(den, v.denominator)
            int_rows.append([int(v * den) for v in row])
    return ncols - rank_int(int_rows)


# -- Hilbert-series consistency ----------------------------------------------------


@dataclass(frozen=True)
class OracleReport:
    """Per-degree comparison of oracle dimensions with the free-module prediction."""

    rows: tuple[tuple[int, int, int], ...]  # (degree, oracle, predicted)
    consistent: bool

    def to_json(self) -> dict:
        return {
            "table": [{"d": d, "dim": dim, "predicted": pred} for d, dim, pred in self.rows],
            "verdict": "consistent" if self.consistent else "inconsistent",
        }


def hilbert_check(arr: Arrangement, m: int, exponents, d_max: int) -> OracleReport:
    """Compare oracle dimensions against sum_i s_{d - e_i} for d <= d_max."""
    exps = list(exponents)
    rows = []
    ok = True
    for d in range(d_max + 1):
        dim = oracle_dim(arr, m, d)
        pred = sum(s_dim(d - e, arr.dim) for e in exps)
        rows.append((d, dim, pred))
        ok = ok and dim == pred
    return OracleReport(tuple(rows), ok)


# -- combinatorial identities -------------------------------------------------------


def check_identities(ext: ExtendedArrangement) -> dict:
    """Exact counting identities tying the extension's flats to the module rank."""
    base = ext.base
    if not base.is_essential():
        raise NotEssential("identity checks need an essential base arrangement")
    full = ext.full
    m = ext.m
    profiles = flat_profiles(ext)

    lhs_rank = s_dim(m, 3)
    rhs_rank = sum(s_dim(p.max_order, 3) for p in profiles)

    n = base.n
    n_full = full.n
    lhs_pairs = (n_full - 1) * n
    rhs_pairs = sum((len(p.flat.local_indices) - 1) * p.base_local_count for p in profiles)

    report = {
        "rank_identity": {"lhs": lhs_rank, "rhs": rhs_rank, "ok": lhs_rank == rhs_rank},
        "pair_identity": {"lhs": lhs_pairs, "rhs": rhs_pairs, "ok": lhs_pairs == rhs_pairs},
    }

    if ext.condition_a:
        added = n_full - n
        expected = len(base.flat_directions()) + comb(added, 2) + n * added
        actual = len(profiles)
        report["flat_count_identity"] = {"lhs": actual, "rhs": expected, "ok": actual == expected}
        new_flat_orders_ok = all(
            p.max_order == 0
            for p in profiles
            if p.base_local_count < 2
        )
        report["new_flats_minimal"] = {"ok": new_flat_orders_ok}

    for key, entry in report.items():
        if not entry["ok"]:
            raise IdentityViolated(f"{key} failed: {entry}")
    return report
