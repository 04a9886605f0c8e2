"""Brute-force conjugacy oracle for small GL_n(F_q).

Enumerates the group literally, splits it into conjugation orbits, and
counts centralizers by commutation.  Deliberately formula-free so it
can referee the product-formula combinatorics in classes.py: the two
sides are matched through companion-block representatives and must
agree class-by-class on sizes and centralizer orders.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import matrices
from .classes import ClassType, group_order, representative_matrix
from .errors import AssertionFailure, ScaleLimit
from .finitefield import FiniteField


@dataclass(frozen=True)
class MatrixCensus:
    q: int
    n: int
    group_order: int
    sizes: tuple[int, ...]            # orbit sizes in discovery order
    centralizers: tuple[int, ...]     # matching centralizer orders
    orbit_of: dict                    # matrix -> orbit index


def _all_matrices(field: FiniteField, n: int):
    order = field.order
    total = order ** (n * n)
    for enc in range(total):
        entries = []
        x = enc
        for _ in range(n * n):
            entries.append(field.element(x % order))
            x //= order
        yield tuple(tuple(entries[i * n : (i + 1) * n]) for i in range(n))


def matrix_census(field: FiniteField, n: int, max_group_order: int = 1000) -> MatrixCensus:
    expected_order = group_order(field.order, n)
    if expected_order > max_group_order:
        raise ScaleLimit(
            f"|GL_{n}(F_{field.order})| = {expected_order} exceeds bound {max_group_order}"
        )
    zero, one = field.zero, field.one
    group = [g for g in _all_matrices(field, n) if matrices.det(g, zero)]
    if len(group) != expected_order:
        raise AssertionFailure(
            f"counted {len(group)} invertible matrices, formula says {expected_order}"
        )
    pairs = [(h, matrices.inverse(h, zero, one)) for h in group]
    orbit_of: dict = {}
    sizes = []
    centralizers = []
    for g in group:
        if g in orbit_of:
            continue
        idx = len(sizes)
        orbit = set()
        for h, hinv in pairs:
            orbit.add(matrices.mat_mul(matrices.mat_mul(h, g, zero), hinv, zero))
        for mat in orbit:
            orbit_of[mat] = idx
        commuting = sum(
            1 for h, _ in pairs
            if matrices.mat_mul(h, g, zero) == matrices.mat_mul(g, h, zero)
        )
        if commuting * len(orbit) != len(group):
            raise AssertionFailure(
                "orbit-stabilizer mismatch in brute-force census",
                witness={"orbit_size": len(orbit), "centralizer": commuting},
            )
        sizes.append(len(orbit))
        centralizers.append(commuting)
    if sum(sizes) != len(group):
        raise AssertionFailure("orbits do not partition the group")
    return MatrixCensus(
        q=field.order,
        n=n,
        group_order=len(group),
        sizes=tuple(sizes),
        centralizers=tuple(centralizers),
        orbit_of=orbit_of,
    )


def census_cross_check(field: FiniteField, n: int, class_types, max_group_order: int = 1000) -> dict:
    """Match every enumerated class type to a brute-force orbit and
    compare sizes and centralizer orders exactly."""
    census = matrix_census(field, n, max_group_order)
    if len(class_types) != len(census.sizes):
        raise AssertionFailure(
            f"{len(class_types)} class types vs {len(census.sizes)} matrix orbits"
        )
    seen = set()
    per_class = []
    for ct in class_types:
        rep = representative_matrix(ct)
        idx = census.orbit_of.get(rep)
        if idx is None:
            raise AssertionFailure(
                f"representative of {ct.label()} is singular or missing", witness=ct.label()
            )
        if idx in seen:
            raise AssertionFailure(
                f"two class types map to one matrix orbit ({ct.label()})", witness=ct.label()
            )
        seen.add(idx)
        if census.sizes[idx] != ct.class_size():
            raise AssertionFailure(
                f"size mismatch for {ct.label()}: census {census.sizes[idx]}, "
                f"formula {ct.class_size()}",
                witness=ct.label(),
            )
        if census.centralizers[idx] != ct.centralizer_order():
            raise AssertionFailure(
                f"centralizer mismatch for {ct.label()}", witness=ct.label()
            )
        per_class.append(
            {
                "label": ct.label(),
                "size": census.sizes[idx],
                "centralizer_order": census.centralizers[idx],
            }
        )
    return {
        "group_order": census.group_order,
        "class_count": len(census.sizes),
        "classes": per_class,
    }
