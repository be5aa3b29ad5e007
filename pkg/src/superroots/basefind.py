"""Simple-system extraction for finite root collections.

Positivity is fixed once and for all by the lexicographic rule (first
nonzero coordinate positive).  The simple roots of that positive system
are the positive vectors that do not split as a sum of two positive
vectors, and the highest root of an irreducible piece is the positive
root that dominates every other in the simple-coordinate partial order.
"""
from __future__ import annotations

from fractions import Fraction as Q

from .errors import BasisMismatch, NotAFiniteRootSystem
from .finite import FiniteRootSet
from .linalg import solve
from .roots import Root


def is_lex_positive(r: Root) -> bool:
    for c in r.coords:
        if c != 0:
            return c > 0
    return False


def positive_roots(rs: FiniteRootSet) -> tuple[Root, ...]:
    return tuple(r for r in rs.nonzero if is_lex_positive(r))


def find_base(rs: FiniteRootSet) -> tuple[Root, ...]:
    """The simple roots of the lexicographic positive system, sorted."""
    pos = positive_roots(rs)
    pos_set = set(pos)
    base = []
    for a in pos:
        if any((a - b) in pos_set for b in pos if b != a and is_lex_positive(a - b)):
            continue
        base.append(a)
    return tuple(sorted(base, key=lambda r: r.key()))


def expand_in_base(base: tuple[Root, ...], target: Root) -> tuple[Q, ...] | None:
    """Coefficients of target over the base vectors, or None if outside."""
    if not base:
        return None
    dim = len(base[0].coords)
    rows = [[b.coords[i] for b in base] for i in range(dim)]
    rhs = [target.coords[i] for i in range(dim)]
    sol = solve([row[:] for row in rows], rhs[:])
    if sol is None:
        return None
    # verify (solve guarantees consistency, but the system may be square-
    # deficient for non-spanning bases; recompute to be safe)
    for i in range(dim):
        acc = Q(0)
        for c, b in zip(sol, base):
            acc += c * b.coords[i]
        if acc != target.coords[i]:
            return None
    return tuple(sol)


def integer_expansion(base: tuple[Root, ...], target: Root) -> tuple[int, ...]:
    coeffs = expand_in_base(base, target)
    if coeffs is None:
        raise BasisMismatch(f"{target} is not in the base span")
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise NotAFiniteRootSystem(f"non-integral expansion coefficient {c}")
        out.append(int(c))
    return tuple(out)


def highest_root(rs: FiniteRootSet, base: tuple[Root, ...] | None = None) -> tuple[Root, tuple[int, ...]]:
    """Dominant positive root of an irreducible collection with its coefficients.

    Raises NotAFiniteRootSystem when no positive root dominates all others,
    which signals a reducible input.
    """
    if base is None:
        base = find_base(rs)
    pos = positive_roots(rs)
    expansions = {r: integer_expansion(base, r) for r in pos}
    best: Root | None = None
    for r, cf in expansions.items():
        if best is None or sum(cf) > sum(expansions[best]):
            best = r
    if best is None:
        raise NotAFiniteRootSystem("no positive roots")
    top = expansions[best]
    for r, cf in expansions.items():
        if any(c > t for c, t in zip(cf, top)):
            raise NotAFiniteRootSystem(
                f"no dominant root: {r} exceeds {best} in some coordinate"
            )
    return best, top
