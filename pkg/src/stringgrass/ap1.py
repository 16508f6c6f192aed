"""Closed formulas for Euler characteristics of quiver Grassmannians of type A~(p,1).

All binomials follow one convention: ``binom(p, q)`` is 0 when ``q < 0``,
``p < 0`` or ``q > p``, and the usual value otherwise (so ``binom(-1, 0) == 0``).

Dimension vectors are 1-indexed in the formulas; the Python tuples are
0-indexed, so ``e[k - 1]`` is e_k.

The general preprojective and preinjective products vanish at one degenerate
dimension vector each (e = 0, resp. e = dim M) where the Grassmannian is a
point.  :func:`chi_preprojective` and :func:`chi_preinjective` add that point
back, matching the Kronecker-delta terms of the p = 1 formulas;
``*_product`` return the bare products.
"""
from __future__ import annotations

import contextlib
import itertools
import math
from typing import Callable, Sequence

from .quiver import PREINJECTIVE, PREPROJECTIVE, REGULAR, Ap1Family, InvalidParameter


def binom(p: int, q: int) -> int:
    if q < 0 or p < 0 or q > p:
        return 0
    return math.comb(p, q)


_binom: Callable[[int, int], int] = binom


@contextlib.contextmanager
def binomial_convention(fn: Callable[[int, int], int]):
    """Temporarily evaluate every formula with ``fn`` in place of :func:`binom`.

    Only meant for fault injection in the verification harness.
    """
    global _binom
    old, _binom = _binom, fn
    try:
        yield
    finally:
        _binom = old


def generalized_binom(p: int, q: int) -> int:
    """The polynomial binomial p(p-1)...(p-q+1)/q!, which is 1 at q = 0 for every p."""
    if q < 0:
        return 0
    num = 1
    for i in range(q):
        num *= p - i
    return num // math.factorial(q)


def chi_flag(e: Sequence[int], r: int, s: int) -> int:
    """prod_{k=r}^{s-2} binom(e_k - e_s, e_{k+1} - e_s); 1 when r > s - 2."""
    if not (1 <= r <= len(e) and 1 <= s <= len(e)):
        raise IndexError(f"flag bounds r={r}, s={s} outside 1..{len(e)}")
    es = e[s - 1]
    out = 1
    for k in range(r, s - 1):
        out *= _binom(e[k - 1] - es, e[k] - es)
    return out


def chi_flag_alt(e: Sequence[int], r: int, s: int) -> int:
    """The same flag count written as prod_{k=r+1}^{s-1} binom(e_r - e_{k+1}, e_k - e_{k+1})."""
    if not (1 <= r <= len(e) and 1 <= s <= len(e)):
        raise IndexError(f"flag bounds r={r}, s={s} outside 1..{len(e)}")
    er = e[r - 1]
    out = 1
    for k in range(r + 1, s):
        out *= _binom(er - e[k], e[k - 1] - e[k])
    return out


def _check(p: int, n: int, e: Sequence[int], t: int | None = None, n_min: int = 0):
    if p < 1:
        raise InvalidParameter(f"p must be >= 1, got {p}")
    if n < n_min:
        raise InvalidParameter(f"n must be >= {n_min}, got {n}")
    if t is not None and not 1 <= t <= p:
        raise InvalidParameter(f"t must lie in 1..{p}, got {t}")
    if len(e) != p + 1:
        raise InvalidParameter(f"dimension vector needs {p + 1} entries, got {len(e)}")


def _in_box(e, dims) -> bool:
    return all(0 <= x <= d for x, d in zip(e, dims))


def preprojective_product(p: int, n: int, t: int, e: Sequence[int]) -> int:
    _check(p, n, e, t)
    e1, et, et1, ep = e[0], e[t - 1], e[t], e[p]
    b = _binom
    return (
        b(e1 - 1, ep)
        * b(n + 1 - et, e1 - et)
        * b(n + 1 - et1, et - et1)
        * b(n - ep, et1 - ep)
        * chi_flag(e, 1, t)
        * chi_flag(e, t + 1, p + 1)
    )


def preinjective_product(p: int, n: int, t: int, e: Sequence[int]) -> int:
    _check(p, n, e, t)
    e1, et, et1, ep = e[0], e[t - 1], e[t], e[p]
    b = _binom
    return (
        b(n - ep, e1 - ep)
        * b(et1, ep)
        * b(et + 1, et1)
        * b(e1, et)
        * chi_flag(e, 1, t)
        * chi_flag(e, t + 1, p + 1)
    )


def chi_preprojective(p: int, n: int, t: int, e: Sequence[int]) -> int:
    """chi_e of the preprojective M_p^n([1,t]); e = 0 is the lone correction."""
    e = tuple(e)
    _check(p, n, e, t)
    if not _in_box(e, Ap1Family(p, n, PREPROJECTIVE, t).dims()):
        return 0
    return preprojective_product(p, n, t, e) + int(not any(e))


def chi_preinjective(p: int, n: int, t: int, e: Sequence[int]) -> int:
    """chi_e of the preinjective M_p^n([1,t]); e = dim M is the lone correction."""
    e = tuple(e)
    _check(p, n, e, t)
    dims = Ap1Family(p, n, PREINJECTIVE, t).dims()
    if not _in_box(e, dims):
        return 0
    return preinjective_product(p, n, t, e) + int(e == dims)


def chi_regular(p: int, n: int, e: Sequence[int]) -> int:
    """chi_e of the regular homogeneous Reg_p^n(lambda), for any eigenvalue lambda."""
    e = tuple(e)
    _check(p, n, e, n_min=1)
    if not _in_box(e, (n,) * (p + 1)):
        return 0
    e1, ep = e[0], e[p]
    return _binom(e1, ep) * _binom(n - ep, e1 - ep) * chi_flag(e, 1, p + 1)


def _kron(n: int, e: Sequence[int], n_min: int = 0):
    if n < n_min:
        raise InvalidParameter(f"n must be >= {n_min}, got {n}")
    if len(e) != 2:
        raise InvalidParameter(f"Kronecker dimension vectors have 2 entries, got {len(e)}")
    return int(e[0]), int(e[1])


def _delta(a: int, b: int) -> int:
    return int(a == b)


def chi_kronecker_preprojective(n: int, e: Sequence[int]) -> int:
    e1, e2 = _kron(n, e)
    b = _binom
    return b(n + 1 - e2, n + 1 - e1) * b(e1 - 1, e2) + _delta(e1, 0) * _delta(e2, 0)


def chi_kronecker_preinjective(n: int, e: Sequence[int]) -> int:
    e1, e2 = _kron(n, e)
    b = _binom
    return b(e1 + 1, e2) * b(n - e2, n - e1) + _delta(e1, n) * _delta(e2, n + 1)


def chi_kronecker_regular(n: int, e: Sequence[int]) -> int:
    """Regular Kronecker formula; n = 0 evaluates to the zero module's table."""
    e1, e2 = _kron(n, e)
    return _binom(n - e2, n - e1) * _binom(e1, e2)


def chi_family(fam: Ap1Family, e: Sequence[int]) -> int:
    if fam.kind == PREPROJECTIVE:
        return chi_preprojective(fam.p, fam.n, fam.t, e)
    if fam.kind == PREINJECTIVE:
        return chi_preinjective(fam.p, fam.n, fam.t, e)
    return chi_regular(fam.p, fam.n, e)


def chi_kronecker_family(fam: Ap1Family, e: Sequence[int]) -> int:
    if fam.p != 1:
        raise InvalidParameter("Kronecker formulas need p = 1")
    if fam.kind == PREPROJECTIVE:
        return chi_kronecker_preprojective(fam.n, e)
    if fam.kind == PREINJECTIVE:
        return chi_kronecker_preinjective(fam.n, e)
    return chi_kronecker_regular(fam.n, e)


def reflect(e: Sequence[int], dims: Sequence[int]) -> tuple[int, ...]:
    """(d_{p+1} - e_{p+1}, ..., d_1 - e_1): the dimension vector seen through duality."""
    return tuple(d - x for x, d in zip(reversed(e), reversed(dims)))


# --- subsets of [1, n] by number of connected components ------------------


def count_subsets_with_components(n: int, r: int, c: int, contains_n: bool | None = None) -> int:
    """Number of r-subsets of {1..n} made of exactly c maximal intervals.

    ``contains_n`` restricts to subsets that do (True) or do not (False)
    contain n.  The empty set (r = 0) has zero components.
    """
    if not 0 <= r <= n:
        raise InvalidParameter(f"need 0 <= r <= n, got r={r}, n={n}")
    if r == 0:
        return int(c == 0 and contains_n is not True)
    b = _binom
    if contains_n is None:
        return b(r - 1, c - 1) * b(n + 1 - r, c)
    if contains_n:
        return b(r - 1, c - 1) * b(n - r, c - 1)
    return b(r - 1, c - 1) * b(n - r, c)


def components(subset) -> int:
    """Number of maximal runs of consecutive integers in ``subset``."""
    s = set(subset)
    return sum(1 for x in s if x - 1 not in s)


def brute_subsets_with_components(n: int, r: int, c: int, contains_n: bool | None = None) -> int:
    total = 0
    for J in itertools.combinations(range(1, n + 1), r):
        if components(J) != c:
            continue
        if contains_n is not None and (n in J) != contains_n:
            continue
        total += 1
    return total


FAMILY_KINDS = (PREPROJECTIVE, PREINJECTIVE, REGULAR)
