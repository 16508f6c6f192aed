"""Counting coordinate subrepresentations and successor-closed subquivers.

Three independent routes produce the same numbers:

* :func:`coordinate_table` works on the matrices: it picks a subset of the
  basis at every vertex and checks that each arrow maps the chosen span into
  the chosen span.
* :func:`successor_closed_table` works on the coefficient quiver, with a
  linear-time dynamic programme along each chain of a string module and a
  propagating backtracker for anything else.
* :func:`oracle_table` tests closure of every subset of the coefficient
  quiver's vertices (vectorised with numpy; at most 24 vertices).

Dimension vectors are tuples in the declaration order of the quiver's
vertices.  Internally a partial dimension vector is packed into one integer in
mixed radix ``dims[i] + 1``; components partition the basis so sums of packed
keys never carry.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .coefficient import (
    Chain,
    CoefficientQuiver,
    chain_components,
    build_coefficient_quiver,
    check_monomial,
)
from .quiver import DimensionMismatch, Representation, RepresentationError

ORACLE_LIMIT = 24


class NotMonomial(RepresentationError):
    pass


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class ChiTable:
    """Counts chi_e for every dimension vector e; only nonzero counts are stored."""

    vertices: tuple[int, ...]
    dims: tuple[int, ...]
    counts: dict = field(default_factory=dict)

    def __getitem__(self, e) -> int:
        return self.counts.get(tuple(e), 0)

    def box(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(range(d + 1) for d in self.dims))

    def total(self) -> int:
        return sum(self.counts.values())

    def marginal(self, i: int) -> dict[int, int]:
        """Sum of counts grouped by the i-th coordinate of e."""
        out = defaultdict(int)
        for e, c in self.counts.items():
            out[e[i]] += c
        return dict(sorted(out.items()))

    def convolve(self, other: "ChiTable") -> "ChiTable":
        """Table of the direct sum: the product of generating polynomials."""
        if self.vertices != other.vertices:
            raise DimensionMismatch("tables over different quivers")
        out = _sparse_convolve(self.counts, other.counts, len(self.vertices))
        dims = tuple(x + y for x, y in zip(self.dims, other.dims))
        return ChiTable(self.vertices, dims, dict(sorted(out.items())))

    def to_rows(self, zeros: bool = True) -> list[dict]:
        keys = self.box() if zeros else sorted(self.counts)
        return [{"e": list(e), "chi": str(self[e])} for e in keys]

    def to_json(self, zeros: bool = True) -> str:
        return json.dumps(
            {"vertices": list(self.vertices), "dims": list(self.dims), "rows": self.to_rows(zeros)},
            indent=2,
        )

    def to_csv(self, zeros: bool = True) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"e_{v}" for v in self.vertices] + ["chi"])
        for e in self.box() if zeros else sorted(self.counts):
            w.writerow(list(e) + [self[e]])
        return buf.getvalue()

    def polynomial(self, var: str = "x") -> str:
        """Generating polynomial sum_e chi_e x^e, terms by total degree then lexicographically."""
        terms = []
        for e in sorted(self.counts, key=lambda e: (sum(e), e)):
            c = self.counts[e]
            mono = "*".join(
                f"{var}{v}" if k == 1 else f"{var}{v}^{k}"
                for v, k in zip(self.vertices, e)
                if k
            )
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


# --- helpers --------------------------------------------------------------


class _Packing:
    def __init__(self, dims: Sequence[int]):
        self.dims = tuple(dims)
        self.strides = []
        s = 1
        for d in self.dims:
            self.strides.append(s)
            s *= d + 1

    def digit(self, key: int, i: int) -> int:
        return (key // self.strides[i]) % (self.dims[i] + 1)

    def unpack(self, key: int) -> tuple[int, ...]:
        return tuple(self.digit(key, i) for i in range(len(self.dims)))


def _normalise_e(dims: Sequence[int], e) -> tuple[int, ...] | None:
    """Tuple form of ``e``, or None if it lies outside the box [0, dims]."""
    e = tuple(int(x) for x in e)
    if len(e) != len(dims):
        raise DimensionMismatch(f"dimension vector {e} does not match {len(dims)} vertices")
    if any(x < 0 or x > d for x, d in zip(e, dims)):
        return None
    return e


def _sparse_convolve(a: dict, b: dict, width: int) -> dict:
    """Product of two tables keyed by length-``width`` tuples: keys add, counts multiply.

    Large products add shifted copies of a dense array for ``b``; counts stay
    exact (int64 when the bound allows, Python ints otherwise).
    """
    if len(a) > len(b):
        a, b = b, a
    if not a:
        return {}
    if width == 0 or len(a) * len(b) <= 4096:
        out = defaultdict(int)
        for e, c in a.items():
            for f, d in b.items():
                out[tuple(x + y for x, y in zip(e, f))] += c * d
        return dict(out)
    lo_a = [min(k[i] for k in a) for i in range(width)]
    hi_a = [max(k[i] for k in a) for i in range(width)]
    lo_b = [min(k[i] for k in b) for i in range(width)]
    hi_b = [max(k[i] for k in b) for i in range(width)]
    bound = max(a.values()) * max(b.values()) * len(a)
    dtype = np.int64 if bound < 2**62 else object
    dense = np.zeros([h - l + 1 for l, h in zip(lo_b, hi_b)], dtype=dtype)
    for k, c in b.items():
        dense[tuple(x - l for x, l in zip(k, lo_b))] = c
    out = np.zeros([ha - la + hb - lb + 1 for la, ha, lb, hb in zip(lo_a, hi_a, lo_b, hi_b)], dtype=dtype)
    for k, c in a.items():
        window = tuple(slice(x - l, x - l + s) for x, l, s in zip(k, lo_a, dense.shape))
        out[window] += c * dense
    shift = [la + lb for la, lb in zip(lo_a, lo_b)]
    return {
        tuple(int(x) + s for x, s in zip(idx, shift)): int(out[tuple(idx)])
        for idx in np.argwhere(out)
    }


def _tables_product(tables: list[dict], base: dict, pack: _Packing) -> dict:
    acc = base
    width = len(pack.dims)
    for t in tables:
        if len(acc) * len(t) <= 4096:
            nxt = defaultdict(int)
            for k1, c1 in acc.items():
                for k2, c2 in t.items():
                    nxt[k1 + k2] += c1 * c2
            acc = nxt
        else:
            wide = _sparse_convolve(
                {pack.unpack(k): c for k, c in acc.items()},
                {pack.unpack(k): c for k, c in t.items()},
                width,
            )
            acc = {sum(x * s for x, s in zip(e, pack.strides)): c for e, c in wide.items()}
    return acc


def _cap_filter(table: dict, pack: _Packing, cap) -> dict:
    if cap is None:
        return table
    return {k: c for k, c in table.items() if all(pack.digit(k, i) <= cap[i] for i in range(len(cap)))}


# --- chain dynamic programme ----------------------------------------------


def _chain_table(chain: Chain, qpos: dict, pack: _Packing, cap=None) -> dict:
    """Packed dimension vector -> number of successor-closed subsets of one chain."""
    strides = pack.strides

    def shifted(src: dict, vertex) -> dict:
        i = qpos[vertex[0]]
        s = strides[i]
        if cap is None:
            return {k + s: c for k, c in src.items()}
        return {k + s: c for k, c in src.items() if pack.digit(k, i) < cap[i]}

    first = chain.vertices[0]
    out_prev = {0: 1}
    in_prev = shifted({0: 1}, first)
    for (_, forward), v in zip(chain.steps, chain.vertices[1:]):
        # forward: prev -> v, so prev in => v in; backward: v in => prev in
        new_out = dict(out_prev)
        if not forward:
            for k, c in in_prev.items():
                new_out[k] = new_out.get(k, 0) + c
        src = dict(in_prev)
        if forward:
            for k, c in out_prev.items():
                src[k] = src.get(k, 0) + c
        out_prev, in_prev = new_out, shifted(src, v)
    total = dict(out_prev)
    for k, c in in_prev.items():
        total[k] = total.get(k, 0) + c
    return total


# --- general backtracking -------------------------------------------------


def _closures(n: int, succ: list[list[int]]) -> tuple[list[int], list[int]]:
    pred = [[] for _ in range(n)]
    for v, ws in enumerate(succ):
        for w in ws:
            pred[w].append(v)

    def reach(adj):
        out = []
        for v in range(n):
            mask, stack = 1 << v, [v]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if not mask >> y & 1:
                        mask |= 1 << y
                        stack.append(y)
            out.append(mask)
        return out

    return reach(succ), reach(pred)


def _backtrack_table(cq: CoefficientQuiver, pack: _Packing, cap=None) -> dict:
    n = len(cq.vertices)
    qpos = {v: i for i, v in enumerate(cq.q_vertices)}
    down, up = _closures(n, cq.successors())
    vstride = [pack.strides[qpos[qv]] for qv, _ in cq.vertices]
    qmask = [0] * len(cq.q_vertices)
    for idx, (qv, _) in enumerate(cq.vertices):
        qmask[qpos[qv]] |= 1 << idx
    full = (1 << n) - 1
    table = defaultdict(int)

    def key_of(mask):
        k = 0
        while mask:
            low = mask & -mask
            k += vstride[low.bit_length() - 1]
            mask ^= low
        return k

    def feasible(inside, outside):
        if cap is None:
            return True
        for i, m in enumerate(qmask):
            if (inside & m).bit_count() > cap[i] or (m & ~outside).bit_count() < cap[i]:
                return False
        return True

    def rec(inside, outside, key):
        free = full & ~(inside | outside)
        if not free:
            table[key] += 1
            return
        v = (free & -free).bit_length() - 1
        new_in = down[v] & ~inside
        if feasible(inside | new_in, outside):
            rec(inside | new_in, outside, key + key_of(new_in))
        new_out = up[v]
        if feasible(inside, outside | new_out):
            rec(inside, outside | new_out, key)

    if feasible(0, 0):
        rec(0, 0, 0)
    return dict(table)


# --- exhaustive oracle ----------------------------------------------------


def oracle_table(cq: CoefficientQuiver) -> ChiTable:
    """Count closed subsets by testing every subset of the vertex set."""
    n = len(cq.vertices)
    if n > ORACLE_LIMIT:
        raise TooLarge(f"exhaustive oracle limited to {ORACLE_LIMIT} vertices, got {n}")
    dims = cq.basis_counts()
    qpos = {v: i for i, v in enumerate(cq.q_vertices)}
    succ_mask = [0] * n
    for v, ws in enumerate(cq.successors()):
        for w in ws:
            succ_mask[v] |= 1 << w
    qmask = [0] * len(dims)
    for idx, (qv, _) in enumerate(cq.vertices):
        qmask[qpos[qv]] |= 1 << idx
    radix = np.cumprod([1] + [d + 1 for d in dims[:-1]], dtype=np.int64) if dims else []
    counts = defaultdict(int)
    chunk = 1 << 20
    for lo in range(0, 1 << n, chunk):
        m = np.arange(lo, min(lo + chunk, 1 << n), dtype=np.int64)
        closed = np.ones(m.shape, dtype=bool)
        for v in range(n):
            if succ_mask[v]:
                has_v = (m >> v) & 1 == 1
                closed &= ~has_v | ((m & succ_mask[v]) == succ_mask[v])
        m = m[closed]
        key = np.zeros(m.shape, dtype=np.int64)
        for i, qm in enumerate(qmask):
            key += np.bitwise_count(m & qm).astype(np.int64) * radix[i]
        ks, cs = np.unique(key, return_counts=True)
        for k, c in zip(ks.tolist(), cs.tolist()):
            counts[k] += c
    pack = _Packing(dims)
    return ChiTable(
        cq.q_vertices, dims, {pack.unpack(k): c for k, c in sorted(counts.items())}
    )


def count_oracle(cq: CoefficientQuiver, e) -> int:
    if len(cq.vertices) > ORACLE_LIMIT:
        raise TooLarge(f"exhaustive oracle limited to {ORACLE_LIMIT} vertices")
    e = _normalise_e(cq.basis_counts(), e)
    if e is None:
        return 0
    return oracle_table(cq)[e]


# --- coefficient quiver ---------------------------------------------------


def _successor_closed_packed(cq: CoefficientQuiver, cap=None, method: str = "auto"):
    dims = cq.basis_counts()
    pack = _Packing(dims)
    chains = chain_components(cq) if method in ("auto", "dp") else None
    if method == "dp" and chains is None:
        raise ValueError("chain DP needs a coefficient quiver that is a union of chains")
    if chains is not None:
        qpos = {v: i for i, v in enumerate(cq.q_vertices)}
        tables = [_chain_table(ch, qpos, pack, cap) for ch in chains]
        # combine small tables first
        tables.sort(key=len)
        return pack, _cap_filter(_tables_product(tables, {0: 1}, pack), pack, cap)
    if method not in ("auto", "backtrack"):
        raise ValueError(f"unknown method {method!r}")
    return pack, _backtrack_table(cq, pack, cap)


def successor_closed_table(cq: CoefficientQuiver, method: str = "auto") -> ChiTable:
    """All counts of successor-closed vertex subsets, by dimension vector.

    ``method`` is ``"auto"`` (chain DP when possible), ``"dp"``,
    ``"backtrack"`` or ``"oracle"``.
    """
    if method == "oracle":
        return oracle_table(cq)
    pack, table = _successor_closed_packed(cq, None, method)
    counts = {pack.unpack(k): c for k, c in table.items() if c}
    return ChiTable(cq.q_vertices, pack.dims, dict(sorted(counts.items())))


def count_successor_closed(cq: CoefficientQuiver, e, method: str = "auto") -> int:
    e = _normalise_e(cq.basis_counts(), e)
    if e is None:
        return 0
    if method == "oracle":
        return count_oracle(cq, e)
    pack, table = _successor_closed_packed(cq, e, method)
    return table.get(sum(x * s for x, s in zip(e, pack.strides)), 0)


# --- coordinate subrepresentations ----------------------------------------


def _coordinate_counts(rep: Representation, e=None) -> dict:
    q = rep.quiver
    pos = {v: i for i, v in enumerate(q.vertices)}
    # col -> row bit for each arrow; a monomial matrix sends each column to at most one row
    arrows = []
    for a in q.arrows:
        image = [0] * rep.dim(a.source)
        for r, c, v in rep.matrices[a.label]:
            if v != 0:
                image[c - 1] |= 1 << (r - 1)
        arrows.append((pos[a.source], pos[a.target], image))
    checks = defaultdict(list)
    for s, t, image in arrows:
        checks[max(s, t)].append((s, t, image))

    def choices(i):
        d = rep.dims[i]
        if e is None:
            return range(1 << d)
        return [sum(1 << b for b in combo) for combo in itertools.combinations(range(d), e[i])]

    options = [choices(i) for i in range(len(q.vertices))]
    chosen = [0] * len(q.vertices)
    counts = defaultdict(int)

    def maps_into(src_mask, image, dst_mask):
        b = 0
        while src_mask:
            if src_mask & 1 and image[b] & ~dst_mask:
                return False
            src_mask >>= 1
            b += 1
        return True

    def rec(i):
        if i == len(options):
            counts[tuple(m.bit_count() for m in chosen)] += 1
            return
        for m in options[i]:
            chosen[i] = m
            if all(maps_into(chosen[s], image, chosen[t]) for s, t, image in checks[i]):
                rec(i + 1)

    rec(0)
    return dict(counts)


def coordinate_table(rep: Representation) -> ChiTable:
    """Count subrepresentations spanned at every vertex by part of the standard basis."""
    if not check_monomial(rep):
        raise NotMonomial("coordinate subspaces only compute chi_e for monomial representations")
    return ChiTable(rep.quiver.vertices, rep.dims, dict(sorted(_coordinate_counts(rep).items())))


def count_coordinate_subreps(rep: Representation, e) -> int:
    if not check_monomial(rep):
        raise NotMonomial("coordinate subspaces only compute chi_e for monomial representations")
    e = _normalise_e(rep.dims, e)
    if e is None:
        return 0
    return _coordinate_counts(rep, e).get(e, 0)


def chi_table(rep: Representation, method: str = "auto") -> ChiTable:
    """Full table of chi_e(M) for a monomial representation.

    ``method`` picks the route: ``"auto"``, ``"dp"``, ``"backtrack"`` and
    ``"oracle"`` go through the coefficient quiver, ``"coordinate"`` through
    the matrices.  Whether the counts are certified Euler characteristics is
    decided separately by :func:`stringgrass.degrees.solve_degrees`.
    """
    if not check_monomial(rep):
        raise NotMonomial("chi_e is only counted for monomial representations")
    if method == "coordinate":
        return coordinate_table(rep)
    return successor_closed_table(build_coefficient_quiver(rep), method)


def chi(rep: Representation, e, method: str = "auto") -> int:
    if not check_monomial(rep):
        raise NotMonomial("chi_e is only counted for monomial representations")
    if method == "coordinate":
        return count_coordinate_subreps(rep, e)
    return count_successor_closed(build_coefficient_quiver(rep), e, method)
