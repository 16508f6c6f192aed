"""Quivers, representations and the standard families used throughout the package.

A representation stores, for every arrow, a sparse matrix in the standard basis
of the vertex spaces: a tuple of ``(row, col, value)`` triples with 1-based
indices and nonzero :class:`fractions.Fraction` values.  Basis vector ``b`` of
vertex ``i`` is written ``(i, b)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Entry = tuple[int, int, Fraction]
DimLike = Union[Mapping[int, int], Sequence[int]]


class RepresentationError(ValueError):
    """Base class for structural problems with a quiver or a representation."""


class InvalidParameter(RepresentationError):
    pass


class IndexOutOfRange(RepresentationError):
    pass


class DuplicateEntry(RepresentationError):
    pass


class ZeroStoredValue(RepresentationError):
    pass


class DimensionMismatch(RepresentationError):
    pass


@dataclass(frozen=True)
class Arrow:
    label: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "arrows", tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows)
        )
        if len(set(self.vertices)) != len(self.vertices):
            raise RepresentationError(f"duplicate vertex ids in {self.vertices}")
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise RepresentationError(f"duplicate arrow labels in {labels}")
        known = set(self.vertices)
        for a in self.arrows:
            if a.source not in known or a.target not in known:
                raise RepresentationError(
                    f"arrow {a.label!r}: {a.source}->{a.target} uses an undeclared vertex"
                )

    def position(self, vertex: int) -> int:
        """Index of ``vertex`` in declaration order."""
        return self.vertices.index(vertex)

    def arrow(self, label: str) -> Arrow:
        for a in self.arrows:
            if a.label == label:
                return a
        raise KeyError(label)


def dimension_vector(quiver: Quiver, e: DimLike) -> tuple[int, ...]:
    """Normalise ``e`` (a mapping or a sequence in declaration order) to a tuple."""
    if isinstance(e, Mapping):
        missing = [v for v in quiver.vertices if v not in e]
        if missing:
            raise DimensionMismatch(f"dimension vector has no entry for vertices {missing}")
        extra = [v for v in e if v not in quiver.vertices]
        if extra:
            raise DimensionMismatch(f"dimension vector mentions unknown vertices {extra}")
        out = tuple(int(e[v]) for v in quiver.vertices)
    else:
        out = tuple(int(x) for x in e)
        if len(out) != len(quiver.vertices):
            raise DimensionMismatch(
                f"dimension vector has length {len(out)}, quiver has {len(quiver.vertices)} vertices"
            )
    return out


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    dims: tuple[int, ...]
    matrices: Mapping[str, tuple[Entry, ...]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "dims", dimension_vector(self.quiver, self.dims))
        mats = {}
        for a in self.quiver.arrows:
            raw = self.matrices.get(a.label, ())
            mats[a.label] = tuple((int(r), int(c), Fraction(v)) for r, c, v in raw)
        unknown = set(self.matrices) - set(mats)
        if unknown:
            raise RepresentationError(f"matrices given for unknown arrows {sorted(unknown)}")
        object.__setattr__(self, "matrices", mats)

    def dim(self, vertex: int) -> int:
        return self.dims[self.quiver.position(vertex)]

    @property
    def total_dimension(self) -> int:
        return sum(self.dims)

    def dense(self, label: str) -> list[list[Fraction]]:
        """The matrix of arrow ``label`` as a dense list of rows."""
        a = self.quiver.arrow(label)
        m = [[Fraction(0)] * self.dim(a.source) for _ in range(self.dim(a.target))]
        for r, c, v in self.matrices[label]:
            m[r - 1][c - 1] = v
        return m


def validate_representation(rep: Representation) -> None:
    """Raise a :class:`RepresentationError` subclass if ``rep`` breaks an invariant."""
    for v, d in zip(rep.quiver.vertices, rep.dims):
        if d < 0:
            raise RepresentationError(f"vertex {v} has negative dimension {d}")
    for a in rep.quiver.arrows:
        rows, cols = rep.dim(a.target), rep.dim(a.source)
        seen = set()
        for r, c, v in rep.matrices[a.label]:
            if not (1 <= r <= rows and 1 <= c <= cols):
                raise IndexOutOfRange(
                    f"arrow {a.label!r}: entry ({r},{c}) outside a {rows}x{cols} matrix"
                )
            if (r, c) in seen:
                raise DuplicateEntry(f"arrow {a.label!r}: entry ({r},{c}) stored twice")
            if v == 0:
                raise ZeroStoredValue(f"arrow {a.label!r}: entry ({r},{c}) stores an explicit zero")
            seen.add((r, c))


def sparse(dense_rows: Sequence[Sequence]) -> tuple[Entry, ...]:
    """Sparse entries of a dense matrix given as rows."""
    return tuple(
        (i + 1, j + 1, Fraction(x))
        for i, row in enumerate(dense_rows)
        for j, x in enumerate(row)
        if x != 0
    )


def _elementary(pairs: Iterable[tuple[int, int]]) -> tuple[Entry, ...]:
    return tuple((i, j, Fraction(1)) for i, j in pairs)


def _identity(n: int) -> tuple[Entry, ...]:
    return _elementary((k, k) for k in range(1, n + 1))


# --- type A~(p,1) ---------------------------------------------------------


def eps(k: int) -> str:
    return f"eps{k}"


def build_q_p1(p: int) -> Quiver:
    """The affine quiver with sink 1, source p+1, arrows eps_k: k+1 -> k and eps_0: p+1 -> 1."""
    if p < 1:
        raise InvalidParameter(f"p must be >= 1, got {p}")
    arrows = [Arrow(eps(k), k + 1, k) for k in range(1, p + 1)]
    arrows.append(Arrow(eps(0), p + 1, 1))
    return Quiver(tuple(range(1, p + 2)), tuple(arrows))


PREPROJECTIVE = "preprojective"
PREINJECTIVE = "preinjective"
REGULAR = "regular"
KINDS = (PREPROJECTIVE, PREINJECTIVE, REGULAR)


@dataclass(frozen=True)
class Ap1Family:
    """An indecomposable of type A~(p,1).

    ``kind`` is one of :data:`KINDS`; ``t`` is only used by the preprojective
    and preinjective kinds.  Regular modules are always built at eigenvalue 0:
    the Euler characteristics of its Grassmannians do not depend on the
    eigenvalue, and a nonzero eigenvalue breaks the one-entry-per-row-and-column
    shape that the counting needs.
    """

    p: int
    n: int
    kind: str
    t: int | None = None

    def __post_init__(self):
        if self.p < 1:
            raise InvalidParameter(f"p must be >= 1, got {self.p}")
        if self.kind not in KINDS:
            raise InvalidParameter(f"unknown kind {self.kind!r}")
        if self.kind == REGULAR:
            if self.n < 1:
                raise InvalidParameter(f"regular modules need n >= 1, got {self.n}")
        else:
            if self.n < 0:
                raise InvalidParameter(f"n must be >= 0, got {self.n}")
            if self.t is None or not 1 <= self.t <= self.p:
                raise InvalidParameter(f"t must lie in 1..{self.p}, got {self.t}")

    def dims(self) -> tuple[int, ...]:
        p, n, t = self.p, self.n, self.t
        if self.kind == PREPROJECTIVE:
            return tuple(n + 1 if i <= t else n for i in range(1, p + 2))
        if self.kind == PREINJECTIVE:
            return tuple(n if i <= t else n + 1 for i in range(1, p + 2))
        return (n,) * (p + 1)


def build_ap1_module(fam: Ap1Family) -> Representation:
    """The representation of ``fam`` in its standard monomial basis.

    phi_1, phi_2 : k^n -> k^{n+1} send basis vector k to k and to k+1.
    Preprojective(t) carries phi_1 on eps_t and phi_2 on eps_0; preinjective(t)
    carries phi_2^T on eps_t and phi_1^T on eps_0; regular carries the nilpotent
    Jordan block (k -> k-1) on eps_0.  Every other arrow is an identity.
    """
    p, n, t = fam.p, fam.n, fam.t
    quiver = build_q_p1(p)
    dims = fam.dims()
    phi1 = _elementary((k, k) for k in range(1, n + 1))
    phi2 = _elementary((k + 1, k) for k in range(1, n + 1))
    phi1_t = _elementary((k, k) for k in range(1, n + 1))
    phi2_t = _elementary((k, k + 1) for k in range(1, n + 1))
    mats = {}
    for k in range(1, p + 1):
        mats[eps(k)] = _identity(dims[k - 1])
    if fam.kind == PREPROJECTIVE:
        mats[eps(t)] = phi1
        mats[eps(0)] = phi2
    elif fam.kind == PREINJECTIVE:
        mats[eps(t)] = phi2_t
        mats[eps(0)] = phi1_t
    else:
        mats[eps(0)] = _elementary((k - 1, k) for k in range(2, n + 1))
    return Representation(quiver, dims, mats)


def single_vertex(n: int) -> Representation:
    """A bare n-dimensional vector space on the one-vertex quiver."""
    return Representation(Quiver((1,)), (n,))


def table1_fixture(row: int, monomial: bool = True) -> Representation:
    """The six worked examples of representations and coefficient quivers.

    Row 1 has two isomorphic presentations; ``monomial=False`` returns the one
    with matrix [1, 1]^T, which has two nonzeros in one column.
    """
    # E_ij below sends basis vector j to basis vector i
    if row == 1:
        q = Quiver((1, 2), (Arrow("a", 1, 2),))
        m = sparse([[1], [1]]) if not monomial else sparse([[1], [0]])
        return Representation(q, (1, 2), {"a": m})
    if row == 2:
        q = Quiver((1, 2), (Arrow("a", 2, 1), Arrow("b", 2, 1)))
        return Representation(q, (1, 1), {"a": _identity(1), "b": _identity(1)})
    if row == 3:
        q = Quiver((1, 2, 3), (Arrow("a", 2, 1), Arrow("b", 3, 2), Arrow("c", 3, 1)))
        return Representation(
            q,
            (2, 2, 1),
            {"a": _identity(2), "b": sparse([[1], [0]]), "c": sparse([[0], [1]])},
        )
    if row == 4:
        q = Quiver((1, 2), (Arrow("a", 2, 1), Arrow("b", 2, 1)))
        return Representation(q, (2, 2), {"a": _identity(2), "b": _elementary([(1, 2)])})
    if row in (5, 6):
        q = Quiver((1,), (Arrow("a", 1, 1), Arrow("b", 1, 1)))
        a = [(2, 1), (4, 3)] if row == 5 else [(2, 1), (3, 4)]
        return Representation(q, (4,), {"a": _elementary(a), "b": _elementary([(3, 2)])})
    raise InvalidParameter(f"table row must be in 1..6, got {row}")


# --- JSON -----------------------------------------------------------------


def representation_to_dict(rep: Representation) -> dict:
    q = rep.quiver
    return {
        "vertices": list(q.vertices),
        "arrows": [{"label": a.label, "source": a.source, "target": a.target} for a in q.arrows],
        "dims": {str(v): d for v, d in zip(q.vertices, rep.dims)},
        "matrices": {
            label: [{"row": r, "col": c, "value": str(v)} for r, c, v in entries]
            for label, entries in rep.matrices.items()
        },
    }


def representation_from_dict(data: Mapping) -> Representation:
    """Inverse of :func:`representation_to_dict`; the result is validated."""
    try:
        vertices = tuple(int(v) for v in data["vertices"])
        arrows = tuple(
            Arrow(str(a["label"]), int(a["source"]), int(a["target"])) for a in data["arrows"]
        )
        dims = {int(k): int(v) for k, v in data["dims"].items()}
        matrices = {
            str(label): tuple(
                (int(x["row"]), int(x["col"]), Fraction(str(x["value"]))) for x in entries
            )
            for label, entries in data.get("matrices", {}).items()
        }
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise RepresentationError(f"malformed representation: {exc}") from exc
    q = Quiver(vertices, arrows)
    rep = Representation(q, dimension_vector(q, dims), matrices)
    validate_representation(rep)
    return rep


def dumps(rep: Representation) -> str:
    return json.dumps(representation_to_dict(rep), indent=2)


def loads(text: str) -> Representation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RepresentationError(f"not valid JSON: {exc}") from exc
    return representation_from_dict(data)


def load(path) -> Representation:
    with open(path) as fh:
        return loads(fh.read())
