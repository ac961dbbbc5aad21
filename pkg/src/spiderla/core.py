"""Spider graphs: signatures, vertex/edge indexing, and induced colors.

A spider is a tree obtained by gluing ``d`` paths (legs) at a common core
vertex.  A leg of length ``y`` contributes ``y`` edges.  Leg vertices are
indexed from the pendant end (position 1) toward the core; edge ``(i, p)``
joins vertex ``(i, p)`` to vertex ``(i, p + 1)``, where ``(i, y_i + 1)``
is identified with the core.  This one fixed orientation is used
everywhere; constructors that think of a leg the other way round reverse
their own rows.

All values in this module are immutable after construction and safe to
share across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

CORE = "u"

Vertex = Union[str, tuple[int, int]]
Edge = tuple[int, int]


@dataclass(frozen=True)
class SpiderSignature:
    """Ordered list of leg lengths (edge counts per leg)."""

    legs: tuple[int, ...]

    def __post_init__(self) -> None:
        legs = tuple(int(y) for y in self.legs)
        object.__setattr__(self, "legs", legs)
        if len(legs) < 2:
            raise ValueError(f"a spider needs at least 2 legs, got {legs!r}")
        if any(y < 1 for y in legs):
            raise ValueError(f"leg lengths must be >= 1, got {legs!r}")

    @property
    def d(self) -> int:
        return len(self.legs)

    @property
    def q(self) -> int:
        return sum(self.legs)

    def __iter__(self):
        return iter(self.legs)

    def __str__(self) -> str:
        return format_signature(self)


def signature(legs: Iterable[int]) -> SpiderSignature:
    return SpiderSignature(tuple(legs))


def canonical_signature(sig: SpiderSignature) -> SpiderSignature:
    """Sort legs non-decreasingly.  Idempotent; spiders are isomorphic up
    to leg reordering, and canonicalization is always explicit."""
    return SpiderSignature(tuple(sorted(sig.legs)))


_TERM_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


def parse_signature(text: str) -> SpiderSignature:
    """Parse ``INT ("^" INT)? ("," INT ("^" INT)?)*``, e.g. "2^4,3^2".

    Exponents are expanded at parse time: "2^4,3^2" == "2,2,2,2,3,3".
    """
    legs: list[int] = []
    for term in text.split(","):
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"bad signature term {term!r} in {text!r}")
        length = int(m.group(1))
        count = int(m.group(2)) if m.group(2) else 1
        if count < 1:
            raise ValueError(f"exponent must be >= 1 in {term!r}")
        legs.extend([length] * count)
    return SpiderSignature(tuple(legs))


def format_signature(sig: SpiderSignature) -> str:
    """Render with exponent sugar for runs of equal lengths."""
    parts = []
    legs = sig.legs
    i = 0
    while i < len(legs):
        j = i
        while j < len(legs) and legs[j] == legs[i]:
            j += 1
        parts.append(f"{legs[i]}^{j - i}" if j - i > 1 else str(legs[i]))
        i = j
    return ",".join(parts)


class SpiderGraph:
    """Concrete vertex/edge model of a spider.

    Vertices: the core ``"u"`` plus ``(i, j)`` for leg ``i`` (1-based) and
    position ``j`` in ``[1, y_i]``.  Edges are ``(i, p)`` with position 1
    at the pendant end.  Orders are deterministic (leg-major).
    """

    def __init__(self, sig: SpiderSignature):
        self.signature = sig
        legs = sig.legs
        self.edges: tuple[Edge, ...] = tuple(
            (i, p) for i in range(1, len(legs) + 1) for p in range(1, legs[i - 1] + 1)
        )
        verts: list[Vertex] = [
            (i, j) for i in range(1, len(legs) + 1) for j in range(1, legs[i - 1] + 1)
        ]
        verts.append(CORE)
        self.vertices: tuple[Vertex, ...] = tuple(verts)
        self._incident: dict[Vertex, tuple[Edge, ...]] = {}
        for v in self.vertices:
            self._incident[v] = ()
        for e in self.edges:
            a, b = self.endpoints(e)
            self._incident[a] += (e,)
            self._incident[b] += (e,)

    @property
    def d(self) -> int:
        return self.signature.d

    @property
    def q(self) -> int:
        return self.signature.q

    def endpoints(self, e: Edge) -> tuple[Vertex, Vertex]:
        i, p = e
        y = self.signature.legs[i - 1]
        a: Vertex = (i, p)
        b: Vertex = CORE if p == y else (i, p + 1)
        return a, b

    def incident(self, v: Vertex) -> tuple[Edge, ...]:
        return self._incident[v]

    def degree(self, v: Vertex) -> int:
        return len(self._incident[v])

    def pendants(self) -> tuple[Vertex, ...]:
        return tuple(v for v in self.vertices if self.degree(v) == 1)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(v) for v in self.vertices))


def build_spider(sig: SpiderSignature) -> SpiderGraph:
    """Build the spider for ``sig``; legs keep their input order."""
    return SpiderGraph(sig)


@dataclass(frozen=True)
class EdgeLabeling:
    """Assignment of an integer label to every edge (bijectivity onto
    [1, q] is the verifier's concern, not enforced here)."""

    label: Mapping[Edge, int] = field(hash=False)

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int]]) -> "EdgeLabeling":
        """Rows list one leg each, labels ordered pendant to core."""
        lab: dict[Edge, int] = {}
        for i, row in enumerate(rows, start=1):
            for p, value in enumerate(row, start=1):
                lab[(i, p)] = int(value)
        return EdgeLabeling(lab)

    def rows(self, sig: SpiderSignature) -> list[list[int]]:
        return [
            [self.label[(i, p)] for p in range(1, y + 1)]
            for i, y in enumerate(sig.legs, start=1)
        ]


@dataclass(frozen=True)
class InducedColoring:
    """Per-vertex sums of incident edge labels."""

    color: Mapping[Vertex, int] = field(hash=False)

    @property
    def distinct_colors(self) -> frozenset[int]:
        return frozenset(self.color.values())

    @property
    def count(self) -> int:
        return len(self.distinct_colors)


def induced_colors(g: SpiderGraph, f: EdgeLabeling) -> InducedColoring:
    """Sum the labels of the edges incident to each vertex.

    Raises ValueError if any edge of ``g`` is missing from ``f``.
    """
    missing = [e for e in g.edges if e not in f.label]
    if missing:
        raise ValueError(f"labeling is missing edges {missing[:3]!r}")
    color: dict[Vertex, int] = {}
    for v in g.vertices:
        color[v] = sum(f.label[e] for e in g.incident(v))
    return InducedColoring(color)
