"""Independent checker for local antimagic labelings.

This is the ground-truth gate for every constructor: it knows nothing
about how a labeling was produced, only whether the labels are a
bijection onto [1, q] and adjacent vertices receive distinct sums.
Failures are report outcomes, never exceptions; the first violation in
deterministic edge order is reported as a witness so golden tests stay
stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import EdgeLabeling, SpiderGraph, build_spider, induced_colors


@dataclass(frozen=True)
class Violation:
    """First failed check: ``kind`` is one of ``bad-label-set``,
    ``adjacent-equal``, ``claim-count-mismatch``, ``claim-set-mismatch``."""

    kind: str
    detail: tuple


@dataclass(frozen=True)
class VerificationReport:
    is_bijection: bool
    is_local_antimagic: bool
    color_count: int
    colors: frozenset[int]
    violation: Optional[Violation] = None

    @property
    def ok(self) -> bool:
        return self.is_local_antimagic and self.violation is None


def verify(g: SpiderGraph, f: EdgeLabeling) -> VerificationReport:
    """Check bijectivity onto [1, q] and properness of the induced sums."""
    labels = [f.label.get(e) for e in g.edges]
    expected = list(range(1, g.q + 1))
    if sorted(x for x in labels if x is not None) != expected or None in labels:
        bad = tuple(sorted(set(x for x in labels if x is not None) - set(expected)))
        return VerificationReport(
            is_bijection=False,
            is_local_antimagic=False,
            color_count=0,
            colors=frozenset(),
            violation=Violation("bad-label-set", bad),
        )
    coloring = induced_colors(g, f)
    colors = coloring.distinct_colors
    for e in g.edges:
        a, b = g.endpoints(e)
        if coloring.color[a] == coloring.color[b]:
            return VerificationReport(
                is_bijection=True,
                is_local_antimagic=False,
                color_count=len(colors),
                colors=colors,
                violation=Violation("adjacent-equal", (a, b, coloring.color[a])),
            )
    return VerificationReport(
        is_bijection=True,
        is_local_antimagic=True,
        color_count=len(colors),
        colors=colors,
    )


def verify_certificate(cert) -> VerificationReport:
    """Verify a certificate's labeling and, when claimed, that the achieved
    color count and color set equal the claims.

    ``cert`` needs attributes ``signature``, ``labeling``,
    ``claimed_color_count`` and ``claimed_colors`` (the latter may be
    None for a labeling-only check).
    """
    g = build_spider(cert.signature)
    report = verify(g, cert.labeling)
    if not report.is_local_antimagic:
        return report
    claimed_count = getattr(cert, "claimed_color_count", None)
    if claimed_count is not None and report.color_count != claimed_count:
        return VerificationReport(
            is_bijection=True,
            is_local_antimagic=True,
            color_count=report.color_count,
            colors=report.colors,
            violation=Violation(
                "claim-count-mismatch", (claimed_count, report.color_count)
            ),
        )
    claimed_colors = getattr(cert, "claimed_colors", None)
    if claimed_colors is not None and frozenset(claimed_colors) != report.colors:
        return VerificationReport(
            is_bijection=True,
            is_local_antimagic=True,
            color_count=report.color_count,
            colors=report.colors,
            violation=Violation(
                "claim-set-mismatch",
                (tuple(sorted(claimed_colors)), tuple(sorted(report.colors))),
            ),
        )
    return report
