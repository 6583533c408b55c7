"""Numerical and polynomial invariants of oriented virtual knot diagrams.

All computations start from an integer labeling of the arcs of the
diagram (the edges between consecutive classical passes).  The label of
the arc alpha is the sum of sgn(c) over the crossings c that are first
met as overcrossings when travelling along the orientation starting at
alpha.  Around a crossing the labels then obey the local rule: passing
the Over entry changes the running label by -sgn(c), passing the Under
entry by +sgn(c).

From the labels:

* index value      Ind(c)   = lambda(over-in arc) - lambda(under-in arc) - sgn(c)
* affine index     P_D(t)   = sum_c sgn(c) (t^Ind(c) - 1)
* n-th writhe      J_n(D)   = sum of sgn(c) over crossings with Ind(c) = n
* n-th dwrithe     dJ_n(D)  = J_n(D) - J_{-n}(D)

and, with D_c the against-orientation smoothing at c (``Diagram.smooth``),
the n-th F-polynomial

    F^n_D(t, l) = sum_c sgn(c) t^Ind(c) l^dJ_n(D_c)
                  - sum_{c in T_n} sgn(c) l^dJ_n(D_c)
                  - sum_{c not in T_n} sgn(c) l^dJ_n(D)

where T_n(D) = { c : |dJ_n(D_c)| = |dJ_n(D)| }.

For n above every index value appearing in D and in its smoothings, all
dwrithes vanish, T_n is the whole crossing set, and F^n collapses to the
affine index polynomial: the sequence stabilizes.  ``f_sequence``
computes the exact bound, one extra stabilized entry, and checks the
collapse.  The invariant content of the sequence is captured by
``FReport.fingerprint`` (entries up to the first stabilized one), which
is what equality of F-sequences means everywhere in this package.

All functions are pure; diagrams are immutable; nothing here shares
mutable state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .gauss import Diagram, UnknownCrossing
from .laurent import LaurentPoly2


class EmptyDiagram(ValueError):
    """An arc-level question was asked of the crossingless unknot diagram."""


class ZeroIndexRequest(ValueError):
    """J_n is only defined for n != 0."""


class NonpositiveN(ValueError):
    """dwrithe / T_n / F^n are only defined for n >= 1."""


class InternalInconsistency(RuntimeError):
    """The stabilization self-check of f_sequence failed (engine bug)."""


def arc_labels(diagram: Diagram) -> list[int]:
    """The integer label of each arc; entry i labels the arc after pass i.

    The label is the first-met-overcrossing sign sum described in the
    module docstring; the local +-sgn rule around each crossing holds
    by construction and is property-tested.
    """
    n = len(diagram)
    if n == 0:
        raise EmptyDiagram("the unknot diagram has no arcs")
    entries = diagram.entries
    # Direct evaluation for arc 0 (the arc between passes 0 and 1) ...
    seen: set[str] = set()
    lam0 = 0
    for i in range(1, n + 1):
        entry = entries[i % n]
        if entry.crossing not in seen:
            seen.add(entry.crossing)
            if entry.over:
                lam0 += entry.sign
    # ... then propagate the local rule around the cycle.
    labels = [0] * n
    labels[0] = lam0
    for i in range(1, n):
        entry = entries[i]
        labels[i] = labels[i - 1] + (-entry.sign if entry.over else entry.sign)
    return labels


def _index_table(diagram: Diagram) -> dict[str, int]:
    """Ind(c) for every crossing; {} for the unknot."""
    if len(diagram) == 0:
        return {}
    n = len(diagram)
    labels = arc_labels(diagram)
    table: dict[str, int] = {}
    for c in diagram.crossings():
        over_in = labels[(diagram.over_position(c) - 1) % n]
        under_in = labels[(diagram.under_position(c) - 1) % n]
        table[c] = over_in - under_in - diagram.sign(c)
    return table


def index_value(diagram: Diagram, crossing: str) -> int:
    """The index value Ind(crossing)."""
    if crossing not in diagram.crossings():
        raise UnknownCrossing(f"no crossing {crossing!r}")
    return _index_table(diagram)[crossing]


def affine_index_polynomial(diagram: Diagram) -> LaurentPoly2:
    """P_D(t) = sum_c sgn(c) (t^Ind(c) - 1); zero on the unknot."""
    ind = _index_table(diagram)
    triples: list[tuple[int, int, int]] = []
    for c, k in ind.items():
        s = diagram.sign(c)
        triples.append((k, 0, s))
        triples.append((0, 0, -s))
    return LaurentPoly2.from_terms(triples)


def _writhe_table(diagram: Diagram) -> dict[int, int]:
    """J_n for every n with a crossing of that index (other n give 0)."""
    table: dict[int, int] = {}
    for c, k in _index_table(diagram).items():
        table[k] = table.get(k, 0) + diagram.sign(c)
    return table


def n_writhe(diagram: Diagram, n: int) -> int:
    """J_n(D): signed count of crossings with index value n (n != 0)."""
    if n == 0:
        raise ZeroIndexRequest("n-th writhe is defined for nonzero n only")
    return _writhe_table(diagram).get(n, 0)


def dwrithe(diagram: Diagram, n: int) -> int:
    """dJ_n(D) = J_n(D) - J_{-n}(D) for n >= 1."""
    if n < 1:
        raise NonpositiveN(f"dwrithe needs n >= 1, got {n}")
    table = _writhe_table(diagram)
    return table.get(n, 0) - table.get(-n, 0)


def index_support(diagram: Diagram) -> frozenset[int]:
    """S(D) = { |Ind(c)| } minus 0; dJ_n vanishes for n outside S(D)."""
    return frozenset(abs(k) for k in _index_table(diagram).values() if k != 0)


@dataclass(frozen=True)
class CrossingReport:
    """Per-crossing data: sign, index value, and smoothed-diagram dwrithes."""

    crossing: str
    sign: int
    index: int
    smoothed_dwrithe: dict[int, int]


@dataclass(frozen=True)
class FReport:
    """The full F-polynomial sequence of a diagram.

    ``per_n`` holds F^n for n = 1 .. n_max+1 where n_max bounds every
    index value of the diagram and of its smoothings; for all larger n
    the value is ``stable_tail`` (the affine index polynomial).  The
    final computed entry equals the tail by construction - this is
    checked, not assumed.
    """

    diagram: Diagram
    n_max: int
    per_n: dict[int, LaurentPoly2]
    stable_tail: LaurentPoly2

    def f_at(self, n: int) -> LaurentPoly2:
        """F^n for any n >= 1, using the stable tail beyond n_max."""
        if n < 1:
            raise NonpositiveN(f"F^n needs n >= 1, got {n}")
        return self.per_n.get(n, self.stable_tail)

    def fingerprint(self) -> tuple[tuple[int, LaurentPoly2], ...]:
        """Entries (n, F^n) up to and including the first entry from
        which the sequence equals the stable tail for good.

        Two diagrams have equal F-sequences (all n at once) exactly when
        their fingerprints are equal, which makes this the comparison
        key for grouping, distinguishing and invariance testing.  This
        is also the presentation convention of the published tables.
        """
        last_live = 0
        for n in range(1, self.n_max + 2):
            if self.per_n[n] != self.stable_tail:
                last_live = n
        return tuple((n, self.per_n[n]) for n in range(1, min(last_live + 1, self.n_max + 1) + 1))

    def inverted(self) -> tuple[tuple[int, LaurentPoly2], ...]:
        """The fingerprint under (t, l) -> (t^-1, l^-1)."""
        return tuple((n, p.invert_vars()) for n, p in self.fingerprint())

    def to_json(self, name: str | None = None) -> dict:
        data: dict = {
            "gauss": str(self.diagram),
            "n_max": self.n_max,
            "F": {str(n): self.per_n[n].json_terms() for n in sorted(self.per_n)},
            "stable": self.stable_tail.json_terms(),
        }
        if name is not None:
            data = {"knot": name, **data}
        return data


@dataclass(frozen=True)
class _SmoothedData:
    """Writhe tables of every one-crossing smoothing, computed once."""

    writhes: dict[str, dict[int, int]]
    supports: frozenset[int]

    def dwrithe(self, crossing: str, n: int) -> int:
        table = self.writhes[crossing]
        return table.get(n, 0) - table.get(-n, 0)


def _smoothed_data(diagram: Diagram) -> _SmoothedData:
    writhes: dict[str, dict[int, int]] = {}
    support: set[int] = set()
    for c in diagram.crossings():
        smoothed = diagram.smooth(c)
        writhes[c] = _writhe_table(smoothed)
        support.update(abs(k) for k in _index_table(smoothed).values() if k != 0)
    return _SmoothedData(writhes, frozenset(support))


def t_set(diagram: Diagram, n: int) -> frozenset[str]:
    """T_n(D): crossings whose smoothing preserves |dJ_n|."""
    if n < 1:
        raise NonpositiveN(f"T_n needs n >= 1, got {n}")
    data = _smoothed_data(diagram)
    target = abs(dwrithe(diagram, n))
    return frozenset(
        c for c in diagram.crossings() if abs(data.dwrithe(c, n)) == target
    )


def _f_poly(diagram: Diagram, n: int, ind: dict[str, int], data: _SmoothedData) -> LaurentPoly2:
    d_n = dwrithe(diagram, n)
    triples: list[tuple[int, int, int]] = []
    for c in diagram.crossings():
        s = diagram.sign(c)
        dc = data.dwrithe(c, n)
        triples.append((ind[c], dc, s))
        if abs(dc) == abs(d_n):
            triples.append((0, dc, -s))
        else:
            triples.append((0, d_n, -s))
    return LaurentPoly2.from_terms(triples)


def f_polynomial(diagram: Diagram, n: int) -> LaurentPoly2:
    """The n-th F-polynomial F^n_D(t, l) for n >= 1."""
    if n < 1:
        raise NonpositiveN(f"F^n needs n >= 1, got {n}")
    return _f_poly(diagram, n, _index_table(diagram), _smoothed_data(diagram))


def f_sequence(diagram: Diagram) -> FReport:
    """Compute F^n for n = 1 .. n_max+1 together with the stable tail.

    n_max is the largest index magnitude seen in the diagram or any of
    its smoothings (0 when there is none), so every n > n_max has all
    dwrithes zero and F^n equal to the affine index polynomial.  The
    extra n_max+1 entry exercises that collapse; if it ever failed to
    match the tail the engine would be wrong, hence the hard error.
    """
    ind = _index_table(diagram)
    data = _smoothed_data(diagram)
    n_max = max(index_support(diagram) | data.supports, default=0)
    tail = affine_index_polynomial(diagram)
    per_n = {n: _f_poly(diagram, n, ind, data) for n in range(1, n_max + 2)}
    if per_n[n_max + 1] != tail:
        raise InternalInconsistency(
            f"F^{n_max + 1} of {str(diagram)!r} did not stabilize to the affine polynomial"
        )
    return FReport(diagram, n_max, per_n, tail)


def crossing_reports(diagram: Diagram, n_range: Iterable[int]) -> list[CrossingReport]:
    """Sign, index and smoothed dwrithes per crossing, in traversal order."""
    ns = sorted(set(n_range))
    if any(n < 1 for n in ns):
        raise NonpositiveN("crossing reports need n >= 1")
    ind = _index_table(diagram)
    data = _smoothed_data(diagram)
    return [
        CrossingReport(
            crossing=c,
            sign=diagram.sign(c),
            index=ind[c],
            smoothed_dwrithe={n: data.dwrithe(c, n) for n in ns},
        )
        for c in diagram.crossings()
    ]
