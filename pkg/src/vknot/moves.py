"""Classical Reidemeister moves R1/R2/R3 on Gauss codes.

These rewrites produce equivalent diagrams and exist to property-test
the invariance of everything in :mod:`vknot.invariants`.  Virtual
Reidemeister moves and the detour move are identities on Gauss codes
and are deliberately not represented.

Arc indices follow :mod:`vknot.gauss`: arc ``i`` is the edge after
entry ``i``; insertions at arc ``i`` go between entries ``i`` and
``i+1``.

R1 inserts a kink: two adjacent entries of a fresh crossing, either
pass order, either sign.  R2 pushes one arc across another: fresh
crossings ``a``, ``b`` appear as ``a b`` on one arc and ``b a`` on the
other, all-Over on one strand and all-Under on the other, with opposite
signs (both sign assignments are geometrically realizable; we fix
``a`` positive).

R3 slides a strand lying over two crossings ``p``, ``q`` across their
common crossing ``r`` with a third strand.  On the word this swaps the
entries inside three adjacent pairs: ``O_p O_q`` on the sliding strand,
``U_p`` next to one pass of ``r``, and ``U_q`` next to the other.  Not
every such adjacency pattern is a geometric R3: realizing the triangle
with travel directions read off the word forces two sign relations,

    sgn(p) * beta == sgn(q) * gamma      and
    sgn(r) == sgn(p) * gamma * chi,

where ``beta``/``gamma`` are +1 when the strand meets its ``p``/``q``
underpass before the ``r`` entry (-1 after), and ``chi`` is +1 when the
``r`` pass adjacent to ``U_p`` is the overpass.  Patterns violating
them are rejected; the whole predicate is validated empirically by the
invariance suite.

``random_walk`` drives the fuzzing.  Reproducibility across platforms
matters more than statistical quality, so choices come from a fixed
64-bit linear congruential generator (Knuth's MMIX multiplier
6364136223846793005 and increment 1442695040888963407, taking the top
31 bits of the state), never from :mod:`random`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .gauss import Diagram, Entry


class MoveError(ValueError):
    """Base class for Reidemeister-move failures."""


class InvalidArc(MoveError):
    """An insertion arc index is out of range (or arcs coincide)."""


class PatternNotFound(MoveError):
    """The requested removal/slide pattern is absent from the word."""


# -- deterministic RNG ---------------------------------------------------------

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg:
    """64-bit linear congruential generator; identical on every platform."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = (seed ^ 0x9E3779B97F4A7C15) & _MASK

    def next_bits(self) -> int:
        self.state = (self.state * _MULT + _INC) & _MASK
        return self.state >> 33

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        return self.next_bits() % n

    def choice(self, seq):
        return seq[self.randrange(len(seq))]


# -- fresh crossing ids --------------------------------------------------------

def _fresh_ids(diagram: Diagram, count: int) -> list[str]:
    """The ``count`` smallest unused numeric tokens, ascending."""
    used = set(diagram.crossings())
    out: list[str] = []
    k = 1
    while len(out) < count:
        if str(k) not in used:
            out.append(str(k))
        k += 1
    return out


def _check_arc(diagram: Diagram, arc: int) -> None:
    if not 0 <= arc < len(diagram):
        raise InvalidArc(f"arc {arc} out of range for {len(diagram)} entries")


# -- R1 -------------------------------------------------------------------------

def r1_insert(diagram: Diagram, arc: int | None, sign: int, over_first: bool = True) -> Diagram:
    """Insert a kink (fresh crossing, both passes adjacent) at ``arc``.

    On the empty diagram ``arc`` is ignored (there is only one place).
    """
    if sign not in (1, -1):
        raise MoveError(f"sign must be +1 or -1, got {sign!r}")
    (cid,) = _fresh_ids(diagram, 1)
    pair = [Entry(cid, over_first, sign), Entry(cid, not over_first, sign)]
    if len(diagram) == 0:
        return Diagram(pair)
    if arc is None:
        arc = 0
    _check_arc(diagram, arc)
    ents = list(diagram.entries)
    return Diagram(ents[: arc + 1] + pair + ents[arc + 1 :])


def r1_sites(diagram: Diagram) -> list[int]:
    """Positions i where entries i and i+1 are the two passes of one crossing."""
    n = len(diagram)
    ents = diagram.entries
    sites = []
    covered: set[frozenset[int]] = set()
    for i in range(n):
        j = (i + 1) % n
        if ents[i].crossing == ents[j].crossing:
            key = frozenset((i, j))
            if key not in covered:
                covered.add(key)
                sites.append(i)
    return sites


def r1_remove(diagram: Diagram, site: int) -> Diagram:
    """Delete the kink whose two entries sit at positions site, site+1."""
    n = len(diagram)
    ents = diagram.entries
    if n == 0 or ents[site % n].crossing != ents[(site + 1) % n].crossing:
        raise PatternNotFound(f"no kink at position {site}")
    drop = {site % n, (site + 1) % n}
    return Diagram(e for i, e in enumerate(ents) if i not in drop)


# -- R2 -------------------------------------------------------------------------

def r2_insert(diagram: Diagram, arc1: int, arc2: int, over_first: bool = True) -> Diagram:
    """Push arc1 across arc2 (R2): fresh a,b at arc1 and b,a at arc2.

    ``over_first`` chooses which of the two arcs carries the overpasses.
    The first crossing gets sign +1, the second -1.
    """
    if arc1 == arc2:
        raise InvalidArc("R2 insertion needs two distinct arcs")
    _check_arc(diagram, arc1)
    _check_arc(diagram, arc2)
    a, b = _fresh_ids(diagram, 2)
    first = [Entry(a, over_first, 1), Entry(b, over_first, -1)]
    second = [Entry(b, not over_first, -1), Entry(a, not over_first, 1)]
    ents = list(diagram.entries)
    inserts = sorted([(arc1, first), (arc2, second)], reverse=True)
    for arc, block in inserts:
        ents[arc + 1 : arc + 1] = block
    return Diagram(ents)


def r2_sites(diagram: Diagram) -> list[tuple[int, int]]:
    """Start positions (i, j) of removable R2 configurations.

    Position i starts an adjacent same-pass pair a,b with opposite
    signs whose partner passes sit adjacently as b,a at position j.
    """
    n = len(diagram)
    ents = diagram.entries
    sites = []
    covered: set[frozenset[int]] = set()
    for i in range(n):
        e1, e2 = ents[i], ents[(i + 1) % n]
        if e1.over != e2.over or e1.crossing == e2.crossing or e1.sign == e2.sign:
            continue
        j = diagram.under_position(e2.crossing) if e2.over else diagram.over_position(e2.crossing)
        partner_a = diagram.under_position(e1.crossing) if e1.over else diagram.over_position(e1.crossing)
        if (j + 1) % n != partner_a:
            continue
        key = frozenset((i, (i + 1) % n, j, partner_a))
        if len(key) == 4 and key not in covered:
            covered.add(key)
            sites.append((i, j))
    return sites


def r2_remove(diagram: Diagram, site: tuple[int, int]) -> Diagram:
    """Delete the four entries of the R2 configuration starting at site."""
    if site not in r2_sites(diagram):
        raise PatternNotFound(f"no R2 configuration at {site}")
    i, j = site
    n = len(diagram)
    drop = {i, (i + 1) % n, j, (j + 1) % n}
    return Diagram(e for k, e in enumerate(diagram.entries) if k not in drop)


# -- R3 -------------------------------------------------------------------------

def _r3_patterns(diagram: Diagram):
    """Yield (triple, position-swaps) for every valid R3 slide."""
    n = len(diagram)
    ents = diagram.entries
    for i in range(n):
        i2 = (i + 1) % n
        ep, eq = ents[i], ents[i2]
        if not (ep.over and eq.over) or ep.crossing == eq.crossing:
            continue
        p, q = ep.crossing, eq.crossing
        j = diagram.under_position(p)
        k = diagram.under_position(q)
        for dj in (1, -1):
            jr = (j + dj) % n
            er = ents[jr]
            r = er.crossing
            if r == p or r == q:
                continue
            other = diagram.under_position(r) if er.over else diagram.over_position(r)
            if other == (k + 1) % n:
                dk = 1
            elif other == (k - 1) % n:
                dk = -1
            else:
                continue
            beta, gamma = dj, dk
            chi = 1 if er.over else -1
            s_p, s_q, s_r = ep.sign, eq.sign, diagram.sign(r)
            if s_p * beta != s_q * gamma or s_r != s_p * gamma * chi:
                continue
            yield (p, q, r), ((i, i2), (j, jr), (k, other))


def r3_triples(diagram: Diagram) -> list[tuple[str, str, str]]:
    """All (p, q, r) with a valid slide of the p,q-overstrand across r."""
    out: list[tuple[str, str, str]] = []
    for triple, _ in _r3_patterns(diagram):
        if triple not in out:
            out.append(triple)
    return out


def r3_apply(diagram: Diagram, p: str, q: str, r: str) -> Diagram:
    """Slide the strand passing over p and q across the crossing r.

    Swaps the entries inside each of the three adjacent pairs; signs
    and passes are untouched.  Applying the same triple again undoes
    the move.  Raises PatternNotFound when (p, q, r) is not an
    R3-applicable triangle (including sign-relation violations).
    """
    for triple, swaps in _r3_patterns(diagram):
        if triple in ((p, q, r), (q, p, r)):
            ents = list(diagram.entries)
            for x, y in swaps:
                ents[x], ents[y] = ents[y], ents[x]
            return Diagram(ents)
    raise PatternNotFound(f"no R3 triangle for ({p}, {q}, {r})")


# -- move scripts and random walks ----------------------------------------------

_KINDS = ("R1+", "R1-", "R2+", "R2-", "R3")


@dataclass(frozen=True)
class MoveScript:
    """A replayable sequence of move applications.

    Each step is a JSON-able dict naming the move kind and its
    parameters; ``apply`` replays the script on a diagram, raising if
    any step is inapplicable there.  Serialized scripts are how the
    fuzzing CLI reports failures for reproduction.
    """

    steps: tuple[dict, ...]

    def apply(self, diagram: Diagram) -> Diagram:
        cur = diagram
        for step in self.steps:
            kind = step["move"]
            if kind == "R1+":
                cur = r1_insert(cur, step["arc"], step["sign"], step["over_first"])
            elif kind == "R1-":
                cur = r1_remove(cur, step["site"])
            elif kind == "R2+":
                cur = r2_insert(cur, step["arc1"], step["arc2"], step["over_first"])
            elif kind == "R2-":
                cur = r2_remove(cur, tuple(step["site"]))
            elif kind == "R3":
                cur = r3_apply(cur, step["p"], step["q"], step["r"])
            else:
                raise MoveError(f"unknown move kind {kind!r}")
        return cur

    def to_json(self) -> str:
        return json.dumps(list(self.steps))

    @classmethod
    def from_json(cls, text: str) -> "MoveScript":
        return cls(tuple(json.loads(text)))


def random_walk(diagram: Diagram, steps: int, seed: int) -> tuple[Diagram, MoveScript]:
    """Apply ``steps`` uniformly chosen applicable moves, reproducibly.

    Each step draws a move kind; kinds with no applicable parameters on
    the current diagram are redrawn (R1 insertion always applies, so
    this terminates).  Returns the final diagram and the script that
    replays the walk.
    """
    if steps < 0:
        raise MoveError("steps must be >= 0")
    rng = Lcg(seed)
    cur = diagram
    recorded: list[dict] = []
    for _ in range(steps):
        while True:
            kind = _KINDS[rng.randrange(len(_KINDS))]
            if kind == "R1+":
                arc = rng.randrange(len(cur)) if len(cur) else 0
                sign = rng.choice((1, -1))
                over_first = rng.choice((True, False))
                step = {"move": "R1+", "arc": arc, "sign": sign, "over_first": over_first}
                cur = r1_insert(cur, arc, sign, over_first)
            elif kind == "R1-":
                sites = r1_sites(cur)
                if not sites:
                    continue
                step = {"move": "R1-", "site": rng.choice(sites)}
                cur = r1_remove(cur, step["site"])
            elif kind == "R2+":
                if len(cur) < 2:
                    continue
                arc1 = rng.randrange(len(cur))
                arc2 = rng.randrange(len(cur) - 1)
                if arc2 >= arc1:
                    arc2 += 1
                over_first = rng.choice((True, False))
                step = {"move": "R2+", "arc1": arc1, "arc2": arc2, "over_first": over_first}
                cur = r2_insert(cur, arc1, arc2, over_first)
            elif kind == "R2-":
                sites = r2_sites(cur)
                if not sites:
                    continue
                site = rng.choice(sites)
                step = {"move": "R2-", "site": list(site)}
                cur = r2_remove(cur, site)
            else:
                triples = r3_triples(cur)
                if not triples:
                    continue
                p, q, r = rng.choice(triples)
                step = {"move": "R3", "p": p, "q": q, "r": r}
                cur = r3_apply(cur, p, q, r)
            recorded.append(step)
            break
    return cur, MoveScript(tuple(recorded))
