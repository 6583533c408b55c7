"""Exact Laurent polynomials in two commuting variables t and l.

Every invariant produced by this package lives in Z[t, t^-1, l, l^-1]:
the affine index polynomial uses only the variable t, the F-polynomials
use both.  Coefficients are plain Python integers, so arithmetic is
exact at any size.

A polynomial is stored canonically as a map from exponent pairs
(e_t, e_l) to nonzero integer coefficients; two values are equal iff
their term maps are equal.  Values are immutable and safe to share
across threads.

The canonical text syntax uses ``t^k`` and ``l^k`` with ``*`` between
variable factors, e.g. ``-t^-1+2-t`` or ``-t^-1*l^-2+t^-1*l^2``.
Terms are ordered by (e_t, e_l) ascending, which matches the usual
way such polynomials are tabulated (ascending t-degree).
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator


class PolyParseError(ValueError):
    """Raised when a polynomial string does not match the canonical syntax."""


_TERM_RE = re.compile(
    r"""^([+-]?)              # sign
         (\d+)?               # optional coefficient magnitude
         (?:\*?t(?:\^([+-]?\d+))?)?   # optional t factor
         (?:\*?l(?:\^([+-]?\d+))?)?   # optional l factor
         $""",
    re.VERBOSE,
)


class LaurentPoly2:
    """An integer Laurent polynomial in t and l, in canonical form.

    Construct via :meth:`from_terms`, :meth:`monomial`, :meth:`zero`
    or :func:`parse_poly`; the constructor itself expects an already
    clean ``{(e_t, e_l): coeff}`` mapping and is mostly internal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[tuple[int, int], int] | None = None):
        clean = {k: v for k, v in (terms or {}).items() if v != 0}
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LaurentPoly2 is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls({})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int, int]]) -> "LaurentPoly2":
        """Sum a list of (e_t, e_l, coeff) triples into canonical form.

        Duplicate exponent pairs are added together; anything that
        cancels to zero is dropped.
        """
        acc: dict[tuple[int, int], int] = {}
        for e_t, e_l, coeff in terms:
            key = (e_t, e_l)
            acc[key] = acc.get(key, 0) + coeff
        return cls(acc)

    @classmethod
    def monomial(cls, sign: int, e_t: int = 0, e_l: int = 0) -> "LaurentPoly2":
        """A single term ``sign * t^e_t * l^e_l`` with sign in {+1, -1}."""
        if sign not in (1, -1):
            raise ValueError(f"monomial sign must be +1 or -1, got {sign!r}")
        return cls({(e_t, e_l): sign})

    # -- ring-ish operations ----------------------------------------------

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, 0) + coeff
        return LaurentPoly2(acc)

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self + (-other)

    def invert_vars(self) -> "LaurentPoly2":
        """Substitute t -> t^-1 and l -> l^-1 (negate all exponents).

        This is the transform induced on the invariants by reversing
        the orientation of a diagram; it is an involution.
        """
        return LaurentPoly2({(-et, -el): c for (et, el), c in self._terms.items()})

    # -- inspection --------------------------------------------------------

    def terms(self) -> list[tuple[int, int, int]]:
        """Canonically ordered (e_t, e_l, coeff) triples."""
        return [(et, el, c) for (et, el), c in sorted(self._terms.items())]

    def coefficient(self, e_t: int, e_l: int = 0) -> int:
        return self._terms.get((e_t, e_l), 0)

    def substitute_l_one(self) -> "LaurentPoly2":
        """Set l = 1, collapsing the l-exponents."""
        return LaurentPoly2.from_terms((et, 0, c) for (et, _), c in self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        return iter(self.terms())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out: list[str] = []
        for (et, el), coeff in sorted(self._terms.items()):
            sign = "-" if coeff < 0 else ("+" if out else "")
            mag = abs(coeff)
            factors = []
            if et:
                factors.append("t" if et == 1 else f"t^{et}")
            if el:
                factors.append("l" if el == 1 else f"l^{el}")
            if not factors:
                body = str(mag)
            else:
                body = "*".join(factors)
                if mag != 1:
                    body = f"{mag}{body}"
            out.append(sign + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly2({str(self)!r})"

    def json_terms(self) -> list[dict[str, int]]:
        """JSON-friendly term list, sorted in the canonical order."""
        return [{"t": et, "l": el, "c": c} for et, el, c in self.terms()]


def parse_poly(text: str) -> LaurentPoly2:
    """Parse the canonical polynomial syntax produced by ``str()``.

    Whitespace is ignored.  ``"0"`` parses to the zero polynomial.
    Round-trips: ``parse_poly(str(p)) == p`` for every polynomial p.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise PolyParseError("empty polynomial string")
    if s == "0":
        return LaurentPoly2.zero()
    pieces: list[str] = []
    cur = ""
    prev = ""
    for ch in s:
        if ch in "+-" and cur and prev not in "^*":
            pieces.append(cur)
            cur = ch
        else:
            cur += ch
        prev = ch
    pieces.append(cur)

    triples: list[tuple[int, int, int]] = []
    for piece in pieces:
        m = _TERM_RE.match(piece)
        if m is None or (m.group(2) is None and "t" not in piece and "l" not in piece):
            raise PolyParseError(f"bad term {piece!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) is not None else 1
        has_t = "t" in piece
        has_l = "l" in piece
        e_t = int(m.group(3)) if m.group(3) is not None else (1 if has_t else 0)
        e_l = int(m.group(4)) if m.group(4) is not None else (1 if has_l else 0)
        triples.append((e_t, e_l, sign * mag))
    return LaurentPoly2.from_terms(triples)
