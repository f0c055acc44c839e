"""
The integral group ring Z[B_n] and the desingularization map.

The desingularization map is multiplicative, fixes sigma_i^{+-1} and sends
each crossing marker (p_i, or tau_i in the singular flavour) to
sigma_i - sigma_i^-1. Two words are equal in PM_n exactly when their images
agree; that completeness rests on Paris' embedding theorem for the singular
braid monoid, which the tests cross-check against the rewriting oracle.

Elements are sparse maps from braid normal forms to nonzero integers.
"""

from __future__ import annotations

import json
from collections import defaultdict
from typing import Iterator, Mapping

from .errors import ExpansionCapError, StrandMismatchError
from .garside import NormalForm, identity_nf, nf_multiply, nf_multiply_letter, normal_form, parse_key
from .words import Word, sigma, sigma_inv, stats

DEFAULT_CAP = 1 << 20

__all__ = [
    "DEFAULT_CAP",
    "RingElement",
    "eta",
    "ring_add",
    "ring_mul",
    "equal_pm",
    "pm2_canonical",
]


class RingElement:
    """An immutable integer combination of braids on a fixed number of strands."""

    __slots__ = ("strands", "_terms")

    def __init__(self, strands: int, terms: Mapping[NormalForm, int] | None = None):
        self.strands = strands
        clean = {}
        for key, coeff in (terms or {}).items():
            if key.strands != strands:
                raise StrandMismatchError(f"term on {key.strands} strands in a ring on {strands}")
            if coeff:
                clean[key] = int(coeff)
        self._terms = clean

    @classmethod
    def zero(cls, n: int) -> RingElement:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> RingElement:
        return cls(n, {identity_nf(n): 1})

    @classmethod
    def monomial(cls, nf: NormalForm, coeff: int = 1) -> RingElement:
        return cls(nf.strands, {nf: coeff})

    @classmethod
    def of_word(cls, w: Word, coeff: int = 1) -> RingElement:
        return cls.monomial(normal_form(w), coeff)

    @property
    def terms(self) -> dict[NormalForm, int]:
        return dict(self._terms)

    def terms_by_key(self) -> dict[str, int]:
        return {k.key(): c for k, c in sorted(self._terms.items(), key=lambda kv: kv[0].key())}

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[NormalForm, int]]:
        return iter(self._terms.items())

    def __getitem__(self, key: NormalForm) -> int:
        return self._terms.get(key, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.strands == other.strands and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.strands, frozenset(self._terms.items())))

    def __add__(self, other: RingElement) -> RingElement:
        return ring_add(self, other)

    def __neg__(self) -> RingElement:
        return RingElement(self.strands, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: RingElement) -> RingElement:
        return ring_add(self, -other)

    def __mul__(self, other: RingElement) -> RingElement:
        return ring_mul(self, other)

    def __repr__(self) -> str:
        return f"RingElement({self.strands}, {self.terms_by_key()})"

    def render(self) -> str:
        """One ``coeff*key`` line per term, keys in lexicographic order."""
        return "\n".join(f"{c}*{k}" for k, c in self.terms_by_key().items())

    def to_json(self) -> str:
        return json.dumps({"strands": self.strands, "terms": self.terms_by_key()}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> RingElement:
        data = json.loads(text)
        n = data["strands"]
        return cls(n, {parse_key(k, n): c for k, c in data["terms"].items()})


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    if a.strands != b.strands:
        raise StrandMismatchError(f"ring elements on {a.strands} and {b.strands} strands")
    out = dict(a._terms)
    for k, c in b._terms.items():
        out[k] = out.get(k, 0) + c
    return RingElement(a.strands, out)


def ring_mul(a: RingElement, b: RingElement, cap: int = DEFAULT_CAP) -> RingElement:
    if a.strands != b.strands:
        raise StrandMismatchError(f"ring elements on {a.strands} and {b.strands} strands")
    if len(a) * len(b) > cap:
        raise ExpansionCapError(f"product of {len(a)} x {len(b)} terms exceeds cap {cap}")
    out: dict[NormalForm, int] = defaultdict(int)
    for ka, ca in a._terms.items():
        for kb, cb in b._terms.items():
            out[nf_multiply(ka, kb)] += ca * cb
    return RingElement(a.strands, out)


def eta(w: Word, cap: int = DEFAULT_CAP) -> RingElement:
    """
    Image of a word under the desingularization map.

    Expanded letter by letter from the left, cancelling after every step.

    >>> from .words import parse
    >>> eta(parse("p1", 2)).render()
    '-1*-1|\\n1*1|'
    """
    k = w.pre_count
    if k and 2**k > cap:
        raise ExpansionCapError(f"{k} pre-crossings expand to 2^{k} terms, cap is {cap}")
    current: dict[NormalForm, int] = {identity_nf(w.strands): 1}
    for letter in w.letters:
        nxt: dict[NormalForm, int] = defaultdict(int)
        if letter.kind.is_marker:
            pos, neg = sigma(letter.index), sigma_inv(letter.index)
            for key, c in current.items():
                nxt[nf_multiply_letter(key, pos)] += c
                nxt[nf_multiply_letter(key, neg)] -= c
        else:
            for key, c in current.items():
                nxt[nf_multiply_letter(key, letter)] += c
        current = {key: c for key, c in nxt.items() if c}
    return RingElement(w.strands, current)


def equal_pm(u: Word, v: Word, cap: int = DEFAULT_CAP) -> bool:
    """Decide u = v in PM_n (or SM_n) by comparing desingularizations."""
    if u.strands != v.strands:
        raise StrandMismatchError(f"words on {u.strands} and {v.strands} strands")
    return eta(u, cap) == eta(v, cap)


def pm2_canonical(w: Word) -> tuple[int, int]:
    """PM_2 is Z x Z+: a word is determined by its exponent sum and pre-crossing count."""
    if w.strands != 2:
        raise StrandMismatchError(f"pm2_canonical needs n = 2, got n = {w.strands}")
    return stats(w)
