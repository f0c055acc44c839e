"""
Invariants of braid closures, computed directly from words.

Components of the closure are the cycles of the underlying permutation.
Linking numbers are kept doubled so they stay integral. The linking profile
resolves every pre-crossing both ways with equal probability and records the
distribution of (component count, sorted doubled linking numbers) over the
resulting classical closures; weights are exact fractions.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from fractions import Fraction
from typing import Sequence

from .errors import ExpansionCapError
from .words import Kind, Letter, Word, require_classical, underlying_permutation

DEFAULT_RESOLUTION_CAP = 20

Resolution = tuple[int, ...]
ProfileEntry = tuple[int, tuple[int, ...]]

__all__ = [
    "DEFAULT_RESOLUTION_CAP",
    "LinkingProfile",
    "component_count",
    "resolve",
    "resolutions",
    "doubled_linking_numbers",
    "linking_profile",
    "closure_json",
]


def component_count(beta: Word) -> int:
    return underlying_permutation(beta).cycle_count()


def resolve(beta: Word, choices: Sequence[int]) -> Word:
    """Replace the k-th crossing marker by sigma (choice +1) or sigma^-1 (choice -1)."""
    if len(choices) != beta.pre_count:
        raise ValueError(f"{len(choices)} choices for {beta.pre_count} pre-crossings")
    it = iter(choices)
    letters = []
    for l in beta.letters:
        if l.kind.is_marker:
            c = next(it)
            if c not in (1, -1):
                raise ValueError(f"resolution choices must be +1 or -1, got {c!r}")
            letters.append(Letter(Kind.SIGMA_POS if c > 0 else Kind.SIGMA_NEG, l.index))
        else:
            letters.append(l)
    return Word(beta.strands, tuple(letters))


def resolutions(beta: Word):
    return itertools.product((1, -1), repeat=beta.pre_count)


def _component_labels(beta: Word) -> list[int]:
    """Component index of the strand starting at each position (0-based)."""
    perm = underlying_permutation(beta)
    label = [-1] * beta.strands
    c = 0
    for start in range(beta.strands):
        if label[start] >= 0:
            continue
        x = start
        while label[x] < 0:
            label[x] = c
            x = perm.images[x] - 1
        c += 1
    return label


def doubled_linking_numbers(beta: Word) -> list[int]:
    """
    Twice the linking number of every unordered pair of closure components,
    sorted ascending.

    >>> from .words import parse
    >>> doubled_linking_numbers(parse("s1 s1", 2))
    [2]
    """
    require_classical(beta)
    label = _component_labels(beta)
    count = max(label) + 1
    totals: dict[tuple[int, int], int] = defaultdict(int)
    at = list(range(beta.strands))
    for l in beta.letters:
        i = l.index - 1
        a, b = label[at[i]], label[at[i + 1]]
        if a != b:
            totals[min(a, b), max(a, b)] += l.sign
        at[i], at[i + 1] = at[i + 1], at[i]
    return sorted(totals[a, b] for a in range(count) for b in range(a + 1, count))


class LinkingProfile:
    """Exact probability distribution over (components, doubled linkings)."""

    __slots__ = ("_entries",)

    def __init__(self, entries: dict[ProfileEntry, Fraction]):
        self._entries = {k: Fraction(v) for k, v in entries.items() if v}

    @property
    def entries(self) -> dict[ProfileEntry, Fraction]:
        return dict(self._entries)

    def total_weight(self) -> Fraction:
        return sum(self._entries.values(), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinkingProfile):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(frozenset(self._entries.items()))

    def __len__(self) -> int:
        return len(self._entries)

    def __repr__(self) -> str:
        return f"LinkingProfile({self.sorted_entries()})"

    def sorted_entries(self) -> list[tuple[int, tuple[int, ...], Fraction]]:
        return [(c, lk, w) for (c, lk), w in sorted(self._entries.items())]

    def as_json_obj(self) -> list[dict]:
        return [
            {
                "component_count": c,
                "doubled_linkings": list(lk),
                "weight": f"{w.numerator}/{w.denominator}",
            }
            for c, lk, w in self.sorted_entries()
        ]

    @classmethod
    def from_json_obj(cls, obj: list[dict]) -> LinkingProfile:
        entries = {}
        for e in obj:
            entries[e["component_count"], tuple(e["doubled_linkings"])] = Fraction(e["weight"])
        return cls(entries)


def linking_profile(beta: Word, cap: int = DEFAULT_RESOLUTION_CAP) -> LinkingProfile:
    """
    >>> from .words import parse
    >>> linking_profile(parse("p1 p1", 2)).sorted_entries()
    [(2, (-2,), Fraction(1, 4)), (2, (0,), Fraction(1, 2)), (2, (2,), Fraction(1, 4))]
    """
    k = beta.pre_count
    if k > cap:
        raise ExpansionCapError(f"{k} pre-crossings exceed the resolution cap {cap}")
    comps = component_count(beta)
    weight = Fraction(1, 2**k)
    entries: dict[ProfileEntry, Fraction] = defaultdict(Fraction)
    for r in resolutions(beta):
        entries[comps, tuple(doubled_linking_numbers(resolve(beta, r)))] += weight
    return LinkingProfile(entries)


def closure_json(beta: Word, cap: int = DEFAULT_RESOLUTION_CAP) -> str:
    return json.dumps(
        {
            "strands": beta.strands,
            "component_count": component_count(beta),
            "profile": linking_profile(beta, cap).as_json_obj(),
        },
        sort_keys=True,
    )
