"""
Bounded breadth-first equality prover over the defining relations of PM_n.

This is deliberately independent of the Garside and group-ring code: it only
ever rewrites letter sequences with relation instances, so it is used as
ground truth for ``equal_pm`` in tests. It can prove equality, never
inequality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ParseError, StrandMismatchError
from .words import Kind, Letter, Word, pre, sigma, sigma_inv

__all__ = [
    "RelationInstance",
    "Verdict",
    "Rewriter",
    "relation_set",
    "bfs_equal",
    "derivation",
]

TAGS = (
    "R-commute-p",
    "R-commute-mixed",
    "R-p-sigma",
    "R-triple-1",
    "R-triple-2",
    "R-braid-far",
    "R-braid-adjacent",
    "R-cancel",
)


@dataclass(frozen=True)
class RelationInstance:
    lhs: Word
    rhs: Word
    tag: str

    def __post_init__(self):
        if self.lhs.strands != self.rhs.strands:
            raise StrandMismatchError("relation sides on different strand counts")
        if self.tag not in TAGS:
            raise ValueError(f"unknown relation tag {self.tag!r}")

    def __str__(self) -> str:
        return f"{self.tag}: {self.lhs or '1'} = {self.rhs or '1'}"


def relation_set(n: int) -> list[RelationInstance]:
    """
    Every instance of every defining relation of PM_n, in a fixed order.

    Far commutations are listed once per unordered pair of p letters and per
    ordered (p, sigma) pair; every sign choice of a sigma letter is listed.
    """
    if not isinstance(n, int) or n < 2:
        raise ParseError(f"strand count must be an integer >= 2, got {n!r}")
    idx = range(1, n)
    signed = (sigma, sigma_inv)
    out: list[RelationInstance] = []

    def add(lhs, rhs, tag):
        out.append(RelationInstance(Word(n, tuple(lhs)), Word(n, tuple(rhs)), tag))

    for i in idx:
        for j in idx:
            if j - i >= 2:
                add([pre(i), pre(j)], [pre(j), pre(i)], "R-commute-p")
    for i in idx:
        for j in idx:
            if abs(i - j) >= 2:
                for s in signed:
                    add([pre(i), s(j)], [s(j), pre(i)], "R-commute-mixed")
    for i in idx:
        for s in signed:
            add([pre(i), s(i)], [s(i), pre(i)], "R-p-sigma")
    for i in range(1, n - 1):
        add([sigma(i), sigma(i + 1), pre(i)], [pre(i + 1), sigma(i), sigma(i + 1)], "R-triple-1")
    for i in range(1, n - 1):
        add([sigma(i + 1), sigma(i), pre(i + 1)], [pre(i), sigma(i + 1), sigma(i)], "R-triple-2")
    for i in idx:
        for j in idx:
            if j - i >= 2:
                for s in signed:
                    for t in signed:
                        add([s(i), t(j)], [t(j), s(i)], "R-braid-far")
    for i in range(1, n - 1):
        add([sigma(i + 1), sigma(i), sigma(i + 1)], [sigma(i), sigma(i + 1), sigma(i)], "R-braid-adjacent")
    for i in idx:
        add([sigma(i), sigma_inv(i)], [], "R-cancel")
        add([sigma_inv(i), sigma(i)], [], "R-cancel")
    return out


class Verdict(enum.Enum):
    EQUAL = "equal"
    UNKNOWN = "unknown"


_KIND_CODE = {Kind.SIGMA_POS: 0, Kind.SIGMA_NEG: 1, Kind.PRE: 2, Kind.TAU: 2}
_CODE_KIND = (Kind.SIGMA_POS, Kind.SIGMA_NEG, Kind.PRE)
_BASE = 0x100


class Rewriter:
    """
    Relation rewriting on n strands over words encoded as strings.

    Each letter becomes one character so relation matching is plain substring
    search. tau letters are read as p letters.
    """

    def __init__(self, n: int):
        self.n = n
        rules = []
        for rel in relation_set(n):
            lhs, rhs = self.encode(rel.lhs), self.encode(rel.rhs)
            rules.append((lhs, rhs))
            rules.append((rhs, lhs))
        self.rewrites = [(a, b) for a, b in rules if a]
        self.insertions = [b for a, b in rules if not a]
        self._table = [Letter(_CODE_KIND[c % 3], c // 3 + 1) for c in range(3 * (n - 1))]

    def encode(self, w: Word) -> str:
        if w.strands != self.n:
            raise StrandMismatchError(f"word on {w.strands} strands, rewriter on {self.n}")
        return "".join(chr(_BASE + 3 * (l.index - 1) + _KIND_CODE[l.kind]) for l in w.letters)

    def decode(self, s: str) -> Word:
        table = self._table
        return Word(self.n, tuple([table[ord(ch) - _BASE] for ch in s]))

    def neighbors(self, s: str, maxlen: int):
        """Words one rewrite away from s with at most maxlen letters."""
        for a, b in self.rewrites:
            if len(s) - len(a) + len(b) > maxlen:
                continue
            start = s.find(a)
            while start != -1:
                yield s[:start] + b + s[start + len(a):]
                start = s.find(a, start + 1)
        for b in self.insertions:
            if len(s) + len(b) > maxlen:
                continue
            for i in range(len(s) + 1):
                yield s[:i] + b + s[i:]

    def ball(self, s: str, radius: int, maxlen: int) -> dict[str, str | None]:
        """
        Every word within ``radius`` rewrites of s, mapped to its BFS parent.

        s itself is always included; other words never exceed maxlen letters.
        """
        parent: dict[str, str | None] = {s: None}
        frontier = [s]
        for _ in range(radius):
            nxt = []
            for x in frontier:
                for y in self.neighbors(x, maxlen):
                    if y not in parent:
                        parent[y] = x
                        nxt.append(y)
            if not nxt:
                break
            frontier = nxt
        return parent


def _path(parent: dict[str, str | None], end: str) -> list[str]:
    out = [end]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])
    return out


def _search(u: Word, v: Word, depth: int, maxlen: int) -> list[Word] | None:
    if u.strands != v.strands:
        raise StrandMismatchError(f"words on {u.strands} and {v.strands} strands")
    if depth < 0 or maxlen < 0:
        raise ValueError("depth and maxlen must be non-negative")
    rw = Rewriter(u.strands)
    su, sv = rw.encode(u), rw.encode(v)
    if su == sv:
        return [u]
    # Meet in the middle: a path of length <= depth has a midpoint within
    # ceil(depth/2) of u and floor(depth/2) of v.
    fwd = rw.ball(su, (depth + 1) // 2, maxlen)
    bwd = rw.ball(sv, depth // 2, maxlen)
    common = [m for m in fwd if m in bwd]
    if not common:
        return None
    # Shortest total path through any meeting word.
    best = min(common, key=lambda m: (len(_path(fwd, m)) + len(_path(bwd, m)), m))
    words = list(reversed(_path(fwd, best))) + _path(bwd, best)[1:]
    return [rw.decode(x) for x in words]


def bfs_equal(u: Word, v: Word, depth: int, maxlen: int) -> Verdict:
    """
    EQUAL iff v is reached from u by at most ``depth`` relation rewrites with
    no intermediate word longer than ``maxlen``; UNKNOWN otherwise.
    """
    return Verdict.EQUAL if _search(u, v, depth, maxlen) is not None else Verdict.UNKNOWN


def derivation(u: Word, v: Word, depth: int, maxlen: int) -> list[Word] | None:
    """The chain of words witnessing ``bfs_equal(u, v, ...) == EQUAL``, or None."""
    return _search(u, v, depth, maxlen)
