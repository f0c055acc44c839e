"""
Letters and words of the pseudo braid monoid PM_n.

A word is an immutable sequence of letters together with an explicit strand
count n. The letters are

- ``s<i>``: the positive crossing sigma_i,
- ``S<i>``: its inverse sigma_i^-1,
- ``p<i>``: the pre-crossing p_i,
- ``t<i>``: the singular crossing tau_i (singular flavour only).

The strand count is never inferred from the letters, so the empty word of PM_2
and the empty word of PM_3 are different values.

    >>> w = parse("s1 p2 S1", 3)
    >>> render(w)
    's1 p2 S1'
    >>> underlying_permutation(parse("p1 s2", 3)).cycles()
    ((1, 3, 2),)
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ParseError, PreCrossingError, StrandMismatchError

__all__ = [
    "Kind",
    "Letter",
    "Word",
    "Permutation",
    "Direction",
    "sigma",
    "sigma_inv",
    "pre",
    "tau",
    "parse",
    "render",
    "concat",
    "relabel",
    "underlying_permutation",
    "free_reduce",
    "stats",
    "require_classical",
]


class Kind(enum.Enum):
    SIGMA_POS = "s"
    SIGMA_NEG = "S"
    PRE = "p"
    TAU = "t"

    @property
    def is_sigma(self) -> bool:
        return self is Kind.SIGMA_POS or self is Kind.SIGMA_NEG

    @property
    def is_marker(self) -> bool:
        """True for the crossing-marker letters p_i and tau_i."""
        return self is Kind.PRE or self is Kind.TAU


@dataclass(frozen=True, slots=True)
class Letter:
    kind: Kind
    index: int

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 1:
            raise ParseError(f"letter index must be a positive integer, got {self.index!r}")

    @property
    def sign(self) -> int:
        """+1 for sigma_i, -1 for sigma_i^-1, 0 for crossing markers."""
        if self.kind is Kind.SIGMA_POS:
            return 1
        if self.kind is Kind.SIGMA_NEG:
            return -1
        return 0

    def inverse(self) -> Letter:
        if self.kind is Kind.SIGMA_POS:
            return Letter(Kind.SIGMA_NEG, self.index)
        if self.kind is Kind.SIGMA_NEG:
            return Letter(Kind.SIGMA_POS, self.index)
        raise PreCrossingError(f"{self} has no inverse in the monoid")

    def __str__(self) -> str:
        return f"{self.kind.value}{self.index}"


def sigma(i: int) -> Letter:
    return Letter(Kind.SIGMA_POS, i)


def sigma_inv(i: int) -> Letter:
    return Letter(Kind.SIGMA_NEG, i)


def pre(i: int) -> Letter:
    return Letter(Kind.PRE, i)


def tau(i: int) -> Letter:
    return Letter(Kind.TAU, i)


@dataclass(frozen=True, slots=True)
class Word:
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 2:
            raise ParseError(f"strand count must be an integer >= 2, got {self.strands!r}")
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        top = self.strands - 1
        for letter in self.letters:
            if letter.index > top:
                raise ParseError(
                    f"index out of range: {letter} needs 1 <= i <= {top} for n={self.strands}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.strands, self.letters[item])
        return self.letters[item]

    def __add__(self, other: Word) -> Word:
        return concat(self, other)

    def __str__(self) -> str:
        return render(self)

    @property
    def is_classical(self) -> bool:
        return all(letter.kind.is_sigma for letter in self.letters)

    @property
    def pre_count(self) -> int:
        return sum(1 for letter in self.letters if letter.kind.is_marker)

    def with_strands(self, n: int) -> Word:
        return Word(n, self.letters)


@dataclass(frozen=True, slots=True)
class Permutation:
    """A bijection of {1..n}, stored as its image sequence."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply self first, then other."""
        if self.size != other.size:
            raise StrandMismatchError("permutations on different sets")
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each starting at its least element, sorted."""
        seen = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return tuple(out)

    def cycle_count(self) -> int:
        """Number of cycles including fixed points."""
        return self.size - sum(len(c) - 1 for c in self.cycles())


_TOKEN = re.compile(r"([sSpt])([1-9][0-9]*)")


def parse(text: str, n: int, keep_tau: bool = False) -> Word:
    """
    Parse whitespace-separated tokens into a word on n strands.

    ``t<i>`` tokens are read as pre-crossings unless ``keep_tau`` is set.

    >>> parse("s1 S1", 2).letters
    (Letter(kind=<Kind.SIGMA_POS: 's'>, index=1), Letter(kind=<Kind.SIGMA_NEG: 'S'>, index=1))
    """
    if not isinstance(n, int) or n < 2:
        raise ParseError(f"strand count must be an integer >= 2, got {n!r}")
    letters = []
    for token in text.split(" "):
        if not token:
            continue
        m = _TOKEN.fullmatch(token)
        if m is None:
            raise ParseError(f"malformed token {token!r}")
        kind = Kind(m.group(1))
        if kind is Kind.TAU and not keep_tau:
            kind = Kind.PRE
        letters.append(Letter(kind, int(m.group(2))))
    return Word(n, tuple(letters))


def render(w: Word) -> str:
    return " ".join(str(letter) for letter in w.letters)


def concat(*words: Word) -> Word:
    if not words:
        raise ValueError("concat needs at least one word")
    n = words[0].strands
    letters: list[Letter] = []
    for w in words:
        if w.strands != n:
            raise StrandMismatchError(f"cannot multiply words on {n} and {w.strands} strands")
        letters.extend(w.letters)
    return Word(n, tuple(letters))


class Direction(enum.Enum):
    SINGULAR_TO_PSEUDO = "singular-to-pseudo"
    PSEUDO_TO_SINGULAR = "pseudo-to-singular"


def relabel(w: Word, direction: Direction) -> Word:
    """Exchange tau_i and p_i letters, fixing every sigma letter."""
    if direction is Direction.SINGULAR_TO_PSEUDO:
        src, dst = Kind.TAU, Kind.PRE
    else:
        src, dst = Kind.PRE, Kind.TAU
    return Word(
        w.strands,
        tuple(Letter(dst, l.index) if l.kind is src else l for l in w.letters),
    )


def strand_positions(w: Word) -> list[list[int]]:
    """
    Strand occupying each position before every letter and after the last.

    Row t lists, for positions 0..n-1, the (0-based) starting position of the
    strand found there after t letters.
    """
    at = list(range(w.strands))
    rows = [at[:]]
    for letter in w.letters:
        i = letter.index - 1
        at[i], at[i + 1] = at[i + 1], at[i]
        rows.append(at[:])
    return rows


def underlying_permutation(w: Word) -> Permutation:
    """
    Permutation sending each starting position to the strand's final position.

    Letters act left to right, so perm(uv) = perm(u).then(perm(v)).
    """
    at = list(range(w.strands))
    for letter in w.letters:
        i = letter.index - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    images = [0] * w.strands
    for pos, strand in enumerate(at):
        images[strand] = pos + 1
    return Permutation(tuple(images))


def free_reduce(w: Word) -> Word:
    """Cancel adjacent sigma_i^e sigma_i^-e pairs until none remain."""
    stack: list[Letter] = []
    for letter in w.letters:
        if (
            stack
            and letter.kind.is_sigma
            and stack[-1].index == letter.index
            and stack[-1].sign == -letter.sign
        ):
            stack.pop()
        else:
            stack.append(letter)
    return Word(w.strands, tuple(stack))


def stats(w: Word) -> tuple[int, int]:
    """(sigma exponent sum, number of pre-crossing letters)."""
    return sum(l.sign for l in w.letters), w.pre_count


def require_classical(w: Word) -> None:
    for letter in w.letters:
        if not letter.kind.is_sigma:
            raise PreCrossingError(f"classical braid word expected, found {letter}")


def from_letters(n: int, letters: Iterable[Letter]) -> Word:
    return Word(n, tuple(letters))


def as_ints(w: Word) -> Sequence[int]:
    """Signed-integer view of a classical word: +i for sigma_i, -i for its inverse."""
    require_classical(w)
    return [l.sign * l.index for l in w.letters]
