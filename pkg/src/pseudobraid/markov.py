"""
Markov moves on the graded union of the pseudo braid monoids.

    M1  beta <-> a^-1 beta a           a a classical braid on the same strands
    M2  beta1 beta2 <-> beta2 beta1
    M3  beta <-> beta sigma_n^{+-1}    (n -> n+1)
    M4  beta <-> beta p_n              (n -> n+1)

Moves are small frozen dataclasses; ``parse_move``/``Move.spec`` implement the
text form used on the command line (``M1:s1``, ``M2:3``, ``M3:+``, ``M3:-d``,
``M4``, ``M4:d``).
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import MoveError, PreCrossingError
from .ring import equal_pm
from .words import Kind, Letter, Word, parse, pre, require_classical, sigma, sigma_inv, stats, underlying_permutation

__all__ = [
    "Conjugate",
    "CyclicShift",
    "SigmaStab",
    "PreStab",
    "MarkovMove",
    "inverse",
    "apply_move",
    "apply_moves",
    "parse_move",
    "markov_search",
]


@dataclass(frozen=True)
class Conjugate:
    """M1: beta -> a^-1 beta a."""

    conjugator: Word

    def spec(self) -> str:
        return "M1:" + ",".join(str(l) for l in self.conjugator.letters)


@dataclass(frozen=True)
class CyclicShift:
    """M2: split beta after ``split`` letters and swap the halves."""

    split: int

    def spec(self) -> str:
        return f"M2:{self.split}"


@dataclass(frozen=True)
class SigmaStab:
    """M3: append (or remove) sigma_n^sign on a new last strand."""

    sign: int
    destab: bool = False

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise MoveError(f"M3 sign must be +1 or -1, got {self.sign!r}")

    def spec(self) -> str:
        return "M3:" + ("+" if self.sign > 0 else "-") + ("d" if self.destab else "")


@dataclass(frozen=True)
class PreStab:
    """M4: append (or remove) p_n on a new last strand."""

    destab: bool = False

    def spec(self) -> str:
        return "M4:d" if self.destab else "M4"


MarkovMove = Union[Conjugate, CyclicShift, SigmaStab, PreStab]

_MOVE = re.compile(r"M([1-4])(?::(.*))?")


def parse_move(text: str, n: int) -> MarkovMove:
    """Parse one move; ``n`` is the strand count of the word it will act on."""
    m = _MOVE.fullmatch(text.strip())
    if m is None:
        raise MoveError(f"malformed move {text!r}")
    kind, arg = m.group(1), m.group(2)
    if kind == "1":
        if arg is None:
            raise MoveError("M1 needs a conjugator, e.g. M1:s1")
        return Conjugate(parse(arg.replace(",", " "), n))
    if kind == "2":
        if arg is None or not re.fullmatch(r"[0-9]+", arg):
            raise MoveError(f"M2 needs a non-negative split, got {text!r}")
        return CyclicShift(int(arg))
    if kind == "3":
        if arg not in ("+", "-", "+d", "-d"):
            raise MoveError(f"M3 argument must be one of +, -, +d, -d, got {arg!r}")
        return SigmaStab(1 if arg[0] == "+" else -1, arg.endswith("d"))
    if arg not in (None, "d"):
        raise MoveError(f"M4 argument must be empty or d, got {arg!r}")
    return PreStab(arg == "d")


def inverse(a: Word) -> Word:
    """Inverse of a classical braid word: reversed, every sign flipped."""
    try:
        require_classical(a)
    except PreCrossingError as e:
        raise PreCrossingError(f"only classical braids are invertible in PM_n: {e}") from None
    return Word(a.strands, tuple(l.inverse() for l in reversed(a.letters)))


def _destab_letter(beta: Word, kind: Kind) -> None:
    n = beta.strands
    if n < 3:
        raise MoveError(f"cannot destabilize below 2 strands (word has {n})")
    if not beta.letters:
        raise MoveError("cannot destabilize the empty word")
    last = beta.letters[-1]
    if last.kind is not kind or last.index != n - 1:
        raise MoveError(f"destabilization needs last letter {kind.value}{n - 1}, found {last}")
    if any(l.index == n - 1 for l in beta.letters[:-1]):
        raise MoveError(f"index {n - 1} occurs before the last letter")


def apply_move(beta: Word, move: MarkovMove) -> Word:
    """
    >>> from .words import parse
    >>> w = apply_move(parse("s1", 2), SigmaStab(1))
    >>> w.strands, str(w)
    (3, 's1 s2')
    """
    n = beta.strands
    if isinstance(move, Conjugate):
        a = move.conjugator
        if a.strands != n:
            raise MoveError(f"conjugator on {a.strands} strands, word on {n}")
        if not a.is_classical:
            raise MoveError("M1 conjugator must be a classical braid")
        return Word(n, inverse(a).letters + beta.letters + a.letters)
    if isinstance(move, CyclicShift):
        s = move.split
        if not 0 <= s <= len(beta):
            raise MoveError(f"split {s} outside [0, {len(beta)}]")
        return Word(n, beta.letters[s:] + beta.letters[:s])
    if isinstance(move, SigmaStab):
        kind = Kind.SIGMA_POS if move.sign > 0 else Kind.SIGMA_NEG
        if move.destab:
            _destab_letter(beta, kind)
            return Word(n - 1, beta.letters[:-1])
        return Word(n + 1, beta.letters + (Letter(kind, n),))
    if isinstance(move, PreStab):
        if move.destab:
            _destab_letter(beta, Kind.PRE)
            return Word(n - 1, beta.letters[:-1])
        return Word(n + 1, beta.letters + (pre(n),))
    raise TypeError(f"not a Markov move: {move!r}")


def apply_moves(beta: Word, moves) -> Word:
    for m in moves:
        beta = apply_move(beta, m)
    return beta


# --- bounded search -------------------------------------------------------

State = tuple[int, tuple[Letter, ...]]


def _successors(state: State, n_max: int, size_cap: int) -> Iterator[tuple[MarkovMove, State]]:
    n, letters = state
    L = len(letters)
    if L + 2 <= size_cap:
        for i in range(1, n):
            for gen in (sigma(i), sigma_inv(i)):
                yield Conjugate(Word(n, (gen,))), (n, (gen.inverse(),) + letters + (gen,))
    for s in range(1, L):
        yield CyclicShift(s), (n, letters[s:] + letters[:s])
    if n + 1 <= n_max and L + 1 <= size_cap:
        yield SigmaStab(1), (n + 1, letters + (sigma(n),))
        yield SigmaStab(-1), (n + 1, letters + (sigma_inv(n),))
        yield PreStab(), (n + 1, letters + (pre(n),))
    if n >= 3 and letters and letters[-1].index == n - 1 and all(l.index < n - 1 for l in letters[:-1]):
        last = letters[-1]
        if last.kind is Kind.SIGMA_POS:
            yield SigmaStab(1, True), (n - 1, letters[:-1])
        elif last.kind is Kind.SIGMA_NEG:
            yield SigmaStab(-1, True), (n - 1, letters[:-1])
        elif last.kind is Kind.PRE:
            yield PreStab(True), (n - 1, letters[:-1])


def _predecessors(state: State, n_max: int, size_cap: int) -> Iterator[tuple[MarkovMove, State]]:
    """Every (move, x) among the searched move set with apply_move(x, move) == state."""
    m, letters = state
    L = len(letters)
    if L >= 2:
        last = letters[-1]
        if last.kind.is_sigma and letters[0] == last.inverse():
            yield Conjugate(Word(m, (last,))), (m, letters[1:-1])
    for s in range(1, L):
        # x = letters[L-s:] + letters[:L-s] shifted by s gives back letters.
        yield CyclicShift(s), (m, letters[L - s:] + letters[: L - s])
    if m >= 3 and letters and letters[-1].index == m - 1 and all(l.index < m - 1 for l in letters[:-1]):
        last = letters[-1]
        if last.kind is Kind.SIGMA_POS:
            yield SigmaStab(1), (m - 1, letters[:-1])
        elif last.kind is Kind.SIGMA_NEG:
            yield SigmaStab(-1), (m - 1, letters[:-1])
        elif last.kind is Kind.PRE:
            yield PreStab(), (m - 1, letters[:-1])
    if m + 1 <= n_max and L + 1 <= size_cap:
        yield SigmaStab(1, True), (m + 1, letters + (sigma(m),))
        yield SigmaStab(-1, True), (m + 1, letters + (sigma_inv(m),))
        yield PreStab(True), (m + 1, letters + (pre(m),))


def _layered(start: State, radius: int, step) -> dict[State, tuple[int, State | None, MarkovMove | None]]:
    seen = {start: (0, None, None)}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        d = seen[x][0]
        if d == radius:
            continue
        for move, y in step(x):
            if y not in seen:
                seen[y] = (d + 1, x, move)
                queue.append(y)
    return seen


def _signature(w: Word):
    return w.strands, stats(w), underlying_permutation(w)


def markov_search(
    beta: Word,
    target: Word,
    move_budget: int,
    size_cap: int | None = None,
) -> list[MarkovMove] | None:
    """
    Look for at most ``move_budget`` Markov moves taking beta to a word equal
    to target in PM. Returns the moves, or None when nothing was found (which
    proves nothing).

    A certificate that reproduces target letter for letter is preferred; only
    if none exists within the budget is a word merely equal to target accepted.
    Conjugators are single generators. The search runs forwards from beta and
    backwards from target over exact predecessors, meeting in the middle.
    Forward states whose cheap invariants match target are then tested with
    ``equal_pm``.
    """
    if move_budget < 0:
        raise ValueError("move budget must be non-negative")
    if size_cap is None:
        size_cap = max(len(beta), len(target)) + 2 * move_budget
    if size_cap < 0:
        raise ValueError("size cap must be non-negative")
    n_max = max(beta.strands, target.strands) + move_budget

    start: State = (beta.strands, beta.letters)
    goal: State = (target.strands, target.letters)
    fwd = _layered(start, (move_budget + 1) // 2, lambda s: _successors(s, n_max, size_cap))
    bwd = _layered(goal, move_budget // 2, lambda s: _predecessors(s, n_max, size_cap))

    def forward_moves(x: State) -> list[MarkovMove]:
        out = []
        while fwd[x][1] is not None:
            _, prev, move = fwd[x]
            out.append(move)
            x = prev
        return out[::-1]

    def backward_moves(x: State) -> list[MarkovMove]:
        out = []
        while bwd[x][1] is not None:
            _, nxt, move = bwd[x]
            out.append(move)
            x = nxt
        return out

    best: list[MarkovMove] | None = None
    for x, (d, _, _) in fwd.items():
        if x in bwd and (best is None or d + bwd[x][0] < len(best)):
            best = forward_moves(x) + backward_moves(x)
    if best is not None:
        return best

    # No literal certificate: accept reaching any word equal to target.
    target_sig = _signature(target)
    for x in fwd:
        w = Word(x[0], x[1])
        if _signature(w) == target_sig and equal_pm(w, target):
            return forward_moves(x)
    return None
