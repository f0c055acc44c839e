"""
Left-greedy Garside normal form for the classical braid group B_n.

Every braid is written uniquely as Δ^k A_1 ... A_r where Δ is the half-twist,
k is an integer (the infimum) and each A_j is a permutation braid other than
the identity and Δ, with every consecutive pair left-weighted: each generator
that can start A_{j+1} already ends A_j.

Permutation braids are stored as permutations of 0..n-1 in image form:
``perm[j]`` is the final position of the strand that starts at position j,
letters acting left to right. Two strands cross in the permutation braid
exactly when the permutation inverts them, so

- sigma_j can start A  iff  A[j] > A[j+1]               (starting set)
- sigma_j can end A    iff  A^-1[j] > A^-1[j+1]         (finishing set)

Negative letters are absorbed via sigma_i^-1 = Δ^-1 (Δ sigma_i^-1), and the
Δ^-1 is slid left with the flip automorphism sigma_i -> sigma_{n-i}.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreCrossingError, StrandMismatchError
from .words import Kind, Letter, Permutation, Word, sigma, sigma_inv

Perm = tuple[int, ...]

__all__ = [
    "NormalForm",
    "normal_form",
    "nf_equal",
    "nf_to_word",
    "nf_multiply",
    "nf_multiply_letter",
    "identity_nf",
    "delta_word",
    "permutation_braid_word",
    "parse_key",
]


@functools.lru_cache(maxsize=None)
def _identity(n: int) -> Perm:
    return tuple(range(n))


@functools.lru_cache(maxsize=None)
def _delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


@functools.lru_cache(maxsize=None)
def _generator(n: int, j: int) -> Perm:
    p = list(range(n))
    p[j], p[j + 1] = p[j + 1], p[j]
    return tuple(p)


def _inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


@functools.lru_cache(maxsize=None)
def _starting_set(a: Perm) -> int:
    mask = 0
    for j in range(len(a) - 1):
        if a[j] > a[j + 1]:
            mask |= 1 << j
    return mask


@functools.lru_cache(maxsize=None)
def _finishing_set(a: Perm) -> int:
    return _starting_set(_inverse(a))


@functools.lru_cache(maxsize=None)
def _flip(a: Perm) -> Perm:
    """Conjugate by Δ: sigma_j <-> sigma_{n-2-j} in 0-based indexing."""
    n = len(a)
    return tuple(n - 1 - a[n - 1 - j] for j in range(n))


@functools.lru_cache(maxsize=None)
def _left_complement(a: Perm) -> Perm:
    """The simple element X with X·a = Δ."""
    inv = _inverse(a)
    d = _delta(len(a))
    return tuple(inv[d[j]] for j in range(len(a)))


@functools.lru_cache(maxsize=None)
def _right_complement(a: Perm) -> Perm:
    """The simple element Y with a·Y = Δ."""
    inv = _inverse(a)
    d = _delta(len(a))
    return tuple(d[inv[q]] for q in range(len(a)))


@functools.lru_cache(maxsize=None)
def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """
    Rewrite the product a·b of simples as a'·b' with the pair left-weighted.

    Generators sigma_j that start b but do not end a are moved across one at a
    time; a·sigma_j stays simple precisely because j is not in F(a).
    """
    a_l = list(a)
    b_l = list(b)
    while True:
        move = _starting_set(tuple(b_l)) & ~_finishing_set(tuple(a_l))
        if not move:
            return tuple(a_l), tuple(b_l)
        j = (move & -move).bit_length() - 1
        # a·sigma_j swaps the values j, j+1 in a's image list.
        for x in range(len(a_l)):
            if a_l[x] == j:
                a_l[x] = j + 1
            elif a_l[x] == j + 1:
                a_l[x] = j
        # sigma_j^-1·b swaps the entries at positions j, j+1.
        b_l[j], b_l[j + 1] = b_l[j + 1], b_l[j]


def _is_left_weighted(a: Perm, b: Perm) -> bool:
    return not (_starting_set(b) & ~_finishing_set(a))


def _normalize(inf: int, factors: list[Perm], n: int) -> tuple[int, tuple[Perm, ...]]:
    """Bring Δ^inf · factors into left normal form."""
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 2, -1, -1):
            a, b = factors[i], factors[i + 1]
            if not _is_left_weighted(a, b):
                factors[i], factors[i + 1] = _left_weight(a, b)
                changed = True
    return _strip(inf, factors, n)


def _strip(inf: int, factors: list[Perm], n: int) -> tuple[int, tuple[Perm, ...]]:
    """Absorb leading Δ factors into the infimum and drop trailing identities."""
    ident = _identity(n)
    delta = _delta(n)
    lo = 0
    while lo < len(factors) and factors[lo] == delta:
        lo += 1
    hi = len(factors)
    while hi > lo and factors[hi - 1] == ident:
        hi -= 1
    return inf + lo, tuple(factors[lo:hi])


def _push(inf: int, factors: tuple[Perm, ...], new: Perm, n: int) -> tuple[int, tuple[Perm, ...]]:
    """Right-multiply a normal form by one simple element."""
    fs = list(factors)
    fs.append(new)
    # One backward comb suffices when the input was normal; it stops as soon
    # as a pair is already left-weighted.
    for i in range(len(fs) - 2, -1, -1):
        a, b = fs[i], fs[i + 1]
        if _is_left_weighted(a, b):
            break
        fs[i], fs[i + 1] = _left_weight(a, b)
    return _strip(inf, fs, n)


@dataclass(frozen=True, slots=True)
class NormalForm:
    """Δ^inf · factors, with factors stored as 0-based permutation tuples."""

    strands: int
    inf: int
    factors: tuple[Perm, ...] = ()

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def factor_permutations(self) -> list[Permutation]:
        return [Permutation(tuple(x + 1 for x in f)) for f in self.factors]

    def key(self) -> str:
        """Serialization ``k|perm1/perm2/...`` with 1-based comma-separated images."""
        body = "/".join(",".join(str(x + 1) for x in f) for f in self.factors)
        return f"{self.inf}|{body}"

    def __str__(self) -> str:
        return self.key()


def parse_key(key: str, n: int) -> NormalForm:
    head, _, body = key.partition("|")
    factors = []
    if body:
        for chunk in body.split("/"):
            f = tuple(int(x) - 1 for x in chunk.split(","))
            if sorted(f) != list(range(n)):
                raise ValueError(f"bad factor {chunk!r} for n={n}")
            factors.append(f)
    nf = NormalForm(n, int(head), tuple(factors))
    if _normalize(nf.inf, list(nf.factors), n) != (nf.inf, nf.factors):
        raise ValueError(f"{key!r} is not a normal form")
    return nf


def identity_nf(n: int) -> NormalForm:
    return NormalForm(n, 0, ())


def nf_multiply_letter(x: NormalForm, letter: Letter) -> NormalForm:
    n = x.strands
    j = letter.index - 1
    if letter.kind is Kind.SIGMA_POS:
        inf, fs = _push(x.inf, x.factors, _generator(n, j), n)
    elif letter.kind is Kind.SIGMA_NEG:
        flipped = tuple(_flip(f) for f in x.factors)
        inf, fs = _push(x.inf - 1, flipped, _left_complement(_generator(n, j)), n)
    else:
        raise PreCrossingError(f"classical braid word expected, found {letter}")
    return NormalForm(n, inf, fs)


def nf_multiply(x: NormalForm, y: NormalForm) -> NormalForm:
    if x.strands != y.strands:
        raise StrandMismatchError(f"cannot multiply braids on {x.strands} and {y.strands} strands")
    n = x.strands
    fs = x.factors
    if y.inf % 2:
        fs = tuple(_flip(f) for f in fs)
    inf = x.inf + y.inf
    for f in y.factors:
        inf, fs = _push(inf, fs, f, n)
    return NormalForm(n, inf, fs)


def normal_form(w: Word) -> NormalForm:
    """
    Left normal form of a classical braid word.

    >>> normal_form(Word(3, (sigma(1), sigma(2), sigma(1)))).key()
    '1|'
    >>> normal_form(Word(2, (sigma_inv(1),))).key()
    '-1|'
    """
    pos, neg = Kind.SIGMA_POS, Kind.SIGMA_NEG
    code = []
    for l in w.letters:
        if l.kind is pos:
            code.append(l.index)
        elif l.kind is neg:
            code.append(-l.index)
        else:
            raise PreCrossingError(f"classical braid word expected, found {l}")
    return _normal_form_code(w.strands, tuple(code))


@functools.lru_cache(maxsize=1 << 20)
def _normal_form_code(n: int, code: tuple[int, ...]) -> NormalForm:
    # Keyed on signed ints, not Letters, so hashing stays cheap; prefix
    # caching makes exhaustive sweeps over related words fast.
    if not code:
        return identity_nf(n)
    x = _normal_form_code(n, code[:-1])
    i = code[-1]
    if i > 0:
        inf, fs = _push(x.inf, x.factors, _generator(n, i - 1), n)
    else:
        flipped = tuple(_flip(f) for f in x.factors)
        inf, fs = _push(x.inf - 1, flipped, _left_complement(_generator(n, -i - 1)), n)
    return NormalForm(n, inf, fs)


def nf_equal(u: Word, v: Word) -> bool:
    if u.strands != v.strands:
        raise StrandMismatchError(f"words on {u.strands} and {v.strands} strands")
    return normal_form(u) == normal_form(v)


def delta_word(n: int) -> tuple[Letter, ...]:
    """Δ as sigma_1 sigma_2 sigma_1 sigma_3 sigma_2 sigma_1 ..."""
    return tuple(sigma(i) for m in range(1, n) for i in range(m, 0, -1))


def permutation_braid_word(perm: Sequence[int]) -> tuple[Letter, ...]:
    """Positive word for a permutation braid, always peeling the lowest starting generator."""
    p = list(perm)
    out = []
    while True:
        for j in range(len(p) - 1):
            if p[j] > p[j + 1]:
                break
        else:
            return tuple(out)
        out.append(sigma(j + 1))
        p[j], p[j + 1] = p[j + 1], p[j]


def _inverse_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    return tuple(l.inverse() for l in reversed(tuple(letters)))


def nf_to_word(nf: NormalForm) -> Word:
    """
    A classical word spelling the normal form.

    Δ^k with k > 0 is spelled with ``delta_word``. For k < 0 the innermost Δ^-1
    is merged with the first factor, Δ^-1 A = (A^-1 Δ)^-1, and any remaining
    Δ^-1 powers are the reversed inverse of ``delta_word``.
    """
    n = nf.strands
    letters: list[Letter] = []
    factors = list(nf.factors)
    if nf.inf >= 0:
        letters.extend(delta_word(n) * nf.inf)
    else:
        inv_delta = _inverse_letters(delta_word(n))
        if factors:
            letters.extend(inv_delta * (-nf.inf - 1))
            first = factors.pop(0)
            letters.extend(_inverse_letters(permutation_braid_word(_right_complement(first))))
        else:
            letters.extend(inv_delta * (-nf.inf))
    for f in factors:
        letters.extend(permutation_braid_word(f))
    return Word(n, tuple(letters))
