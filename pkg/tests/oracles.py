"""
Test-only oracles. None of these use the Garside or group-ring code.

- ``artin_image``: the action of B_n on the free group F_n (Artin's faithful
  representation), so two classical words are equal in B_n iff their images
  agree.
- ``brute_eta``: the desingularization expanded over all resolutions, with
  terms keyed by Artin image.
- ``brute_profile``: the resolution profile, with linking numbers read off
  over-crossings only.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from fractions import Fraction

from pseudobraid.words import Kind, Letter, Word


def _reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def _substitute(images, word):
    out = []
    for x in word:
        piece = images[abs(x) - 1]
        out.extend(piece if x > 0 else [-y for y in reversed(piece)])
    return _reduce(out)


def _letter_action(n, sign, i):
    """Images of x_1..x_n under sigma_i^sign (free generators are 1..n)."""
    images = [[j] for j in range(1, n + 1)]
    if sign > 0:
        images[i - 1] = [i, i + 1, -i]
        images[i] = [i]
    else:
        images[i - 1] = [i + 1]
        images[i] = [-(i + 1), i, i + 1]
    return images


def artin_image(w: Word) -> tuple[tuple[int, ...], ...]:
    n = w.strands
    images = [[j] for j in range(1, n + 1)]
    for l in w.letters:
        if not l.kind.is_sigma:
            raise ValueError("classical words only")
        action = _letter_action(n, l.sign, l.index)
        images = [_substitute(images, action[j]) for j in range(n)]
    return tuple(tuple(x) for x in images)


def braid_equal(u: Word, v: Word) -> bool:
    return artin_image(u) == artin_image(v)


def brute_eta(w: Word) -> dict:
    """Sum over resolutions of (product of choices) * [resolved braid]."""
    markers = [k for k, l in enumerate(w.letters) if l.kind.is_marker]
    out = defaultdict(int)
    for choice in itertools.product((1, -1), repeat=len(markers)):
        letters = list(w.letters)
        coeff = 1
        for k, c in zip(markers, choice):
            coeff *= c
            letters[k] = Letter(Kind.SIGMA_POS if c > 0 else Kind.SIGMA_NEG, letters[k].index)
        out[artin_image(Word(w.strands, tuple(letters)))] += coeff
    return {k: c for k, c in out.items() if c}


def brute_profile(w: Word) -> dict:
    """
    (components, sorted doubled linkings) -> weight, over all resolutions.

    Components come from union-find on the closure; each linking number is
    counted from crossings where the first component passes over the second
    (the strand moving from position i to i+1 is over in sigma_i).
    """
    n = w.strands
    markers = [k for k, l in enumerate(w.letters) if l.kind.is_marker]
    result = Counter()
    for choice in itertools.product((1, -1), repeat=len(markers)):
        signs = [l.sign for l in w.letters]
        for k, c in zip(markers, choice):
            signs[k] = c
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        at = list(range(n))
        crossings = []
        for l, s in zip(w.letters, signs):
            i = l.index - 1
            left, right = at[i], at[i + 1]
            # left strand moves right; it is over for a positive crossing.
            over, under = (left, right) if s > 0 else (right, left)
            crossings.append((over, under, s))
            at[i], at[i + 1] = right, left
        for pos, strand in enumerate(at):
            ra, rb = find(strand), find(pos)
            if ra != rb:
                parent[ra] = rb
        roots = sorted({find(x) for x in range(n)})
        over_sum = defaultdict(int)
        for over, under, s in crossings:
            a, b = find(over), find(under)
            if a != b:
                over_sum[a, b] += s
        doubled = sorted(2 * over_sum[a, b] for a in roots for b in roots if a < b)
        result[len(roots), tuple(doubled)] += Fraction(1, 2 ** len(markers))
    return dict(result)


def all_words(n: int, max_len: int, kinds=(Kind.SIGMA_POS, Kind.SIGMA_NEG, Kind.PRE)):
    alphabet = [Letter(k, i) for i in range(1, n) for k in kinds]
    for length in range(max_len + 1):
        for letters in itertools.product(alphabet, repeat=length):
            yield Word(n, letters)
