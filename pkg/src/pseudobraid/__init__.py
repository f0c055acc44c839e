"""Pseudo braid monoids: normal forms, equality, Markov moves and closure invariants."""

from .closure import component_count, doubled_linking_numbers, linking_profile, resolve
from .garside import NormalForm, nf_equal, nf_to_word, normal_form
from .markov import apply_move, inverse, markov_search, parse_move
from .oracle import Verdict, bfs_equal, relation_set
from .ring import RingElement, equal_pm, eta, pm2_canonical, ring_add, ring_mul
from .words import (
    Direction,
    Permutation,
    Word,
    concat,
    free_reduce,
    parse,
    relabel,
    render,
    stats,
    underlying_permutation,
)

__version__ = "0.1.0"
