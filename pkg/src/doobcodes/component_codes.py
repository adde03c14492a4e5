"""Nested component codes in H(4,4), D(2,0), D(1,2) and the substitution maps.

Three pairs of additive codes of length 4 are built from their generators:

* ``E'' < E'`` in H(4,4) over GF(4),
* ``D'' < D'`` in D(2,0) over Z4 (two Shrikhande pairs),
* ``C'' < C'`` in D(1,2) over Z4 (one Shrikhande pair and two K4 symbols).

Each small code has 16 words and minimum distance 3, each big code has 64
words and minimum distance 2. Splitting the 256-word space into cosets of
the big code, and each of those into cosets of the small code, gives every
word a label ``(outer, inner, element)``. The maps phi: H(4,4) -> D(2,0) and
psi: H(4,4) -> D(1,2) send a word to the target word carrying the same label,
so they preserve both levels of coset membership.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .algebra import F4_MUL_TABLE, format_f4, format_z4
from .metrics import ALL_WORDS, D12, D20, H44, index_to_word, quad_space, word_to_index

GENERATORS: dict[str, tuple[tuple[int, ...], ...]] = {
    "C''": ((0, 1, 2, 3), (1, 0, 1, 2)),
    "C'": ((0, 1, 2, 3), (1, 0, 1, 2), (0, 0, 1, 1)),
    "D''": ((0, 1, 2, 3), (1, 0, 1, 2)),
    "D'": ((0, 1, 2, 3), (1, 0, 1, 2), (0, 0, 0, 2), (0, 0, 2, 0)),
    # GF(4) codes: x' = (1,1,1,1), y' = (0,1,xi,xi^2), z' = (0,0,1,1)
    "E''": ((1, 1, 1, 1), (0, 1, 2, 3)),
    "E'": ((1, 1, 1, 1), (0, 1, 2, 3), (0, 0, 1, 1)),
}
AMBIENT_OF = {"C": D12, "D": D20, "E": H44}
CODE_NAMES = tuple(GENERATORS)
PAIRS = ("C", "D", "E")

# the 16 words listed for C'' (and D'') in the source construction
CPP_WORDS = (
    (0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 0, 2), (0, 3, 2, 1),
    (1, 0, 1, 2), (1, 1, 3, 1), (1, 2, 1, 0), (1, 3, 3, 3),
    (2, 0, 2, 0), (2, 1, 0, 3), (2, 2, 2, 2), (2, 3, 0, 1),
    (3, 0, 3, 2), (3, 1, 1, 1), (3, 2, 3, 0), (3, 3, 1, 3),
)  # fmt: skip


def _add_table(ambient: str) -> np.ndarray:
    idx = np.arange(256)
    if ambient == H44:
        return np.bitwise_xor.outer(idx, idx)
    sums = (ALL_WORDS[:, None, :].astype(np.int64) + ALL_WORDS[None, :, :]) % 4
    return sums @ np.array([64, 16, 4, 1])


_ADD = {amb: _add_table(amb) for amb in (H44, D20, D12)}


def word_add(ambient: str, a: int, b: int) -> int:
    return int(_ADD[ambient][a, b])


def word_neg(ambient: str, a: int) -> int:
    if ambient == H44:
        return a
    return word_to_index(tuple(-x % 4 for x in index_to_word(a)))


def additive_closure(ambient: str, generators: Sequence[Sequence[int]]) -> frozenset[int]:
    """Subgroup (GF(4)-subspace for H(4,4)) generated by ``generators``.

    Computed as a fixpoint of adding generators; over GF(4) the generators
    are first expanded by their xi- and xi^2-multiples so that the result
    is a linear span rather than a mere additive span.
    """
    gens = {word_to_index(g) for g in generators}
    if ambient == H44:
        gens |= {
            word_to_index([F4_MUL_TABLE[a, x] for x in index_to_word(g)])
            for g in list(gens)
            for a in (2, 3)
        }
    elements = {0}
    frontier = {0}
    add = _ADD[ambient]
    while frontier:
        new = {int(add[w, g]) for w in frontier for g in gens} - elements
        elements |= new
        frontier = new
    return frozenset(elements)


@dataclass(frozen=True, eq=False)
class ComponentCode:
    name: str
    ambient: str
    generators: tuple[tuple[int, ...], ...]
    elements: tuple[int, ...]  # sorted word indices

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, word) -> bool:
        if isinstance(word, (int, np.integer)):
            return int(word) in self.element_set
        return word_to_index(word) in self.element_set

    @cached_property
    def element_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    @cached_property
    def words(self) -> tuple[tuple[int, int, int, int], ...]:
        return tuple(index_to_word(i) for i in self.elements)

    @cached_property
    def word_set(self) -> frozenset[tuple[int, int, int, int]]:
        return frozenset(self.words)


def build_component_code(
    name: str, generators: Sequence[Sequence[int]] | None = None
) -> ComponentCode:
    """Build one of C'', C', D'', D', E'', E' (optionally from other generators)."""
    if name not in GENERATORS:
        raise ValueError(f"unknown component code {name!r}; choose from {CODE_NAMES}")
    gens = tuple(tuple(int(x) for x in g) for g in (generators or GENERATORS[name]))
    ambient = AMBIENT_OF[name[0]]
    elements = tuple(sorted(additive_closure(ambient, gens)))
    return ComponentCode(name, ambient, gens, elements)


@lru_cache(maxsize=None)
def component_code(name: str) -> ComponentCode:
    return build_component_code(name)


def min_distance(code: ComponentCode) -> int:
    """Minimum ambient distance, checked against the minimum nonzero weight."""
    dist = quad_space(code.ambient).distance_table
    idx = np.array(code.elements)
    sub = dist[np.ix_(idx, idx)].astype(np.int64)
    np.fill_diagonal(sub, 127)
    by_pairs = int(sub.min())
    by_weight = int(min(dist[0, w] for w in code.elements if w != 0))
    if by_pairs != by_weight:
        raise AssertionError(
            f"{code.name}: pairwise distance {by_pairs} != minimum weight {by_weight}"
        )
    return by_pairs


@dataclass(frozen=True)
class CosetLabel:
    outer: int
    inner: int
    element: int


class CosetStructure:
    """Two-level coset decomposition of the 256-word space by (small, big).

    Canonical labels: cosets are ordered by their smallest word index
    (lexicographic minimum), and elements by index inside their small coset.
    """

    def __init__(self, small: ComponentCode, big: ComponentCode):
        if small.ambient != big.ambient:
            raise ValueError("codes live in different ambient spaces")
        if not small.element_set <= big.element_set:
            raise ValueError(f"{small.name} is not contained in {big.name}")
        if 256 % len(big) or len(big) % len(small):
            raise ValueError("code sizes do not divide the ambient space")
        self.small = small
        self.big = big
        self.ambient = small.ambient
        add = _ADD[self.ambient]

        labels = np.full((256, 3), -1, dtype=np.int64)
        outer = 0
        for w in range(256):
            if labels[w, 0] >= 0:
                continue
            big_coset = sorted(int(add[w, c]) for c in big.elements)
            inner = 0
            for u in big_coset:
                if labels[u, 0] >= 0:
                    continue
                small_coset = sorted(int(add[u, c]) for c in small.elements)
                for e, t in enumerate(small_coset):
                    labels[t] = (outer, inner, e)
                inner += 1
            outer += 1
        self.labels = labels
        self.n_outer = outer
        self.n_inner = len(big) // len(small)
        self.index_of = np.full((self.n_outer, self.n_inner, len(small)), -1, dtype=np.int64)
        for w in range(256):
            self.index_of[tuple(labels[w])] = w
        # members of the small coset of every word, in element order
        self.small_coset_members = self.index_of[labels[:, 0], labels[:, 1]]

    @property
    def small_coset_ids(self) -> np.ndarray:
        return self.labels[:, 0] * self.n_inner + self.labels[:, 1]

    def label(self, word) -> CosetLabel:
        w = word if isinstance(word, (int, np.integer)) else word_to_index(word)
        return CosetLabel(*(int(x) for x in self.labels[int(w)]))

    def same_small_coset(self, a: int, b: int) -> bool:
        return word_add(self.ambient, a, word_neg(self.ambient, b)) in self.small.element_set

    def same_big_coset(self, a: int, b: int) -> bool:
        return word_add(self.ambient, a, word_neg(self.ambient, b)) in self.big.element_set


@lru_cache(maxsize=None)
def coset_structure(pair: str) -> CosetStructure:
    return CosetStructure(component_code(pair + "''"), component_code(pair + "'"))


def coset_label(structure: CosetStructure, word) -> CosetLabel:
    return structure.label(word)


@dataclass(frozen=True, eq=False)
class SubstitutionMap:
    """Bijection from H(4,4) onto D(2,0) (phi) or D(1,2) (psi), on word indices."""

    flavor: str
    forward: np.ndarray
    inverse: np.ndarray
    target: CosetStructure

    @property
    def target_ambient(self) -> str:
        return self.target.ambient

    def apply(self, word) -> tuple[int, int, int, int]:
        return index_to_word(int(self.forward[word_to_index(word)]))

    def unapply(self, word) -> tuple[int, int, int, int]:
        return index_to_word(int(self.inverse[word_to_index(word)]))

    def export(self) -> str:
        """256 lines ``<source> <target>`` in source lexicographic order."""
        return "".join(
            f"{format_f4(index_to_word(w))} {format_z4(index_to_word(int(self.forward[w])))}\n"
            for w in range(256)
        )


def _transport(source: CosetStructure, target: CosetStructure) -> np.ndarray:
    lab = source.labels
    return target.index_of[lab[:, 0], lab[:, 1], lab[:, 2]].copy()


def substitution_from_forward(
    flavor: str, forward: Sequence[int], target: CosetStructure
) -> SubstitutionMap:
    forward = np.asarray(forward, dtype=np.int64)
    if sorted(forward.tolist()) != list(range(256)):
        raise ValueError("substitution table is not a bijection")
    inverse = np.empty(256, dtype=np.int64)
    inverse[forward] = np.arange(256)
    return SubstitutionMap(flavor, forward, inverse, target)


def build_substitution_map(flavor: str) -> SubstitutionMap:
    """phi (onto D(2,0)) or psi (onto D(1,2)) by canonical label transport."""
    pair = {"phi": "D", "psi": "C"}.get(flavor)
    if pair is None:
        raise ValueError(f"flavor must be 'phi' or 'psi', not {flavor!r}")
    target = coset_structure(pair)
    return substitution_from_forward(flavor, _transport(coset_structure("E"), target), target)


@lru_cache(maxsize=None)
def substitution_map(flavor: str) -> SubstitutionMap:
    return build_substitution_map(flavor)


def preserves_cosets(smap: SubstitutionMap, source: CosetStructure | None = None) -> bool:
    """Both coset-membership biconditionals, checked over all 256^2 pairs."""
    source = source or coset_structure("E")
    src = source.small_coset_ids
    tgt = smap.target.small_coset_ids[smap.forward]
    same_small = (src[:, None] == src[None, :]) == (tgt[:, None] == tgt[None, :])
    src_o = source.labels[:, 0]
    tgt_o = smap.target.labels[smap.forward, 0]
    same_big = (src_o[:, None] == src_o[None, :]) == (tgt_o[:, None] == tgt_o[None, :])
    return bool(same_small.all() and same_big.all())


@dataclass
class NeighbourCountResult:
    pair: str
    passed: bool
    words_checked: int
    counterexample: str | None = None


def lemma3_counting(pair: str | CosetStructure) -> NeighbourCountResult:
    """Every word has exactly one distance-1 neighbour in each foreign small coset.

    A small coset is foreign to ``x`` when it lies outside the big coset of
    ``x``. There are 12 foreign cosets and 12 neighbours, so the neighbours
    must be spread one per foreign coset.
    """
    cs = coset_structure(pair) if isinstance(pair, str) else pair
    name = pair if isinstance(pair, str) else cs.small.name[0]
    dist = quad_space(cs.ambient).distance_table
    ids = cs.small_coset_ids
    n_cosets = cs.n_outer * cs.n_inner
    for x in range(256):
        near = dist[x] == 1
        if near.sum() != 12:
            return NeighbourCountResult(name, False, x, f"word {x} has {near.sum()} neighbours")
        hits = np.bincount(ids[near], minlength=n_cosets)
        for cid in range(n_cosets):
            foreign = cid // cs.n_inner != cs.labels[x, 0]
            expected = 1 if foreign else 0
            if hits[cid] != expected:
                return NeighbourCountResult(
                    name,
                    False,
                    x,
                    f"word {index_to_word(x)}: {hits[cid]} neighbours in coset {cid}",
                )
    return NeighbourCountResult(name, True, 256)
