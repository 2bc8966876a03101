"""Garnir, snake, basic, and supplementary relations on tabloid spaces."""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable, Iterator

from .gfp import Subspace, SpanBuilder
from .partitions import Partition
from .tableaux import Box, Tableau, TableauClass, enumerate_tableaux
from .tabloids import (
    ALT_COLUMN,
    TabloidBasis,
    TabloidKind,
    TabloidVector,
    build_basis,
    canonicalize,
    skew_column,
    vector_from_terms,
)

SnakeRule = Callable[[Tableau], "Box | None"]


@dataclass(frozen=True)
class GarnirLabel:
    """A tableau with box subsets A, B of two columns j < j' such that
    |A| + |B| exceeds the height of column j."""

    t: Tableau
    A: tuple[Box, ...]
    B: tuple[Box, ...]

    def validate(self) -> None:
        shape = self.t.shape
        conj = shape.conjugate()
        if not self.A or not self.B:
            raise ValueError("A and B must be nonempty")
        ja = {j for _, j in self.A}
        jb = {j for _, j in self.B}
        if len(ja) != 1 or len(jb) != 1:
            raise ValueError("A and B must each lie in a single column")
        j, j2 = ja.pop(), jb.pop()
        if not 1 <= j < j2 <= shape[0]:
            raise ValueError(f"need columns j < j' within the shape, got {j}, {j2}")
        for i, jj in self.A + self.B:
            if not 1 <= i <= conj.part(jj):
                raise ValueError(f"box ({i},{jj}) outside the shape")
        if len(set(self.A)) != len(self.A) or len(set(self.B)) != len(self.B):
            raise ValueError("repeated boxes")
        if len(self.A) + len(self.B) <= conj.part(j):
            raise ValueError("|A| + |B| must exceed the left column height")


def snake_label(t: Tableau, i: int, j: int) -> GarnirLabel:
    """The label with A the bottom of column j from row i and B the top of
    column j+1 down to row i."""
    conj = t.shape.conjugate()
    if not (1 <= j < t.shape[0] and 1 <= i <= conj.part(j + 1)):
        raise ValueError(f"snake box ({i},{j}) out of range for shape {t.shape}")
    A = tuple((x, j) for x in range(i, conj.part(j) + 1))
    B = tuple((x, j + 1) for x in range(1, i + 1))
    return GarnirLabel(t, A, B)


def default_snake_rule(t: Tableau) -> Box | None:
    """Box (i, j) with j least, then i greatest, where the entry strictly
    exceeds its right neighbour; None when the tableau is row semistandard."""
    heights = [len(c) for c in t.cols]
    for j in range(1, len(t.cols)):
        best = None
        for i in range(1, heights[j] + 1):
            if t.entry(i, j) > t.entry(i, j + 1):
                best = (i, j)
        if best is not None:
            return best
    return None


def garnir_terms(
    label: GarnirLabel,
    kind: TabloidKind,
    _shuffle: random.Random | None = None,
) -> dict[Tableau, int]:
    """Integer coefficients of the relation on canonical representatives.

    The sum runs over one representative per left coset of the group
    permuting A and B separately. A representative is recorded by the set
    of boxes of A|B whose entries move into A; entries transfer
    order-preservingly within each part, and the sign is the parity of
    that rearrangement. ``_shuffle`` composes each representative with a
    random element of the subgroup, which must not change the result.
    """
    label.validate()
    boxes_a = sorted(label.A)
    boxes_b = sorted(label.B)
    all_boxes = boxes_a + boxes_b
    entries = [label.t.entry(i, j) for i, j in all_boxes]
    k, m = len(boxes_a), len(boxes_b)
    out: dict[Tableau, int] = {}
    base_cols = [list(c) for c in label.t.cols]
    for chosen in combinations(range(k + m), k):
        rest = [x for x in range(k + m) if x not in chosen]
        inv = sum(1 for a in chosen for b in rest if a > b)
        sign = -1 if inv & 1 else 1
        cols = [c[:] for c in base_cols]
        for (i, j), src in zip(boxes_a, chosen):
            cols[j - 1][i - 1] = entries[src]
        for (i, j), src in zip(boxes_b, rest):
            cols[j - 1][i - 1] = entries[src]
        if _shuffle is not None:
            sign *= _permute_within(cols, boxes_a, _shuffle)
            sign *= _permute_within(cols, boxes_b, _shuffle)
        st = canonicalize(Tableau(cols), kind)
        if st.is_zero:
            continue
        out[st.rep] = out.get(st.rep, 0) + sign * st.sign
    if kind.family == "skew" and kind.p == 2:
        # Signs are not tracked mod 2, so only the parity of each
        # coefficient is canonical (transversal independent).
        return {t: c % 2 for t, c in out.items() if c % 2}
    return {t: c for t, c in out.items() if c}


def _permute_within(cols: list[list[int]], boxes: list[Box], rng: random.Random) -> int:
    perm = list(range(len(boxes)))
    rng.shuffle(perm)
    values = [cols[j - 1][i - 1] for i, j in boxes]
    for (i, j), src in zip(boxes, perm):
        cols[j - 1][i - 1] = values[src]
    inv = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
    return -1 if inv & 1 else 1


def garnir_relation(
    label: GarnirLabel, kind: TabloidKind, basis: TabloidBasis, p: int
) -> TabloidVector:
    return vector_from_terms(basis, p, garnir_terms(label, kind))


def snake_relation(
    t: Tableau, i: int, j: int, kind: TabloidKind, basis: TabloidBasis, p: int
) -> TabloidVector:
    return garnir_relation(snake_label(t, i, j), kind, basis, p)


class RelationKind(Enum):
    ALT_BASIC_SNAKE = "alt_basic_snake"
    SKEW_BASIC_SNAKE = "skew_basic_snake"
    SKEW_SUPPLEMENTARY = "skew_supplementary"
    ALL_ADJACENT_SNAKES = "all_adjacent_snakes"
    EXHAUSTIVE_GARNIR = "exhaustive_garnir"


_EXHAUSTIVE_MAX_N = 5


def tabloid_kind_for(rel_kind: RelationKind, p: int) -> TabloidKind:
    if rel_kind is RelationKind.ALT_BASIC_SNAKE:
        return ALT_COLUMN
    return skew_column(p)


def iter_relation_labels(
    shape: Partition,
    d: int,
    rel_kind: RelationKind,
    tabloid_kind: TabloidKind,
    rule: SnakeRule | None = None,
) -> Iterator[GarnirLabel]:
    """Deterministic label stream for each relation family."""
    rule = rule or default_snake_rule
    conj = shape.conjugate()
    column_class = (
        TableauClass.COLUMN_SEMISTANDARD
        if tabloid_kind.family == "skew" and tabloid_kind.p == 2
        else TableauClass.COLUMN_STANDARD
    )
    if rel_kind in (RelationKind.ALT_BASIC_SNAKE, RelationKind.SKEW_BASIC_SNAKE):
        for t in enumerate_tableaux(shape, d, column_class):
            box = rule(t)
            if box is not None:
                yield snake_label(t, box[0], box[1])
    elif rel_kind is RelationKind.SKEW_SUPPLEMENTARY:
        for t in enumerate_tableaux(
            shape, d, TableauClass.ROW_AND_COLUMN_SEMISTANDARD
        ):
            for j in range(1, shape[0]):
                for i in range(1, conj.part(j + 1) + 1):
                    if t.entry(i, j) == t.entry(i, j + 1):
                        yield snake_label(t, i, j)
    elif rel_kind is RelationKind.ALL_ADJACENT_SNAKES:
        for t in enumerate_tableaux(shape, d, column_class):
            for j in range(1, shape[0]):
                for i in range(1, conj.part(j + 1) + 1):
                    yield snake_label(t, i, j)
    elif rel_kind is RelationKind.EXHAUSTIVE_GARNIR:
        if shape.n > _EXHAUSTIVE_MAX_N:
            raise ValueError("exhaustive generation is capped at 5 boxes")
        for t in enumerate_tableaux(shape, d, TableauClass.ALL):
            for j in range(1, shape[0]):
                hj, hj2 = conj.part(j), conj.part(j + 1)
                col_j = [(i, j) for i in range(1, hj + 1)]
                col_j2 = [(i, j + 1) for i in range(1, hj2 + 1)]
                for ka in range(1, hj + 1):
                    for A in combinations(col_j, ka):
                        for kb in range(max(1, hj - ka + 1), hj2 + 1):
                            for B in combinations(col_j2, kb):
                                yield GarnirLabel(t, A, B)
    else:  # pragma: no cover
        raise ValueError(f"unknown relation kind {rel_kind}")


@dataclass
class RelationSet:
    """Relations of one family over one tabloid space, labels kept in
    parallel; zero relations are retained rather than filtered."""

    kind: RelationKind
    shape: Partition
    d: int
    p: int
    basis: TabloidBasis
    relations: list[TabloidVector]
    labels: list[GarnirLabel]


def generate_relation_set(
    shape: Partition,
    d: int,
    p: int,
    rel_kind: RelationKind,
    rule: SnakeRule | None = None,
) -> RelationSet:
    tk = tabloid_kind_for(rel_kind, p)
    basis = build_basis(shape, d, tk)
    labels: list[GarnirLabel] = []
    vectors: list[TabloidVector] = []
    for label in iter_relation_labels(shape, d, rel_kind, tk, rule):
        labels.append(label)
        vectors.append(vector_from_terms(basis, p, garnir_terms(label, tk)))
    return RelationSet(rel_kind, shape, d, p, basis, vectors, labels)


def relation_span(relset: RelationSet) -> Subspace:
    builder = SpanBuilder(relset.basis.dim, relset.p)
    for vec in relset.relations:
        builder.add(vec.coords)
    return builder.subspace()
