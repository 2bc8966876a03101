"""Quotient-module assembly: dual Weyl modules and inverse-Schur images.

Both modules are quotients of a tabloid space by a relation span. All
relation generators are weight homogeneous, so spans are built one
weight block at a time; this is what keeps the larger sweeps cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .garnir import (
    RelationKind,
    default_snake_rule,
    garnir_terms,
    iter_relation_labels,
    snake_label,
)
from .gfp import SpanBuilder, Subspace
from .partitions import Partition
from .tableaux import ColOrderResult, Tableau, col_compare
from .tabloids import (
    ALT_COLUMN,
    TabloidBasis,
    TabloidVector,
    build_basis,
    canonicalize,
    has_column_repeat,
    skew_column,
    vector_from_terms,
)

WeightTable = dict[tuple[int, ...], int]


@dataclass
class _Block:
    indices: list[int]  # ambient indices in basis order
    pos: dict[Tableau, int]  # representative -> local coordinate
    span: SpanBuilder
    basic_rank: int = 0

    @property
    def size(self) -> int:
        return len(self.indices)


class QuotientModule:
    """A tabloid space together with a relation span, graded by weight."""

    def __init__(
        self,
        ambient: TabloidBasis,
        p: int,
        blocks: dict[tuple[int, ...], _Block],
        supplementary_rank_gain: int | None = None,
    ):
        self.ambient = ambient
        self.p = p
        self._blocks = blocks
        self.supplementary_rank_gain = supplementary_rank_gain

    @property
    def relation_rank(self) -> int:
        return sum(b.span.rank for b in self._blocks.values())

    @property
    def dim(self) -> int:
        return self.ambient.dim - self.relation_rank

    def weight_table(self) -> WeightTable:
        table = {
            w: b.size - b.span.rank
            for w, b in sorted(self._blocks.items())
        }
        return {w: v for w, v in table.items() if v}

    def weight_dim(self, weight: tuple[int, ...]) -> int:
        block = self._blocks.get(tuple(weight))
        return 0 if block is None else block.size - block.span.rank

    def _split(self, vec: TabloidVector) -> dict[tuple[int, ...], dict[int, int]]:
        if vec.basis is not self.ambient:
            raise ValueError("vector lives over a different basis")
        parts: dict[tuple[int, ...], dict[int, int]] = {}
        for i, c in vec.coords.items():
            w = self.ambient.rep(i).weight(self.ambient.d)
            block = self._blocks[w]
            parts.setdefault(w, {})[block.pos[self.ambient.rep(i)]] = c
        return parts

    def relations_contain(self, vec: TabloidVector) -> bool:
        return all(
            self._blocks[w].span.contains(local)
            for w, local in self._split(vec).items()
        )

    def reduce(self, vec: TabloidVector) -> TabloidVector:
        """Canonical representative of vec in the quotient (zero iff the
        vector lies in the relation span)."""
        coords: dict[int, int] = {}
        for w, local in self._split(vec).items():
            block = self._blocks[w]
            reduced = block.span.subspace().reduce(local)
            for j, c in reduced.items():
                coords[block.indices[j]] = c
        return TabloidVector(self.ambient, self.p, coords)

    def quotient_indices(self) -> list[int]:
        """Ambient indices of the non-pivot coordinates, one per quotient
        basis element."""
        out = []
        for _, block in sorted(self._blocks.items()):
            pivots = set(block.span.subspace().pivot_indices())
            out.extend(
                idx for j, idx in enumerate(block.indices) if j not in pivots
            )
        return sorted(out)

    def full_relation_subspace(self) -> Subspace:
        """Relation span in ambient coordinates; for small spaces only."""
        builder = SpanBuilder(self.ambient.dim, self.p)
        for w, block in self._blocks.items():
            for row in block.span.subspace().basis_rows():
                builder.add(
                    {block.indices[j]: c for j, c in enumerate(row) if c}
                )
        return builder.subspace()


def _make_blocks(basis: TabloidBasis, p: int) -> dict[tuple[int, ...], _Block]:
    blocks: dict[tuple[int, ...], _Block] = {}
    for i, t in enumerate(basis.reps):
        w = t.weight(basis.d)
        block = blocks.get(w)
        if block is None:
            block = blocks[w] = _Block([], {}, SpanBuilder(0, p))
        block.pos[t] = len(block.indices)
        block.indices.append(i)
    for block in blocks.values():
        block.span = SpanBuilder(block.size, p)
    return blocks


def _push_terms(
    blocks: dict[tuple[int, ...], _Block],
    terms: dict[Tableau, int],
    d: int,
    p: int,
) -> bool:
    if not terms:
        return False
    tabs = iter(terms)
    first = next(tabs)
    w = first.weight(d)
    assert all(t.weight(d) == w for t in tabs), "relation is not weight homogeneous"
    block = blocks[w]
    if p == 2:
        mask = 0
        for t, c in terms.items():
            if c % 2:
                mask |= 1 << block.pos[t]
        return block.span.add_mask(mask)
    return block.span.add({block.pos[t]: c for t, c in terms.items()})


@lru_cache(maxsize=256)
def _build(shape: Partition, d: int, p: int, model: str) -> QuotientModule:
    if model == "nabla":
        kind = ALT_COLUMN
        stages = [RelationKind.ALT_BASIC_SNAKE]
    else:
        kind = skew_column(p)
        stages = [RelationKind.SKEW_BASIC_SNAKE, RelationKind.SKEW_SUPPLEMENTARY]
    basis = build_basis(shape, d, kind)
    blocks = _make_blocks(basis, p)
    gain = None
    for stage, rel_kind in enumerate(stages):
        for label in iter_relation_labels(shape, d, rel_kind, kind):
            _push_terms(blocks, garnir_terms(label, kind), d, p)
        if model == "gtensor" and stage == 0:
            for block in blocks.values():
                block.basic_rank = block.span.rank
    if model == "gtensor":
        gain = sum(b.span.rank - b.basic_rank for b in blocks.values())
    return QuotientModule(basis, p, blocks, supplementary_rank_gain=gain)


def build_dual_weyl(shape: Partition, d: int, p: int) -> QuotientModule:
    """Alternating column tabloids modulo the basic snake relations."""
    return _build(shape, d, p, "nabla")


def build_gtensor_specht(shape: Partition, d: int, p: int) -> QuotientModule:
    """Skew column tabloids modulo the basic and supplementary skew snake
    relations; away from characteristic 2 this coincides with the dual
    Weyl construction."""
    return _build(shape, d, p, "gtensor")


def weight_table(module: QuotientModule) -> WeightTable:
    return module.weight_table()


def _gens_by_weight(module: QuotientModule) -> dict[tuple[int, ...], list[int]]:
    """Local positions of the repeated-column-entry representatives."""
    out: dict[tuple[int, ...], list[int]] = {}
    basis = module.ambient
    for t in basis.reps:
        if has_column_repeat(t):
            w = t.weight(basis.d)
            out.setdefault(w, []).append(module._blocks[w].pos[t])
    return out


def verify_iso(shape: Partition, d: int, p: int) -> bool:
    """Whether the canonical surjection onto the dual Weyl module is an
    isomorphism: every kernel generator must lie in the skew relation
    span. Away from characteristic 2 the kernel is zero."""
    if p != 2:
        return True
    module = build_gtensor_specht(shape, d, 2)
    for w, positions in _gens_by_weight(module).items():
        span = module._blocks[w].span
        for pos in positions:
            if span.residual_mask(1 << pos):
                return False
    return True


def u_lambda_weight_table(shape: Partition, d: int) -> WeightTable:
    """Per-weight dimension of the kernel of the surjection onto the dual
    Weyl module, computed as the rank growth of the relation span when the
    kernel generators are adjoined."""
    module = build_gtensor_specht(shape, d, 2)
    table: dict[tuple[int, ...], int] = {}
    for w, positions in sorted(_gens_by_weight(module).items()):
        probe = module._blocks[w].span.copy()
        grown = sum(1 for pos in positions if probe.add_mask(1 << pos))
        if grown:
            table[w] = grown
    return table


def u_lambda_dim(shape: Partition, d: int) -> int:
    return sum(u_lambda_weight_table(shape, d).values())


def straighten(t: Tableau, shape: Partition, d: int, p: int) -> TabloidVector:
    """Express the alternating tabloid of t over semistandard
    representatives by repeatedly subtracting the basic snake relation at
    the greatest non-row-semistandard term."""
    if t.shape != shape:
        raise ValueError("tableau does not have the stated shape")
    basis = build_basis(shape, d, ALT_COLUMN)
    st = canonicalize(t, ALT_COLUMN)
    if st.is_zero:
        return TabloidVector(basis, p, {})
    terms: dict[Tableau, int] = {st.rep: st.sign % p}
    return _straighten_terms(terms, basis, p)


def straighten_vector(vec: TabloidVector) -> TabloidVector:
    return _straighten_terms(dict(vec.terms()), vec.basis, vec.p)


def _straighten_terms(
    terms: dict[Tableau, int], basis: TabloidBasis, p: int
) -> TabloidVector:
    guard = 0
    while True:
        guard += 1
        assert guard < 100_000, "straightening failed to terminate"
        target = None
        for rep, c in terms.items():
            if c % p == 0 or rep.is_row_semistandard():
                continue
            if target is None or _col_greater(rep, target):
                target = rep
        if target is None:
            break
        coeff = terms[target] % p
        box = default_snake_rule(target)
        rel = garnir_terms(snake_label(target, box[0], box[1]), ALT_COLUMN)
        assert rel.get(target) == 1
        for rep, c in rel.items():
            v = (terms.get(rep, 0) - coeff * c) % p
            if v:
                terms[rep] = v
            else:
                terms.pop(rep, None)
    return vector_from_terms(basis, p, terms)


def _col_greater(a: Tableau, b: Tableau) -> bool:
    result = col_compare(a, b)
    if result is ColOrderResult.EQUIVALENT:
        return a.col_reading() > b.col_reading()
    return result is ColOrderResult.GREATER


def restrict_entries(
    shape: Partition, d: int, d_sub: int, p: int
) -> tuple[int, int]:
    """Project the degree-d construction onto entries <= d_sub and compare
    its dimension with the direct build at d_sub. Returns (restricted,
    direct); the two must agree."""
    if not 1 <= d_sub <= d:
        raise ValueError("need 1 <= d_sub <= d")
    kind = skew_column(p)
    sub_basis = build_basis(shape, d_sub, kind)
    blocks = _make_blocks(sub_basis, p)
    for rel_kind in (RelationKind.SKEW_BASIC_SNAKE, RelationKind.SKEW_SUPPLEMENTARY):
        for label in iter_relation_labels(shape, d, rel_kind, kind):
            terms = garnir_terms(label, kind)
            projected = {t: c for t, c in terms.items() if t.max_entry() <= d_sub}
            _push_terms(blocks, projected, d_sub, p)
    rank = sum(b.span.rank for b in blocks.values())
    restricted = sub_basis.dim - rank
    direct = build_gtensor_specht(shape, d_sub, p).dim
    assert restricted == direct, (restricted, direct)
    return restricted, direct


def apply_transvection(
    vec: TabloidVector, source: int, target: int, p: int
) -> TabloidVector:
    """Expand the substitution sending the source letter to source plus
    target multilinearly over the boxes, canonicalizing each term."""
    d = vec.basis.d
    if not (1 <= source <= d and 1 <= target <= d) or source == target:
        raise ValueError("source and target must be distinct letters in range")
    kind = vec.basis.kind
    out: dict[Tableau, int] = {}
    for idx, coeff in vec.coords.items():
        t = vec.basis.rep(idx)
        spots = [
            (i + 1, j + 1)
            for j, col in enumerate(t.cols)
            for i, x in enumerate(col)
            if x == source
        ]
        for r in range(len(spots) + 1):
            for subset in combinations(spots, r):
                u = t
                for i, j in subset:
                    u = u.with_entry(i, j, target)
                st = canonicalize(u, kind)
                if st.is_zero:
                    continue
                key = st.rep
                out[key] = (out.get(key, 0) + coeff * st.sign) % p
    return vector_from_terms(vec.basis, p, out)
