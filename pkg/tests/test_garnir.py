import random
from math import comb

import pytest

from dualweyl.garnir import (
    GarnirLabel,
    RelationKind,
    default_snake_rule,
    garnir_relation,
    garnir_terms,
    generate_relation_set,
    iter_relation_labels,
    relation_span,
    snake_label,
    snake_relation,
)
from dualweyl.partitions import Partition, hook_content_dim, partitions_of
from dualweyl.tableaux import ColOrderResult, Tableau, TableauClass, col_compare, enumerate_tableaux
from dualweyl.tabloids import ALT_COLUMN, build_basis, skew_column
from helpers import apply_e_map


def test_label_validation():
    t = Tableau.from_rows([(1, 1), (1,)])
    with pytest.raises(ValueError):
        GarnirLabel(t, ((1, 1),), ((1, 2),)).validate()  # |A|+|B| too small
    with pytest.raises(ValueError):
        GarnirLabel(t, ((1, 1), (2, 1)), ()).validate()
    with pytest.raises(ValueError):
        GarnirLabel(t, ((1, 1), (3, 1)), ((1, 2),)).validate()
    with pytest.raises(ValueError):
        snake_label(t, 2, 1)  # column 2 has height 1
    snake_label(t, 1, 1).validate()


def test_default_snake_rule():
    t = Tableau.from_rows([(2, 1), (3,)])
    assert default_snake_rule(t) == (1, 1)
    assert default_snake_rule(Tableau.from_rows([(1, 1), (2,)])) is None
    # least column wins before greatest row
    u = Tableau.from_rows([(1, 2, 1), (2, 1)])
    assert default_snake_rule(u) == (2, 1)


def test_all_ones_hook_relation():
    # On the shape (2,1) with every entry equal, the full snake relation has
    # three identical skew summands, hence survives mod 2, while every
    # alternating summand vanishes.
    t = Tableau.from_rows([(1, 1), (1,)])
    basis2 = build_basis(Partition((2, 1)), 1, skew_column(2))
    rel = snake_relation(t, 1, 1, skew_column(2), basis2, 2)
    assert rel.coords == {basis2.index_of(t): 1}
    alt_basis = build_basis(Partition((2, 1)), 1, ALT_COLUMN)
    assert snake_relation(t, 1, 1, ALT_COLUMN, alt_basis, 3).is_zero()


def test_vanishing_supplementary_relation():
    # Shape (2,1,1) with rows (1,1),(2),(2): the four skew summands cancel in
    # pairs, and the relation set still records the zero relation.
    t = Tableau.from_rows([(1, 1), (2,), (2,)])
    basis = build_basis(Partition((2, 1, 1)), 2, skew_column(2))
    rel = snake_relation(t, 1, 1, skew_column(2), basis, 2)
    assert rel.is_zero()
    relset = generate_relation_set(
        Partition((2, 1, 1)), 2, 2, RelationKind.SKEW_SUPPLEMENTARY
    )
    zero_labels = [
        lab for lab, vec in zip(relset.labels, relset.relations) if vec.is_zero()
    ]
    assert any(lab.t == t for lab in zero_labels)


def test_one_letter_snake_coefficient():
    # With a single letter each snake relation collapses onto one tabloid
    # with coefficient C(height+1, i).
    for shape in [Partition((2, 1)), Partition((3, 2, 1)), Partition((2, 2, 2))]:
        conj = shape.conjugate()
        for p in (2, 3):
            basis = build_basis(shape, 1, skew_column(p))
            if basis.dim == 0:
                continue
            t = basis.reps[0]
            for j in range(1, shape[0]):
                for i in range(1, conj.part(j + 1) + 1):
                    rel = snake_relation(t, i, j, skew_column(p), basis, p)
                    expected = comb(conj.part(j) + 1, i) % p
                    got = rel.coords.get(basis.index_of(t), 0)
                    assert got == expected, (shape, p, i, j)


def test_leading_term_alternating():
    # A basic snake relation has unit coefficient on its labelling tableau
    # and all other terms strictly below it in the column order.
    for shape in [Partition((2, 1)), Partition((2, 2)), Partition((3, 1))]:
        for d in (2, 3):
            for t in enumerate_tableaux(shape, d, TableauClass.COLUMN_STANDARD):
                box = default_snake_rule(t)
                if box is None:
                    continue
                terms = garnir_terms(snake_label(t, box[0], box[1]), ALT_COLUMN)
                assert terms[t] == 1
                for u in terms:
                    if u != t:
                        assert col_compare(u, t) is ColOrderResult.LESS


def test_leading_term_skew_equal_pair():
    # When the two snake-corner entries agree, the leading coefficient is the
    # binomial count of ways to refill the left block with the repeated letter.
    t = Tableau.from_rows([(1, 1), (1,), (2,)])  # cols (1,1,2),(1)
    label = snake_label(t, 1, 1)
    a = sum(1 for (i, j) in label.A if t.entry(i, j) == 1)
    b = sum(1 for (i, j) in label.B if t.entry(i, j) == 1)
    terms = garnir_terms(label, skew_column(2))
    assert comb(a + b, a) % 2 == terms.get(t, 0) % 2


def test_transversal_independence():
    rng = random.Random(2024)
    shapes = [s for n in (3, 4) for s in partitions_of(n) if s[0] > 1]
    checked = 0
    while checked < 100:
        shape = rng.choice(shapes)
        d = rng.randint(1, 3)
        kind = rng.choice([ALT_COLUMN, skew_column(2), skew_column(3)])
        conj = shape.conjugate()
        j = rng.randint(1, shape[0] - 1)
        cols = [
            tuple(rng.randint(1, d) for _ in range(conj.part(jj)))
            for jj in range(1, shape[0] + 1)
        ]
        t = Tableau(cols)
        if rng.random() < 0.5:
            label = snake_label(t, rng.randint(1, conj.part(j + 1)), j)
        else:
            hj, hj2 = conj.part(j), conj.part(j + 1)
            ka = rng.randint(1, hj)
            lo = max(1, hj - ka + 1)
            if lo > hj2:
                continue
            kb = rng.randint(lo, hj2)
            label = GarnirLabel(
                t,
                tuple((i, j) for i in sorted(rng.sample(range(1, hj + 1), ka))),
                tuple((i, j + 1) for i in sorted(rng.sample(range(1, hj2 + 1), kb))),
            )
        reference = garnir_terms(label, kind)
        shuffled = garnir_terms(label, kind, _shuffle=rng)
        assert reference == shuffled
        checked += 1


def test_snake_summands_never_exceed_label():
    # Spot check of the ordering fact behind the leading-term results: on a
    # column-semistandard tableau whose snake corner is weakly decreasing,
    # every summand stays at or below the label in the column order.
    rng = random.Random(31)
    for n in (4, 5):
        for shape in partitions_of(n):
            if shape[0] == 1:
                continue
            conj = shape.conjugate()
            for t in enumerate_tableaux(shape, 3, TableauClass.COLUMN_SEMISTANDARD):
                if rng.random() > 0.2:
                    continue
                for j in range(1, shape[0]):
                    for i in range(1, conj.part(j + 1) + 1):
                        if t.entry(i, j) < t.entry(i, j + 1):
                            continue
                        terms = garnir_terms(snake_label(t, i, j), skew_column(2))
                        for u in terms:
                            assert col_compare(u, t) in (
                                ColOrderResult.LESS,
                                ColOrderResult.EQUIVALENT,
                            ), (t, u, i, j)


def test_relation_set_shapes_without_columns():
    for kind in RelationKind:
        relset = generate_relation_set(Partition((1, 1, 1)), 2, 2, kind)
        assert relset.relations == [] and relset.labels == []


def test_single_row_span_dimension():
    n, d = 3, 3
    relset = generate_relation_set(Partition((n,)), d, 2, RelationKind.SKEW_BASIC_SNAKE)
    assert relation_span(relset).dim == d**n - comb(d + n - 1, n)


def test_alt_basic_snakes_form_a_basis_of_the_kernel():
    for n in range(2, 6):
        for shape in partitions_of(n):
            for d in (2, 3, 4):
                for p in (2, 3):
                    relset = generate_relation_set(
                        shape, d, p, RelationKind.ALT_BASIC_SNAKE
                    )
                    rank = relation_span(relset).dim
                    assert rank == len(relset.relations)
                    ambient = build_basis(shape, d, ALT_COLUMN).dim
                    assert rank == ambient - hook_content_dim(shape, d)


def test_skew_basic_snakes_independent():
    for n in range(2, 6):
        for shape in partitions_of(n):
            for d in (2, 3, 4):
                relset = generate_relation_set(
                    shape, d, 2, RelationKind.SKEW_BASIC_SNAKE
                )
                assert relation_span(relset).dim == len(relset.relations)


@pytest.mark.parametrize("d", [2, 3])
def test_skew_spanning_triple_rank_equality(d):
    for n in range(2, 5):
        for shape in partitions_of(n):
            basic = generate_relation_set(shape, d, 2, RelationKind.SKEW_BASIC_SNAKE)
            supp = generate_relation_set(shape, d, 2, RelationKind.SKEW_SUPPLEMENTARY)
            builder_vecs = [v.coords for v in basic.relations + supp.relations]
            from dualweyl.gfp import span

            dim_bs = span(builder_vecs, basic.basis.dim, 2).dim
            adj = generate_relation_set(shape, d, 2, RelationKind.ALL_ADJACENT_SNAKES)
            dim_adj = relation_span(adj).dim
            exh = generate_relation_set(shape, d, 2, RelationKind.EXHAUSTIVE_GARNIR)
            dim_exh = relation_span(exh).dim
            assert dim_bs == dim_adj == dim_exh, (shape, d)


def test_exhaustive_generation_is_capped():
    with pytest.raises(ValueError):
        list(
            iter_relation_labels(
                Partition((3, 3)), 2, RelationKind.EXHAUSTIVE_GARNIR, skew_column(2)
            )
        )


def test_garnir_relations_die_in_the_row_space():
    # The signed column relations must vanish under row symmetrization; this
    # drives every sign convention through an independent expansion.
    rng = random.Random(5)
    for shape in [Partition((2, 1)), Partition((2, 2)), Partition((2, 1, 1)), Partition((3, 1))]:
        for d in (2, 3):
            labels = list(
                iter_relation_labels(
                    shape, d, RelationKind.EXHAUSTIVE_GARNIR, ALT_COLUMN
                )
            )
            for label in rng.sample(labels, min(25, len(labels))):
                for p in (2, 3):
                    terms = {
                        t: c % p for t, c in garnir_terms(label, ALT_COLUMN).items()
                    }
                    assert apply_e_map(terms, p) == {}, (shape, d, p, label.t)


def test_small_hook_relation_census():
    # Shape (2,1) over two letters mod 2: one basic and three supplementary
    # relations, jointly of full rank 4 in the 6-dimensional skew space.
    shape = Partition((2, 1))
    basic = generate_relation_set(shape, 2, 2, RelationKind.SKEW_BASIC_SNAKE)
    supp = generate_relation_set(shape, 2, 2, RelationKind.SKEW_SUPPLEMENTARY)
    assert len(basic.labels) == 1 and len(supp.labels) == 3
    from dualweyl.gfp import span

    vecs = [v.coords for v in basic.relations + supp.relations]
    assert span(vecs, basic.basis.dim, 2).dim == 4
    again = generate_relation_set(shape, 2, 2, RelationKind.SKEW_BASIC_SNAKE)
    assert [v.coords for v in again.relations] == [v.coords for v in basic.relations]


def test_garnir_relation_matches_snake_relation():
    t = Tableau.from_rows([(2, 1), (3,)])
    basis = build_basis(Partition((2, 1)), 3, ALT_COLUMN)
    label = snake_label(t, 1, 1)
    assert (
        garnir_relation(label, ALT_COLUMN, basis, 3).coords
        == snake_relation(t, 1, 1, ALT_COLUMN, basis, 3).coords
    )
