"""Shared brute-force oracles for the test suite. These deliberately avoid
the library's canonicalization and span machinery so they can check it."""

from itertools import permutations, product

from dualweyl.partitions import Partition
from dualweyl.tableaux import Tableau
from dualweyl.tabloids import ROW, canonicalize


def brute_fillings(shape, d):
    boxes = shape.boxes()
    for values in product(range(1, d + 1), repeat=len(boxes)):
        filling = dict(zip(boxes, values))
        rows = [
            [filling[(i, j)] for j in range(1, shape[i - 1] + 1)]
            for i in range(1, len(shape) + 1)
        ]
        yield Tableau.from_rows(rows)


def column_antisymmetrization(t: Tableau, p: int) -> dict[Tableau, int]:
    """Image of the tableau under signed summation over all column-preserving
    place permutations, expanded in row-sorted representatives.

    This is the classical polytabloid expansion; only usable on tiny shapes.
    """
    out: dict[Tableau, int] = {}
    per_column = [list(permutations(range(len(c)))) for c in t.cols]
    for perms in product(*per_column):
        sign = 1
        cols = []
        for c, perm in zip(t.cols, perms):
            cols.append(tuple(c[k] for k in perm))
            inversions = sum(
                1
                for a in range(len(perm))
                for b in range(a + 1, len(perm))
                if perm[a] > perm[b]
            )
            if inversions % 2:
                sign = -sign
        rep = canonicalize(Tableau(cols), ROW).rep
        out[rep] = (out.get(rep, 0) + sign) % p
    return {rep: c for rep, c in out.items() if c}


def apply_e_map(terms: dict[Tableau, int], p: int) -> dict[Tableau, int]:
    """Evaluate a column-tabloid combination in the row-tabloid space."""
    out: dict[Tableau, int] = {}
    for t, coeff in terms.items():
        for rep, c in column_antisymmetrization(t, p).items():
            val = (out.get(rep, 0) + coeff * c) % p
            if val:
                out[rep] = val
            else:
                out.pop(rep, None)
    return out


def prod(items):
    result = 1
    for x in items:
        result *= x
    return result


__all__ = [
    "Partition",
    "apply_e_map",
    "brute_fillings",
    "column_antisymmetrization",
    "prod",
]
