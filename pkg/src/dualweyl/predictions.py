"""Closed-form predictors and sweep verification for the characteristic-2
isomorphism question and the small special cases (d = 1, hooks at d = 2)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from math import comb

from .partitions import Partition, partitions_of
from .quotients import build_gtensor_specht, verify_iso
from .tabloids import ker_q_generators


def predict_iso(shape: Partition) -> bool:
    """True when the mod-2 surjection onto the dual Weyl module is an
    isomorphism for every alphabet size: the shape is 2-regular, or its
    first two parts agree, exceed the third by at least 2, and the shape
    minus its first part is 2-regular."""
    if shape.is_two_regular():
        return True
    tail = shape.remove_first_part()
    return (
        tail is not None
        and shape.part(1) == shape.part(2)
        and shape.part(2) >= shape.part(3) + 2
        and tail.is_two_regular()
    )


def characterization_threshold(shape: Partition, weak: bool = False) -> int:
    """Least alphabet size from which a negative prediction is guaranteed
    to be witnessed. The default bound is n - 2; the weak variant uses the
    per-shape bound coming from the three rows that absorb the repeated
    letters."""
    n = shape.n
    if not weak:
        return max(1, n - 2)
    if predict_iso(shape):
        return 1
    tail = shape.remove_first_part()
    if tail is not None and not tail.is_two_regular():
        r = next(
            r
            for r in range(2, len(shape))
            if shape.part(r) == shape.part(r + 1) > 0
        )
        bound = n + 1 - (shape.part(r - 1) + shape.part(r) + shape.part(r + 1))
    else:
        bound = n + 1 - (shape.part(1) + shape.part(2) + shape.part(3))
    return max(1, bound)


@dataclass
class IsoVerdict:
    shape: Partition
    predicted: bool
    verified_at: list[tuple[int, bool]] = field(default_factory=list)

    def mismatches(self) -> list[int]:
        return [d for d, got in self.verified_at if got != self.predicted]


def verify_characterization(
    n: int,
    d_values: list[int] | None = None,
    weak_threshold: bool = False,
) -> list[IsoVerdict]:
    """Compare the prediction with the construction for every shape of n
    boxes at the given alphabet sizes (default: the guarantee threshold).
    Disagreements below the threshold are recorded, not errors; at or
    above it they falsify the characterization."""
    verdicts = []
    for shape in partitions_of(n):
        ds = d_values if d_values is not None else [max(1, n - 2)]
        verdict = IsoVerdict(shape, predict_iso(shape))
        for d in ds:
            verdict.verified_at.append((d, verify_iso(shape, d, 2)))
        verdicts.append(verdict)
    for verdict in verdicts:
        threshold = characterization_threshold(verdict.shape, weak_threshold)
        bad = [d for d in verdict.mismatches() if d >= threshold]
        if bad:
            raise AssertionError(
                f"characterization fails for {verdict.shape} at d in {bad}"
            )
    return verdicts


def non_iso_shapes(n: int, d: int) -> set[Partition]:
    return {
        shape for shape in partitions_of(n) if not verify_iso(shape, d, 2)
    }


class D1Result(Enum):
    ZERO = "zero"
    LINE = "line"


def d1_predict(shape: Partition) -> D1Result:
    """Mod-2 fate of the one-letter construction: ZERO exactly when some
    column height h has h+1 not a power of 2 while the next column is at
    least as tall as the largest power of 2 dividing h+1."""
    conj = shape.conjugate()
    for j in range(1, shape[0]):
        c = conj.part(j) + 1
        low = c & (-c)
        if low != c and conj.part(j + 1) >= low:
            return D1Result.ZERO
    return D1Result.LINE


def hook_d2_dim(a: int, l: int) -> int:
    """Dimension of the two-letter construction on the hook with arm a and
    leg l: al/2 for even legs and (a+1)(l+1)/2 for odd legs."""
    if a < 2 or l < 2:
        raise ValueError("need a >= 2 and l >= 2")
    return (a * l) // 2 if l % 2 == 0 else ((a + 1) * (l + 1)) // 2


def hook_partition(a: int, l: int) -> Partition:
    return Partition((a,) + (1,) * (l - 1))


def frobenius_weight_check(a: int, l: int) -> bool:
    """For even legs, compare the weight multiset of the two-letter hook
    construction with that of a Frobenius-twisted symmetric power tensored
    with a symmetric power and the determinant character."""
    if l % 2:
        raise ValueError("the comparison is defined for even legs only")
    module = build_gtensor_specht(hook_partition(a, l), 2, 2)
    lhs = Counter(module.weight_table())
    rhs: Counter = Counter()
    half = l // 2 - 1
    for i in range(half + 1):
        for j in range(a):
            w1 = 2 * i + j + 1
            rhs[(w1, a + l - 1 - w1)] += 1
    return lhs == rhs


# Weight classes of the kernel generators for the shape (2,2,1), with the
# closed count of distinct weights per class: count = coeff * C(d, k).
TABLE1_FORMULAS: list[tuple[Partition, int, int]] = [
    (Partition((2, 1, 1, 1)), 4, 4),
    (Partition((2, 2, 1)), 3, 3),
    (Partition((3, 1, 1)), 3, 3),
    (Partition((3, 2)), 2, 2),
    (Partition((4, 1)), 2, 2),
    (Partition((5,)), 1, 1),
]


def table1_weight_counts(d: int) -> dict[Partition, int]:
    """Distinct weights of kernel generators of the shape (2,2,1), grouped
    by the sorted weight type."""
    if d < 4:
        raise ValueError("the class census needs d >= 4")
    shape = Partition((2, 2, 1))
    weights = {
        gen.basis.rep(next(iter(gen.coords))).weight(d)
        for gen in ker_q_generators(shape, d)
    }
    out: dict[Partition, int] = {}
    for w in weights:
        kind = Partition(sorted((x for x in w if x), reverse=True))
        out[kind] = out.get(kind, 0) + 1
    return out


def table1_expected(d: int) -> dict[Partition, int]:
    return {shape: coeff * comb(d, k) for shape, coeff, k in TABLE1_FORMULAS}


def supplementary_rank_gain(shape: Partition, d: int, p: int = 2) -> int:
    """Rank added by the supplementary relations on top of the basic ones."""
    gain = build_gtensor_specht(shape, d, p).supplementary_rank_gain
    assert gain is not None
    return gain


def min_interpolation_degree(values: list[int]) -> int:
    """Degree of the minimal interpolating polynomial through the values at
    consecutive integer points (0 for a constant, -1 for all zeros)."""
    diffs = list(values)
    degree = -1
    level = 0
    while diffs:
        if any(diffs):
            degree = level
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        level += 1
    return degree


def u_dim_degree(shape: Partition, d_values: list[int]) -> int:
    """Interpolation degree of the kernel dimension over consecutive
    alphabet sizes."""
    if any(b - a != 1 for a, b in zip(d_values, d_values[1:])):
        raise ValueError("d values must be consecutive")
    from .quotients import u_lambda_dim

    return min_interpolation_degree([u_lambda_dim(shape, d) for d in d_values])
