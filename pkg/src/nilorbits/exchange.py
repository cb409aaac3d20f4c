"""Root-exchange data for the composite Fourier coefficients of a
GL_(2k+1) Speh block, and a mechanical verifier for the exchange
conditions.

Setup: Sp_2N with N = b(2k+1), graded by the weight vector that places
one full block (2k, 2k-2, ..., -2k) at each end and groups the remaining
2b-2 copies of each exponent level in the middle.  The integration group
for the coefficient attached to the all-equal-parts partition consists of

* every root of weight >= 2 whose matrix position lies in the upper
  blocks of the (2k+1 | middle | 2k+1) decomposition, together with
* the diagonal one-parameter subgroup pairing e_s + e_{2k+2-s}
  (s = 1..k) and 2e_{k+1}, whose component roots are carried in the
  C-set individually.

Stage i (1 <= i <= 2k) exchanges the weight-deficient zero entries of row
i (the X roots) against the weight-heavy lower entries of column i+1 (the
Y roots); the two families pair into e_i - e_{i+1} summand by summand.
Within a row the steps are ordered so that each commutator only ever
meets roots already collected (see ``_exchange_order``).

The X/Y families follow the closed index formulas below, with every
subscript driven by the within-range ordinal; the families coincide with
the sets derived directly from the grading (see ``derived_x_row`` /
``derived_y_row``, which the test suite cross-checks).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import spmatrix
from .errors import ValidationError
from .roots import (
    Root,
    WeightVector,
    add_roots,
    all_roots,
    e_minus_e,
    root_weight,
    two_e,
)


def _root_of(*terms: tuple[int, int]) -> Root:
    coeffs: dict[int, int] = {}
    for i, c in terms:
        coeffs[i] = coeffs.get(i, 0) + c
    return Root(tuple(sorted((i, c) for i, c in coeffs.items() if c)))


@dataclass(frozen=True)
class ExchangeDatum:
    k: int
    b: int
    n_coords: int
    x_rows: tuple[tuple[Root, ...], ...]
    y_rows: tuple[tuple[Root, ...], ...]
    c_roots: frozenset[Root]
    char_support: frozenset[Root]

    @property
    def x_seq(self) -> tuple[Root, ...]:
        return tuple(r for row in self.x_rows for r in row)

    @property
    def y_seq(self) -> tuple[Root, ...]:
        return tuple(r for row in self.y_rows for r in row)


def sequence_length(k: int, b: int, i: int) -> int:
    """The count m_i of exchanged roots in row i."""
    if i <= k:
        return i + (2 * b - 2) * i
    return (2 * k + 1 - i) + (2 * b - 2) * i


def omega_weights(k: int, b: int) -> WeightVector:
    """Grading after moving one block to each end and sorting the middle."""
    left = [2 * k - 2 * t for t in range(2 * k + 1)]
    mid: list[int] = []
    level = 0
    while len(mid) < (b - 1) * (2 * k + 1):
        mid.extend([2 * k - 2 * level] * (2 * b - 2))
        level += 1
    half = left + mid[: (b - 1) * (2 * k + 1)]
    return WeightVector(tuple(half + [-w for w in reversed(half)]))


def _region(i: int, k: int) -> int:
    return 1 if i <= 2 * k + 1 else 2


def _is_upper(root: Root, k: int) -> bool:
    """Whether the root's matrix entries avoid the zeroed lower blocks."""
    pairs = root.pairs
    if len(pairs) == 1:
        (i, c), = pairs
        return c > 0 or _region(i, k) == 2
    (i, ci), (j, cj) = pairs
    if ci > 0 and cj > 0:
        return True
    if ci < 0 and cj < 0:
        return _region(i, k) == 2 and _region(j, k) == 2
    pos, neg = (i, j) if ci > 0 else (j, i)
    return _region(pos, k) <= _region(neg, k)


def _formula_x_row(k: int, b: int, i: int, n: int) -> list[Root]:
    out: list[Root] = []
    if i <= k:
        for t in range(1, i + 1):
            out.append(_root_of((i, 1), (2 * k + 1 - i + t, 1)))
        for t in range(1, (2 * b - 2) * i + 1):
            out.append(_root_of((i, 1), ((2 * k + 1) + (2 * b - 2) * i - (t - 1), -1)))
    else:
        for t in range(1, 2 * k + 1 - i + 1):
            out.append(_root_of((i, 1), (i + t, 1)))
        offset = (b - 1) + (2 * b - 2) * (i - k - 1)
        for t in range(1, offset + 1):
            out.append(_root_of((i, 1), (n - offset + t, 1)))
        for t in range(1, (b - 1) * (2 * k + 1) + 1):
            out.append(_root_of((i, 1), (n - (t - 1), -1)))
    return out


def _exchange_order(k: int, b: int, i: int, n: int, w: WeightVector) -> list[Root]:
    """Row-i roots in an order each exchange step can actually consume.

    Rows i <= k keep the formula order.  For i > k the e_i + e_mid family
    goes first, then e_i - e_mid while e_mid + e_{i+1} is still a zero
    entry, then the e_i + e_s family (s = i+1 first), then the remaining
    e_i - e_mid; this respects every commutator dependency between a step
    and the roots not yet collected.
    """
    formula = _formula_x_row(k, b, i, n)
    if i <= k:
        return formula
    r3_len = 2 * k + 1 - i
    r4_len = (b - 1) + (2 * b - 2) * (i - k - 1)
    r3 = formula[:r3_len]
    r4 = formula[r3_len:r3_len + r4_len]
    r5 = formula[r3_len + r4_len:]
    threshold = 2 + 2 * (i - k)  # weight at which e_mid + e_{i+1} is free
    half = w.half
    low = [r for r in r5 if half[r.max_index - 1] < threshold]
    high = [r for r in r5 if half[r.max_index - 1] >= threshold]
    return r4 + low + r3 + high


def exchange_sequences(k: int, b: int) -> ExchangeDatum:
    """Exchange data for all 2k stages on Sp_2N, N = b(2k+1)."""
    if k < 1 or b < 1:
        raise ValidationError(f"need k >= 1 and b >= 1, got k={k}, b={b}")
    n = b * (2 * k + 1)
    w = omega_weights(k, b)
    x_rows = []
    y_rows = []
    for i in range(1, 2 * k + 1):
        step = e_minus_e(i, i + 1)
        alphas = _exchange_order(k, b, i, n, w)
        betas = []
        for alpha in alphas:
            beta = add_roots(step, -alpha)
            if beta is None:
                raise ValidationError(f"no partner for {alpha} in row {i}")
            betas.append(beta)
        if len(alphas) != sequence_length(k, b, i):
            raise ValidationError(f"row {i} has {len(alphas)} roots, "
                                  f"expected {sequence_length(k, b, i)}")
        x_rows.append(tuple(alphas))
        y_rows.append(tuple(betas))
    iota = frozenset(
        {_root_of((s, 1), (2 * k + 2 - s, 1)) for s in range(1, k + 1)}
        | {two_e(k + 1)}
    )
    base = frozenset(
        r for r in all_roots(n) if root_weight(r, w) >= 2 and _is_upper(r, k)
    )
    char = frozenset(e_minus_e(i, i + 1) for i in range(1, 2 * k + 1))
    return ExchangeDatum(
        k=k,
        b=b,
        n_coords=n,
        x_rows=tuple(x_rows),
        y_rows=tuple(y_rows),
        c_roots=base | iota,
        char_support=char,
    )


def derived_x_row(k: int, b: int, i: int) -> frozenset[Root]:
    """Row-i X roots read off the grading: upper entries of weight < 2 in
    row i (long root 2e_i excluded, mirror entries deduplicated)."""
    n = b * (2 * k + 1)
    w = omega_weights(k, b)
    out = set()
    for root in all_roots(n):
        if root_weight(root, w) >= 2 or not _is_upper(root, k):
            continue
        pairs = root.pairs
        if len(pairs) == 1:
            continue  # 2e_i is handled by Fourier expansion, not exchange
        (a, ca), (c, cc) = pairs
        if ca > 0 and cc > 0 and a == i:
            out.add(root)
        elif ca > 0 and cc < 0 and a == i and c > 2 * k + 1:
            out.add(root)
    return frozenset(out)


def derived_y_row(k: int, b: int, i: int) -> frozenset[Root]:
    """Row-i Y roots read off the grading: weight >= 2 entries of the
    zeroed lower blocks in column i+1."""
    n = b * (2 * k + 1)
    w = omega_weights(k, b)
    out = set()
    for root in all_roots(n):
        if root_weight(root, w) < 2 or _is_upper(root, k):
            continue
        pairs = root.pairs
        if len(pairs) == 1:
            (a, c), = pairs
            if c < 0 and a == i + 1:
                out.add(root)
            continue
        (a, ca), (c, cc) = pairs
        if ca < 0 and cc < 0 and min(a, c) == i + 1:
            out.add(root)
        elif ca < 0 and cc > 0 and a == i + 1 and c > 2 * k + 1:
            out.add(root)
        elif ca > 0 and cc < 0 and c == i + 1 and a > 2 * k + 1:
            out.add(root)
    return frozenset(out)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConditionResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class QuadrupleReport:
    stage: int
    conditions: tuple[ConditionResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)


def _stage_c_roots(datum: ExchangeDatum, stage: int) -> set[Root]:
    c = set(datum.c_roots)
    for s in range(1, stage):
        c.update(datum.x_rows[s - 1])
    for l in range(stage + 1, 2 * datum.k + 1):
        c.update(datum.y_rows[l - 1])
    for t in range(datum.k + 2, stage + 1):
        c.add(two_e(t))
    return c


@lru_cache(maxsize=None)
def _commutator_support(u: Root, v: Root, n: int) -> dict[Root, Fraction]:
    """Support of [x_u(1), x_v(1)], using x(-1) for the exact inverses."""
    g = spmatrix.mat_mul(
        spmatrix.mat_mul(
            spmatrix.one_parameter_matrix(u, 1, n),
            spmatrix.one_parameter_matrix(v, 1, n),
        ),
        spmatrix.mat_mul(
            spmatrix.one_parameter_matrix(u, -1, n),
            spmatrix.one_parameter_matrix(v, -1, n),
        ),
    )
    return spmatrix.support_roots(g, n)


def verify_exchange_quadruple(
    datum: ExchangeDatum, n_coords: int, stage: int
) -> QuadrupleReport:
    """Check the exchange conditions for one stage, by exact matrices.

    Following the sequenced exchange, step j works against the group
    collecting the stage's C-roots, the already-exchanged alphas of the
    stage and the still-unconsumed betas.  Conditions:

    * lengths:        the X and Y sequences pair up (length m_i);
    * char-trivial:   no X or Y root supports the character;
    * normalization:  each step's X and Y roots commute into the
                      step group (exact commutator support containment);
    * exchange-in-c:  [X_j, Y_j] lies in the step group plus the
                      character support;
    * pairing:        X_j + Y_j is a character root and the commutator
                      coefficient there is nonzero.
    """
    if n_coords != datum.n_coords:
        raise ValidationError(
            f"datum lives on Sp_{2 * datum.n_coords}, not Sp_{2 * n_coords}"
        )
    if not 1 <= stage <= 2 * datum.k:
        raise ValidationError(f"stage {stage} outside 1..{2 * datum.k}")
    xs = datum.x_rows[stage - 1]
    ys = datum.y_rows[stage - 1]
    conditions = []

    expected = sequence_length(datum.k, datum.b, stage)
    conditions.append(
        ConditionResult(
            "lengths",
            len(xs) == len(ys) == expected,
            f"|X|={len(xs)} |Y|={len(ys)} expected {expected}",
        )
    )

    clash = [r for r in (*xs, *ys) if r in datum.char_support]
    conditions.append(
        ConditionResult("char-trivial", not clash, f"offending roots {clash}")
    )

    base = _stage_c_roots(datum, stage)
    norm_ok, norm_detail = True, ""
    pair_in_c_ok, pair_detail = True, ""
    pairing_ok, pairing_detail = True, ""
    steps = min(len(xs), len(ys))
    for j in range(steps):
        step_c = base | set(xs[:j]) | set(ys[j + 1:])
        for u in (xs[j], ys[j]):
            for c in step_c:
                # One-parameter groups commute exactly when no root chain
                # u+c, 2u+c, u+2c exists, and chains start at u+c.
                if add_roots(u, c) is None:
                    continue
                for root, coeff in _commutator_support(u, c, n_coords).items():
                    if coeff and root not in step_c:
                        norm_ok = False
                        norm_detail = norm_detail or (
                            f"step {j + 1}: [{u}, {c}] meets {root} outside C"
                        )
        support = _commutator_support(xs[j], ys[j], n_coords)
        for root, coeff in support.items():
            if coeff and root not in step_c and root not in datum.char_support:
                pair_in_c_ok = False
                pair_detail = pair_detail or (
                    f"step {j + 1}: [{xs[j]}, {ys[j]}] meets {root} outside C"
                )
        total = add_roots(xs[j], ys[j])
        if total not in datum.char_support or not support.get(total):
            pairing_ok = False
            pairing_detail = pairing_detail or (
                f"step {j + 1}: {xs[j]} + {ys[j]} pairs to {total} "
                f"with coefficient {support.get(total, 0)}"
            )
    conditions.append(ConditionResult("normalization", norm_ok, norm_detail))
    conditions.append(ConditionResult("exchange-in-c", pair_in_c_ok, pair_detail))
    conditions.append(ConditionResult("pairing", pairing_ok, pairing_detail))
    return QuadrupleReport(stage=stage, conditions=tuple(conditions))
