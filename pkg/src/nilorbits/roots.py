"""Type-C root combinatorics: roots, torus gradings, signed permutations.

Roots of C_N live on coordinates e_1..e_N and are one of e_i - e_j,
e_i + e_j (i != j) or 2e_i, together with their negatives.  A root is
stored sparsely as index/coefficient pairs.

A torus weight vector lists the 2N exponents of a one-parameter subgroup
of the symplectic torus diag(t_1..t_N, t_N^-1..t_1^-1); the mirror half is
forced (w_{2N+1-i} = -w_i) and validated.  ``torus_weights_from_partition``
builds the grading attached to a symplectic partition in two arrangements:

* "dominant": all block exponents pooled and sorted descending;
* "stacked":  per-part blocks kept together, placed palindromically:
  equal parts pair off towards the two ends, and an even part left over
  with odd multiplicity splits its positive half inside the left end.
  For one block this is diag(t^(q-1), ..., t^(1-q)); for 2b equal blocks
  it is the concatenation of 2b such blocks, matching the gradings used
  for the composite Fourier coefficients.

``v_p2`` collects every root whose pairing with the grading is at least 2,
which is the root support of the unipotent group the Fourier coefficients
attached to the partition integrate over.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ValidationError
from .partitions import Partition, format_partition, is_symplectic, multiplicities

_ROOT_PATTERNS = {
    (1, -1), (-1, 1), (1, 1), (-1, -1),  # two-coordinate roots
}


@dataclass(frozen=True, order=True)
class Root:
    """A root of some C_N, as sorted (index, coefficient) pairs."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        idx = [i for i, _ in self.pairs]
        if sorted(idx) != idx or len(set(idx)) != len(idx) or any(i < 1 for i in idx):
            raise ValidationError(f"bad root support {self.pairs}")
        coeffs = tuple(c for _, c in self.pairs)
        if not (coeffs in _ROOT_PATTERNS or coeffs in ((2,), (-2,))):
            raise ValidationError(f"coefficients {coeffs} do not form a type-C root")

    def __neg__(self) -> "Root":
        return Root(tuple((i, -c) for i, c in self.pairs))

    @property
    def max_index(self) -> int:
        return self.pairs[-1][0]


def e_minus_e(i: int, j: int) -> Root:
    if i == j:
        raise ValidationError(f"e{i}-e{j} is not a root")
    return Root(tuple(sorted([(i, 1), (j, -1)])))


def e_plus_e(i: int, j: int) -> Root:
    if i == j:
        raise ValidationError(f"use 2e{i} for the long root")
    return Root(tuple(sorted([(i, 1), (j, 1)])))


def two_e(i: int) -> Root:
    return Root(((i, 2),))


def add_roots(x: Root, y: Root) -> Root | None:
    """Sum of two roots when the sum is again a root, else None."""
    coeffs: dict[int, int] = {}
    for i, c in x.pairs + y.pairs:
        coeffs[i] = coeffs.get(i, 0) + c
    pairs = tuple(sorted((i, c) for i, c in coeffs.items() if c))
    try:
        return Root(pairs)
    except ValidationError:
        return None


def all_roots(n: int) -> tuple[Root, ...]:
    """Every root of C_n (long and short, both signs)."""
    roots = []
    for i in range(1, n + 1):
        roots.append(two_e(i))
        roots.append(-two_e(i))
        for j in range(i + 1, n + 1):
            roots.extend(
                [e_minus_e(i, j), e_minus_e(j, i), e_plus_e(i, j), -e_plus_e(i, j)]
            )
    return tuple(roots)


# ---------------------------------------------------------------------------
# Torus weight vectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightVector:
    """Exponents w_1..w_2N of a symplectic torus one-parameter subgroup."""

    weights: tuple[int, ...]

    def __post_init__(self):
        w = self.weights
        if len(w) % 2:
            raise ValidationError("weight vector needs an even number of entries")
        for i in range(len(w)):
            if w[len(w) - 1 - i] != -w[i]:
                raise ValidationError(
                    f"weight vector {w} is not antisymmetric at position {i + 1}"
                )

    @property
    def half(self) -> tuple[int, ...]:
        return self.weights[: len(self.weights) // 2]


def _block(q: int) -> list[int]:
    return list(range(q - 1, -q - 1, -2))


def torus_weights_from_partition(p: Partition, arrangement: str) -> WeightVector:
    """Grading of the standard representation attached to a symplectic p."""
    if not is_symplectic(p):
        raise ValidationError(
            f"{format_partition(p)} is not symplectic; its blocks cannot be "
            "arranged antisymmetrically"
        )
    if arrangement == "dominant":
        pool: list[int] = []
        for q in p:
            pool.extend(_block(q))
        pool.sort(reverse=True)
        return WeightVector(tuple(pool))
    if arrangement != "stacked":
        raise ValidationError(f"unknown arrangement {arrangement!r}")
    left: list[int] = []
    for q, count in sorted(multiplicities(p).items(), reverse=True):
        left.extend(_block(q) * (count // 2))
        if count % 2:
            # odd q with odd count is impossible for symplectic p
            left.extend(_block(q)[: q // 2])
    full = left + [-w for w in reversed(left)]
    return WeightVector(tuple(full))


def root_weight(root: Root, w: WeightVector) -> int:
    """Pairing of a root with the grading (uses the first-half exponents)."""
    half = w.half
    total = 0
    for i, c in root.pairs:
        if i > len(half):
            raise ValidationError(f"root index e{i} outside C_{len(half)}")
        total += c * half[i - 1]
    return total


def v_p2(p: Partition, arrangement: str) -> frozenset[Root]:
    """Roots of weight >= 2 under the grading attached to p."""
    w = torus_weights_from_partition(p, arrangement)
    n = len(w.half)
    return frozenset(r for r in all_roots(n) if root_weight(r, w) >= 2)


# ---------------------------------------------------------------------------
# Signed permutations (Weyl elements)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SignedPermutation:
    """Weyl element of C_N as images of e_1..e_N, signs allowed."""

    image: tuple[int, ...]

    def __post_init__(self):
        absimg = sorted(abs(x) for x in self.image)
        if absimg != list(range(1, len(self.image) + 1)):
            raise ValidationError(f"{self.image} is not a signed permutation")

    def apply_root(self, root: Root) -> Root:
        pairs: dict[int, int] = {}
        for i, c in root.pairs:
            if i > len(self.image):
                raise ValidationError(f"root index e{i} outside the permutation")
            target = self.image[i - 1]
            j = abs(target)
            sign = 1 if target > 0 else -1
            pairs[j] = pairs.get(j, 0) + sign * c
        return Root(tuple(sorted(pairs.items())))


def weyl_conjugate_roots(w: SignedPermutation, roots) -> frozenset[Root]:
    """Image of a root set under a signed permutation."""
    return frozenset(w.apply_root(r) for r in roots)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

_ROOT_RE = re.compile(r"^(-?)(2)?e(\d+)([+-]e(\d+))?$")


def parse_root(text: str) -> Root:
    """Parse "e1+e3", "e2-e5", "2e4", optionally with a leading minus."""
    s = "".join(text.split())
    m = _ROOT_RE.match(s)
    if not m:
        raise ValidationError(f"bad root {text!r}")
    sign = -1 if m.group(1) else 1
    i = int(m.group(3))
    if m.group(2):
        if m.group(4):
            raise ValidationError(f"bad root {text!r}")
        return Root(((i, 2 * sign),))
    if not m.group(4):
        raise ValidationError(f"{text!r} is not a type-C root")
    j = int(m.group(5))
    second = 1 if m.group(4)[0] == "+" else -1
    pairs = sorted([(i, sign), (j, second)])
    return Root(tuple(pairs))


def format_root(root: Root) -> str:
    if len(root.pairs) == 1:
        (i, c), = root.pairs
        return f"2e{i}" if c > 0 else f"-2e{i}"
    (i, ci), (j, cj) = root.pairs
    head = f"e{i}" if ci > 0 else f"-e{i}"
    tail = f"+e{j}" if cj > 0 else f"-e{j}"
    return head + tail


def parse_weyl(text: str) -> SignedPermutation:
    """Parse a signed permutation word like "[2,-1,3]"."""
    s = "".join(text.split())
    if not (s.startswith("[") and s.endswith("]")):
        raise ValidationError(f"signed permutation must be bracketed, got {text!r}")
    body = s[1:-1]
    if not body:
        raise ValidationError("empty signed permutation")
    try:
        image = tuple(int(tok) for tok in body.split(","))
    except ValueError:
        raise ValidationError(f"bad signed permutation {text!r}")
    return SignedPermutation(image)
