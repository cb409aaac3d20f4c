"""Exact partition combinatorics for classical nilpotent orbits.

A partition is stored as a tuple of weakly decreasing positive integers.
The refinements used throughout the package:

* symplectic  -- every odd part occurs with even multiplicity
                 (parametrizes nilpotent orbits of sp_2n);
* orthogonal  -- every even part occurs with even multiplicity
                 (parametrizes nilpotent orbits of so_2n+1);
* special     -- symplectic with symplectic transpose.

``special_sp_collapse`` and ``sp_expansion`` are the dominance-maximal
special symplectic partition below, resp. dominance-minimal one above, a
given partition.  ``barbasch_vogan_dual`` is decrement-collapse-transpose;
it maps orthogonal partitions of 2n+1 onto special symplectic partitions
of 2n and reverses dominance.

Everything here is exact integer arithmetic.  Brute-force searches over
full dominance lattices are capped (see ``brute_cap``); the closed
recipes (`transpose`, `symplectic_collapse`, the provable fast paths of
the special collapse/expansion) have no cap.
"""

from __future__ import annotations

import enum
import os
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvariantBreach, ValidationError

Partition = tuple[int, ...]

DEFAULT_BRUTE_CAP = 40
_CAP_ENV_VAR = "NILORBITS_BRUTE_CAP"


def brute_cap() -> int:
    """Current size cap for brute-force lattice searches.

    Overridable through the NILORBITS_BRUTE_CAP environment variable.
    """
    raw = os.environ.get(_CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_BRUTE_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"bad {_CAP_ENV_VAR} value: {raw!r}")


class Order(enum.Enum):
    """Result of comparing two partitions of equal size."""

    LESS = "Less"
    GREATER = "Greater"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class PartitionClass:
    """Type flags of a partition (see module docstring)."""

    symplectic: bool
    orthogonal: bool
    special_symplectic: bool


def normalize(raw) -> Partition:
    """Sort weakly decreasing and strip zeros.

    >>> normalize([4, 2, 1, 0])
    (4, 2, 1)
    >>> normalize([1, 3, 1])
    (3, 1, 1)
    """
    parts = []
    for x in raw:
        x = int(x)
        if x < 0:
            raise ValidationError(f"negative part {x} in partition")
        if x > 0:
            parts.append(x)
    parts.sort(reverse=True)
    return tuple(parts)


def transpose(p: Partition) -> Partition:
    """Conjugate partition (column lengths of the Young diagram).

    >>> transpose((3, 3, 1, 1, 1, 1))
    (6, 2, 2)
    >>> transpose(())
    ()
    """
    if not p:
        return ()
    cols = [0] * p[0]
    for part in p:
        for c in range(part):
            cols[c] += 1
    return tuple(cols)


def _prefix_sums(p: Partition, length: int) -> list[int]:
    out, acc = [], 0
    for i in range(length):
        acc += p[i] if i < len(p) else 0
        out.append(acc)
    return out


def dominance_compare(p: Partition, q: Partition) -> Order:
    """Dominance comparison of equal-size partitions.

    p <= q iff every prefix sum of p is <= the matching prefix sum of q.
    """
    if sum(p) != sum(q):
        raise ValidationError(
            f"dominance compare needs equal sizes, got {sum(p)} and {sum(q)}"
        )
    length = max(len(p), len(q))
    a = _prefix_sums(p, length)
    b = _prefix_sums(q, length)
    le = all(x <= y for x, y in zip(a, b))
    ge = all(x >= y for x, y in zip(a, b))
    if le and ge:
        return Order.EQUAL
    if le:
        return Order.LESS
    if ge:
        return Order.GREATER
    return Order.INCOMPARABLE


def dominates(p: Partition, q: Partition) -> bool:
    """True iff p >= q in dominance (sizes must agree)."""
    return dominance_compare(p, q) in (Order.GREATER, Order.EQUAL)


def lex_compare(p: Partition, q: Partition) -> Order:
    """Lexicographic comparison of equal-size partitions (a total order)."""
    if sum(p) != sum(q):
        raise ValidationError(
            f"lexicographic compare needs equal sizes, got {sum(p)} and {sum(q)}"
        )
    length = max(len(p), len(q))
    for i in range(length):
        a = p[i] if i < len(p) else 0
        b = q[i] if i < len(q) else 0
        if a != b:
            return Order.GREATER if a > b else Order.LESS
    return Order.EQUAL


def multiplicities(p: Partition) -> dict[int, int]:
    """Multiplicity of each part value, keyed by value."""
    mult: dict[int, int] = {}
    for part in p:
        mult[part] = mult.get(part, 0) + 1
    return mult


def is_symplectic(p: Partition) -> bool:
    """Odd parts occur with even multiplicity."""
    return all(v % 2 == 0 or c % 2 == 0 for v, c in multiplicities(p).items())


def is_orthogonal(p: Partition) -> bool:
    """Even parts occur with even multiplicity."""
    return all(v % 2 == 1 or c % 2 == 0 for v, c in multiplicities(p).items())


def is_special_symplectic(p: Partition) -> bool:
    """Symplectic with symplectic transpose."""
    return is_symplectic(p) and is_symplectic(transpose(p))


def classify(p: Partition) -> PartitionClass:
    """Type flags for p.

    >>> classify((2, 2, 1, 1)).special_symplectic
    True
    >>> classify((2, 1, 1)).special_symplectic
    False
    """
    sympl = is_symplectic(p)
    return PartitionClass(
        symplectic=sympl,
        orthogonal=is_orthogonal(p),
        special_symplectic=sympl and is_symplectic(transpose(p)),
    )


def decrement_tail(q: Partition) -> Partition:
    """Lower the last part by one (a zero is stripped).

    >>> decrement_tail((3, 3, 3))
    (3, 3, 2)
    >>> decrement_tail((3, 1, 1, 1, 1))
    (3, 1, 1, 1)
    """
    if not q:
        raise ValidationError("cannot decrement the empty partition")
    return normalize(q[:-1] + (q[-1] - 1,))


def compose_descent(head: int, tail: Partition) -> Partition:
    """Combine a descent head part with a tail partition.

    The combinatorial shadow of gluing the coefficient data of a composite
    partition: the head is prepended and the result re-sorted.
    """
    if head <= 0:
        raise ValidationError(f"composite head must be positive, got {head}")
    return normalize((head,) + tuple(tail))


# ---------------------------------------------------------------------------
# Collapses and expansions
# ---------------------------------------------------------------------------


def symplectic_collapse(p: Partition) -> Partition:
    """Dominance-maximal symplectic partition below p (classical recipe).

    Repeatedly: take the largest odd value with odd multiplicity, remove a
    box from its last row, and drop that box onto the first lower row able
    to accept it (appending a new row if none can).

    >>> symplectic_collapse((3, 1))
    (2, 2)
    """
    if sum(p) % 2:
        raise ValidationError(f"symplectic collapse needs even size, got {sum(p)}")
    parts = list(p)
    while True:
        bad = [v for v, c in multiplicities(tuple(parts)).items() if v % 2 and c % 2]
        if not bad:
            break
        u = max(bad)
        # Even total size forces a second odd-odd value below the largest,
        # so u == 1 cannot be the largest violation.
        if u == 1:
            raise InvariantBreach("collapse reached an impossible state")
        j = max(i for i, v in enumerate(parts) if v == u)
        parts[j] -= 1
        for jj in range(j + 1, len(parts)):
            if parts[jj] <= u - 2:
                parts[jj] += 1
                break
        else:
            parts.append(1)
    return normalize(parts)


@lru_cache(maxsize=None)
def _special_partitions(n: int) -> tuple[Partition, ...]:
    return enumerate_partitions(n, "special")


def _unique_extremum(pool, want_max: bool, what: str) -> Partition:
    """The unique dominance extremum of a nonempty pool, else a breach."""
    pool = list(pool)
    if not pool:
        raise InvariantBreach(f"{what}: empty candidate pool")
    beats = Order.LESS if want_max else Order.GREATER
    extremal = [
        cand
        for cand in pool
        if not any(
            other != cand and dominance_compare(cand, other) == beats for other in pool
        )
    ]
    if len(extremal) != 1:
        raise InvariantBreach(f"{what}: extremum not unique, found {extremal}")
    return extremal[0]


def special_collapse_by_search(p: Partition) -> Partition:
    """Brute-force dominance maximum of the special partitions below p.

    Capped; the maximum must be unique (a tie is an invariant breach).
    """
    n = sum(p)
    if n > brute_cap():
        raise ValidationError(
            f"special collapse of {format_partition(p)} needs a lattice search "
            f"beyond the brute-force cap {brute_cap()}"
        )
    pool = [s for s in _special_partitions(n) if dominates(p, s)]
    return _unique_extremum(pool, want_max=True, what="special collapse")


def special_expansion_by_search(p: Partition) -> Partition:
    """Brute-force dominance minimum of the special partitions above p."""
    n = sum(p)
    if n > brute_cap():
        raise ValidationError(
            f"special expansion of {format_partition(p)} needs a lattice search "
            f"beyond the brute-force cap {brute_cap()}"
        )
    pool = [s for s in _special_partitions(n) if dominates(s, p)]
    return _unique_extremum(pool, want_max=False, what="special expansion")


def special_sp_collapse(p: Partition) -> Partition:
    """Dominance-maximal special symplectic partition below p.

    Fast path: the classical symplectic collapse, whenever its result is
    already special (then it dominates every symplectic partition below p,
    in particular every special one).  Otherwise a capped brute-force
    search over the dominance lattice, with a uniqueness check.

    >>> special_sp_collapse((3, 1))
    (2, 2)
    >>> special_sp_collapse((3, 1, 1, 1))
    (2, 2, 1, 1)
    """
    n = sum(p)
    if n % 2:
        raise ValidationError(f"special symplectic collapse needs even size, got {n}")
    collapsed = symplectic_collapse(p)
    if is_special_symplectic(collapsed):
        return collapsed
    return special_collapse_by_search(p)


def sp_expansion(p: Partition) -> Partition:
    """Dominance-minimal special symplectic partition above a symplectic p.

    Fast path: transpose, classical collapse, transpose back; when the
    result is symplectic it is special and provably minimal.  Otherwise a
    capped brute-force search with a uniqueness check.

    >>> sp_expansion((2, 1, 1))
    (2, 2)
    >>> sp_expansion((4, 1, 1))
    (4, 2)
    """
    if not is_symplectic(p):
        raise ValidationError(
            f"expansion is defined for symplectic partitions, got {format_partition(p)}"
        )
    if is_special_symplectic(p):
        return p
    mirrored = transpose(symplectic_collapse(transpose(p)))
    if is_symplectic(mirrored):
        return mirrored
    return special_expansion_by_search(p)


def barbasch_vogan_dual(q: Partition) -> Partition:
    """Duality map from orthogonal partitions of 2n+1 to special symplectic
    partitions of 2n: decrement the last part, take the special symplectic
    collapse, transpose.

    >>> barbasch_vogan_dual((3, 3, 3))
    (3, 3, 2)
    >>> barbasch_vogan_dual((1, 1, 1, 1, 1))
    (4,)
    """
    if sum(q) % 2 == 0:
        raise ValidationError(f"duality input must have odd size, got {sum(q)}")
    if not is_orthogonal(q):
        raise ValidationError(f"duality input must be orthogonal, got {format_partition(q)}")
    out = transpose(special_sp_collapse(decrement_tail(q)))
    if not is_special_symplectic(out):
        raise InvariantBreach(f"duality produced a non-special image {out}")
    return out


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

_FILTERS = {
    "any": lambda p: True,
    "symplectic": is_symplectic,
    "orthogonal": is_orthogonal,
    "special": is_special_symplectic,
}


def enumerate_partitions(n: int, kind: str = "any") -> tuple[Partition, ...]:
    """All partitions of n passing the filter, lexicographically descending.

    kind is one of "any", "symplectic", "orthogonal", "special".

    >>> enumerate_partitions(4, "symplectic")
    ((4,), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValidationError(f"cannot enumerate partitions of {n}")
    if n > brute_cap():
        raise ValidationError(
            f"enumeration of partitions of {n} exceeds the brute-force cap {brute_cap()}"
        )
    if kind not in _FILTERS:
        raise ValidationError(f"unknown partition filter {kind!r}")
    accept = _FILTERS[kind]
    out: list[Partition] = []

    def descend(remaining: int, max_part: int, prefix: list[int]) -> None:
        if remaining == 0:
            p = tuple(prefix)
            if accept(p):
                out.append(p)
            return
        for part in range(min(remaining, max_part), 0, -1):
            prefix.append(part)
            descend(remaining - part, part, prefix)
            prefix.pop()

    descend(n, n if n else 1, [])
    return tuple(out)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse the bracketed partition grammar.

    Plain parts and exponent notation may be mixed: "[3^2,1^4]" and
    "[3,3,1,1,1,1]" denote the same partition.  Whitespace is ignored.
    """
    s = "".join(text.split())
    if not (s.startswith("[") and s.endswith("]")):
        raise ValidationError(f"partition must be bracketed, got {text!r}")
    body = s[1:-1]
    if not body:
        return ()
    parts: list[int] = []
    for term in body.split(","):
        m = _TERM_RE.match(term)
        if not m:
            raise ValidationError(f"bad partition term {term!r}")
        value = int(m.group(1))
        count = int(m.group(2)) if m.group(2) else 1
        parts.extend([value] * count)
    return normalize(parts)


def format_partition(p: Partition, compact: bool = False) -> str:
    """Render a partition; compact mode uses exponent notation."""
    if not compact:
        return "[" + ",".join(str(x) for x in p) + "]"
    terms = []
    i = 0
    while i < len(p):
        j = i
        while j < len(p) and p[j] == p[i]:
            j += 1
        terms.append(str(p[i]) if j - i == 1 else f"{p[i]}^{j - i}")
        i = j
    return "[" + ",".join(terms) + "]"
