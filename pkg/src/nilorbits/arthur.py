"""Formal Arthur parameters for Sp_2n and their attached partitions.

A global parameter is a formal sum of simple parameters (dim, mult,
symmetry, label).  Only the combinatorial shadow is modeled: dimensions,
multiplicities, symmetry types and a distinctness label standing in for
the cuspidal representation itself.  The central-character condition is
kept symbolic and never evaluated.

Constraints enforced by ``validate``:

* sum of dim*mult equals 2n+1;
* symplectic-type simples have even multiplicity and even dimension,
  orthogonal-type simples have odd multiplicity;
* simples are pairwise distinct as (dim, mult, symmetry, label) tuples.

``p_of_psi`` is the orthogonal partition of 2n+1 repeating each
multiplicity dim-many times, and ``eta_of_psi`` is its duality image,
cross-checked against the closed forms of the three one-nontrivial-factor
families whenever one applies.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from . import partitions as pt
from .errors import InvariantBreach, ValidationError
from .partitions import Order, Partition

ORTHOGONAL = "O"
SYMPLECTIC = "S"

PARAMETER_CAP = 8


@dataclass(frozen=True, order=True)
class SimpleParameter:
    dim: int
    mult: int
    symmetry: str
    label: str = ""


@dataclass(frozen=True)
class GlobalParameter:
    simples: tuple[SimpleParameter, ...]
    n: int


@dataclass(frozen=True)
class CaseTag:
    """Family classification of a parameter.

    tag is one of "generic", "case1", "case2", "case3", "other"; the
    (a, b, m) data is populated for the three one-nontrivial-factor
    families.
    """

    tag: str
    a: int | None = None
    b: int | None = None
    m: int | None = None


@dataclass(frozen=True)
class BoundVerdict:
    status: str  # "ForbiddenPart1" | "Allowed" | "AchievesPart3"
    ordering_used: str  # "Dominance" | "Lexicographic"
    eta: Partition


def validate(psi: GlobalParameter) -> list[str]:
    """List of violated constraints (empty means valid)."""
    problems = []
    if not psi.simples:
        problems.append("parameter has no simple factors")
    if psi.n < 1:
        problems.append(f"rank must be positive, got {psi.n}")
    total = sum(s.dim * s.mult for s in psi.simples)
    if total != 2 * psi.n + 1:
        problems.append(f"dimension sum {total} != 2n+1 = {2 * psi.n + 1}")
    for s in psi.simples:
        if s.dim < 1 or s.mult < 1:
            problems.append(f"non-positive dim/mult in {s}")
        if s.symmetry == SYMPLECTIC:
            if s.mult % 2:
                problems.append(f"parity: symplectic factor {s} needs even multiplicity")
            if s.dim % 2:
                problems.append(f"parity: symplectic factor {s} needs even dimension")
        elif s.symmetry == ORTHOGONAL:
            if s.mult % 2 == 0:
                problems.append(f"parity: orthogonal factor {s} needs odd multiplicity")
        else:
            problems.append(f"unknown symmetry {s.symmetry!r} in {s}")
    if len(set(psi.simples)) != len(psi.simples):
        problems.append("simple factors are not pairwise distinct")
    return problems


def require_valid(psi: GlobalParameter) -> None:
    problems = validate(psi)
    if problems:
        raise ValidationError("invalid parameter: " + "; ".join(problems))


def is_generic(psi: GlobalParameter) -> bool:
    require_valid(psi)
    return all(s.mult == 1 for s in psi.simples)


def p_of_psi(psi: GlobalParameter) -> Partition:
    """The attached partition of 2n+1: each multiplicity repeated dim times."""
    require_valid(psi)
    parts = []
    for s in psi.simples:
        parts.extend([s.mult] * s.dim)
    p = pt.normalize(parts)
    if not pt.is_orthogonal(p):
        raise InvariantBreach(f"attached partition {p} is not orthogonal")
    return p


def classify_case(psi: GlobalParameter) -> CaseTag:
    """Case tag for parameters with at most one nontrivial factor.

    case1: one (tau, 2b+1) with b >= 1, tau orthogonal, no mult-1 copy of
    the same tau; case2: same but with a mult-1 copy present; case3: one
    (tau, 2b) with tau symplectic.  Parameters with two or more nontrivial
    factors are tagged "other".
    """
    require_valid(psi)
    nontrivial = [s for s in psi.simples if s.mult > 1]
    if not nontrivial:
        return CaseTag("generic")
    if len(nontrivial) > 1:
        return CaseTag("other")
    s0 = nontrivial[0]
    a = s0.dim
    if s0.symmetry == ORTHOGONAL:
        b = (s0.mult - 1) // 2
        partner = any(
            s.mult == 1 and (s.dim, s.symmetry, s.label) == (a, ORTHOGONAL, s0.label)
            for s in psi.simples
        )
        if partner:
            m2 = 2 * psi.n + 1 - a * (s0.mult + 1)
            return CaseTag("case2", a=a, b=b, m=(m2 - 1) // 2)
        return CaseTag("case1", a=a, b=b, m=psi.n - a * b)
    return CaseTag("case3", a=a, b=s0.mult // 2, m=psi.n - a * (s0.mult // 2))


def eta_closed_form(tag: CaseTag) -> Partition | None:
    """The duality image predicted by the case's closed form, if any."""
    a, b, m = tag.a, tag.b, tag.m
    if tag.tag == "case1":
        if a == 2 * m + 1:
            return pt.normalize([a] * (2 * b) + [2 * m])
        if a % 2 == 0:
            return pt.normalize([2 * m] + [a] * (2 * b))
        return pt.normalize([2 * m, a + 1] + [a] * (2 * b - 2) + [a - 1])
    if tag.tag == "case2":
        if a % 2 == 0:
            return pt.normalize([2 * m + 2 * a] + [a] * (2 * b))
        return pt.normalize([2 * m + 2 * a, a + 1] + [a] * (2 * b - 2) + [a - 1])
    if tag.tag == "case3":
        return pt.normalize([a + 2 * m] + [a] * (2 * b - 1))
    return None


def eta_of_psi(psi: GlobalParameter) -> Partition:
    """Duality image of the attached partition.

    Computed from the definition (decrement, special collapse, transpose);
    whenever a case tag applies the closed form is computed as well and a
    disagreement is an internal breach.
    """
    eta = pt.barbasch_vogan_dual(p_of_psi(psi))
    closed = eta_closed_form(classify_case(psi))
    if closed is not None and closed != eta:
        raise InvariantBreach(
            f"closed-form eta {closed} disagrees with definitional eta {eta}"
        )
    return eta


def conjecture_bound_check(
    candidate: Partition, psi: GlobalParameter, ordering: str
) -> BoundVerdict:
    """Compare a symplectic candidate partition of 2n against eta(psi).

    Strictly bigger candidates are forbidden (part 1 of the bound), the
    value eta itself achieves part 3, everything else (smaller, or
    dominance-incomparable) is allowed.
    """
    require_valid(psi)
    if not pt.is_symplectic(candidate):
        raise ValidationError(
            f"candidate {pt.format_partition(candidate)} is not symplectic"
        )
    if sum(candidate) != 2 * psi.n:
        raise ValidationError(
            f"candidate size {sum(candidate)} != 2n = {2 * psi.n}"
        )
    eta = eta_of_psi(psi)
    if ordering == "Dominance":
        rel = pt.dominance_compare(candidate, eta)
    elif ordering == "Lexicographic":
        rel = pt.lex_compare(candidate, eta)
    else:
        raise ValidationError(f"unknown ordering {ordering!r}")
    if rel == Order.GREATER:
        status = "ForbiddenPart1"
    elif rel == Order.EQUAL:
        status = "AchievesPart3"
    else:
        status = "Allowed"
    return BoundVerdict(status=status, ordering_used=ordering, eta=eta)


def case_parameter(case: str, a: int, b: int, m: int) -> GlobalParameter:
    """Canonical parameter with the given case shape.

    The mult-1 tail is filled with distinct dimension-1 orthogonal factors;
    labels are synthetic.  For case1 the constraint a <= 2m+1 must hold
    (the nontrivial factor is part of the rank-m generic support).
    """
    if a < 1 or b < 1 or m < 0:
        raise ValidationError(f"bad case data a={a} b={b} m={m}")
    ones = [SimpleParameter(1, 1, ORTHOGONAL, f"x{i}") for i in range(1, 2 * m + 2)]
    if case == "case1":
        if a > 2 * m + 1:
            raise ValidationError(f"case1 needs a <= 2m+1, got a={a}, m={m}")
        head = [SimpleParameter(a, 2 * b + 1, ORTHOGONAL, "t")]
        tail = ones[: 2 * m + 1 - a]
        n = a * b + m
    elif case == "case2":
        head = [
            SimpleParameter(a, 2 * b + 1, ORTHOGONAL, "t"),
            SimpleParameter(a, 1, ORTHOGONAL, "t"),
        ]
        tail = ones
        n = a * (b + 1) + m
    elif case == "case3":
        if a % 2:
            raise ValidationError(f"case3 needs even a, got {a}")
        head = [SimpleParameter(a, 2 * b, SYMPLECTIC, "t")]
        tail = ones
        n = a * b + m
    else:
        raise ValidationError(f"unknown case {case!r}")
    psi = GlobalParameter(simples=tuple(head + tail), n=n)
    require_valid(psi)
    return psi


def reduce_parameter(psi: GlobalParameter, l: int) -> GlobalParameter:
    """Parameter of the l-th constant-term reduction of the family.

    case1: (tau, 2b+1) drops to (tau, 2b-2l+1), l <= b.
    case2: same drop with the (tau, 1) partner kept, l <= b+1; at l = b+1
    both tau factors disappear.  At l = b the two coinciding (tau, 1)
    copies are separated by a synthetic label so the result validates.
    case3: (tau, 2b) drops to (tau, 2b-2l), l <= b; a zero multiplicity
    is dropped entirely.
    """
    tag = classify_case(psi)
    if tag.tag not in ("case1", "case2", "case3"):
        raise ValidationError(f"cannot reduce a {tag.tag} parameter")
    if l < 1:
        raise ValidationError(f"reduction depth must be positive, got {l}")
    b = tag.b
    nontrivial = next(s for s in psi.simples if s.mult > 1)
    rest = [s for s in psi.simples if s.mult == 1]
    if tag.tag == "case1":
        if l > b:
            raise ValidationError(f"case1 reduction depth {l} exceeds b={b}")
        new = [SimpleParameter(nontrivial.dim, 2 * b - 2 * l + 1, ORTHOGONAL, nontrivial.label)]
    elif tag.tag == "case2":
        if l > b + 1:
            raise ValidationError(f"case2 reduction depth {l} exceeds b+1={b + 1}")
        if l == b + 1:
            new = []
            rest = [s for s in rest if (s.dim, s.label) != (nontrivial.dim, nontrivial.label)]
        elif l == b:
            new = [SimpleParameter(nontrivial.dim, 1, ORTHOGONAL, nontrivial.label + "'")]
        else:
            new = [SimpleParameter(nontrivial.dim, 2 * b - 2 * l + 1, ORTHOGONAL, nontrivial.label)]
    else:
        if l > b:
            raise ValidationError(f"case3 reduction depth {l} exceeds b={b}")
        new = []
        if 2 * b - 2 * l > 0:
            new = [SimpleParameter(nontrivial.dim, 2 * b - 2 * l, SYMPLECTIC, nontrivial.label)]
    simples = tuple(new + rest)
    n = (sum(s.dim * s.mult for s in simples) - 1) // 2
    reduced = GlobalParameter(simples=simples, n=n)
    require_valid(reduced)
    return reduced


@lru_cache(maxsize=None)
def enumerate_parameters(n: int) -> tuple[GlobalParameter, ...]:
    """All shape-level valid parameters of rank n, deterministically ordered.

    Shapes are multisets of (dim, mult, symmetry); repeated shapes receive
    distinct synthetic labels.  Capped at n <= 8.
    """
    if n < 1:
        raise ValidationError(f"rank must be positive, got {n}")
    if n > PARAMETER_CAP:
        raise ValidationError(f"parameter enumeration capped at n <= {PARAMETER_CAP}")
    total = 2 * n + 1
    triples = []
    for dim in range(1, total + 1):
        for mult in range(1, total // dim + 1):
            if mult % 2:
                triples.append((dim, mult, ORTHOGONAL))
            elif dim % 2 == 0:
                triples.append((dim, mult, SYMPLECTIC))
    triples.sort(reverse=True)
    results: list[GlobalParameter] = []

    def build(remaining: int, start: int, chosen: list[tuple[int, int, str]]) -> None:
        if remaining == 0:
            simples = tuple(
                SimpleParameter(d, m, sym, f"x{i}")
                for i, (d, m, sym) in enumerate(chosen, start=1)
            )
            psi = GlobalParameter(simples=simples, n=n)
            if not validate(psi):
                results.append(psi)
            return
        for idx in range(start, len(triples)):
            d, m, sym = triples[idx]
            if d * m > remaining:
                continue
            chosen.append((d, m, sym))
            build(remaining - d * m, idx, chosen)
            chosen.pop()

    build(total, 0, [])
    return tuple(results)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

_SIMPLE_RE = re.compile(r"^(\d+):(\d+):([OS])(?:#(\w+))?$")


def parse_parameter(text: str, n: int) -> GlobalParameter:
    """Parse "a:b:O#label + ..." terms against an explicit rank n."""
    simples = []
    auto = 0
    for raw in text.split("+"):
        term = "".join(raw.split())
        m = _SIMPLE_RE.match(term)
        if not m:
            raise ValidationError(f"bad parameter term {raw.strip()!r}")
        label = m.group(4)
        if label is None:
            auto += 1
            label = f"_{auto}"
        simples.append(SimpleParameter(int(m.group(1)), int(m.group(2)), m.group(3), label))
    psi = GlobalParameter(simples=tuple(simples), n=n)
    require_valid(psi)
    return psi


def format_parameter(psi: GlobalParameter) -> str:
    return " + ".join(
        f"{s.dim}:{s.mult}:{s.symmetry}" + (f"#{s.label}" if s.label else "")
        for s in psi.simples
    )
