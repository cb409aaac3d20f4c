"""Exponent calculus for Speh blocks and descent towers.

Cuspidal exponents are exact half-integer vectors.  The constant-term
profiles record, for each descent family and each depth i, the net twist
exponent on the GL block and the remaining member of the tower.  The
descent-term analysis reproduces the vanishing bookkeeping of the
constant-term formula: a term either dies on cuspidal support, dies
because a test partition exceeds the duality bound of the reduced
parameter in the lexicographic order, or survives subject to the terminal
genericity condition.

Families:

* ``Family("I"|"II"|"III", a, b, m)`` -- the three residual families on
  Sp, with tower parameter b and generic support of rank m;
* ``Metaplectic(k, b)`` -- the metaplectic residual tower built from a
  GL_(2k+1) block, whose constant terms are defined for depth i <= b-1
  only (the terminal profile is left undefined and rejected).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import arthur, partitions as pt
from .errors import InvariantBreach, ValidationError
from .partitions import Order, Partition

ExponentVector = tuple[Fraction, ...]


def exponent_vector(entries) -> ExponentVector:
    """Build an exact exponent vector; denominators other than 1, 2 are drift."""
    out = []
    for e in entries:
        f = Fraction(e)
        if f.denominator not in (1, 2):
            raise ValidationError(f"exponent {f} is not a half-integer")
        out.append(f)
    return tuple(out)


def speh_exponents(b: int) -> ExponentVector:
    """Cuspidal exponent of a depth-b Speh block: (1-b)/2, (3-b)/2, ..., (b-1)/2.

    >>> speh_exponents(3)
    (Fraction(-1, 1), Fraction(0, 1), Fraction(1, 1))
    """
    if b < 1:
        raise ValidationError(f"Speh depth must be positive, got {b}")
    return exponent_vector(Fraction(2 * j + 1 - b, 2) for j in range(b))


def twist(v: ExponentVector, s) -> ExponentVector:
    """Entrywise shift by an exact half-integer."""
    return exponent_vector(e + Fraction(s) for e in v)


def langlands_square_integrable(v: ExponentVector) -> bool:
    """Square-integrability criterion: every exponent strictly negative."""
    return all(e < 0 for e in v)


def exponent_chain_check(b: int, alphas) -> bool:
    """Check the full shell chain (2j-1)/2 + alpha_i, j = b..1, is strictly
    decreasing and ends above zero.

    The alphas are arbitrary exact rationals (tempered-twist exponents, not
    cuspidal ones) and must be strictly decreasing inside the open interval
    (-1/2, 1/2); under that precondition the chain always holds, and this
    routine verifies it mechanically.
    """
    if b < 1:
        raise ValidationError(f"shell count must be positive, got {b}")
    alphas = tuple(Fraction(a) for a in alphas)
    half = Fraction(1, 2)
    if any(not (-half < a < half) for a in alphas):
        raise ValidationError("exponents must lie in the open interval (-1/2, 1/2)")
    if any(alphas[i] <= alphas[i + 1] for i in range(len(alphas) - 1)):
        raise ValidationError("exponents must be strictly decreasing")
    chain = [
        Fraction(2 * j - 1, 2) + a for j in range(b, 0, -1) for a in alphas
    ]
    descending = all(chain[i] > chain[i + 1] for i in range(len(chain) - 1))
    return descending and (not chain or chain[-1] > 0)


# ---------------------------------------------------------------------------
# Constant-term profiles
# ---------------------------------------------------------------------------


_CASE_NAMES = {"I": "case1", "II": "case2", "III": "case3"}


@dataclass(frozen=True)
class Family:
    """One of the three Sp residual families, case "I", "II" or "III"."""

    case: str
    a: int
    b: int
    m: int

    def __post_init__(self):
        if self.case not in ("I", "II", "III"):
            raise ValidationError(f"unknown family case {self.case!r}")
        if self.a < 1 or self.b < 1 or self.m < 0:
            raise ValidationError(f"bad family data {self}")
        if self.case == "III" and self.a % 2:
            raise ValidationError(f"case III needs even block size, got a={self.a}")

    def parameter(self) -> arthur.GlobalParameter:
        return arthur.case_parameter(_CASE_NAMES[self.case], self.a, self.b, self.m)


@dataclass(frozen=True)
class Metaplectic:
    """Metaplectic residual tower on a GL_(2k+1) Speh block."""

    k: int
    b: int

    def __post_init__(self):
        if self.k < 1 or self.b < 1:
            raise ValidationError(f"bad metaplectic data {self}")


@dataclass(frozen=True)
class Remainder:
    """What is left after taking a constant term: a smaller tower member,
    the terminal cuspidal datum, or the non-residual Eisenstein marker."""

    kind: str  # "family" | "metaplectic" | "sigma" | "tau-sigma-eisenstein"
    family: Family | Metaplectic | None = None


@dataclass(frozen=True)
class ConstantTermProfile:
    speh_mult: int
    twist_exponent: Fraction
    remainder: Remainder


def constant_term_profile(family, i: int) -> ConstantTermProfile:
    """Net GL-block twist and remainder of the depth-i constant term."""
    if i < 1:
        raise ValidationError(f"constant-term depth must be positive, got {i}")
    if isinstance(family, Metaplectic):
        # Depth b-1 tower; the i = b terminal profile is undefined.
        if i > family.b - 1:
            raise ValidationError(
                f"metaplectic profile defined for i <= b-1 = {family.b - 1}, got {i}"
            )
        return ConstantTermProfile(
            speh_mult=i,
            twist_exponent=Fraction(-(2 * family.b - i), 2),
            remainder=Remainder("metaplectic", Metaplectic(family.k, family.b - i)),
        )
    if not isinstance(family, Family):
        raise ValidationError(f"unknown family {family!r}")
    a, b, m = family.a, family.b, family.m
    if family.case == "I":
        if i > b:
            raise ValidationError(f"case I profile needs i <= b = {b}, got {i}")
        exponent = Fraction(-(2 * b + 1 - i), 2)
        if i == b:
            rem = Remainder("sigma")
        else:
            rem = Remainder("family", Family("I", a, b - i, m))
    elif family.case == "II":
        if i > b + 1:
            raise ValidationError(f"case II profile needs i <= b+1 = {b + 1}, got {i}")
        exponent = Fraction(-(2 * b + 1 - i), 2)
        if i == b + 1:
            rem = Remainder("sigma")
        elif i == b:
            rem = Remainder("tau-sigma-eisenstein")
        else:
            rem = Remainder("family", Family("II", a, b - i, m))
    else:
        if i > b:
            raise ValidationError(f"case III profile needs i <= b = {b}, got {i}")
        exponent = Fraction(-(2 * b - i), 2)
        if i == b:
            rem = Remainder("sigma")
        else:
            rem = Remainder("family", Family("III", a, b - i, m))
    return ConstantTermProfile(speh_mult=i, twist_exponent=exponent, remainder=rem)


# ---------------------------------------------------------------------------
# Descent-term analysis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DescentTermVerdict:
    r: int
    k: int
    status: str
    witness: tuple[Partition, Partition] | None = None


def descent_group_rank(family: Family) -> int:
    """Rank of the group the descent lands on (range of the index r)."""
    if family.case in ("I", "II"):
        return family.a * family.b
    return (family.a // 2) * (2 * family.b - 1)


def _vanish_by_bound(r: int, k: int, test: Partition, eta: Partition) -> DescentTermVerdict:
    if pt.lex_compare(test, eta) != Order.GREATER:
        raise InvariantBreach(
            f"descent witness {pt.format_partition(test)} does not exceed "
            f"{pt.format_partition(eta)} lexicographically"
        )
    return DescentTermVerdict(r=r, k=k, status="VanishPartitionBound", witness=(test, eta))


def descent_term_analysis(
    family: Family, sigma_generic: bool, r: int
) -> list[DescentTermVerdict]:
    """Verdicts for the k = 0..r terms of the depth-r constant term.

    A term vanishes on cuspidal support unless k = r or r - k is a
    multiple of the block size.  The k = r term and the mixed terms die on
    the partition bound: the first part forced by the Fourier-Jacobi index
    already exceeds the first part of the duality image of the (possibly
    reduced) parameter, which is recorded as a lex-greater witness pair.
    The pure term (k = 0 at a block-aligned r) is the one that can
    survive, subject to the terminal genericity condition.
    """
    a, m = family.a, family.m
    psi = family.parameter()
    rank = descent_group_rank(family)
    if not 1 <= r <= rank:
        raise ValidationError(f"descent index r={r} outside 1..{rank}")
    # First part of the partition forced by the Fourier-Jacobi index at k = 0.
    head0 = {"I": 2 * m, "II": 2 * m + 2 * a, "III": a + 2 * m}[family.case]
    eta_full = arthur.eta_of_psi(psi)
    verdicts = []
    for k in range(r + 1):
        if k == r:
            test = pt.normalize([head0 + 2 * r] + [1] * (2 * psi.n - head0 - 2 * r))
            verdicts.append(_vanish_by_bound(r, k, test, eta_full))
            continue
        if (r - k) % a != 0:
            verdicts.append(DescentTermVerdict(r=r, k=k, status="VanishCuspidalSupport"))
            continue
        l = (r - k) // a
        if k == 0:
            status = "Survives" if sigma_generic else "SurvivesIfGeneric"
            verdicts.append(DescentTermVerdict(r=r, k=k, status=status))
            continue
        reduced = arthur.reduce_parameter(psi, l)
        eta_reduced = arthur.eta_of_psi(reduced)
        test = pt.normalize(
            [head0 + 2 * k] + [1] * (2 * reduced.n - head0 - 2 * k)
        )
        verdicts.append(_vanish_by_bound(r, k, test, eta_reduced))
    return verdicts


# ---------------------------------------------------------------------------
# Whittaker-depth vanishing
# ---------------------------------------------------------------------------


def whittaker_depth_vanishing(family, p: int) -> str:
    """Fate of the depth-p degenerate Whittaker coefficient.

    "Vanishes" at and above the family's threshold (2m+1 for case I,
    2k+1 for the metaplectic tower), "EqualsShifted" exactly one step
    below (the coefficient equals its shifted companion there),
    "Unconstrained" further down.
    """
    if p < 1:
        raise ValidationError(f"depth must be positive, got {p}")
    if isinstance(family, Family) and family.case == "I":
        threshold = 2 * family.m + 1
    elif isinstance(family, Metaplectic):
        threshold = 2 * family.k + 1
    else:
        raise ValidationError(f"no Whittaker-depth statement for {family!r}")
    if p >= threshold:
        return "Vanishes"
    if p == threshold - 1:
        return "EqualsShifted"
    return "Unconstrained"


def format_exponents(v: ExponentVector) -> str:
    return "{" + ", ".join(str(e) for e in v) + "}"


def parse_exponents(text: str, half_integral: bool = True) -> tuple[Fraction, ...]:
    """Parse a comma-separated list of rationals, braces optional.

    half_integral enforces the cuspidal-exponent denominators (1 or 2);
    chain-check inputs pass False.
    """
    s = "".join(text.split())
    if s.startswith("{") and s.endswith("}"):
        s = s[1:-1]
    if not s:
        return ()
    try:
        values = [Fraction(tok) for tok in s.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad exponent list {text!r}: {exc}")
    return exponent_vector(values) if half_integral else tuple(values)
