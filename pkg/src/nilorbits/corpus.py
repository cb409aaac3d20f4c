"""Golden corpus for the reproduction command.

Each case freezes an expected value derived from the closed formulas and
identity statements the library is built around; evaluation recomputes the
quantity through the definitional code paths and compares.  Property-style
cases expect the literal string "pass".

The corpus serializes to JSON so an external (possibly corrupted) corpus
can be loaded for negative-control runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import arthur, exchange, exponents, partitions as pt, roots
from .errors import InvariantBreach, ValidationError
from .partitions import Order

ETA_GRID_A = range(1, 7)
ETA_GRID_B = range(1, 5)
ETA_GRID_M = range(0, 5)
DUALITY_SIZES = range(3, 18, 2)
ORACLE_SIZES = range(2, 21, 2)
EXPONENT_RANGE = range(1, 21)
DESCENT_BUDGET = 24


@dataclass(frozen=True)
class Case:
    id: str
    kind: str
    args: dict
    expected: str


def _case_tags() -> list[tuple[str, int, int, int]]:
    tags = []
    for a in ETA_GRID_A:
        for b in ETA_GRID_B:
            for m in ETA_GRID_M:
                if a <= 2 * m + 1:
                    tags.append(("case1", a, b, m))
                tags.append(("case2", a, b, m))
                if a % 2 == 0:
                    tags.append(("case3", a, b, m))
    return tags


def build_corpus() -> list[Case]:
    cases: list[Case] = []
    for case, a, b, m in _case_tags():
        closed = arthur.eta_closed_form(arthur.CaseTag(case, a=a, b=b, m=m))
        cases.append(
            Case(
                id=f"eta/{case}/a{a}b{b}m{m}",
                kind="eta",
                args={"case": case, "a": a, "b": b, "m": m},
                expected=pt.format_partition(closed),
            )
        )
    for a in (1, 3, 5):
        for b in ETA_GRID_B:
            for m in ETA_GRID_M:
                if a > 2 * m:
                    continue
                expected = pt.normalize([2 * m, a + 1] + [a] * (2 * b - 2) + [a - 1])
                cases.append(
                    Case(
                        id=f"expansion/a{a}b{b}m{m}",
                        kind="expansion",
                        args={"a": a, "b": b, "m": m},
                        expected=pt.format_partition(expected),
                    )
                )
                collapsed = pt.normalize(
                    [2 * b + 1] * (a - 1) + [2 * b, 2] + [1] * (2 * m + a - 1)
                )
                cases.append(
                    Case(
                        id=f"collapse-step/a{a}b{b}m{m}",
                        kind="collapse-step",
                        args={"a": a, "b": b, "m": m},
                        expected=pt.format_partition(collapsed),
                    )
                )
    for size in DUALITY_SIZES:
        cases.append(
            Case(
                id=f"duality-props/size{size}",
                kind="duality-props",
                args={"size": size},
                expected="pass",
            )
        )
    for size in ORACLE_SIZES:
        cases.append(
            Case(
                id=f"special-oracle/size{size}",
                kind="special-oracle",
                args={"size": size},
                expected="pass",
            )
        )
    for k in (1, 2, 3):
        for b in (1, 2, 3):
            cases.append(
                Case(
                    id=f"root-identity/k{k}b{b}",
                    kind="root-identity",
                    args={"k": k, "b": b},
                    expected="pass",
                )
            )
    for k, b in ((1, 1), (1, 2)):
        cases.append(
            Case(
                id=f"exchange-verify/k{k}b{b}",
                kind="exchange-verify",
                args={"k": k, "b": b},
                expected="pass",
            )
        )
    cases.append(
        Case(
            id="vp2/sanity",
            kind="vp2-sanity",
            args={},
            expected="{2e1, 2e2, e1+e2}",
        )
    )
    for size in range(2, 13, 2):
        cases.append(
            Case(
                id=f"vp2/closure/size{size}",
                kind="vp2-closure",
                args={"size": size},
                expected="pass",
            )
        )
    for b in EXPONENT_RANGE:
        cases.append(
            Case(
                id=f"exponent/b{b}",
                kind="exponent",
                args={"b": b},
                expected="pass",
            )
        )
    for case, a, b, m in _case_tags():
        if a * b * m > DESCENT_BUDGET:
            continue
        cases.append(
            Case(
                id=f"descent/{case}/a{a}b{b}m{m}",
                kind="descent",
                args={"case": case, "a": a, "b": b, "m": m},
                expected="pass",
            )
        )
    return cases


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def _family(case: str, a: int, b: int, m: int) -> exponents.Family:
    return exponents.Family({"case1": "I", "case2": "II", "case3": "III"}[case], a, b, m)


def _eval_eta(args) -> str:
    psi = arthur.case_parameter(args["case"], args["a"], args["b"], args["m"])
    eta = pt.barbasch_vogan_dual(arthur.p_of_psi(psi))
    return pt.format_partition(eta)


def _eval_expansion(args) -> str:
    a, b, m = args["a"], args["b"], args["m"]
    start = pt.normalize([2 * m] + [a] * (2 * b))
    result = pt.sp_expansion(start)
    if sum(start) <= pt.brute_cap():
        brute = pt.special_expansion_by_search(start)
        if brute != result:
            return f"fail: brute force found {pt.format_partition(brute)}"
    return pt.format_partition(result)


def _eval_collapse_step(args) -> str:
    a, b, m = args["a"], args["b"], args["m"]
    start = pt.normalize([2 * b + 1] * a + [1] * (2 * m + a))
    return pt.format_partition(pt.special_sp_collapse(start))


def _eval_duality_props(args) -> str:
    size = args["size"]
    orthogonals = pt.enumerate_partitions(size, "orthogonal")
    images = []
    for q in orthogonals:
        eta = pt.barbasch_vogan_dual(q)
        if not pt.is_special_symplectic(eta):
            return f"fail: eta({pt.format_partition(q)}) is not special"
        reduced = pt.decrement_tail(q)
        collapsed = pt.special_sp_collapse(reduced)
        if pt.special_sp_collapse(collapsed) != collapsed:
            return "fail: collapse is not idempotent"
        if not pt.dominates(reduced, collapsed):
            return "fail: collapse is not dominated by its input"
        if pt.sp_expansion(eta) != eta:
            return "fail: expansion moves a special partition"
        images.append((q, eta))
    for q1, eta1 in images:
        for q2, eta2 in images:
            if pt.dominance_compare(q1, q2) == Order.LESS and pt.dominance_compare(
                eta1, eta2
            ) not in (Order.GREATER, Order.EQUAL):
                return (
                    f"fail: duality not antitone at {pt.format_partition(q1)}"
                    f" <= {pt.format_partition(q2)}"
                )
    return "pass"


def _eval_special_oracle(args) -> str:
    size = args["size"]
    symplectics = pt.enumerate_partitions(size, "symplectic")
    image = {pt.symplectic_collapse(pt.transpose(q)) for q in symplectics}
    for p in symplectics:
        if pt.classify(p).special_symplectic != (p in image):
            return f"fail: transpose criterion disagrees at {pt.format_partition(p)}"
    return "pass"


def _eval_root_identity(args) -> str:
    k, b = args["k"], args["b"]
    datum = exchange.exchange_sequences(k, b)
    for i in range(1, 2 * k + 1):
        xs = datum.x_rows[i - 1]
        ys = datum.y_rows[i - 1]
        step = roots.e_minus_e(i, i + 1)
        for alpha, beta in zip(xs, ys):
            if roots.add_roots(alpha, beta) != step:
                return f"fail: row {i} pair {alpha}, {beta}"
        if len(xs) != exchange.sequence_length(k, b, i):
            return f"fail: row {i} length {len(xs)}"
        if set(xs) != exchange.derived_x_row(k, b, i):
            return f"fail: row {i} X roots differ from the grading"
        if set(ys) != exchange.derived_y_row(k, b, i):
            return f"fail: row {i} Y roots differ from the grading"
    return "pass"


def _eval_exchange_verify(args) -> str:
    k, b = args["k"], args["b"]
    datum = exchange.exchange_sequences(k, b)
    for stage in range(1, 2 * k + 1):
        report = exchange.verify_exchange_quadruple(datum, datum.n_coords, stage)
        if not report.passed:
            failing = [c for c in report.conditions if not c.passed]
            return f"fail: stage {stage}: {failing[0].name}: {failing[0].detail}"
    return "pass"


def _eval_vp2_sanity(args) -> str:
    found = roots.v_p2((2, 2), "dominant")
    return "{" + ", ".join(sorted(roots.format_root(r) for r in found)) + "}"


def _eval_vp2_closure(args) -> str:
    size = args["size"]
    for p in pt.enumerate_partitions(size, "symplectic"):
        for arrangement in ("stacked", "dominant"):
            group = roots.v_p2(p, arrangement)
            for x in group:
                for y in group:
                    total = roots.add_roots(x, y)
                    if total is not None and total not in group:
                        return (
                            f"fail: {pt.format_partition(p)}/{arrangement} misses "
                            f"{roots.format_root(total)}"
                        )
        if len(roots.v_p2(p, "stacked")) != len(roots.v_p2(p, "dominant")):
            return f"fail: arrangement cardinality differs at {pt.format_partition(p)}"
    return "pass"


def _eval_exponent(args) -> str:
    b = args["b"]
    tower = exponents.twist(exponents.speh_exponents(b), Fraction(-b, 2))
    if max(tower) != Fraction(-1, 2):
        return f"fail: twisted maximum {max(tower)}"
    if not exponents.langlands_square_integrable(tower):
        return "fail: twisted exponents not square-integrable"
    if b >= 2:
        variant = exponents.twist(exponents.speh_exponents(b - 1), Fraction(-b, 2))
        if max(variant) != Fraction(-1):
            return f"fail: variant maximum {max(variant)}"
    return "pass"


def _eval_descent(args) -> str:
    family = _family(args["case"], args["a"], args["b"], args["m"])
    a = family.a
    rank = exponents.descent_group_rank(family)
    for r in range(1, rank + 1):
        verdicts = exponents.descent_term_analysis(family, sigma_generic=True, r=r)
        survivors = [v for v in verdicts if v.status in ("Survives", "SurvivesIfGeneric")]
        if (r % a == 0) != bool(survivors):
            return f"fail: r={r} survivor pattern violates block alignment"
        for v in verdicts:
            if v.status == "VanishPartitionBound":
                test, eta = v.witness
                if pt.lex_compare(test, eta) != Order.GREATER:
                    return f"fail: witness at r={r}, k={v.k} is not lex-greater"
            elif v.status == "VanishCuspidalSupport":
                if v.k != r and (r - v.k) % a == 0:
                    return f"fail: r={r}, k={v.k} wrongly died on cuspidal support"
    return "pass"


_EVALUATORS = {
    "eta": _eval_eta,
    "expansion": _eval_expansion,
    "collapse-step": _eval_collapse_step,
    "duality-props": _eval_duality_props,
    "special-oracle": _eval_special_oracle,
    "root-identity": _eval_root_identity,
    "exchange-verify": _eval_exchange_verify,
    "vp2-sanity": _eval_vp2_sanity,
    "vp2-closure": _eval_vp2_closure,
    "exponent": _eval_exponent,
    "descent": _eval_descent,
}


def evaluate_case(case: Case) -> tuple[bool, str]:
    """Run one corpus case; returns (ok, actual-value)."""
    evaluator = _EVALUATORS.get(case.kind)
    if evaluator is None:
        return False, f"unknown case kind {case.kind!r}"
    try:
        actual = evaluator(case.args)
    except (ValidationError, InvariantBreach) as exc:
        return False, f"error: {exc}"
    return actual == case.expected, actual


def corpus_to_json(cases: list[Case]) -> str:
    return json.dumps(
        [
            {"id": c.id, "kind": c.kind, "args": c.args, "expected": c.expected}
            for c in cases
        ],
        indent=2,
    )


def corpus_from_json(text: str) -> list[Case]:
    try:
        raw = json.loads(text)
        return [
            Case(id=r["id"], kind=r["kind"], args=r["args"], expected=r["expected"])
            for r in raw
        ]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ValidationError(f"bad corpus file: {exc}")
