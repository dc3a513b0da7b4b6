"""
Exact-identity verification suites.

Every identity is an equality of concrete maps, certified extensionally:
operators here preserve total degree, so agreement on every monomial up to
``SuiteBounds.max_degree`` proves the identity on that subspace. Randomized
symmetric samples come from a ``random.Random`` seeded with
``SuiteBounds.seed`` and are therefore reproducible.
"""

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

from src.coeff.qseries import elementary_symmetric, pochhammer, qbinom
from src.coeff.ratqt import ONE, Q, T, ZERO, RatQT
from src.config import SuiteBounds
from src.creation.operators import (
    CreationVariant,
    apply_B,
    apply_B1,
    apply_B2,
    b2_inner_sum,
    d_statistic,
    rodrigues,
)
from src.hecke.operators import (
    Q_INV,
    T_INV,
    HeckeContext,
    IndexSet,
    apply_omega,
    apply_s0,
    apply_T,
    apply_T0,
    apply_T_inv,
    apply_Y,
    apply_YJu,
    apply_YJu_as_u_series,
    omega_by_composition,
    s0_by_composition,
)
from src.macdonald.operators import A_tilde, apply_macdonald_genfun, apply_macdonald_r, eigenvalue_a
from src.macdonald.oracle import gram_schmidt_J, macdonald_poly
from src.pieri.kostka import kostka_matrix
from src.pieri.pieri import leading_column_structure, pieri_expand, pieri_oracle
from src.poly.mpoly import MPoly, apply_transposition, is_symmetric
from src.poly.series import ParamPolyResult
from src.symfun.bases import elementary, monomial_symmetric, scalar_product_qt
from src.symfun.partitions import Partition, c_lambda, dominance_leq, partitions_of
from src.utils.logger import Logger

# labels u for the identities that hold for every u
SAMPLE_U = (T, Q_INV, RatQT.monomial(1, 1, 2))


@dataclass
class IdentityResult:
    """Outcome of one named identity over its case list."""

    name: str
    passed: bool
    cases: int
    counterexample: Optional[str] = None

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "counterexample": self.counterexample,
        }


@dataclass
class SuiteReport:
    suite: str
    bounds: SuiteBounds
    results: list[IdentityResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[IdentityResult]:
        return [r for r in self.results if not r.passed]

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "nvars": self.bounds.nvars,
            "max_degree": self.bounds.max_degree,
            "seed": self.bounds.seed,
            "passed": self.passed,
            "identities": [r.to_json_dict() for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def to_text(self) -> str:
        width = max([len(r.name) for r in self.results] + [1])
        lines = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{status}  {r.name:<{width}}  ({r.cases} cases)")
            if r.counterexample is not None:
                lines.append(f"      counterexample: {r.counterexample}")
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(
            f"suite {self.suite}: {verdict} "
            f"({len(self.results) - len(self.failures())}/{len(self.results)} identities, "
            f"nvars={self.bounds.nvars}, max_degree={self.bounds.max_degree})"
        )
        return "\n".join(lines)


class _Checker:
    """Collects IdentityResults for one suite run."""

    def __init__(self, suite: str, logger: Optional[Logger]):
        self.suite = suite
        self.logger = logger
        self.results: list[IdentityResult] = []

    def identity(
        self,
        name: str,
        items: Iterable,
        lhs: Callable,
        rhs: Callable,
        label: Callable[[object], str] = str,
    ) -> IdentityResult:
        count = 0
        result = None
        for item in items:
            count += 1
            try:
                ok = lhs(item) == rhs(item)
            except ArithmeticError as e:
                result = IdentityResult(name, False, count, f"{label(item)}: {type(e).__name__}: {e}")
                break
            if not ok:
                result = IdentityResult(name, False, count, label(item))
                break
        if result is None:
            result = IdentityResult(name, True, count)
        if self.logger:
            status = "ok" if result.passed else "FAILED"
            self.logger.debug(self.suite, f"{name}: {status} after {result.cases} cases")
        self.results.append(result)
        return result

    def vanishes(self, name: str, items: Iterable, expr: Callable, label: Callable[[object], str] = str) -> IdentityResult:
        return self.identity(name, items, lambda item: not expr(item), lambda item: True, label)

    def holds(self, name: str, items: Iterable, predicate: Callable, label: Callable[[object], str] = str) -> IdentityResult:
        return self.identity(name, items, lambda item: bool(predicate(item)), lambda item: True, label)


# case generators


def _shapes(max_degree: int, nvars: int, min_degree: int = 0) -> list[Partition]:
    return [lam for d in range(min_degree, max_degree + 1) for lam in partitions_of(d, max_length=nvars)]


def _random_symmetric(rng: random.Random, nvars: int, max_degree: int, count: int) -> list[MPoly]:
    shapes = _shapes(max_degree, nvars)
    out = []
    for _ in range(count):
        f = MPoly.zero(nvars)
        for lam in rng.sample(shapes, min(3, len(shapes))):
            coeff = RatQT.monomial(rng.choice([-2, -1, 1, 2, 3]), rng.randint(0, 1), rng.randint(0, 1))
            f = f + monomial_symmetric(lam, nvars).scale(coeff)
        out.append(f)
    return out


def _require_nvars(suite: str, nvars: int, low: int) -> None:
    if nvars < low:
        raise ValueError(f"suite {suite} needs nvars >= {low}, got {nvars}")


def _hecke_T(f: MPoly, i: int) -> MPoly:
    return apply_T0(f) if i == 0 else apply_T(f, i)


def _weyl_s(f: MPoly, i: int) -> MPoly:
    return apply_s0(f) if i == 0 else apply_transposition(f, i)


def _cyclic_distance(i: int, j: int, n: int) -> int:
    d = abs(i - j) % n
    return min(d, n - d)


def _times_x(f: MPoly, j: int) -> MPoly:
    return f * MPoly.variable(f.nvars, j)


def _pairs_label(item) -> str:
    f, *indices = item
    return f"f={f}, indices={tuple(indices)}"


# suites


def suite_hecke(bounds: SuiteBounds, logger: Optional[Logger] = None) -> list[IdentityResult]:
    """Hecke and Weyl relations of T_0..T_{N-1}, s_0..s_{N-1} and omega."""
    n = bounds.nvars
    _require_nvars("hecke", n, 2)
    ctx = HeckeContext(n)
    monos = ctx.monomials_up_to(bounds.max_degree)
    check = _Checker("hecke", logger)
    idx = range(n)
    by_index = [(f, i) for f in monos for i in idx]

    check.identity(
        "quadratic T_i^2 = (1 - t^-1) T_i + t^-1",
        by_index,
        lambda c: _hecke_T(_hecke_T(c[0], c[1]), c[1]),
        lambda c: _hecke_T(c[0], c[1]).scale(1 - T_INV) + c[0].scale(T_INV),
        _pairs_label,
    )
    check.identity(
        "inverse T_i^-1 T_i = 1",
        by_index,
        lambda c: apply_T_inv(_hecke_T(c[0], c[1]), c[1]),
        lambda c: c[0],
        _pairs_label,
    )
    check.identity(
        "inverse T_i T_i^-1 = 1",
        by_index,
        lambda c: _hecke_T(apply_T_inv(c[0], c[1]), c[1]),
        lambda c: c[0],
        _pairs_label,
    )
    if n >= 3:
        adjacent = [(f, i, (i + 1) % n) for f in monos for i in idx]
        check.identity(
            "braid T_i T_j T_i = T_j T_i T_j (adjacent mod N)",
            adjacent,
            lambda c: _hecke_T(_hecke_T(_hecke_T(c[0], c[1]), c[2]), c[1]),
            lambda c: _hecke_T(_hecke_T(_hecke_T(c[0], c[2]), c[1]), c[2]),
            _pairs_label,
        )
        check.identity(
            "braid s_i s_j s_i = s_j s_i s_j (adjacent mod N)",
            adjacent,
            lambda c: _weyl_s(_weyl_s(_weyl_s(c[0], c[1]), c[2]), c[1]),
            lambda c: _weyl_s(_weyl_s(_weyl_s(c[0], c[2]), c[1]), c[2]),
            _pairs_label,
        )
    far = [(f, i, j) for f in monos for i in idx for j in idx if i < j and _cyclic_distance(i, j, n) >= 2]
    check.identity(
        "far commutation T_i T_j = T_j T_i",
        far,
        lambda c: _hecke_T(_hecke_T(c[0], c[2]), c[1]),
        lambda c: _hecke_T(_hecke_T(c[0], c[1]), c[2]),
        _pairs_label,
    )
    check.identity(
        "omega T_i = T_{i-1} omega",
        by_index,
        lambda c: apply_omega(_hecke_T(c[0], c[1]), 1),
        lambda c: _hecke_T(apply_omega(c[0], 1), (c[1] - 1) % n),
        _pairs_label,
    )
    check.identity(
        "involution s_i^2 = 1",
        by_index,
        lambda c: _weyl_s(_weyl_s(c[0], c[1]), c[1]),
        lambda c: c[0],
        _pairs_label,
    )
    check.identity(
        "omega s_i omega^-1 = s_{i-1}",
        by_index,
        lambda c: apply_omega(_weyl_s(apply_omega(c[0], -1), c[1]), 1),
        lambda c: _weyl_s(c[0], (c[1] - 1) % n),
        _pairs_label,
    )
    check.identity("omega omega^-1 = 1", monos, lambda f: apply_omega(apply_omega(f, -1), 1), lambda f: f)
    check.identity("s_0 by substitution = s_0 by composition", monos, apply_s0, s0_by_composition)
    check.identity("omega by substitution = omega by composition", monos, lambda f: apply_omega(f, 1), omega_by_composition)
    return check.results


def suite_dunkl(bounds: SuiteBounds, logger: Optional[Logger] = None) -> list[IdentityResult]:
    """Dunkl-Cherednik relations, variable relations and the symmetric identities (I)-(V)."""
    n = bounds.nvars
    _require_nvars("dunkl", n, 2)
    ctx = HeckeContext(n)
    monos = ctx.monomials_up_to(bounds.max_degree)
    lower = ctx.monomials_up_to(max(bounds.max_degree - 1, 0))
    check = _Checker("dunkl", logger)
    rng = random.Random(bounds.seed)

    check.identity("Y_i 1 = 1", range(1, n + 1), lambda i: apply_Y(ctx.one(), i), lambda i: ctx.one())
    check.identity(
        "commutation Y_i Y_j = Y_j Y_i",
        [(f, i, j) for f in monos for i, j in combinations(range(1, n + 1), 2)],
        lambda c: apply_Y(apply_Y(c[0], c[2]), c[1]),
        lambda c: apply_Y(apply_Y(c[0], c[1]), c[2]),
        _pairs_label,
    )
    check.identity(
        "intertwining T_i Y_{i+1} T_i = Y_i",
        [(f, i) for f in monos for i in range(1, n)],
        lambda c: apply_T(apply_Y(apply_T(c[0], c[1]), c[1] + 1), c[1]),
        lambda c: apply_Y(c[0], c[1]),
        _pairs_label,
    )
    check.identity(
        "T_i Y_j = Y_j T_i for j not in {i, i+1}",
        [(f, i, j) for f in monos for i in range(1, n) for j in range(1, n + 1) if j not in (i, i + 1)],
        lambda c: apply_T(apply_Y(c[0], c[2]), c[1]),
        lambda c: apply_Y(apply_T(c[0], c[1]), c[2]),
        _pairs_label,
    )

    by_i = [(f, i) for f in lower for i in range(1, n)]
    one_minus_tinv = ONE - T_INV
    one_minus_t = ONE - T
    check.identity(
        "T_i x_i = x_{i+1} T_i - (1 - t^-1) x_{i+1}",
        by_i,
        lambda c: apply_T(_times_x(c[0], c[1]), c[1]),
        lambda c: _times_x(apply_T(c[0], c[1]), c[1] + 1) - _times_x(c[0], c[1] + 1).scale(one_minus_tinv),
        _pairs_label,
    )
    check.identity(
        "T_i x_{i+1} = x_i T_i + (1 - t^-1) x_{i+1}",
        by_i,
        lambda c: apply_T(_times_x(c[0], c[1] + 1), c[1]),
        lambda c: _times_x(apply_T(c[0], c[1]), c[1]) + _times_x(c[0], c[1] + 1).scale(one_minus_tinv),
        _pairs_label,
    )
    check.identity(
        "T_i x_j = x_j T_i for j not in {i, i+1}",
        [(f, i, j) for f in lower for i in range(1, n) for j in range(1, n + 1) if j not in (i, i + 1)],
        lambda c: apply_T(_times_x(c[0], c[2]), c[1]),
        lambda c: _times_x(apply_T(c[0], c[1]), c[2]),
        _pairs_label,
    )
    check.identity(
        "T_i^-1 x_i = x_{i+1} T_i^-1 + (1 - t) x_i",
        by_i,
        lambda c: apply_T_inv(_times_x(c[0], c[1]), c[1]),
        lambda c: _times_x(apply_T_inv(c[0], c[1]), c[1] + 1) + _times_x(c[0], c[1]).scale(one_minus_t),
        _pairs_label,
    )
    check.identity(
        "T_i^-1 x_{i+1} = x_i T_i^-1 - (1 - t) x_i",
        by_i,
        lambda c: apply_T_inv(_times_x(c[0], c[1] + 1), c[1]),
        lambda c: _times_x(apply_T_inv(c[0], c[1]), c[1]) - _times_x(c[0], c[1]).scale(one_minus_t),
        _pairs_label,
    )
    check.identity(
        "omega x_i = x_{i-1} omega for i > 1",
        [(f, i) for f in lower for i in range(2, n + 1)],
        lambda c: apply_omega(_times_x(c[0], c[1]), 1),
        lambda c: _times_x(apply_omega(c[0], 1), c[1] - 1),
        _pairs_label,
    )
    check.identity(
        "omega x_1 = q x_N omega",
        lower,
        lambda f: apply_omega(_times_x(f, 1), 1),
        lambda f: _times_x(apply_omega(f, 1), n).scale(Q),
    )

    samples = _random_symmetric(rng, n, min(bounds.max_degree, 3), 3)

    def sym_cases(with_u: bool) -> list[tuple]:
        if with_u:
            return [(f, i, u) for f in samples for i in range(1, n) for u in SAMPLE_U]
        return [(f, i) for f in samples for i in range(1, n)]

    def t_minus_one(g: MPoly, i: int) -> MPoly:
        return apply_T(g, i) - g

    def one_minus_uy(g: MPoly, u: RatQT, i: int) -> MPoly:
        return g - apply_Y(g, i).scale(u)

    def sym_label(c) -> str:
        return f"f={c[0]}, i={c[1]}" + (f", u={c[2]}" if len(c) > 2 else "")

    check.vanishes(
        "(I) (T_i - 1)(x_i + x_{i+1}) f = 0",
        sym_cases(False),
        lambda c: t_minus_one(_times_x(c[0], c[1]) + _times_x(c[0], c[1] + 1), c[1]),
        sym_label,
    )
    check.vanishes(
        "(II) (T_i - 1) x_i x_{i+1} f = 0",
        sym_cases(False),
        lambda c: t_minus_one(_times_x(_times_x(c[0], c[1]), c[1] + 1), c[1]),
        sym_label,
    )
    check.vanishes(
        "(III) (T_i - 1)(1 - u t Y_i)(1 - u Y_{i+1}) f = 0",
        sym_cases(True),
        lambda c: t_minus_one(one_minus_uy(one_minus_uy(c[0], c[2], c[1] + 1), c[2] * T, c[1]), c[1]),
        sym_label,
    )
    check.vanishes(
        "(IV) (T_i - 1)[x_i (1 - u Y_i) + x_{i+1} (1 - u Y_{i+1})] f = 0",
        sym_cases(True),
        lambda c: t_minus_one(
            _times_x(one_minus_uy(c[0], c[2], c[1]), c[1]) + _times_x(one_minus_uy(c[0], c[2], c[1] + 1), c[1] + 1),
            c[1],
        ),
        sym_label,
    )
    check.vanishes(
        "(V) (T_i - 1)[(1 - u Y_i) + t^-1 (1 - u Y_{i+1})] f = 0",
        sym_cases(True),
        lambda c: t_minus_one(
            one_minus_uy(c[0], c[2], c[1]) + one_minus_uy(c[0], c[2], c[1] + 1).scale(T_INV),
            c[1],
        ),
        sym_label,
    )
    return check.results


def suite_restriction(bounds: SuiteBounds, logger: Optional[Logger] = None) -> list[IdentityResult]:
    """Y_{{1..N},u} restricted to symmetric polynomials is M_N(-u)."""
    n = bounds.nvars
    full = IndexSet.full(n)
    check = _Checker("restriction", logger)
    check.identity(
        "u-series of Y_{{1..N},u} = M_N(X) at X = -u on m_lam",
        _shapes(bounds.max_degree, n),
        lambda lam: apply_YJu_as_u_series(monomial_symmetric(lam, n), full),
        lambda lam: apply_macdonald_genfun(monomial_symmetric(lam, n)).substitute_sign(),
        lambda lam: f"m[{lam}]",
    )
    check.identity(
        "Y_{{1..N},u} = M_N(-u) at sample u",
        [(lam, u) for lam in _shapes(min(bounds.max_degree, 3), n) for u in SAMPLE_U],
        lambda c: apply_YJu(monomial_symmetric(c[0], n), full, c[1]),
        lambda c: apply_macdonald_genfun(monomial_symmetric(c[0], n)).evaluate(-c[1]),
        lambda c: f"m[{c[0]}], u={c[1]}",
    )
    return check.results


def suite_eigen(bounds: SuiteBounds, logger: Optional[Logger] = None) -> list[IdentityResult]:
    """Eigen-relation, commuting Macdonald operators and the defining conditions of J_lam."""
    n = bounds.nvars
    shapes = _shapes(bounds.max_degree, n)
    check = _Checker("eigen", logger)

    def eigen_rhs(lam: Partition) -> ParamPolyResult:
        J = macdonald_poly(lam, n)
        return ParamPolyResult(n, tuple(J.scale(a) for a in eigenvalue_a(lam, n)))

    check.identity(
        "M_N(X) J_lam = a_lam(X) J_lam",
        shapes,
        lambda lam: apply_macdonald_genfun(macdonald_poly(lam, n)),
        eigen_rhs,
        lambda lam: f"J[{lam}]",
    )
    check.identity(
        "M^r M^l = M^l M^r",
        [(lam, r, l) for lam in shapes for r, l in combinations(range(1, n + 1), 2)],
        lambda c: apply_macdonald_r(apply_macdonald_r(monomial_symmetric(c[0], n), c[2]), c[1]),
        lambda c: apply_macdonald_r(apply_macdonald_r(monomial_symmetric(c[0], n), c[1]), c[2]),
        lambda c: f"m[{c[0]}], r={c[1]}, l={c[2]}",
    )

    graded = _shapes(bounds.max_degree, bounds.max_degree, min_degree=1)
    check.holds(
        "triangularity in dominance",
        graded,
        lambda lam: all(dominance_leq(mu, lam) for mu in gram_schmidt_J(lam, lam.size).coeffs),
        lambda lam: f"J[{lam}]",
    )
    check.identity(
        "leading coefficient v_lam,lam = c_lam",
        graded,
        lambda lam: gram_schmidt_J(lam, lam.size).coefficient(lam),
        c_lambda,
        lambda lam: f"J[{lam}]",
    )
    check.vanishes(
        "orthogonality <J_lam, J_mu> = 0",
        [
            (lam, mu)
            for d in range(1, bounds.max_degree + 1)
            for lam, mu in combinations(list(partitions_of(d)), 2)
        ],
        lambda c: scalar_product_qt(gram_schmidt_J(c[0], c[0].size), gram_schmidt_J(c[1], c[1].size)),
        lambda c: f"lam={c[0]}, mu={c[1]}",
    )
    check.identity(
        "independent of the linear extension",
        graded,
        lambda lam: gram_schmidt_J(lam, lam.size, "reverse-lex"),
        lambda lam: gram_schmidt_J(lam, lam.size, "lex-conjugate"),
        lambda lam: f"J[{lam}]",
    )
    return check.results


def _creation_cases(bounds: SuiteBounds) -> list[tuple[Partition, int]]:
    """(lam, k) with l(lam) <= k <= N and |lam| + k <= max_degree."""
    n = bounds.nvars
    return [
        (lam, k)
        for k in range(1, n + 1)
        for lam in _shapes(bounds.max_degree - k, k)
    ]


def _macdonald_subset_sum_cleared(f: MPoly, k: int, m: int) -> MPoly:
    """
    V(x) * sum over |I| = k of x_I sum over I' in I^c, |I'| = m of
    A_{I u I'} M_{I u I'}(-t^(1-m)) f.
    """
    n = f.nvars
    ctx = HeckeContext(n)
    label = -RatQT.t_pow(1 - m)
    total = MPoly.zero(n)
    for I, _, extra in _subset_pairs(n, k, m):
        chosen = tuple(sorted(I + extra))
        restricted = apply_macdonald_genfun(f, variables=chosen).evaluate(label)
        total = total + _x_subset(n, I) * A_tilde(chosen, ctx).cleared() * restricted
    return total


def suite_creation(bounds: SuiteBounds, logger: Optional[Logger] = None) -> list[IdentityResult]:
    """Creation property, B1 = B2 on symmetric input and the vanishing identities."""
    n = bounds.nvars
    check = _Checker("creation", logger)
    cases = _creation_cases(bounds)

    def lam_k(c) -> str:
        return f"lam={c[0]}, k={c[1]}" + (f", {c[2].name}" if len(c) > 2 else "")

    check.identity(
        "B_k J_lam = J_{lam+(1^k)}",
        [(lam, k, v) for lam, k in cases for v in CreationVariant],
        lambda c: apply_B(macdonald_poly(c[0], n), c[1], c[2]),
        lambda c: macdonald_poly(c[0].add_column(c[1]), n),
        lam_k,
    )
    symmetric_inputs = [(lam, k) for k in range(1, n + 1) for lam in _shapes(bounds.max_degree - k, n)]
    check.identity(
        "B1 = B2 on m_lam",
        symmetric_inputs,
        lambda c: apply_B1(monomial_symmetric(c[0], n), c[1]),
        lambda c: apply_B2(monomial_symmetric(c[0], n), c[1]),
        lambda c: f"m[{c[0]}], k={c[1]}",
    )
    check.holds(
        "B_k preserves symmetry",
        [(lam, k, v) for lam, k in symmetric_inputs for v in CreationVariant],
        lambda c: is_symmetric(apply_B(monomial_symmetric(c[0], n), c[1], c[2])),
        lambda c: f"m[{c[0]}], k={c[1]}, {c[2].name}",
    )
    vanishing = [
        (mu, k)
        for k in range(1, n)
        for mu in _shapes(bounds.max_degree, n)
        if mu.part(k + 1) == 1
    ]
    full = IndexSet.full(n)
    check.vanishes(
        "Y_{{1..N}, t^(k+1-N) q^-1} J_mu = 0 when mu_{k+1} = 1",
        vanishing,
        lambda c: apply_YJu(macdonald_poly(c[0], n), full, RatQT.t_pow(c[1] + 1 - n) * Q_INV),
        lambda c: f"J[{c[0]}], k={c[1]}",
    )
    check.vanishes(
        "inner sums m > 0 of B2 annihilate J_lam",
        [(lam, k, m) for lam, k in cases for m in range(1, n - k + 1)],
        lambda c: b2_inner_sum(macdonald_poly(c[0], n), c[1], c[2]),
        lambda c: f"J[{c[0]}], k={c[1]}, m={c[2]}",
    )
    rng = random.Random(bounds.seed)
    samples = _random_symmetric(rng, n, min(bounds.max_degree, 2), 2)
    check.identity(
        "B2 inner sum m = Macdonald operators on I u I' at -t^(1-m)",
        [(f, k, m) for f in samples for k in range(1, n + 1) for m in range(n - k + 1)],
        lambda c: _vandermonde(n) * b2_inner_sum(c[0], c[1], c[2]),
        lambda c: _macdonald_subset_sum_cleared(c[0], c[1], c[2]),
        lambda c: f"f={c[0]}, k={c[1]}, m={c[2]}",
    )
    subset_cases = []
    for lam, k in cases:
        for I in combinations(range(1, n + 1), k):
            rest = [i for i in range(1, n + 1) if i not in I]
            for m in range(1, n - k + 1):
                for extra in combinations(rest, m):
                    subset_cases.append((lam, k, tuple(sorted(I + extra)), m))
    check.vanishes(
        "M_{I u I'}(-t^(1-m)) J_lam = 0 for l(lam) <= |I|, |I'| = m > 0",
        subset_cases,
        lambda c: apply_macdonald_genfun(macdonald_poly(c[0], n), variables=c[2]).evaluate(-RatQT.t_pow(1 - c[3])),
        lambda c: f"J[{c[0]}], variables={c[2]}, m={c[3]}",
    )
    return check.results


def suite_rodrigues(bounds: SuiteBounds, logger: Optional[Logger] = None) -> list[IdentityResult]:
    """Rodrigues formula against the Gram-Schmidt oracle, every variant."""
    n = bounds.nvars
    check = _Checker("rodrigues", logger)
    check.identity(
        "Rodrigues J_lam = oracle J_lam",
        [(lam, v) for lam in _shapes(bounds.max_degree, n) for v in CreationVariant],
        lambda c: rodrigues(c[0], n, c[1], logger),
        lambda c: macdonald_poly(c[0], n),
        lambda c: f"lam={c[0]}, {c[1].name}",
    )
    return check.results


def suite_pieri(bounds: SuiteBounds, logger: Optional[Logger] = None) -> list[IdentityResult]:
    """Pieri rule against polynomial multiplication, and its consequences for B1."""
    n = bounds.nvars
    wide = n + 1
    check = _Checker("pieri", logger)
    pairs = [(lam, k) for lam in _shapes(max(bounds.max_degree - 1, 0), n) for k in range(1, n + 1)]
    check.identity(
        f"e_k P_lam combinatorial = e_k P_lam by multiplication (N={wide})",
        pairs,
        lambda c: pieri_expand(c[0], c[1], wide).terms,
        lambda c: pieri_oracle(c[0], c[1], wide).terms,
        lambda c: f"lam={c[0]}, k={c[1]}",
    )
    short = [(lam, k) for lam, k in pairs if lam.length <= k]
    check.holds(
        "leading term lam+(1^k), every other mu has mu_{k+1} = 1",
        short,
        lambda c: leading_column_structure(pieri_expand(c[0], c[1])),
        lambda c: f"lam={c[0]}, k={c[1]}",
    )

    def chain_rhs(c) -> MPoly:
        lam, k = c
        factor = _c_ratio(lam, k) * pochhammer(Q_INV, T_INV, n - k)
        return macdonald_poly(lam.add_column(k), n, monic=True).scale(factor)

    full = IndexSet.full(n)
    check.identity(
        "Y_{{1..N}, t^(k+1-N) q^-1} e_k P_lam = prod(1 - t^(k+1-i) q^lam_i) (q^-1;t^-1)_{N-k} P_{lam+(1^k)}",
        _creation_cases(bounds),
        lambda c: apply_YJu(
            elementary(c[1], n) * macdonald_poly(c[0], n, monic=True),
            full,
            RatQT.t_pow(c[1] + 1 - n) * Q_INV,
        ),
        chain_rhs,
        lambda c: f"lam={c[0]}, k={c[1]}",
    )
    check.identity(
        "c_{lam+(1^k)} / c_lam = prod(1 - t^(k+1-i) q^lam_i)",
        [(lam, k) for k in range(1, n + 1) for lam in _shapes(bounds.max_degree, k)],
        lambda c: c_lambda(c[0].add_column(c[1])) / c_lambda(c[0]),
        lambda c: _c_ratio(c[0], c[1]),
        lambda c: f"lam={c[0]}, k={c[1]}",
    )
    return check.results


def _c_ratio(lam: Partition, k: int) -> RatQT:
    out = ONE
    for i in range(1, k + 1):
        out = out * (1 - RatQT.monomial(1, lam.part(i), k + 1 - i))
    return out


def _y_label_sum(f: MPoly, ell: int) -> MPoly:
    """Sum over m and I in {1..ell}, |I| = m, of q^-m (q^-1;t^-1)_{ell-m} t^-d(I) Y_{I,t^(1-m)} f."""
    block = tuple(range(1, ell + 1))
    total = MPoly.zero(f.nvars)
    for m in range(ell + 1):
        weight = RatQT.q_pow(-m) * pochhammer(Q_INV, T_INV, ell - m)
        for I in combinations(block, m):
            term = apply_YJu(f, I, RatQT.t_pow(1 - m))
            total = total + term.scale(weight * RatQT.t_pow(-d_statistic(I, block)))
    return total


def suite_subset_expansion(bounds: SuiteBounds, logger: Optional[Logger] = None) -> list[IdentityResult]:
    """Expansion of Y_{{1..l}, t^(1-l) q^-1} into the Y_{I, t^(1-|I|)}."""
    n = bounds.nvars
    monos = HeckeContext(n).monomials_up_to(min(bounds.max_degree, 3))
    check = _Checker("lemma9", logger)
    check.identity(
        "Y_{{1..l}, t^(1-l) q^-1} = sum q^-m (q^-1;t^-1)_{l-m} t^-d(I) Y_{I, t^(1-m)}",
        [(f, ell) for ell in range(1, min(n, 3) + 1) for f in monos],
        lambda c: apply_YJu(c[0], tuple(range(1, c[1] + 1)), RatQT.t_pow(1 - c[1]) * Q_INV),
        lambda c: _y_label_sum(c[0], c[1]),
        lambda c: f"f={c[0]}, l={c[1]}",
    )
    return check.results


def _vandermonde(n: int) -> MPoly:
    out = MPoly.constant(n, 1)
    for a, b in combinations(range(1, n + 1), 2):
        out = out * (MPoly.variable(n, a) - MPoly.variable(n, b))
    return out


def _x_subset(n: int, J: Sequence[int]) -> MPoly:
    return MPoly.monomial(tuple(1 if i in J else 0 for i in range(1, n + 1)))


def _subset_pairs(n: int, k: int, m: int):
    for J in combinations(range(1, n + 1), k):
        rest = tuple(i for i in range(1, n + 1) if i not in J)
        for extra in combinations(rest, m):
            yield J, rest, extra


def _a_tilde_sum_cleared(n: int, k: int, m: int) -> MPoly:
    """V(x) * sum over |J| = k of x_J sum over J' in J^c, |J'| = m of A_{J u J'}."""
    ctx = HeckeContext(n)
    total = MPoly.zero(n)
    for J, _, extra in _subset_pairs(n, k, m):
        total = total + _x_subset(n, J) * A_tilde(J + extra, ctx).cleared()
    return total


def _d_weight_sum(n: int, k: int, m: int) -> MPoly:
    total = MPoly.zero(n)
    for J, rest, extra in _subset_pairs(n, k, m):
        total = total + _x_subset(n, J).scale(RatQT.t_pow(-d_statistic(extra, rest)))
    return total


def suite_formulas(bounds: SuiteBounds, logger: Optional[Logger] = None) -> list[IdentityResult]:
    """Closed forms for the t-weighted subset sums behind the B2 to B3 reduction."""
    top = bounds.nvars + 1
    check = _Checker("formulas", logger)
    nk = [(n, k) for n in range(1, top + 1) for k in range(n + 1)]
    nkm = [(n, k, m) for n, k in nk for m in range(n - k + 1)]

    check.identity(
        "e_m(1, t^-1, ..., t^(1-N)) = t^(m(m-1)/2) t^(-m(N-1)) [N m]_t",
        nk,
        lambda c: elementary_symmetric([RatQT.t_pow(-j) for j in range(c[0])], c[1]),
        lambda c: RatQT.t_pow(c[1] * (c[1] - 1) // 2 - c[1] * (c[0] - 1)) * qbinom(c[0], c[1], T),
        lambda c: f"N={c[0]}, m={c[1]}",
    )
    check.holds(
        "[n k]_t is a polynomial symmetric in k <-> n-k",
        [(n, k) for n in range(7) for k in range(n + 1)],
        lambda c: qbinom(c[0], c[1], T).is_integral() and qbinom(c[0], c[1], T) == qbinom(c[0], c[0] - c[1], T),
        lambda c: f"n={c[0]}, k={c[1]}",
    )

    def d_sum(c) -> RatQT:
        n, k, m = c
        J = tuple(range(1, k + 1))
        rest = tuple(range(k + 1, n + 1))
        total = ZERO
        for extra in combinations(rest, m):
            total = total + RatQT.t_pow(-d_statistic(extra, rest))
        return total

    check.identity(
        "sum over J' of t^-d(J', J^c) = t^(m(m-1)/2) e_m(1, ..., t^(1-(N-k)))",
        nkm,
        d_sum,
        lambda c: RatQT.t_pow(c[2] * (c[2] - 1) // 2)
        * elementary_symmetric([RatQT.t_pow(-j) for j in range(c[0] - c[1])], c[2]),
        lambda c: f"N={c[0]}, k={c[1]}, m={c[2]}",
    )
    small = [c for c in nkm if c[0] <= min(top, 4)]
    check.identity(
        "sum x_J sum A_{J u J'} = t^(-m(N-k-m)) [N-k m]_t e_k (denominators cleared)",
        small,
        lambda c: _a_tilde_sum_cleared(*c),
        lambda c: (elementary(c[1], c[0]) * _vandermonde(c[0])).scale(
            RatQT.t_pow(-c[2] * (c[0] - c[1] - c[2])) * qbinom(c[0] - c[1], c[2], T)
        ),
        lambda c: f"N={c[0]}, k={c[1]}, m={c[2]}",
    )
    check.identity(
        "sum x_J sum t^-d(J', J^c) = sum x_J sum A_{J u J'} (denominators cleared)",
        small,
        lambda c: _d_weight_sum(*c) * _vandermonde(c[0]),
        lambda c: _a_tilde_sum_cleared(*c),
        lambda c: f"N={c[0]}, k={c[1]}, m={c[2]}",
    )
    return check.results


def suite_kostka(bounds: SuiteBounds, logger: Optional[Logger] = None) -> list[IdentityResult]:
    """Integrality and known values of the (q,t)-Kostka matrices."""
    check = _Checker("kostka", logger)
    degrees = list(range(bounds.max_degree + 1))
    matrices = {}

    def matrix(n: int):
        if n not in matrices:
            matrices[n] = kostka_matrix(n, logger=logger)
            if logger:
                bad = matrices[n].non_positive()
                if bad:
                    logger.info("kostka", f"n={n}: {len(bad)} entries with a negative coefficient")
        return matrices[n]

    check.holds(
        "K_lam,mu(q,t) in Z[q,t]",
        degrees,
        lambda n: matrix(n).is_integral(),
        lambda n: f"n={n}, entries {[f'{l}/{m}' for l, m in matrix(n).non_integral()]}",
    )
    if bounds.max_degree >= 2:
        check.identity(
            "n = 2 matrix is [[1, q], [t, 1]]",
            [2],
            lambda n: matrix(n).rows(),
            lambda n: [[ONE, Q], [T, ONE]],
            lambda n: f"rows={[[str(v) for v in row] for row in matrix(n).rows()]}",
        )

    def identity_matrix(n: int) -> list[list[int]]:
        size = len(matrix(n).partitions)
        return [[1 if i == j else 0 for j in range(size)] for i in range(size)]

    check.identity(
        "K(0, 0) is the identity",
        [n for n in degrees if n <= 4],
        lambda n: matrix(n).specialize(0, 0),
        identity_matrix,
        lambda n: f"n={n}",
    )
    return check.results


SUITES: dict[str, Callable[[SuiteBounds, Optional[Logger]], list[IdentityResult]]] = {
    "hecke": suite_hecke,
    "dunkl": suite_dunkl,
    "restriction": suite_restriction,
    "eigen": suite_eigen,
    "creation": suite_creation,
    "rodrigues": suite_rodrigues,
    "pieri": suite_pieri,
    "lemma9": suite_subset_expansion,
    "formulas": suite_formulas,
    "kostka": suite_kostka,
}


def run_suite(name: str, bounds: SuiteBounds, logger: Optional[Logger] = None) -> SuiteReport:
    """
    Run one named suite.

    Raises:
        ValueError: If the suite is unknown or the bounds are invalid
    """
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}")
    if bounds.nvars < 1:
        raise ValueError(f"nvars must be at least 1, got {bounds.nvars}")
    if bounds.max_degree < 0:
        raise ValueError(f"max_degree must be non-negative, got {bounds.max_degree}")
    if logger:
        logger.info("verify", f"running suite {name} (nvars={bounds.nvars}, max_degree={bounds.max_degree})")
    report = SuiteReport(name, bounds, SUITES[name](bounds, logger))
    if logger:
        logger.info("verify", f"suite {name}: {'PASS' if report.passed else 'FAIL'}")
    return report
