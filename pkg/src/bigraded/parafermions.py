"""Parafermion-style generators inside the odd-orthogonal family.

For the algebra on 2n+1 rows with parameter q, the 2n generators

    f_j^- = sqrt2 (e_{j,2n+1} - e_{2n+1,n+j})
    f_j^+ = sqrt2 (e_{2n+1,j} - e_{n+j,2n+1})      (1-based indices)

carry degree (0,1) for j <= q and (1,0) for j > q.  Same-sort triples
obey the trilinear commutation relation

    [[f_j^xi, f_k^eta], f_l^eps]
        = 1/2 (eps-eta)^2 d_kl f_j^xi - 1/2 (eps-xi)^2 d_jl f_k^eta

while mixed-sort triples obey its anticommutator twin

    {{f_j^xi, f_k^eta}, f_l^eps}
        = 1/2 (eps-eta)^2 d_kl f_j^xi + 1/2 (eps-xi)^2 d_jl f_k^eta.

Both use ordinary (ungraded) commutators/anticommutators of the matrix
product; the graded bracket reproduces them degreewise.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product

from .axioms import CheckReport
from .exactnum import ExactMatrix, Scalar, SQRT2, span_dim
from .families import AlgebraFamily, FamilyKind, build_basis, is_member
from .grading import D00, D01, D10, D11, Degree, GradedMatrix, GradingSignature

__all__ = [
    "ParafermionSystem",
    "build_system",
    "check_pf",
    "check_pfrel",
    "identify_subspaces",
]


@dataclass(frozen=True)
class ParafermionSystem:
    """The 2n generators, keyed by (j, sign) with 1-based j."""

    n: int
    q: int
    signature: GradingSignature
    family: AlgebraFamily
    generators: dict[tuple[int, int], GradedMatrix]

    def generator(self, j: int, sign: int) -> GradedMatrix:
        return self.generators[(j, sign)]

    def sort_of(self, j: int) -> Degree:
        return D01 if j <= self.q else D10


def build_system(n: int, q: int) -> ParafermionSystem:
    """Construct the generators inside the odd-orthogonal algebra with
    block parameter p = q, and validate each against the defining
    condition."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 <= q <= n:
        raise ValueError("q must lie in 0..n")
    family = AlgebraFamily.so_odd(n, q)
    from .families import family_signature

    sig = family_signature(family)
    size = 2 * n + 1
    gens: dict[tuple[int, int], GradedMatrix] = {}
    for j in range(1, n + 1):
        deg = D01 if j <= q else D10
        minus = GradedMatrix.from_entries(
            sig,
            {(j - 1, 2 * n): SQRT2, (2 * n, n + j - 1): -SQRT2},
            degree=deg,
        )
        plus = GradedMatrix.from_entries(
            sig,
            {(2 * n, j - 1): SQRT2, (n + j - 1, 2 * n): -SQRT2},
            degree=deg,
        )
        for sign, g in ((-1, minus), (1, plus)):
            verdict = is_member(family, g)
            if not verdict:
                raise ValueError(
                    f"generator ({j},{sign:+d}) violates the defining condition: "
                    f"{verdict.reason}"
                )
            gens[(j, sign)] = g
    return ParafermionSystem(n, q, sig, family, gens)


def _comm(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a @ b - b @ a


def _acomm(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a @ b + b @ a


def _half_sq(a: int, b: int) -> Scalar:
    return Scalar((a - b) ** 2) / 2


def check_pf(system: ParafermionSystem) -> CheckReport:
    """Verify the trilinear commutation relation over every same-sort
    triple (j,xi),(k,eta),(l,eps)."""
    start = time.perf_counter()
    n, q = system.n, system.q
    sorts = {D01: [j for j in range(1, n + 1) if j <= q],
             D10: [j for j in range(1, n + 1) if j > q]}
    failures: list[dict] = []
    cases = 0
    for indices in sorts.values():
        for j, k, l in product(indices, repeat=3):
            for xi, eta, eps in product((-1, 1), repeat=3):
                cases += 1
                if failures:
                    continue
                fj = system.generator(j, xi)
                fk = system.generator(k, eta)
                fl = system.generator(l, eps)
                lhs = _comm(_comm(fj.entries, fk.entries), fl.entries)
                rhs = ExactMatrix.zeros(2 * n + 1, 2 * n + 1)
                if k == l:
                    rhs = rhs + fj.entries.scaled(_half_sq(eps, eta))
                if j == l:
                    rhs = rhs - fk.entries.scaled(_half_sq(eps, xi))
                resid = (lhs - rhs).first_nonzero()
                if resid is not None:
                    r, c, v = resid
                    failures.append(
                        {
                            "relation": "pf",
                            "triple": [[j, xi], [k, eta], [l, eps]],
                            "position": [r, c],
                            "got": v.to_json(),
                            "inputs": [fj.to_json(), fk.to_json(), fl.to_json()],
                        }
                    )
    return CheckReport(
        check="pf",
        family=system.family.descriptor(),
        rule=None,
        cases=cases,
        failures=failures,
        elapsed=time.perf_counter() - start,
    )


def check_pfrel(system: ParafermionSystem) -> CheckReport:
    """Verify the anticommutator relation over every mixed-sort triple:
    (j,xi) and (k,eta) of opposite sorts, l running over the sort of j.

    Requires generators of both sorts (q >= 1 and n-q >= 1)."""
    if system.q < 1 or system.n - system.q < 1:
        raise ValueError("mixed-sort relation needs generators of both sorts")
    start = time.perf_counter()
    n, q = system.n, system.q
    sort_one = [j for j in range(1, n + 1) if j <= q]
    sort_two = [j for j in range(1, n + 1) if j > q]
    failures: list[dict] = []
    cases = 0
    for js, ks in ((sort_one, sort_two), (sort_two, sort_one)):
        for j, k in product(js, ks):
            for l in js + ks:
                for xi, eta, eps in product((-1, 1), repeat=3):
                    cases += 1
                    if failures:
                        continue
                    fj = system.generator(j, xi)
                    fk = system.generator(k, eta)
                    fl = system.generator(l, eps)
                    lhs = _acomm(_acomm(fj.entries, fk.entries), fl.entries)
                    rhs = ExactMatrix.zeros(2 * n + 1, 2 * n + 1)
                    if k == l:
                        rhs = rhs + fj.entries.scaled(_half_sq(eps, eta))
                    if j == l:
                        rhs = rhs + fk.entries.scaled(_half_sq(eps, xi))
                    resid = (lhs - rhs).first_nonzero()
                    if resid is not None:
                        r, c, v = resid
                        failures.append(
                            {
                                "relation": "pfrel",
                                "triple": [[j, xi], [k, eta], [l, eps]],
                                "position": [r, c],
                                "got": v.to_json(),
                                "inputs": [
                                    fj.to_json(),
                                    fk.to_json(),
                                    fl.to_json(),
                                ],
                            }
                        )
    return CheckReport(
        check="pfrel",
        family=system.family.descriptor(),
        rule=None,
        cases=cases,
        failures=failures,
        elapsed=time.perf_counter() - start,
    )


def identify_subspaces(system: ParafermionSystem) -> dict:
    """Span accounting: the generators of each sort against the odd
    parts, same-sort commutators against the (0,0) part and cross-sort
    anticommutators against the (1,1) part of the ambient algebra."""
    n, q = system.n, system.q
    basis = build_basis(system.family)
    profile = basis.profile()
    sort_one = [system.generator(j, s) for j in range(1, q + 1) for s in (-1, 1)]
    sort_two = [system.generator(j, s) for j in range(q + 1, n + 1) for s in (-1, 1)]
    same_comm = [
        _comm(a.entries, b.entries)
        for part in (sort_one, sort_two)
        for a in part
        for b in part
    ]
    cross_acomm = [
        _acomm(a.entries, b.entries) for a in sort_one for b in sort_two
    ]
    spans = {
        "d01": span_dim([g.entries for g in sort_one]),
        "d10": span_dim([g.entries for g in sort_two]),
        "d00": span_dim(same_comm),
        "d11": span_dim(cross_acomm),
    }
    expected = {
        "d01": profile.d01,
        "d10": profile.d10,
        "d00": profile.d00,
        "d11": profile.d11,
    }
    return {
        "n": n,
        "q": q,
        "spans": spans,
        "profile": expected,
        "full": spans == expected,
    }
