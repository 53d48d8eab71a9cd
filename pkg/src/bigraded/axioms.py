"""Mechanical verification of the graded algebra structure.

Checks run over explicit bases: grading closure, graded antisymmetry and
the graded Jacobi identity over all pairs/triples, closure of each
family's defining condition under the bracket, structure constants,
generation of the even part by the odd parts, the diagonal subalgebra,
and stability under relabelings of the nonzero degrees.

Scans run on an integer fast path when the basis entries scale to
integers that provably cannot overflow the kernel arithmetic (always the
case for the bases built here), and on the exact Scalar path otherwise
or on request.  Both paths are exact; on any failure the reported
witness is recomputed with exact arithmetic and serializes the full
inputs, so every counterexample is replayable.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import kernels
from .exactnum import ExactMatrix, ONE, Scalar, ZERO, nullspace, span_dim
from .families import (
    AlgebraFamily,
    FamilyKind,
    GradedBasis,
    build_basis,
    defining_form,
    family_signature,
    is_member,
)
from .grading import (
    D00,
    D01,
    D10,
    D11,
    DEGREES,
    Degree,
    GradedMatrix,
    GradingSignature,
    SignRule,
    degree_permutations,
    permute_grading,
)

__all__ = [
    "CheckReport",
    "StructureConstants",
    "SpanEscapeError",
    "AXIOM_NAMES",
    "check_axioms",
    "check_family_closure",
    "check_four_identities",
    "check_identities_sample",
    "check_generation",
    "cartan_diagonal",
    "check_permutation_stability",
    "structure_constants",
]

AXIOM_NAMES = ("closure", "symmetry", "jacobi")

# Above this basis size the Jacobi scan samples triples instead of
# enumerating all of them.
EXHAUSTIVE_LIMIT = 40
SAMPLE_SIZE = 100_000
SAMPLE_SEED = 0xB16D


@dataclass
class CheckReport:
    """Outcome of one check.  ``cases`` counts the cases the scan covers;
    on failure the first counterexample (per axiom) is recorded with its
    full inputs.  ``info`` holds extra measurements and is not part of
    the serialized report."""

    check: str
    family: dict
    rule: str | None
    cases: int
    failures: list[dict]
    elapsed: float = 0.0
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "family": self.family,
            "rule": self.rule,
            "cases": self.cases,
            "failures": self.failures,
            "pass": self.passed,
        }


def _integer_stack(elements) -> tuple[np.ndarray, np.ndarray, int] | None:
    """Scale each element to integer entries (sound for the multilinear
    scans) and stack the components.  Returns None when entries cannot be
    represented or their magnitudes could overflow the scans."""
    m = len(elements)
    n = elements[0].n
    R = np.zeros((m, n, n), dtype=np.int64)
    S = np.zeros((m, n, n), dtype=np.int64)
    maxabs = 1
    for idx, el in enumerate(elements):
        dens = [1]
        for row in el.entries.data:
            for v in row:
                dens.append(v.r.denominator)
                dens.append(v.s.denominator)
        scale = math.lcm(*dens)
        for j, row in enumerate(el.entries.data):
            for k, v in enumerate(row):
                rv = v.r * scale
                sv = v.s * scale
                rv, sv = int(rv), int(sv)
                maxabs = max(maxabs, abs(rv), abs(sv))
                if not (-(2 ** 62) < rv < 2 ** 62 and -(2 ** 62) < sv < 2 ** 62):
                    return None
                R[idx, j, k] = rv
                S[idx, j, k] = sv
    # loose bound on any intermediate of the depth-3 scans
    if 108 * n * n * maxabs ** 3 >= 2 ** 62:
        return None
    return R, S, maxabs


def _sign_table(rule: SignRule) -> np.ndarray:
    return np.array(
        [[rule.sign(a, b) for b in DEGREES] for a in DEGREES], dtype=np.int64
    )


def _degree_codes(elements) -> np.ndarray:
    return np.array([el.degree.code for el in elements], dtype=np.int64)


def _entry_degree_codes(sig: GradingSignature) -> np.ndarray:
    n = len(sig)
    codes = np.array([d.code for d in sig], dtype=np.int64)
    return codes[:, None] ^ codes[None, :]


def _transpose_sign_array(sig: GradingSignature) -> np.ndarray:
    return np.array(sig.transpose_signs(), dtype=np.int64)


def _sample_triples(m: int, count: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    t = rng.integers(0, m, size=(count, 3), dtype=np.int64)
    order = np.lexsort((t[:, 2], t[:, 1], t[:, 0]))
    return t[order]


def _jacobi_triples(m: int, sample_limit: int) -> np.ndarray | None:
    if m <= sample_limit:
        return None
    return _sample_triples(m, SAMPLE_SIZE, SAMPLE_SEED)


def _can_use_kernel(elements) -> bool:
    return all(el.degree is not None for el in elements)


# ---------------------------------------------------------------------------
# witnesses (always recomputed with exact arithmetic)


def _closure_witness(basis: GradedBasis, rule: SignRule, i: int, j: int) -> dict:
    x, y = basis.elements[i], basis.elements[j]
    br = x.bracket(y, rule)
    target = x.degree + y.degree
    sig = basis.signature
    for r, row in enumerate(br.entries.data):
        for c, v in enumerate(row):
            if v and sig.entry_degree(r, c) != target:
                return {
                    "axiom": "closure",
                    "i": i,
                    "j": j,
                    "position": [r, c],
                    "expected_degree": target.to_json(),
                    "entry_degree": sig.entry_degree(r, c).to_json(),
                    "got": v.to_json(),
                    "inputs": [x.to_json(), y.to_json()],
                }
    raise AssertionError("closure witness did not reproduce")


def _symmetry_witness(basis: GradedBasis, rule: SignRule, i: int, j: int) -> dict:
    x, y = basis.elements[i], basis.elements[j]
    z = x.bracket(y, rule)
    back = y.bracket(x, rule)
    sgn = rule.sign(x.degree, y.degree)
    resid = z + back.scaled(sgn)
    bad = resid.entries.first_nonzero()
    if bad is None:
        raise AssertionError("antisymmetry witness did not reproduce")
    r, c, v = bad
    return {
        "axiom": "symmetry",
        "i": i,
        "j": j,
        "position": [r, c],
        "expected": Scalar(0).to_json(),
        "got": v.to_json(),
        "inputs": [x.to_json(), y.to_json()],
    }


def _jacobi_residual(x, y, z, rule):
    lhs = x.bracket(y.bracket(z, rule), rule)
    t1 = x.bracket(y, rule).bracket(z, rule)
    t2 = y.bracket(x.bracket(z, rule), rule).scaled(rule.sign(x.degree, y.degree))
    return lhs - t1 - t2


def _jacobi_witness(basis: GradedBasis, rule: SignRule, i: int, j: int, k: int) -> dict:
    x, y, z = basis.elements[i], basis.elements[j], basis.elements[k]
    resid = _jacobi_residual(x, y, z, rule)
    bad = resid.entries.first_nonzero()
    if bad is None:
        raise AssertionError("jacobi witness did not reproduce")
    r, c, v = bad
    return {
        "axiom": "jacobi",
        "i": i,
        "j": j,
        "k": k,
        "position": [r, c],
        "expected": Scalar(0).to_json(),
        "got": v.to_json(),
        "inputs": [x.to_json(), y.to_json(), z.to_json()],
    }


# ---------------------------------------------------------------------------
# the axiom scan


def check_axioms(
    basis: GradedBasis,
    rule: SignRule = SignRule.GLA,
    which: tuple[str, ...] = AXIOM_NAMES,
    backend: str = "auto",
    sample_limit: int = EXHAUSTIVE_LIMIT,
) -> CheckReport:
    """Scan grading closure and graded antisymmetry over all ordered
    pairs and the graded Jacobi identity over all triples (sampled with a
    fixed seed above ``sample_limit`` elements).

    backend: "auto" uses the integer kernels when possible, "fast"
    requires them, "exact" forces the Scalar path.
    """
    for name in which:
        if name not in AXIOM_NAMES:
            raise ValueError(f"unknown axiom {name!r}")
    start = time.perf_counter()
    elements = basis.elements
    m = len(elements)
    failures: list[dict] = []
    cases = 0
    check_name = "axioms" if set(which) == set(AXIOM_NAMES) else "+".join(which)
    if m:
        ints = None
        if backend in ("auto", "fast") and _can_use_kernel(elements):
            ints = _integer_stack(elements)
        if backend == "fast" and ints is None:
            raise ValueError("basis cannot run on the integer fast path")
        if ints is not None:
            cases = _kernel_axioms(basis, rule, which, ints, sample_limit, failures)
        else:
            cases = _exact_axioms(basis, rule, which, sample_limit, failures)
    report = CheckReport(
        check=check_name,
        family=basis.family.descriptor(),
        rule=rule.value,
        cases=cases,
        failures=failures,
        elapsed=time.perf_counter() - start,
        info={"backend": "exact" if (not m or ints is None) else kernels.active_backend()},
    )
    return report


def _kernel_axioms(basis, rule, which, ints, sample_limit, failures) -> int:
    backend = kernels.get()
    R, S, _ = ints
    deg = _degree_codes(basis.elements)
    entdeg = _entry_degree_codes(basis.signature)
    signtab = _sign_table(rule)
    do_c = "closure" in which
    do_s = "symmetry" in which
    cases = 0
    if do_c or do_s:
        res = backend.pair_scan(R, S, deg, entdeg, signtab, do_c, do_s)
        cases += res[0] * (int(do_c) + int(do_s))
        if res[1] >= 0:
            failures.append(_closure_witness(basis, rule, res[1], res[2]))
        if res[5] >= 0:
            failures.append(_symmetry_witness(basis, rule, res[5], res[6]))
    if "jacobi" in which:
        triples = _jacobi_triples(len(basis.elements), sample_limit)
        res = backend.jacobi_scan(R, S, deg, signtab, triples)
        cases += res[0]
        if res[1] >= 0:
            failures.append(_jacobi_witness(basis, rule, res[1], res[2], res[3]))
    return cases


def _exact_axioms(basis, rule, which, sample_limit, failures) -> int:
    elements = basis.elements
    sig = basis.signature
    m = len(elements)
    cases = 0
    if "closure" in which:
        cases += m * m
        done = False
        for i, x in enumerate(elements):
            if done:
                break
            for j, y in enumerate(elements):
                br = x.bracket(y, rule)
                target = x.degree + y.degree
                bad = next(
                    (
                        (r, c)
                        for r, row in enumerate(br.entries.data)
                        for c, v in enumerate(row)
                        if v and sig.entry_degree(r, c) != target
                    ),
                    None,
                )
                if bad is not None:
                    failures.append(_closure_witness(basis, rule, i, j))
                    done = True
                    break
    if "symmetry" in which:
        cases += m * m
        done = False
        for i, x in enumerate(elements):
            if done:
                break
            for j, y in enumerate(elements):
                sgn = rule.sign(x.degree, y.degree)
                resid = x.bracket(y, rule) + y.bracket(x, rule).scaled(sgn)
                if not resid.is_zero():
                    failures.append(_symmetry_witness(basis, rule, i, j))
                    done = True
                    break
    if "jacobi" in which:
        triples = _jacobi_triples(m, sample_limit)
        if triples is None:
            cases += m ** 3
            iterator = product(range(m), repeat=3)
        else:
            cases += len(triples)
            iterator = (tuple(int(v) for v in row) for row in triples)
        for (i, j, k) in iterator:
            resid = _jacobi_residual(
                elements[i], elements[j], elements[k], rule
            )
            if not resid.is_zero():
                failures.append(_jacobi_witness(basis, rule, i, j, k))
                break
    return cases


# ---------------------------------------------------------------------------
# family closure under the bracket


def check_family_closure(
    basis: GradedBasis, rule: SignRule = SignRule.GLA, backend: str = "auto"
) -> CheckReport:
    """Bracket every pair of basis elements and test the result against
    the family's defining condition."""
    start = time.perf_counter()
    f = basis.family
    elements = basis.elements
    m = len(elements)
    failures: list[dict] = []
    cases = m * m
    ints = None
    if m and backend in ("auto", "fast") and _can_use_kernel(elements):
        ints = _integer_stack(elements)
    if backend == "fast" and ints is None:
        raise ValueError("basis cannot run on the integer fast path")
    if m == 0:
        pass
    elif ints is not None and f.kind is not FamilyKind.GL:
        R, S, _ = ints
        deg = _degree_codes(elements)
        signtab = _sign_table(rule)
        backend_mod = kernels.get()
        if f.kind is FamilyKind.SL:
            res = backend_mod.trace_scan(R, S, deg, signtab)
            if res[1] >= 0:
                failures.append(_membership_witness(basis, rule, res[1], res[2]))
        else:
            n = len(basis.signature)
            if f.kind is FamilyKind.SO_GRADED:
                formR = np.eye(n, dtype=np.int64)
            else:
                formR = np.zeros((n, n), dtype=np.int64)
                form = defining_form(f).matrix
                for (a, b), v in _nonzero_items(form.entries):
                    formR[a, b] = int(v.r)
            tsign = _transpose_sign_array(basis.signature)
            res = backend_mod.form_scan(R, S, deg, signtab, formR, tsign)
            if res[1] >= 0:
                failures.append(_membership_witness(basis, rule, res[1], res[2]))
    else:
        done = False
        for i, x in enumerate(elements):
            if done:
                break
            for j, y in enumerate(elements):
                if not is_member(f, x.bracket(y, rule)):
                    failures.append(_membership_witness(basis, rule, i, j))
                    done = True
                    break
    return CheckReport(
        check="family-closure",
        family=f.descriptor(),
        rule=rule.value,
        cases=cases,
        failures=failures,
        elapsed=time.perf_counter() - start,
    )


def _nonzero_items(mat: ExactMatrix):
    for a, row in enumerate(mat.data):
        for b, v in enumerate(row):
            if v:
                yield (a, b), v


def _membership_witness(basis, rule, i, j) -> dict:
    x, y = basis.elements[i], basis.elements[j]
    br = x.bracket(y, rule)
    verdict = is_member(basis.family, br)
    if verdict.ok:
        raise AssertionError("membership witness did not reproduce")
    return {
        "axiom": "family-closure",
        "i": i,
        "j": j,
        "reason": verdict.reason,
        "position": list(verdict.position) if verdict.position else None,
        "inputs": [x.to_json(), y.to_json()],
        "bracket": br.to_json(),
    }


# ---------------------------------------------------------------------------
# the four mixed bracket identities


def _comm(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a @ b - b @ a


def _acomm(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a @ b + b @ a


_IDENTITIES = (
    ("I1", "[x,[y,z]] + [y,[z,x]] + [z,[x,y]]"),
    ("I2", "[x,{y,z}] + [y,{z,x}] + [z,{x,y}]"),
    ("I3", "[x,{y,z}] + {y,[z,x]} - {z,[x,y]}"),
    ("I4", "[x,[y,z]] + {y,{z,x}} - {z,{x,y}}"),
)


def check_four_identities(
    x: GradedMatrix, y: GradedMatrix, z: GradedMatrix
) -> CheckReport:
    """The four commutator/anticommutator identities that hold in any
    associative algebra:

        I1: [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0
        I2: [x,{y,z}] + [y,{z,x}] + [z,{x,y}] = 0
        I3: [x,{y,z}] + {y,[z,x]} - {z,[x,y]} = 0
        I4: [x,[y,z]] + {y,{z,x}} - {z,{x,y}} = 0

    Inputs may live over different signatures; only shapes must agree.
    """
    start = time.perf_counter()
    a, b, c = x.entries, y.entries, z.entries
    residuals = {
        "I1": _comm(a, _comm(b, c)) + _comm(b, _comm(c, a)) + _comm(c, _comm(a, b)),
        "I2": _comm(a, _acomm(b, c)) + _comm(b, _acomm(c, a)) + _comm(c, _acomm(a, b)),
        "I3": _comm(a, _acomm(b, c)) + _acomm(b, _comm(c, a)) - _acomm(c, _comm(a, b)),
        "I4": _comm(a, _comm(b, c)) + _acomm(b, _acomm(c, a)) - _acomm(c, _acomm(a, b)),
    }
    failures = []
    for label, formula in _IDENTITIES:
        bad = residuals[label].first_nonzero()
        if bad is not None:
            r, cc, v = bad
            failures.append(
                {
                    "identity": label,
                    "formula": formula,
                    "position": [r, cc],
                    "got": v.to_json(),
                    "inputs": [x.to_json(), y.to_json(), z.to_json()],
                }
            )
    return CheckReport(
        check="identities",
        family={"kind": "adhoc", "size": x.n},
        rule=None,
        cases=4,
        failures=failures,
        elapsed=time.perf_counter() - start,
    )


def check_identities_sample(
    basis: GradedBasis, limit: int = 512, seed: int = SAMPLE_SEED
) -> CheckReport:
    """Run the four mixed identities over basis triples: all of them when
    there are at most ``limit``, otherwise a fixed-seed sample."""
    start = time.perf_counter()
    m = len(basis.elements)
    if m ** 3 <= limit:
        triples = list(product(range(m), repeat=3))
    else:
        triples = [tuple(int(v) for v in row) for row in _sample_triples(m, limit, seed)]
    failures: list[dict] = []
    cases = 0
    for (i, j, k) in triples:
        sub = check_four_identities(
            basis.elements[i], basis.elements[j], basis.elements[k]
        )
        cases += sub.cases
        if sub.failures and not failures:
            failures.extend({"triple": [i, j, k], **f} for f in sub.failures)
    return CheckReport(
        check="identities",
        family=basis.family.descriptor(),
        rule=None,
        cases=cases,
        failures=failures,
        elapsed=time.perf_counter() - start,
    )


# ---------------------------------------------------------------------------
# structure constants


class SpanEscapeError(RuntimeError):
    """A bracket left the span of the basis."""


class _SpanSolver:
    """Solves S c = v for many v against a fixed independent column
    family S, by precomputing the row reduction of [S | I]."""

    def __init__(self, elements):
        m = len(elements)
        n2 = elements[0].n ** 2 if m else 0
        self.m = m
        self.n2 = n2
        rows = []
        for r in range(n2):
            row = [el.entries.flatten()[r] for el in elements]
            row.extend(ONE if r == t else ZERO for t in range(n2))
            rows.append(row)
        from .exactnum import rref

        reduced, pivots = rref(ExactMatrix(rows, cols=m + n2))
        if list(pivots[:m]) != list(range(m)):
            raise ValueError("basis columns are not independent")
        # column-sparse view of the elimination operator E (E S = [I; 0])
        self.cols: list[list[tuple[int, Scalar]]] = []
        for c in range(n2):
            col = []
            for r in range(n2):
                v = reduced[r, m + c]
                if v:
                    col.append((r, v))
            self.cols.append(col)

    def solve(self, mat: ExactMatrix) -> list[Scalar] | None:
        acc: dict[int, Scalar] = {}
        flat_index = 0
        for row in mat.data:
            for v in row:
                if v:
                    for r, e in self.cols[flat_index]:
                        acc[r] = acc.get(r, ZERO) + v * e
                flat_index += 1
        for r, v in acc.items():
            if r >= self.m and v:
                return None
        return [acc.get(t, ZERO) for t in range(self.m)]


@dataclass
class StructureConstants:
    """Coefficients c[i][j][k] with bracket(X_i, X_j) = sum_k c X_k."""

    basis_size: int
    entries: dict[tuple[int, int, int], Scalar]

    def coefficient(self, i: int, j: int, k: int) -> Scalar:
        return self.entries.get((i, j, k), ZERO)

    def to_json(self) -> dict:
        return {
            "basis_size": self.basis_size,
            "entries": [
                [i, j, k, v.to_json()]
                for (i, j, k), v in sorted(self.entries.items())
            ],
        }


def structure_constants(
    basis: GradedBasis, rule: SignRule = SignRule.GLA
) -> StructureConstants:
    """Expand every pairwise bracket exactly in the given basis."""
    elements = basis.elements
    solver = _SpanSolver(elements)
    entries: dict[tuple[int, int, int], Scalar] = {}
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            coords = solver.solve(x.bracket(y, rule).entries)
            if coords is None:
                raise SpanEscapeError(
                    f"bracket of elements {i} and {j} leaves the basis span"
                )
            for k, v in enumerate(coords):
                if v:
                    entries[(i, j, k)] = v
    return StructureConstants(len(elements), entries)


# ---------------------------------------------------------------------------
# generation of the even parts from the odd parts


def check_generation(basis: GradedBasis, rule: SignRule = SignRule.GLA) -> CheckReport:
    """Span checks: brackets within each odd part must span the (0,0)
    part, and brackets across the odd parts must span the (1,1) part.
    Degenerate parameters where the spans fall short are reported with
    the measured span dimensions."""
    start = time.perf_counter()
    by_degree = {d: [el for el in basis.elements if el.degree == d] for d in DEGREES}
    g01, g10 = by_degree[D01], by_degree[D10]
    even = [
        x.bracket(y, rule).entries
        for part in (g10, g01)
        for x in part
        for y in part
    ]
    cross = [x.bracket(y, rule).entries for x in g10 for y in g01]
    span00 = span_dim(even)
    span11 = span_dim(cross)
    want00 = len(by_degree[D00])
    want11 = len(by_degree[D11])
    failures = []
    if span00 != want00:
        failures.append(
            {"part": "d00", "expected": want00, "spanned": span00}
        )
    if span11 != want11:
        failures.append(
            {"part": "d11", "expected": want11, "spanned": span11}
        )
    return CheckReport(
        check="generation",
        family=basis.family.descriptor(),
        rule=rule.value,
        cases=2,
        failures=failures,
        elapsed=time.perf_counter() - start,
        info={"span00": span00, "span11": span11,
              "d00": want00, "d11": want11},
    )


# ---------------------------------------------------------------------------
# diagonal subalgebra


def cartan_diagonal(basis: GradedBasis) -> tuple[list[GradedMatrix], CheckReport]:
    """Intersection of the algebra with the diagonal matrices.

    The result must be abelian and sit in degree (0,0); for sp/so-even/
    so-odd its dimension must equal the family parameter n, for so-graded
    it must be empty, for gl/sl it must have dimension size/size-1."""
    start = time.perf_counter()
    f = basis.family
    elements = basis.elements
    n = len(basis.signature)
    offdiag = [(r, c) for r in range(n) for c in range(n) if r != c]
    rows = []
    for (r, c) in offdiag:
        rows.append([el.entries[r, c] for el in elements])
    combos = nullspace(ExactMatrix(rows, cols=len(elements))) if elements else []
    diag: list[GradedMatrix] = []
    for v in combos:
        total = GradedMatrix.zero(basis.signature)
        for t, el in enumerate(elements):
            coeff = v[t, 0]
            if coeff:
                total = total + el.scaled(coeff)
        diag.append(total)
    failures = []
    cases = 1 + len(diag) ** 2 + len(diag)
    if f.kind in (FamilyKind.SP, FamilyKind.SO_EVEN, FamilyKind.SO_ODD):
        expected = f.params[0]
    elif f.kind is FamilyKind.SO_GRADED:
        expected = 0
    elif f.kind is FamilyKind.GL:
        expected = n
    else:
        expected = n - 1
    if len(diag) != expected:
        failures.append({"kind": "count", "expected": expected, "got": len(diag)})
    for idx, d in enumerate(diag):
        comp = {deg for deg, part in d.decompose().items() if not part.is_zero()}
        if comp - {D00}:
            failures.append({"kind": "degree", "element": idx})
    for a in range(len(diag)):
        for b in range(len(diag)):
            if not diag[a].bracket(diag[b]).is_zero():
                failures.append({"kind": "bracket", "pair": [a, b]})
    report = CheckReport(
        check="cartan",
        family=f.descriptor(),
        rule=None,
        cases=cases,
        failures=failures,
        elapsed=time.perf_counter() - start,
        info={"count": len(diag), "expected": expected},
    )
    return diag, report


# ---------------------------------------------------------------------------
# permutation stability


def _permute_basis(basis: GradedBasis, pi) -> GradedBasis:
    new_sig = permute_grading(basis.signature, pi)
    new_elements = [el.permuted_degrees(pi) for el in basis.elements]
    return GradedBasis(basis.family, new_sig, new_elements)


def check_permutation_stability(
    basis: GradedBasis,
    pi: dict | None = None,
    rule: SignRule = SignRule.GLA,
    backend: str = "auto",
) -> CheckReport:
    """Relabel the nonzero degrees (all six permutations if none is
    given), rerun the axiom scan over the relabeled basis, and verify the
    dimension profile permutes along."""
    start = time.perf_counter()
    perms = [pi] if pi is not None else degree_permutations()
    cases = 0
    failures: list[dict] = []
    base_profile = basis.profile()
    for perm in perms:
        permuted = _permute_basis(basis, perm)
        sub = check_axioms(permuted, rule, backend=backend)
        cases += sub.cases + 1
        perm_json = {str(k): str(v) for k, v in sorted(perm.items(), key=lambda t: t[0].code)}
        for fail in sub.failures:
            failures.append({"permutation": perm_json, **fail})
        got = permuted.profile()
        full = {d: perm.get(d, d) for d in DEGREES}
        expected = {full[d].code: base_profile.by_degree(d) for d in DEGREES}
        actual = {d.code: got.by_degree(d) for d in DEGREES}
        if expected != actual:
            failures.append(
                {
                    "permutation": perm_json,
                    "kind": "profile",
                    "expected": expected,
                    "got": actual,
                }
            )
    return CheckReport(
        check="permutation",
        family=basis.family.descriptor(),
        rule=rule.value,
        cases=cases,
        failures=failures,
        elapsed=time.perf_counter() - start,
    )
