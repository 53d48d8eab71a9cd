"""End-to-end acceptance sweep.

Each test covers one acceptance criterion at its stated scale and prints
a single PASS/FAIL line (bypassing capture) so the run reads as a
checklist. Two criteria carry runtime budgets, asserted with generous
wall-clock margins preserved.
"""

import random
import time
from fractions import Fraction

from bigraded import (
    DEGREES,
    AlgebraFamily,
    Degree,
    GradedMatrix,
    GradingSignature,
    Scalar,
    build_basis,
    build_system,
    cartan_diagonal,
    check_axioms,
    check_family_closure,
    check_four_identities,
    check_generation,
    check_permutation_stability,
    check_pf,
    check_pfrel,
    classical_counterpart_dims,
    defining_form,
    degree_sign,
    dimension_profile,
    dimension_profile_measured,
    graded_transpose,
)

D00, D01, D10, D11 = DEGREES

FORM_KINDS = ("sp", "so_even", "so_odd")
SORTED_KINDS = ("gl", "sl", "so_graded")


def sorted_sigs(total_max):
    out = []
    for total in range(1, total_max + 1):
        for p in range(total, -1, -1):
            for q in range(min(p, total - p), -1, -1):
                for r in range(min(q, total - p - q), -1, -1):
                    s = total - p - q - r
                    if 0 <= s <= r:
                        out.append((p, q, r, s))
    return out


def form_families(n_max):
    for kind in FORM_KINDS:
        for n in range(1, n_max + 1):
            for p in range(n + 1):
                yield getattr(AlgebraFamily, kind)(n, p)


def report_line(capsys, number, label, body):
    start = time.perf_counter()
    try:
        body()
    except BaseException as exc:
        with capsys.disabled():
            print(f"ACCEPTANCE {number:>2}: FAIL — {label}: {exc}")
        raise
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        print(f"ACCEPTANCE {number:>2}: PASS — {label} ({elapsed:.1f}s)")


def random_homogeneous(rng, sig, degree):
    entries = {}
    n = len(sig)
    for j in range(n):
        for k in range(n):
            if sig.entry_degree(j, k) == degree and rng.random() < 0.7:
                entries[(j, k)] = Scalar(rng.randint(-3, 3))
    return GradedMatrix.from_entries(sig, entries, degree=degree)


def test_criterion_01_dimension_totals(capsys):
    def body():
        start = time.perf_counter()
        for f in form_families(6):
            n, _ = f.params
            expected = classical_counterpart_dims(f)
            assert expected == (
                2 * n * n - n if f.kind.value == "so-even" else 2 * n * n + n
            )
            assert len(build_basis(f)) == expected, f.label()
        elapsed = time.perf_counter() - start
        assert elapsed < 30, f"dimension sweep took {elapsed:.1f}s (budget 30s)"

    report_line(
        capsys, 1, "dimension totals for all three form families, n <= 6", body
    )


def test_criterion_02_subspace_profiles(capsys):
    def body():
        for kind in SORTED_KINDS[1:2]:  # the traceless family, as printed
            for sig in sorted_sigs(6):
                f = AlgebraFamily.sl(*sig)
                assert (
                    dimension_profile(f).as_dict()
                    == dimension_profile_measured(f).as_dict()
                ), f.label()
        for kind in ("sp", "so_even"):
            for n in range(1, 5):
                for p in range(n + 1):
                    f = getattr(AlgebraFamily, kind)(n, p)
                    assert (
                        dimension_profile(f).as_dict()
                        == dimension_profile_measured(f).as_dict()
                    ), f.label()
        for n in range(1, 7):
            for p in range(n + 1):
                f = AlgebraFamily.so_odd(n, p)
                formula = dimension_profile(f)
                measured = dimension_profile_measured(f)
                m = n - p
                assert (measured.d01, measured.d10, measured.d11) == (
                    2 * p,
                    2 * m,
                    4 * p * m,
                ), f.label()
                assert measured.d00 == 2 * n * n - n - 4 * p * m, f.label()
                # the printed d00 disagrees exactly where its extra factor
                # of (n - p) bites: p >= 1 and n - p >= 2
                assert (formula.d00 != measured.d00) == (p >= 1 and m >= 2), f.label()

    report_line(
        capsys,
        2,
        "subspace profiles match the printed formulas; odd-orthogonal "
        "d00 discrepancy detected where it exists",
        body,
    )


def test_criterion_03_axiom_suite(capsys):
    def body():
        start = time.perf_counter()
        runs = []
        for f in form_families(4):
            runs.append(f)
        for kind in SORTED_KINDS:
            for sig in sorted_sigs(6):
                runs.append(getattr(AlgebraFamily, kind)(*sig))
        for f in runs:
            basis = build_basis(f)
            rep = check_axioms(basis)
            assert rep.passed, f.label()
            m = len(basis)
            # all pairs twice over, all triples: nothing sampled
            assert rep.cases == 2 * m * m + m ** 3, f.label()
        elapsed = time.perf_counter() - start
        assert elapsed < 300, f"axiom sweep took {elapsed:.1f}s (budget 300s)"

    report_line(
        capsys,
        3,
        "closure, antisymmetry, Jacobi exhaustively over every family "
        "(n <= 4; sorted signatures to total 6)",
        body,
    )


def test_criterion_04_graded_transpose(capsys):
    def body():
        rng = random.Random(0x417A4)
        shapes = [
            (1, 1, 1, 1),
            (2, 1, 1, 1),
            (2, 2, 1, 1),
            (2, 2, 2, 1),
            (2, 2, 2, 2),
        ]
        for shape in shapes:
            sig = GradingSignature.sorted_form(*shape)
            for _ in range(1000):
                a = random_homogeneous(rng, sig, Degree.from_code(rng.randrange(4)))
                b = random_homogeneous(rng, sig, Degree.from_code(rng.randrange(4)))
                sgn = degree_sign(a.degree, b.degree)
                assert graded_transpose(a @ b) == (
                    graded_transpose(b) @ graded_transpose(a)
                ).scaled(sgn)
                assert graded_transpose(graded_transpose(a)) == a
        # entry-for-entry block sign pattern at multiplicities (1,1,1,1)
        assert GradingSignature.sorted_form(1, 1, 1, 1).transpose_signs() == (
            (1, 1, 1, 1),
            (1, 1, -1, -1),
            (1, -1, 1, -1),
            (1, -1, -1, 1),
        )

    report_line(
        capsys,
        4,
        "transpose product rule and involution on 1000 random pairs per "
        "signature, sizes 4-8, plus the frozen sign pattern",
        body,
    )


def test_criterion_05_form_closure_and_identities(capsys):
    def body():
        for f in form_families(4):
            basis = build_basis(f)
            rep = check_family_closure(basis)
            assert rep.passed, f.label()
            assert rep.cases == len(basis) ** 2
            form = defining_form(f)
            t = graded_transpose(form.matrix)
            if form.label == "J":
                assert t == form.matrix.scaled(-1), f.label()
            else:
                assert t == form.matrix, f.label()
            fm = form.matrix.entries
            assert fm @ fm.transpose() == type(fm).identity(fm.rows), f.label()

    report_line(
        capsys,
        5,
        "brackets stay inside each form condition; form transpose and "
        "inverse identities",
        body,
    )


def test_criterion_06_parafermion_relations(capsys):
    def body():
        for n in range(1, 5):
            for q in range(n + 1):
                system = build_system(n, q)
                pf = check_pf(system)
                assert pf.passed, (n, q)
                assert pf.cases == 8 * (q ** 3 + (n - q) ** 3)
                if 1 <= q <= n - 1:
                    rel = check_pfrel(system)
                    assert rel.passed, (n, q)
                    assert rel.cases == 16 * q * (n - q) * n
        # the two substitution regressions, also named tests in the
        # dedicated module
        system = build_system(2, 1)
        f1p = system.generator(1, 1).entries
        f1m = system.generator(1, -1).entries
        f2m = system.generator(2, -1).entries
        f2p = system.generator(2, 1).entries
        comm = lambda a, b: a @ b - b @ a
        acomm = lambda a, b: a @ b + b @ a
        assert comm(comm(f1p, f1m), f1m) == f1m.scaled(-2)
        assert acomm(acomm(f1p, f2m), f2p) == f1p.scaled(2)

    report_line(
        capsys,
        6,
        "triple relations exhaustive for n <= 4, every sort split, plus "
        "both substitution regressions",
        body,
    )


def test_criterion_07_generation(capsys):
    def body():
        for kind in FORM_KINDS:
            for n in range(2, 5):
                for p in range(1, n):
                    f = getattr(AlgebraFamily, kind)(n, p)
                    rep = check_generation(build_basis(f))
                    assert rep.passed, (f.label(), rep.info)

    report_line(
        capsys,
        7,
        "odd parts generate the even parts (span equalities, "
        "n <= 4, 1 <= p <= n-1)",
        body,
    )


def test_criterion_08_diagonal_subalgebra(capsys):
    def body():
        for kind in FORM_KINDS:
            for n in range(1, 5):
                for p in range(n + 1):
                    f = getattr(AlgebraFamily, kind)(n, p)
                    diag, rep = cartan_diagonal(build_basis(f))
                    assert rep.passed, f.label()
                    assert len(diag) == n, f.label()
                    for d in diag:
                        support = {
                            deg for deg, part in d.decompose().items()
                            if not part.is_zero()
                        }
                        assert support <= {D00}, f.label()
                    for a in diag:
                        for b in diag:
                            assert a.bracket(b).is_zero()
        for sig in sorted_sigs(4):
            f = AlgebraFamily.so_graded(*sig)
            diag, rep = cartan_diagonal(build_basis(f))
            assert rep.passed and len(diag) == 0, f.label()

    report_line(
        capsys,
        8,
        "diagonal subalgebra: size n, abelian, degree (0,0); empty for "
        "the graded-antisymmetric family",
        body,
    )


def test_criterion_09_mixed_identities(capsys):
    def body():
        rng = random.Random(0x1D9)
        for _ in range(1000):
            size = rng.randint(2, 5)
            sig = GradingSignature(
                [Degree.from_code(rng.randrange(4)) for _ in range(size)]
            )
            mats = []
            for _ in range(3):
                entries = {
                    (j, k): Scalar(Fraction(rng.randint(-2, 2)))
                    for j in range(size)
                    for k in range(size)
                    if rng.random() < 0.8
                }
                mats.append(GradedMatrix.from_entries(sig, entries))
            rep = check_four_identities(*mats)
            assert rep.passed

    report_line(
        capsys,
        9,
        "all four mixed bracket identities on 1000 random exact triples",
        body,
    )


def test_criterion_10_permutation_stability(capsys):
    def body():
        families = list(form_families(3))
        for kind in SORTED_KINDS:
            for sig in sorted_sigs(3):
                families.append(getattr(AlgebraFamily, kind)(*sig))
        for f in families:
            rep = check_permutation_stability(build_basis(f))
            assert rep.passed, f.label()

    report_line(
        capsys,
        10,
        "all six degree relabelings keep the axioms and permute the "
        "profile (n <= 3)",
        body,
    )
