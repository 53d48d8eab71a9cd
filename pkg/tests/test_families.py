"""Family signatures, defining forms, membership, and basis construction.

Basis construction is cross-validated internally (nullspace route against
the literal block templates), so a large part of this file is sweeps that
simply demand construction to succeed, plus frozen profile oracles.
"""

import pytest

from bigraded import (
    DEGREES,
    AlgebraFamily,
    FamilyKind,
    GradedBasis,
    GradedMatrix,
    GradingSignature,
    ONE,
    SQRT2,
    Scalar,
    block_template,
    build_basis,
    classical_counterpart_dims,
    defining_form,
    dimension_profile,
    dimension_profile_measured,
    family_signature,
    graded_transpose,
    is_member,
    satisfies_template,
    so_odd_signature_readings,
    template_instances,
)

D00, D01, D10, D11 = DEGREES


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


# ---------------------------------------------------------------------------
# parameters and signatures


def test_parameter_validation():
    with pytest.raises(ValueError):
        AlgebraFamily.sp(0, 0)
    with pytest.raises(ValueError):
        AlgebraFamily.so_odd(2, 3)
    with pytest.raises(ValueError):
        AlgebraFamily.gl(0, 0, 0, 0)
    with pytest.raises(ValueError):
        AlgebraFamily.sl(1, -1, 0, 0)


def test_matrix_sizes_and_labels():
    assert AlgebraFamily.sp(3, 1).matrix_size == 6
    assert AlgebraFamily.so_odd(3, 1).matrix_size == 7
    assert AlgebraFamily.gl(1, 2, 3, 4).matrix_size == 10
    assert AlgebraFamily.sp(3, 1).label() == "sp(n=3,p=1)"
    assert AlgebraFamily.sl(1, 0, 2, 0).label() == "sl(1,0,2,0)"


def test_descriptor_round_trip():
    for f in (AlgebraFamily.sp(3, 2), AlgebraFamily.so_graded(1, 2, 0, 1)):
        assert AlgebraFamily.from_descriptor(f.descriptor()) == f


def test_sorted_kind_signatures():
    assert family_signature(AlgebraFamily.gl(2, 1, 0, 1)) == GradingSignature(
        [D00, D00, D01, D11]
    )


def test_symplectic_style_signature_oracle():
    sig = family_signature(AlgebraFamily.sp(2, 1))
    assert list(sig) == [D00, D10, D11, D01]
    assert family_signature(AlgebraFamily.so_even(2, 1)) == sig


def test_odd_orthogonal_signature_oracle():
    sig = family_signature(AlgebraFamily.so_odd(2, 1))
    assert list(sig) == [D00, D11, D00, D11, D01]
    # sorted multiplicities: (2p, 1, 0, 2(n-p))
    assert sig.multiplicities() == (2, 1, 0, 2)
    assert family_signature(AlgebraFamily.so_odd(3, 2)).multiplicities() == (4, 1, 0, 2)


def test_odd_orthogonal_readings_share_entry_degrees():
    canonical, alternate, shift = so_odd_signature_readings(3, 1)
    assert canonical == family_signature(AlgebraFamily.so_odd(3, 1))
    assert [d + shift for d in canonical] == list(alternate)
    n = len(canonical)
    for j in range(n):
        for k in range(n):
            assert canonical.entry_degree(j, k) == alternate.entry_degree(j, k)


def test_readings_disagree_on_membership():
    # same entry pattern, same entry degrees, different graded transposes:
    # the second-sort generator pattern solves the defining condition only
    # under the primary reading
    canonical, alternate, _ = so_odd_signature_readings(2, 1)
    from bigraded.families import _form_entries

    form = {
        pos: Scalar(v)
        for pos, v in _form_entries(AlgebraFamily.so_odd(2, 1)).items()
    }
    pattern = {(1, 4): SQRT2, (4, 3): -SQRT2}
    for sig, expected in ((canonical, True), (alternate, False)):
        K = GradedMatrix.from_entries(sig, form, degree="infer")
        A = GradedMatrix.from_entries(sig, pattern, degree="infer")
        cond = graded_transpose(A) @ K + K @ A
        assert cond.is_zero() is expected


# ---------------------------------------------------------------------------
# defining forms


def test_form_labels_and_degrees():
    j = defining_form(AlgebraFamily.sp(2, 1))
    k = defining_form(AlgebraFamily.so_even(2, 1))
    kp = defining_form(AlgebraFamily.so_odd(2, 1))
    assert (j.label, k.label, kp.label) == ("J", "K", "K'")
    assert j.matrix.degree == D11
    assert k.matrix.degree == D11
    assert kp.matrix.degree == D00
    with pytest.raises(ValueError):
        defining_form(AlgebraFamily.gl(1, 1, 1, 1))


def test_form_entries_oracle_n2_p1():
    j = defining_form(AlgebraFamily.sp(2, 1)).matrix.entries
    nz = {(a, b): v for a in range(4) for b in range(4) if (v := j[a, b])}
    assert nz == {
        (0, 2): ONE,
        (1, 3): ONE,
        (2, 0): -ONE,
        (3, 1): ONE,
    }
    kp = defining_form(AlgebraFamily.so_odd(2, 1)).matrix.entries
    nz = {(a, b): v for a in range(5) for b in range(5) if (v := kp[a, b])}
    assert nz == {
        (0, 2): ONE,
        (1, 3): -ONE,
        (2, 0): ONE,
        (3, 1): -ONE,
        (4, 4): ONE,
    }


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("kind", ["sp", "so_even", "so_odd"])
def test_form_transpose_identities(kind, n):
    for p in range(n + 1):
        f = getattr(AlgebraFamily, kind)(n, p)
        form = defining_form(f).matrix
        t = graded_transpose(form)
        if f.kind is FamilyKind.SP:
            assert t == form.scaled(-1)
        else:
            assert t == form
        # the forms are signed permutations: inverse == ordinary transpose
        inv = GradedMatrix(
            form.signature, form.entries.transpose(), form.degree
        )
        prod = form.entries @ form.entries.transpose()
        assert prod == GradedMatrix.identity(form.signature).entries
        assert (inv.entries @ form.entries) == prod


# ---------------------------------------------------------------------------
# membership


def test_membership_reasons():
    sl = AlgebraFamily.sl(1, 1, 0, 0)
    sig = family_signature(sl)
    diag = GradedMatrix.from_entries(sig, {(0, 0): ONE}, degree=D00)
    verdict = is_member(sl, diag)
    assert not verdict
    assert "trace" in verdict.reason
    assert is_member(AlgebraFamily.gl(1, 1, 0, 0), diag)

    so = AlgebraFamily.so_graded(1, 1, 0, 0)
    sym = GradedMatrix.from_entries(sig, {(0, 1): ONE, (1, 0): ONE})
    verdict = is_member(so, sym)
    assert not verdict and verdict.position is not None
    anti = GradedMatrix.from_entries(sig, {(0, 1): ONE, (1, 0): -ONE})
    assert is_member(so, anti)


def test_membership_signature_mismatch_is_usage_error():
    f = AlgebraFamily.sp(2, 1)
    wrong = GradedMatrix.zero(GradingSignature([D00] * 4))
    with pytest.raises(ValueError):
        is_member(f, wrong)


# ---------------------------------------------------------------------------
# basis construction


PROFILE_ORACLES = {
    ("sl", (1, 1, 1, 1)): (3, 4, 4, 4),
    ("sp", (2, 1)): (2, 2, 2, 4),
    ("so_even", (2, 1)): (2, 2, 2, 0),
    ("so_odd", (3, 1)): (7, 2, 4, 8),
}


@pytest.mark.parametrize("kind,params", list(PROFILE_ORACLES))
def test_profile_oracles(kind, params):
    basis = build_basis(getattr(AlgebraFamily, kind)(*params))
    p = basis.profile()
    assert (p.d00, p.d01, p.d10, p.d11) == PROFILE_ORACLES[(kind, params)]
    assert len(basis) == p.total


def test_basis_elements_are_normalized_members_in_degree_order():
    for f in (
        AlgebraFamily.sp(2, 1),
        AlgebraFamily.so_odd(2, 1),
        AlgebraFamily.sl(2, 1, 1, 0),
        AlgebraFamily.so_graded(1, 1, 1, 1),
    ):
        basis = build_basis(f)
        codes = [el.degree.code for el in basis.elements]
        assert codes == sorted(codes)
        for el in basis.elements:
            assert is_member(f, el), f.label()
            first = el.entries.first_nonzero()
            assert first is not None and first[2] == ONE


def test_validate_flag_does_not_change_the_result():
    for f in (AlgebraFamily.sp(2, 2), AlgebraFamily.so_odd(2, 0)):
        assert build_basis(f, validate=False).elements == build_basis(f).elements


def test_template_route_matches_nullspace_route():
    f = AlgebraFamily.so_odd(2, 1)
    basis = build_basis(f)
    template = block_template(f)
    for el in basis.elements:
        ok, reason = satisfies_template(template, el)
        assert ok, reason


def test_template_rejects_tampered_matrix():
    f = AlgebraFamily.so_odd(2, 1)
    basis = build_basis(f)
    template = block_template(f)
    el = next(e for e in basis.elements if e.degree == D01)
    grid = [list(row) for row in el.entries.data]
    flipped = None
    for r, row in enumerate(grid):
        for c, v in enumerate(row):
            if v:
                grid[r][c] = -v
                flipped = (r, c)
                break
        if flipped:
            break
    from bigraded import ExactMatrix

    tampered = GradedMatrix(el.signature, ExactMatrix(grid), el.degree)
    ok, reason = satisfies_template(template, tampered)
    assert not ok and reason


def test_template_instances_span_count():
    for f in (AlgebraFamily.sp(2, 1), AlgebraFamily.so_odd(2, 1)):
        mats = template_instances(f)
        assert len(mats) == len(build_basis(f))
        for m in mats:
            assert is_member(f, m)


@pytest.mark.parametrize("kind", ["gl", "sl", "so_graded"])
def test_sorted_kind_construction_sweep(kind):
    for sig in sorted_sigs(4):
        f = getattr(AlgebraFamily, kind)(*sig)
        basis = build_basis(f)
        formula = dimension_profile(f)
        measured = basis.profile()
        assert measured.as_dict() == formula.as_dict(), f.label()


@pytest.mark.parametrize("kind", ["sp", "so_even"])
def test_form_kind_profiles_match_formula(kind):
    for n in range(1, 5):
        for p in range(n + 1):
            f = getattr(AlgebraFamily, kind)(n, p)
            assert build_basis(f).profile().as_dict() == dimension_profile(f).as_dict()


def test_odd_orthogonal_edge_parameters():
    for n in range(1, 4):
        for p in (0, n):
            f = AlgebraFamily.so_odd(n, p)
            basis = build_basis(f)
            assert len(basis) == 2 * n * n + n


# ---------------------------------------------------------------------------
# dimension formulas


def test_classical_counterpart_oracles():
    assert classical_counterpart_dims(AlgebraFamily.sp(3, 0)) == 21
    assert classical_counterpart_dims(AlgebraFamily.so_even(3, 2)) == 15
    assert classical_counterpart_dims(AlgebraFamily.so_odd(1, 0)) == 3
    with pytest.raises(ValueError):
        classical_counterpart_dims(AlgebraFamily.gl(1, 0, 0, 0))


def test_odd_orthogonal_formula_is_kept_verbatim():
    # the printed d00 expression subtracts 4p(n-p)^2; at (3,1) it gives -1
    assert dimension_profile(AlgebraFamily.so_odd(3, 1)).d00 == -1
    assert dimension_profile_measured(AlgebraFamily.so_odd(3, 1)).d00 == 7


def test_odd_orthogonal_formula_mismatch_condition():
    for n in range(1, 6):
        for p in range(n + 1):
            f = AlgebraFamily.so_odd(n, p)
            formula = dimension_profile(f)
            measured = dimension_profile_measured(f)
            m = n - p
            assert measured.d00 == 2 * n * n - n - 4 * p * m
            assert (measured.d01, measured.d10, measured.d11) == (
                formula.d01,
                formula.d10,
                formula.d11,
            )
            assert (formula.d00 != measured.d00) == (p >= 1 and m >= 2)


# ---------------------------------------------------------------------------
# serialization


def test_basis_json_round_trip():
    for f in (AlgebraFamily.sp(2, 1), AlgebraFamily.sl(1, 1, 1, 0)):
        basis = build_basis(f)
        back = GradedBasis.from_json(basis.to_json())
        assert back.family == basis.family
        assert back.signature == basis.signature
        assert back.elements == basis.elements
        assert [el.degree for el in back.elements] == [
            el.degree for el in basis.elements
        ]


def test_basis_json_shape():
    doc = build_basis(AlgebraFamily.sp(1, 0)).to_json()
    assert set(doc) == {"family", "params", "signature", "elements", "profile"}
    assert doc["profile"]["total"] == len(doc["elements"])
