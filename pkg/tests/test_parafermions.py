"""The two-sort generator systems and their triple relations."""

import pytest

from bigraded import (
    DEGREES,
    ParafermionSystem,
    build_basis,
    build_system,
    check_pf,
    check_pfrel,
    identify_subspaces,
    is_member,
)

D00, D01, D10, D11 = DEGREES


def comm(a, b):
    return a @ b - b @ a


def acomm(a, b):
    return a @ b + b @ a


# ---------------------------------------------------------------------------
# construction


def test_parameter_validation():
    with pytest.raises(ValueError):
        build_system(0, 0)
    with pytest.raises(ValueError):
        build_system(2, 3)
    with pytest.raises(ValueError):
        build_system(2, -1)


def test_generators_are_members_with_sorted_degrees():
    system = build_system(3, 1)
    assert len(system.generators) == 6
    for (j, sign), g in system.generators.items():
        assert g.degree == (D01 if j <= 1 else D10)
        assert g.degree == system.sort_of(j)
        assert is_member(system.family, g)
    assert system.generator(1, -1) is system.generators[(1, -1)]


def test_generator_entry_pattern():
    system = build_system(2, 1)
    f1m = system.generator(1, -1).entries
    nz = {
        (r, c): v
        for r, row in enumerate(f1m.data)
        for c, v in enumerate(row)
        if v
    }
    assert set(nz) == {(0, 4), (4, 2)}
    assert nz[(0, 4)] == -nz[(4, 2)]
    assert nz[(0, 4)] * nz[(0, 4)] == 2  # normalized to sqrt(2)


# ---------------------------------------------------------------------------
# named regression cases


def test_substitution_case_nested_commutator():
    # [[f1+, f1-], f1-] == -2 f1-
    system = build_system(2, 1)
    fp = system.generator(1, 1).entries
    fm = system.generator(1, -1).entries
    assert comm(comm(fp, fm), fm) == fm.scaled(-2)


def test_substitution_case_nested_anticommutator():
    # {{f1+, f2-}, f2+} == 2 f1+
    system = build_system(2, 1)
    f1p = system.generator(1, 1).entries
    f2m = system.generator(2, -1).entries
    f2p = system.generator(2, 1).entries
    assert acomm(acomm(f1p, f2m), f2p) == f1p.scaled(2)


# ---------------------------------------------------------------------------
# relation scans


@pytest.mark.parametrize("n,q", [(1, 0), (1, 1), (2, 0), (2, 1), (3, 2)])
def test_same_sort_relations(n, q):
    system = build_system(n, q)
    rep = check_pf(system)
    assert rep.passed
    assert rep.check == "pf"
    assert rep.cases == 8 * (q ** 3 + (n - q) ** 3)


@pytest.mark.parametrize("n,q", [(2, 1), (3, 1), (3, 2)])
def test_cross_sort_relations(n, q):
    rep = check_pfrel(build_system(n, q))
    assert rep.passed
    assert rep.check == "pfrel"
    assert rep.cases == 16 * q * (n - q) * n


def test_cross_sort_needs_both_sorts():
    with pytest.raises(ValueError):
        check_pfrel(build_system(2, 0))
    with pytest.raises(ValueError):
        check_pfrel(build_system(2, 2))


def test_tampered_generator_fails_with_witness():
    system = build_system(2, 1)
    bad = dict(system.generators)
    g = bad[(1, -1)]
    bad[(1, -1)] = type(g)(g.signature, g.entries.scaled(2), g.degree)
    tampered = ParafermionSystem(
        system.n, system.q, system.signature, system.family, bad
    )
    rep = check_pf(tampered)
    assert not rep.passed
    fail = rep.failures[0]
    assert fail["relation"] == "pf"
    assert len(fail["triple"]) == 3
    assert len(fail["inputs"]) == 3


# ---------------------------------------------------------------------------
# generated subspaces


def test_generated_subspace_dimensions():
    info = identify_subspaces(build_system(3, 1))
    assert info["full"]
    assert info["spans"] == {"d00": 7, "d01": 2, "d10": 4, "d11": 8}
    profile = build_basis(build_system(3, 1).family).profile().as_dict()
    del profile["total"]
    assert info["profile"] == profile
    assert info["spans"] == profile


def test_single_sort_still_generates_its_half():
    info = identify_subspaces(build_system(2, 0))
    assert info["full"]
    assert info["spans"]["d01"] == 0
    assert info["spans"]["d11"] == 0
    assert info["spans"]["d10"] == 4
    assert info["spans"]["d00"] == 6


@pytest.mark.parametrize("n", [1, 2, 3])
def test_subspaces_recover_the_profile_for_all_sorts(n):
    for q in range(n + 1):
        assert identify_subspaces(build_system(n, q))["full"], (n, q)
