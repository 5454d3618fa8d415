import pytest

from ybekit.errors import BudgetExceededError
from ybekit.permgroup import BlockSystem, PermGroup
from ybekit.perms import compose, identity, inverse


def sym3():
    return PermGroup.closure([(1, 0, 2), (1, 2, 0)])


def test_closure_orders():
    assert PermGroup.closure([(1, 2, 0)]).order == 3
    assert sym3().order == 6
    assert PermGroup.closure([], degree=4).order == 1


def test_closure_contains_identity_and_inverses():
    g = sym3()
    assert identity(3) in g
    for p in g:
        assert inverse(p) in g
        for q in g:
            assert compose(p, q) in g


def test_closure_cap():
    with pytest.raises(BudgetExceededError):
        PermGroup.closure([(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)], cap=10)


def test_lagrange_sanity():
    assert sym3().check_lagrange()
    assert PermGroup.closure([(1, 2, 3, 0)]).check_lagrange()


def test_orbits():
    assert PermGroup.closure([(1, 0, 2)]).orbits() == ((0, 1), (2,))
    assert PermGroup.closure([(1, 2, 3, 0)]).orbits() == ((0, 1, 2, 3),)
    assert PermGroup.closure([], degree=2).orbits() == ((0,), (1,))


def test_minimal_block_examples():
    c4 = PermGroup.closure([(1, 2, 3, 0)])
    assert c4.minimal_block_containing(0, 2).blocks == ((0, 2), (1, 3))
    assert c4.minimal_block_containing(0, 1).blocks == ((0, 1, 2, 3),)
    s3 = sym3()
    for b in (1, 2):
        assert s3.minimal_block_containing(0, b).blocks == ((0, 1, 2),)


def test_minimal_block_preconditions():
    with pytest.raises(ValueError):
        PermGroup.closure([(1, 0, 2)]).minimal_block_containing(0, 1)
    with pytest.raises(ValueError):
        sym3().minimal_block_containing(1, 1)


def test_block_system_lookup():
    bs = BlockSystem(((0, 2), (1, 3)))
    assert bs.block_of(3) == (1, 3)
    assert bs.block_count == 2


def test_is_primitive():
    assert PermGroup.closure([(1, 2, 0)]).is_primitive()
    assert not PermGroup.closure([(1, 2, 3, 0)]).is_primitive()
    assert not PermGroup.closure([], degree=3).is_primitive()
    assert PermGroup.closure([], degree=1).is_primitive()
    assert PermGroup.closure([(1, 0)]).is_primitive()


def test_primitive_implies_transitive():
    for gens, degree in (
        ([(1, 2, 0)], 3),
        ([(1, 0, 2)], 3),
        ([(1, 2, 3, 0)], 4),
        ([], 2),
    ):
        g = PermGroup.closure(gens, degree=degree)
        if g.is_primitive():
            assert g.is_transitive() or g.degree == 1


def test_stabilizer():
    assert sym3().stabilizer(2).order == 2
    assert PermGroup.closure([(1, 2, 0)]).stabilizer(0).order == 1
    trivial = PermGroup.closure([], degree=3)
    assert trivial.stabilizer(1).order == 1


def test_orbit_stabilizer_for_all_points():
    for g in (sym3(), PermGroup.closure([(1, 2, 3, 0)]), PermGroup.closure([(1, 0, 2)])):
        for x in range(g.degree):
            assert len(g.orbit(x)) * g.stabilizer(x).order == g.order


def test_solvability():
    assert sym3().is_solvable()
    assert PermGroup.closure([(1, 2, 3, 4, 0)]).is_solvable()
    alt5 = PermGroup.closure([(1, 2, 0, 3, 4), (0, 1, 3, 4, 2)])
    assert alt5.order == 60
    assert not alt5.is_solvable()


def test_derived_series_of_sym3():
    series = sym3().derived_series()
    assert [g.order for g in series] == [6, 3, 1]
