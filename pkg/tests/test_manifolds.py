import pytest

from surgerykit.catalog import TREFOIL_RIGHT, UNKNOT
from surgerykit.dehn import FramedLink
from surgerykit.errors import SiteError
from surgerykit.homology import AbelianGroupDecomp
from surgerykit.manifolds import (
    POINCARE,
    S1XS2,
    ManifoldExpr,
    from_summands,
    h1_expr,
    join_expressions,
    lens,
    sphere,
    surgered,
    two_surgery_expr,
    zero_surgery_expr,
)


def test_sphere_absorption():
    assert sphere() == ManifoldExpr(((),))
    # joining two spheres at points of distinct components gives a sphere
    two = ManifoldExpr(((), ()))
    assert zero_surgery_expr(two, 0, 1) == sphere()


def test_same_component_join_adds_handle():
    m = zero_surgery_expr(sphere(), 0, 0)
    assert m == from_summands(S1XS2)
    assert h1_expr(m) == (AbelianGroupDecomp(1),)


def test_lens_wormhole():
    m = zero_surgery_expr(from_summands(lens(5, 1)), 0, 0)
    assert h1_expr(m) == (AbelianGroupDecomp(1, (5,)),)


def test_two_surgery_removes_handle():
    assert two_surgery_expr(from_summands(S1XS2), 0) == sphere()
    m = from_summands(lens(5, 1), S1XS2)
    assert two_surgery_expr(m, 0) == from_summands(lens(5, 1))


def test_two_surgery_requires_handle():
    with pytest.raises(SiteError, match="S1xS2"):
        two_surgery_expr(sphere(), 0)


def test_join_then_unjoin_is_identity():
    for start in (sphere(), from_summands(lens(7, 2)), from_summands(POINCARE, lens(3, 1))):
        m = zero_surgery_expr(start, 0, 0)
        assert two_surgery_expr(m, 0) == start


def test_h1_additive():
    m = from_summands(S1XS2, S1XS2)
    assert h1_expr(m) == (AbelianGroupDecomp(2),)
    m = from_summands(lens(4, 1), lens(6, 1))
    assert h1_expr(m) == (AbelianGroupDecomp(0, (2, 12)),)
    assert h1_expr(from_summands(POINCARE)) == (AbelianGroupDecomp(0),)


def test_surgered_summand_uses_cached_h1():
    fl = FramedLink(UNKNOT, (0,))
    m = from_summands(surgered(fl))
    assert h1_expr(m) == (AbelianGroupDecomp(1),)
    poinc = from_summands(surgered(FramedLink(TREFOIL_RIGHT, (1,))))
    assert h1_expr(poinc) == (AbelianGroupDecomp(0),)


def test_normalization_is_order_independent():
    a = from_summands(lens(4, 1), S1XS2, lens(3, 1))
    b = from_summands(S1XS2, lens(3, 1), lens(4, 1))
    assert a == b
    # idempotent: renormalizing changes nothing
    assert ManifoldExpr(a.components) == a


def test_join_expressions():
    j = join_expressions(from_summands(lens(3, 1)), from_summands(S1XS2))
    assert j == from_summands(lens(3, 1), S1XS2)
    two_comp = ManifoldExpr(((), (lens(5, 1),)))
    j2 = join_expressions(two_comp, sphere())
    assert len(j2.components) == 2


def test_lens_validation():
    with pytest.raises(SiteError):
        lens(1, 1)
    with pytest.raises(SiteError):
        lens(4, 2)


def test_component_index_errors():
    with pytest.raises(SiteError):
        zero_surgery_expr(sphere(), 0, 1)
    with pytest.raises(SiteError):
        two_surgery_expr(sphere(), 3)
