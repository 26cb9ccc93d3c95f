import random

import pytest

from surgerykit.catalog import (
    HOPF,
    TREFOIL_LEFT,
    TREFOIL_RIGHT,
    UNKNOT,
    random_braid_diagram,
)
from surgerykit.coset import todd_coxeter
from surgerykit.dehn import (
    FramedLink,
    h1_of_surgery,
    linking_matrix,
    longitude_word,
    surgery_group,
    wirtinger,
)
from surgerykit.diagrams import component_count, disjoint_union, parse_pd, self_writhe
from surgerykit.errors import PDError
from surgerykit.homology import AbelianGroupDecomp
from surgerykit.presentations import abelianization, tietze_simplify


def test_framing_arity_checked():
    with pytest.raises(PDError, match="arity"):
        FramedLink(HOPF, (1,))


def test_wirtinger_unknot():
    p, meta = wirtinger(UNKNOT)
    assert p.generator_count == 1
    assert p.relators == ()
    assert meta.meridians == (1,)


def test_wirtinger_trefoil():
    p, meta = wirtinger(TREFOIL_RIGHT)
    assert p.generator_count == 3
    assert len(p.relators) == 3
    assert abelianization(p) == AbelianGroupDecomp(1)


def test_wirtinger_counts():
    rng = random.Random(2718)
    for _ in range(25):
        d = random_braid_diagram(rng, 8)
        p, meta = wirtinger(d)
        assert len(p.relators) == len(d.crossings)
        assert p.generator_count == len(meta.arcs)


def test_longitude_unknot_is_meridian_power():
    _, meta = wirtinger(UNKNOT)
    assert longitude_word(UNKNOT, 0, 4, meta) == (1, 1, 1, 1)
    assert longitude_word(UNKNOT, 0, -2, meta) == (-1, -1)
    assert longitude_word(UNKNOT, 0, 0, meta) == ()


def test_longitude_blackboard_framing_needs_no_correction():
    w = self_writhe(TREFOIL_RIGHT, 0)
    _, meta = wirtinger(TREFOIL_RIGHT)
    word = longitude_word(TREFOIL_RIGHT, 0, w, meta)
    assert len(word) == 3  # one letter per under-passage, no meridian tail


def test_longitude_exponent_sum_equals_framing():
    rng = random.Random(31415)
    for _ in range(40):
        d = random_braid_diagram(rng, 8)
        _, meta = wirtinger(d)
        n = component_count(d)
        for comp in range(n):
            f = rng.randint(-5, 5)
            word = longitude_word(d, comp, f, meta)
            own = sum(
                (1 if g > 0 else -1)
                for g in word
                if meta.arc_component[abs(g) - 1] == comp
            )
            assert own == f


def test_surgery_group_unknot_framing_zero():
    g = surgery_group(FramedLink(UNKNOT, (0,)))
    assert abelianization(g) == AbelianGroupDecomp(1)
    assert tietze_simplify(g).generator_count == 1
    assert tietze_simplify(g).relators == ()


def test_surgery_group_lens_ladder():
    for p in range(1, 13):
        fl = FramedLink(UNKNOT, (p,))
        result = todd_coxeter(surgery_group(fl), 1000)
        assert result.is_finite and result.order == p
        assert h1_of_surgery(fl) == (
            AbelianGroupDecomp(0, (p,)) if p >= 2 else AbelianGroupDecomp(0)
        )


def test_trefoil_unit_framings():
    finite = {}
    for name, d in (("right", TREFOIL_RIGHT), ("left", TREFOIL_LEFT)):
        for f in (1, -1):
            fl = FramedLink(d, (f,))
            assert h1_of_surgery(fl).is_trivial
            result = todd_coxeter(surgery_group(fl), 100_000)
            finite[(name, f)] = result
    assert finite[("right", 1)].order == 120
    assert finite[("left", -1)].order == 120
    assert finite[("right", -1)].outcome == "exceeded"
    assert finite[("left", 1)].outcome == "exceeded"


def test_hopf_zero_framings_gives_sphere():
    fl = FramedLink(HOPF, (0, 0))
    assert todd_coxeter(surgery_group(fl), 1000).order == 1
    assert h1_of_surgery(fl).is_trivial


def test_linking_matrix_examples():
    assert linking_matrix(FramedLink(UNKNOT, (5,))) == ((5,),)
    lk = linking_matrix(FramedLink(HOPF, (0, 0)))
    assert lk in (((0, 1), (1, 0)), ((0, -1), (-1, 0)))
    split = disjoint_union(UNKNOT, UNKNOT)
    assert linking_matrix(FramedLink(split, (3, -4))) == ((3, 0), (0, -4))


def test_h1_examples():
    assert h1_of_surgery(FramedLink(TREFOIL_RIGHT, (1,))).is_trivial
    assert h1_of_surgery(FramedLink(UNKNOT, (0,))) == AbelianGroupDecomp(1)
    assert h1_of_surgery(FramedLink(HOPF, (0, 0))).is_trivial


def test_self_duality_orders():
    for f in range(1, 8):
        a = h1_of_surgery(FramedLink(UNKNOT, (f,)))
        b = h1_of_surgery(FramedLink(UNKNOT, (-f,)))
        assert a.order() == b.order() == f if f > 1 else a.order() == b.order()


def test_abelianization_cross_oracle_sample():
    rng = random.Random(424242)
    for _ in range(60):
        d = random_braid_diagram(rng, 8)
        fl = FramedLink(d, tuple(rng.randint(-5, 5) for _ in range(component_count(d))))
        assert abelianization(surgery_group(fl)) == h1_of_surgery(fl)


def test_blowup_invariance_sample():
    rng = random.Random(535353)
    for _ in range(25):
        d = random_braid_diagram(rng, 6)
        fl = FramedLink(d, tuple(rng.randint(-5, 5) for _ in range(component_count(d))))
        eps = rng.choice([1, -1])
        blown = FramedLink(disjoint_union(d, UNKNOT), fl.framings + (eps,))
        assert h1_of_surgery(blown) == h1_of_surgery(fl)
        base = todd_coxeter(tietze_simplify(surgery_group(fl)), 3000)
        if base.is_finite:
            after = todd_coxeter(tietze_simplify(surgery_group(blown)), 3000)
            assert after.is_finite and after.order == base.order


def test_surgery_presentation_shape():
    # wirtinger relators plus one longitude relator per component
    fl = FramedLink(HOPF, (2, 3))
    g = surgery_group(fl)
    assert len(g.relators) == len(HOPF.crossings) + 2


def test_determinism():
    fl = FramedLink(TREFOIL_RIGHT, (1,))
    assert surgery_group(fl) == surgery_group(fl)
    assert linking_matrix(fl) == linking_matrix(fl)
