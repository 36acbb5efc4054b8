import pytest

import jugcoh


def test_moment_graph():
    g = jugcoh.MomentGraph(4)
    assert g.vertex_count == 9
    assert g.edge_count == 20
    assert g.pair(-4) == (8, 0)
    assert g.weight(-4).text() == "6/1*a^0*d^1+-7/2*a^1*d^0"
    assert g.dot().startswith("digraph")
    assert g.reachable(-4, 0) and not g.reachable(0, -4)
    with pytest.raises(jugcoh.JugError):
        jugcoh.MomentGraph(0)


def test_bipoly_algebra():
    a = jugcoh.BiPoly.alpha()
    d = jugcoh.BiPoly.delta()
    two = jugcoh.BiPoly(2)
    assert (a + d) * (a + d) == a * a + two * a * d + d * d
    assert jugcoh.BiPoly((a - d).text()) == a - d
    assert str(-a + d * jugcoh.BiPoly(3)) == "-a + 3*d"


def test_kt_family_values():
    fam = jugcoh.KTFamily(4)
    # xi(5,3) restricted at (8,0) is 2(-a+d); its diagonal is -a
    assert fam.value(1, -4).text() == "2/1*a^0*d^1+-2/1*a^1*d^0"
    assert fam.diagonal(1).text() == "-1/1*a^1*d^0"
    csv = fam.table_csv()
    assert csv.splitlines()[0].startswith('class,"(8,0)","(0,8)"')


def test_gkm_and_relations():
    fam = jugcoh.KTFamily(5)
    for r in range(-5, 6):
        assert jugcoh.gkm_violations(fam, fam.cls(r)) == []
    report = jugcoh.check_relations(fam)
    assert report["all_pass"] is True
    axioms = jugcoh.verify_kt_axioms(fam)
    assert axioms["all_ok"] is True


def test_expansion_and_constants():
    fam = jugcoh.KTFamily(4)
    one = jugcoh.BiPoly(1)
    assert jugcoh.structure_constants(fam, 1, -1) == {2: one, -2: one}
    product = fam.cls(1) * fam.cls(-1)
    assert jugcoh.expand(fam, product) == jugcoh.oracle_expand(fam, product)
    for i in range(-4, 5):
        for j in range(-4, 5):
            assert all(c.is_integral() for c in jugcoh.structure_constants(fam, i, j).values())


def test_presentation_and_stability():
    fam = jugcoh.KTFamily(4)
    pres = jugcoh.present(fam)
    assert pres["phi_kills_generators"] == [True, True, True]
    assert jugcoh.stability(3, 4)["pass"] is True
