import pytest

import msf


def test_exact_constants():
    z7 = msf.Group("Z7")
    assert z7.order == 7
    assert msf.count(z7, "fmax") == 9
    assert msf.count(z7, "fstar_max") == 14
    assert msf.classify(msf.Group("Z10")) == "TypeI(2)"
    assert msf.mu(msf.Group("Z2^4")) == 8


def test_counts_are_python_ints():
    value = msf.count(msf.Group("Z2^5"), "f")
    assert isinstance(value, int)
    assert value == 2534530


def test_enumeration_matches_predicate():
    g = msf.Group("Z2*Z4")
    sets = msf.maximal_sumfree_sets(g)
    assert len(sets) == msf.count(g, "fmax")
    assert all(msf.is_sumfree(g, s) for s in sets)


def test_fixtures_and_link_graphs():
    assert msf.mis(msf.fixture("C6")) == 5
    assert "cube" in msf.fixture_names()
    adjacency = msf.link_graph(msf.Group("Z9"), [4, 5, 6], [1, 7])
    assert msf.graph_summary(adjacency)["census"] == {"triangle+2-loops": 1}
    assert msf.to_dot(adjacency).startswith("graph")


def test_constructions_and_caps():
    report = msf.construct("type3-5.3", m=13)
    assert report["mis_exact"] == "2"
    assert report["match"] is True
    cyclic = msf.construct("cyclic-5.1", m=18, K="Z2")
    assert cyclic["product_bound"]["witness"]["match"] is True
    assert msf.construct("distinct-6.3", group="Z7")["case"] == "type III"
    assert msf.count_complete_caps(3) == msf.caps_via_sumfree(3) == 183
    assert msf.verify_prop34(3084, 3084)
    assert not msf.verify_prop34(9, 9)


def test_errors():
    with pytest.raises(ValueError):
        msf.Group("Z7x")
    with pytest.raises(msf.BudgetExceeded):
        msf.count(msf.Group("Z2^5"), "f", max_nodes=100)
