import pytest

import flatbu


def test_catalog_has_ten_entries():
    entries = flatbu.catalog()
    assert [e["id"] for e in entries] == ["M1", "M2", "M3", "M4", "M5", "M6", "N1", "N2", "N3", "N4"]
    assert sum(e["orientable"] for e in entries) == 6


def test_epimorphism_counts():
    counts = [len(flatbu.epimorphisms(e["id"])) for e in flatbu.catalog()]
    assert counts == [7, 7, 1, 3, 1, 3, 7, 3, 7, 3]


def test_cover_and_index():
    report = flatbu.cover("M2", 7)
    assert report["cover"] == "M1"
    assert report["classical"] == 7
    assert report["index"] == 1
    assert flatbu.index("M4", 3) == 3
    with pytest.raises(IndexError):
        flatbu.index("M3", 2)
    with pytest.raises(ValueError):
        flatbu.cover("M9", 1)


def test_classes_of_n1():
    sizes = sorted(len(c["members"]) for c in flatbu.classes("N1"))
    assert sizes == [1, 2, 2, 2]


def test_graph_dot_has_22_edges():
    dot = flatbu.graph("dot")
    assert dot.count(" -> ") == 22
    with pytest.raises(ValueError):
        flatbu.graph("svg")


def test_analyze_m6_form():
    result = flatbu.analyze({"b": -1, "type": "n2", "g": 1, "pairs": [[2, 1], [2, 1]]})
    assert result["catalog_id"] == "M6"
    assert {e["cover"]["id"] for e in result["epimorphisms"]} == {"M2"}
    assert {e["index"] for e in result["epimorphisms"]} == {2}


def test_smith_normal_form_reconstructs():
    a = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    u, d, v, rank = flatbu.smith_normal_form(a)
    mul = lambda x, y: [[sum(x[i][k] * y[k][j] for k in range(len(y))) for j in range(len(y[0]))] for i in range(len(x))]
    assert mul(mul(u, a), v) == d
    assert [d[i][i] for i in range(3)] == [2, 6, 12]
    assert rank == 3


def test_abelianization_of_klein_bottle():
    assert flatbu.abelianization(["a", "b"], ["a^2 b^2"]) == (1, [2])


def test_acceptance_results_are_reported():
    results = flatbu.run_acceptance()
    assert [r["number"] for r in results] == list(range(1, 9))
    passed = {r["number"] for r in results if r["passed"]}
    assert {1, 2, 3, 6, 7, 8} <= passed
