from fractions import Fraction

import pytest

import ncpark


def test_counts():
    assert ncpark.count("trees", 4) == 12
    assert ncpark.count("pf", 3) == 16
    assert ncpark.count("nc", 4) == 14
    assert ncpark.count("hypertrees", 4) == 21
    assert ncpark.count("chains", 3) == 16
    with pytest.raises(ValueError):
        ncpark.count("widgets", 3)


def test_bijections():
    assert ncpark.stanley_map("(2,3)(1,2)") == [2, 1]
    assert ncpark.stanley_inverse([1, 1]) == "(1,2)(1,3)"
    for pf in ncpark.parking_functions(4):
        assert ncpark.stanley_map(ncpark.stanley_inverse(pf)) == pf
    h = "{1,2,4,5}{1,7,8}{2,3}{5,6}"
    assert ncpark.hypertree_to_dissection(8, h) == "m=16:[1-12,3-6,9-12]"
    assert ncpark.dissection_to_hypertree("m=16:[1-12,3-6,9-12]") == h


def test_complexes():
    x = ncpark.ncht_complex(4)
    assert x.f_vector() == [8, 12]
    assert x.is_flag()
    link = ncpark.nc_link(4)
    assert link.f_vector() == [12, 16]
    assert ncpark.reduced_homology(link)["betti"][2] == 5
    tri = ncpark.SimplicialComplex([[1, 2, 3]])
    assert len(tri) == 7
    assert [1, 2] in tri
    assert tri.link([1]).maximal_faces == [[2, 3]]


def test_certification():
    sub = ncpark.unused_edge_subcomplex(5, "bottom")
    report = ncpark.certify(sub)
    assert report["tier"] == "COLLAPSIBLE"
    assert ncpark.replay(sub, report["certificate"])
    sphere = ncpark.SimplicialComplex.simplex_boundary(4)
    bad = ncpark.certify(sphere)
    assert bad["tier"] == "NOT_HOMOLOGY_POINT"
    assert bad["homology"]["text"] == "H~2 = Z\n"
    assert ncpark.certify(ncpark.pf_link(4, 4))["tier"] == "COLLAPSIBLE"


def test_retraction():
    image = ncpark.retract_point([1, 2, 3], [1, 2], {1: Fraction(1, 2), 2: Fraction(1, 5), 3: Fraction(3, 10)})
    assert image == {1: Fraction(3, 10), 3: Fraction(7, 10)}
    with pytest.raises(ValueError):
        ncpark.retract_point([1, 2, 3], [1, 2], {1: Fraction(1, 2)})


def test_cli(tmp_path):
    code, out, _ = ncpark.run_cli(["enumerate", "trees", "--n", "4", "--cache-dir", str(tmp_path)])
    assert (code, out) == (0, "12\n")
    code, _, err = ncpark.run_cli(["verify", "space", "--n", "3", "--k", "1", "--cache-dir", str(tmp_path)])
    assert code == 2
    assert "k must exceed 1" in err
