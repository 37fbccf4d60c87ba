import wreathfock as wf


def test_multipartition_counts():
    assert wf.multipartition_count(2, 2) == 5
    assert wf.multipartition_count(3, 2) == 10
    assert len(wf.multipartitions(3, 2)) == 10
    assert wf.multipartitions(0, 3) == [[[], [], []]]


def test_partition_combinatorics():
    assert wf.hook_product([2, 1]) == 3
    assert sorted(wf.contents([2, 1])) == [-1, 0, 1]
    assert wf.centralizer_order([[1], [1]]) == 4
    assert wf.degree([[2, 1], [1]]) == 2
    assert wf.modified_type([[2, 1], [1]]) == [[1], [1]]
    assert wf.sym_char([1, 1], [2]) == -1


def test_character_table_degrees():
    table = wf.char_table(2, 2)
    identity_col = table["classes"].index([[1, 1], []])
    degrees = sorted(row[identity_col]["coeffs"][0] for row in table["matrix"])
    assert degrees == ["1", "1", "1", "1", "2"]


def test_convolution_of_trivial_character():
    table = wf.char_table(1, 2)
    trivial = {
        "r": 1,
        "n": 2,
        "values": [{"type": mp, "value": "1"} for mp in table["classes"]],
    }
    conv = wf.convolve(trivial, trivial)
    values = {str(entry["type"]): entry["value"]["coeffs"][0] for entry in conv["values"]}
    assert set(values.values()) == {"2"}  # |S_2| times the trivial character


def test_npoint_single_box():
    series = wf.npoint([[1]], [[1]], [0], order=4)
    assert series["terms"] == [{"exp": [0], "coeff": "1"}]
    assert wf.npoint([[1], []], [[], [1]], [0])["terms"] == []


def test_eigen_series_charged_vacuum():
    series = wf.eigen_series("eps", 0, [1], [[]], order=4)
    assert series["min_exp"] == -1
    assert series["coeffs"][:2] == ["1", "1/2"]


def test_tau_leading_terms():
    series = wf.tau(1, [0], degree=2, t_max=2)
    coeffs = {tuple(term["exp"]): term["coeff"] for term in series["terms"]}
    assert coeffs[(0, 0, 0, 0)] == "1"
    assert coeffs[(1, 0, 1, 0)] == "1"      # t_1 s_1
    assert coeffs[(0, 1, 0, 1)] == "1/2"    # t_2 s_2 / 2


def test_toda_residuals_vanish():
    residuals = wf.toda_residuals(1, 0, charge_lo=-1, charge_hi=1, degree=3, t_max=3)
    assert set(residuals) == {-1, 0, 1}
    assert all(series["terms"] == [] for series in residuals.values())


def test_mckay_and_verify():
    ok, _detail = wf.mckay_check(4)
    assert ok
    results = wf.verify("dims")
    assert results and all(passed for _name, passed, _detail in results)
