import permcode as pc


def test_permutation_basics():
    sigma = pc.parse_permutation("(0 3)", 4)
    tau = pc.parse_permutation("(1 3)", 4)
    assert sigma.images == [3, 1, 2, 0]
    assert pc.hamming_distance(sigma, tau) == 3
    assert pc.compose(sigma, pc.inverse(sigma)).is_identity()
    assert pc.quotient(sigma, tau).cycles() == [[0, 1, 3]]


def test_contraction_and_classifier():
    sigma = pc.parse_permutation("(0 3)", 4)
    tau = pc.parse_permutation("(1 3)", 4)
    assert pc.contract(sigma).is_identity()
    info = pc.classify(sigma, tau)
    assert info["line"] == 14
    assert info["delta_hd"] == 3
    assert pc.delta(sigma, tau) == 3
    assert pc.delta_ct(sigma, tau) == 0

    report = pc.check_multi_contraction_bound(sigma, tau, 1)
    assert report["applicable"] is False
    assert report["drop"] == 3


def test_prediction_round_trip():
    sigma = pc.Permutation.identity(5)
    tau = pc.parse_permutation("(0 1 2)", 5)
    pred = pc.predict_decomposition(sigma, tau)
    assert pred["chi"] == []
    assert pred["rho"] == [[0, 1, 2]]


def test_groups_and_distance():
    G = pc.agl1(7)
    assert len(G) == 42
    assert pc.min_hamming_distance(G) == 6
    assert pc.group_min_distance(G) == 6
    assert len(pc.pgl2(5)) == 120
    assert len(pc.agammal1(9)) == 144

    # one contraction drops hd by at most 3
    contracted, report = pc.contract_array(G, 1, True)
    assert report["size_after"] == 42
    assert report["min_hd_after"] >= 3


def test_field_arithmetic():
    F = pc.FieldSpec(2, 2)
    assert F.modulus == [1, 1, 1]
    assert F.mul(2, 2) == 3
    assert F.frobenius(2, 1) == 3


def test_certificates():
    cert = pc.certify_agl(8, 1)
    assert cert["status"] == "verified"
    assert cert["size"] == 56
    assert cert["min_hd_exact"] >= 5

    failed = pc.certify_agl(7, 1)
    assert failed["status"] == "hypothesis_failed"

    pgl = pc.certify_pgl_two_contractions(8)
    assert pgl["status"] == "verified"
    assert pgl["size"] == 504
    assert pgl["companion"]["size"] == 72


def test_example_arrays():
    members = [
        pc.Permutation.identity(5),
        pc.parse_permutation("(1 4)", 5),
        pc.parse_permutation("(0 1 2)", 5),
        pc.parse_permutation("(1 2 3)", 5),
    ]
    P = pc.make_array(5, members)
    assert pc.min_hamming_distance(P) == 2
    contracted, report = pc.contract_array(P, 1, True)
    assert report["size_after"] == 3
    assert report["min_hd_after"] == 3
