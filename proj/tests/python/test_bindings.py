import os

import pytest

import uchain

DATA = os.environ.get("UCHAIN_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def read(name):
    with open(os.path.join(DATA, name)) as f:
        return f.read()


def identity_map(complex_text):
    gens = [line.split()[1] for line in complex_text.splitlines() if line.startswith("gen ")]
    lines = ["map F", "source C", "target C", "degree 0"] + [f"f {g} {g} 1" for g in gens]
    return "\n".join(lines) + "\n"


def test_classify_and_homology():
    cx = read("twostep3.cx")
    assert uchain.classify(cx)["two_steps"] == [{"grading_a": 1, "exponent": 3}]
    plus = uchain.homology(cx, "plus")
    assert plus["f2_dimension"] == 3
    assert uchain.homology(cx, "red-minus")["torsion"] == [{"grading": 0, "exponent": 3}]


def test_two_step_identity_parity():
    for n in range(1, 20):
        cx = uchain.realize(two_steps=[(1, n)])
        assert uchain.delta_quantity(cx, identity_map(cx)) == n % 2
        assert uchain.delta_quantity(cx, identity_map(cx), map_first=True) == n % 2
        assert uchain.lefschetz(cx, identity_map(cx))["value"] == n % 2


def test_verify_and_mutation():
    assert uchain.verify(seed=5, trials=50)["failures"] == []
    assert uchain.verify(seed=5, trials=50, mutate=True)["failures"]


def test_les_and_mapping_torus():
    report = uchain.les_check(uchain.realize(one_steps=[0], two_steps=[(1, 2)]))
    assert report["exact"] and report["stable"]
    assert uchain.mapping_torus(read("circle.cx"), read("circle_id.map")) == {0: 1, 1: 2, 2: 1}


def test_canonical_text_round_trip():
    failures = uchain.verify(seed=2, trials=30, mutate=True)["failures"]
    for f in failures:
        text = f["complex"]
        assert uchain.canonical_text(text) == text
        assert uchain.classify(uchain.canonical_text(text)) == uchain.classify(text)


def test_errors_carry_kind():
    with pytest.raises(uchain.UChainError) as info:
        uchain.classify(read("bad_square.cx"))
    assert info.value.args[0] == "DifferentialNotSquareZero"
    with pytest.raises(uchain.UChainError) as info:
        uchain.classify("complex C\ngen a one\n")
    assert info.value.args[0] == "ParseError"
    with pytest.raises(uchain.UChainError):
        uchain.verify(seed=0, trials=1, max_rank=1)
