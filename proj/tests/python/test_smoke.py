import pytest

import evoalg


def chain(n, field="Q"):
    rows = [["1" if c == r + 1 else "0" for c in range(n)] for r in range(n)]
    return evoalg.Algebra(field, rows)


def test_type_and_label():
    e = chain(4)
    assert e.dim == 4
    assert e.type_vector() == [1, 1, 1, 1]
    assert e.classify().startswith("d4:[1,1,1,1]:")
    assert e.decompose()[0] == "Indecomposable"


def test_text_round_trip():
    e = evoalg.Algebra.from_text("field GF 13\ndim 2\nrow 0 5\nrow 0 0\n")
    assert e.field == "GF 13"
    assert evoalg.Algebra.from_text(e.to_text()) == e


def test_dot_labels_weights():
    e = evoalg.Algebra("Qi", [["0", "1", "i"], ["0", "0", "0"], ["0", "0", "0"]])
    assert '1 -> 3 [label="i"];' in e.dot()
    assert "1 -> 2;" in e.dot()


def test_orbit_members_share_labels_and_witness():
    a = evoalg.family("ubg", ["1", "1", "1"], g=["4", "0", "1"], field="GF 13")
    b = evoalg.family("ubg", ["1", "1", "1"], g=["10", "0", "1"], field="GF 13")
    assert a.classify() == b.classify()
    m = evoalg.witness_isomorphism(a, b)
    assert m is not None
    assert evoalg.verify_hom(a, b, m)


def test_oracles():
    a = evoalg.family("ub", ["1", "1"], field="GF 5")
    b = evoalg.family("ub", ["2", "2"], field="GF 5")
    m = evoalg.exhaustive_iso(a, b)
    assert m is not None and evoalg.verify_hom(a, b, m)
    assert evoalg.exhaustive_iso(a, chain(3, "GF 5")) is None
    assert evoalg.randomized_iso(a, b, trials=0) is None


def test_errors_carry_codes():
    with pytest.raises(evoalg.EvoError) as info:
        evoalg.Algebra.from_text("field GF 13\ndim 1\nrow i\n")
    assert info.value.code == "SyntaxError"
    with pytest.raises(evoalg.EvoError) as info:
        evoalg.Algebra("Q", [["1"]]).classify()
    assert info.value.code == "NotNilpotent"
    with pytest.raises(ValueError):
        evoalg.family("ub", ["0"])
