import json
import os
from fractions import Fraction

import pytest

import chenlie as cl


def test_pairing_values():
    a = cl.infer_alphabet(["[y,[x,z]]", "[z,[x,y]]"])
    u = cl.LieTree("[y,[x,z]]", a).expand()
    v = cl.LieTree("[z,[x,y]]", a).expand()
    assert str(cl.inner(u, v)) == "2"


def test_shuffle_and_ree():
    a = cl.parse_alphabet("x,y")
    s = cl.shuffle(cl.NcPoly("x", a), cl.NcPoly("y", a))
    assert s == cl.NcPoly("xy + yx", a)
    assert not cl.is_lie(s)
    assert cl.is_lie(cl.NcPoly("[x,[x,y]]", a))


def test_decompose_and_hall():
    a = cl.parse_alphabet("x,y")
    p = cl.NcPoly("xxy", a)
    lie, sh = cl.decompose(p)
    assert lie + sh == p
    assert cl.is_lie(lie)
    assert [str(t) for t in cl.hall_basis(a, 3)] == ["[x,[x,y]]", "[y,[x,y]]"]
    assert cl.witt_dimension(2, 4) == 3


def test_groups():
    g = cl.GroupWord("((x,y),x)")
    assert cl.lcs_degree(g, 5) == 3
    assert cl.lcs_degree(cl.GroupWord("x x^-1"), 3) == "identity"
    assert cl.lcs_degree(g, 2) == "exceeds"
    lead = cl.phi_inverse(g)
    assert lead == cl.NcPoly("[[x,y],x]", g.alphabet)
    assert (g * g.inverse()).is_identity()


def test_canonical_model():
    g = cl.GroupWord("x1")
    om = cl.NcPoly("x1x1x1x1x1x1", g.alphabet)
    assert str(cl.evaluate_canonical(g, om)) == str(Fraction(1, 720))
    assert cl.evaluate_canonical(cl.GroupWord("(x1,x2)"), cl.NcPoly("x1 + x2")).is_zero()


def test_melnikov():
    assert str(cl.ck(2)) == "w2 - w1"
    assert cl.ck(4) == cl.ck_closed_form(4)
    assert cl.example_ex_m5().is_zero()
    forms = cl.parse_alphabet("o1,o2")
    conn = cl.Connection.diagonal(forms, ["w1", "w2"])
    assert str(cl.derive(conn, cl.NcPoly("o1", forms))) == "{w1/t}*o1"


def test_monodromy():
    assert cl.picard_lefschetz(1, [0, 1, 0, 0]) == [1, 1, 0, 0]
    op, k = cl.reduce_to_alpha([1, 2, -1, 0, 3, 1])
    assert k != 0
    assert cl.apply_operator(op, [1, 2, -1, 0, 3, 1]) == [0, 0, 0, 0, 0, k]


def test_errors():
    with pytest.raises(cl.ParseError):
        cl.NcPoly("[x,y")
    with pytest.raises(cl.AlphabetMismatch):
        cl.NcPoly("x", cl.parse_alphabet("x")) + cl.NcPoly("y", cl.parse_alphabet("y"))
    with pytest.raises(cl.DomainError):
        cl.ck(1)
    assert issubclass(cl.ParseError, cl.Error)


def test_cli_matches_golden():
    code, out, err = cl.run_cli(["pair", "[y,[x,z]]", "[z,[x,y]]", "--json"])
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["command"] == "pair"
    golden = os.environ.get("CHENLIE_GOLDEN_DIR")
    if golden:
        with open(os.path.join(golden, "pair.json")) as f:
            assert f.read() == out
    code, out, _ = cl.run_cli(["expand", "-"], "[x,y]")
    assert code == 0 and out == "xy - yx\n"
    assert cl.run_cli(["nope"])[0] == 2
