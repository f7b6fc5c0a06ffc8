import json

import numpy as np
import pytest

from hilbert_lattice.builders import corpus
from hilbert_lattice.cli import main
from hilbert_lattice.errors import DuplicatePair, IncompleteInvolution, ParseError
from hilbert_lattice.fileformat import parse_lattice_file, parse_lattice_text, serialize
from hilbert_lattice.ortho import OrthoLattice

DIAMOND = """# diamond
lattice diamond
elem 0 a b 1
cover 0 a
cover 0 b
cover a 1
cover b 1
ortho a b
end
"""

L2_FILE = """lattice L2
elem 0 x 1-x y 1-y 1
cover 0 x
cover 0 1-x
cover 0 y
cover 0 1-y
cover x 1
cover 1-x 1
cover y 1
cover 1-y 1
ortho x 1-x
ortho y 1-y
end
"""


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.fixture
def write(tmp_path):
    def _write(text, name="l.lat"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def test_parse_diamond():
    L, perp = parse_lattice_file(DIAMOND)
    assert L.n == 4 and len(L.covers()) == 4
    assert perp == {"0": "1", "a": "b", "b": "a", "1": "0"}


def test_parse_without_ortho():
    L, perp = parse_lattice_file(DIAMOND.replace("ortho a b\n", ""))
    assert perp is None


@pytest.mark.parametrize("text, error", [
    (DIAMOND.replace("ortho a b", "ortho a b\northo a 1"), IncompleteInvolution),
    (DIAMOND.replace("ortho a b", "ortho a b\northo b a"), DuplicatePair),
    (DIAMOND.replace("cover b 1", "cover b 1\ncover b 1"), DuplicatePair),
    (DIAMOND.replace("end\n", ""), ParseError),
    (DIAMOND.replace("cover 0 a", "cover 0 c"), ParseError),
    (DIAMOND.replace("lattice diamond\n", ""), ParseError),
    (DIAMOND + "elem z\n", ParseError),
    (DIAMOND.replace("cover 0 a", "covers 0 a"), ParseError),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_lattice_file(text)


def test_parse_error_carries_line():
    with pytest.raises(ParseError) as exc:
        parse_lattice_text(DIAMOND.replace("cover 0 a", "bogus"))
    assert exc.value.line == 4


def test_ortho_must_cover_every_element():
    with pytest.raises(IncompleteInvolution):
        parse_lattice_file(L2_FILE.replace("ortho y 1-y\n", ""))


def test_round_trip_on_corpus():
    for name, L in corpus().items():
        M, _ = parse_lattice_file(serialize(L, name))
        assert M.labels == L.labels and np.array_equal(M.order, L.order), name
        if isinstance(L, OrthoLattice):
            assert np.array_equal(M.perp_map, L.perp_map), name
        assert serialize(M) == serialize(L, name)


def test_L2_file_round_trips():
    L, _ = parse_lattice_file(L2_FILE)
    assert serialize(L) == L2_FILE


def test_check_L2(capsys, write):
    code, out = run(capsys, "check", write(L2_FILE), "--json")
    report = json.loads(out)
    assert code == 0
    assert report["type_tag"] == "I_2" and report["violations"] == []
    assert report["dimensions"] == {"0": "0/1", "x": "1/2", "1-x": "1/2", "y": "1/2", "1-y": "1/2", "1": "1/1"}
    assert report["center"] == ["0", "1"] and report["minimal"] == ["x", "1-x", "y", "1-y"]
    assert report["regular_relations_found"] == "not-enumerated"


def test_check_pentagon(capsys, write, tmp_path):
    code, text = run(capsys, "gen", "pentagon")
    code, out = run(capsys, "check", write(text), "--json")
    report = json.loads(out)
    assert code == 1
    assert report["violations"] == [{"law": "modular", "witness": ["x", "z", "y"]}]
    assert "dimensions" not in report


def test_check_non_lattice_is_a_violation(capsys, write):
    from hilbert_lattice.builders import TWO_GENERATOR_COVERS, TWO_GENERATOR_ELEMENTS
    text = "lattice drawn\nelem " + " ".join(TWO_GENERATOR_ELEMENTS) + "\n"
    text += "".join(f"cover {a} {b}\n" for a, b in TWO_GENERATOR_COVERS) + "end\n"
    code, out = run(capsys, "check", write(text), "--json")
    report = json.loads(out)
    assert code == 1 and report["flags"]["lattice"] is False
    assert report["violations"][0]["law"] == "lattice"


def test_check_malformed(capsys, write):
    assert main(["check", write("lattice x\nelem 0\nwat\nend\n")]) == 2
    assert main(["check", "/nonexistent/file.lat"]) == 2


def test_gen_lm_emits_six_elements(capsys):
    code, out = run(capsys, "gen", "lm", "--m", "2")
    L, perp = parse_lattice_file(out)
    assert code == 0 and L.n == 6 and perp["l1"] == "1-l1"


def test_regular_enumerate(capsys, write):
    code, out = run(capsys, "regular", write(L2_FILE), "--enumerate", "--json")
    data = json.loads(out)
    assert code == 0 and data["regular_relations_found"] == 1
    assert data["equal_to_perspectivity"] == [True]


def test_regular_enumerate_refuses_large(capsys, write):
    _, text = run(capsys, "gen", "lm", "--m", "8")
    assert main(["regular", write(text), "--enumerate"]) == 2


def test_regular_flags_boolean(capsys, write):
    _, text = run(capsys, "gen", "boolean", "--atoms", "2")
    code, out = run(capsys, "regular", write(text), "--json")
    assert code == 1 and json.loads(out)["perspectivity"]["failures"][0]["law"] == "comparable"


def test_decompose(capsys, write):
    _, text = run(capsys, "gen", "product", "--factors", "boolean:1,lm:2")
    code, out = run(capsys, "decompose", write(text), "--json")
    assert code == 0
    assert json.loads(out) == {"boolean_exponent": 1, "element_count": 12, "name": "product", "sum_sizes": [2]}
    _, text = run(capsys, "gen", "hexagon")
    assert main(["decompose", write(text, "h.lat")]) == 2


def test_subspace_command_is_deterministic(capsys):
    code, a = run(capsys, "subspace", "--dim", "3", "--trials", "5", "--seed", "42", "--json")
    _, b = run(capsys, "subspace", "--dim", "3", "--trials", "5", "--seed", "42", "--json")
    assert code == 0 and a == b and json.loads(a)["ok"]


def test_argument_validation():
    assert main(["subspace", "--dim", "7"]) == 2
    assert main(["subspace", "--seed", str(2 ** 64)]) == 2
    assert main(["subspace", "--suite", "everything"]) == 2
    assert main(["gen", "product"]) == 2
