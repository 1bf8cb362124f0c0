import io
import json

import pytest

from simultaneity.cli import EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, run
from simultaneity.scalars import Rat
from simultaneity.serialize import decode_automorphism, decode_event, decode_relation, decode_scalar

TIME_AXIS_JSON = '{"origin":["0","0","0","0"],"direction":["1","0","0","0"]}'
SLOW_CONE = '{"kind":"conic","v":"1/3","sign":"+"}'


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def worldline_file(tmp_path):
    path = tmp_path / "timeaxis.json"
    path.write_text(TIME_AXIS_JSON)
    return str(path)


def test_radar_example(worldline_file):
    code, text = call("radar", "--worldline", worldline_file, "--event", '["3","1","0","0"]')
    assert code == EXIT_OK
    assert json.loads(text) == {"t1": "2", "t2": "4", "t": "3", "projection": ["3", "0", "0", "0"]}
    assert decode_event(json.loads(text)["projection"]) == decode_event(["3", "0", "0", "0"])


def test_relation_example(tmp_path):
    pairs = tmp_path / "pairs.json"
    pairs.write_text('[[["3","1","0","0"],["3","0","2","0"]]]')
    code, text = call("relation", "--relation", '{"kind":"sigma"}', "--pairs", str(pairs))
    doc = json.loads(text)
    assert code == EXIT_OK and doc["related"] is True
    assert doc["results"][0]["representatives"] == ["3", "3"]
    assert decode_relation(doc["relation"]).kind == "sigma"


def test_relation_reports_each_pair():
    pairs = '[[["3","1","0","0"],["6","2","0","0"]],[["3","1","0","0"],["4","1","0","0"]]]'
    code, text = call("relation", "--relation", SLOW_CONE, "--pairs", pairs)
    doc = json.loads(text)
    assert [r["related"] for r in doc["results"]] == [True, False]
    assert doc["related"] is False


def test_soundness_example():
    code, text = call("soundness", "--relation", '{"kind":"conic","v":"1/2","sign":"+"}',
                      "--seed", "42", "--samples", "10000")
    doc = json.loads(text)
    assert code == EXIT_OK
    assert doc["BY"]["pass"] is False
    e1, e2 = (decode_event(w) for w in doc["BY"]["witness"])
    assert e1 != e2
    assert (doc["seed"], doc["samples"]) == (42, 10000)


def test_invariance_reports_counterexample():
    aut = '{"kind":"time_reflection","center":"0"}'
    code, text = call("invariance", "--relation", SLOW_CONE, "--automorphism", aut,
                      "--seed", "1", "--samples", "200")
    doc = json.loads(text)
    assert code == EXIT_OK and doc["counterexample"] is not None
    assert decode_automorphism(doc["automorphism"]).kind == "time_reflection"
    for e in doc["counterexample"]["images"]:
        decode_event(e)
    code, _ = call("invariance", "--relation", SLOW_CONE, "--automorphism", aut,
                   "--seed", "1", "--samples", "200", "--expect-invariant")
    assert code == EXIT_VIOLATION


def test_invariance_clean():
    code, text = call("invariance", "--relation", '{"kind":"sigma"}',
                      "--automorphism", '{"kind":"scale","center":"0","alpha":"2"}',
                      "--samples", "100", "--expect-invariant")
    assert code == EXIT_OK and json.loads(text)["counterexample"] is None


def test_lattice_csv_and_svg(tmp_path):
    svg = tmp_path / "grid.svg"
    code, text = call("lattice", "--depth", "2", "--svg", str(svg))
    assert code == EXIT_OK
    lines = text.splitlines()
    assert lines[0] == "m,k,t,x,y,z"
    assert "1,1,3,1,0,0" in lines
    assert b'id="x_1_1"' in svg.read_bytes()


def test_lattice_membership():
    code, text = call("lattice", "--member", '["6","2","0","0"]', "--v", "1/3")
    doc = json.loads(text)
    assert code == EXIT_OK
    assert doc["verdict"] == "Member" and doc["index"] == [1, 1]
    assert decode_scalar(doc["scale"]) == Rat(2)
    code, text = call("lattice", "--member", '["4","1","0","0"]', "--v", "1/3")
    assert json.loads(text) == {"v": "1/3", "y": ["4", "1", "0", "0"], "verdict": "NotMember"}


def test_audit_passes():
    code, text = call("audit", "--seed", "3", "--samples", "40")
    doc = json.loads(text)
    assert code == EXIT_OK
    assert all(s["pass"] for s in doc["suites"].values())


@pytest.mark.parametrize("argv, field", [
    (["radar", "--event", '["3","1","0"]'], "event"),
    (["radar", "--event", '["3","1","0","0"]', "--worldline",
      '{"origin":["0","0","0","0"],"direction":["1","2","0","0"]}'], "worldline.direction"),
    (["relation", "--relation", '{"kind":"conic","v":"-1","sign":"+"}', "--pairs", "[]"], "relation.v"),
    (["soundness", "--relation", '{"kind":"sigma"}', "--samples", "0"], "samples"),
    (["soundness", "--relation", '{"kind":"sigma"}', "--seed", "-4"], "seed"),
    (["invariance", "--relation", '{"kind":"sigma"}', "--automorphism", '{"kind":"boost"}'],
     "automorphism.kind"),
    (["lattice", "--null", '["2","1","0","0"]'], "null"),
    (["lattice", "--svg", "/dev/null", "--viewport", "0,0,0,1"], "viewport"),
    (["lattice", "--member", '["1","1","0","0"]'], "v"),
    (["radar", "--event", "/nonexistent/event.json"], "event"),
    (["bogus"], "arguments"),
])
def test_input_errors_exit_2_and_name_the_field(argv, field, capsys):
    code, text = call(*argv)
    assert code == EXIT_INPUT and text == ""
    assert field in capsys.readouterr().err
