import io
import json

from pathalg.cli import main

from conftest import fixture_path


def run_cli(argv):
    import contextlib

    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        status = main(argv)
    return status, out.getvalue()


def test_info_text(capsys):
    status, out = run_cli(["info", fixture_path("six_vertex_bound.quiver")])
    assert status == 0
    assert "dimension: 20" in out


def test_info_json():
    status, out = run_cli(["info", fixture_path("six_vertex_bound.quiver"), "--format", "json"])
    assert status == 0
    payload = json.loads(out)
    assert payload["dimension"] == 20
    assert payload["field"] == "rat"
    assert len(payload["basis"]) == 20
    assert all(len(t) == 4 for t in payload["structure_constants"])


def test_der_dimension_report():
    status, out = run_cli(["der", fixture_path("cospan.quiver"), "--format", "json"])
    assert status == 0
    assert json.loads(out)["dimension"] == 4


def test_lie_dimension_report():
    status, out = run_cli(["lie", fixture_path("cospan.quiver"), "--format", "json"])
    assert status == 0
    assert json.loads(out)["dimension"] == 7


def test_center_and_commutators():
    status, out = run_cli(["center", fixture_path("cospan.quiver"), "--format", "json"])
    assert status == 0 and json.loads(out)["dimension"] == 1
    status, out = run_cli(["commutators", fixture_path("cospan.quiver"), "--format", "json"])
    assert status == 0 and json.loads(out)["dimension"] == 2


def test_check_lie_true_der_false():
    args = ["check", fixture_path("cospan.quiver"), "--map", fixture_path("cospan_lie_map.json")]
    status, out = run_cli(args + ["--kind", "lie"])
    assert status == 0 and out.strip() == "true"
    status, out = run_cli(args + ["--kind", "der"])
    assert status == 0 and out.strip() == "false"


def test_decompose_report():
    status, out = run_cli(
        [
            "decompose",
            fixture_path("cospan.quiver"),
            "--map",
            fixture_path("cospan_lie_map.json"),
            "--format",
            "json",
        ]
    )
    assert status == 0
    payload = json.loads(out)
    assert payload["flags"] == {
        "is_lie": True,
        "d_is_derivation": True,
        "phi_central": True,
        "phi_kills_commutators": True,
        "unique": True,
    }
    assert payload["k"] == {"1": "1", "2": "2", "3": "3"}
    assert payload["d"]["images"]["e_1"] == [["alpha", "-1"]]


def test_peel_report():
    status, out = run_cli(["peel", fixture_path("six_vertex_bound.quiver"), "--format", "json"])
    assert status == 0
    payload = json.loads(out)
    assert payload["ok"] and len(payload["levels"]) == 5


def test_wsub_report():
    status, out = run_cli(["wsub", fixture_path("six_vertex_bound.quiver"), "--format", "json"])
    assert status == 0
    payload = json.loads(out)
    assert payload["full"] and payload["dimension"] == 20


def test_faithful_command():
    status, out = run_cli(
        ["faithful", fixture_path("four_vertex.quiver"), "--idempotent", "e_1+e_2", "--format", "json"]
    )
    assert status == 0
    payload = json.loads(out)
    assert payload["faithful"]["left"]["faithful"] is False
    assert payload["faithful"]["right"]["faithful"] is False


def test_faithful_peel_orientation():
    status, out = run_cli(
        [
            "faithful",
            fixture_path("four_vertex.quiver"),
            "--idempotent",
            "e_2+e_3+e_4",
            "--format",
            "json",
        ]
    )
    assert status == 0
    payload = json.loads(out)
    assert payload["faithful"]["left"]["faithful"] is False
    assert payload["faithful"]["left"]["witness"] == [["e_3", "1"]]


def test_missing_input_file_is_input_error():
    status, _ = run_cli(["info", "/nonexistent/q.quiver"])
    assert status == 1


def test_bad_document_is_input_error(tmp_path):
    bad = tmp_path / "bad.quiver"
    bad.write_text("vertex 1\narrow a 1 9\n")
    status, _ = run_cli(["info", str(bad)])
    assert status == 1


def test_cyclic_document_is_input_error(tmp_path):
    doc = tmp_path / "cyc.quiver"
    doc.write_text("vertex 1 2\narrow a 1 2\narrow b 2 1\n")
    status, _ = run_cli(["info", str(doc)])
    assert status == 1


def test_jordan_over_f2_is_precondition_error():
    status, _ = run_cli(["jordan", fixture_path("cospan.quiver"), "--field", "fp:2"])
    assert status == 2


def test_non_prime_field_is_input_error():
    status, _ = run_cli(["info", fixture_path("cospan.quiver"), "--field", "fp:4"])
    assert status == 1


def test_map_with_unknown_path_is_input_error(tmp_path):
    bad = tmp_path / "bad_map.json"
    bad.write_text(json.dumps({"images": {"e_1": [["nope", "1"]]}}))
    status, _ = run_cli(
        ["check", fixture_path("cospan.quiver"), "--map", str(bad), "--kind", "der"]
    )
    assert status == 1


def test_decompose_non_lie_is_precondition_error(tmp_path):
    bad = tmp_path / "notlie.json"
    bad.write_text(json.dumps({"images": {"e_1": [["e_2", "1"]]}}))
    status, _ = run_cli(
        ["decompose", fixture_path("cospan.quiver"), "--map", str(bad)]
    )
    assert status == 2


def test_verify_small_corpus_passes():
    status, out = run_cli(
        ["verify", "--theorems", "3.4,4.4,3.5,4.3,4.7", "--corpus", "6", "--seed", "3", "--format", "json"]
    )
    assert status == 0
    payload = json.loads(out)
    assert payload["ok"]
    assert payload["results"]["3.4"]["checked"] == 12  # both fields
    assert payload["results"]["3.4"]["passed"] == 12


def test_verify_unknown_check_id_is_input_error():
    status, _ = run_cli(["verify", "--theorems", "9.9", "--corpus", "2"])
    assert status == 1


def test_verify_nonpositive_corpus_is_input_error():
    status, _ = run_cli(["verify", "--corpus", "-3"])
    assert status == 1


def test_faithful_non_idempotent_is_precondition_error():
    status, _ = run_cli(
        ["faithful", fixture_path("cospan.quiver"), "--idempotent", "alpha"]
    )
    assert status == 2


def test_faithful_unknown_path_is_input_error():
    status, _ = run_cli(
        ["faithful", fixture_path("cospan.quiver"), "--idempotent", "e_9"]
    )
    assert status == 1


def test_verify_deterministic_output():
    args = ["verify", "--theorems", "3.4", "--corpus", "4", "--seed", "5", "--format", "json"]
    status1, out1 = run_cli(args)
    status2, out2 = run_cli(args)
    assert status1 == status2 == 0
    assert out1 == out2


def test_json_outputs_are_deterministic():
    args = ["info", fixture_path("six_vertex_bound.quiver"), "--format", "json"]
    _, out1 = run_cli(args)
    _, out2 = run_cli(args)
    assert out1 == out2


def test_over_prime_field_cli():
    status, out = run_cli(
        ["der", fixture_path("cospan.quiver"), "--field", "fp:5", "--format", "json"]
    )
    assert status == 0
    assert json.loads(out)["dimension"] == 4
