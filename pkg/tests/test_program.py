import json

import pytest

from surgerykit.errors import ScriptError
from surgerykit.program import parse_program, run_program


def run(text: str, **kw):
    return run_program(parse_program(text), **kw)


def test_parse_two_statement_program():
    p = parse_program('link K = pd "X(1,4,2,3) X(3,2,4,1)"; print components(K);')
    assert len(p.statements) == 2
    assert p.statements[0].kind == "bind"
    assert p.statements[1].kind == "print"


def test_parse_empty_program():
    assert parse_program("").statements == []
    assert parse_program("# only a comment\n").statements == []


def test_parse_error_has_position():
    with pytest.raises(ScriptError) as exc:
        parse_program('link K = pd "O"')  # missing semicolon
    assert exc.value.line == 1


def test_framing_arity_is_a_positioned_error():
    report = run('link K = pd "X(1,4,2,3) X(3,2,4,1)";\nframed F = K with framing [1];\n')
    assert not report.ok
    err = report.errors[0]
    assert err["stmt"] == 1
    assert err["line"] == 2
    assert "arity" in err["message"]


def test_unbound_name_error():
    report = run("print components(K);")
    assert not report.ok
    assert "unbound" in report.errors[0]["message"]


def test_type_mismatch_error():
    report = run('surface S = [0];\nprint lk(S, 0, 1);')
    assert not report.ok
    assert "expected link" in report.errors[0]["message"]


def test_declared_type_checked():
    report = run('surface S = [0];\nlink L = S;\n'.replace("link L = S", "link L = S"))
    assert not report.ok
    assert "declared" in report.errors[0]["message"]


def test_basic_queries():
    report = run(
        'link H = pd "X(1,4,2,3) X(3,2,4,1)";\n'
        "print components(H);\n"
        "print lk(H, 0, 1);\n"
        "print bracket(H);\n"
    )
    assert report.ok
    values = [entry["value"] for entry in report.results.values()]
    assert values[0] == 2
    assert values[1] in (1, -1)
    assert values[2] == "-A^4 - A^-4"


def test_dehn_pipeline():
    report = run(
        'link U = pd "O";\n'
        "framed F = U with framing [5];\n"
        "surgery M = dehn(F);\n"
        "print h1(M);\n"
        "print order(M, max=100);\n"
        "print presentation(M);\n"
    )
    assert report.ok
    values = list(report.results.values())
    assert values[0]["value"] == {"rank": 0, "torsion": [5]}
    assert values[1]["value"] == 5
    assert values[2]["value"] == {"generators": 1, "relators": [[1, 1, 1, 1, 1]]}


def test_order_uses_default_bound():
    text = 'link U = pd "O";\nframed F = U with framing [0];\nsurgery M = dehn(F);\nprint order(M);\n'
    report = run(text, max_cosets=50)
    assert report.ok
    assert list(report.results.values())[0]["value"] == "exceeded"


def test_reconnect_statement():
    report = run(
        'link D = pd "X(1,2,4,1) X(3,4,2,3)";\n'
        "link R = reconnect(D, 1, 3, cross);\n"
        "print components(R);\n"
    )
    assert report.ok
    assert list(report.results.values())[0]["value"] == 2


def test_manifold_statements():
    report = run(
        "manifold M = S3;\n"
        "manifold W = join_self(M, c=0);\n"
        "print h1(W);\n"
        "manifold B = unjoin(W, c=0);\n"
        "print h1(B);\n"
        "manifold L = L(5,1);\n"
        "manifold J = join(L, W);\n"
        "print h1(J);\n"
    )
    assert report.ok
    values = [entry["value"] for entry in report.results.values()]
    assert values[0] == {"rank": 1, "torsion": []}
    assert values[1] == {"rank": 0, "torsion": []}
    assert values[2] == {"rank": 1, "torsion": [5]}


def test_surface_statements():
    report = run(
        "surface S = [0, 0];\n"
        "surface J = join(S, 0, 1);\n"
        "print genus(J);\n"
        "surface T = join(J, 0, 0);\n"
        "print chi(T);\n"
        "surface C = cut(T, 0, nonsep);\n"
        "print genus(C);\n"
    )
    assert report.ok
    values = [entry["value"] for entry in report.results.values()]
    assert values == [[0], 0, [0]]


def test_mesh_statements(tmp_path):
    report = run(
        "mesh M = levelset(dim=2, index=1, t=-0.5, res=16);\n"
        "print counts(M);\n"
        'emit M -> "saddle.obj";\n'
        'emit M -> "saddle.json";\n'
        "mesh-seq H = handle(dim=2, index=1, steps=5, res=16);\n"
        "print counts(H);\n"
        'emit H -> "slices";\n',
        out_root=tmp_path,
    )
    assert report.ok
    values = [entry["value"] for entry in report.results.values()]
    assert values[0] == 2
    assert values[1] == [2, 2, 1, 2, 2]
    assert (tmp_path / "saddle.obj").exists()
    assert (tmp_path / "saddle.json").exists()
    slices = sorted((tmp_path / "slices").iterdir())
    assert [p.name for p in slices] == [f"slice_{k:02d}.obj" for k in range(5)]
    assert len(report.emitted) == 7
    for entry in report.emitted:
        assert len(entry["sha256"]) == 64


def test_absolute_emit_path_rejected(tmp_path):
    report = run('mesh M = levelset(dim=2, index=1, t=-0.5, res=16);\nemit M -> "/abs.obj";\n',
                 out_root=tmp_path)
    assert not report.ok
    assert "relative" in report.errors[0]["message"]


def test_execution_stops_at_first_error():
    report = run("print components(A);\nprint components(B);\n")
    assert len(report.errors) == 1
    assert report.errors[0]["stmt"] == 0


def test_report_bytes_deterministic(tmp_path):
    text = (
        'link H = pd "X(1,4,2,3) X(3,2,4,1)";\n'
        "print bracket(H);\n"
        "mesh M = levelset(dim=3, index=2, t=0.5, res=16);\n"
        'emit M -> "m.obj";\n'
    )
    a = run(text, out_root=tmp_path / "a", script_name="x.srg").to_json_bytes()
    b = run(text, out_root=tmp_path / "b", script_name="x.srg").to_json_bytes()
    assert a == b
    payload = json.loads(a)
    assert payload["schema"] == 1
    assert payload["script"] == "x.srg"


def test_lexer_rejects_garbage():
    with pytest.raises(ScriptError):
        parse_program("link K = pd @;")
