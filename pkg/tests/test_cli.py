import json
import os

from ncalg.cli import main

DATA = os.path.join(os.path.dirname(__file__), "..", "src", "ncalg", "data")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_make_algebra_roundtrips(tmp_path, capsys):
    path = tmp_path / "C6.pres"
    code, _, _ = run(capsys, "make-algebra", "--family", "C", "--m", "6",
                     "--out", str(path))
    assert code == 0
    from ncalg.parser import parse_presentation

    pres = parse_presentation(path.read_text())
    assert pres.ngens == 18 and len(pres.relations) == 22


def test_make_complex_and_verify(tmp_path, capsys):
    pres_path = tmp_path / "C5.pres"
    maps_path = tmp_path / "C5.maps"
    assert run(capsys, "make-algebra", "--family", "C", "--m", "5",
               "--out", str(pres_path))[0] == 0
    assert run(capsys, "make-complex", "--family", "C", "--m", "5",
               "--out", str(maps_path))[0] == 0
    code, out, _ = run(capsys, "verify", "--input", str(pres_path),
                       "--complex", str(maps_path), "--jmax", "6",
                       "--maxdeg", "6")
    assert code == 0
    assert "complex (all composites zero): ok" in out
    assert "exactness through degree 6: ok" in out


def test_verify_detects_corruption(tmp_path, capsys):
    pres_path = tmp_path / "B.pres"
    maps_path = tmp_path / "B.maps"
    run(capsys, "make-algebra", "--family", "B", "--out", str(pres_path))
    run(capsys, "make-complex", "--family", "B", "--out", str(maps_path))
    text = maps_path.read_text()
    corrupted = text.replace("n*p | n*p | -n*p", "n*p | n*p | n*p")
    assert corrupted != text
    maps_path.write_text(corrupted)
    code, out, _ = run(capsys, "verify", "--input", str(pres_path),
                       "--complex", str(maps_path), "--jmax", "6",
                       "--maxdeg", "6")
    assert code == 1
    assert "FAIL" in out


def test_gb_parse_diagnostics_exit_2(tmp_path, capsys):
    bad = tmp_path / "nonsense.pres"
    bad.write_text("gens n p\nrel n*p - q*q*q;\n")
    code, _, err = run(capsys, "gb", "--input", str(bad), "--maxdeg", "4")
    assert code == 2
    assert "line" in err and "col" in err


def test_hilbert_b(capsys):
    code, out, _ = run(capsys, "hilbert", "--family", "B", "--maxdeg", "3")
    assert code == 0
    assert out.strip() == "1 13 155 1840"


def test_hilbert_csv(capsys):
    code, out, _ = run(capsys, "hilbert", "--family", "B", "--maxdeg", "2",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["degree,dim", "0,1", "1,13", "2,155"]


def test_resolve_json_deterministic(capsys):
    argv = ["resolve", "--family", "B", "--imax", "4", "--jmax", "6",
            "--format", "json"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert [4, 5, 1] in payload["betti"]
    assert payload["metadata"]["order"] == "deglex"
    assert payload["koszulity"]["not_koszul"] is True


def test_resolve_text_table(capsys):
    code, out, _ = run(capsys, "resolve", "--family", "B", "--imax", "5",
                       "--jmax", "8")
    assert code == 0
    assert "i\\j" in out
    assert "not Koszul" in out


def test_gb_sidecar(tmp_path, capsys):
    side = tmp_path / "side.json"
    out_file = tmp_path / "basis.txt"
    code, _, _ = run(capsys, "gb", "--family", "B", "--maxdeg", "5",
                     "--out", str(out_file), "--sidecar", str(side))
    assert code == 0
    payload = json.loads(side.read_text())
    assert payload["complete_through"] == 5
    assert payload["dims"][:3] == [1, 13, 155]
    assert len(payload["leading_words"]) == 18
    assert "rel " in out_file.read_text()


def test_ext_gens_b(capsys):
    code, out, _ = run(capsys, "ext-gens", "--family", "B", "--imax", "5",
                       "--jmax", "8", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["new_generators"] == {"1,1": 13, "4,5": 1}


def test_paper_check_m4_rejected(capsys):
    code, _, err = run(capsys, "paper-check", "--m", "4")
    assert code == 2
    assert "m >= 5" in err


def test_paper_check_prose_variant_flags_hilbert(capsys):
    code, out, _ = run(capsys, "paper-check", "--m", "5",
                       "--b-variant", "prose")
    assert code == 1
    assert "FAIL  B: Hilbert series" in out


def test_bad_bounds_rejected(capsys):
    code, _, err = run(capsys, "resolve", "--family", "B", "--imax", "5",
                       "--jmax", "3")
    assert code == 2
    assert "bounds" in err


def test_field_q_smoke(capsys):
    code, out, _ = run(capsys, "hilbert", "--family", "B", "--field", "q",
                       "--maxdeg", "2")
    assert code == 0
    assert out.strip() == "1 13 155"


def test_field_env_var_default(capsys, monkeypatch):
    monkeypatch.setenv("NCALG_FIELD", "p:101")
    code, out, _ = run(capsys, "hilbert", "--family", "B", "--maxdeg", "2",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["metadata"]["field"] == "p:101"


def test_betti_alias(capsys):
    code, out, _ = run(capsys, "betti", "--family", "B", "--imax", "5",
                       "--jmax", "8")
    assert code == 0
    assert "i\\j" in out


def test_complex_file_roundtrip():
    from ncalg.complexio import format_complex, parse_complex
    from ncalg.constructions import build_paper_complex

    pc = build_paper_complex("C", 5)
    text = format_complex(pc.maps, header=pc.provenance)
    maps = parse_complex(text, pc.pres)
    assert len(maps) == len(pc.maps)
    for a, b in zip(maps, pc.maps):
        assert a.source.shifts == b.source.shifts
        assert a.rows == b.rows
    assert format_complex(maps) == format_complex(pc.maps)
