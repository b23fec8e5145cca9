from __future__ import annotations

import pytest

import quiv_io as qio
from quiv_entry import main

pytestmark = pytest.mark.usefixtures("isolated_settings")

K01 = "quiver K\nvertex 0\nvertex 1\nedge (0,0) 0 0\nedge (0,1) 0 1\nedge (1,0) 1 0\nedge (1,1) 1 1\n"


@pytest.fixture
def files(tmp_path):
    for name, fname in (("G", "G.qv"), ("H", "H.qv"), ("phi", "phi.qm")):
        (tmp_path / fname).write_text(qio.SAMPLES[name], encoding="utf-8")
    (tmp_path / "K.qv").write_text(K01, encoding="utf-8")
    (tmp_path / "I2.qv").write_text("vertex a\nvertex b\n", encoding="utf-8")
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_complete(capsys):
    code, out, _ = run(capsys, "construct", "complete", "0", "1")
    assert code == 0
    assert out == K01


def test_construct_variants(capsys):
    assert run(capsys, "construct", "empty")[1] == "quiver I\n"
    code, out, _ = run(capsys, "construct", "bouquet", "e", "f", "--name", "Bq")
    assert code == 0
    assert out == "quiver Bq\nvertex 1\nedge e 1 1\nedge f 1 1\n"
    code, _, err = run(capsys, "construct", "matching", "a b")
    assert code == 2 and err.startswith("error:")
    code, _, err = run(capsys, "construct", "matching", "a,b")
    assert code == 2


def test_sample(capsys):
    assert run(capsys, "sample", "H")[1] == qio.SAMPLES["H"]


def test_validate(capsys, files):
    code, out, _ = run(capsys, "validate", files / "phi.qm")
    assert (code, out) == (0, "valid: G -> H\n")


def test_validate_broken_square(capsys, files):
    broken = files / "broken.qm"
    broken.write_text(
        "dom G.qv\ncod G.qv\nvmap 0 -> 0\nvmap 1 -> 1\nemap e -> f\nemap f -> f\nemap g -> g\n",
        encoding="utf-8",
    )
    code, out, _ = run(capsys, "validate", broken)
    assert code == 1
    assert out.startswith("invalid:") and "edge 'e'" in out


def test_hom_count(capsys, files):
    code, out, _ = run(capsys, "hom", "--count", files / "I2.qv", files / "G.qv")
    assert (code, out) == (0, "4\n")
    assert run(capsys, "hom", "--count", files / "G.qv", files / "K.qv")[1] == "4\n"


def test_hom_listing(capsys, files):
    code, out, _ = run(capsys, "hom", files / "G.qv", files / "H.qv")
    assert code == 0
    assert out.count("# hom ") == 8
    assert out.startswith("# hom 1\nvmap 0 -> 2\nvmap 1 -> 2\nemap e -> h\nemap f -> h\nemap g -> h\n")


def test_factorize(capsys, files):
    (files / "phi.qf").write_text("map e -> h\nmap f -> i\nmap g -> i\n", encoding="utf-8")
    code, out, _ = run(capsys, "factorize", "coreflect-e", files / "G.qv", files / "phi.qf")
    assert code == 0
    assert "emap e -> h\n" in out and out.endswith("triangle holds\nuniqueness 1\n")

    (files / "pick.qf").write_text("map a -> 0\nmap b -> 1\n", encoding="utf-8")
    code, out, _ = run(capsys, "factorize", "reflect-v", files / "G.qv", files / "pick.qf", "--no-certify")
    assert code == 0
    assert out == "vmap a -> 0\nvmap b -> 1\ntriangle holds\n"


def test_factorize_wrong_carrier(capsys, files):
    (files / "bad.qf").write_text("map x -> 0\n", encoding="utf-8")
    code, _, err = run(capsys, "factorize", "coreflect-v", files / "G.qv", files / "bad.qf")
    assert code == 2 and "error:" in err


def test_laws_small(capsys):
    code, out, _ = run(capsys, "laws", "--max-set", "1", "--max-v", "1", "--max-e", "1", "--jobs", "2")
    assert code == 0
    for subject in ("Quiv", "I-V", "M-E", "V-K", "E-B"):
        assert f"{subject}: PASS\n" in out
    assert "FAIL" not in out


def test_laws_default_catalogues(capsys):
    code, out, _ = run(capsys, "laws", "--max-set", "2", "--max-v", "2", "--max-e", "2")
    assert code == 0
    assert out.count(": PASS\n") == 5


def test_laws_selected(capsys):
    code, out, _ = run(capsys, "laws", "--max-set", "1", "--max-v", "1", "--max-e", "1",
                       "--adjunction", "V-K", "--skip-category")
    assert code == 0
    assert out.startswith("V-K: PASS\n")
    assert "I-V" not in out and "Quiv" not in out


def test_parse_error_exit(capsys, files):
    bad = files / "bad.qv"
    bad.write_text("vertex 0\nedgy e 0 0\n", encoding="utf-8")
    code, _, err = run(capsys, "export-dot", bad)
    assert code == 2
    assert "line 2, column 1" in err


def test_cap_exit(capsys, files):
    code, _, err = run(capsys, "--max-total-pairs", "10", "hom", files / "G.qv", files / "K.qv")
    assert code == 3
    assert "256 > 10" in err


def test_export_dot(capsys, files):
    code, out, _ = run(capsys, "export-dot", files / "H.qv")
    assert code == 0
    assert out == 'digraph "H" {\n  "2";\n  "2" -> "2" [label="h"];\n  "2" -> "2" [label="i"];\n}\n'


def test_catalogue(capsys):
    code, out, _ = run(capsys, "catalogue", "--max-v", "1", "--max-e", "1")
    assert code == 0
    assert out == "quiver q0\n\nquiver q1\nvertex v0\n\nquiver q2\nvertex v0\nedge e0 v0 v0\n"


def test_usage_and_io_errors(capsys, files):
    assert run(capsys, "construct", "bogus")[0] == 2
    assert run(capsys)[0] == 2
    code, _, err = run(capsys, "export-dot", files / "missing.qv")
    assert code == 2 and err.startswith("error:")


def test_construct_rejects_names_outside_document_grammar(capsys):
    code, _, err = run(capsys, "construct", "empty", "a", "--name", "a b")
    assert code == 2 and err.startswith("error:")
    assert run(capsys, "construct", "bouquet", "c#d")[0] == 2


def test_construct_choices_follow_construction_names(capsys):
    from quiv_constructions import CONSTRUCTION_NAMES

    for name in CONSTRUCTION_NAMES.values():
        assert run(capsys, "construct", name)[0] == 0


def test_non_utf8_input_exit(capsys, files):
    bad = files / "bad.qv"
    bad.write_bytes(b"vertex \xff\xfe\n")
    code, _, err = run(capsys, "export-dot", bad)
    assert code == 2
    assert "line 1, column 8" in err and "UTF-8" in err

    (files / "bad.qf").write_bytes(b"map a -> \xff\n")
    code, _, err = run(capsys, "factorize", "reflect-v", files / "G.qv", files / "bad.qf")
    assert code == 2 and "UTF-8" in err

    (files / "bad.qm").write_bytes(b"dom G.qv\ncod \xffH.qv\n")
    code, _, err = run(capsys, "validate", files / "bad.qm")
    assert code == 2 and "line 2, column 5" in err


def test_deeply_nested_labels_exit(capsys, files):
    deep = "(" * 5000 + "a" + ",a)" * 5000
    (files / "deep.qv").write_text(f"vertex {deep}\n", encoding="utf-8")
    code, out, _ = run(capsys, "export-dot", files / "deep.qv")
    assert code == 0 and deep in out

    (files / "broken.qv").write_text("vertex " + "(" * 5000 + "a\n", encoding="utf-8")
    code, _, err = run(capsys, "export-dot", files / "broken.qv")
    assert code == 2 and err.startswith("error:")
