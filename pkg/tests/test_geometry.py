"""Geometry parameter and config-file tests."""

import pytest

from mdkin.geometry import RobotGeometry, load_geometry, save_geometry


def test_defaults():
    g = RobotGeometry()
    assert (g.l, g.l0, g.l1, g.l2, g.l3, g.l4) == (
        400.0, 300.0, 200.0, 150.0, 170.0, 50.0)


def test_positivity_enforced():
    with pytest.raises(ValueError, match="l2"):
        RobotGeometry(l2=-1.0)
    with pytest.raises(ValueError, match="l0"):
        RobotGeometry(l0=0.0)


def test_load_file_with_comments_and_partial_keys(tmp_path):
    p = tmp_path / "geom.cfg"
    p.write_text("# comment line\nl = 410  # inline comment\n\nl4 = 55\n")
    g = load_geometry(p)
    assert g.l == 410.0 and g.l4 == 55.0
    assert g.l1 == 200.0  # unspecified keys keep defaults


def test_load_reports_line_numbers(tmp_path):
    p = tmp_path / "bad.cfg"
    p.write_text("l = 400\nnot a key value line\n")
    with pytest.raises(ValueError, match=r":2:"):
        load_geometry(p)
    p.write_text("bogus = 3\n")
    with pytest.raises(ValueError, match="unknown geometry key"):
        load_geometry(p)


def test_env_variable_fallback(tmp_path, monkeypatch):
    p = tmp_path / "env.cfg"
    p.write_text("l3 = 123\n")
    monkeypatch.setenv("MDKIN_GEOMETRY", str(p))
    assert load_geometry().l3 == 123.0
    # explicit path wins over the environment
    q = tmp_path / "other.cfg"
    q.write_text("l3 = 321\n")
    assert load_geometry(q).l3 == 321.0
    monkeypatch.delenv("MDKIN_GEOMETRY")
    assert load_geometry().l3 == 170.0


def test_save_load_roundtrip(tmp_path):
    g = RobotGeometry(l=401.5, l0=299.25, l1=200.125)
    p = tmp_path / "saved.cfg"
    save_geometry(g, p)
    assert load_geometry(p) == g  # repr round-trips floats exactly
