import math

import pytest

from relayrates.channels import (
    LineGeometry,
    OneWayChannel,
    TwoWayChannel,
    oneway_from_geometry,
    twrc_from_geometry,
)


def test_oneway_geometry_midpoint():
    ch = oneway_from_geometry(LineGeometry(0.5, 3.0), 10.0)
    assert ch.g == 1.0
    assert ch.g1 == pytest.approx(0.5 ** -1.5, abs=1e-12)
    assert ch.g2 == pytest.approx(0.5 ** -1.5, abs=1e-12)
    assert ch.g1 == pytest.approx(2.8284271247, abs=1e-9)


def test_oneway_geometry_zero_exponent():
    ch = oneway_from_geometry(LineGeometry(0.5, 0.0), 1.0)
    assert ch.g1 == 1.0 and ch.g2 == 1.0


def test_oneway_geometry_power_law():
    ch = oneway_from_geometry(LineGeometry(0.99, 3.0), 1.0)
    assert ch.g2 == pytest.approx(0.01 ** -1.5, rel=1e-12)
    assert ch.g2 == pytest.approx(1000.0, rel=1e-9)


def test_geometry_symmetry_swaps_gains():
    # 0.25/0.75 are exact binary fractions, so the swap is exact
    a = oneway_from_geometry(LineGeometry(0.25, 3.0), 2.0)
    b = oneway_from_geometry(LineGeometry(0.75, 3.0), 2.0)
    assert a.g1 == b.g2 and a.g2 == b.g1
    c = oneway_from_geometry(LineGeometry(0.3, 3.0), 2.0)
    d = oneway_from_geometry(LineGeometry(0.7, 3.0), 2.0)
    assert c.g1 == pytest.approx(d.g2, rel=1e-12)


def test_twrc_geometry():
    ch = twrc_from_geometry(LineGeometry(0.5, 3.0), 10.0)
    assert ch.g12 == ch.g21 == 1.0
    for g in (ch.gr1, ch.g1r, ch.gr2, ch.g2r):
        assert g == pytest.approx(2.8284271247, abs=1e-9)
    a = twrc_from_geometry(LineGeometry(0.25, 3.0), 10.0)
    b = twrc_from_geometry(LineGeometry(0.75, 3.0), 10.0)
    assert a.gr1 == b.gr2 and a.g1r == b.g2r


def test_explicit_twrc_construction():
    ch = TwoWayChannel(g12=1.0, g1r=2.0, g21=0.5, g2r=3.0, gr1=6.0, gr2=2.0, P=3.0)
    assert ch.gr1 == 6.0 and ch.P == 3.0


def test_invariants():
    with pytest.raises(ValueError):
        LineGeometry(0.0, 3.0)
    with pytest.raises(ValueError):
        LineGeometry(1.0, 3.0)
    with pytest.raises(ValueError):
        LineGeometry(0.5, -1.0)
    with pytest.raises(ValueError):
        OneWayChannel(g=1.0, g1=1.0, g2=1.0, P=0.0)
    with pytest.raises(ValueError):
        OneWayChannel(g=math.nan, g1=1.0, g2=1.0, P=1.0)
    with pytest.raises(ValueError):
        TwoWayChannel(g12=1, g1r=1, g21=1, g2r=1, gr1=math.inf, gr2=1, P=1)
