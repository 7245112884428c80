from fractions import Fraction
import json

import pytest
from hypothesis import given, settings, strategies as st

from k3stab.errors import (
    DClassUnavailable,
    InvalidSurface,
    NotAK3Configuration,
    OutOfDomain,
    SurfaceFileError,
)
from k3stab.lattice import DivisorClass, IntersectionLattice
from k3stab.surface_models import (
    SurfaceModel,
    build_d_class,
    build_example_rank2,
    bundled_surfaces,
    load_surface,
    read_surface,
    save_surface,
    validate_surface,
    with_d_class,
)

from conftest import MINIMAL_GRAM

C = DivisorClass([1, 0])
D = DivisorClass([0, 1])

MINIMAL_TEXT = """{
  "name": "m",
  "basis": ["C", "D"],
  "gram": [[-2, 1], [1, 0]],
  "curve_C": "C",
  "nu": [1, 2],
  "effective_generators": [[1, 0]]
}
"""


def test_validate_examples():
    assert validate_surface(SurfaceModel(MINIMAL_GRAM, C, C + 2 * D, [C])) == []
    bad = IntersectionLattice(["C", "D"], [[-1, 1], [1, 0]])
    msgs = [v.message for v in validate_surface(SurfaceModel(bad, C, C + 2 * D, [C]))]
    assert any("curve_c^2 != -2" in m for m in msgs)
    assert validate_surface(build_example_rank2(4, 2)) == []


def test_validate_reports_all_violations():
    bad = IntersectionLattice(["C", "D"], [[-1, 1], [1, 0]])
    model = SurfaceModel(bad, C, D, [C, -D], d_class=C)
    codes = {v.code for v in validate_surface(model)}
    assert {"curve_c_square", "nu_dot_c", "nu_square", "nu_dot_generator", "d_square"} <= codes


def test_build_example_rank2_examples():
    m = build_example_rank2(4, 2)
    lat, C1, C2 = m.lattice, m.lattice.basis_class(0), m.lattice.basis_class(1)
    assert m.nu == 4 * C1 + 2 * C2
    assert (lat.pair(m.nu, C1), lat.pair(m.nu, C2), lat.pair(m.nu, m.nu)) == (0, 12, 24)
    m = build_example_rank2(3, 2)
    lat = m.lattice
    assert m.nu == 3 * C1 + 2 * C2
    assert (lat.pair(m.nu, C1), lat.pair(m.nu, C2), lat.pair(m.nu, m.nu)) == (0, 5, 10)
    with pytest.raises(NotAK3Configuration):
        build_example_rank2(2, 2)
    for y in (0, -2, 3):
        with pytest.raises(OutOfDomain):
            build_example_rank2(4, y)


@settings(max_examples=50)
@given(st.integers(3, 40), st.integers(1, 20).map(lambda k: 2 * k))
def test_build_example_rank2_always_validates(q, y):
    m = build_example_rank2(q, y)
    lat, C1, C2 = m.lattice, m.lattice.basis_class(0), m.lattice.basis_class(1)
    assert validate_surface(m) == []
    assert lat.pair(m.nu, C1) == 0
    assert lat.pair(m.nu, C2) == y * (Fraction(q * q, 2) - 2) > 0
    assert lat.pair(m.nu, m.nu) == y * y * (Fraction(q * q, 2) - 2) > 0


def test_build_d_class():
    m = SurfaceModel(MINIMAL_GRAM, C, C + 2 * D, [C])
    assert build_d_class(m) == D
    m2 = with_d_class(m)
    assert m2.d_class == D and validate_surface(m2) == []
    with pytest.raises(DClassUnavailable):
        build_d_class(build_example_rank2(4, 2))


@settings(max_examples=100)
@given(st.integers(-6, 6), st.booleans())
def test_build_d_class_equations(a, use_q):
    # P, Q span an orthogonal hyperbolic plane; adding a multiple of one isotropic vector keeps nu^2 = 2
    lat = IntersectionLattice(["C", "D", "P", "Q"], [[-2, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    Cl, Dl, P, Q = (lat.basis_class(i) for i in range(4))
    nu = Cl + 2 * Dl + a * (Q if use_q else P)
    assert lat.pair(nu, nu) == 2 and lat.pair(nu, Cl) == 0
    m = SurfaceModel(lat, Cl, nu, [Cl])
    Dm = build_d_class(m)
    assert lat.pair(Dm, Cl) == 1 and lat.pair(Dm, Dm) == 0


def test_bundled_round_trip():
    assert "rank2-q4.k3.json" in bundled_surfaces()
    loaded = read_surface("rank2-q4.k3.json")
    built = build_example_rank2(4, 2)
    assert loaded.lattice.gram == built.lattice.gram
    assert (loaded.curve_c, loaded.nu, loaded.effective_generators) == (
        built.curve_c,
        built.nu,
        built.effective_generators,
    )
    for name in bundled_surfaces():
        s = read_surface(name)
        assert validate_surface(s) == []
        assert load_surface(save_surface(s)) == s


def test_save_load_identity_with_rationals():
    m = SurfaceModel(MINIMAL_GRAM, C, C + 2 * D, [C, Fraction(1, 3) * C + Fraction(5, 2) * D], d_class=D, name="r")
    text = save_surface(m)
    assert '"5/2"' in text
    assert load_surface(text) == m


def test_non_symmetric_gram_rejected():
    text = MINIMAL_TEXT.replace("[[-2, 1], [1, 0]]", "[[-2, 1], [2, 0]]")
    with pytest.raises(SurfaceFileError) as exc:
        load_surface(text)
    assert exc.value.field == "gram" and exc.value.line == 4


def test_rational_nu_accepted():
    lat_text = MINIMAL_TEXT.replace('"nu": [1, 2]', '"nu": ["3/2", 3]')
    m = load_surface(lat_text)
    assert m.nu == DivisorClass([Fraction(3, 2), 3])
    assert isinstance(m.nu[0], Fraction)


def test_unknown_field_and_bad_values():
    with pytest.raises(SurfaceFileError) as exc:
        load_surface(MINIMAL_TEXT.replace('"name": "m",', '"name": "m", "colour": 1,'))
    assert exc.value.field == "colour"
    with pytest.raises(SurfaceFileError):
        load_surface(MINIMAL_TEXT.replace('"nu": [1, 2]', '"nu": [1.5, 2]'))
    with pytest.raises(SurfaceFileError):
        load_surface(MINIMAL_TEXT.replace('"nu": [1, 2]', '"nu": [1]'))
    with pytest.raises(SurfaceFileError) as exc:
        load_surface("{\n  \"name\": \n")
    assert exc.value.line is not None
    with pytest.raises(SurfaceFileError):
        read_surface("no-such-surface.k3.json")


def test_allow_invalid():
    text = MINIMAL_TEXT.replace('"nu": [1, 2]', '"nu": [1, 3]')
    with pytest.raises(InvalidSurface) as exc:
        load_surface(text)
    assert exc.value.clause == "nu_dot_c"
    m = load_surface(text, allow_invalid=True)
    assert [v.code for v in validate_surface(m)] == ["nu_dot_c"]


def test_save_is_valid_json(pairwise3):
    raw = json.loads(save_surface(pairwise3))
    assert raw["gram"] == [[-2, 3, 3], [3, -2, 3], [3, 3, -2]]
    assert raw["curve_C"] == "C1"
