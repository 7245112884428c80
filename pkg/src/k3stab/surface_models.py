"""Validated surface descriptions and the ``.k3.json`` file format."""

from dataclasses import dataclass, replace
from fractions import Fraction
from importlib import resources
import json
import os
import re

from .errors import (
    DClassUnavailable,
    DimensionError,
    InvalidSurface,
    NotAK3Configuration,
    OutOfDomain,
    SurfaceFileError,
)
from .lattice import DivisorClass, IntersectionLattice
from .rational import json_value, to_fraction


@dataclass(frozen=True)
class SurfaceModel:
    lattice: IntersectionLattice
    curve_c: DivisorClass
    nu: DivisorClass
    effective_generators: tuple
    e: int = 2
    d_class: DivisorClass = None
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "effective_generators", tuple(self.effective_generators))


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self):
        return self.message


def _proportional(g, C):
    """True when g is a rational multiple of C."""
    n = len(C)
    return all(g[i] * C[j] == g[j] * C[i] for i in range(n) for j in range(i + 1, n))


def validate_surface(model):
    """All invariant violations of ``model``; an empty list means valid."""
    lat = model.lattice
    out = []
    classes = [("curve_C", model.curve_c), ("nu", model.nu)]
    classes += [(f"effective_generators[{i}]", g) for i, g in enumerate(model.effective_generators)]
    if model.d_class is not None:
        classes.append(("D", model.d_class))
    bad = [name for name, c in classes if len(c) != lat.rank]
    if bad:
        return [Violation("dimension", f"{name} has wrong length") for name in bad]

    C, nu = model.curve_c, model.nu
    if model.e != 2:
        out.append(Violation("e", f"e = {model.e}, expected 2"))
    cc = lat.pair(C, C)
    if cc != -2:
        out.append(Violation("curve_c_square", f"curve_c^2 != -2 (got {cc})"))
    elif cc != -model.e:
        out.append(Violation("curve_c_square", f"curve_c^2 != -e (got {cc})"))
    nc = lat.pair(nu, C)
    if nc != 0:
        out.append(Violation("nu_dot_c", f"nu.curve_c != 0 (got {nc})"))
    nn = lat.pair(nu, nu)
    if nn <= 0:
        out.append(Violation("nu_square", f"nu^2 <= 0 (got {nn})"))
    for i, g in enumerate(model.effective_generators):
        if _proportional(g, C):
            continue
        ng = lat.pair(nu, g)
        if ng <= 0:
            out.append(Violation("nu_dot_generator", f"nu.generator[{i}] <= 0 (got {ng})"))
    if model.d_class is not None:
        D = model.d_class
        if lat.pair(D, C) != 1:
            out.append(Violation("d_dot_c", f"D.curve_c != 1 (got {lat.pair(D, C)})"))
        if lat.pair(D, D) != 0:
            out.append(Violation("d_square", f"D^2 != 0 (got {lat.pair(D, D)})"))
    return out


def build_example_rank2(q, y):
    """Picard rank 2, effective cone spanned by (-2)-curves C1, C2 with C1.C2 = q.

    nu = (q/2) y C1 + y C2 with y even and positive.
    """
    if q <= 2:
        raise NotAK3Configuration("q must exceed 2 for an ample class to exist", clause="q>2", q=q)
    if y <= 0 or y % 2:
        raise OutOfDomain("y must be an even positive integer", clause="y even, y>0", y=y)
    lat = IntersectionLattice(["C1", "C2"], [[-2, q], [q, -2]])
    C1, C2 = lat.basis_class(0), lat.basis_class(1)
    nu = Fraction(q, 2) * y * C1 + y * C2
    return SurfaceModel(lat, C1, nu, (C1, C2), name=f"rank2-q{q}-y{y}")


def build_d_class(model):
    """D = (nu - C)/e, which has D.C = 1 and D^2 = 0 when nu^2 = 2."""
    nn = model.lattice.pair(model.nu, model.nu)
    if nn != 2:
        raise DClassUnavailable("D = (nu - C)/e needs nu^2 = 2", clause="nu^2=2", nu_sq=nn)
    return (model.nu - model.curve_c) / model.e


def with_d_class(model):
    return replace(model, d_class=build_d_class(model))


# -- file format ----------------------------------------------------------

_FIELDS = {"name", "basis", "gram", "curve_C", "nu", "effective_generators", "D", "e"}
_REQUIRED = ("name", "basis", "gram", "curve_C", "nu", "effective_generators")


def _line_of(text, key):
    m = re.search(r'"%s"\s*:' % re.escape(key), text)
    return text.count("\n", 0, m.start()) + 1 if m else None


def _rational(value, key, text):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise SurfaceFileError(
            f"{key}: expected an integer or a 'p/q' string, got {value!r}",
            field=key,
            line=_line_of(text, key.split("[")[0]),
        )
    try:
        return to_fraction(value)
    except (ValueError, ZeroDivisionError):
        raise SurfaceFileError(
            f"{key}: cannot parse {value!r} as a rational",
            field=key,
            line=_line_of(text, key.split("[")[0]),
        ) from None


def _vector(value, key, rank, text):
    if not isinstance(value, list):
        raise SurfaceFileError(f"{key}: expected a list", field=key, line=_line_of(text, key))
    if len(value) != rank:
        raise SurfaceFileError(
            f"{key}: expected {rank} coordinates, got {len(value)}",
            field=key,
            line=_line_of(text, key.split("[")[0]),
        )
    return DivisorClass([_rational(x, f"{key}[{i}]", text) for i, x in enumerate(value)])


def load_surface(text, allow_invalid=False):
    """Parse a ``.k3.json`` document and validate the resulting model."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SurfaceFileError(f"malformed JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(raw, dict):
        raise SurfaceFileError("top level must be an object", line=1)
    unknown = sorted(set(raw) - _FIELDS)
    if unknown:
        raise SurfaceFileError(
            f"unknown field(s): {', '.join(unknown)}", field=unknown[0], line=_line_of(text, unknown[0])
        )
    for key in _REQUIRED:
        if key not in raw:
            raise SurfaceFileError(f"missing field: {key}", field=key)

    basis = raw["basis"]
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise SurfaceFileError("basis: expected a list of labels", field="basis", line=_line_of(text, "basis"))
    gram = raw["gram"]
    if not isinstance(gram, list) or not all(isinstance(r, list) for r in gram):
        raise SurfaceFileError("gram: expected a list of rows", field="gram", line=_line_of(text, "gram"))
    for row in gram:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise SurfaceFileError(
                    f"gram: entries must be integers, got {x!r}", field="gram", line=_line_of(text, "gram")
                )
    try:
        lattice = IntersectionLattice(basis, gram)
    except (ValueError, DimensionError) as exc:
        raise SurfaceFileError(f"gram: {exc}", field="gram", line=_line_of(text, "gram")) from None
    rank = lattice.rank

    c_raw = raw["curve_C"]
    if isinstance(c_raw, str):
        if c_raw not in lattice.basis_names:
            raise SurfaceFileError(
                f"curve_C: unknown basis label {c_raw!r}", field="curve_C", line=_line_of(text, "curve_C")
            )
        curve_c = lattice.basis_class(c_raw)
    else:
        curve_c = _vector(c_raw, "curve_C", rank, text)
    nu = _vector(raw["nu"], "nu", rank, text)
    gens_raw = raw["effective_generators"]
    if not isinstance(gens_raw, list):
        raise SurfaceFileError(
            "effective_generators: expected a list of vectors",
            field="effective_generators",
            line=_line_of(text, "effective_generators"),
        )
    gens = tuple(_vector(g, f"effective_generators[{i}]", rank, text) for i, g in enumerate(gens_raw))
    d_class = _vector(raw["D"], "D", rank, text) if "D" in raw else None
    e = raw.get("e", 2)
    if isinstance(e, bool) or not isinstance(e, int) or e <= 0:
        raise SurfaceFileError("e: expected a positive integer", field="e", line=_line_of(text, "e"))
    name = raw["name"]
    if not isinstance(name, str):
        raise SurfaceFileError("name: expected a string", field="name", line=_line_of(text, "name"))

    model = SurfaceModel(lattice, curve_c, nu, gens, e=e, d_class=d_class, name=name)
    if not allow_invalid:
        violations = validate_surface(model)
        if violations:
            raise InvalidSurface(
                "surface failed validation: " + "; ".join(map(str, violations)),
                clause=violations[0].code,
                violations=[v.message for v in violations],
            )
    return model


def surface_to_dict(model):
    lat = model.lattice
    names = lat.basis_names
    curve = [json_value(x) for x in model.curve_c]
    label = next((n for n in names if lat.basis_class(n) == model.curve_c), None)
    out = {
        "name": model.name,
        "basis": list(names),
        "gram": [list(r) for r in lat.gram],
        "curve_C": label if label is not None else curve,
        "nu": [json_value(x) for x in model.nu],
        "effective_generators": [[json_value(x) for x in g] for g in model.effective_generators],
    }
    if model.d_class is not None:
        out["D"] = [json_value(x) for x in model.d_class]
    if model.e != 2:
        out["e"] = model.e
    return out


def save_surface(model):
    """Serialize to ``.k3.json`` text; vectors and Gram rows stay on one line."""
    body = [
        f"  {json.dumps(key)}: {json.dumps(value, separators=(', ', ': '))}"
        for key, value in surface_to_dict(model).items()
    ]
    return "{\n" + ",\n".join(body) + "\n}\n"


def bundled_surfaces():
    return sorted(
        p.name for p in resources.files("k3stab").joinpath("data").iterdir() if p.name.endswith(".k3.json")
    )


def read_surface(path_or_name, allow_invalid=False):
    """Load from a path, falling back to the bundled file of the same name."""
    if os.path.exists(path_or_name):
        with open(path_or_name, encoding="utf-8") as fh:
            return load_surface(fh.read(), allow_invalid)
    base = os.path.basename(path_or_name)
    data = resources.files("k3stab").joinpath("data").joinpath(base)
    if data.is_file():
        return load_surface(data.read_text(encoding="utf-8"), allow_invalid)
    raise SurfaceFileError(f"no such surface file: {path_or_name}", field="path")
