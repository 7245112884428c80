"""``k3stab`` command-line front end.

Rationals are printed exactly as ``p/q``.  Mukai vectors and Chern
characters are written ``r,(c1 coords),s``; divisor classes are comma-joined
coordinates in the surface basis.  Exit status: 0 ok, 1 domain error
(structured record on stdout), 2 usage error.
"""

import argparse
from fractions import Fraction
import json
import math
import os
import re
import sys

from . import charge, lattice, mukai, surface_models, transport, twist, walls
from .errors import K3StabError
from .rational import fmt

_VEC = re.compile(r"^\s*([^,()]+?)\s*,\s*\(([^()]*)\)\s*,\s*([^,()]+?)\s*$")


def _rational(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _extended(text):
    t = text.strip().lower()
    if t in ("inf", "+inf"):
        return math.inf
    if t == "-inf":
        return -math.inf
    return _rational(text)


def _coords(text):
    parts = [p for p in text.split(",")] if text.strip() else []
    return [_rational(p) for p in parts]


def _triple(text):
    m = _VEC.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected 'r,(c1,...),s', got {text!r}")
    return _rational(m.group(1)), _coords(m.group(2)), _rational(m.group(3))


def _divisor(surface, coords, name):
    if len(coords) != surface.lattice.rank:
        raise K3StabError(
            f"{name} needs {surface.lattice.rank} coordinates",
            clause="rank",
            expected=surface.lattice.rank,
            got=len(coords),
        )
    return lattice.DivisorClass(coords)


def _mukai(surface, triple, name="mukai"):
    r, c, s = triple
    return mukai.MukaiVector(r, _divisor(surface, c, name), s)


def _chern(surface, triple, name="ch"):
    r, c, s = triple
    return mukai.ChernCharacter(r, _divisor(surface, c, name), s)


def _surface(args):
    return surface_models.read_surface(args.surface, getattr(args, "allow_invalid", False))


def _str(x):
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
        return fmt(x)
    if isinstance(x, float):
        return fmt(x) if math.isinf(x) else repr(x)
    if isinstance(x, (list, tuple)):
        return [_str(v) for v in x]
    if isinstance(x, dict):
        return {k: _str(v) for k, v in x.items()}
    if x is None or isinstance(x, bool):
        return x
    return str(x)


# -- handlers: each returns an ordered dict of results ----------------------


def cmd_surface_validate(args):
    model = surface_models.read_surface(args.surface, allow_invalid=True)
    violations = surface_models.validate_surface(model)
    out = {"name": model.name, "ok": not violations, "violations": [v.message for v in violations]}
    if not violations and model.lattice.pair(model.nu, model.nu) == 2:
        out["D"] = str(surface_models.build_d_class(model))
    return out


def cmd_surface_example(args):
    model = surface_models.build_example_rank2(args.q, args.y)
    lat, C1 = model.lattice, model.curve_c
    C2 = model.effective_generators[1]
    return {
        "name": model.name,
        "nu": str(model.nu),
        "nu.C1": lat.pair(model.nu, C1),
        "nu.C2": lat.pair(model.nu, C2),
        "nu^2": lat.pair(model.nu, model.nu),
        "ok": not surface_models.validate_surface(model),
        "file": surface_models.surface_to_dict(model),
    }


def cmd_twist_mukai(args):
    s = _surface(args)
    v = _mukai(s, args.mukai)
    tw = twist.TwistParams.along_curve(s.curve_c, args.t)
    return {"mukai": str(twist.twist_mukai(v, tw, s.lattice))}


def cmd_twist_invariants(args):
    n, c, d, s = twist.twist_invariants(args.n, args.c, args.d, args.s, args.t)
    return {"n": n, "c": c, "d": d, "s": s}


def cmd_twist_skyscraper(args):
    table = twist.skyscraper_twist(args.on_curve, args.t, args.direction)
    return {"cohomology": {str(k): str(v) for k, v in sorted(table.items())}}


def _params(s, args):
    nu = _divisor(s, args.nu, "nu") if args.nu is not None else s.nu
    B = _divisor(s, args.B, "B") if args.B is not None else None
    return charge.ChargeParams(args.V, nu, B)


def _charge_input(s, args):
    if args.ch is not None:
        return _chern(s, args.ch)
    if args.mukai is not None:
        return _mukai(s, args.mukai)
    raise K3StabError("one of --ch or --mukai is required", clause="input")


def cmd_charge_eval(args):
    s = _surface(args)
    z = charge.central_charge(_params(s, args), _charge_input(s, args), s.lattice)
    return {"re": z.re, "im": z.im}


def cmd_charge_phase(args):
    s = _surface(args)
    rule = charge.kernel_rule(args.kernel_rule) if args.kernel_rule else None
    ph = charge.phase(_params(s, args), _charge_input(s, args), s.lattice, rule)
    return {"phase": str(ph), "exactness": ph.exactness_flag}


def cmd_charge_slope(args):
    s = _surface(args)
    return {"slope": charge.slope(_params(s, args), _charge_input(s, args), s.lattice)}


def cmd_charge_kernel(args):
    s = _surface(args)
    return {"kernel": charge.kernel_contains(_params(s, args), _charge_input(s, args), s.lattice)}


def cmd_charge_limit_phase(args):
    ph = charge.limit_phase(args.p, args.omega_dot_c)
    return {"phase": str(ph), "exactness": ph.exactness_flag}


def cmd_transport_case1(args):
    d_omega, g = transport.solve_case_one(args.D_omega_bar)
    return {"D_omega": d_omega, "g": str(g), "phase_shift": g.phase_shift}


def cmd_transport_case2(args):
    _, g = transport.solve_case_two(args.t, lattice.DivisorClass([1]))
    return {"B": f"{fmt(-(args.t + 1))}*C", "g": str(g)}


def cmd_transport_case3(args):
    u, g = transport.solve_case_three(args.u_bar)
    return {"u": u, "g": str(g)}


def cmd_transport_verify(args):
    s = _surface(args)
    div = lambda v, name: None if v is None else _divisor(s, v, name)  # noqa: E731
    params = charge.ChargeParams(args.V, _divisor(s, args.omega, "omega"), div(args.B, "B"))
    params_bar = charge.ChargeParams(
        args.V_bar, _divisor(s, args.omega_bar, "omega-bar"), div(args.B_bar, "B-bar")
    )
    a, b, c, d = args.g
    g = transport.Gl2Factor(((a, b), (c, d)))
    ok = transport.verify_transport(params, params_bar, g, args.t, s.curve_c, s.lattice)
    return {"holds": ok}


def cmd_transport_non_nef(args):
    return {"b": transport.non_nef_image(args.a)}


def _nu(s, args):
    return _divisor(s, args.nu, "nu") if getattr(args, "nu", None) is not None else s.nu


def cmd_walls_value(args):
    s = _surface(args)
    sol = walls.wall_value(_mukai(s, args.mukai_a), _mukai(s, args.mukai_l), _nu(s, args), s.lattice)
    if sol is None:
        return {"kind": "NoWall"}
    return {"kind": sol.kind, "V": sol.v_value}


def cmd_walls_rank_bound(args):
    s = _surface(args)
    res = walls.rank_bound(_divisor(s, args.alpha, "alpha"), _nu(s, args), args.V, s.lattice)
    exact = res.exact
    return {"bound": exact if exact is not None else float(res), "exact": exact is not None}


def cmd_walls_threshold(args):
    s = _surface(args)
    thr = walls.rank_threshold(_divisor(s, args.alpha, "alpha"), _nu(s, args), args.r, s.lattice)
    return {"kind": thr.kind, "V": thr.value, "supremum": thr.supremum}


def cmd_walls_bg(args):
    s = _surface(args)
    d = walls.bg_discriminant(_mukai(s, args.mukai), s.lattice)
    return {"discriminant": d, "admissible": d >= 0}


def cmd_walls_hit(args):
    s = _surface(args)
    return {"holds": walls.hit_bound_check(_chern(s, args.ch), _nu(s, args), s.lattice)}


def cmd_screen(args):
    s = _surface(args)
    res = walls.semistable_screen(s, _divisor(s, args.alpha, "alpha"), args.height)
    cert = dict(res.certificate)
    thr = cert.pop("rank2_threshold")
    cert["rank2_threshold"] = {"kind": thr.kind, "V": thr.value, "supremum": thr.supremum}
    return {"verdict": res.verdict, "failing_clauses": res.failing_clauses, "certificate": cert}


def cmd_ext_on_curve(args):
    hom, ext1, ext2 = mukai.hom_ext_on_c(args.a, args.b)
    return {"hom": hom, "ext1": ext1, "ext2": ext2}


# -- parser -----------------------------------------------------------------


def build_parser():
    # subparsers must not reset a --format given before the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json"], default=argparse.SUPPRESS)

    surf = argparse.ArgumentParser(add_help=False)
    surf.add_argument("--surface", required=True, help="path or bundled name (*.k3.json)")
    surf.add_argument("--allow-invalid", action="store_true")

    p = argparse.ArgumentParser(prog="k3stab", description=__doc__.split("\n")[0])
    p.add_argument("--format", choices=["table", "json"], default=None)
    sub = p.add_subparsers(dest="command", required=True)

    def leaf(subparsers, name, func, *parents, **kw):
        sp = subparsers.add_parser(name, parents=[common, *parents], **kw)
        sp.set_defaults(func=func)
        return sp

    # surface
    sp = sub.add_parser("surface", parents=[common]).add_subparsers(dest="action", required=True)
    leaf(sp, "validate", cmd_surface_validate, surf)
    x = leaf(sp, "example", cmd_surface_example)
    x.add_argument("--q", type=int, required=True)
    x.add_argument("--y", type=int, required=True)

    # twist; the action defaults to "mukai"
    tw = sub.add_parser("twist", parents=[common])
    tw.add_argument("action", nargs="?", default="mukai", choices=["mukai", "invariants", "skyscraper"])
    tw.add_argument("--surface")
    tw.add_argument("--allow-invalid", action="store_true")
    tw.add_argument("--mukai", type=_triple)
    tw.add_argument("--t", type=int, required=True)
    for name in ("n", "c", "d", "s"):
        tw.add_argument(f"--{name}", type=_rational)
    tw.add_argument("--on-curve", action="store_true")
    tw.add_argument("--direction", choices=["forward", "inverse"], default="forward")
    tw.set_defaults(func=_twist_dispatch)

    # charge
    cp = argparse.ArgumentParser(add_help=False)
    cp.add_argument("--V", type=_rational, required=True)
    cp.add_argument("--nu", type=_coords)
    cp.add_argument("--B", type=_coords)
    cp.add_argument("--ch", type=_triple)
    cp.add_argument("--mukai", type=_triple)
    sp = sub.add_parser("charge", parents=[common]).add_subparsers(dest="action", required=True)
    leaf(sp, "eval", cmd_charge_eval, surf, cp)
    x = leaf(sp, "phase", cmd_charge_phase, surf, cp)
    x.add_argument("--kernel-rule", choices=["a", "b"])
    leaf(sp, "slope", cmd_charge_slope, surf, cp)
    leaf(sp, "kernel", cmd_charge_kernel, surf, cp)
    x = leaf(sp, "limit-phase", cmd_charge_limit_phase)
    x.add_argument("--p", type=_extended, required=True)
    x.add_argument("--omega-dot-c", type=_rational, required=True)

    # transport
    sp = sub.add_parser("transport", parents=[common]).add_subparsers(dest="action", required=True)
    x = leaf(sp, "case1", cmd_transport_case1)
    x.add_argument("--D-omega-bar", dest="D_omega_bar", type=_rational, required=True)
    x = leaf(sp, "case2", cmd_transport_case2)
    x.add_argument("--t", type=int, required=True)
    x = leaf(sp, "case3", cmd_transport_case3)
    x.add_argument("--u-bar", dest="u_bar", type=_rational, required=True)
    x = leaf(sp, "verify", cmd_transport_verify, surf)
    x.add_argument("--t", type=int, required=True)
    x.add_argument("--V", type=_rational, required=True)
    x.add_argument("--omega", type=_coords, required=True)
    x.add_argument("--B", type=_coords)
    x.add_argument("--V-bar", dest="V_bar", type=_rational, required=True)
    x.add_argument("--omega-bar", dest="omega_bar", type=_coords, required=True)
    x.add_argument("--B-bar", dest="B_bar", type=_coords)
    x.add_argument("--g", type=_g_matrix, required=True, help="a,b,c,d for ((a,b),(c,d))")
    x = leaf(sp, "non-nef", cmd_transport_non_nef)
    x.add_argument("--a", type=_rational, required=True)

    # walls
    wn = argparse.ArgumentParser(add_help=False)
    wn.add_argument("--nu", type=_coords)
    sp = sub.add_parser("walls", parents=[common]).add_subparsers(dest="action", required=True)
    x = leaf(sp, "value", cmd_walls_value, surf, wn)
    x.add_argument("--mukai-a", type=_triple, required=True)
    x.add_argument("--mukai-l", type=_triple, required=True)
    x = leaf(sp, "rank-bound", cmd_walls_rank_bound, surf, wn)
    x.add_argument("--alpha", type=_coords, required=True)
    x.add_argument("--V", type=_rational, required=True)
    x = leaf(sp, "threshold", cmd_walls_threshold, surf, wn)
    x.add_argument("--alpha", type=_coords, required=True)
    x.add_argument("--r", type=int, required=True)
    x = leaf(sp, "bg", cmd_walls_bg, surf)
    x.add_argument("--mukai", type=_triple, required=True)
    x = leaf(sp, "hit", cmd_walls_hit, surf, wn)
    x.add_argument("--ch", type=_triple, required=True)

    x = leaf(sub, "screen", cmd_screen, surf)
    x.add_argument("--alpha", type=_coords, required=True)
    x.add_argument("--height", type=int, required=True)

    sp = sub.add_parser("ext", parents=[common]).add_subparsers(dest="action", required=True)
    x = leaf(sp, "on-curve", cmd_ext_on_curve)
    x.add_argument("--a", type=int, required=True)
    x.add_argument("--b", type=int, required=True)
    return p


def _g_matrix(text):
    vals = _coords(text)
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("g needs four entries a,b,c,d")
    return vals


def _twist_dispatch(args):
    if args.action == "invariants":
        missing = [k for k in ("n", "c", "d", "s") if getattr(args, k) is None]
        if missing:
            raise _Usage(f"twist invariants needs --{', --'.join(missing)}")
        return cmd_twist_invariants(args)
    if args.action == "skyscraper":
        return cmd_twist_skyscraper(args)
    if args.surface is None or args.mukai is None:
        raise _Usage("twist mukai needs --surface and --mukai")
    return cmd_twist_mukai(args)


class _Usage(Exception):
    pass


def render(result, fmt_name):
    data = _str(result)
    if fmt_name == "json":
        return json.dumps(data, indent=2)
    lines = []

    def walk(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                walk(f"{prefix}.{k}" if prefix else k, v)
        else:
            lines.append((prefix, json.dumps(value) if isinstance(value, list) else str(value)))

    walk("", data)
    width = max((len(k) for k, _ in lines), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in lines)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt_name = args.format or os.environ.get("K3STAB_FORMAT") or "table"
    if fmt_name not in ("table", "json"):
        parser.error(f"K3STAB_FORMAT must be 'table' or 'json', got {fmt_name!r}")
    try:
        result = args.func(args)
    except _Usage as exc:
        parser.error(str(exc))
    except K3StabError as exc:
        print(render({"error": exc.to_record()}, fmt_name))
        return 1
    print(render(result, fmt_name))
    return 0


if __name__ == "__main__":
    sys.exit(main())
