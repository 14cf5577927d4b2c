"""hklattice <module> <op> [--flags | --json FILE | --inline JSON | -]

Exit status: 0 success, 1 check-suite failure, 2 parse error,
3 precondition violation.  Errors are written to stderr as JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, dynamics, hilbert, lattice, mukai
from .errors import NotUnique, PreconditionError
from .lattice import Lattice

EXIT_OK, EXIT_CHECK_FAILED, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


class InputError(Exception):
    """Malformed or missing input; exit status 2."""


# ------------------------------------------------------------------ input


def read_input(args, required: bool = True) -> dict | None:
    sources = [s for s in (args.json, args.inline, args.stdin) if s]
    if len(sources) > 1:
        raise InputError("give exactly one of --json FILE, --inline JSON, -")
    if not sources:
        if required:
            raise InputError("this command needs JSON input (--json FILE, --inline JSON or -)")
        return None
    try:
        if args.json:
            with open(args.json) as fh:
                return json.load(fh)
        if args.inline:
            return json.loads(args.inline)
        return json.load(sys.stdin)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from exc


def _lattice(data: dict) -> Lattice:
    return Lattice.from_json(data["lattice"] if "lattice" in data else data)


def _k3(data: dict) -> mukai.K3AlgebraicData:
    return mukai.K3AlgebraicData.from_json(data.get("k3", data))


def _mv(data: dict) -> mukai.MukaiVector:
    return mukai.MukaiVector.from_json(data)


# ------------------------------------------------------------- lattice ops


def lattice_sig(args):
    sig = lattice.signature(_lattice(read_input(args)))
    return sig._asdict()


def lattice_reflect(args):
    data = read_input(args)
    L = _lattice(data)
    R = lattice.reflection_square2(L, data["h"])
    if "v" in data:
        return list(R(data["v"]))
    return {"matrix": [list(r) for r in R.matrix]}


def lattice_complement(args):
    data = read_input(args)
    return [list(v) for v in lattice.orthogonal_complement(_lattice(data), data.get("vectors", []))]


def lattice_enum(args):
    data = read_input(args)
    return [list(v) for v in lattice.enumerate_bounded_norm(_lattice(data), int(data["lower"]))]


# --------------------------------------------------------------- mukai ops


def mukai_dim(args):
    data = read_input(args)
    return mukai.moduli_dim(_k3(data), _mv(data["v"]))


def mukai_vgeneric(args):
    data = read_input(args)
    generic, walls = mukai.is_v_generic(_k3(data), _mv(data["v"]))
    return {"generic": generic, "walls": [w.to_json() for w in walls]}


def mukai_beta(args):
    data = read_input(args, required=args.g is None)
    if data is None:
        K = mukai.picard_rank_one(2 * args.g - 2)
        v = mukai.MukaiVector(2, (1,), 2)
    else:
        K = _k3(data)
        v = _mv(data["v"]) if "v" in data else mukai.MukaiVector(2, K.ell, 2)
    beta = mukai.solve_involution_beta(K, v, args.bound)
    return list(mukai.beta_coefficients(K, beta, v.ell_part))


def mukai_hv(args):
    data = read_input(args)
    return mukai.h_v(_k3(data), _mv(data["v"])).to_json()


def mukai_perp(args):
    data = read_input(args)
    return [b.to_json() for b in mukai.v_perp_basis(_k3(data), _mv(data["v"]))]


# ------------------------------------------------------------- hilbert ops


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise InputError("missing flag(s): " + ", ".join("--" + m.replace("_", "-") for m in missing))


def hilbert_chi(args):
    data = read_input(args, required=False)
    if data is not None:
        return hilbert.rr_chi(int(data["n"]), int(data["square"]))
    _need(args, "n", "square")
    return hilbert.rr_chi(args.n, args.square)


def hilbert_d(args):
    data = read_input(args, required=False)
    if data is not None:
        return hilbert.dim_quadrics(int(data["g"]))
    _need(args, "g")
    return hilbert.dim_quadrics(args.g)


def hilbert_deg2(args):
    data = read_input(args, required=False)
    if data is not None:
        ns = Lattice(data["ns_gram"]) if "ns_gram" in data else _lattice(data)
        n, box = int(data["n"]), int(data["box"])
    else:
        _need(args, "h_square", "n", "box")
        ns, n, box = Lattice(((args.h_square,),)), args.n, args.box
    return [c.to_json() for c in hilbert.degree2_classes(ns, n, box)]


def hilbert_sd(args):
    data = read_input(args, required=args.g is None)
    if data is None:
        K = mukai.picard_rank_one(2 * args.g - 2)
        v0, v1 = mukai.MukaiVector(2, (1,), 2), hilbert.w_vector(K)
    else:
        K, v0, v1 = _k3(data), _mv(data["v0"]), _mv(data["v1"])
    return hilbert.strange_duality_dims(K, v0, v1).to_json()


def hilbert_thetaw(args):
    data = read_input(args)
    return hilbert.theta_w_coords(_k3(data), _mv(data["x"]), args.sign_convention).to_json()


# ----------------------------------------------------------------- dyn ops


def _psi(args, data):
    if args.a is not None:
        L, h1, h2 = dynamics.two_reflection_plane(args.a)
    elif data is None:
        raise InputError("give --a or JSON with lattice, h1, h2")
    else:
        L, h1, h2 = _lattice(data), data["h1"], data["h2"]
    return dynamics.build_psi(L, h1, h2)


def dyn_spectrum(args):
    data = read_input(args, required=args.a is None)
    return dynamics.report(_psi(args, data))


def dyn_orbit(args):
    data = read_input(args, required=args.a is None)
    psi = _psi(args, data)
    x = data["x"] if data and "x" in data else psi.h1
    return [list(p) for p in dynamics.orbit(psi, x, args.k)]


def dyn_fixed(args):
    data = read_input(args, required=args.a is None)
    return [list(v) for v in dynamics.fixed_sublattice(_psi(args, data))]


# ------------------------------------------------------------------- check


def check_paper(args):
    results = checks.run_all()
    if args.format == "jsonl":
        text = "\n".join(json.dumps(r.to_json()) for r in results)
    else:
        ok = sum(r.passed for r in results)
        text = checks.format_table(results) + f"\n{ok}/{len(results)} checks passed"
    print(text)
    return None if checks.all_passed(results) else EXIT_CHECK_FAILED


COMMANDS = {
    "lattice": {"sig": lattice_sig, "reflect": lattice_reflect, "complement": lattice_complement, "enum": lattice_enum},
    "mukai": {"dim": mukai_dim, "vgeneric": mukai_vgeneric, "beta": mukai_beta, "hv": mukai_hv, "perp": mukai_perp},
    "hilbert": {"chi": hilbert_chi, "d": hilbert_d, "deg2": hilbert_deg2, "sd": hilbert_sd, "thetaw": hilbert_thetaw},
    "dyn": {"spectrum": dyn_spectrum, "orbit": dyn_orbit, "fixed": dyn_fixed},
    "check": {"paper": check_paper},
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("stdin", nargs="?", choices=["-"], help="read JSON from stdin")
    common.add_argument("--json", metavar="FILE", help="read JSON input from FILE")
    common.add_argument("--inline", metavar="JSON", help="JSON input given on the command line")
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    common.add_argument("--bound", type=int, help="search box for the beta solver")
    common.add_argument("--k", type=int, default=10, help="orbit length")
    common.add_argument("--sign-convention", choices=hilbert.SIGN_CONVENTIONS, default="paper")
    common.add_argument("--n", type=int)
    common.add_argument("--square", type=int)
    common.add_argument("--g", type=int)
    common.add_argument("--a", type=int)
    common.add_argument("--box", type=int)
    common.add_argument("--h-square", type=int, help="h_S^2 for NS = Z h_S")
    common.add_argument("--format", choices=["table", "jsonl"], default="table")

    parser = argparse.ArgumentParser(prog="hklattice", description=__doc__.splitlines()[0])
    modules = parser.add_subparsers(dest="module", required=True)
    for module, ops in COMMANDS.items():
        mp = modules.add_parser(module)
        sub = mp.add_subparsers(dest="op", required=True)
        for op in ops:
            sub.add_parser(op, parents=[common])
    return parser


def _fail(code: int, exc: BaseException) -> int:
    sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.module][args.op]
    try:
        out = handler(args)
    except InputError as exc:
        return _fail(EXIT_PARSE, exc)
    except (KeyError, TypeError) as exc:
        return _fail(EXIT_PARSE, InputError(f"malformed input: {exc!r}"))
    except (PreconditionError, NotUnique) as exc:
        return _fail(EXIT_PRECONDITION, exc)
    if args.module == "check":
        return out or EXIT_OK
    print(json.dumps(out, indent=2 if args.pretty else None))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
