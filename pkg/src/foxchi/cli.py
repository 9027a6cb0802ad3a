"""Command-line front end.

Every subcommand prints one JSON object on stdout. Exit status is 0 on
success, 1 on a domain error (the object is then ``{"error": <class name>,
"message": ...}``) and 2 on a usage error.

Results are cached in a JSON-lines file keyed by a hash of the version tag,
the subcommand and its normalised arguments. The location comes from
``--cache``, else ``$FOXCHI_CACHE``, else ``~/.cache/foxchi/cache.jsonl``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Sequence

from filelock import FileLock

from . import __version__
from .alexander import alexander_polynomial, diagram_delta, symmetrize_knot_delta
from .errors import FoxchiError
from .eulerchi import (
    GradedChi,
    Mode,
    chi_khi_minus,
    chi_knot,
    chi_link,
    chi_sharp_decompose,
    chi_slope,
)
from .fpgroup import parse_presentation
from .laurent import LaurentPoly, parse_poly
from .linkdiag import parse_braid, parse_pd
from .triangle import (
    ALL_ODD,
    CobordismInvariants,
    Slope,
    TriangleChi,
    bypass_decompose,
    cobordism_degree,
    determinant,
    mediant_signs,
    ncf,
    surgery_parity,
    triangle_solve,
    unknot_chi_trace,
)

CACHE_ENV = "FOXCHI_CACHE"
CACHE_VERSION = f"foxchi-{__version__}"

# options that are bookkeeping, not part of the computation
_NON_SEMANTIC = {"cache", "no_cache", "jobs", "batch", "handler", "command"}


# --- cache -------------------------------------------------------------------


def default_cache_path() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "foxchi" / "cache.jsonl"


def cache_key(op: str, inputs: dict, version: str | None = None) -> str:
    version = CACHE_VERSION if version is None else version
    blob = json.dumps([version, op, inputs], sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


class Cache:
    """Append-only JSON-lines store guarded by a whole-file lock."""

    def __init__(self, path: Path, version: str | None = None):
        self.path = Path(path)
        self.version = CACHE_VERSION if version is None else version
        self.lock = FileLock(str(self.path) + ".lock")

    def _entries(self):
        if not self.path.exists():
            return
        with open(self.path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    entry = json.loads(line)
                    entry["key"], entry["value"]
                except (json.JSONDecodeError, TypeError, KeyError):
                    warnings.warn(f"cache {self.path}: corrupt line {lineno} ignored")
                    continue
                yield entry

    def get(self, key: str) -> str | None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.lock:
            for entry in self._entries():
                if entry["key"] == key and entry.get("version") == self.version:
                    if isinstance(entry["value"], str):
                        return entry["value"]
        return None

    def put(self, key: str, value: str) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.lock:
            for entry in self._entries():
                if entry["key"] == key and entry.get("version") == self.version:
                    return
            record = {"key": key, "version": self.version, "value": value, "created_at": time.time()}
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(record, separators=(",", ":")) + "\n")


# --- helpers -----------------------------------------------------------------


def _poly_out(p: LaurentPoly, raw: bool):
    return p.as_dict() if raw else str(p)


def _slope_pair(s: Slope) -> list[int]:
    # [y, x]: the fraction y/x
    return [s.y, s.x]


def _diagram(ns):
    if ns.braid is not None:
        if ns.strands is None:
            raise _Usage("--braid needs --strands")
        return parse_braid(ns.braid, ns.strands)
    if ns.pd is not None:
        return parse_pd(ns.pd)
    return None


def _delta_source(ns) -> tuple[LaurentPoly, int]:
    """Alexander polynomial and component count from --delta or a diagram."""
    d = _diagram(ns)
    if d is not None:
        return diagram_delta(d), d.num_components
    if getattr(ns, "delta", None) is None:
        raise _Usage("give --delta, --braid/--strands or --pd")
    n = getattr(ns, "components", None)
    p = parse_poly(ns.delta, n)
    return p, p.num_vars


class _Usage(Exception):
    pass


# --- subcommands -------------------------------------------------------------


def cmd_alex(ns) -> dict:
    if ns.presentation is not None or ns.presentation_file is not None:
        text = ns.presentation
        if text is None:
            text = Path(ns.presentation_file).read_text(encoding="utf-8")
        delta = alexander_polynomial(parse_presentation(text.replace("\\n", "\n")))
    else:
        d = _diagram(ns)
        if d is None:
            raise _Usage("give one of --presentation, --presentation-file, --braid or --pd")
        delta = diagram_delta(d)
    if ns.symmetrize:
        delta = symmetrize_knot_delta(delta)
    return {"delta": _poly_out(delta, ns.raw_json)}


def cmd_chi_link(ns) -> dict:
    delta, n = _delta_source(ns)
    return {"chi": _poly_out(chi_link(delta, n).poly, ns.raw_json)}


def cmd_chi_knot(ns) -> dict:
    delta, _ = _delta_source(ns)
    return {"chi": _poly_out(chi_knot(delta, ns.meridian).poly, ns.raw_json)}


def cmd_khi_minus(ns) -> dict:
    delta, _ = _delta_source(ns)
    if ns.delta is None:
        delta = symmetrize_knot_delta(delta)
    series = chi_khi_minus(delta, ns.depth)
    return {
        "series": _poly_out(series.series, ns.raw_json),
        "stable_floor": series.stable_floor,
        "stable": [[d, c] for d, c in series.stable_coefficients().items()],
    }


def cmd_sharp(ns) -> dict:
    r = chi_sharp_decompose(ns.chi, ns.q, ns.h1_order)
    out = {"q": r.q, "pieces": list(r.pieces), "total": r.total}
    if r.h1_order is not None:
        out.update(lspace_compatible=r.lspace_compatible, sharp=r.sharp, verdict=r.verdict)
    return out


def cmd_slope_chi(ns) -> dict:
    mu = GradedChi(parse_poly(ns.chi_mu, 1), Mode.UP_TO_UNIT)
    res = chi_slope(mu, ns.y)
    return {"chi": _poly_out(res.poly, ns.raw_json), "total": res.total()}


def cmd_unknot_chi(ns) -> dict:
    value, step = unknot_chi_trace(Slope.parse(ns.slope))
    return {"chi": value, "trace": [_slope_pair(s) for s in step] if step else []}


def cmd_ncf(ns) -> dict:
    return {"entries": ncf(ns.y, ns.z)}


def cmd_bypass(ns) -> dict:
    s1 = Slope.parse(ns.slope)
    s2, s3 = bypass_decompose(s1)
    signs = mediant_signs(s1, s2, s3)
    return {
        "slopes": [_slope_pair(s2), _slope_pair(s3)],
        "mediant_signs": list(signs) if signs else None,
        "determinant": determinant(s2, s3),
    }


def cmd_parity(ns) -> dict:
    return {"odd": surgery_parity(ns.dots)}


def cmd_degree(ns) -> dict:
    c = CobordismInvariants(ns.euler, ns.sigma, ns.b1[0], ns.b1[1], ns.b0[0], ns.b0[1])
    return {"parity": cobordism_degree(c)}


def cmd_solve_triangle(ns) -> dict:
    chis = []
    for tok in ns.chis:
        if tok in ("?", "_", "x"):
            chis.append(None)
        else:
            try:
                chis.append(int(tok))
            except ValueError:
                raise _Usage(f"chi value {tok!r} is neither an integer nor '?'") from None
    odd = ALL_ODD if ns.odd in ("all", ALL_ODD) else int(ns.odd)
    t = TriangleChi(tuple(chis), odd)
    return {"chi": triangle_solve(t), "position": chis.index(None) + 1 if None in chis else None}


# --- parser ------------------------------------------------------------------


def _add_diagram(p):
    p.add_argument("--braid", help='braid word, e.g. "1 1 1"')
    p.add_argument("--strands", type=int, help="number of braid strands")
    p.add_argument("--pd", help="PD code, X(a,b,c,d) tuples or a JSON array")


def _add_raw(p):
    p.add_argument("--raw-json", action="store_true", help="emit exponent-tuple polynomials")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="foxchi", description="Alexander polynomials and sutured Euler characteristics.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--cache", help=f"cache file (default ${CACHE_ENV} or ~/.cache/foxchi/cache.jsonl)")
    parser.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    parser.add_argument("--batch", help="JSON-lines file, one {\"command\": ..., <option>: ...} object per line")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for --batch")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("alex", help="Alexander polynomial")
    p.add_argument("--presentation", help='e.g. "gens: a b\\nrel: a b A B"')
    p.add_argument("--presentation-file")
    _add_diagram(p)
    p.add_argument("--symmetrize", action="store_true")
    _add_raw(p)
    p.set_defaults(handler=cmd_alex)

    p = sub.add_parser("chi-link", help="graded chi of KHI for a link")
    p.add_argument("--delta")
    p.add_argument("--components", type=int)
    _add_diagram(p)
    _add_raw(p)
    p.set_defaults(handler=cmd_chi_link)

    p = sub.add_parser("chi-knot", help="graded chi of KHI for a knot in a homology S1 x S2 or S3")
    p.add_argument("--delta")
    p.add_argument("--meridian", type=int, default=1, help="[m] = t^k")
    _add_diagram(p)
    _add_raw(p)
    p.set_defaults(handler=cmd_chi_knot)

    p = sub.add_parser("khi-minus", help="truncated chi of KHI^-")
    p.add_argument("--delta", help="symmetrized Alexander polynomial")
    p.add_argument("--depth", type=int, default=10)
    _add_diagram(p)
    _add_raw(p)
    p.set_defaults(handler=cmd_khi_minus)

    p = sub.add_parser("sharp-decompose", help="split chi(I#) of a surgery into q pieces")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--h1-order", type=int)
    p.set_defaults(handler=cmd_sharp)

    p = sub.add_parser("slope-chi", help="graded chi for a y/x suture from the meridional one")
    p.add_argument("--chi-mu", required=True)
    p.add_argument("--y", type=int, required=True)
    _add_raw(p)
    p.set_defaults(handler=cmd_slope_chi)

    p = sub.add_parser("unknot-chi", help="chi of the solid torus with slope x/y suture")
    p.add_argument("--slope", required=True, help="x/y, e.g. -5/7")
    p.set_defaults(handler=cmd_unknot_chi)

    p = sub.add_parser("ncf", help="negative continued fraction of -y/z")
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--z", type=int, required=True)
    p.set_defaults(handler=cmd_ncf)

    p = sub.add_parser("bypass", help="bypass triangle slopes")
    p.add_argument("--slope", required=True, help="x/y")
    p.set_defaults(handler=cmd_bypass)

    p = sub.add_parser("parity", help="odd map of a surgery triangle")
    p.add_argument("--dots", type=int, nargs=3, required=True)
    p.set_defaults(handler=cmd_parity)

    p = sub.add_parser("degree", help="mod 2 degree of a cobordism map")
    p.add_argument("--euler", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--b1", type=int, nargs=2, default=[0, 0], metavar=("IN", "OUT"))
    p.add_argument("--b0", type=int, nargs=2, default=[1, 1], metavar=("IN", "OUT"))
    p.set_defaults(handler=cmd_degree)

    p = sub.add_parser("solve-triangle", help="missing chi in an exact triangle")
    p.add_argument("--chis", nargs=3, required=True, help="three values, '?' for the unknown")
    p.add_argument("--odd", required=True, choices=["1", "2", "3", "all"])
    p.set_defaults(handler=cmd_solve_triangle)
    return parser


def _single_value_options(parser: argparse.ArgumentParser) -> set[str]:
    out = set()
    actions = list(parser._actions)
    for a in parser._actions:
        if isinstance(a, argparse._SubParsersAction):
            for sp in a.choices.values():
                actions.extend(sp._actions)
    for a in actions:
        if a.option_strings and a.nargs is None and not isinstance(a, (argparse._StoreTrueAction, argparse._VersionAction, argparse._HelpAction)):
            out.update(a.option_strings)
    return out


def _glue_values(argv: Sequence[str], singles: set[str]) -> list[str]:
    # argparse takes "-5/7" or "-t" for an option; glue such values to their flag
    out: list[str] = []
    i = 0
    argv = list(argv)
    while i < len(argv):
        tok = argv[i]
        if tok in singles and i + 1 < len(argv) and argv[i + 1].startswith("-") and argv[i + 1] not in singles:
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


# --- execution ---------------------------------------------------------------


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "), ensure_ascii=False)


def _inputs(ns) -> dict:
    return {k: v for k, v in sorted(vars(ns).items()) if k not in _NON_SEMANTIC}


def execute(ns, cache: Cache | None) -> tuple[int, str]:
    """Run one parsed command; returns (exit code, output line)."""
    handler: Callable = ns.handler
    key = cache_key(ns.command, _inputs(ns)) if cache is not None else None
    if cache is not None:
        try:
            hit = cache.get(key)
        except OSError as exc:
            print(f"foxchi: cache read failed: {exc}", file=sys.stderr)
            hit = None
        if hit is not None:
            return 0, hit
    try:
        text = _dumps(handler(ns))
    except _Usage as exc:
        return 2, _dumps({"error": "UsageError", "message": str(exc)})
    except (FoxchiError, ValueError, ArithmeticError, OSError) as exc:
        return 1, _dumps({"error": type(exc).__name__, "message": str(exc)})
    if cache is not None:
        try:
            cache.put(key, text)
        except OSError as exc:
            print(f"foxchi: cache write failed: {exc}", file=sys.stderr)
    return 0, text


def _parse(parser, argv):
    return parser.parse_args(_glue_values(argv, _single_value_options(parser)))


def _batch_argv(obj: dict) -> list[str]:
    if not isinstance(obj, dict) or "command" not in obj:
        raise _Usage("batch lines must be objects with a 'command' key")
    argv = [str(obj["command"])]
    for k, v in obj.items():
        if k == "command" or v is None or v is False:
            continue
        flag = "--" + k.replace("_", "-")
        if v is True:
            argv.append(flag)
        elif isinstance(v, list):
            argv.append(flag)
            argv.extend(str(x) for x in v)
        else:
            argv.append(flag)
            argv.append(str(v))
    return argv


def _batch_worker(args: tuple[list[str], str | None]) -> tuple[int, str]:
    argv, cache_path = args
    parser = build_parser()
    try:
        ns = _parse(parser, argv)
    except SystemExit as exc:
        return int(exc.code or 0), _dumps({"error": "UsageError", "message": " ".join(argv)})
    if ns.command is None:
        return 2, _dumps({"error": "UsageError", "message": "missing command"})
    cache = Cache(Path(cache_path)) if cache_path else None
    return execute(ns, cache)


def _run_batch(path: str, jobs: int, cache_path: str | None, out) -> int:
    work = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                work.append((_batch_argv(json.loads(line)), cache_path))
            except (json.JSONDecodeError, _Usage) as exc:
                print(f"foxchi: {path}:{lineno}: {exc}", file=sys.stderr)
                return 2
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_batch_worker, work))
    else:
        results = [_batch_worker(w) for w in work]
    for _, text in results:
        out.write(text + "\n")
    return max((code for code, _ in results), default=0)


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        ns = _parse(parser, argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cache_path = None if ns.no_cache else str(ns.cache or default_cache_path())
    if ns.jobs < 1:
        print("foxchi: --jobs must be positive", file=sys.stderr)
        return 2
    if ns.batch:
        try:
            return _run_batch(ns.batch, ns.jobs, cache_path, out)
        except OSError as exc:
            print(f"foxchi: {exc}", file=sys.stderr)
            return 2
    if ns.command is None:
        parser.print_usage(sys.stderr)
        return 2
    with warnings.catch_warnings():
        warnings.simplefilter("always")
        warnings.showwarning = _warn_stderr
        code, text = execute(ns, Cache(Path(cache_path)) if cache_path else None)
    out.write(text + "\n")
    return code


def _warn_stderr(message, category, filename, lineno, file=None, line=None):
    print(f"foxchi: warning: {message}", file=sys.stderr)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
