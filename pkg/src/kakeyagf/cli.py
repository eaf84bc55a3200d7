"""Command-line front end: sweeps, reports and the full verification run.

Pure orchestration; all mathematics lives in the library modules. Output
is deterministic for a fixed configuration and seed regardless of the
worker count: work items are mapped in a fixed order and every collection
is emitted sorted. JSON is the machine format of record; csv and text are
renderings of the same report object.

Exit codes: 0 all verdicts pass, 1 any verification failure, 2 usage
error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import bluher, gold, kakeya, quartic
from .field import MAX_DEGREE, make_field
from .fiber import Gold, Quartic, fiber_distribution

USAGE_ERROR = 2


@dataclass
class RunConfig:
    verb: str
    format: str = "text"
    parallelism: int = 1
    seed: int = 0
    modulus: int | None = None
    m: int | None = None
    i: int | None = None
    n: int | None = None
    t: int | None = None
    f: str | None = None
    check: bool = False
    cap: int = kakeya.DEFAULT_MATERIALIZE_CAP
    verify: bool = False
    m_max: int = 12
    m_range: tuple[int, int] | None = None
    n_range: tuple[int, int] | None = None


class UsageError(Exception):
    pass


def _parse_hex(s: str) -> int:
    try:
        return int(s, 16)
    except ValueError:
        raise UsageError(f"not a hex value: {s!r}")


def _parse_range(s: str) -> tuple[int, int]:
    try:
        lo, hi = s.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"expected a range like 2..6, got {s!r}")
    if lo > hi:
        raise UsageError(f"empty range {s!r}")
    return lo, hi


def _parse_function(s: str):
    if s == "quartic":
        return Quartic()
    if s.startswith("gold:"):
        try:
            return Gold(int(s.split(":", 1)[1]))
        except ValueError:
            pass
    raise UsageError(f"unknown function {s!r}; use gold:I or quartic")


def _field_for(config: RunConfig):
    return make_field(config.m, config.modulus)


# ----------------------------------------------------------------------
# rendering

def _text_table(rows: list[dict]) -> str:
    if not rows:
        return ""
    cols = list(rows[0].keys())
    cells = [[str(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[k]) for row in cells)) for k, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _emit(payload: dict, rows: list[dict] | None, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        out_rows = rows if rows is not None else [payload]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(out_rows[0].keys()))
        writer.writeheader()
        writer.writerows(out_rows)
        print(buf.getvalue(), end="")
    else:
        if rows is not None:
            print(_text_table(rows))
            extras = {k: v for k, v in payload.items() if not isinstance(v, list)}
            if extras:
                print(" ".join(f"{k}={v}" for k, v in extras.items()))
        else:
            for k, v in payload.items():
                print(f"{k}={v}")


# ----------------------------------------------------------------------
# verbs

def _run_verify_bluher(config: RunConfig) -> int:
    rows = [{"m": r.m, "i": r.i, "d": r.d, "n0_formula": r.n0_formula,
             "n0_bruteforce": r.n0_bruteforce, "agree": r.agree}
            for r in bluher.agreement_sweep(config.m_max, config.parallelism)]
    ok = all(r["agree"] for r in rows)
    _emit({"rows": rows, "ok": ok}, rows, config.format)
    return 0 if ok else 1


def _run_gold(config: RunConfig) -> int:
    field = _field_for(config)
    prof = gold.gold_profile(config.m, config.i)
    payload = {"m": prof.m, "i": prof.i, "d": prof.d, "q": field.q,
               "parity_case": prof.parity_case,
               "size_at_zero": prof.size_at_zero,
               "size_at_nonzero": prof.size_at_nonzero}
    ok = True
    if config.verify:
        case = gold.profile_case(config.m, config.i)
        payload["profile_matches_bruteforce"] = case["ok"]
        ok = case["ok"]
        if field.m % 2 == 0 and config.i == field.m // 2:
            st = gold.verify_half_gold_structure(field)
            payload["image_is_subfield"] = st.image_is_subfield
            payload["injective_on_trace_one"] = st.injective_on_trace_one
            payload["two_to_one_elsewhere"] = st.two_to_one_elsewhere
            payload["image_size_at_one"] = st.image_size_at_one
            payload["scale_invariant"] = gold.scale_invariance_check(field, config.i)
            ok = ok and st.ok and payload["scale_invariant"]
    _emit(payload, None, config.format)
    return 0 if ok else 1


def _run_quartic(config: RunConfig) -> int:
    field = _field_for(config)
    m = field.m
    if config.t is not None:
        t = config.t
        if not 0 <= t < field.q:
            raise UsageError(f"t={t:x} outside the field")
        dist = fiber_distribution(field, Quartic(), t)
        payload = {"m": m, "q": field.q, "t": f"{t:x}",
                   "tr_t": field.trace_abs(t), "omega": dist.omega,
                   "image_size": dist.image_size()}
        ok = True
        if m % 2 == 1 and t != 0:
            rec = quartic.image_record(field, t)
            cpc = quartic.curve_point_count(field, t)
            payload.update({"v": cpc.v, "delta": cpc.delta,
                            "image_size_exact": rec.exact_size,
                            "floor_bound": rec.floor_bound, "sharp": rec.sharp})
            ok = rec.exact_size == dist.image_size()
            payload["formula_matches_bruteforce"] = ok
        _emit(payload, None, config.format)
        return 0 if ok else 1
    payload = {"m": m, "q": field.q}
    fib = quartic.fiber_formula_case(field)
    payload["fiber_formulas_ok"] = fib["ok"]
    ok = fib["ok"]
    if m % 2 == 1:
        case = quartic.image_exact_case(field, spot=None, seed=config.seed)
        payload["image_exact_ok"] = case["match_ok"]
        payload["hasse_ok"] = case["hasse_ok"]
        payload["floor_bound"] = quartic.quartic_floor_bound(m)
        ok = ok and case["ok"]
    _emit(payload, None, config.format)
    return 0 if ok else 1


def _run_sharpness(config: RunConfig) -> int:
    if config.m % 2 == 0:
        raise UsageError("m must be odd")
    field = _field_for(config)
    r = quartic.sharpness_search(field)
    payload = {"m": field.m, "q": field.q, "bound": r.bound,
               "max_size": r.max_size, "sharp": r.sharp,
               "witnesses": [f"{t:x}" for t in r.witnesses]}
    _emit(payload, None, config.format)
    return 0 if (r.sharp or field.m > 13) else 1


def _run_kakeya(config: RunConfig) -> int:
    field = _field_for(config)
    fn = _parse_function(config.f)
    try:
        ks = kakeya.build_kakeya(field, config.n, fn, materialize_cap=config.cap,
                                 seed=config.seed)
    except ValueError as exc:
        raise UsageError(str(exc))
    rep = kakeya.bound_report(field, config.n, fn, ks.size)
    verified = None
    if config.check:
        if ks.points is None:
            print("materialization cap exceeded; line check skipped", file=sys.stderr)
        else:
            verified = kakeya.verify_kakeya(ks).ok
    payload = {"q": field.q, "n": config.n, "f": rep.f, "size": ks.size,
               "bound_new": rep.new_bound, "bound_klss": rep.klss_bound,
               "kakeya_verified": verified}
    _emit(payload, None, config.format)
    return 0 if rep.ok and verified is not False else 1


def _run_bounds(config: RunConfig) -> int:
    rows = []
    for m in range(config.m_range[0], config.m_range[1] + 1):
        q = 1 << m
        new_kind = "new_even" if m % 2 == 0 else "new_odd"
        klss_kind = "klss_even_power" if m % 2 == 0 else "klss_odd_power"
        for n in range(config.n_range[0], config.n_range[1] + 1):
            new = kakeya.bound_eval(new_kind, q, n)
            old = kakeya.bound_eval(klss_kind, q, n)
            rows.append({"q": q, "n": n, "bound_new": new, "bound_klss": old,
                         "new_below_klss": new < old})
    _emit({"rows": rows}, rows, config.format)
    return 0


def _run_all(config: RunConfig) -> int:
    m_max = config.m_max
    if not 2 <= m_max <= 13:
        raise UsageError("--m-max must be in 2..13")
    workers = config.parallelism
    checks = []

    def add(name, rows, ok_key="ok"):
        ok = all(r[ok_key] for r in rows)
        checks.append({"name": name, "ok": ok, "cases": len(rows)})
        return ok

    add("bluher-agreement",
        [{"ok": r.agree} for r in bluher.agreement_sweep(min(12, m_max), workers)])
    add("gold-image-profile", gold.image_profile_sweep(min(12, m_max), workers))
    add("half-gold-structure", gold.half_gold_sweep(min(12, m_max), workers))
    add("quartic-fiber-formulas", quartic.fiber_formula_sweep(min(13, m_max), workers))
    odds = [m for m in (3, 5, 7, 9, 11) if m <= m_max]
    add("quartic-image-exact",
        quartic.image_exact_sweep(odds, spot_m=13 if m_max >= 13 else None,
                                  seed=config.seed, workers=workers))
    add("quartic-floor-sharpness",
        quartic.sharpness_sweep([m for m in (1, 3, 5, 7, 9, 11, 13) if m <= m_max],
                                workers))
    add("kakeya-construction",
        kakeya.construction_sweep(ms=[m for m in (2, 3, 4) if m <= m_max],
                                  workers=workers))
    add("bound-dominance", kakeya.bound_dominance_rows())
    add("floor-bound-integer-path", quartic.floor_bound_consistency(31))

    ok = all(c["ok"] for c in checks)
    payload = {"m_max": m_max, "seed": config.seed, "checks": checks, "ok": ok}
    if config.format == "text":
        for c in checks:
            print(f"{'PASS' if c['ok'] else 'FAIL'} {c['name']} ({c['cases']} cases)")
        print("all checks passed" if ok else "FAILURES present")
    else:
        _emit(payload, checks, config.format)
    return 0 if ok else 1


_HANDLERS = {
    "verify-bluher": _run_verify_bluher,
    "gold": _run_gold,
    "quartic": _run_quartic,
    "sharpness": _run_sharpness,
    "kakeya": _run_kakeya,
    "bounds": _run_bounds,
    "all": _run_all,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--parallelism", "-j", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)

    modulus = argparse.ArgumentParser(add_help=False)
    modulus.add_argument("--modulus", type=str, default=None,
                         help="hex-encoded irreducible modulus override")

    parser = argparse.ArgumentParser(
        prog="kakeyagf",
        description="Kakeya sets over binary fields: constructions, exact counts, verification")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify-bluher", parents=[common],
                       help="no-root counts: closed form vs brute force")
    p.add_argument("--m-max", type=int, default=12)

    p = sub.add_parser("gold", parents=[common, modulus],
                       help="image-set profile of x^(2^i+1)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("quartic", parents=[common, modulus],
                       help="fiber and image statistics of x^4+x^3+tx")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=str, default=None, help="slope, hex")

    p = sub.add_parser("sharpness", parents=[common, modulus],
                       help="slopes attaining the image-size cap (odd m)")
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("kakeya", parents=[common, modulus],
                       help="build a Kakeya set and compare bounds")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--f", type=str, required=True, help="gold:I or quartic")
    p.add_argument("--check", action="store_true",
                   help="exhaustively verify the line-in-every-direction property")
    p.add_argument("--cap", type=int, default=kakeya.DEFAULT_MATERIALIZE_CAP)

    p = sub.add_parser("bounds", parents=[common], help="bound comparison table")
    p.add_argument("--m-range", type=str, required=True, help="like 3..7")
    p.add_argument("--n-range", type=str, required=True, help="like 1..6")

    p = sub.add_parser("all", parents=[common], help="full verification sweep")
    p.add_argument("--m-max", type=int, default=13)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(verb=args.verb, format=args.format,
                       parallelism=args.parallelism, seed=args.seed)
    if config.parallelism < 1:
        raise UsageError("--parallelism must be >= 1")
    if getattr(args, "modulus", None) is not None:
        config.modulus = _parse_hex(args.modulus)
    for name in ("m", "i", "n", "cap", "check", "verify", "f"):
        if hasattr(args, name):
            setattr(config, name, getattr(args, name))
    if getattr(args, "m_max", None) is not None:
        config.m_max = args.m_max
    if getattr(args, "t", None) is not None:
        config.t = _parse_hex(args.t)
    if hasattr(args, "m_range"):
        config.m_range = _parse_range(args.m_range)
        config.n_range = _parse_range(args.n_range)
    if config.m is not None and not 1 <= config.m <= MAX_DEGREE:
        raise UsageError(f"--m must be in 1..{MAX_DEGREE}")
    if config.n is not None and config.n < 1:
        raise UsageError("--n must be >= 1")
    return config


def run(config: RunConfig) -> int:
    return _HANDLERS[config.verb](config)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
        return run(config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
