"""Command-line interface: ``afill <command> ...``.

Exit codes: 0 on success (all checks pass), 1 when a verification fails, 2 on
usage errors, malformed input, or an exceeded size bound.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass, field
from typing import Callable

from . import algebra, augmentation as aug_mod, flips, orbits
from .combinatorics import (
    Diagonal, Permutation312, catalan, clip_sequence, enumerate_312, internal_triangle_count,
    rotate_triangulation, triangulation_of,
)
from .errors import BoundExceeded, InvalidDiagonal, InvalidFlip, MalformedInput

FORMATS = ("table", "json", "csv")


@dataclass
class ReportEnvelope:
    command: str
    n: int | None
    payload: dict
    verified: dict[str, bool] = field(default_factory=dict)

    def ok(self) -> bool:
        return all(self.verified.values())

    def to_json(self) -> str:
        body = {"command": self.command, "n": self.n, "payload": self.payload, "verified": self.verified}
        return json.dumps(body, sort_keys=True, indent=2)


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"4"`` or ``"2..8"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad n range {text!r}; use N or LO..HI") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"bad n range {text!r}")
    return list(range(lo, hi + 1))


def _bounded(ns: list[int]) -> list[int]:
    bound = orbits.census_bound()
    if max(ns) > bound:
        raise BoundExceeded(f"n={max(ns)} exceeds the enumeration bound {bound} (set {orbits.BOUND_ENV})")
    return ns


def _perm(text: str) -> Permutation312:
    return Permutation312.parse(text)


def _diag_text(ds) -> str:
    return " ".join(str(d) for d in sorted(ds))


# commands


def cmd_enumerate(args) -> ReportEnvelope:
    n = _bounded([args.n])[0]
    rows = [{"permutation": str(p), "diagonals": _diag_text(triangulation_of(p).diagonals)}
            for p in enumerate_312(n)]
    return ReportEnvelope("enumerate", n, {"rows": rows, "count": len(rows)},
                          {"count_is_catalan": len(rows) == catalan(n)})


def cmd_orbits(args) -> ReportEnvelope:
    n = _bounded([args.n])[0]
    report = orbits.orbit_census(n)
    sizes = report.size_of()
    rows = [{"permutation": str(p), "orbit_size": orbits.orbit_size(p)} for p in enumerate_312(n)]
    summary = {
        "orbit_count": report.total_orbits,
        "formula": orbits.orbit_count(n),
        "counts_by_size": {str(k): v for k, v in report.counts_by_size.items()},
    }
    verified = {
        "census_matches_formula": report.total_orbits == orbits.orbit_count(n),
        "algorithm_matches_oracle": all(r["orbit_size"] == sizes[Permutation312.parse(r["permutation"])]
                                        for r in rows),
    }
    return ReportEnvelope("orbits", n, {"rows": rows, "summary": summary}, verified)


@dataclass
class _Outcome:
    label: str
    ok: bool
    witness: str = ""


def _check_theta(n, args, rng):
    for k in range(3, n + 2):
        c = algebra.verify_theta_identity(n, k, sign=args.sign)
        yield _Outcome(c.label, c.holds, "" if c.holds else f"lhs - rhs = {c.difference}")


def _check_euler(n, args, rng):
    if args.display_form:
        for k in range(3, n + 1):
            c = algebra.verify_euler_special(n, k, display_form=True, sign=args.sign)
            yield _Outcome(c.label, c.holds, "" if c.holds else f"lhs - rhs = {c.difference}")
        return
    for mu, kappa, nu in algebra.admissible_euler_triples(n):
        c = algebra.verify_euler_identity(mu, kappa, nu, n, sign=args.sign)
        yield _Outcome(c.label, c.holds, "" if c.holds else f"lhs - rhs = {c.difference}")


def _check_fibonacci(n, args, rng):
    for p in enumerate_312(n):
        ok, ws = aug_mod.verify_fibonacci(p)
        bad = [f"{w.diagonal}: {w.image} != {w.expected}" for w in ws if not w.holds]
        yield _Outcome(f"fibonacci {p}", ok, "; ".join(bad))


def _check_basis(n, args, rng):
    for p in enumerate_312(n):
        r = aug_mod.verify_basis(p)
        yield _Outcome(f"basis {p}", r.holds, "" if r.holds else f"failing triangles {r.failures}")


def _check_geodesic(n, args, rng):
    for p in enumerate_312(n):
        t = triangulation_of(p)
        g = flips.rotation_geodesic(t)
        want = n - 1 + internal_triangle_count(t)
        ok = len(g) == want and g.end == rotate_triangulation(t, 1)
        if ok and n <= args.bfs_limit:
            ok = flips.flip_distance(t, g.end) == want
        yield _Outcome(f"geodesic {p}", ok, "" if ok else f"length {len(g)}, expected {want}")


def _check_flip_perm(n, args, rng):
    for p in enumerate_312(n):
        t = triangulation_of(p)
        for d in t.sorted_diagonals():
            want = clip_sequence(flips.flip(t, d))
            got = flips.flip_on_permutation_at(p, d)
            try:
                quad = flips.flip_quadrilateral(t, d)
            except InvalidFlip:
                pass
            else:
                got = flips.flip_on_permutation(p, quad)
            yield _Outcome(f"flip-perm {p} at {d}", got == want, "" if got == want else f"{got} != {want}")


def _check_orbit_algo(n, args, rng):
    sizes = orbits.orbit_census(n).size_of()
    for p, s in sizes.items():
        got = orbits.orbit_size(p)
        yield _Outcome(f"orbit-algo {p}", got == s, "" if got == s else f"algorithm {got}, oracle {s}")


def _check_point_order(n, args, rng):
    for p in enumerate_312(n):
        a = aug_mod.augmentation(p)
        for _ in range(args.samples):
            z = aug_mod.sample_variety_point(p, rng=rng, aug=a)
            w, kept = z, True
            for _ in range(n + 2):
                w = algebra.kalman_point_step(w)
                kept = kept and algebra.aug_value(w) == 0
            ok = kept and w == z
            yield _Outcome(f"point-order {p}", ok,
                           "" if ok else f"start {[str(x) for x in z]}: X_n kept {kept}, returns {w == z}")


CHECKS: dict[str, tuple[Callable, str]] = {
    "theta": (_check_theta, "2..8"),
    "euler": (_check_euler, "1..7"),
    "fibonacci": (_check_fibonacci, "1..8"),
    "basis": (_check_basis, "1..8"),
    "geodesic": (_check_geodesic, "1..8"),
    "flip-perm": (_check_flip_perm, "1..8"),
    "orbit-algo": (_check_orbit_algo, "2..12"),
    "point-order": (_check_point_order, "1..6"),
}


def cmd_verify(args) -> ReportEnvelope:
    run, default = CHECKS[args.check]
    ns = _bounded(parse_range(args.n or default))
    rng = random.Random(args.seed)
    per_n = {}
    failures = []
    total = 0
    for n in ns:
        passed = count = 0
        for o in run(n, args, rng):
            count += 1
            passed += o.ok
            if not o.ok:
                failures.append({"case": o.label, "witness": o.witness})
        per_n[str(n)] = {"checked": count, "passed": passed}
        total += count
    payload = {
        "check": args.check,
        "n_range": [ns[0], ns[-1]],
        "per_n": per_n,
        "checked": total,
        "failures": failures[:args.max_witnesses],
        "failure_count": len(failures),
    }
    if args.check in ("theta", "euler"):
        payload["sign"] = args.sign
    if args.check == "euler":
        payload["display_form"] = args.display_form
    return ReportEnvelope("verify", ns[-1], payload, {args.check: not failures})


def cmd_rotate(args) -> ReportEnvelope:
    p = _perm(args.sigma)
    t = triangulation_of(p)
    g = flips.rotation_geodesic(t)
    states = g.states()
    steps = [{"flip": str(d), "new": str(next(iter(b.diagonals - a.diagonals))),
              "permutation": str(clip_sequence(b))}
             for d, a, b in zip(g.steps, states, states[1:])]
    result = clip_sequence(g.end)
    payload = {"sigma": str(p), "steps": steps, "length": len(g), "result": str(result),
               "internal_triangles": internal_triangle_count(t)}
    verified = {"lands_on_rotation": result == orbits.kalman_step(p),
                "length_is_n_minus_1_plus_t": len(g) == p.n - 1 + internal_triangle_count(t)}
    return ReportEnvelope("rotate", p.n, payload, verified)


def _parse_diagonal(text: str, n: int) -> Diagonal:
    try:
        a, b = (int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"bad diagonal {text!r}; use A,B") from None
    return Diagonal.of(a, b, n)


def cmd_flip(args) -> ReportEnvelope:
    p = _perm(args.sigma)
    d = _parse_diagonal(args.diagonal, p.n)
    t = triangulation_of(p)
    new_t = flips.flip(t, d)
    result = flips.flip_on_permutation_at(p, d)
    payload = {"sigma": str(p), "diagonal": str(d), "new_diagonal": str(flips.flip_partner(t, d)),
               "result": str(result), "diagonals": _diag_text(new_t.diagonals)}
    return ReportEnvelope("flip", p.n, payload, {"matches_triangulation": result == clip_sequence(new_t)})


def cmd_aug(args) -> ReportEnvelope:
    p = _perm(args.sigma)
    a = aug_mod.augmentation(p)
    images = {f"z{j}": str(a.images[j]) for j in range(1, p.n + 1)}
    fib, _ = aug_mod.verify_fibonacci(p, a)
    payload = {"sigma": str(p), "images": images}
    verified = {"x_vanishes": a.x_value().is_zero(), "fibonacci": fib,
                "basis": aug_mod.verify_basis(p, a).holds}
    return ReportEnvelope("aug", p.n, payload, verified)


# rendering


def _table(rows: list[dict], columns: list[str]) -> str:
    widths = [max([len(c)] + [len(str(r[c])) for r in rows]) for c in columns]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines += ["  ".join(str(r[c]).ljust(w) for c, w in zip(columns, widths)).rstrip() for r in rows]
    return "\n".join(lines)


def _csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def render(env: ReportEnvelope, fmt: str) -> str:
    if fmt == "json":
        return env.to_json()
    p = env.payload
    if env.command == "enumerate":
        cols = ["permutation", "diagonals"]
        return _csv(p["rows"], cols) if fmt == "csv" else _table(p["rows"], cols)
    if env.command == "orbits":
        cols = ["permutation", "orbit_size"]
        if fmt == "csv":
            return _csv(p["rows"], cols)
        s = p["summary"]
        sizes = ", ".join(f"size {k}: {v}" for k, v in s["counts_by_size"].items())
        return _table(p["rows"], cols) + f"\n\n{s['orbit_count']} orbits ({sizes})"
    if env.command == "verify":
        rows = [{"n": n, "checked": v["checked"], "passed": v["passed"]} for n, v in p["per_n"].items()]
        if fmt == "csv":
            return _csv(rows, ["n", "checked", "passed"])
        status = "PASS" if env.ok() else "FAIL"
        out = [_table(rows, ["n", "checked", "passed"]), "", f"{p['check']}: {status}"]
        if p["failure_count"]:
            out.append(f"{p['failure_count']} failing cases; first witnesses:")
            out += [f"  {f['case']}: {f['witness']}" for f in p["failures"]]
        return "\n".join(out)
    if env.command == "rotate":
        if fmt == "csv":
            return _csv(p["steps"], ["flip", "new", "permutation"])
        out = [f"sigma {p['sigma']}: {p['length']} flips ({p['internal_triangles']} internal triangles)"]
        out += [f"  flip {s['flip']} -> {s['new']}  {s['permutation']}" for s in p["steps"]]
        out.append(f"result {p['result']}")
        return "\n".join(out)
    if env.command == "flip":
        if fmt == "csv":
            return _csv([p], ["sigma", "diagonal", "new_diagonal", "result"])
        return p["result"]
    if env.command == "aug":
        rows = [{"generator": k, "image": v} for k, v in p["images"].items()]
        if fmt == "csv":
            return _csv(rows, ["generator", "image"])
        return "\n".join(f"{r['generator']} -> {r['image']}" for r in rows)
    raise AssertionError(env.command)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="afill", description="Fillings of A-type torus links: "
                                     "permutations, triangulations, orbits and identities.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list 312-avoiding permutations with triangulations")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("orbits", parents=[common], help="orbit size of every filling")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive or sampled check")
    p.add_argument("check", choices=sorted(CHECKS))
    p.add_argument("--n", help="N or LO..HI (default depends on the check)")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    p.add_argument("--samples", type=int, default=20, help="points per permutation for point-order")
    p.add_argument("--display-form", action="store_true",
                   help="euler: check the printed index variant D(k+2,n+2)")
    p.add_argument("--sign", choices=algebra.SIGNS, default="stated",
                   help="theta/euler: sign convention of the identity")
    p.add_argument("--bfs-limit", type=int, default=6, help="geodesic: confirm minimality by BFS up to this n")
    p.add_argument("--max-witnesses", type=int, default=10)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rotate", parents=[common], help="flip sequence realizing one rotation")
    p.add_argument("--sigma", required=True)
    p.set_defaults(func=cmd_rotate)

    p = sub.add_parser("flip", parents=[common], help="flip one diagonal, read on the permutation")
    p.add_argument("--sigma", required=True)
    p.add_argument("--diagonal", required=True, help="A,B")
    p.set_defaults(func=cmd_flip)

    p = sub.add_parser("aug", parents=[common], help="augmentation images of z_1..z_n")
    p.add_argument("--sigma", required=True)
    p.set_defaults(func=cmd_aug)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        env = args.func(args)
    except (UsageError, MalformedInput, InvalidDiagonal, InvalidFlip, BoundExceeded) as exc:
        print(f"afill: error: {exc}", file=sys.stderr)
        return 2
    print(render(env, args.format))
    return 0 if env.ok() else 1


if __name__ == "__main__":
    sys.exit(main())
