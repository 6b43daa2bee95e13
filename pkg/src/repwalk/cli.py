"""Unified command-line front end.

Every run with an identical configuration produces byte-identical output:
rationals serialize as p/q strings, floats as shortest round-trip decimals,
samplers are pinned by --seed (and --threads, through per-worker derived
seeds).  Wall-clock timing goes to stderr so artifacts stay deterministic.
Exit codes: 0 ok, 2 usage error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import __version__
from .characters import character_table
from .errors import CapacityError
from .glasymptotics import (
    GLPlancherelSampler,
    acceptance_probability,
    cycle_index_lhs,
    cycle_index_rhs,
    default_rejection_u,
)
from .glirreps import (
    dimension_gl,
    fixed_space_counts,
    gl_lower_bound,
    gl_upper_bound,
    gl_upper_bound_squared,
    order_gl,
    plancherel_gl,
    unipotent_tail_bound,
    DEFAULT_ENUM_N,
    DEFAULT_ENUM_Q,
)
from .hsp import hsp_bounds, subgroup_closure, weak_sampling_distribution
from .partitions import Partition, enumerate_partitions
from .rng import derive_seed
from .series import euler_lhs_rhs
from .snwalk import (
    moment_fc,
    moment_fc_reduced,
    rsk_samples,
    sn_tv_curve,
    sn_upper_bound,
    tv_to_plancherel,
    walk_distribution,
    walk_samples,
)


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _meta_lines(command: str, args: argparse.Namespace) -> list[str]:
    skip = {"func", "out", "command"}
    pairs = sorted(
        (k, v) for k, v in vars(args).items() if k not in skip and v is not None
    )
    echo = " ".join(f"{k}={v}" for k, v in pairs)
    return [f"# repwalk {__version__}", f"# command: {command} {echo}"]


def _write_csv(args, command: str, header: list[str], rows, extra_meta=()):
    lines = _meta_lines(command, args) + list(extra_meta)
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    _emit(args, "\n".join(lines) + "\n")


def _write_json(args, command: str, payload: dict):
    doc = {"meta": {"tool": f"repwalk {__version__}", "command": command}}
    doc.update(payload)
    _emit(args, json.dumps(doc, indent=2) + "\n")


def _emit(args, text: str):
    out = getattr(args, "out", None)
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _chunked(sample_fn, count: int, seed: int, threads: int) -> list:
    """Split count across workers with derived seeds; merge in worker order."""
    threads = max(1, threads)
    base = count // threads
    sizes = [base + (1 if i < count % threads else 0) for i in range(threads)]
    jobs = [(sizes[i], derive_seed(seed, i)) for i in range(threads) if sizes[i]]
    if threads == 1:
        return [x for c, s in jobs for x in sample_fn(c, s)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda job: sample_fn(*job), jobs))
    return [x for part in parts for x in part]


# ---------------------------------------------------------------------------
# subcommands


def _cmd_characters(args):
    table = character_table(args.n, args.exact_limit)
    class_labels = [c.cycle_lengths.to_string() for c in table.classes]
    if args.format == "json":
        _write_json(args, "characters", {
            "n": args.n,
            "classes": [
                {"cycles": lbl, "size": c.class_size, "fixed_points": c.fixed_points}
                for lbl, c in zip(class_labels, table.classes)
            ],
            "rows": [
                {"partition": lam.to_string(), "values": list(vals)}
                for lam, vals in zip(table.partitions, table.values)
            ],
        })
    else:
        sizes = ["# class sizes: " + ",".join(str(c.class_size) for c in table.classes)]
        rows = [
            [lam.to_string(), *vals] for lam, vals in zip(table.partitions, table.values)
        ]
        _write_csv(args, "characters", ["partition", *class_labels], rows, sizes)
    return 0


def _cmd_sn_walk(args):
    start = Partition.from_string(args.start) if args.start else None
    dist = walk_distribution(args.n, args.r, start, args.mode)
    extra = []
    if args.mode == "float":
        extra.append(f"# accumulated float error bound: {dist.error_bound!r}")
    rows = [[lam.to_string(), dist.mass(lam)] for lam in enumerate_partitions(args.n)]
    _write_csv(args, "sn-walk", ["partition", "mass"], rows, extra)
    return 0


def _cmd_sn_tv_curve(args):
    rows = sn_tv_curve(args.n, args.rmax, args.mode)
    extra = []
    if args.mode == "float":
        from .partitions import enumerate_partitions as _parts
        from .snwalk import FLOAT_ENTRY_RELERR

        err = args.rmax * len(_parts(args.n)) * FLOAT_ENTRY_RELERR
        extra.append(f"# accumulated float error bound at rmax: {err!r}")
    _write_csv(args, "sn-tv-curve", ["r", "tv", "l2_bound"], rows, extra)
    return 0


def _cmd_sn_cutoff(args):
    n, c = args.n, args.c
    r = math.ceil(0.5 * n * math.log(n) + c * n)
    target = math.exp(-2 * c) / 2
    mode = "exact" if n <= 12 else "float"
    dist = walk_distribution(n, r, mode=mode)
    tv = float(tv_to_plancherel(dist))
    rows = [[r, target, tv, sn_upper_bound(n, r)]]
    _write_csv(args, "sn-cutoff", ["r", "cutoff_bound", "tv", "l2_bound"], rows)
    return 0


def _cmd_sn_sample(args):
    samples = _chunked(
        lambda count, seed: walk_samples(args.n, args.r, count, seed),
        args.count, args.seed, args.threads,
    )
    rows = [[i, lam.to_string()] for i, lam in enumerate(samples)]
    _write_csv(args, "sn-sample", ["index", "partition"], rows)
    return 0


def _cmd_sn_rsk(args):
    samples = _chunked(
        lambda count, seed: rsk_samples(args.n, args.r, count, seed),
        args.count, args.seed, args.threads,
    )
    rows = [[i, lam.to_string()] for i, lam in enumerate(samples)]
    _write_csv(args, "sn-rsk", ["index", "partition"], rows)
    return 0


def _cmd_sn_moments(args):
    transposition = Partition([2] + [1] * (args.n - 2))
    rows = []
    for s in (1, 2):
        for method in ("transfer", "direct", "closed"):
            rows.append([
                s, method,
                moment_fc(args.n, transposition, s, args.r, method),
                moment_fc_reduced(args.n, transposition, s, args.r, method),
            ])
    if args.samples:
        from .partitions import dimension_sn

        size = math.comb(args.n, 2)
        table = character_table(args.n)
        ci = table.partitions.index(transposition)
        draws = _chunked(
            lambda count, seed: walk_samples(args.n, args.r, count, seed),
            args.samples, args.seed, args.threads,
        )
        for s in (1, 2):
            total = 0.0
            for lam in draws:
                i = table.partitions.index(lam)
                total += (math.sqrt(size) * table.values[i][ci] / dimension_sn(lam)) ** s
            rows.append([s, "empirical", total / len(draws), ""])
    _write_csv(args, "sn-moments", ["s", "method", "value", "reduced_exact"], rows)
    return 0


def _cmd_gl_irreps(args):
    masses = plancherel_gl(args.n, args.q)
    rows = [
        [phi.descriptor(), dimension_gl(phi), mass]
        for phi, mass in masses.items()
    ]
    extra = [f"# group order: {order_gl(args.n, args.q)}"]
    _write_csv(args, "gl-irreps", ["family", "dimension", "plancherel_mass"], rows, extra)
    return 0


def _cmd_gl_counts(args):
    counts = fixed_space_counts(args.n, args.q)
    rows = [[i, counts[i]] for i in sorted(counts)]
    extra = [f"# group order: {order_gl(args.n, args.q)}"]
    _write_csv(args, "gl-counts", ["fixed_space_dim", "count"], rows, extra)
    return 0


def _cmd_gl_bound(args):
    bound = gl_upper_bound(args.n, args.q, args.r)
    squared = gl_upper_bound_squared(args.n, args.q, args.r)
    rows = [[args.r, bound, squared]]
    _write_csv(args, "gl-bound", ["r", "bound", "bound_squared"], rows)
    return 0


def _cmd_gl_lower(args):
    enumerable = args.n <= DEFAULT_ENUM_N and args.q <= DEFAULT_ENUM_Q
    value = gl_lower_bound(args.n, args.q, args.c)
    method = "exact-marginal" if enumerable else "tail-bound"
    rows = [[args.c, value, method, unipotent_tail_bound(args.q, args.c)]]
    _write_csv(args, "gl-lower", ["c", "lower_bound", "method", "tail_bound"], rows)
    return 0


def _cmd_gl_sample(args):
    u = Fraction(args.u) if args.u else None
    threads = max(1, args.threads)
    samples = []
    attempts = 0
    base = args.count // threads
    sizes = [base + (1 if i < args.count % threads else 0) for i in range(threads)]
    for i, size in enumerate(sizes):
        if not size:
            continue
        sampler = GLPlancherelSampler(args.n, args.q, u, derive_seed(args.seed, i))
        for _ in range(size):
            samples.append(sampler.sample())
        attempts += sampler.attempts
    rate = acceptance_probability(args.n, args.q, u if u is not None else default_rejection_u(args.n))
    extra = [
        f"# attempts: {attempts}",
        f"# predicted acceptance rate: {rate.midpoint()!r}",
    ]
    rows = [[i, phi.descriptor()] for i, phi in enumerate(samples)]
    _write_csv(args, "gl-sample", ["index", "family"], rows, extra)
    return 0


def _cmd_gl_cycle_index(args):
    failures = 0
    lines = []
    if args.check:
        depth = min(args.order, 4 if args.q == 2 else 3)
        for marker in ("none", "unipotent"):
            lhs = cycle_index_lhs(depth, args.q, marker)
            rhs = cycle_index_rhs(args.q, depth, marker)
            for k in range(depth + 1):
                ok = lhs[k] == rhs[k]
                failures += not ok
                lines.append((marker, k, "OK" if ok else "MISMATCH"))
        lhs_series, rhs_series = euler_lhs_rhs(args.q, args.order)
        gap = max(abs(a - b) for a, b in zip(lhs_series.coeffs, rhs_series.coeffs))
        euler_ok = gap < Fraction(1, 10**30)
        failures += not euler_ok
        lines.append(("euler", args.order, "OK" if euler_ok else "MISMATCH"))
        _write_csv(args, "gl-cycle-index", ["check", "order", "status"], lines)
        return 1 if failures else 0
    rhs = cycle_index_rhs(args.q, args.order, "none")
    rows = [[k, poly[0]] for k, poly in enumerate(rhs)]
    _write_csv(args, "gl-cycle-index", ["u_power", "coefficient"], rows)
    return 0


def _cmd_hsp(args):
    H = subgroup_closure(args.n, args.gens)
    bounds = hsp_bounds(H)
    dist = weak_sampling_distribution(H)
    per_class = [
        {
            "class": c.cycle_lengths.to_string(),
            "size": c.class_size,
            "intersection": H.class_intersections.get(c.cycle_lengths, 0),
        }
        for c in character_table(args.n).classes
    ]
    payload = {
        "n": args.n,
        "subgroup_order": H.order,
        "tv": str(bounds.exact_tv),
        "sharp": bounds.bound_sharp,
        "ks": bounds.bound_ks,
        "sharp_squared": str(bounds.sharp_squared),
        "per_class": per_class,
        "sampling_distribution": {
            lam.to_string(): str(mass) for lam, mass in dist.masses.items()
        },
    }
    if args.format == "json":
        _write_json(args, "hsp", payload)
    else:
        rows = [[p["class"], p["size"], p["intersection"]] for p in per_class]
        extra = [
            f"# tv: {bounds.exact_tv}",
            f"# sharp: {bounds.bound_sharp!r}",
            f"# ks: {bounds.bound_ks!r}",
        ]
        _write_csv(args, "hsp", ["class", "size", "intersection"], rows, extra)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repwalk",
        description="Random walks on irreducible representations of S_n and GL(n,q).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(func=fn)
        p.add_argument("--out", default=None, help="output path (default stdout)")
        return p

    p = add("characters", _cmd_characters, help="character table of S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--exact-limit", type=int, default=12)

    p = add("sn-walk", _cmd_sn_walk, help="r-step walk distribution on Irr(S_n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--start", default=None, help="start partition, e.g. 5+3")
    _mode_flags(p)

    p = add("sn-tv-curve", _cmd_sn_tv_curve, help="TV distance and L2 bound per step")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)
    _mode_flags(p)

    p = add("sn-cutoff", _cmd_sn_cutoff, help="cutoff check at r = n log(n)/2 + c n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, required=True)

    p = add("sn-sample", _cmd_sn_sample, help="simulate the walk")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _sampling_flags(p)

    p = add("sn-rsk", _cmd_sn_rsk, help="RSK shapes after top-to-random shuffles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _sampling_flags(p)

    p = add("sn-moments", _cmd_sn_moments, help="transposition eigenfunction moments")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)

    p = add("gl-irreps", _cmd_gl_irreps, help="families, dimensions, Plancherel measure")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = add("gl-counts", _cmd_gl_counts, help="fixed-space dimension counts in GL(n,q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = add("gl-bound", _cmd_gl_bound, help="L2 mixing bound for the GL walk")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("gl-lower", _cmd_gl_lower, help="TV lower bound at r = n - c")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--c", type=int, required=True)

    p = add("gl-sample", _cmd_gl_sample, help="exact GL(n,q) Plancherel samples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--u", default=None, help="rejection parameter in (0,1), e.g. 1/2")
    _sampling_flags(p)

    p = add("gl-cycle-index", _cmd_gl_cycle_index, help="cycle index and Euler identity")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--order", type=int, default=6)
    p.add_argument("--check", action="store_true")

    p = add("hsp", _cmd_hsp, help="hidden-subgroup distinguishability bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gens", default="", help="comma-separated cycles, e.g. '(1 2),(3 4)'")
    p.add_argument("--format", choices=["csv", "json"], default="json")

    return parser


def _mode_flags(p):
    p.add_argument("--mode", choices=["exact", "float"], default="exact")
    p.add_argument("--exact", dest="mode", action="store_const", const="exact")
    p.add_argument("--float", dest="mode", action="store_const", const="float")


def _sampling_flags(p):
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    started = time.monotonic()
    try:
        code = args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    print(f"elapsed: {time.monotonic() - started:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
