"""Command-line interface: ``hopfq analyze | generate | cloud``.

Exit codes: 0 success, 1 malformed input or invalid parameters,
2 unnormalized input without --normalize, 3 oracle mismatch, 4 I/O failure.
"""
from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Sequence

import numpy as np

from . import hopf_s7, sampling, viz
from .errors import HopfError
from .quaternion import INFINITY, Quaternion
from .report import REPORT_KIND, build_report, check_report
from .serialize import (
    DocumentError,
    atomic_write,
    cloud_csv,
    cloud_json,
    dumps,
    load_documents,
    parse_amplitudes,
    state_document,
)
from .states import TOL_NORM, QubitState, TwoQubitState

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NORM = 2
EXIT_ORACLE = 3
EXIT_IO = 4


class UsageError(Exception):
    """Invalid parameters; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    env = os.environ.get("HOPFQ_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        return 0


def _seed(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--chart", choices=[c.value for c in hopf_s7.FibrationChart], default="standard")
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--seed", type=_seed, default=None, help="default: $HOPFQ_SEED or 0")
    p.add_argument("--normalize", action="store_true", help="renormalize inputs instead of rejecting them")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="hopfq", description="Hopf-fibration geometry of one- and two-qubit states.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    an = sub.add_parser("analyze", parents=[common], help="analyze state documents (JSON or JSON lines)")
    an.add_argument("input", nargs="?", default="-", help="file path, or - for standard input")
    an.add_argument("--check-oracle", action="store_true",
                    help="recompute every value through the matrix oracle; exit 3 on mismatch")

    gen = sub.add_parser("generate", parents=[common], help="emit special or random states")
    gen.add_argument("kind", choices=["bell", "mes", "omega-mes", "separable", "random"])
    gen.add_argument("--index", type=int, action="append",
                     help="Bell state index 0..3 (phi+, phi-, psi+, psi-); repeatable, default all")
    gen.add_argument("--omega", type=float, help="Omega for omega-mes, strictly inside (0, pi/2)")
    gen.add_argument("--phase", type=float, help="phase of C2 (default: random)")
    gen.add_argument("--fiber", help="fiber quaternion 'w,x,y,z' (default: random unit)")
    gen.add_argument("--count", type=int, default=1)

    cl = sub.add_parser("cloud", parents=[common], help="write a point cloud")
    cl.add_argument("subkind", choices=["fiber", "foliation", "ball"])
    cl.add_argument("-o", "--output", required=True)
    cl.add_argument("--format", choices=["csv", "json"], default=None,
                    help="default: from the output extension, else csv")
    cl.add_argument("--base", action="append",
                    help="fiber base point as 're,im' or 'inf'; repeatable (default: 0)")
    cl.add_argument("--pole", type=int, default=0, choices=[0, 1, 2, 3])
    cl.add_argument("--samples", type=int, default=None,
                    help="samples per fiber (default 256) or per slice (default 100)")
    cl.add_argument("--concurrence", help="comma-separated concurrence grid")
    cl.add_argument("--omega", help="comma-separated Omega grid")
    cl.add_argument("--workers", type=int, default=1)
    cl.add_argument("--input", default="-", help="state documents for 'ball'")
    return parser


# --- helpers -----------------------------------------------------------------

def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


class NormalizationError(Exception):
    pass


def state_from_document(doc: dict, tolerance: float, normalize: bool):
    amps = parse_amplitudes(doc)
    n2 = sum(abs(a) ** 2 for a in amps)
    if abs(n2 - 1.0) > tolerance and not normalize:
        raise NormalizationError(f"squared norm {n2!r} differs from 1 by more than {tolerance:g}")
    cls = QubitState if len(amps) == 2 else TwoQubitState
    if abs(n2 - 1.0) <= TOL_NORM:
        return cls(*amps)  # keep the amplitudes bit for bit
    return cls.normalized_from(*amps)


def _parse_floats(text: str, n: int | None = None) -> list[float]:
    try:
        vals = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"cannot parse numbers from {text!r}") from None
    if n is not None and len(vals) != n:
        raise UsageError(f"expected {n} comma-separated numbers, got {text!r}")
    if not all(math.isfinite(v) for v in vals):
        raise UsageError("values must be finite")
    return vals


def _parse_base(text: str):
    if text.strip().lower() in ("inf", "infinity"):
        return INFINITY
    re_, im = _parse_floats(text, 2)
    return complex(re_, im)


# --- commands ----------------------------------------------------------------

def cmd_analyze(args) -> int:
    docs = load_documents(_read_text(args.input))
    status = EXIT_OK
    for doc in docs:
        if isinstance(doc, dict) and doc.get("kind") == REPORT_KIND:
            claimed = doc
            if not isinstance(doc.get("input"), dict):
                raise DocumentError("report lacks its 'input' document")
            source = doc["input"]
        else:
            claimed, source = None, doc
        label = source.get("label") if isinstance(source, dict) else None
        state = state_from_document(source, args.tolerance, args.normalize)
        report = build_report(state, args.chart, args.tolerance, label)
        if args.check_oracle:
            target = claimed if claimed is not None else report
            mismatches = check_report(target, args.tolerance)
            report["oracle_check"] = {"passed": not mismatches, "mismatches": mismatches}
            for m in mismatches:
                print(f"oracle mismatch: {m}", file=sys.stderr)
            if mismatches:
                status = EXIT_ORACLE
        sys.stdout.write(dumps(report) + "\n")
    return status


def _fiber_arg(args, rng) -> Quaternion:
    if args.fiber is None:
        return sampling.random_unit_quaternion(rng)
    q = Quaternion(*_parse_floats(args.fiber, 4))
    if abs(q.norm2() - 1.0) > args.tolerance:
        if not args.normalize:
            raise UsageError("--fiber is not a unit quaternion (use --normalize to rescale)")
        q = q.scale(1.0 / q.norm())
    return q


def generate_states(args) -> list[tuple[Sequence[complex], str]]:
    seed = _default_seed() if args.seed is None else args.seed
    rng = np.random.default_rng(seed)
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    out = []
    if args.kind == "bell":
        indices = args.index if args.index else [0, 1, 2, 3]
        for i in indices:
            if not 0 <= i <= 3:
                raise UsageError(f"Bell index {i} outside 0..3")
            name = hopf_s7.BELL_ORDER[i]
            out.append((hopf_s7.bell_state(name).amplitudes, f"bell-{name}"))
        return out
    if args.kind == "omega-mes":
        if args.omega is None:
            raise UsageError("omega-mes requires --omega")
        if not 0.0 < args.omega < math.pi / 2:
            raise UsageError(f"--omega {args.omega} must lie strictly inside (0, pi/2)")
    for _ in range(args.count):
        if args.kind == "random":
            s = sampling.random_two_qubit(rng)
        elif args.kind == "separable":
            s = sampling.random_product(rng)
        else:
            phase = args.phase if args.phase is not None else float(rng.uniform(0.0, 2 * math.pi))
            q = _fiber_arg(args, rng)
            omega = math.pi / 4 if args.kind == "mes" else args.omega
            try:
                s = hopf_s7.omega_mes_state(omega, phase, q)
            except HopfError as exc:
                raise UsageError(str(exc)) from None
        out.append((s.amplitudes, args.kind))
    return out


def cmd_generate(args) -> int:
    for amps, label in generate_states(args):
        sys.stdout.write(dumps(state_document(amps, label)) + "\n")
    return EXIT_OK


def build_cloud(args) -> viz.PointCloud:
    if args.subkind == "fiber":
        samples = 256 if args.samples is None else args.samples
        if samples < 3:
            raise UsageError("--samples must be >= 3 for fibers")
        bases = [_parse_base(b) for b in args.base] if args.base else [0j]
        return viz.fiber_clouds(bases, samples, args.pole)
    if args.subkind == "foliation":
        samples = 100 if args.samples is None else args.samples
        if (args.concurrence is None) == (args.omega is None):
            raise UsageError("foliation needs exactly one of --concurrence or --omega")
        kind = "concurrence" if args.concurrence is not None else "omega"
        values = tuple(_parse_floats(args.concurrence if kind == "concurrence" else args.omega))
        seed = _default_seed() if args.seed is None else args.seed
        try:
            spec = viz.SweepSpec(kind, values)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if samples < 1:
            raise UsageError("--samples must be >= 1")
        return viz.foliation_sweep(spec, samples, seed, max(args.workers, 1))
    states = []
    for doc in load_documents(_read_text(args.input)):
        source = doc["input"] if isinstance(doc, dict) and doc.get("kind") == REPORT_KIND else doc
        s = state_from_document(source, args.tolerance, args.normalize)
        if not isinstance(s, TwoQubitState):
            raise UsageError("ball clouds need two-qubit states")
        states.append(s)
    return viz.ball_cloud(states)


def cmd_cloud(args) -> int:
    cloud = build_cloud(args)
    fmt = args.format or ("json" if args.output.lower().endswith(".json") else "csv")
    text = cloud_json(cloud) if fmt == "json" else cloud_csv(cloud)
    try:
        atomic_write(args.output, text)
    except OSError as exc:
        print(f"hopfq: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"{len(cloud)} rows written to {args.output}", file=sys.stderr)
    return EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "generate": cmd_generate, "cloud": cmd_cloud}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except NormalizationError as exc:
        print(f"hopfq: {exc}", file=sys.stderr)
        return EXIT_NORM
    except (DocumentError, UsageError, HopfError) as exc:
        print(f"hopfq: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"hopfq: {exc}", file=sys.stderr)
        return EXIT_INPUT if args.command != "cloud" else EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
