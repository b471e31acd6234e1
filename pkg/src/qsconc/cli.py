"""Command-line front end.

Subcommands: compute | bound | closed-form | monogamy | polygon | roof.
State files use the JSON schema from :mod:`qsconc.states`. Sweeps emit
CSV ('.' decimal, ',' separator, '#' comments) with a header comment
recording tool version, command line and seed, so identical invocations
are byte-identical. Reals print with 12 significant digits.

Exit codes: 0 success, 2 input validation, 3 unsupported parameters,
4 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__, bounds, closed_forms, inequalities, measures, roof, states
from .errors import (
    BadPartitionError,
    BridgeWindowError,
    ClosedFormWindowError,
    DimensionMismatchError,
    MixedGlobalStateError,
    MonogamyWindowError,
    NoApplicableBoundError,
    NonFiniteError,
    NotBipartiteError,
    NotNormalizedError,
    NotPSDError,
    NotQubitsError,
    NotQubitSideError,
    RangeError,
    RegimeABoundWindowError,
    RegimeBBoundWindowError,
    StateFormatError,
    TooLargeError,
    UnsupportedRegimeError,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PARAMS = 3
EXIT_NUMERIC = 4

_INPUT_ERRORS = (
    StateFormatError,
    NotNormalizedError,
    DimensionMismatchError,
    NotBipartiteError,
    NotPSDError,
    NotQubitsError,
    NotQubitSideError,
    MixedGlobalStateError,
    BadPartitionError,
    RangeError,
    OSError,
)
_PARAM_ERRORS = (
    UnsupportedRegimeError,
    NoApplicableBoundError,
    RegimeABoundWindowError,
    RegimeBBoundWindowError,
    BridgeWindowError,
    ClosedFormWindowError,
    MonogamyWindowError,
    TooLargeError,
)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


@dataclass(frozen=True)
class SweepSpec:
    start: float
    stop: float
    step: float

    def points(self) -> np.ndarray:
        if self.step <= 0:
            raise RangeError(f"sweep step must be positive, got {self.step}")
        if self.start >= self.stop:
            raise RangeError(f"sweep needs start < stop, got {self.start}:{self.stop}")
        count = int(np.floor((self.stop - self.start) / self.step + 1e-9))
        if count > 1_000_000:
            raise RangeError(f"sweep has {count + 1} points, above the 1e6 cap")
        return self.start + self.step * np.arange(count + 1)


def parse_sweep(text: str) -> SweepSpec:
    parts = text.split(":")
    if len(parts) != 3:
        raise RangeError(f"sweep must be START:STOP:STEP, got {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError as exc:
        raise RangeError(f"sweep fields must be numbers: {exc}") from exc
    return SweepSpec(start, stop, step)


def _csv_header(args: argparse.Namespace, argv: list[str]) -> str:
    seed = getattr(args, "seed", None)
    return (
        f"# qsconc {__version__} | command: {' '.join(argv)} | "
        f"seed: {seed if seed is not None else 'none'}"
    )


def _write_rows(out_path, header_comment: str, columns: list[str],
                rows: list[list[float]]) -> None:
    lines = [header_comment, ",".join(columns)]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_state(path: str):
    return states.load_state_json(path)


def cmd_compute(args, argv) -> int:
    p = measures.classify(args.q, args.s)
    state = _load_state(args.state)
    if isinstance(state, states.PureState):
        if args.normalized:
            mv = measures.normalized_cqs_pure(state, p)
        else:
            mv = measures.cqs_pure(state, p, split=0)
    else:
        mv = measures.cqs_mixed_two_qubit(state, p)
        if not args.normalized:
            mv = measures.MeasureValue(
                mv.value * measures.bell_normalizer(p), False, p
            )
    print(f"value = {_fmt(mv.value)}")
    print(f"normalized = {str(mv.normalized).lower()}")
    print(f"regime = {p.regime.value}")
    print(f"epsilon = {p.epsilon:+d}")
    return EXIT_OK


def cmd_bound(args, argv) -> int:
    p = measures.classify(args.q, args.s)
    state = _load_state(args.state)
    if isinstance(state, states.PureState):
        state = state.to_density()
    rep = bounds.bound_auto(state, p)
    print(f"ppt_norm = {_fmt(rep.ppt_norm)}")
    print(f"realign_norm = {_fmt(rep.realign_norm)}")
    print(f"detected_by = {rep.detected_by.value}")
    print(f"m = {rep.m}")
    print(f"lower_bound = {_fmt(rep.lower_bound)}")
    return EXIT_OK


def _closed_form_row(family: str, x: float, q: float, s: float, d: int,
                     envelope) -> list[float]:
    if family == "isotropic":
        threshold = 1.0 / d
        xi = closed_forms.isotropic_curve(x, q, s, d) if x > threshold else 0.0
        norm, m = d * x, d
        ref = (
            closed_forms.reference_q_concurrence_isotropic(x, 3)
            if d == 3
            else float("nan")
        )
    else:
        threshold = 0.5
        xi = closed_forms.werner_curve(x, q, s) if x > threshold else 0.0
        norm, m = 2.0 * x, 2
        ref = closed_forms.reference_c3t_werner(x)
    p = measures.classify(q, s)
    try:
        lower = bounds.bound_value_auto(max(1.0, norm), m, p)
    except NoApplicableBoundError:
        lower = float("nan")
    return [x, xi, envelope(x), lower, ref]


def cmd_closed_form(args, argv) -> int:
    q, s, d = args.q, args.s, args.d
    if args.family == "isotropic":
        env = closed_forms.isotropic_envelope(q, s, d)
    else:
        env = closed_forms.werner_envelope(q, s)
    xs = parse_sweep(args.sweep).points()
    xs = xs[(xs >= 0.0) & (xs <= 1.0 + 1e-12)]

    def row(x: float) -> list[float]:
        return _closed_form_row(args.family, float(min(x, 1.0)), q, s, d, env)

    with ThreadPoolExecutor(max_workers=4) as pool:
        rows = list(pool.map(row, xs))
    _write_rows(args.out, _csv_header(args, argv),
                ["x", "xi", "envelope", "lower_bound", "reference_curve"], rows)
    return EXIT_OK


def _parse_gen3(text: str) -> states.GenSchmidt3:
    parts = text.split(",")
    if len(parts) != 6:
        raise RangeError(
            f"--gen3 needs 6 comma-separated values lam0..lam4,phi, got {len(parts)}"
        )
    try:
        vals = [float(p) for p in parts]
    except ValueError as exc:
        raise RangeError(f"--gen3 fields must be numbers: {exc}") from exc
    return states.GenSchmidt3(*vals[:5], phi=vals[5])


def cmd_monogamy(args, argv) -> int:
    if (args.state is None) == (args.gen3 is None):
        raise RangeError("provide exactly one of --state or --gen3")
    s_values = args.s if args.s else [1.0]
    qs = parse_sweep(args.sweep).points() if args.sweep else [args.q or 2.0]
    gen3 = _parse_gen3(args.gen3) if args.gen3 else None
    psi = _load_state(args.state) if args.state else None

    def residual(q: float, s: float) -> inequalities.MonogamyReport:
        p = measures.classify(q, s)
        if gen3 is not None:
            return inequalities.monogamy_residual_gen3(gen3, p)
        return inequalities.monogamy_residual_qubits(psi, p)

    rows = []
    for s in s_values:
        for q in qs:
            rep = residual(float(q), float(s))
            rows.append([float(q), float(s), rep.K, sum(rep.K_parts), rep.tau])
    _write_rows(args.out, _csv_header(args, argv),
                ["q", "s", "K", "K_sum", "tau"], rows)
    return EXIT_OK


def cmd_polygon(args, argv) -> int:
    p = measures.classify(args.q, args.s)
    state = _load_state(args.state)
    if not isinstance(state, states.PureState):
        raise StateFormatError("polygon check needs a pure state file")
    rep = inequalities.polygon_check(state, p)
    print("marginals = " + " ".join(_fmt(v) for v in rep.marginals))
    print(f"violations = {rep.violations if rep.violations else 'none'}")
    return EXIT_OK if rep.ok else EXIT_NUMERIC


def cmd_roof(args, argv) -> int:
    p = measures.classify(args.q, args.s)
    state = _load_state(args.state)
    if isinstance(state, states.PureState):
        state = state.to_density()
    cfg = roof.RoofConfig(
        decomposition_length=args.length,
        restarts=args.restarts,
        iterations=args.iterations,
        seed=args.seed,
    )
    res = roof.roof_estimate(state, p, cfg)
    print(f"roof_estimate (upper estimate, not exact) = {_fmt(res.estimate)}")
    print(f"decomposition_terms = {len(res.best_weights)}")
    print(f"converged = {str(res.converged).lower()}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsconc",
        description="Two-parameter concurrence toolkit: measures, detection "
        "bounds, exact symmetric-state curves, monogamy and polygon checks.",
    )
    parser.add_argument("--version", action="version", version=f"qsconc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_qs(sp, q_required=True):
        sp.add_argument("--q", type=float, required=q_required)
        sp.add_argument("--s", type=float, required=q_required)

    sp = sub.add_parser("compute", help="measure of a state file")
    sp.add_argument("--state", required=True)
    add_qs(sp)
    sp.add_argument("--normalized", action="store_true")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("bound", help="detection norms and lower bound")
    sp.add_argument("--state", required=True)
    add_qs(sp)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("closed-form", help="sweep exact symmetric-state curves")
    sp.add_argument("family", choices=["isotropic", "werner"])
    add_qs(sp)
    sp.add_argument("--d", type=int, default=2)
    sp.add_argument("--sweep", required=True, help="START:STOP:STEP")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_closed_form)

    sp = sub.add_parser("monogamy", help="residual tau over a (q, s) grid")
    sp.add_argument("--state", default=None)
    sp.add_argument("--gen3", default=None, help="lam0,lam1,lam2,lam3,lam4,phi")
    sp.add_argument("--q", type=float, default=None)
    sp.add_argument("--s", type=float, action="append", default=None)
    sp.add_argument("--sweep", default=None, help="q sweep START:STOP:STEP")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_monogamy)

    sp = sub.add_parser("polygon", help="one-to-rest polygon inequality check")
    sp.add_argument("--state", required=True)
    add_qs(sp)
    sp.set_defaults(func=cmd_polygon)

    sp = sub.add_parser("roof", help="convex-roof upper estimate")
    sp.add_argument("--state", required=True)
    add_qs(sp)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--restarts", type=int, default=16)
    sp.add_argument("--iterations", type=int, default=800)
    sp.add_argument("--length", type=int, default=None)
    sp.set_defaults(func=cmd_roof)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args, argv)
    except _PARAM_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NonFiniteError, np.linalg.LinAlgError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
