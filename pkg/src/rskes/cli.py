"""Command-line interface.

Frames are text lines of space-separated lowercase hex symbols, coefficient of
z^0 first. Exit codes: 0 ok, 1 a decode failed, 2 usage or format error,
3 invariant violated.
"""

from __future__ import annotations

import argparse
import sys
from typing import TextIO

from . import kernels
from .campaign import TrialConfig, bench, random_pattern, run_campaign, trial_rng
from .code import CodeParams, ErrataPattern, apply_errata, compute_syndromes, encode
from .decoder import ALL_SOLVERS, Solver, decode
from .gf import DEFAULT_POLYS
from .kes_classic import eea_errors_erasures, eea_errors_only
from .kes_modified import run_stepwise
from .poly import to_hex

EXIT_OK = 0
EXIT_DECODE_FAILURE = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3

SOLVER_MODES = {Solver.ALG1: "I", Solver.ALG1_STAR: "I*", Solver.ALG2: "II"}


class FormatError(Exception):
    pass


def _hex_int(text: str) -> int:
    return int(text, 16)


def _range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    lo_i = int(lo)
    return lo_i, int(hi) if hi else lo_i


def _positions(text: str) -> list[int]:
    text = text.strip()
    if not text or text == "-":
        return []
    return [int(tok.split(":")[0]) for tok in text.split(",") if tok.strip()]


def code_from_args(args) -> CodeParams:
    poly = args.prim_poly if args.prim_poly is not None else DEFAULT_POLYS.get(args.m)
    n = args.n if args.n is not None else (1 << args.m) - 1
    return CodeParams.make(args.m, n, args.t, args.b0, poly)


def read_frames(stream: TextIO, width: int, q: int) -> list[list[int]]:
    frames = []
    for lineno, line in enumerate(stream, 1):
        tokens = line.split()
        if len(tokens) != width:
            raise FormatError(f"line {lineno}: expected {width} symbols, got {len(tokens)}")
        try:
            symbols = [int(tok, 16) for tok in tokens]
        except ValueError:
            raise FormatError(f"line {lineno}: non-hex symbol") from None
        if any(s >= q for s in symbols):
            raise FormatError(f"line {lineno}: symbol out of range for GF({q})")
        frames.append(symbols)
    return frames


def _open_in(path: str | None) -> TextIO:
    return sys.stdin if path in (None, "-") else open(path)


def cmd_encode(args, code: CodeParams, out: TextIO) -> int:
    with _open_in(args.input) as fh:
        messages = read_frames(fh, code.k, code.field.size)
    for msg in messages:
        out.write(to_hex(encode(code, msg)) + "\n")
    return EXIT_OK


def _erasure_lists(args, count: int) -> list[list[int]]:
    if args.erase_file:
        with open(args.erase_file) as fh:
            lines = fh.read().splitlines()
        if len(lines) < count:
            raise FormatError(f"erasure file has {len(lines)} lines for {count} frames")
        # Either plain position lists or the corrupt sidecar (erasures in the last column).
        return [_positions(line.split("\t")[-1]) for line in lines[:count]]
    return [_positions(args.erase or "")] * count


def _format_report(rep) -> str:
    corr = ",".join(f"{c.position}:{c.value:x}" for c in rep.corrections) or "-"
    msg = to_hex(rep.message) if rep.message is not None else "-"
    cols = [
        rep.status.value,
        str(len(rep.corrections)),
        corr,
        msg,
        "-" if rep.nu_detected is None else str(rep.nu_detected),
        str(rep.mu),
        "-" if rep.delta_final is None else str(rep.delta_final),
        str(rep.kes_iterations),
        "psi" if rep.psi_flag else "-",
    ]
    return "\t".join(cols)


DECODE_HEADER = "status\tncorr\tcorrections\tmessage\tnu\tmu\tdelta\titerations\tflags"


def cmd_decode(args, code: CodeParams, out: TextIO) -> int:
    with _open_in(args.input) as fh:
        frames = read_frames(fh, code.n, code.field.size)
    erasures = _erasure_lists(args, len(frames))
    solver = Solver(args.solver)
    if args.header:
        out.write(DECODE_HEADER + "\n")
    status = EXIT_OK
    for frame, erase in zip(frames, erasures):
        rep = decode(code, frame, erase, solver)
        out.write(_format_report(rep) + "\n")
        if not rep.ok:
            status = EXIT_DECODE_FAILURE
    return status


def _pattern_text(pairs) -> str:
    return ",".join(f"{p}:{v:x}" for p, v in pairs) or "-"


def parse_sidecar_line(line: str) -> ErrataPattern:
    """Inverse of the corrupt sidecar: ``errors<TAB>erasures``, each ``pos:hexval,...`` or ``-``."""
    cols = line.rstrip("\n").split("\t")
    if len(cols) != 2:
        raise FormatError(f"sidecar line needs 2 columns: {line!r}")

    def pairs(text):
        if text.strip() in ("", "-"):
            return ()
        return tuple((int(p), int(v, 16)) for p, v in (tok.split(":") for tok in text.split(",")))

    return ErrataPattern(pairs(cols[0]), pairs(cols[1]))


def cmd_corrupt(args, code: CodeParams, out: TextIO) -> int:
    if args.errors < 0 or args.erasures < 0 or args.errors + args.erasures > code.n:
        raise FormatError(f"need 0 <= errors + erasures <= n = {code.n}")
    with _open_in(args.input) as fh:
        frames = read_frames(fh, code.n, code.field.size)
    side = open(args.sidecar, "w") if args.sidecar else None
    try:
        for i, frame in enumerate(frames):
            rng = trial_rng(args.seed, i)
            pattern = random_pattern(rng, code, args.errors, args.erasures)
            out.write(to_hex(apply_errata(code, frame, pattern)) + "\n")
            if side:
                side.write(f"{_pattern_text(pattern.errors)}\t{_pattern_text(pattern.erasures)}\n")
    finally:
        if side:
            side.close()
    return EXIT_OK


TRACE_HEADER = "iter|FIRST|SWAP|gamma|xi|delta|U|V|W|X"
CLASSIC_TRACE_HEADER = "iter|deg_v|q|v|x"


def trace_rows(code: CodeParams, frame, solver: Solver, erase=()) -> list[str]:
    S = compute_syndromes(code, frame)
    f, t = code.field, code.t
    locations = [code.location(p) for p in erase]
    if solver in SOLVER_MODES:
        _, rows = run_stepwise(f, t, S, SOLVER_MODES[solver], locations)
        lines = [TRACE_HEADER]
        for state, ctl in rows:
            lines.append("|".join([
                str(state.iteration), str(int(ctl.first)), str(int(ctl.swap)),
                format(ctl.gamma, "x"), format(ctl.xi, "x"), str(state.delta),
                to_hex(state.U), to_hex(state.V), to_hex(state.W), to_hex(state.X),
            ]))
        return lines
    if solver is Solver.CLASSIC_EO:
        _, _, trace = eea_errors_only(f, t, S)
    else:
        _, _, trace = eea_errors_erasures(f, t, S, locations)
    lines = [CLASSIC_TRACE_HEADER]
    for step in trace.steps:
        d = "-inf" if step.d == float("-inf") else str(step.d)
        lines.append("|".join([str(step.j), d, to_hex(step.q), to_hex(step.v), to_hex(step.x)]))
    return lines


def cmd_trace(args, code: CodeParams, out: TextIO) -> int:
    with _open_in(args.input) as fh:
        frames = read_frames(fh, code.n, code.field.size)
    if len(frames) != 1:
        raise FormatError(f"trace takes exactly one frame, got {len(frames)}")
    solver = Solver(args.solver)
    erase = _positions(args.erase or "")
    if erase and solver.errors_only:
        raise FormatError(f"solver {solver.value} does not take erasures")
    for line in trace_rows(code, frames[0], solver, erase):
        out.write(line + "\n")
    return EXIT_OK


def _solvers(text: str | None):
    if not text or text == "all":
        return ALL_SOLVERS
    return tuple(Solver(s) for s in text.split(","))


def cmd_trial(args, code: CodeParams, out: TextIO) -> int:
    cfg = TrialConfig(code, args.seed, args.trials, args.nu, args.mu, _solvers(args.solvers))
    log = open(args.log, "w") if args.log else None
    try:
        summary = run_campaign(cfg, log)
    finally:
        if log:
            log.close()
    out.write(f"# {code} seed={cfg.seed} trials={summary.trials} nu={cfg.nu_range} mu={cfg.mu_range}\n")
    out.write("solver\tSuccess\tUncorrectable\tInternalInconsistency\tskipped\n")
    for solver in cfg.solvers:
        c = summary.counts[solver.value]
        out.write(f"{solver.value}\t{c['Success']}\t{c['Uncorrectable']}\t{c['InternalInconsistency']}\t"
                  f"{summary.skipped[solver.value]}\n")
    out.write(f"disagreements\t{summary.disagreements}\n")
    out.write(f"beyond_radius_disagreements\t{summary.beyond_radius_disagreements}\n")
    out.write(f"violations\t{len(summary.violations)}\n")
    for v in summary.violations[:50]:
        sys.stderr.write(f"violation: seed={v.seed} trial={v.trial} solver={v.solver}: {v.what}\n")
    return EXIT_OK if summary.ok else EXIT_INVARIANT


def cmd_bench(args, code: CodeParams, out: TextIO) -> int:
    backends = sorted(kernels.BACKENDS) if args.backend == "all" else [args.backend]
    rows = bench(code, args.seed, args.trials, _solvers(args.solvers), backends)
    out.write("solver,backend,decodes,seconds,decodes_per_sec,iter_mean,iter_var\n")
    for r in rows:
        out.write(f"{r.solver},{r.backend},{r.decodes},{r.seconds:.6f},{r.rate:.1f},{r.iter_mean:.6f},{r.iter_var:.6f}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=4, help="field extension degree (default 4)")
    common.add_argument("--prim-poly", type=_hex_int, default=None, help="reduction polynomial in hex")
    common.add_argument("--n", type=int, default=None, help="block length (default 2^m - 1)")
    common.add_argument("--t", type=int, default=2, help="error-correction radius")
    common.add_argument("--b0", type=int, default=0, help="first consecutive root exponent")

    p = argparse.ArgumentParser(prog="rskes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("encode", parents=[common], help="encode message lines (k symbols each)")
    s.add_argument("input", nargs="?", default="-")

    s = sub.add_parser("decode", parents=[common], help="decode frame lines")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--solver", choices=[x.value for x in Solver], default=Solver.ALG1_STAR.value)
    s.add_argument("--erase", help="comma-separated erasure positions applied to every frame")
    s.add_argument("--erase-file", help="one erasure list per frame (plain or corrupt sidecar)")
    s.add_argument("--header", action="store_true", help="print a column header row")

    s = sub.add_parser("corrupt", parents=[common], help="inject seeded random errata")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--errors", "--nu", dest="errors", type=int, default=0)
    s.add_argument("--erasures", "--mu", dest="erasures", type=int, default=0)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--sidecar", help="write the injected pattern here, one line per frame")

    s = sub.add_parser("trace", parents=[common], help="per-iteration key-equation solver trace")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--solver", choices=[x.value for x in Solver], default=Solver.ALG1_STAR.value)
    s.add_argument("--erase", help="comma-separated erasure positions")

    s = sub.add_parser("trial", parents=[common], help="randomized encode-corrupt-decode campaign")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--nu", type=_range, default=None, help="error count range lo:hi (default 0:t)")
    s.add_argument("--mu", type=_range, default=(0, 0), help="erasure count range lo:hi")
    s.add_argument("--solvers", default="all", help="comma-separated solver names")
    s.add_argument("--log", help="per-trial log (TSV)")

    s = sub.add_parser("bench", parents=[common], help="decode throughput and iteration-count spread")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=500)
    s.add_argument("--solvers", default="all")
    s.add_argument("--backend", choices=["auto", "python", "cython", "all"], default="auto")
    return p


COMMANDS = {
    "encode": cmd_encode,
    "decode": cmd_decode,
    "corrupt": cmd_corrupt,
    "trace": cmd_trace,
    "trial": cmd_trial,
    "bench": cmd_bench,
}


def main(argv=None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        code = code_from_args(args)
        if args.command == "trial" and args.nu is None:
            args.nu = (0, code.t)
        if args.command == "bench" and args.backend not in ("all", "auto") and args.backend not in kernels.BACKENDS:
            raise FormatError(f"backend {args.backend} is not built")
        return COMMANDS[args.command](args, code, out)
    except (FormatError, ValueError, OSError) as exc:
        sys.stderr.write(f"rskes {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
