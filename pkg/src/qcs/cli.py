"""Command-line interface: state inspection, surfaces, extrema, dynamics, verify.

All numeric output uses 17 significant digits so CSV files round-trip to
the exact in-memory doubles, and every command is deterministic for a
fixed configuration (independent of QCS_THREADS).
"""

from __future__ import annotations

import argparse
import math
import sys
from contextlib import contextmanager
from typing import Optional

import numpy as np

from . import evolution as ev
from . import spin_models as sm
from . import verify as vf
from .entangled_basis import STATE_IDS, entangled_state, expand_in_entangled_basis
from .entanglement_measures import (
    concurrence_det,
    concurrence_from_expansion,
    concurrence_rdm,
    spin_sum_averages,
)
from .errors import QcsError

USAGE_ERROR = 2


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _fmt_complex(z: complex) -> str:
    return f"{_fmt(z.real)}{'+' if z.imag >= 0 else '-'}{_fmt(abs(z.imag))}j"


@contextmanager
def _open_output(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="\n") as handle:
            yield handle


def _parse_psi(args) -> complex:
    if args.theta is not None:
        return complex(math.cos(args.theta), math.sin(args.theta))
    raw = args.psi or "0,0"
    parts = raw.split(",")
    if len(parts) != 2:
        raise ValueError(f"--psi expects 're,im', got {raw!r}")
    return complex(float(parts[0]), float(parts[1]))


def _parse_window(raw: str) -> tuple[float, float, float, float]:
    parts = raw.split(",")
    if len(parts) != 4:
        raise ValueError(f"--window expects 'x_min,x_max,y_min,y_max', got {raw!r}")
    return tuple(float(p) for p in parts)


def _coupling_params(args) -> sm.CouplingParams:
    model = args.model.upper()
    if model == "XXX":
        if args.j is None:
            raise ValueError("XXX needs --j")
        return sm.CouplingParams.xxx(j=args.j, hbar=args.hbar)
    if model == "XXZ":
        if args.j is None or (args.delta is None and args.jz is None):
            raise ValueError("XXZ needs --j and one of --delta/--jz")
        return sm.CouplingParams.xxz(j=args.j, delta=args.delta, jz=args.jz, hbar=args.hbar)
    if model == "XYZ":
        cartesian = args.jx is not None or args.jy is not None
        sum_diff = args.j_plus is not None or args.j_minus is not None
        if cartesian and sum_diff:
            raise ValueError("give --jx/--jy or --j-plus/--j-minus, not both")
        if sum_diff:
            return sm.CouplingParams.xyz(
                j_plus=args.j_plus or 0.0,
                j_minus=args.j_minus or 0.0,
                jz=args.jz or 0.0,
                hbar=args.hbar,
            )
        if cartesian:
            return sm.CouplingParams.xyz(
                jx=args.jx or 0.0, jy=args.jy or 0.0, jz=args.jz or 0.0, hbar=args.hbar
            )
        raise ValueError("XYZ needs --jx/--jy or --j-plus/--j-minus")
    raise ValueError(f"unknown model {args.model!r}")


def _add_coupling_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--model", default="xyz", help="xxx, xxz, or xyz")
    parser.add_argument("--j", type=float, default=None, help="exchange J (xxx/xxz)")
    parser.add_argument("--delta", type=float, default=None, help="xxz anisotropy (jz = j*delta)")
    parser.add_argument("--jz", type=float, default=None)
    parser.add_argument("--jx", type=float, default=None)
    parser.add_argument("--jy", type=float, default=None)
    parser.add_argument("--j-plus", type=float, default=None, help="(jx + jy)/2")
    parser.add_argument("--j-minus", type=float, default=None, help="(jx - jy)/2")
    parser.add_argument("--hbar", type=float, default=1.0)


def _add_psi_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--psi", default=None, help="label as 're,im'")
    parser.add_argument("--theta", type=float, default=None, help="psi = (cos th, sin th)")


def _add_grid_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--window", default="-3,3,-3,3", help="x_min,x_max,y_min,y_max")
    parser.add_argument("--step", type=float, default=0.05)
    parser.add_argument("--source", default="direct", choices=["direct", "closed"])
    parser.add_argument("--bonds", default="all-pairs", choices=["all-pairs", "chain"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcs", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_state = sub.add_parser("state", help="amplitudes, concurrence, spin sums")
    p_state.add_argument("--state", required=True, help="P+, P-, G+, G-, PG+, PG-")
    _add_psi_flags(p_state)
    p_state.add_argument("--hbar", type=float, default=1.0)
    p_state.add_argument("--output", default="-")

    p_surface = sub.add_parser("surface", help="energy surface CSV")
    p_surface.add_argument("--state", required=True)
    _add_coupling_flags(p_surface)
    _add_grid_flags(p_surface)
    p_surface.add_argument("--output", default="-")

    p_extrema = sub.add_parser("extrema", help="refined surface extrema CSV")
    p_extrema.add_argument("--state", required=True)
    _add_coupling_flags(p_extrema)
    _add_grid_flags(p_extrema)
    p_extrema.add_argument("--output", default="-")

    p_evolve = sub.add_parser("evolve", help="concurrence/fidelity time series CSV")
    _add_coupling_flags(p_evolve)
    _add_psi_flags(p_evolve)
    p_evolve.add_argument("--t-max", type=float, default=None, help="default 4*pi*hbar/J")
    p_evolve.add_argument("--dt", type=float, default=0.01)
    p_evolve.add_argument("--output", default="-")

    p_verify = sub.add_parser("verify", help="run the invariant suite")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--output", default="-")
    return parser


def _infer_xxz_model(args):
    """`surface --model xxz --j 1 --jz -2` style: fill delta from jz."""
    if args.model.upper() == "XXZ" and args.delta is None and args.jz is not None:
        if args.j in (None, 0.0):
            raise ValueError("XXZ needs nonzero --j to infer delta from --jz")
        args.delta = args.jz / args.j


def cmd_state(args) -> int:
    psi = _parse_psi(args)
    sid = args.state.upper()
    state = entangled_state(sid, psi)
    with _open_output(args.output) as out:
        out.write(f"state: {sid}\n")
        out.write(f"psi: {_fmt_complex(psi)}\n")
        labels = [format(i, f"0{state.n_qubits}b") for i in range(state.dim)]
        for label, amp in zip(labels, state.amplitudes):
            out.write(f"amplitude[{label}] = {_fmt_complex(complex(amp))}\n")
        if state.n_qubits == 2:
            expansion = expand_in_entangled_basis(state, psi)
            out.write(f"concurrence_det = {_fmt(concurrence_det(state))}\n")
            out.write(f"concurrence_rdm = {_fmt(concurrence_rdm(state))}\n")
            out.write(
                f"concurrence_expansion = {_fmt(concurrence_from_expansion(expansion))}\n"
            )
            sums = spin_sum_averages(state, hbar=args.hbar)
            out.write(f"sz_sum = {_fmt(sums.z_sum)}\n")
            out.write(f"sz_diff = {_fmt(sums.z_diff)}\n")
            out.write(f"s_raising_sum = {_fmt_complex(sums.raising_sum)}\n")
            out.write(f"s_raising_diff = {_fmt_complex(sums.raising_diff)}\n")
    return 0


def _surface_grids(args) -> tuple[sm.SurfaceGrid, Optional[np.ndarray]]:
    """The requested surface plus, for the closed source, the direct residual."""
    params = _coupling_params(args)
    window = _parse_window(args.window)
    grid = sm.energy_surface(
        params, args.state, window=window, step=args.step, source=args.source, bonds=args.bonds
    )
    residual = None
    if args.source == "closed":
        direct = sm.energy_surface(
            params,
            args.state,
            window=window,
            step=args.step,
            source="direct",
            bonds=args.bonds,
            refine=False,
        )
        residual = grid.values - direct.values
    return grid, residual


def cmd_surface(args) -> int:
    _infer_xxz_model(args)
    grid, residual = _surface_grids(args)
    with _open_output(args.output) as out:
        header = "x,y,energy" + (",closed_minus_direct" if residual is not None else "")
        out.write(header + "\n")
        for i, y in enumerate(grid.ys):
            for j, x in enumerate(grid.xs):
                row = f"{_fmt(x)},{_fmt(y)},{_fmt(grid.values[i, j])}"
                if residual is not None:
                    row += f",{_fmt(residual[i, j])}"
                out.write(row + "\n")
        if grid.constant:
            out.write(f"# CONSTANT value={_fmt(float(grid.values[0, 0]))}\n")
    return 0


def cmd_extrema(args) -> int:
    _infer_xxz_model(args)
    grid, _ = _surface_grids(args)
    with _open_output(args.output) as out:
        out.write("x,y,value,kind\n")
        for e in grid.extrema:
            out.write(f"{_fmt(e.x)},{_fmt(e.y)},{_fmt(e.value)},{e.kind}\n")
        if grid.constant:
            out.write(f"# CONSTANT value={_fmt(float(grid.values[0, 0]))}\n")
    return 0


def _evolve_params(args) -> sm.CouplingParams:
    if args.model.upper() == "XYZ" and args.j is not None and not (
        args.jx is not None or args.jy is not None or args.j_plus is not None
    ):
        # `evolve --j 1` sugar: the XX model.
        return sm.CouplingParams.xyz(jx=args.j, jy=args.j, jz=args.jz or 0.0, hbar=args.hbar)
    return _coupling_params(args)


def cmd_evolve(args) -> int:
    params = _evolve_params(args)
    psi = _parse_psi(args)
    xx_like = ev.is_xx_like(params)
    j = abs(params.jx) if xx_like else max(abs(params.jx), abs(params.jy), abs(params.jz), 1.0)
    t_max = args.t_max if args.t_max is not None else 4.0 * math.pi * params.hbar / j
    n_steps = int(math.floor(t_max / args.dt + 0.5))
    ts = args.dt * np.arange(n_steps + 1)

    conc = ev.concurrence_series(params, psi, ts)
    fid = ev.fidelity_series(params, psi, ts)
    closed_c = closed_f = None
    if xx_like and abs(abs(psi) - 1.0) <= 1e-9:
        theta = math.atan2(psi.imag, psi.real)
        closed_c = ev.closed_form_concurrence_reading(theta, ts, params.jx, params.hbar)
        closed_f = ev.closed_form_fidelity(theta, ts, params.jx, params.hbar)

    with _open_output(args.output) as out:
        header = "t,concurrence,fidelity"
        if closed_c is not None:
            header += ",closed_form_C,closed_form_F"
        out.write(header + "\n")
        for k in range(ts.size):
            row = f"{_fmt(ts[k])},{_fmt(conc.values[k])},{_fmt(fid.values[k])}"
            if closed_c is not None:
                row += f",{_fmt(closed_c[k])},{_fmt(closed_f[k])}"
            out.write(row + "\n")
        if xx_like and abs(abs(psi) - 1.0) <= 1e-6:
            revival = ev.revival_time(params, psi)
            if revival.status == ev.FOUND:
                out.write(f"# revival_time = {_fmt(revival.time)}\n")
            else:
                out.write(f"# revival = {revival.status}\n")
    return 0


def cmd_verify(args) -> int:
    results = vf.run_suite(seed=args.seed)
    report = vf.format_report(results, seed=args.seed)
    with _open_output(args.output) as out:
        out.write(report)
    return 0 if all(r.status != "FAIL" for r in results) else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "state": cmd_state,
        "surface": cmd_surface,
        "extrema": cmd_extrema,
        "evolve": cmd_evolve,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (QcsError, ValueError) as exc:
        print(f"qcs {args.command}: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
