"""Heisenberg-family Hamiltonians and their coherent-state energy surfaces.

The Q symbol of a model is the diagonal expectation E(psi) =
<B(psi)|H|B(psi)> taken in one maximally entangled basis member B; plotted
over the label plane it forms an energy surface whose isolated extrema
are located on a grid and refined by direct search.

Two evaluation routes exist: `q_symbol_direct` (matrix element, the
oracle) and `q_symbol_closed` (hand-reduced formulas, available only for
specific model/state pairs).  Unit conventions follow the construction of
each model: XXX and XXZ are written in spin operators and carry hbar^2;
XYZ is written in bare Pauli matrices with a 1/2 prefactor and carries no
hbar.  Three-qubit energies depend on the bond topology; the closed
forms correspond to the open chain (1,2)+(2,3).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np
from scipy.optimize import minimize

from .complex_geometry import PointLike, as_point
from .entangled_basis import entangled_state
from .errors import BadParams, FormulaUnavailable, InfinitePoint, NoConvergence
from .operators import embed_pair, sigma_x, sigma_y, sigma_z, spin_minus, spin_plus, spin_z

__all__ = [
    "CouplingParams",
    "hamiltonian",
    "q_symbol_direct",
    "q_symbol_closed",
    "q_symbol_pair",
    "Extremum",
    "SurfaceGrid",
    "energy_surface",
    "refine_extremum",
    "MIN",
    "MAX",
    "SADDLE",
    "CONSTANT",
]

MODELS = ("XXX", "XXZ", "XYZ")
BOND_CHOICES = ("all-pairs", "chain")

# Extremum kinds.
MIN = "MIN"
MAX = "MAX"
SADDLE = "SADDLE"
CONSTANT = "CONSTANT"

# A surface is flagged constant when its total spread is below this
# relative floor; the same relative margin guards the strict-dominance
# test against float noise on flat ridges.
FLATNESS_REL = 1e-10
_GRAD_STEP = 1e-5
_HESS_STEP = 1e-4
_CURVATURE_FLOOR = 1e-5
_MERGE_DIST = 1e-4


@dataclass(frozen=True)
class CouplingParams:
    """Coupling constants for one model; build via the xxx/xxz/xyz constructors.

    XXZ keeps the redundant pair (delta, jz) consistent as jz = j * delta.
    XYZ accepts either Cartesian (jx, jy) or the sum/difference pair
    (j_plus, j_minus) with jx = j_plus + j_minus, jy = j_plus - j_minus.
    """

    model: str
    j: float = 0.0
    delta: float = 0.0
    jx: float = 0.0
    jy: float = 0.0
    jz: float = 0.0
    hbar: float = 1.0

    def __post_init__(self):
        if self.model not in MODELS:
            raise BadParams(f"unknown model {self.model!r}; expected one of {MODELS}")
        if not self.hbar > 0:
            raise BadParams(f"hbar must be positive, got {self.hbar}")
        if self.model == "XXZ" and abs(self.jz - self.j * self.delta) > 1e-12 * (
            1.0 + abs(self.jz)
        ):
            raise BadParams(f"inconsistent XXZ couplings: jz={self.jz} != j*delta={self.j * self.delta}")

    @classmethod
    def xxx(cls, j: float, hbar: float = 1.0) -> "CouplingParams":
        return cls(model="XXX", j=float(j), hbar=hbar)

    @classmethod
    def xxz(
        cls,
        j: float,
        delta: Optional[float] = None,
        jz: Optional[float] = None,
        hbar: float = 1.0,
    ) -> "CouplingParams":
        if delta is None and jz is None:
            raise BadParams("XXZ needs delta or jz")
        if delta is None:
            if j == 0:
                raise BadParams("cannot infer delta from jz when j = 0")
            delta = jz / j
        if jz is None:
            jz = j * delta
        return cls(model="XXZ", j=float(j), delta=float(delta), jz=float(jz), hbar=hbar)

    @classmethod
    def xyz(
        cls,
        jx: Optional[float] = None,
        jy: Optional[float] = None,
        jz: float = 0.0,
        j_plus: Optional[float] = None,
        j_minus: Optional[float] = None,
        hbar: float = 1.0,
    ) -> "CouplingParams":
        cartesian = jx is not None or jy is not None
        sum_diff = j_plus is not None or j_minus is not None
        if cartesian and sum_diff:
            raise BadParams("give (jx, jy) or (j_plus, j_minus), not both")
        if sum_diff:
            j_plus = j_plus or 0.0
            j_minus = j_minus or 0.0
            jx = j_plus + j_minus
            jy = j_plus - j_minus
        elif cartesian:
            jx = jx or 0.0
            jy = jy or 0.0
        else:
            raise BadParams("XYZ needs (jx, jy) or (j_plus, j_minus)")
        return cls(model="XYZ", jx=float(jx), jy=float(jy), jz=float(jz), hbar=hbar)

    @property
    def j_plus(self) -> float:
        return 0.5 * (self.jx + self.jy)

    @property
    def j_minus(self) -> float:
        return 0.5 * (self.jx - self.jy)


def _bond_list(n_qubits: int, bonds: str) -> tuple[tuple[int, int], ...]:
    if bonds not in BOND_CHOICES:
        raise BadParams(f"unknown bond topology {bonds!r}; expected one of {BOND_CHOICES}")
    if n_qubits == 2:
        return ((0, 1),)
    if bonds == "chain":
        return ((0, 1), (1, 2))
    return ((0, 1), (0, 2), (1, 2))


def _two_site_terms(params: CouplingParams) -> list[tuple[np.ndarray, np.ndarray, float]]:
    """(left operator, right operator, coefficient) triples for one bond."""
    hb = params.hbar
    if params.model == "XXX":
        return [
            (spin_plus(hb), spin_minus(hb), -params.j),
            (spin_minus(hb), spin_plus(hb), -params.j),
            (spin_z(hb), spin_z(hb), -2.0 * params.j),
        ]
    if params.model == "XXZ":
        return [
            (spin_plus(hb), spin_minus(hb), -params.j),
            (spin_minus(hb), spin_plus(hb), -params.j),
            (spin_z(hb), spin_z(hb), 2.0 * params.delta),
        ]
    return [
        (sigma_x(), sigma_x(), 0.5 * params.jx),
        (sigma_y(), sigma_y(), 0.5 * params.jy),
        (sigma_z(), sigma_z(), 0.5 * params.jz),
    ]


@lru_cache(maxsize=256)
def _hamiltonian_cached(params: CouplingParams, n_qubits: int, bonds: str) -> np.ndarray:
    h = np.zeros((2**n_qubits, 2**n_qubits), dtype=complex)
    for i, j in _bond_list(n_qubits, bonds):
        for left, right, coeff in _two_site_terms(params):
            h += coeff * embed_pair(left, right, i, j, n_qubits)
    h.flags.writeable = False
    return h


def hamiltonian(params: CouplingParams, n_qubits: int = 2, bonds: str = "all-pairs") -> np.ndarray:
    """Dense Hermitian Hamiltonian on 2 or 3 qubits.

    XXX: -J (S1+ S2- + S1- S2+ + 2 S1z S2z) per bond.
    XXZ: -J (S1+ S2- + S1- S2+) + 2 Delta S1z S2z per bond.
    XYZ: (Jx sx sx + Jy sy sy + Jz sz sz) / 2 per bond (bare Paulis).

    For three qubits the topology is "chain" ((1,2)+(2,3)) or "all-pairs".
    The returned array is cached and read-only.
    """
    if n_qubits not in (2, 3):
        raise BadParams(f"n_qubits must be 2 or 3, got {n_qubits}")
    return _hamiltonian_cached(params, n_qubits, bonds)


def _require_finite(p: PointLike) -> complex:
    q = as_point(p)
    if q.is_infinity:
        raise InfinitePoint("energy surfaces are evaluated at finite labels")
    return q.value


def q_symbol_direct(
    params: CouplingParams, state_id: str, p: PointLike, bonds: str = "all-pairs"
) -> float:
    """Q symbol <B(psi)|H|B(psi)> by direct matrix element (the oracle route)."""
    psi = _require_finite(p)
    sid = state_id.upper()
    n = 3 if sid.startswith("PG") else 2
    h = hamiltonian(params, n, bonds)
    a = entangled_state(sid, psi).amplitudes
    val = complex(np.vdot(a, h @ a))
    if abs(val.imag) > 1e-12 * (1.0 + abs(val.real)):
        raise ValueError(f"non-real expectation {val!r} of a Hermitian operator")
    return float(val.real)


def q_symbol_closed(params: CouplingParams, state_id: str, p: PointLike) -> float:
    """Q symbol by hand-reduced closed formula.

    Available pairs: (XXX, P+), (XXZ, P+), and XYZ with any of P+, P-,
    G+, G-, PG+, PG-.  Three-qubit forms correspond to the chain
    topology.  Raises FormulaUnavailable for anything else.
    """
    psi = _require_finite(p)
    sid = state_id.upper()
    x, y = psi.real, psi.imag
    r2 = x * x + y * y
    d2 = 1.0 + r2

    if params.model == "XXX":
        if sid == "P+":
            return -params.j * params.hbar**2 / 2.0
        raise FormulaUnavailable(f"no closed form for (XXX, {sid})")

    if params.model == "XXZ":
        if sid == "P+":
            hb2 = params.hbar**2
            return -hb2 * (8.0 * params.j * y * y + params.jz * (1.0 + 2.0 * x * x - 6.0 * y * y + r2 * r2)) / (d2 * d2)
        raise FormulaUnavailable(f"no closed form for (XXZ, {sid})")

    jp, jm, jz = params.j_plus, params.j_minus, params.jz
    # Real reductions used below: (psi - conj psi)^2 = -4 y^2,
    # (psi + conj psi)^2 = 4 x^2, psi^2 + conj(psi)^2 = 2 (x^2 - y^2).
    psi2_sum = 2.0 * (x * x - y * y)
    if sid == "P+":
        num = (
            8.0 * jp * y * y
            + 2.0 * jm * ((1.0 + x * x - y * y) ** 2 - 4.0 * x * x * y * y)
            + jz * ((1.0 - r2) ** 2 + 2.0 * psi2_sum)
        )
        return num / (2.0 * d2 * d2)
    if sid == "P-":
        num = (
            8.0 * jp * x * x
            - 2.0 * jm * ((1.0 - x * x + y * y) ** 2 - 4.0 * x * x * y * y)
            + jz * ((1.0 - x * x + y * y) ** 2 + 4.0 * x * x * y * y - 4.0 * x * x)
        )
        return num / (2.0 * d2 * d2)
    if sid == "G+":
        num = 2.0 * jp * (1.0 - r2) ** 2 - 4.0 * jm * psi2_sum + jz * (4.0 * r2 - (1.0 - r2) ** 2)
        return num / (2.0 * d2 * d2)
    if sid == "G-":
        return -(jz / 2.0 + jp)
    if sid == "PG+":
        num = (
            4.0 * jp * r2 * d2
            + 2.0 * jm * d2 * psi2_sum
            + jz * (1.0 - r2 - r2 * r2 + r2 * r2 * r2)
        )
        return num / d2**3
    if sid == "PG-":
        num = (
            4.0 * jp * (1.0 + r2 * r2 * r2)
            - 6.0 * jm * d2 * psi2_sum
            - jz * (1.0 - 9.0 * r2 - 9.0 * r2 * r2 + r2 * r2 * r2)
        )
        return num / (3.0 * d2**3)
    raise FormulaUnavailable(f"no closed form for (XYZ, {sid})")


def q_symbol_pair(
    params: CouplingParams, state_id: str, p: PointLike, bonds: str = "all-pairs"
) -> tuple[float, float, float]:
    """(direct, closed, closed - direct) at one label; the residual is diagnostic."""
    direct = q_symbol_direct(params, state_id, p, bonds)
    closed = q_symbol_closed(params, state_id, p)
    return direct, closed, closed - direct


@dataclass(frozen=True)
class Extremum:
    """An isolated stationary point of an energy surface."""

    x: float
    y: float
    value: float
    kind: str


@dataclass(frozen=True)
class SurfaceGrid:
    """Energy values sampled on a rectangular label grid.

    values[i, j] is the energy at (xs[j], ys[i]); extrema are refined
    stationary points sorted by value, and `constant` flags surfaces whose
    total spread is below the flatness floor.
    """

    window: tuple[float, float, float, float]
    step: float
    xs: np.ndarray
    ys: np.ndarray
    values: np.ndarray
    extrema: tuple[Extremum, ...]
    constant: bool
    source: str
    state_id: str


def _surface_function(
    params: CouplingParams, state_id: str, source: str, bonds: str
) -> Callable[[float, float], float]:
    kind = source.lower()
    if kind == "direct":
        return lambda x, y: q_symbol_direct(params, state_id, complex(x, y), bonds)
    if kind == "closed":
        return lambda x, y: q_symbol_closed(params, state_id, complex(x, y))
    raise BadParams(f"unknown source {source!r}; expected 'direct' or 'closed'")


def _thread_count() -> int:
    raw = os.environ.get("QCS_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _grid_axes(window: tuple[float, float, float, float], step: float) -> tuple[np.ndarray, np.ndarray]:
    x_min, x_max, y_min, y_max = window
    if not (x_max > x_min and y_max > y_min):
        raise BadParams(f"empty window {window}")
    if not step > 0:
        raise BadParams(f"step must be positive, got {step}")
    nx = int(math.floor((x_max - x_min) / step + 0.5)) + 1
    ny = int(math.floor((y_max - y_min) / step + 0.5)) + 1
    xs = x_min + step * np.arange(nx)
    ys = y_min + step * np.arange(ny)
    return xs, ys


def _evaluate_grid(f: Callable[[float, float], float], xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    def row(y: float) -> np.ndarray:
        return np.array([f(x, y) for x in xs])

    threads = _thread_count()
    if threads == 1:
        rows = [row(y) for y in ys]
    else:
        # Rows are independent; assembling them by index keeps the result
        # identical for any thread count.
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(row, ys))
    return np.vstack(rows)


def _grid_seeds(values: np.ndarray) -> list[tuple[int, int, str]]:
    """Strict 8-neighbor extremum candidates (row, col, MIN|MAX)."""
    seeds = []
    ny, nx = values.shape
    for i in range(1, ny - 1):
        for j in range(1, nx - 1):
            v = values[i, j]
            patch = values[i - 1 : i + 2, j - 1 : j + 2]
            margin = FLATNESS_REL * (1.0 + abs(v))
            others = np.delete(patch.reshape(-1), 4)
            if v < others.min() - margin:
                seeds.append((i, j, MIN))
            elif v > others.max() + margin:
                seeds.append((i, j, MAX))
    return seeds


def _gradient(f: Callable[[float, float], float], x: float, y: float, h: float = _GRAD_STEP) -> np.ndarray:
    return np.array(
        [
            (f(x + h, y) - f(x - h, y)) / (2.0 * h),
            (f(x, y + h) - f(x, y - h)) / (2.0 * h),
        ]
    )


def _hessian(f: Callable[[float, float], float], x: float, y: float, h: float = _HESS_STEP) -> np.ndarray:
    fxx = (f(x + h, y) - 2.0 * f(x, y) + f(x - h, y)) / h**2
    fyy = (f(x, y + h) - 2.0 * f(x, y) + f(x, y - h)) / h**2
    fxy = (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4.0 * h**2)
    return np.array([[fxx, fxy], [fxy, fyy]])


def _classify(f: Callable[[float, float], float], x: float, y: float) -> str:
    eigs = np.linalg.eigvalsh(_hessian(f, x, y))
    scale = _CURVATURE_FLOOR
    if eigs[0] > scale and eigs[1] > scale:
        return MIN
    if eigs[0] < -scale and eigs[1] < -scale:
        return MAX
    if eigs[0] < -scale < scale < eigs[1]:
        return SADDLE
    return CONSTANT


def refine_extremum(
    params: CouplingParams,
    state_id: str,
    seed: tuple[float, float],
    source: str = "direct",
    bonds: str = "all-pairs",
) -> Extremum:
    """Polish a coarse extremum seed by Nelder-Mead direct search.

    The search direction (minimize, maximize, or stationary-point hunt)
    follows the local Hessian at the seed.  The refined point never
    degrades the seed value for minima/maxima, and its central-difference
    gradient norm is driven below 1e-6.  Raises NoConvergence when the
    simplex stalls.
    """
    f = _surface_function(params, state_id, source, bonds)
    x0, y0 = float(seed[0]), float(seed[1])
    grad0 = _gradient(f, x0, y0)
    hess0 = _hessian(f, x0, y0)
    if float(np.max(np.abs(hess0))) < _CURVATURE_FLOOR and float(np.linalg.norm(grad0)) < 1e-9:
        return Extremum(x0, y0, f(x0, y0), CONSTANT)

    eigs = np.linalg.eigvalsh(hess0)
    if eigs[0] > 0.0:
        objective = lambda v: f(v[0], v[1])
        sign = 1.0
    elif eigs[1] < 0.0:
        objective = lambda v: -f(v[0], v[1])
        sign = -1.0
    else:
        objective = lambda v: float(np.sum(_gradient(f, v[0], v[1]) ** 2))
        sign = 0.0

    res = minimize(
        objective,
        np.array([x0, y0]),
        method="Nelder-Mead",
        options={"xatol": 1e-9, "fatol": 1e-13, "maxiter": 10000, "maxfev": 20000},
    )
    if not res.success:
        raise NoConvergence(f"refinement stalled at {res.x}: {res.message}")
    x, y = float(res.x[0]), float(res.x[1])
    value = f(x, y)
    if sign > 0.0:
        value = min(value, f(x0, y0))  # Nelder-Mead never increases; guard rounding.
    kind = _classify(f, x, y)
    return Extremum(x, y, value, kind)


def _merge_extrema(extrema: list[Extremum]) -> tuple[Extremum, ...]:
    ordered = sorted(extrema, key=lambda e: (e.value, e.x, e.y))
    kept: list[Extremum] = []
    for e in ordered:
        if all(math.hypot(e.x - k.x, e.y - k.y) > _MERGE_DIST for k in kept):
            kept.append(e)
    return tuple(kept)


def energy_surface(
    params: CouplingParams,
    state_id: str,
    window: tuple[float, float, float, float] = (-3.0, 3.0, -3.0, 3.0),
    step: float = 0.05,
    source: str = "direct",
    bonds: str = "all-pairs",
    refine: bool = True,
) -> SurfaceGrid:
    """Sample the Q-symbol surface on a grid and locate its isolated extrema.

    Grid nodes are x = x_min + i*step, y = y_min + j*step.  Seeds come
    from strict 8-neighbor dominance with a relative noise margin; each
    seed is refined by direct search and duplicates within 1e-4 are
    merged.  A surface whose spread is below 1e-10 * (1 + |max|) is
    flagged constant and carries no extrema.
    """
    sid = state_id.upper()
    source = source.lower()
    f = _surface_function(params, sid, source, bonds)
    xs, ys = _grid_axes(window, step)
    values = _evaluate_grid(f, xs, ys)

    spread = float(values.max() - values.min())
    constant = spread < FLATNESS_REL * (1.0 + abs(float(values.max())))
    extrema: tuple[Extremum, ...] = ()
    if not constant and refine:
        refined = [
            refine_extremum(params, sid, (float(xs[j]), float(ys[i])), source, bonds)
            for i, j, _ in _grid_seeds(values)
        ]
        extrema = _merge_extrema([e for e in refined if e.kind != CONSTANT])
    return SurfaceGrid(
        window=tuple(float(w) for w in window),
        step=float(step),
        xs=xs,
        ys=ys,
        values=values,
        extrema=extrema,
        constant=constant,
        source=source,
        state_id=sid,
    )
