"""Sweep definitions and curve data for the four level and potential plots.

fig1  Kratzer levels E_{nl} against alpha (A=0.5, D=1)
fig2  screened effective potential against r for delta in {0, 0.1, 0.2}
      (A=2, D=4; panel a: l=2 and several alpha, panel b: alpha=0.5 and several l)
fig3  screened levels E_{nl} against alpha (A=2, D=4, delta=0.001)
fig4  screened E_{01} against alpha for several delta (A=2, D=4)

All presets use hbar = M = q = 1.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import InvalidParameterError
from .model import ModelParams
from .spectra import Kind, effective_potential_screened, energy

FIGURE_IDS = ("fig1", "fig2", "fig3", "fig4")
_AXIS = {"fig1": "alpha", "fig2": "r", "fig3": "alpha", "fig4": "alpha"}


@dataclass(frozen=True)
class CurveSpec:
    name: str
    l: int
    n: Optional[int] = None          # None: plot the effective potential
    kind: Kind = Kind.KRATZER
    overrides: tuple = ()            # (parameter, value) pairs for this curve


@dataclass(frozen=True)
class FigureSpec:
    figure_id: str
    axis: str
    x_min: float
    x_max: float
    points: int
    curves: tuple
    fixed: dict = field(default_factory=dict)
    include_start: bool = True
    include_end: bool = True

    def __post_init__(self):
        if self.figure_id not in FIGURE_IDS:
            raise InvalidParameterError(f"unknown figure {self.figure_id!r}")
        if self.axis != _AXIS[self.figure_id]:
            raise InvalidParameterError(f"{self.figure_id} sweeps {_AXIS[self.figure_id]}, not {self.axis}")
        if not self.x_min <= self.x_max or self.points < 1 or not self.curves:
            raise InvalidParameterError("sweep range and curve list must be non-empty")

    def sweep(self) -> np.ndarray:
        if self.x_min == self.x_max:
            return np.array([float(self.x_min)])
        extra = (not self.include_start) + (not self.include_end)
        x = np.linspace(self.x_min, self.x_max, self.points + extra)
        if not self.include_start:
            x = x[1:]
        if not self.include_end:
            x = x[:-1]
        return x


def _fmt(v):
    return f"{v:g}"


def default_figure_spec(figure_id: str, points: int = 200) -> FigureSpec:
    """Preset sweep for one figure; alpha ranges cover where every level is bound."""
    if figure_id == "fig1":
        curves = tuple(CurveSpec(f"n{n}_l{l}", l, n, Kind.KRATZER)
                       for n in range(3) for l in (1, 2, 3))
        return FigureSpec("fig1", "alpha", 0.4, 0.95, points, curves, {"A": 0.5, "D": 1.0})
    if figure_id == "fig2":
        curves = []
        for delta in (0.0, 0.1, 0.2):
            for alpha in (0.3, 0.5, 0.7):
                curves.append(CurveSpec(f"a_alpha{_fmt(alpha)}_delta{_fmt(delta)}", 2, None, Kind.SCREENED,
                                        (("alpha", alpha), ("delta", delta))))
            for l in (1, 2, 3):
                curves.append(CurveSpec(f"b_l{l}_delta{_fmt(delta)}", l, None, Kind.SCREENED,
                                        (("alpha", 0.5), ("delta", delta))))
        return FigureSpec("fig2", "r", 0.0, 6.0, points, tuple(curves), {"A": 2.0, "D": 4.0},
                          include_start=False)
    if figure_id == "fig3":
        curves = tuple(CurveSpec(f"n{n}_l{l}", l, n, Kind.SCREENED)
                       for n in range(3) for l in range(5))
        return FigureSpec("fig3", "alpha", 0.3, 1.0, points, curves,
                          {"A": 2.0, "D": 4.0, "delta": 0.001}, include_end=False)
    if figure_id == "fig4":
        curves = tuple(CurveSpec(f"delta{_fmt(d)}", 1, 0, Kind.SCREENED, (("delta", d),))
                       for d in (0.001, 0.005, 0.010, 0.015))
        return FigureSpec("fig4", "alpha", 0.3, 1.0, points, curves, {"A": 2.0, "D": 4.0},
                          include_end=False)
    raise InvalidParameterError(f"unknown figure {figure_id!r}")


def figure_data(spec: FigureSpec, base: Optional[ModelParams] = None,
                workers: Optional[int] = None) -> dict:
    """Evaluate every curve of ``spec``; returns ``{curve name: (x, y)}`` in curve order.

    Sweep points of an alpha sweep run on a thread pool of ``workers``
    threads; results are gathered by sweep index, so the output does not
    depend on scheduling.
    """
    if base is None:
        base = ModelParams.from_values(alpha=1.0, A=1.0, D=1.0)
    base = base.replace(hbar=1.0, mass=1.0, charge=1.0, **spec.fixed)
    x = spec.sweep()
    data = {}
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for curve in spec.curves:
            params = base.replace(**dict(curve.overrides))
            if spec.axis == "r":
                y = np.asarray(effective_potential_screened(x, params, curve.l), dtype=float)
            else:
                def level(a, params=params, curve=curve):
                    return energy(curve.kind, params.replace(alpha=float(a)), curve.n, curve.l)
                y = np.fromiter(pool.map(level, x), dtype=float, count=x.size)
            data[curve.name] = (x, np.atleast_1d(y))
    return data
