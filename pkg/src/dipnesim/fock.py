"""Truncated multimode Fock spaces: layouts, state vectors, ladder operators.

A mode with cutoff c holds occupations 0..c inclusive (dimension c+1).  Joint
states are dense complex vectors over the mixed-radix basis with the LAST mode
varying fastest (C order), so ``amplitudes.reshape(layout.dims)`` gives one
axis per mode.

Truncation bookkeeping: constructors and creation operators record probability
dropped against a cutoff in ``FockState.leakage``; the guard-band diagnostic
(`FockState.guard_band_mass`) measures how much probability sits in the top
GUARD_BAND levels of any mode.  Operations emit a `LeakageWarning` when either
exceeds LEAK_THRESHOLD, and production sweeps assert low guard mass.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

# Joint dimensions above this will not fit in memory as dense vectors.
MAX_JOINT_DIM = 200_000_000
GUARD_BAND = 2
LEAK_THRESHOLD = 1e-8


class LeakageWarning(UserWarning):
    """Probability mass beyond LEAK_THRESHOLD is pressing against a cutoff."""


@dataclass(frozen=True)
class ModeLayout:
    """Per-mode photon-number cutoffs for a register of optical modes."""

    cutoffs: tuple[int, ...]

    def __post_init__(self):
        cuts = tuple(int(c) for c in self.cutoffs)
        if len(cuts) == 0:
            raise ValueError("a layout needs at least one mode")
        if any(c < 1 for c in cuts):
            raise ValueError(f"cutoffs must be >= 1, got {cuts}")
        object.__setattr__(self, "cutoffs", cuts)
        if self.dim > MAX_JOINT_DIM:
            raise ValueError(
                f"joint dimension {self.dim} exceeds MAX_JOINT_DIM={MAX_JOINT_DIM}; "
                "reduce cutoffs or mode count"
            )

    @property
    def n_modes(self) -> int:
        return len(self.cutoffs)

    @property
    def dims(self) -> tuple[int, ...]:
        """Per-mode dimensions (cutoff + 1)."""
        return tuple(c + 1 for c in self.cutoffs)

    @property
    def dim(self) -> int:
        return math.prod(self.dims)

    def index(self, occupation) -> int:
        """Basis index of an occupation tuple (last mode fastest)."""
        if len(occupation) != self.n_modes:
            raise ValueError(f"expected {self.n_modes} occupations, got {len(occupation)}")
        idx = 0
        for n, c in zip(occupation, self.cutoffs):
            if not 0 <= n <= c:
                raise ValueError(f"occupation {n} outside 0..{c}")
            idx = idx * (c + 1) + n
        return idx

    def occupation(self, index: int) -> tuple[int, ...]:
        """Occupation tuple at a basis index."""
        if not 0 <= index < self.dim:
            raise ValueError(f"index {index} outside 0..{self.dim - 1}")
        occ = []
        for d in reversed(self.dims):
            index, n = divmod(index, d)
            occ.append(n)
        return tuple(reversed(occ))

    def drop(self, mode: int) -> "ModeLayout":
        """Layout with one mode removed (used after a number measurement)."""
        self._check_mode(mode)
        if self.n_modes == 1:
            raise ValueError("cannot drop the only mode of a layout")
        return ModeLayout(self.cutoffs[:mode] + self.cutoffs[mode + 1 :])

    def _check_mode(self, mode: int) -> None:
        if not 0 <= mode < self.n_modes:
            raise ValueError(f"mode {mode} outside 0..{self.n_modes - 1}")


@dataclass(frozen=True)
class FockState:
    """Immutable dense state vector over a ModeLayout.

    ``leakage`` accumulates probability dropped against cutoffs by the
    operations that produced this state (analytic constructors report their
    exact truncated tail here).
    """

    layout: ModeLayout
    amplitudes: np.ndarray
    leakage: float = 0.0

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.size != self.layout.dim:
            raise ValueError(
                f"amplitude length {amps.size} does not match layout dimension {self.layout.dim}"
            )
        amps = np.ascontiguousarray(amps)
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def nd(self) -> np.ndarray:
        """Read-only view shaped with one axis per mode."""
        return self.amplitudes.reshape(self.layout.dims)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, tol: float = 1e-9) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def normalize(self) -> "FockState":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return FockState(self.layout, self.amplitudes / n, self.leakage)

    def guard_band_mass(self, g: int = GUARD_BAND) -> float:
        """Probability with any occupation in the top g levels of its mode."""
        probs = np.abs(self.nd) ** 2
        interior = probs[tuple(slice(0, max(d - g, 0)) for d in self.layout.dims)]
        return float(probs.sum() - interior.sum())

    def mean_photons(self, mode: int) -> float:
        """Expectation of the number operator on one mode."""
        dist = marginal_number_distribution(self, mode, _allow_unnormalized=True)
        return float(np.dot(np.arange(dist.size), dist))


def _warn_leak(mass: float, what: str) -> None:
    if mass > LEAK_THRESHOLD:
        warnings.warn(
            f"{what}: {mass:.3e} probability against a cutoff (threshold {LEAK_THRESHOLD:.0e})",
            LeakageWarning,
            stacklevel=3,
        )


def vacuum_state(layout: ModeLayout) -> FockState:
    amps = np.zeros(layout.dim, dtype=np.complex128)
    amps[0] = 1.0
    return FockState(layout, amps)


def basis_state(layout: ModeLayout, occupation) -> FockState:
    amps = np.zeros(layout.dim, dtype=np.complex128)
    amps[layout.index(occupation)] = 1.0
    return FockState(layout, amps)


def basis_index(layout: ModeLayout, occupation) -> int:
    return layout.index(occupation)


def basis_occupation(layout: ModeLayout, index: int) -> tuple[int, ...]:
    return layout.occupation(index)


def apply_annihilation(state: FockState, mode: int) -> FockState:
    """Apply the annihilation operator to one mode.  Does not renormalize."""
    state.layout._check_mode(mode)
    nd = state.nd
    d = state.layout.dims[mode]
    out = np.zeros_like(nd)
    weights = np.sqrt(np.arange(1, d))
    shape = [1] * nd.ndim
    shape[mode] = d - 1
    src = [slice(None)] * nd.ndim
    dst = [slice(None)] * nd.ndim
    src[mode] = slice(1, d)
    dst[mode] = slice(0, d - 1)
    out[tuple(dst)] = nd[tuple(src)] * weights.reshape(shape)
    return FockState(state.layout, out.reshape(-1), state.leakage)


def apply_creation(state: FockState, mode: int) -> FockState:
    """Apply the creation operator to one mode.  Does not renormalize.

    The contribution that would exceed the cutoff is dropped and added to the
    returned state's leakage (weight (c+1)|c_top|^2 for each top-level entry).
    """
    state.layout._check_mode(mode)
    nd = state.nd
    d = state.layout.dims[mode]
    out = np.zeros_like(nd)
    weights = np.sqrt(np.arange(1, d))
    shape = [1] * nd.ndim
    shape[mode] = d - 1
    src = [slice(None)] * nd.ndim
    dst = [slice(None)] * nd.ndim
    src[mode] = slice(0, d - 1)
    dst[mode] = slice(1, d)
    out[tuple(dst)] = nd[tuple(src)] * weights.reshape(shape)
    top = [slice(None)] * nd.ndim
    top[mode] = slice(d - 1, d)
    dropped = float(d * np.sum(np.abs(nd[tuple(top)]) ** 2))
    _warn_leak(dropped, "apply_creation")
    return FockState(state.layout, out.reshape(-1), state.leakage + dropped)


def inner(a: FockState, b: FockState) -> complex:
    """Inner product <a|b>, conjugate-linear in the first argument."""
    if a.layout != b.layout:
        raise ValueError("inner product requires identical layouts")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def fidelity(a: FockState, b: FockState) -> float:
    """|<a|b>|^2 for normalized states on the same layout."""
    for name, s in (("first", a), ("second", b)):
        if not s.is_normalized():
            raise ValueError(f"fidelity requires normalized inputs; {name} has norm {s.norm()}")
    return float(abs(inner(a, b)) ** 2)


def marginal_number_distribution(
    state: FockState, mode: int, _allow_unnormalized: bool = False
) -> np.ndarray:
    """Photon-number probabilities of one mode, tracing out the rest."""
    state.layout._check_mode(mode)
    if not _allow_unnormalized and not state.is_normalized():
        raise ValueError(f"state is not normalized (norm {state.norm()})")
    probs = np.abs(state.nd) ** 2
    axes = tuple(ax for ax in range(state.layout.n_modes) if ax != mode)
    return probs.sum(axis=axes)


def tensor(a: FockState, b: FockState) -> FockState:
    """Tensor product; layouts concatenate, amplitudes multiply."""
    layout = ModeLayout(a.layout.cutoffs + b.layout.cutoffs)  # raises on overflow
    amps = np.multiply.outer(a.nd, b.nd)
    return FockState(layout, amps.reshape(-1), a.leakage + b.leakage)
