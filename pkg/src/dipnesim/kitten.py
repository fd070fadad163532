"""Heralded kitten states from photon subtraction off squeezed vacuum.

A weak beamsplitter (subtraction angle theta_sub) taps a squeezed-vacuum
mode; counting k photons in the tap heralds a kitten state in the kept
mode.  Everything here works in log space on the closed-form amplitudes,
so the infinite-squeezing limit and four-digit cutoffs are cheap.  The
two-mode simulation of the same circuit lives in kitten_by_subtraction
and is used as a cross-check.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .circuits import beamsplit
from .fock import FockState, LeakageWarning, ModeLayout, tensor, vacuum_state
from .measure import measure_count
from .states import (
    Squeeze,
    r_from_squeeze_photons,
    squeezed_vacuum,
    squeezed_vacuum_log_even,
)

LN2 = math.log(2.0)

# Extra levels kept beyond the cutoff when summing the amplitude tail.
TAIL_WINDOW = 600

# Relative tail mass above which the infinite-limit state is rejected.
TAIL_LIMIT = 1e-10


@dataclass(frozen=True)
class KittenSpec:
    """Parameters of one subtraction run.

    squeeze_photons may be math.inf for the infinite-squeezing limit
    (then only the conditional shape is defined, not a probability).
    """

    squeeze_photons: float
    theta_sub: float
    k: int
    cutoff: int

    def __post_init__(self):
        s = self.squeeze_photons
        if not (s >= 0.0):
            raise ValueError("squeeze_photons must be >= 0 (math.inf allowed)")
        if not (0.0 < self.theta_sub < math.pi / 2):
            raise ValueError("theta_sub must lie strictly inside (0, pi/2)")
        if self.k < 0:
            raise ValueError("k must be a nonnegative integer")
        if self.cutoff < 1:
            raise ValueError("cutoff must be at least 1")

    @property
    def infinite(self) -> bool:
        return math.isinf(self.squeeze_photons)


@dataclass(frozen=True)
class KittenState:
    """Heralded state plus its bookkeeping.

    probability is the herald probability P(k); it is math.nan in the
    infinite-squeezing limit where no normalizable input exists.
    mean_photons is computed from the untruncated amplitude series, not
    from the stored (cutoff) state, so it is good to the tail mass.
    """

    state: FockState
    probability: float
    mean_photons: float


def _log_source_even(spec: KittenSpec, m: np.ndarray) -> np.ndarray:
    """log |C_{2m}| of the squeezed source, finite or limiting."""
    if spec.infinite:
        return 0.5 * gammaln(2 * m + 1) - m * LN2 - gammaln(m + 1)
    r = r_from_squeeze_photons(spec.squeeze_photons)
    return squeezed_vacuum_log_even(r, m)


def _log_kept_amplitudes(spec: KittenSpec, j_max: int):
    """Unnormalized log amplitudes of the kept mode after heralding k.

    Returns (levels, log_amp) on the support j = k (mod 2), j <= j_max.
    A term sqrt(k!) i^k / sin(theta)^k common to every level is dropped;
    it cancels on normalization.
    """
    j = np.arange(spec.k % 2, j_max + 1, 2)
    n = j + spec.k
    log_c = _log_source_even(spec, n // 2)
    log_amp = (
        0.5 * (gammaln(n + 1) - gammaln(j + 1))
        + j * math.log(math.cos(spec.theta_sub))
        + log_c
    )
    return j, log_amp


def kitten_direct(spec: KittenSpec) -> KittenState:
    """Build the heralded kitten from closed-form amplitudes.

    Amplitudes are real and nonnegative (the source squeeze phase is
    fixed at pi, and the herald's global i^k is dropped).  Raises if the
    requested state does not exist: infinite squeezing with k = 0 is not
    normalizable, and zero squeezing cannot herald k >= 1.
    """
    if spec.infinite and spec.k == 0:
        raise ValueError(
            "infinite squeezing with k = 0 leaves a non-normalizable state"
        )
    layout = ModeLayout((spec.cutoff,))
    if spec.squeeze_photons == 0.0:
        if spec.k > 0:
            raise ValueError("zero squeezing heralds k >= 1 with probability 0")
        return KittenState(vacuum_state(layout), 1.0, 0.0)

    j, log_amp = _log_kept_amplitudes(spec, spec.cutoff + TAIL_WINDOW)
    w = np.exp(2.0 * (log_amp - log_amp.max()))
    # geometric bound on mass beyond the window; consecutive support
    # levels are 2 apart so the weight ratio is the squared step factor
    remainder = 0.0
    if len(w) >= 2 and w[-1] < w[-2]:
        rho = w[-1] / w[-2]
        remainder = w[-1] * rho / (1.0 - rho)
    total = w.sum() + remainder
    inside = j <= spec.cutoff
    tail = (w[~inside].sum() + remainder) / total

    if spec.infinite and tail > TAIL_LIMIT:
        raise ValueError(
            f"cutoff {spec.cutoff} leaves relative tail mass {tail:.3e} "
            f"(> {TAIL_LIMIT:.0e}) in the infinite-squeezing limit; raise it"
        )
    if tail > 1e-8:
        warnings.warn(
            f"kitten_direct: {tail:.3e} of the heralded mass lies beyond "
            f"cutoff {spec.cutoff}",
            LeakageWarning,
            stacklevel=2,
        )

    # renormalize within the cutoff: the kitten is a conditional state,
    # same convention as measure_count posts; the cut mass goes to leakage
    amps = np.zeros(layout.dim, dtype=np.complex128)
    amps[j[inside]] = np.sqrt(w[inside] / w[inside].sum())
    mean = float((j * w).sum() / w.sum())
    prob = math.nan if spec.infinite else kitten_probability(spec)
    return KittenState(FockState(layout, amps, leakage=float(tail)), prob, mean)


def kitten_probability(spec: KittenSpec) -> float:
    """Herald probability P(k) for finite squeezing."""
    if spec.infinite:
        raise ValueError("herald probability is undefined at infinite squeezing")
    if spec.squeeze_photons == 0.0:
        return 1.0 if spec.k == 0 else 0.0
    log_sin = math.log(math.sin(spec.theta_sub))
    log_cos = math.log(math.cos(spec.theta_sub))
    horizon = 2000
    while True:
        m = np.arange(spec.k % 2, horizon, 2)
        n = m + spec.k
        log_amp = (
            0.5 * (gammaln(n + 1) - gammaln(m + 1) - gammaln(spec.k + 1))
            + m * log_cos
            + spec.k * log_sin
            + _log_source_even(spec, n // 2)
        )
        terms = np.exp(2.0 * (log_amp - log_amp.max()))
        if terms[-1] <= terms.max() * 1e-20 or horizon >= 64000:
            break
        horizon *= 2
    return float(terms.sum() * math.exp(2.0 * log_amp.max()))


def peak_estimate(k: int, theta_sub: float) -> float:
    """Level at which the k-herald amplitude envelope peaks, in the
    infinite-squeezing limit: k / (-2 log cos theta_sub).

    k = 0 gives 0; theta_sub -> 0 diverges and returns math.inf.
    """
    if k < 0:
        raise ValueError("k must be a nonnegative integer")
    if not (0.0 <= theta_sub < math.pi / 2):
        raise ValueError("theta_sub must lie in [0, pi/2)")
    if k == 0:
        return 0.0
    log_cos = math.log(math.cos(theta_sub))
    if log_cos == 0.0:
        return math.inf
    return -k / (2.0 * log_cos)


def displacement_estimate(k: int, theta_sub: float) -> float:
    """Coherent displacement whose photon number sits at the envelope
    peak: sqrt(peak_estimate)."""
    return math.sqrt(peak_estimate(k, theta_sub))


def kitten_by_subtraction(spec: KittenSpec, pickoff_cutoff: int | None = None) -> KittenState:
    """Two-mode simulation of the subtraction circuit.

    Squeezed vacuum meets vacuum on a theta_sub beamsplitter; the tap
    mode is measured at k.  Exists as an independent cross-check of
    kitten_direct; requires finite squeezing.  The source cutoff is
    spec.cutoff + k, which is exact: a (n, 0) input only reaches kept
    levels at or below n - k after a k count.  The pickoff matches it by
    default so no photon-number sector is clipped.
    """
    if spec.infinite:
        raise ValueError("two-mode simulation needs finite squeezing")
    if spec.squeeze_photons == 0.0:
        return kitten_direct(spec)
    if pickoff_cutoff is None:
        pickoff_cutoff = spec.cutoff + spec.k
    r = r_from_squeeze_photons(spec.squeeze_photons)
    # source truncation above cutoff + k cannot reach the kept window
    # after a k count, so the leak warning would be noise here
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", LeakageWarning)
        source = squeezed_vacuum(Squeeze(r, math.pi), spec.cutoff + spec.k)
    joint = tensor(source, vacuum_state(ModeLayout((pickoff_cutoff,))))
    out = beamsplit(joint, 0, 1, spec.theta_sub)
    res = measure_count(out, 1, spec.k)
    kept = res.post_state
    # strip the herald's global i^k so amplitudes are real and positive
    # like kitten_direct's, then drop the k guard levels
    amps = kept.nd * (-1j) ** spec.k
    layout = ModeLayout((spec.cutoff,))
    head = amps[: layout.dim].copy()
    tail = float(np.sum(np.abs(amps[layout.dim:]) ** 2))
    head /= math.sqrt(1.0 - tail) if tail < 1.0 else 1.0
    levels = np.arange(layout.dim)
    mean = float(np.sum(levels * np.abs(head) ** 2))
    return KittenState(
        FockState(layout, head, leakage=tail), res.probability, mean
    )
