"""Uniform linear array geometry, near/far-field steering and beam metrics.

Everything downstream (codebooks, scene synthesis, STAP) builds on the
steering vectors and the numerically computed beam-depth / focusing-boundary
quantities defined here.  All functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

SPEED_OF_LIGHT = 2.99792458e8  # m/s


@dataclass(frozen=True)
class ArrayGeometry:
    """Half-wavelength-spaced ULA unless a spacing is given explicitly.

    Element n sits at offset (n - (N-1)/2) * spacing on the array axis, so
    the offsets are symmetric about the phase center and sum to zero.
    """

    n_elements: int
    carrier_freq: float          # Hz
    spacing: float | None = None  # m; None -> lambda/2

    def __post_init__(self):
        if self.n_elements < 2:
            raise ValueError("array needs at least 2 elements")
        if self.carrier_freq <= 0:
            raise ValueError("carrier frequency must be positive")
        if self.spacing is None:
            object.__setattr__(self, "spacing", self.wavelength / 2.0)
        if self.spacing <= 0:
            raise ValueError("element spacing must be positive")

    @property
    def wavelength(self) -> float:
        return SPEED_OF_LIGHT / self.carrier_freq

    @property
    def aperture(self) -> float:
        return (self.n_elements - 1) * self.spacing

    @cached_property
    def element_offsets(self) -> np.ndarray:
        n = np.arange(self.n_elements)
        return (n - (self.n_elements - 1) / 2.0) * self.spacing


@dataclass(frozen=True)
class PolarPoint:
    """Range/angle location; angle is measured from array boresight."""

    range_m: float
    angle_rad: float

    def __post_init__(self):
        if not self.range_m > 0:
            raise ValueError("range must be strictly positive")
        if not -math.pi / 2 < self.angle_rad < math.pi / 2:
            raise ValueError("angle must lie strictly inside (-pi/2, pi/2)")


def element_distance(geom: ArrayGeometry, point: PolarPoint, n: int | None = None):
    """Distance from element n (all elements when n is None) to the point.

    Law of cosines on the (range, element offset) triangle:
    r_n = sqrt(r^2 + d_n^2 - 2 r d_n sin(theta)).
    """
    offsets = geom.element_offsets
    if n is not None:
        if not 0 <= n < geom.n_elements:
            raise ValueError("element index out of range")
        offsets = offsets[n]
    r, s = point.range_m, math.sin(point.angle_rad)
    return np.sqrt(r * r + offsets * offsets - 2.0 * r * offsets * s)


def _distances_grid(geom: ArrayGeometry, ranges: np.ndarray, angle: float) -> np.ndarray:
    """Element distances for many ranges at one angle, shape (len(ranges), N)."""
    r = np.asarray(ranges, dtype=float)[:, None]
    d = geom.element_offsets[None, :]
    return np.sqrt(r * r + d * d - 2.0 * r * d * math.sin(angle))


def nf_steering(geom: ArrayGeometry, point: PolarPoint) -> np.ndarray:
    """Unit-norm spherical-wavefront steering vector focused on the point.

    Phases are referenced to the array phase center so the coefficient of a
    hypothetical center element is real.
    """
    dist = element_distance(geom, point)
    phase = -2.0 * math.pi / geom.wavelength * (dist - point.range_m)
    return np.exp(1j * phase) / math.sqrt(geom.n_elements)


def _nf_steering_grid(geom: ArrayGeometry, ranges: np.ndarray, angle: float) -> np.ndarray:
    """Stack of near-field steering vectors over ranges, shape (len(ranges), N)."""
    r = np.asarray(ranges, dtype=float)
    dist = _distances_grid(geom, r, angle)
    phase = -2.0 * math.pi / geom.wavelength * (dist - r[:, None])
    return np.exp(1j * phase) / math.sqrt(geom.n_elements)


def ff_steering(geom: ArrayGeometry, angle: float) -> np.ndarray:
    """Unit-norm planar-wavefront steering vector toward the angle."""
    if not -math.pi / 2 < angle < math.pi / 2:
        raise ValueError("angle must lie strictly inside (-pi/2, pi/2)")
    phase = -2.0 * math.pi / geom.wavelength * geom.element_offsets * math.sin(angle)
    return np.exp(1j * phase) / math.sqrt(geom.n_elements)


def array_gain(weights: np.ndarray, geom: ArrayGeometry, point: PolarPoint) -> float:
    """Power gain of the beamformer toward the point; matched beam gives N."""
    a = nf_steering(geom, point)
    return geom.n_elements * abs(np.vdot(weights, a)) ** 2


def _gain_over_ranges(weights: np.ndarray, geom: ArrayGeometry,
                      ranges: np.ndarray, angle: float) -> np.ndarray:
    a = _nf_steering_grid(geom, ranges, angle)
    return geom.n_elements * np.abs(a.conj() @ weights) ** 2


@dataclass(frozen=True)
class BeamDepth:
    """Radial 3 dB interval of a focused beam; far = inf marks no far edge."""

    near: float
    far: float

    @property
    def bounded(self) -> bool:
        return math.isfinite(self.far)

    @property
    def width(self) -> float:
        return self.far - self.near


def rayleigh_distance(geom: ArrayGeometry) -> float:
    """Classical near/far-field boundary 2 D^2 / lambda."""
    return 2.0 * geom.aperture ** 2 / geom.wavelength


def _bisect_crossing(gain_fn, lo, hi, threshold, rel_tol):
    """Refine the radius where gain crosses the threshold between lo and hi."""
    g_lo = gain_fn(lo)
    while (hi - lo) > rel_tol * hi:
        mid = 0.5 * (lo + hi)
        g_mid = gain_fn(mid)
        if (g_mid >= threshold) == (g_lo >= threshold):
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def beam_depth_3db(geom: ArrayGeometry, focal: PolarPoint,
                   rel_tol: float = 1e-4) -> BeamDepth:
    """3 dB beam-depth of the near-field beam focused on `focal`.

    Scans the gain of the matched beam along the focal angle on a log range
    grid, then bisects the half-gain crossings to `rel_tol` relative accuracy.
    The far edge is the inf marker when the gain never drops 3 dB below the
    focal peak toward the far field.
    """
    if geom.n_elements < 2:
        raise ValueError("degenerate geometry")
    w = nf_steering(geom, focal)
    angle = focal.angle_rad
    r0 = focal.range_m
    peak = array_gain(w, geom, focal)
    threshold = peak / 2.0

    def gain(r):
        return _gain_over_ranges(w, geom, np.array([r]), angle)[0]

    # Near edge: walk inward on a log grid until the gain falls below half.
    r_min = min(geom.spacing / 4.0, r0 / 1e6)
    grid_in = np.geomspace(r0, r_min, 256)
    g_in = _gain_over_ranges(w, geom, grid_in, angle)
    below = np.nonzero(g_in < threshold)[0]
    if below.size == 0:
        near = r_min
    else:
        i = below[0]
        near = _bisect_crossing(gain, grid_in[i], grid_in[i - 1], threshold, rel_tol)

    # Far edge: walk outward well past the Rayleigh distance; if the gain
    # stays above half all the way into the planar-wavefront limit there is
    # no finite far edge.
    r_max = max(100.0 * rayleigh_distance(geom), 10.0 * r0)
    grid_out = np.geomspace(r0, r_max, 512)
    g_out = _gain_over_ranges(w, geom, grid_out, angle)
    below = np.nonzero(g_out < threshold)[0]
    if below.size == 0:
        ff_gain = geom.n_elements * abs(np.vdot(w, ff_steering(geom, angle))) ** 2
        if ff_gain >= threshold:
            return BeamDepth(near, math.inf)
        far = r_max  # crossing exists but beyond the scan; treat edge as r_max
    else:
        i = below[0]
        far = _bisect_crossing(gain, grid_out[i], grid_out[i - 1], threshold, rel_tol)
    return BeamDepth(near, far)


def _has_far_edge(geom: ArrayGeometry, focal: PolarPoint) -> bool:
    """Cheap bounded/unbounded test: outward gain scan without bisection."""
    w = nf_steering(geom, focal)
    threshold = array_gain(w, geom, focal) / 2.0
    r_max = max(100.0 * rayleigh_distance(geom), 10.0 * focal.range_m)
    grid = np.geomspace(focal.range_m, r_max, 512)
    g = _gain_over_ranges(w, geom, grid, focal.angle_rad)
    if np.any(g < threshold):
        return True
    ff_gain = geom.n_elements * abs(np.vdot(w, ff_steering(geom, focal.angle_rad))) ** 2
    return ff_gain < threshold


def ebrd(geom: ArrayGeometry, angle: float, rel_tol: float = 1e-3) -> float:
    """Largest focal range with a bounded 3 dB beam-depth at this angle.

    Found by bisection between the aperture and the Rayleigh distance on the
    bounded/unbounded predicate of `beam_depth_3db`.
    """
    if not -math.pi / 2 < angle < math.pi / 2:
        raise ValueError("angle must lie strictly inside (-pi/2, pi/2)")

    def bounded(r):
        return _has_far_edge(geom, PolarPoint(r, angle))

    lo = geom.aperture
    hi = rayleigh_distance(geom)
    if not bounded(lo):
        return lo
    while (hi - lo) > rel_tol * hi:
        mid = 0.5 * (lo + hi)
        if bounded(mid):
            lo = mid
        else:
            hi = mid
    return lo
