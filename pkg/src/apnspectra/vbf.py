"""Truth-table analysis of maps on GF(2^m) x GF(2^m).

A :class:`VectorialFunction` stores the full table of a map
F: GF(2^m)^2 -> GF(2^m)^2.  Input pairs (x, y) are packed into a 2m-bit
index with x in the low m bits and y in the high m bits; output pairs pack
the same way, so addition of inputs or outputs is a plain XOR of packed
values.

Component functions are selected by a pair (lam, mu) via the trace pairing
trace(lam * F1) + trace(mu * F2).  The Walsh transform itself runs the
standard fast butterfly, whose index pairing is the bitwise dot product;
the spectrum (and hence plateau levels, nonlinearity, bent counts) is the
same for any nondegenerate pairing, and ``trace_pairing_permutation`` gives
the exact index substitution relating the two conventions, which the test
suite verifies against a quartic-time direct evaluation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import MemoryCapError, ParameterError
from .gf2m import Field

DEFAULT_MAX_M = 13
MAX_M_ENV = "APNSPECTRA_MAX_M"

_COMPONENT_CHUNK = 256


def max_table_m() -> int:
    """Degree cap for truth tables (override with APNSPECTRA_MAX_M)."""
    raw = os.environ.get(MAX_M_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise MemoryCapError(f"{MAX_M_ENV}={raw!r} is not an integer")
    return DEFAULT_MAX_M


@dataclass(frozen=True, eq=False)
class VectorialFunction:
    """Exhaustive table of F: GF(2^m)^2 -> GF(2^m)^2, outputs packed."""

    field: Field
    table: np.ndarray  # int64, length 2^(2m), entry = F1 | F2 << m

    def __post_init__(self):
        m = self.field.m
        if m > max_table_m():
            raise MemoryCapError(
                f"m={m} exceeds the truth-table cap {max_table_m()} "
                f"(set {MAX_M_ENV} to raise it)")
        n = 1 << (2 * m)
        if self.table.shape != (n,):
            raise ValueError(f"table must have length {n}")

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def n(self) -> int:
        """Input dimension over GF(2)."""
        return 2 * self.field.m

    def f1(self) -> np.ndarray:
        return self.table & (self.field.order - 1)

    def f2(self) -> np.ndarray:
        return self.table >> self.field.m

    def output_pair(self, x: int, y: int) -> tuple[int, int]:
        v = int(self.table[self.field.check(x) | (self.field.check(y) << self.field.m)])
        return v & (self.field.order - 1), v >> self.field.m

    def flip_output_bit(self, index: int, bit: int) -> "VectorialFunction":
        """Copy with one output bit toggled (corruption self-tests)."""
        t = self.table.copy()
        t[index] ^= 1 << bit
        return VectorialFunction(self.field, t)


def build_function(params, field: Field | None = None) -> VectorialFunction:
    """Evaluate a family parameter record into a full truth table."""
    from . import families

    return families.build_function(params, field)


# ----------------------------------------------------------------------
# Walsh transform
# ----------------------------------------------------------------------

def fwht(values) -> np.ndarray:
    """Fast Walsh-Hadamard transform along the last axis (int64 copy).

    out[u] = sum_x (-1)^(u.x) in[x] with the bitwise dot product on
    indices; n * 2^n integer butterflies.
    """
    a = np.array(values, dtype=np.int64)
    n = a.shape[-1]
    if n & (n - 1) or n == 0:
        raise ValueError(f"length {n} is not a power of two")
    h = 1
    while h < n:
        v = a.reshape(a.shape[:-1] + (n // (2 * h), 2, h))
        x = v[..., 0, :] + v[..., 1, :]
        y = v[..., 0, :] - v[..., 1, :]
        v[..., 0, :] = x
        v[..., 1, :] = y
        h *= 2
    return a


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    """Transform values of one Boolean function plus their classification."""

    values: np.ndarray  # int64, length 2^n
    distinct_abs: tuple[int, ...]
    plateau_level: int | None  # None = not plateaued

    @property
    def n(self) -> int:
        return int(self.values.shape[0]).bit_length() - 1

    def is_plateaued(self) -> bool:
        return self.plateau_level is not None


def _classify_distinct_abs(distinct_abs: tuple[int, ...], n: int) -> int | None:
    nonzero = [v for v in distinct_abs if v]
    if len(nonzero) != 1:
        return None  # Parseval rules out the all-zero spectrum
    peak = nonzero[0]
    if peak & (peak - 1):
        return None  # not a power of two
    return 2 * (peak.bit_length() - 1) - n


def plateau_level(spectrum: WalshSpectrum) -> int | None:
    """s with |values| in {0, 2^((n+s)/2)}, or None if not plateaued."""
    return _classify_distinct_abs(spectrum.distinct_abs, spectrum.n)


def walsh_transform(table) -> WalshSpectrum:
    """Transform a 0/1 table of length 2^n and classify its spectrum."""
    bits = np.asarray(table)
    w = fwht(1 - 2 * bits.astype(np.int64))
    n = w.shape[0].bit_length() - 1
    _check_parseval(w[None, :], n)
    distinct = tuple(int(v) for v in np.unique(np.abs(w)))
    return WalshSpectrum(w, distinct, _classify_distinct_abs(distinct, n))


def _check_parseval(w_rows: np.ndarray, n: int) -> None:
    """Every transform row must satisfy sum W^2 = 2^(2n)."""
    sums = np.einsum("ij,ij->i", w_rows, w_rows)
    if not np.all(sums == np.int64(1) << (2 * n)):
        raise AssertionError("Parseval check failed: transform is corrupt")


def walsh_transform_direct(table, pairing="bitwise", field: Field | None = None) -> np.ndarray:
    """Defining-sum Walsh transform, O(4^n); the slow reference path.

    pairing="bitwise" uses popcount(x & u) mod 2; pairing="trace" pairs the
    two m-bit coordinates with trace(x_i * u_i) and needs ``field``.
    """
    bits = np.asarray(table, dtype=np.int64)
    n = bits.shape[0].bit_length() - 1
    idx = np.arange(1 << n)
    if pairing == "bitwise":
        par = _bit_parity(idx[:, None] & idx[None, :])
    elif pairing == "trace":
        if field is None or 2 * field.m != n:
            raise ValueError("trace pairing needs the matching field")
        masks = field.trace_masks
        q = field.order
        lo = idx & (q - 1)
        hi = idx >> field.m
        p = field.parity_table
        par = (p[lo[:, None] & masks[lo][None, :]]
               ^ p[hi[:, None] & masks[hi][None, :]]).astype(np.int64)
    else:
        raise ValueError(f"unknown pairing {pairing!r}")
    signs = 1 - 2 * ((bits[None, :] + par) & 1)
    return signs.sum(axis=1, dtype=np.int64)


def trace_pairing_permutation(field: Field) -> np.ndarray:
    """Index substitution u -> d(u) with trace-paired W[u] = bitwise W[d(u)].

    d applies the trace Gram map per m-bit coordinate, an invertible
    GF(2)-linear substitution determined by the basis.
    """
    masks = field.trace_masks
    idx = np.arange(1 << (2 * field.m))
    lo = idx & (field.order - 1)
    hi = idx >> field.m
    return masks[lo] | (masks[hi] << field.m)


def _bit_parity(v: np.ndarray) -> np.ndarray:
    v = v.astype(np.int64)
    for shift in (32, 16, 8, 4, 2, 1):
        v ^= v >> shift
    return v & 1


# ----------------------------------------------------------------------
# component functions
# ----------------------------------------------------------------------

def component_truth_table(fn: VectorialFunction, selector) -> np.ndarray:
    """0/1 table of trace(lam*F1) + trace(mu*F2) at every input."""
    lam, mu = selector
    f = fn.field
    f.check(lam)
    f.check(mu)
    if lam == 0 and mu == 0:
        raise ParameterError("component selector must be nonzero")
    masks = f.trace_masks
    par = f.parity_table
    return par[fn.f1() & masks[lam]] ^ par[fn.f2() & masks[mu]]


def _component_bit_chunks(fn: VectorialFunction, chunk: int = _COMPONENT_CHUNK):
    """Yield (selectors, bits) for all 2^(2m)-1 nonzero selectors in order.

    Selectors are packed as lam | mu << m and enumerated ascending from 1.
    """
    f = fn.field
    q = f.order
    masks = f.trace_masks
    par = f.parity_table
    f1 = fn.f1()
    f2 = fn.f2()
    total = q * q
    for start in range(1, total, chunk):
        cs = np.arange(start, min(start + chunk, total))
        lam = masks[cs & (q - 1)]
        mu = masks[cs >> f.m]
        bits = par[f1[None, :] & lam[:, None]] ^ par[f2[None, :] & mu[:, None]]
        yield cs, bits


def component_spectrum_summary(fn: VectorialFunction):
    """Per-component (plateau level, max |W|) over all nonzero selectors.

    Returns (levels, peaks): int64 arrays of length 2^(2m)-1 in selector
    order; level -1 marks a component that is not plateaued.
    """
    n = fn.n
    count = (1 << n) - 1
    levels = np.empty(count, dtype=np.int64)
    peaks = np.empty(count, dtype=np.int64)
    for cs, bits in _component_bit_chunks(fn):
        w = fwht(1 - 2 * bits.astype(np.int64))
        _check_parseval(w, n)
        absw = np.abs(w)
        mx = absw.max(axis=1)
        flat = ((absw == 0) | (absw == mx[:, None])).all(axis=1)
        power2 = (mx > 0) & ((mx & (mx - 1)) == 0)
        log2 = np.rint(np.log2(np.maximum(mx, 1))).astype(np.int64)
        lev = np.where(flat & power2, 2 * log2 - n, -1)
        levels[cs - 1] = lev
        peaks[cs - 1] = mx
    return levels, peaks


@dataclass(frozen=True)
class SpectrumReport:
    """Aggregate of all component spectra of one vectorial function."""

    m: int
    counts: dict  # plateau level -> number of components
    non_plateaued: int
    bent_count: int
    semibent_count: int
    nonlinearity: int
    classical: bool


def spectrum_report(fn: VectorialFunction) -> SpectrumReport:
    """Classify every component; also the nonlinearity and classical flag.

    classical means: levels within {0, 2} and exactly 2(2^n - 1)/3 bent
    components, the spectrum every known quadratic APN family in even
    dimension exhibits.
    """
    n = fn.n
    levels, peaks = component_spectrum_summary(fn)
    counts: dict[int, int] = {}
    for lev in sorted(set(int(v) for v in levels if v >= 0)):
        counts[lev] = int(np.count_nonzero(levels == lev))
    non_plateaued = int(np.count_nonzero(levels < 0))
    bent = counts.get(0, 0)
    semibent = counts.get(1, 0) + counts.get(2, 0)
    nl = (1 << (n - 1)) - int(peaks.max()) // 2
    classical = (non_plateaued == 0
                 and set(counts) <= {0, 2}
                 and bent == 2 * ((1 << n) - 1) // 3)
    return SpectrumReport(fn.m, counts, non_plateaued, bent, semibent, nl,
                          classical)


# ----------------------------------------------------------------------
# differential spectrum
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class DifferentialSpectrum:
    """Distribution of derivative solution counts over (a != 0, b)."""

    uniformity: int
    histogram: dict  # solution count -> frequency

    @property
    def is_apn(self) -> bool:
        return self.uniformity == 2


def differential_spectrum(fn: VectorialFunction) -> DifferentialSpectrum:
    """Histogram |{x : F(x+a) + F(x) = b}| over all a != 0 and all b."""
    tab = fn.table
    n_total = tab.shape[0]
    idx = np.arange(n_total)
    hist = np.zeros(n_total + 1, dtype=np.int64)
    uniformity = 0
    for a in range(1, n_total):
        row = np.bincount(tab[idx ^ a] ^ tab, minlength=n_total)
        hist += np.bincount(row, minlength=n_total + 1)
        uniformity = max(uniformity, int(row.max()))
    histogram = {int(k): int(v) for k, v in enumerate(hist) if v}
    return DifferentialSpectrum(uniformity, histogram)


# ----------------------------------------------------------------------
# linear structures (brute force over all directions)
# ----------------------------------------------------------------------

def linear_structures(table) -> list[int]:
    """Directions u (packed) whose derivative of the 0/1 table is constant.

    Plain quadratic-time scan; this is the independent oracle for plateau
    levels, so it deliberately uses nothing but the definition.
    """
    bits = np.asarray(table, dtype=np.uint8)
    n_total = bits.shape[0]
    idx = np.arange(n_total)
    out = []
    for u in range(n_total):
        d = bits[idx ^ u] ^ bits
        if np.all(d == d[0]):
            out.append(u)
    return out


def linear_space_dimensions(fn: VectorialFunction) -> np.ndarray:
    """Brute-force linear-space dimension of every component.

    Scans all 2^n directions for all 2^n - 1 components at once with the
    component bits packed 64 per machine word.  Each component's constant
    directions form a subspace, so the dimension is log2 of their count;
    the count is verified to be a power of two.
    """
    n_total = 1 << fn.n
    count = n_total - 1
    words = (count + 63) // 64
    packed = np.zeros((n_total, words), dtype=np.uint64)
    for cs, bits in _component_bit_chunks(fn, chunk=64):
        word = int(cs[0] - 1) >> 6
        shifts = ((cs - 1) & 63).astype(np.uint64)
        packed[:, word] = np.bitwise_or.reduce(
            bits.T.astype(np.uint64) << shifts[None, :], axis=1)
    idx = np.arange(n_total)
    const_counts = np.zeros(count, dtype=np.int64)
    for u in range(n_total):
        diff = packed[idx ^ u] ^ packed
        nonconst = np.bitwise_or.reduce(diff ^ diff[0], axis=0)
        const_bits = np.unpackbits(
            (~nonconst).view(np.uint8), bitorder="little")[:count]
        const_counts += const_bits
    if np.any(const_counts & (const_counts - 1)):
        raise AssertionError("linear structures did not form a subspace")
    dims = np.zeros(count, dtype=np.int64)
    cc = const_counts.copy()
    while np.any(cc > 1):
        step = cc > 1
        dims[step] += 1
        cc[step] >>= 1
    return dims
