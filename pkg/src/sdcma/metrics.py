"""Error counting, closed-form references and HD-FEC crossings."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import LengthMismatch, NoCrossing

HD_FEC_THRESHOLD = 3.8e-3
MIN_ERROR_EVENTS = 100


@dataclass(frozen=True)
class BERRecord:
    scheme: str
    group_id: int
    sweep_value: float
    snr_db: float
    bits_total: int
    bits_error: int

    @property
    def ber(self) -> float:
        return self.bits_error / self.bits_total

    @property
    def low_confidence(self) -> bool:
        """Fewer than MIN_ERROR_EVENTS errors behind a non-zero estimate."""
        return self.bits_error < MIN_ERROR_EVENTS

    def merged(self, other: "BERRecord") -> "BERRecord":
        if (self.scheme, self.group_id, self.sweep_value) != (
            other.scheme,
            other.group_id,
            other.sweep_value,
        ):
            raise LengthMismatch("can only merge records of the same key")
        return BERRecord(
            self.scheme,
            self.group_id,
            self.sweep_value,
            self.snr_db,
            self.bits_total + other.bits_total,
            self.bits_error + other.bits_error,
        )


def count_ber(tx_bits, rx_bits) -> tuple[int, int, float]:
    """(bits_total, bits_error, ber) from two equal-length bit streams."""
    a = np.asarray(tx_bits).ravel()
    b = np.asarray(rx_bits).ravel()
    if a.size != b.size or a.size == 0:
        raise LengthMismatch(f"bit streams of length {a.size} and {b.size}")
    errors = int(np.count_nonzero(a != b))
    return a.size, errors, errors / a.size


def q_function(x: float) -> float:
    return 0.5 * math.erfc(x / math.sqrt(2.0))


def qpsk_awgn_ber(ebn0_db: float) -> float:
    """Gray QPSK bit error rate on AWGN: Q(sqrt(2 Eb/N0))."""
    if ebn0_db == -math.inf:
        return 0.5
    return q_function(math.sqrt(2.0 * 10.0 ** (ebn0_db / 10.0)))


def binomial_sigma(p: float, n: int) -> float:
    return math.sqrt(p * (1.0 - p) / n)


def hd_fec_crossing(
    sweep: Sequence[float],
    ber: Sequence[float],
    threshold: float = HD_FEC_THRESHOLD,
    bits: Sequence[int] | None = None,
) -> float:
    """First sweep value where the BER reaches ``threshold``.

    Between the last point above and the first point at or below the threshold
    the crossing is interpolated linearly in (sweep, log10 BER). A zero BER is
    floored at half an error (needs ``bits``) or at threshold/10 otherwise.
    Raises NoCrossing when no point reaches the threshold.
    """
    x = np.asarray(sweep, dtype=float)
    y = np.asarray(ber, dtype=float)
    if x.size != y.size or x.size == 0:
        raise LengthMismatch("sweep and ber must be non-empty and equal length")
    below = np.nonzero(y <= threshold)[0]
    if below.size == 0:
        raise NoCrossing(f"BER never reaches {threshold:g} over [{x[0]:g}, {x[-1]:g}]")
    k = int(below[0])
    if k == 0:
        return float(x[0])
    y_lo = y[k]
    if y_lo <= 0:
        y_lo = 0.5 / bits[k] if bits is not None else threshold / 10.0
    l0, l1, lt = math.log10(y[k - 1]), math.log10(y_lo), math.log10(threshold)
    t = (lt - l0) / (l1 - l0)
    return float(x[k - 1] + t * (x[k] - x[k - 1]))


def crossing_of(records: Sequence[BERRecord], threshold: float = HD_FEC_THRESHOLD) -> float:
    rs = sorted(records, key=lambda r: r.sweep_value)
    return hd_fec_crossing(
        [r.sweep_value for r in rs], [r.ber for r in rs], threshold, [r.bits_total for r in rs]
    )
