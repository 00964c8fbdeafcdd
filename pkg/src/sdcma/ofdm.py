"""Multi-carrier synthesis and analysis.

Global dimension ``2n-1`` is the in-phase and ``2n`` the quadrature component
of carrier ``n``; carrier ``n`` occupies FFT bin ``n`` (bin 0 is never used).
The inverse transform carries the 1/N factor, the forward transform does not.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigMismatch, LengthMismatch


@dataclass(frozen=True)
class OfdmConfig:
    carriers: int = 256
    fft_size: int = 512
    cp_fraction: float = 0.125
    hermitian: bool = False

    def __post_init__(self):
        if self.carriers < 1:
            raise ConfigMismatch("need at least one carrier")
        if self.cp_fraction < 0:
            raise ConfigMismatch("cp_fraction must be >= 0")
        # bin 0 is reserved, so N0 carriers need bins 1..N0
        need = 2 * self.carriers + 2 if self.hermitian else self.carriers + 1
        if self.fft_size < need:
            mode = "hermitian" if self.hermitian else "complex"
            raise ConfigMismatch(
                f"{mode} mode with {self.carriers} carriers needs fft_size >= {need}"
            )

    @property
    def cp_length(self) -> int:
        return int(round(self.cp_fraction * self.fft_size))

    @property
    def symbol_length(self) -> int:
        return self.fft_size + self.cp_length

    @property
    def dimensions(self) -> int:
        return 2 * self.carriers


def frame_to_subcarriers(frame) -> np.ndarray:
    f = np.asarray(frame, dtype=float)
    if f.shape[-1] % 2:
        raise LengthMismatch(f"frame length {f.shape[-1]} is odd")
    return f[..., 0::2] + 1j * f[..., 1::2]


def subcarriers_to_frame(X) -> np.ndarray:
    X = np.asarray(X)
    out = np.empty(X.shape[:-1] + (2 * X.shape[-1],))
    out[..., 0::2] = X.real
    out[..., 1::2] = X.imag
    return out


def _spectrum(X: np.ndarray, cfg: OfdmConfig) -> np.ndarray:
    spec = np.zeros(X.shape[:-1] + (cfg.fft_size,), dtype=complex)
    spec[..., 1 : cfg.carriers + 1] = X
    if cfg.hermitian:
        spec[..., cfg.fft_size - cfg.carriers :] = np.conj(X[..., ::-1])
    return spec


def modulate(X, cfg: OfdmConfig) -> np.ndarray:
    """Subcarrier vectors (..., N0) -> time-domain symbols with CP (..., fft_size + cp).

    In hermitian mode the output is real.
    """
    X = np.asarray(X)
    if X.shape[-1] != cfg.carriers:
        raise ConfigMismatch(f"got {X.shape[-1]} subcarriers, config has {cfg.carriers}")
    body = np.fft.ifft(_spectrum(X, cfg), axis=-1)
    if cfg.hermitian:
        body = body.real
    cp = cfg.cp_length
    if cp == 0:
        return body
    return np.concatenate([body[..., -cp:], body], axis=-1)


def demodulate(samples, cfg: OfdmConfig) -> np.ndarray:
    """Drop the CP, apply the unscaled forward FFT, return bins 1..N0."""
    y = np.asarray(samples)
    if y.shape[-1] != cfg.symbol_length:
        raise LengthMismatch(f"symbol has {y.shape[-1]} samples, expected {cfg.symbol_length}")
    body = y[..., cfg.cp_length :]
    return np.fft.fft(body, axis=-1)[..., 1 : cfg.carriers + 1]


def carrier_basis(cfg: OfdmConfig) -> np.ndarray:
    """Unit-energy waveform (no CP) of every signal dimension, shape (2*N0, fft_size)."""
    eye = np.eye(cfg.dimensions)
    waves = modulate(frame_to_subcarriers(eye), OfdmConfig(cfg.carriers, cfg.fft_size, 0.0, cfg.hermitian))
    return waves / np.sqrt(np.sum(np.abs(waves) ** 2, axis=1, keepdims=True))


def carrier_gram(cfg: OfdmConfig) -> np.ndarray:
    """Real inner products between all dimension waveforms.

    For complex baseband waveforms the real part of the Hermitian product is the
    inner product of the corresponding passband signals.
    """
    B = carrier_basis(cfg)
    return np.real(B @ B.conj().T)


def carrier_orthogonality_check(cfg: OfdmConfig) -> float:
    """Largest absolute inner product between two distinct dimension waveforms."""
    G = carrier_gram(cfg)
    np.fill_diagonal(G, 0.0)
    return float(np.max(np.abs(G)))
