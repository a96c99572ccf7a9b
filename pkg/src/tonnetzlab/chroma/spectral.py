"""STFT magnitudes, semitone log-frequency mapping, and PPM spectrogram export."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .wavio import AudioBuffer

LOW_NOTE = 24  # C1
HIGH_NOTE = 96  # C7
NOTE_COUNT = HIGH_NOTE - LOW_NOTE + 1


class TooShort(ValueError):
    """The buffer is shorter than one analysis window."""


def midi_frequency(note: float) -> float:
    """12-TET frequency with A4 = 440 Hz."""
    return 440.0 * 2.0 ** ((note - 69) / 12.0)


@dataclass(frozen=True)
class Spectrogram:
    """Non-negative magnitude frames, one row per frame."""

    frames: np.ndarray  # shape (n_frames, window_size // 2 + 1)
    frame_hop: int
    window_size: int
    sample_rate: int

    @property
    def frame_count(self) -> int:
        return self.frames.shape[0]

    def frame_boundaries(self, total_samples: int | None = None) -> np.ndarray:
        """Segment boundaries in seconds: frame i owns [b[i], b[i+1]).

        The last boundary extends to the end of the audio when
        ``total_samples`` is given, so segments tile the whole signal.
        """
        edges = np.arange(self.frame_count + 1, dtype=np.float64) * self.frame_hop
        if total_samples is not None:
            edges[-1] = max(edges[-1], float(total_samples))
        return edges / self.sample_rate


def stft(buffer: AudioBuffer, window_size: int = 4096, hop: int = 2048) -> Spectrogram:
    """Magnitude STFT with a Hann window.

    Frame count is floor((len - window) / hop) + 1; raises TooShort when the
    buffer does not cover one window.
    """
    samples = np.asarray(buffer.samples, dtype=np.float64)
    if len(samples) < window_size:
        raise TooShort(
            f"need at least {window_size} samples, got {len(samples)}"
        )
    count = (len(samples) - window_size) // hop + 1
    window = np.hanning(window_size)
    stacked = np.stack(
        [samples[i * hop : i * hop + window_size] * window for i in range(count)]
    )
    mags = np.abs(np.fft.rfft(stacked, axis=1))
    return Spectrogram(mags, hop, window_size, buffer.sample_rate)


def _semitone_weights(spec: Spectrogram) -> np.ndarray:
    """(notes x bins) triangular weights, half-width one semitone."""
    freqs = np.fft.rfftfreq(spec.window_size, 1.0 / spec.sample_rate)
    semis = np.full_like(freqs, -1e9)
    positive = freqs > 0
    semis[positive] = 69.0 + 12.0 * np.log2(freqs[positive] / 440.0)
    notes = np.arange(LOW_NOTE, HIGH_NOTE + 1, dtype=np.float64)
    tri = 1.0 - np.abs(semis[None, :] - notes[:, None])
    return np.maximum(tri, 0.0)


def log_freq_map(spec: Spectrogram) -> np.ndarray:
    """Fold FFT bins onto semitone bins for MIDI notes 24..96.

    Each note bin accumulates magnitudes under a triangular window centered
    at the note's 12-TET frequency. Returns (n_frames, 73).
    """
    if spec.sample_rate < 8000:
        raise ValueError("sample rate below 8 kHz cannot resolve the note range")
    return spec.frames @ _semitone_weights(spec).T


def render_spectrogram_ppm(spec: Spectrogram, gamma: float = 100.0) -> bytes:
    """Binary P6 PPM: one pixel column per frame, low frequencies at the bottom.

    Values are log-compressed: v -> 255 * log(1 + gamma*v) / log(1 + gamma*vmax).
    """
    mags = spec.frames
    vmax = float(mags.max()) if mags.size else 0.0
    if vmax > 0:
        gray = 255.0 * np.log1p(gamma * mags) / math.log1p(gamma * vmax)
    else:
        gray = np.zeros_like(mags)
    # frames run left to right, bins bottom to top
    image = np.flipud(np.round(gray).astype(np.uint8).T)
    height, width = image.shape
    rgb = np.repeat(image[:, :, None], 3, axis=2)
    header = f"P6\n{width} {height}\n255\n".encode("ascii")
    return header + rgb.tobytes()
