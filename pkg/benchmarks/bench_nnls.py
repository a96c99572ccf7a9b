"""Benchmark the NNLS kernel backends on a realistic frame batch.

Builds the analysis front end's actual input: a synthesized chord sequence
pushed through the STFT and the semitone mapping, then times the compiled
kernel against the numpy fallback on identical data.

    python benchmarks/bench_nnls.py [--seconds-per-chord 2.0] [--repeat 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from tonnetzlab import kernels
from tonnetzlab.chroma import build_note_dictionary, stft, synth
from tonnetzlab.chroma.spectral import log_freq_map
from tonnetzlab.harmony import parse_chord_symbol

CHORDS = ["A", "E7", "A", "f#", "A7", "D", "d", "A"]


def make_frames(seconds_each: float) -> np.ndarray:
    symbols = [parse_chord_symbol(t) for t in CHORDS]
    buffer = synth.chord_sequence(symbols, seconds_each, noise_snr_db=30.0, seed=7)
    return log_freq_map(stft(buffer))


def time_backend(fn, gram, targets, sq_norms, bound, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(gram, targets, sq_norms, bound)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seconds-per-chord", type=float, default=2.0)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    frames = make_frames(args.seconds_per_chord)
    dictionary = build_note_dictionary()
    gram = np.ascontiguousarray(dictionary.gram())
    targets = np.ascontiguousarray(frames @ dictionary.profiles)
    sq_norms = np.ascontiguousarray(np.sum(frames * frames, axis=1))
    bound = dictionary.step_bound()

    print(f"frames: {frames.shape[0]}   notes: {frames.shape[1]}")
    print(f"selected backend: {kernels.BACKEND}")

    py_time = time_backend(
        kernels.nnls_batch_python, gram, targets, sq_norms, bound, args.repeat
    )
    print(f"python fallback : {py_time * 1000:8.1f} ms")

    if kernels.BACKEND == "cython":
        cy_time = time_backend(
            kernels.nnls_batch, gram, targets, sq_norms, bound, args.repeat
        )
        print(f"cython kernel   : {cy_time * 1000:8.1f} ms")
        print(f"speedup         : {py_time / cy_time:8.2f}x")
        fast = kernels.nnls_batch(gram, targets, sq_norms, bound)
        slow = kernels.nnls_batch_python(gram, targets, sq_norms, bound)
        print(f"max |difference|: {np.max(np.abs(fast - slow)):.3e}")
    else:
        print("cython kernel   : not built (pip install -e . with Cython present)")


if __name__ == "__main__":
    main()
