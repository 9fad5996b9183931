"""Compare the numba voxel kernels with their pure-numpy fallbacks.

    python benchmarks/bench_kernels.py [--shape 40 160 160] [--repeat 5]

Run with GASNET_DISABLE_NUMBA=1 to confirm the fallback is what the package
uses when numba is switched off (the numba column then reads "disabled").
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from gasnet import _kernels as K


def best_of(fn, repeat):
    fn()  # warm-up (includes JIT compilation for numba)
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--shape", type=int, nargs=3, default=[40, 160, 160])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    shape = tuple(args.shape)
    rng = np.random.default_rng(0)
    vol = rng.uniform(-1, 1, size=tuple(int(s * 1.3) for s in shape))
    lab = (rng.uniform(size=vol.shape) > 0.9).astype(np.uint8)
    pred = (rng.uniform(size=shape) > 0.5).astype(np.uint8)
    gt = (rng.uniform(size=shape) > 0.9).astype(np.uint8)
    small = vol[: shape[0], : shape[1], : shape[2]].copy()

    cases = {
        "resize_linear": lambda nb: K.resize_linear(vol, shape, use_numba=nb),
        "resize_nearest": lambda nb: K.resize_nearest(lab, shape, use_numba=nb),
        "rotate_slices": lambda nb: K.rotate_slices(small, 0.15, 1, use_numba=nb),
        "confusion": lambda nb: K.confusion(pred, gt, use_numba=nb),
    }
    print(f"shape {shape}, best of {args.repeat}")
    print(f"{'kernel':<16}{'numpy [ms]':>12}{'numba [ms]':>12}{'speedup':>9}")
    for name, fn in cases.items():
        t_np = best_of(lambda: fn(False), args.repeat)
        if K.HAVE_NUMBA:
            np.testing.assert_allclose(fn(True), fn(False), atol=1e-12)
            t_nb = best_of(lambda: fn(True), args.repeat)
            print(f"{name:<16}{1e3 * t_np:>12.2f}{1e3 * t_nb:>12.2f}{t_np / t_nb:>8.1f}x")
        else:
            print(f"{name:<16}{1e3 * t_np:>12.2f}{'disabled':>12}{'':>9}")


if __name__ == "__main__":
    main()
