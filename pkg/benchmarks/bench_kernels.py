"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Kernel rows call both backends directly; the train-step row runs one
sam-variant gradient step in a subprocess per backend, because the backend
is chosen once at import.
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from d3qnsam import _kernels_py

try:
    from d3qnsam import _kernels
except ImportError:
    _kernels = None

TRAIN_STEP = """
import timeit, numpy as np
from d3qnsam import kernels
from d3qnsam.autodiff import Adam
from d3qnsam.nn import NetworkConfig, QNetwork
from d3qnsam.train import td_loss
net = QNetwork.create(NetworkConfig(variant="sam"), 0)
rng = np.random.default_rng(0)
x = rng.random((32, 5, 32, 32)).astype(np.float32)
a = rng.integers(4, size=32)
y = rng.normal(size=32)
opt = Adam(net.parameters())
def step():
    g, loss = td_loss(net, x, a, y)
    opt.zero_grad(); g.backward(loss); opt.step()
step()
print(kernels.BACKEND, min(timeit.repeat(step, number=1, repeat={repeat})))
"""


def kernel_cases(rng):
    x = rng.random((32, 5, 34, 34)).astype(np.float32)
    cols = _kernels_py.im2col(x, 4, 2)
    circles = np.column_stack([rng.uniform(2, 28, (6, 2)), rng.uniform(0.3, 0.8, 6)])
    rects = np.array([[5.0, 9.8, 13.0, 10.2], [19.8, 5.0, 20.2, 13.0], [17.0, 19.8, 25.0, 20.2]])
    heads = np.linspace(-np.pi, np.pi, 32)
    bounds = np.array([0.0, 0.0, 30.0, 30.0])
    return {
        "im2col (32x5x34x34)": lambda k: k.im2col(x, 4, 2),
        "col2im (32x5x34x34)": lambda k: k.col2im(cols, 32, 5, 34, 34, 4, 2),
        "ray_distances (32 rays)": lambda k: k.ray_distances(15.0, 15.0, heads, circles, rects, bounds),
    }


def best(fn, repeat):
    number = max(1, int(0.05 / max(timeit.timeit(fn, number=1), 1e-7)))
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def train_step(pure: bool, repeat: int) -> float:
    env = dict(os.environ)
    if pure:
        env["D3QNSAM_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", TRAIN_STEP.format(repeat=repeat)], env=env,
                         capture_output=True, text=True, check=True).stdout.split()
    return float(out[1])


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _kernels is None:
        sys.exit("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")

    print(f"{'case':28s} {'cython':>12s} {'python':>12s} {'speedup':>8s}")
    for name, call in kernel_cases(np.random.default_rng(0)).items():
        c = best(lambda: call(_kernels), args.repeat)
        p = best(lambda: call(_kernels_py), args.repeat)
        print(f"{name:28s} {c * 1e6:10.1f}us {p * 1e6:10.1f}us {p / c:7.1f}x")
    c, p = train_step(False, args.repeat), train_step(True, args.repeat)
    print(f"{'sam train step (batch 32)':28s} {c * 1e3:10.1f}ms {p * 1e3:10.1f}ms {p / c:7.1f}x")


if __name__ == "__main__":
    main()
