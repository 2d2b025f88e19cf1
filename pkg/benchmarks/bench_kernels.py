"""Compare the pure-Python and compiled kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Two workloads: raw extreme-ray enumeration on random point clouds, and
the full Newton-pair computation on a batch of random germs.
"""

import argparse
import random
import time

from merozeta import _backend, _exact
from merozeta.engine import zeta_newton_pair
from merozeta.newton import NewtonPair


def _clouds(seed, count, dim, points):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        pts = {tuple(rng.randint(0, 12) for _ in range(dim)) for _ in range(points)}
        out.append([(1,) + p for p in pts])
    return out


def _pairs(seed, count, dim, points):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        supp = [[tuple(rng.randint(0, 9) for _ in range(dim)) for _ in range(points)] for _ in range(2)]
        supp = [[p for p in s if any(p)] or [(1,) * dim] for s in supp]
        out.append(NewtonPair.of(*supp))
    return out


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = _backend.available()
    if "cython" not in backends:
        print("compiled kernel not built; only the pure-Python backend is available")
    clouds = _clouds(1, 20, 5, 60)
    pairs = _pairs(2, 6, 5, 8)

    results = {}
    for name in backends:
        _backend.select(name)
        rays = _backend.cone_extreme_rays
        t_rays = _best(lambda: [rays(rows, 6) for rows in clouds], args.repeat)
        t_pair = _best(lambda: [zeta_newton_pair(p) for p in pairs], args.repeat)
        results[name] = (t_rays, t_pair, [zeta_newton_pair(p) for p in pairs])
    _backend.select(backends[-1])

    print(f"{'backend':<8} {'extreme rays':>14} {'newton pair':>14}")
    for name, (t_rays, t_pair, _) in results.items():
        print(f"{name:<8} {t_rays:>13.3f}s {t_pair:>13.3f}s")
    if len(results) == 2:
        (r0, p0, z0), (r1, p1, z1) = results["python"], results["cython"]
        print(f"{'speedup':<8} {r0 / r1:>13.2f}x {p0 / p1:>13.2f}x")
        same = z0 == z1 and all(
            sorted(_exact.cone_extreme_rays(c, 6)) == sorted(_backend.cone_extreme_rays(c, 6)) for c in clouds
        )
        print("results identical" if same else "RESULTS DIFFER")


if __name__ == "__main__":
    main()
