"""Compare the compiled and pure-Python fixed-point kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Both backends run on the same weights; results must agree exactly.
"""
import argparse
import time

from tcw import kernels, ring
from tcw.constructions import asymp_fan, blowups, cpn, sigma_a
from tcw.symfun import partitions


def workloads():
    yield "CP^4", cpn(4)
    yield "Sigma(3) + 12 blow-ups", blowups(sigma_a(3), 12)
    yield "asymp g=(1,9,4)", asymp_fan(1, -1, 9, 4)
    yield "CP^6", cpn(6)


def bench(fan, backend, repeat):
    weights = ring.fixed_point_weights(fan)
    parts = partitions(fan.dim)
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        values = kernels.chern_sums(weights, parts, backend)
        best = min(best, time.perf_counter() - t)
    return values, best


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    names = kernels.available_backends()
    print(f"backends: {', '.join(names)}")
    for label, fan in workloads():
        row = [f"{label:<26} cones={len(fan.max_cones):<4}"]
        results = {}
        for name in names:
            values, secs = bench(fan, name, args.repeat)
            results[name] = values
            row.append(f"{name}={secs * 1e3:8.2f} ms")
        if len(results) == 2:
            a, b = results.values()
            if a != b:
                raise SystemExit(f"backends disagree on {label}")
            t = [float(s.split("=")[1].split()[0]) for s in row[1:]]
            row.append(f"speedup x{t[1] / t[0]:.1f}")
        print("  ".join(row))


if __name__ == "__main__":
    main()
