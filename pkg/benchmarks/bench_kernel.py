"""Compiled vs pure-Python row reduction on the package's real workloads.

    python3 benchmarks/bench_kernel.py [--repeat 3] [--seed 0] [--json]

Cases: cocycle systems (d: C^2 -> C^3) and derivation systems of catalog
models, plus random integer matrices.  Each case checks that both backends
return the same echelon form before timing it.
"""

import argparse
import json
import random
import time

from nilgrad import kernel
from nilgrad.cohomology import ce_differential_2
from nilgrad.exactla import integer_row
from nilgrad.models import make


def _derivation_rows(g):
    # D[X_i, X_j] = [D X_i, X_j] + [X_i, D X_j]; unknowns D[r][c] at r * n + c
    n = g.dim
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for r in range(n):
                row = [0] * (n * n)
                for k, c in g.basis_bracket(i, j).items():
                    row[r * n + k] += c
                for k in range(n):
                    row[k * n + i] -= g.basis_bracket(k, j).get(r, 0)
                    row[k * n + j] -= g.basis_bracket(i, k).get(r, 0)
                if any(row):
                    rows.append(row)
    return rows


def cases(seed):
    out = []
    for mid in ("Q:m=5", "g21q:m=5,t=1,q=3", "g311:m=6"):
        g = make(mid)
        rows = ce_differential_2(g)
        out.append((f"cocycles {mid} ({len(rows)}x{len(rows[0])})", [integer_row(r) for r in rows], len(rows[0])))
    for mid in ("s:m=4", "g2:m=5,t=2"):
        g = make(mid)
        rows = _derivation_rows(g)
        out.append((f"derivations {mid} ({len(rows)}x{g.dim ** 2})", [integer_row(r) for r in rows], g.dim ** 2))
    rng = random.Random(seed)
    for r, c, p in ((60, 60, 0.05), (40, 40, 0.3)):
        rows = [[rng.randint(-3, 3) if rng.random() < p else 0 for _ in range(c)] for _ in range(r)]
        out.append((f"random {r}x{c}, density {p}", rows, c))
    return out


def overflows(rows, ncols):
    """True when the int64 kernel gives up and the Python path redoes the matrix."""
    if kernel._compiled is None:
        return False
    try:
        kernel._compiled.echelon(rows, ncols, True)
    except OverflowError:
        return True
    return False


def timed(rows, ncols, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        res = kernel.echelon(rows, ncols, True)
        best = min(best, time.perf_counter() - t)
    return best, res


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    backends = kernel.available_backends()
    prev = kernel.backend()
    report = []
    try:
        for name, rows, ncols in cases(args.seed):
            entry = {"case": name}
            results = {}
            for b in backends:
                kernel.set_backend(b)
                entry[b], results[b] = timed(rows, ncols, args.repeat)
            if len(set(map(repr, results.values()))) != 1:
                raise SystemExit(f"backends disagree on {name}")
            entry["int64_overflow"] = overflows(rows, ncols)
            if "cython" in entry:
                entry["speedup"] = entry["python"] / entry["cython"] if entry["cython"] else float("inf")
            report.append(entry)
    finally:
        kernel.set_backend(prev)

    if args.json:
        print(json.dumps(report, indent=2))
        return 0
    if "cython" not in backends:
        print("compiled kernel not built; timing the Python fallback only")
    print(f"{'case':52s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for e in report:
        cy = f"{e['cython'] * 1e3:8.2f}ms" if "cython" in e else "-"
        sp = f"{e['speedup']:7.1f}x" if "speedup" in e else "-"
        note = "  (int64 overflow: exact fallback)" if e["int64_overflow"] else ""
        print(f"{e['case']:52s} {e['python'] * 1e3:8.2f}ms {cy:>10s} {sp:>8s}{note}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
