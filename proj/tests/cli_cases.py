#!/usr/bin/env python3
"""Exit-code contract for the conefix CLI.

0: property holds / solver converged / degree reliable
1: violation, divergence, or unreliable result
2: usage or spec errors
"""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1]
failures = []


def write(tmp, name, doc):
    p = Path(tmp) / name
    p.write_text(json.dumps(doc))
    return str(p)


def run(args, want_code):
    r = subprocess.run([BIN] + args, capture_output=True, text=True)
    if r.returncode != want_code:
        failures.append(f"{' '.join(args)}: expected exit {want_code}, got {r.returncode}\n"
                        f"stdout: {r.stdout[:400]}\nstderr: {r.stderr[:400]}")
    return r


with tempfile.TemporaryDirectory() as tmp:
    example3 = write(tmp, "example3.json", {"type": "builtin", "name": "example3"})
    zigzag = write(tmp, "zigzag.json", {"type": "builtin", "name": "zigzag"})
    piecewise = write(tmp, "piecewise.json",
                      {"type": "builtin", "name": "piecewise_contraction"})
    interval = write(tmp, "interval.json", {"type": "interval", "a": 0.0, "b": 1.0})
    bad_map = write(tmp, "bad_map.json", {"type": "polynomial", "degree": 3})

    # 0: passing property, converging solves, reliable degree
    run(["check", "--map", example3, "--property", "monotone", "--samples", "2000"], 0)
    run(["solve", "--map", piecewise, "--contraction", "--c", "0.5", "--x0", "1",
         "--tol", "1e-10"], 0)
    run(["degree", "--map", example3, "--region", interval], 0)
    run(["locate", "--map", example3, "--region", interval], 0)
    run(["feasible", "--map", piecewise, "--samples", "500"], 0)
    run(["theorem", "--map", example3, "--name", "thm6",
         "--points", '{"x_prime": 0.3, "x_second": 0.6}', "--samples", "2000",
         "--low", "0", "--high", "2.5"], 0)
    run(["demo", "example3"], 0)

    # 1: violated property / failed hypotheses
    run(["check", "--map", zigzag, "--property", "monotone", "--samples", "5000",
         "--low", "0,0", "--high", "5,5"], 1)
    run(["theorem", "--map", example3, "--name", "thm6",
         "--points", '{"x_prime": 0.5, "x_second": 0.9}', "--samples", "2000",
         "--low", "0", "--high", "2.5"], 1)

    # 2: usage and spec errors
    run([], 2)
    run(["check", "--map", example3], 2)                       # missing --property
    run(["check", "--map", bad_map, "--property", "monotone"], 2)
    run(["check", "--map", example3, "--property", "frobnicate"], 2)
    run(["degree", "--map", example3, "--region", "/nonexistent.json"], 2)
    run(["theorem", "--map", example3, "--name", "thm42", "--points", "{}"], 2)
    run(["demo", "unknown_demo"], 2)

    # determinism: identical seeds give byte-identical reports
    a = run(["check", "--map", zigzag, "--property", "monotone", "--samples", "3000",
             "--low", "0,0", "--high", "5,5", "--seed", "7"], 1)
    b = run(["check", "--map", zigzag, "--property", "monotone", "--samples", "3000",
             "--low", "0,0", "--high", "5,5", "--seed", "7"], 1)
    if a.stdout != b.stdout:
        failures.append("same-seed runs differ")

if failures:
    print("\n".join(failures))
    sys.exit(1)
print("cli exit code contract: all cases pass")
