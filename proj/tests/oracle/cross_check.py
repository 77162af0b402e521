#!/usr/bin/env python3
"""Independent sympy recomputation of curvature data, compared with the CLI."""
import itertools
import json
import subprocess
import sys

import sympy as sp
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

x, y, z = sp.symbols("x y z")
GENS = (x, y, z)
TRANSFORMS = standard_transformations + (convert_xor,)


def parse(text):
    return parse_expr(text, local_dict={"x": x, "y": y, "z": z, "i": sp.I}, transformations=TRANSFORMS)


def reduce(e, f):
    e = sp.expand(e)
    if e == 0:
        return sp.Integer(0)
    return sp.expand(sp.reduced(e, [f], *GENS, order="grevlex")[1])


def der(images, e):
    return sp.expand(sum(sp.diff(e, v) * g for v, g in zip(GENS, images)))


def der_m(images, m):
    return m.applyfunc(lambda e: der(images, e))


def run(cli, *args):
    out = subprocess.run([cli, *args], capture_output=True, text=True)
    return out.returncode, out.stdout


def ellipsoid(p, q, r):
    P, Q, R = map(sp.Integer, (p, q, r))
    f = x**p + y**q + z**r - 1
    df = sp.Matrix([P * x ** (p - 1), Q * y ** (q - 1), R * z ** (r - 1)])
    w = sp.Matrix([x / P, y / Q, z / R])
    m = sp.eye(3) - df * w.T
    fx, fy, fz = df
    ders = [[fy, -fx, 0], [fz, 0, -fx], [0, fz, -fy]]
    return f, m, m, ders


def sphere(p, q, r):
    f = x ** (2 * p) + y ** (2 * q) + z ** (2 * r) - 1
    pm = sp.Matrix([[x**p, y**q + sp.I * z**r], [y**q - sp.I * z**r, -x**p]])
    m = (pm + sp.eye(2)) / 2
    fx, fy, fz = (sp.diff(f, v) for v in GENS)
    half = sp.Rational(1, 2)
    ders = [[half * fy, -half * fx, 0], [half * fz, 0, -half * fx], [0, -half * fz, half * fy]]
    # reported module is L = im(I - M)
    return f, m, sp.eye(2) - m, ders


def compare(cli, example, triple, build, failures):
    f, m, phi, ders = build(*triple)
    code, out = run(cli, "verify", example, "--p", str(triple[0]), "--q", str(triple[1]), "--r", str(triple[2]), "--json")
    if code != 0:
        failures.append(f"{example}{triple}: exit {code}")
        return
    report = json.loads(out)
    n = m.shape[0]
    dm = [der_m(d, m) for d in ders]
    for entry, (i, j) in zip(report["curvature"], itertools.combinations(range(3), 2)):
        c = dm[i] * dm[j] - dm[j] * dm[i]
        got = sp.Matrix([[parse(t) for t in row] for row in entry["commutator"]])
        for a, b in itertools.product(range(n), repeat=2):
            if reduce(c[a, b] - got[a, b], f) != 0:
                failures.append(f"{example}{triple} pair {entry['pair']}: commutator entry ({a},{b})")
        ti = reduce((phi * c * phi).trace(), f)
        tk = reduce(((sp.eye(n) - phi) * c * (sp.eye(n) - phi)).trace(), f)
        if reduce(ti - parse(entry["trace_image"]), f) != 0:
            failures.append(f"{example}{triple} pair {entry['pair']}: trace_image {entry['trace_image']} vs {ti}")
        if reduce(tk - parse(entry["trace_kernel"]), f) != 0:
            failures.append(f"{example}{triple} pair {entry['pair']}: trace_kernel {entry['trace_kernel']} vs {tk}")
        flat = reduce_matrix_zero(phi * c * phi, f)
        if flat != entry["flat"]:
            failures.append(f"{example}{triple} pair {entry['pair']}: flat flag")


def reduce_matrix_zero(m, f):
    return all(reduce(e, f) == 0 for e in m)


def check_eval(cli, failures):
    cases = [
        ("x^3*y + z^5", "x^2 + y^2 + z^2 - 1"),
        ("(x + i*y)^4", "x^2 + y^2 + z^2 - 1"),
        ("x^4*y^3 - 1/3*z", "x^3 + y^2 + z^2 - 1"),
        ("x*y*z^6", "x^2 + y^4 + z^3 - 1"),
    ]
    for expr, mod in cases:
        code, out = run(cli, "eval", expr, "--mod", mod)
        if code != 0:
            failures.append(f"eval {expr!r}: exit {code}")
            continue
        want = reduce(parse(expr), parse(mod))
        if sp.expand(parse(out.strip()) - want) != 0:
            failures.append(f"eval {expr!r} mod {mod!r}: {out.strip()} vs {want}")


def main():
    if len(sys.argv) != 2:
        print("usage: cross_check.py <projconn>", file=sys.stderr)
        return 2
    cli = sys.argv[1]
    failures = []
    for triple in [(2, 2, 2), (2, 3, 4), (4, 2, 3), (3, 3, 2)]:
        compare(cli, "ellipsoid", triple, ellipsoid, failures)
    for triple in [(1, 1, 1), (1, 2, 1), (2, 1, 2)]:
        compare(cli, "sphere", triple, sphere, failures)
    check_eval(cli, failures)
    for line in failures:
        print("FAIL", line)
    print(f"{len(failures)} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
