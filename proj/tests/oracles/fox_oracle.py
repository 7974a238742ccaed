#!/usr/bin/env python3
"""Independent symbolic check of twisted Alexander polynomials.

Builds Fox derivatives by the product rule on raw letter lists, applies
rho (x) epsilon with sympy, takes the determinant quotient, and compares
(a) the trivial-representation results with the classical Alexander
polynomials, and (b) every result with the JSON printed by the CLI.
"""

import argparse
import json
import subprocess
import sys
from pathlib import Path

import sympy as sp
import tomli

t, z = sp.symbols("t z")

# Classical Alexander polynomials.
CLASSICAL = {
    "unknot": 1,
    "trefoil": t**2 - t + 1,
    "trefoil_wirtinger3": t**2 - t + 1,
    "figure_eight": t**2 - 3 * t + 1,
    "cinquefoil": t**4 - t**3 + t**2 - t + 1,
    "three_twist": 2 * t**2 - 3 * t + 2,
}

CASES = [
    ("unknot", "trivial"),
    ("trefoil", "trivial"),
    ("trefoil", "trivial2"),
    ("trefoil", "trefoil_s3"),
    ("trefoil", "trefoil_s3_twisted"),
    ("trefoil_wirtinger3", "trivial"),
    ("trefoil_wirtinger3", "trefoil3_s3"),
    ("figure_eight", "trivial"),
    ("figure_eight", "figure_eight_d5"),
    ("cinquefoil", "trivial"),
    ("cinquefoil", "cinquefoil_d5"),
    ("three_twist", "trivial"),
    ("three_twist", "three_twist_d7"),
]


def parse_word(text, gens):
    letters = []
    for tok in text.split():
        if tok == "1":
            continue
        name, _, power = tok.partition("^")
        k = int(power.strip("()")) if power else 1
        if name not in gens and name.lower() in gens and name != name.lower():
            name, k = name.lower(), -k
        if name not in gens:
            raise ValueError(f"unknown generator {name!r}")
        step = 1 if k > 0 else -1
        letters += [(gens.index(name), step)] * abs(k)
    return tuple(letters)


def fox(word, g):
    """d(word)/d x_g as {letter tuple: coefficient}, via d(uv) = du + u dv."""
    if not word:
        return {}
    if len(word) == 1:
        gen, e = word[0]
        if gen != g:
            return {}
        return {(): 1} if e == 1 else {word: -1}
    u, v = word[:1], word[1:]
    out = dict(fox(u, g))
    for w, c in fox(v, g).items():
        key = u + w
        out[key] = out.get(key, 0) + c
    return {w: c for w, c in out.items() if c}


def cyclotomic(n):
    return sp.cyclotomic_poly(n, z)


def reduce(expr, n):
    expr = sp.expand(expr)
    if n <= 2:
        return expr.subs(z, -1 if n == 2 else 1) if expr.has(z) else expr
    num, den = sp.fraction(sp.together(expr))
    # den is a monomial c t^a z^b; z^-b = z^((n-1) b)
    b = sp.degree(den, z) if den.has(z) else 0
    num = num * z ** ((n - 1) * b)
    den = sp.cancel(den / z**b)
    return sp.expand(sp.rem(sp.expand(num), cyclotomic(n), z) / den)


def load_rep(path, gens):
    data = tomli.loads(path.read_text())
    n = data.get("cyclotomic_order", 1)
    if data.get("trivial"):
        m = data["dimension"]
        return n, [sp.eye(m) for _ in gens]
    mats = []
    for g in gens:
        rows = data["matrices"][g]
        mats.append(sp.Matrix([[sp.sympify(str(x).replace("^", "**"), locals={"z": z}) for x in r] for r in rows]))
    return n, mats


def conj(expr, n):
    return reduce(expr.subs(z, z ** (n - 1)), n)


def inverse(m, n):
    inv = m.T.applyfunc(lambda e: conj(e, n))
    check = (m * inv).applyfunc(lambda e: reduce(e, n))
    if check != sp.eye(m.rows):
        raise ValueError("representation matrix is not unitary")
    return inv


def abelianization(gens, relators):
    # Integer kernel of the exponent-sum matrix, normalized to a primitive vector.
    rows = [[sum(e for g, e in r if g == i) for i in range(len(gens))] for r in relators]
    if not rows:
        return [1]
    kernel = sp.Matrix(rows).nullspace()
    if len(kernel) != 1:
        raise ValueError("first homology is not infinite cyclic")
    v = kernel[0]
    v = v * sp.ilcm(*[sp.fraction(x)[1] for x in v])
    v = v / sp.igcd(*[int(x) for x in v])
    if next(x for x in v if x != 0) < 0:
        v = -v
    return [int(x) for x in v]


def phi(element, mats, inv, eps, n, m):
    out = sp.zeros(m, m)
    for word, c in element.items():
        mat = sp.eye(m)
        power = 0
        for g, e in word:
            mat = mat * (mats[g] if e == 1 else inv[g])
            power += eps[g] * e
        out += c * mat * t**power
    return out.applyfunc(lambda e: reduce(e, n))


def twisted_alexander(pres, n, mats):
    gens = pres["generators"]
    relators = [parse_word(r, gens) for r in pres.get("relators", [])]
    eps = pres.get("augmentation")
    eps = [eps[g] for g in gens] if isinstance(eps, dict) else abelianization(gens, relators)
    m = mats[0].rows
    inv = [inverse(a, n) for a in mats]
    k = len(gens)
    for j in range(k):
        den = reduce(phi({((j, 1),): 1, (): -1}, mats, inv, eps, n, m).det(), n)
        if den == 0:
            continue
        blocks = [[phi(fox(r, i), mats, inv, eps, n, m) for r in relators] for i in range(k) if i != j]
        a = sp.Matrix(sp.BlockMatrix(blocks)) if blocks and relators else sp.eye(0)
        num = reduce(a.det(method="berkowitz"), n) if a.rows else sp.Integer(1)
        if num == 0:
            continue
        return num, den
    raise ValueError("no admissible column")


def poly_coeffs(expr, n):
    """Laurent polynomial in t -> (min_exp, [coefficients]) with reduced coefficients."""
    expr = reduce(expr, n)
    num, den = sp.fraction(sp.together(expr))
    shift = sp.degree(den, t) if den.has(t) else 0
    p = sp.Poly(sp.expand(num), t)
    coeffs = [reduce(c, n) for c in reversed(p.all_coeffs())]
    lo = 0
    while lo < len(coeffs) and coeffs[lo] == 0:
        lo += 1
    hi = len(coeffs)
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    return lo - shift, coeffs[lo:hi]


def mul(a, b, n):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return [reduce(c, n) for c in out]


def unit_equal(num1, den1, num2, den2, n):
    """num1/den1 == c t^k num2/den2 for some nonzero constant c."""
    p = mul(poly_coeffs(num1, n)[1], poly_coeffs(den2, n)[1], n)
    q = mul(poly_coeffs(num2, n)[1], poly_coeffs(den1, n)[1], n)
    if len(p) != len(q):
        return False
    lp, lq = p[-1], q[-1]
    return all(reduce(x * lq - y * lp, n) == 0 for x, y in zip(p, q))


def from_json_poly(j, n):
    coeffs = [sp.sympify(c.replace("^", "**"), locals={"z": z}) for c in j["coeffs"]]
    return sum(c * t ** (j["min_exp"] + i) for i, c in enumerate(coeffs))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--data", required=True)
    ap.add_argument("--cli", help="CLI executable to compare against")
    args = ap.parse_args()
    data = Path(args.data)
    failures = 0
    for knot, rep in CASES:
        pres = tomli.loads((data / "knots" / f"{knot}.toml").read_text())
        n, mats = load_rep(data / "reps" / f"{rep}.toml", pres["generators"])
        num, den = twisted_alexander(pres, n, mats)
        label = f"{knot} / {rep}"
        if rep == "trivial":
            ok = unit_equal(num, den, CLASSICAL[knot], t - 1, 1)
            print(f"{'ok  ' if ok else 'FAIL'} classical {label}: ({sp.factor(num)}) / ({sp.factor(den)})")
            failures += not ok
        if args.cli:
            cmd = [args.cli, "--json", "twisted-alexander", "-p", str(data / "knots" / f"{knot}.toml"),
                   "-r", str(data / "reps" / f"{rep}.toml")]
            res = subprocess.run(cmd, capture_output=True, text=True)
            if res.returncode != 0:
                print(f"FAIL cli {label}: exit {res.returncode}: {res.stderr.strip()}")
                failures += 1
                continue
            canon = json.loads(res.stdout)["delta"]["canonical"]
            cn = from_json_poly(canon["num"], n)
            cd = from_json_poly(canon["den"], n)
            ok = unit_equal(num, den, cn, cd, n)
            print(f"{'ok  ' if ok else 'FAIL'} cli {label}")
            failures += not ok
    print("all oracle checks pass" if failures == 0 else f"{failures} oracle checks FAILED")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
