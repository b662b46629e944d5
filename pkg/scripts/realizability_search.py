"""Search for algebras realizing the small non gr-simple patterns.

For each basis shape (degrees and parities) every structure constant allowed
by the grading becomes a symbol; the super Jacobi identity gives polynomial
equations that sympy solves exactly. Each solution family is then sampled at
random rational points and the samples are run through the classifier.

Usage: python scripts/realizability_search.py [--samples N] [--seed S]
                                             [--limit SECONDS] [--only TEXT]

Needs sympy (``pip install -e .[search]``). A full run takes several minutes;
shapes the solver cannot finish within the limit are reported as such.
"""
import argparse
import itertools
import random
import signal
from fractions import Fraction

import sympy

from grsuper.algebra import GradedSuperalgebra
from grsuper.decomposition import Kind, classify_small, split_component
from grsuper.errors import HypothesesNotMet, VerificationFailure
from grsuper.groups import GroupSpec
from grsuper.ideals import Verdict, hypothesis_report, is_gr_simple


def slots(group, basis):
    out = []
    for i, j in itertools.combinations_with_replacement(range(len(basis)), 2):
        (_, di, pi), (_, dj, pj) = basis[i], basis[j]
        if i == j and pi == 0:
            continue
        deg = group.multiply(group.element(di), group.element(dj))
        for k, (_, dk, pk) in enumerate(basis):
            if group.element(dk) == deg and pk == (pi + pj) % 2:
                out.append((i, j, k))
    return out


def jacobi_equations(group, basis, syms):
    n = len(basis)
    par = [p for _, _, p in basis]
    full = {}
    for (i, j, k), s in syms.items():
        full.setdefault((i, j), {})[k] = full.get((i, j), {}).get(k, 0) + s
        if i != j:
            sign = -(-1) ** (par[i] * par[j])
            full.setdefault((j, i), {})[k] = full.get((j, i), {}).get(k, 0) + sign * s

    def br(x, y):
        out = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for k, c in full.get((a, b), {}).items():
                    out[k] = out.get(k, 0) + ca * cb * c
        return out

    eqs = set()
    for x, y, z in itertools.product(range(n), repeat=3):
        lhs = br({x: 1}, br({y: 1}, {z: 1}))
        r1 = br(br({x: 1}, {y: 1}), {z: 1})
        r2 = br({y: 1}, br({x: 1}, {z: 1}))
        s = (-1) ** (par[x] * par[y])
        for k in set(lhs) | set(r1) | set(r2):
            e = sympy.expand(lhs.get(k, 0) - r1.get(k, 0) - s * r2.get(k, 0))
            if e != 0:
                eqs.add(e)
    return list(eqs)


def families(group, basis, pins=None):
    """Symbols per slot and the solution families of the Jacobi system.

    ``pins`` maps a pair ``(i, j)`` to the basis index its bracket equals;
    every slot of that pair is then fixed to 0 or 1 before solving.
    """
    sl = slots(group, basis)
    syms = {t: sympy.Symbol(f"c_{t[0]}_{t[1]}_{t[2]}") for t in sl}
    fixed = {}
    for (i, j), target in (pins or {}).items():
        for t, s in syms.items():
            if t[:2] == (i, j):
                fixed[s] = sympy.Integer(1 if t[2] == target else 0)
    eqs = [e for e in (sympy.expand(e.subs(fixed)) for e in jacobi_equations(group, basis, syms)) if e != 0]
    free = [s for s in syms.values() if s not in fixed]
    if any(e.is_number for e in eqs):
        return syms, []
    sols = sympy.solve(eqs, free, dict=True) if eqs else [{}]
    return syms, [{**fixed, **sol} for sol in sols]


def sample(group, basis, syms, sol, rng):
    free = {s: sympy.Rational(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2]))
            for s in syms.values() if s not in sol}
    table = {}
    for (i, j, k), s in syms.items():
        v = sympy.nsimplify(sympy.sympify(sol.get(s, s)).subs(free))
        if not v.is_Rational:
            return None
        if v != 0:
            table.setdefault((i, j), {})[k] = Fraction(int(v.p), int(v.q))
    return GradedSuperalgebra(group, basis, table)


class _Timeout(Exception):
    pass


def _alarm(signum, frame):
    raise _Timeout


def explore(label, group, basis, samples, rng, want, limit=60, only=None, pins=None):
    if only and only not in label:
        return {}
    signal.signal(signal.SIGALRM, _alarm)
    signal.alarm(limit)
    try:
        syms, sols = families(group, basis, pins)
    except _Timeout:
        print(f"{label}: solver gave up after {limit}s")
        return {}
    finally:
        signal.alarm(0)
    found = {}
    for sol in sols:
        for _ in range(samples):
            alg = sample(group, basis, syms, sol, rng)
            if alg is None or not alg.is_valid:
                continue
            try:
                verdict = want(alg)
            except (HypothesesNotMet, VerificationFailure):
                continue
            if verdict is not None and verdict not in found:
                found[verdict] = alg
    print(f"{label}: {len(syms)} constants, {len(sols)} solution families, found {sorted(found) or 'nothing'}")
    return found


def small_case(alg):
    v = classify_small(alg)
    return None if v.kind is Kind.GR_SIMPLE else (v.kind.value, v.n)


def gr_simple_no_identity(alg):
    rep = hypothesis_report(alg)
    r = is_gr_simple(alg, rep)
    return "gr-simple" if r.verdict is Verdict.SIMPLE else None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=25)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--limit", type=int, default=60, help="seconds per shape for the solver")
    ap.add_argument("--only", help="run only shapes whose label contains this text")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    results = {}

    z2 = GroupSpec(0, (2,))
    for one in ([("b", [0], 0)], [("a", [0], 1)], [("b", [0], 0), ("a", [0], 1)]):
        basis = [("x0", [1], 0), ("x1", [1], 1)] + one
        results.update(explore(f"case 2, L_1 parities {[p for *_, p in one]}", z2, basis,
                               args.samples, rng, small_case, args.limit, args.only))

    for grp in (GroupSpec(1), GroupSpec(0, (3,))):
        g, h = ([1], [-1]) if grp.free_rank else ([1], [2])
        for p in (0, 1):
            basis = [("x", g, p), ("y", h, p), ("z", [0], 0)]
            results.update(explore(f"case 3 over {grp}, parity {p}", grp, basis,
                                   args.samples, rng, small_case, args.limit, args.only))

    for grp in (GroupSpec(1), GroupSpec(0, (3,))):
        g, h = ([1], [-1]) if grp.free_rank else ([1], [2])
        for ne, no in itertools.product(range(3), repeat=2):
            one = [(f"k{i}", [0], 0) for i in range(ne)] + [(f"o{i}", [0], 1) for i in range(no)]
            basis = [("x0", g, 0), ("x1", g, 1), ("y0", h, 0), ("y1", h, 1)] + one
            results.update(explore(f"case 4 over {grp}, L_1 = {ne} even + {no} odd", grp, basis,
                                   args.samples, rng, small_case, args.limit, args.only))

    # larger case 4 shapes: take the opposite brackets themselves as the
    # basis of L_1, which pins most constants (x0, x1, y0, y1 = 0, 1, 2, 3)
    for grp in (GroupSpec(1), GroupSpec(0, (3,))):
        g, h = ([1], [-1]) if grp.free_rank else ([1], [2])
        head = [("x0", g, 0), ("x1", g, 1), ("y0", h, 0), ("y1", h, 1)]
        variants = {
            "2 even + 2 odd": ([("k0", [0], 0), ("k1", [0], 0), ("o0", [0], 1), ("o1", [0], 1)],
                               [{(0, 2): 4, (1, 3): 5, (0, 3): 6, (1, 2): 7}]),
            "2 even + 1 odd": ([("k0", [0], 0), ("k1", [0], 0), ("o0", [0], 1)],
                               [{(0, 2): 4, (1, 3): 5, (0, 3): 6}, {(0, 2): 4, (1, 3): 5, (1, 2): 6}]),
            "1 even + 2 odd": ([("k0", [0], 0), ("o0", [0], 1), ("o1", [0], 1)],
                               [{(0, 2): 4, (0, 3): 5, (1, 2): 6}, {(1, 3): 4, (0, 3): 5, (1, 2): 6}]),
        }
        for what, (one, pin_sets) in variants.items():
            for v, pins in enumerate(pin_sets):
                results.update(explore(f"case 4 pinned over {grp}, L_1 = {what}, variant {v}", grp,
                                       head + one, args.samples, rng, small_case, args.limit,
                                       args.only, pins))

    # gr-simple pieces of a split need trivial identity component and no
    # inverse pairs in their support
    for m, support in ((5, [1, 2]), (7, [1, 2, 4]), (7, [3, 5, 6]), (8, [1, 2, 5])):
        grp = GroupSpec(0, (m,))
        for parities in itertools.product((0, 1), repeat=len(support)):
            basis = [(f"v{d}", [d], p) for d, p in zip(support, parities)]
            explore(f"split piece over Z/{m}, support {support}, parities {parities}", grp, basis,
                    args.samples, rng, gr_simple_no_identity, args.limit, args.only)

    print("\nrealized small cases:")
    for key, alg in sorted(results.items()):
        print(" ", key, {k: {b: str(c) for b, c in v.items()} for k, v in alg.table.items()},
              [b.name for b in alg.basis])


if __name__ == "__main__":
    main()
