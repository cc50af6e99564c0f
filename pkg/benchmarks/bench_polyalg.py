"""Timings of the truncated-polynomial kernels and one full normal-form run.

Usage: ``python3 benchmarks/bench_polyalg.py [--repeat N]``.
"""
import argparse
import timeit
from fractions import Fraction

import numpy as np

from gaudin_hopf import normal_form as nf
from gaudin_hopf import polyalg as pa
from gaudin_hopf.model import ModelParams


def _random_poly(rng, exact):
    terms = {tuple(e): (Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 9))) if exact else rng.normal())
             for e in pa.EXPONENTS[: pa.n_monomials(pa.MAX_DEGREE)]}
    return pa.TruncatedPolynomial.from_dict(terms, pa.MAX_DEGREE, exact)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(0)
    f, g = _random_poly(rng, False), _random_poly(rng, False)
    fe, ge = _random_poly(rng, True), _random_poly(rng, True)
    fig6 = ModelParams(R1=1, R2=2, w=0, t0=Fraction(-1, 2), t3=Fraction(1, 2))
    p_float = nf.at_threshold(fig6).as_float()
    p_exact = nf.at_threshold(ModelParams(R1=1, R2=1, w=1, t1=Fraction(-1, 2), t3=Fraction(-1, 2)))
    cases = [
        ("product, degree 8, float", lambda: f * g, 200),
        ("bracket, degree 8, float", lambda: pa.poisson_bracket(f, g), 100),
        ("product, degree 8, exact", lambda: fe * ge, 2),
        ("normal form, float", lambda: nf.normalize(p_float), 5),
        ("normal form, rational", lambda: nf.normalize(p_exact), 1),
    ]
    for name, fn, number in cases:
        best = min(timeit.repeat(fn, number=number, repeat=args.repeat)) / number
        print(f"{name:28s} {best * 1e3:10.3f} ms")


if __name__ == "__main__":
    main()
