"""Exhaustive Gamma(x): every tuple in [0, x]^n checked against (a)-(d)."""
from itertools import product

from folint.config import DivisorClass
from folint.linsys import VirtualConditions, projective_dimension


def brute_gamma(cfg, x, T=None):
    out = []
    prox = [cfg.proximates_of(p) for p in range(cfg.n)]
    for ys in product(range(x + 1), repeat=cfg.n):
        if any(ys[p] < sum(ys[q] for q in prox[p]) for p in range(cfg.n)):
            continue
        c2 = x * x - sum(y * y for y in ys)
        kc = -3 * x + sum(ys)
        if not ((c2 == -1 and kc == -1) or (c2 <= 0 and kc >= 0 and c2 + kc >= -2)):
            continue
        if T is not None and T.c[0] * x + sum(t * y for t, y in zip(T.c[1:], ys)) != 0:
            continue
        if projective_dimension(VirtualConditions(cfg, x, ys)) != 0:
            continue
        out.append(DivisorClass.from_degree(x, ys))
    return out
