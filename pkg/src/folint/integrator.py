"""Search for rational first integrals.

``algorithm1`` covers a prescribed genus (any number of dicritical
divisors, given enough invariant curves).  ``algorithm2`` and
``algorithm3`` decide the case of a single dicritical divisor;
``decide_dic1`` chains them after the resolution.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence, Tuple

from .candidates import SolutionSet, build_VS, compute_RFS, iter_Gamma
from .config import Configuration, DivisorClass, canonical_class, intersect
from .errors import GenusOne, WrongDicriticalCount
from .linsys import VirtualConditions, global_sections, kernel, strict_multiplicities
from .poly import Poly, monomials_of_degree
from .polyform import ProjectiveOneForm, is_first_integral, is_invariant
from .resolution import DEFAULT_DEPTH_LIMIT, resolve_dicritical

__all__ = [
    "FirstIntegral",
    "CandidatePair",
    "algorithm1",
    "algorithm2",
    "algorithm3",
    "decide_dic1",
    "genus_of_pencil",
    "same_span",
    "gamma_multiplier",
    "general_member_multiplicities",
]


@dataclass(frozen=True)
class FirstIntegral:
    F: Poly
    G: Poly
    degree: int
    genus: Optional[int] = None

    def certify(self, omega: ProjectiveOneForm) -> bool:
        return is_first_integral(omega, self.F, self.G)


@dataclass(frozen=True)
class CandidatePair:
    """Candidate fibre class ``T`` and candidate components ``A`` of the
    non-reduced fibres, each as (equation, class)."""

    T: DivisorClass
    A: Tuple[Tuple[Poly, DivisorClass], ...] = ()

    @property
    def s0(self) -> int:
        return int(self.T.c[0])


def same_span(pair1: Sequence[Poly], pair2: Sequence[Poly]) -> bool:
    """Do the two lists of forms span the same vector space?"""
    polys = list(pair1) + list(pair2)
    degs = {p.degree for p in polys if not p.is_zero()}
    if len(degs) > 1:
        return False
    d = degs.pop() if degs else 0
    exps = monomials_of_degree(d, 3)

    def rank(ps):
        rows = [[p.coeff(e) for e in exps] for p in ps]
        return len(exps) - len(kernel(rows, len(exps)))

    r1, r2 = rank(pair1), rank(pair2)
    return r1 == r2 == rank(polys)


def _pencil(omega, cfg, T: DivisorClass, k: int) -> Optional[Tuple[Poly, Poly]]:
    """Sections of ``k T`` when they form a pencil passing the certificate."""
    d = int(T.c[0]) * k
    mult = tuple(int(-v) * k for v in T.c[1:])
    basis = global_sections(VirtualConditions(cfg, d, mult)).basis
    if len(basis) != 2:
        return None
    F, G = basis
    if not is_first_integral(omega, F, G):
        return None
    return F, G


def _genus_or_none(F, G, cfg):
    if not cfg.has_coordinates():
        return None
    return genus_of_pencil(F, G, cfg)


def algorithm1(omega: ProjectiveOneForm, g: int, cfg: Configuration,
               S: SolutionSet = SolutionSet()) -> Optional[FirstIntegral]:
    """First integral of genus ``g`` or ``None`` (none exists)."""
    if g == 1:
        raise GenusOne("genus one first integrals are not covered")
    if g < 0:
        raise ValueError("genus must be non-negative")
    if cfg.dic <= 2:
        S = SolutionSet()
    R = compute_RFS(cfg, build_VS(cfg, omega.degree, S))
    for T in R:
        d = T.c[0]
        m = T.multiplicities
        if any(v < 0 for v in m):
            continue
        den = -3 * d + sum(m)
        if den == 0:
            continue
        alpha = Fraction(2 * (g - 1), den)
        if alpha <= 0 or alpha.denominator != 1:
            continue
        found = _pencil(omega, cfg, T, int(alpha))
        if found is not None:
            F, G = found
            return FirstIntegral(F, G, F.degree, _genus_or_none(F, G, cfg))
    return None


def _unique_curve(cfg: Configuration, C: DivisorClass) -> Poly:
    basis = global_sections(VirtualConditions(cfg, int(C.c[0]), tuple(int(-v) for v in C.c[1:]))).basis
    return basis[0].primitive()


def algorithm2(omega: ProjectiveOneForm, cfg: Configuration) -> Optional[CandidatePair]:
    """Candidate pair ``(T, A)``, or ``None`` when no first integral exists."""
    if cfg.dic != 1:
        raise WrongDicriticalCount(f"expected one dicritical divisor, found {cfg.dic}")
    r = omega.degree
    R = compute_RFS(cfg, build_VS(cfg, r))
    if not R:
        return None
    T = R[0]
    if any(v < 0 for v in T.multiplicities):
        return None
    C = None
    for x in range(1, r + 2):
        for cls in iter_Gamma(cfg, x, T):
            H = _unique_curve(cfg, cls)
            if is_invariant(omega, H):
                C = (H, cls)
                break
        if C is not None:
            break
    if C is None:
        return CandidatePair(T, ())
    x = int(C[1].c[0])
    if 2 * x > r + 2:
        return CandidatePair(T, (C,))
    for cls in iter_Gamma(cfg, r + 2 - x, T):
        H = _unique_curve(cfg, cls)
        if is_invariant(omega, H) and not C[0].divides(H):
            return CandidatePair(T, (C, (H, cls)))
    return CandidatePair(T, (C,))


def gamma_multiplier(r: int, pair: CandidatePair) -> Fraction:
    s0 = pair.s0
    degs = [a[0].degree for a in pair.A]
    if not degs:
        return Fraction(r + 2, 2 * s0)
    if len(degs) == 1:
        return Fraction(r + 2 - degs[0], s0)
    return Fraction(lcm(degs[0], degs[1]), s0)


def algorithm3(omega: ProjectiveOneForm, cfg: Configuration, pair: CandidatePair) -> Optional[FirstIntegral]:
    gamma = gamma_multiplier(omega.degree, pair)
    # T is primitive, so gamma T is a divisor exactly when gamma is an integer
    if gamma <= 0 or gamma.denominator != 1:
        return None
    found = _pencil(omega, cfg, pair.T, int(gamma))
    if found is None:
        return None
    F, G = found
    return FirstIntegral(F, G, F.degree, _genus_or_none(F, G, cfg))


def _pencil_of_lines(omega, cfg) -> Optional[FirstIntegral]:
    basis = global_sections(VirtualConditions(cfg, 1, (1,))).basis
    F, G = basis
    if not is_first_integral(omega, F, G):
        return None
    return FirstIntegral(F, G, 1, 0)


def decide_dic1(omega: ProjectiveOneForm, cfg: Optional[Configuration] = None,
                depth_limit: int = DEFAULT_DEPTH_LIMIT) -> Optional[FirstIntegral]:
    """First integral, or ``None`` as a proof that none exists."""
    if cfg is None:
        cfg = resolve_dicritical(omega, depth_limit)
    if cfg.dic != 1:
        raise WrongDicriticalCount(f"expected one dicritical divisor, found {cfg.dic}")
    if cfg.n == 1:
        return _pencil_of_lines(omega, cfg)
    pair = algorithm2(omega, cfg)
    if pair is None:
        return None
    return algorithm3(omega, cfg, pair)


def general_member_multiplicities(F: Poly, G: Poly, cfg: Configuration, trials: int = 3,
                                  seed: int = 0) -> Tuple[int, ...]:
    """Multiplicities of the strict transform of a general ``lambda F + mu G``."""
    rng = random.Random(seed)
    best = None
    for _ in range(trials):
        lam = Fraction(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6))
        m = strict_multiplicities(F.scale(lam) + G, cfg)
        best = m if best is None else tuple(min(a, b) for a, b in zip(best, m))
    return best


def genus_of_pencil(F: Poly, G: Poly, cfg: Configuration) -> int:
    """Genus of a general member, by adjunction on its strict transform."""
    d = F.degree
    D = DivisorClass.from_degree(d, general_member_multiplicities(F, G, cfg))
    twice = intersect(D, D) + intersect(canonical_class(cfg), D)
    return int(1 + Fraction(twice, 2))
