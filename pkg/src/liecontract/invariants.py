"""Symmetric-invariant generators and the degree-reduction machinery.

Generators for the classical algebras come from the characteristic
polynomial of the generic matrix written against the trace-dual basis, so
that each coefficient is an honest central element of the Lie-Poisson
structure.  The set is rescaled once so the generators satisfy the
regularity equality  dF_1 ^ ... ^ dF_l / omega = wedge^{(n-l)/2} pi  on the
nose; later triangular modifications leave that equality untouched.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .contract import ContractionWeights, t_degree
from .exterior import (bracket_with_coordinate, differential, pfaffian,
                       volume_dual, wedge, wedge_power)
from .lie import LieAlgebra, lie_poisson_bivector
from .linalg import poly_det_cofactor, rational_inverse, solve_exact
from .polyring import Polynomial, poly_compose

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass
class GeneratorSet:
    """Homogeneous central generators in ascending degree, jointly normalized."""

    algebra: LieAlgebra
    gens: list
    normalization: Fraction

    @property
    def degrees(self):
        return [g.degree() for g in self.gens]

    def __len__(self):
        return len(self.gens)


def centrality_check(h: Polynomial, L: LieAlgebra) -> bool:
    """True when {x_j, h} vanishes for every basis coordinate."""
    pi = lie_poisson_bivector(L)
    return all(bracket_with_coordinate(pi, j, h).is_zero for j in range(L.n))


def semi_invariant_weight(h: Polynomial, L: LieAlgebra):
    """Per-basis eigenvalues when {x_j, h} is a rational multiple of h for all j.

    Returns the list of eigenvalues, or None when h is not a semi-invariant.
    """
    if h.is_zero:
        raise ValueError("the zero polynomial is not a semi-invariant")
    pi = lie_poisson_bivector(L)
    hm, hc = h.leading()
    out = []
    for j in range(L.n):
        br = bracket_with_coordinate(pi, j, h)
        if br.is_zero:
            out.append(_ZERO)
            continue
        lam = br.terms.get(hm)
        if lam is None:
            return None
        lam = lam / hc
        if br != h * lam:
            return None
        out.append(lam)
    return out


def _trace_dual_generic_matrix(L: LieAlgebra):
    """X = sum_j x_j M_j^dual with tr(M_i^dual M_j) = delta_ij."""
    if L.matrices is None:
        raise ValueError("algebra has no matrix realization")
    mats = L.matrices
    n = L.n
    m = len(mats[0])
    T = [[sum((mats[i][r][s] * mats[j][s][r] for r in range(m) for s in range(m)),
              _ZERO) for j in range(n)] for i in range(n)]
    Tinv = rational_inverse(T)
    X = [[Polynomial.zero(n) for _ in range(m)] for _ in range(m)]
    for j in range(n):
        # dual of M_j is sum_i Tinv[i][j] M_i
        entry = {}
        for i in range(n):
            c = Tinv[i][j]
            if c:
                entry[i] = c
        var = Polynomial.variable(n, j)
        for i, c in entry.items():
            Mi = mats[i]
            for r in range(m):
                for s in range(m):
                    if Mi[r][s]:
                        X[r][s] = X[r][s] + var * (c * Mi[r][s])
    return X


def _principal_minor_sum(X, d: int) -> Polynomial:
    m = len(X)
    n = X[0][0].n
    total = Polynomial.zero(n)
    for rows in itertools.combinations(range(m), d):
        sub = [[X[r][c] for c in rows] for r in rows]
        total = total + poly_det_cofactor(sub)
    return total


def _antidiag_flip(X):
    """S @ X for S the anti-diagonal identity; turns the so realization skew."""
    m = len(X)
    return [X[m - 1 - i] for i in range(m)]


def char_invariants(L: LieAlgebra) -> GeneratorSet:
    """Generators of the Poisson centre for a built-in sl/so/sp algebra."""
    if L._invariants is not None:
        cached = L._invariants
        return GeneratorSet(algebra=L, gens=list(cached.gens),
                            normalization=cached.normalization)
    if L.family is None:
        raise ValueError("char_invariants needs a classical family tag")
    kind, size = L.family
    X = _trace_dual_generic_matrix(L)
    gens = []
    if kind == "sl":
        for d in range(2, size + 1):
            gens.append(_principal_minor_sum(X, d))
    elif kind == "sp":
        for d in range(1, size // 2 + 1):
            gens.append(_principal_minor_sum(X, 2 * d))
    elif kind == "so":
        ell = size // 2
        if size % 2:
            for d in range(1, ell + 1):
                gens.append(_principal_minor_sum(X, 2 * d))
        else:
            for d in range(1, ell):
                gens.append(_principal_minor_sum(X, 2 * d))
            gens.append(pfaffian(_antidiag_flip(X)))
    else:
        raise ValueError(f"unsupported family {kind!r}")
    gens.sort(key=lambda g: g.degree())
    scale = _normalize_to_regularity(L, gens)
    L._invariants = GeneratorSet(algebra=L, gens=list(gens), normalization=scale)
    return GeneratorSet(algebra=L, gens=gens, normalization=scale)


def _normalize_to_regularity(L: LieAlgebra, gens) -> Fraction:
    """Rescale the first generator so dF_1^...^dF_l / omega equals the wedge power."""
    pi = lie_poisson_bivector(L)
    n = L.n
    ell = len(gens)
    if (n - ell) % 2:
        raise ValueError("generator count does not match a skew rank")
    forms = differential(gens[0])
    for g in gens[1:]:
        forms = wedge(forms, differential(g))
    A = volume_dual(forms)
    B = wedge_power(pi, (n - ell) // 2)
    if A.is_zero or B.is_zero:
        raise ValueError("degenerate generator set")
    idx = next(iter(sorted(B.terms)))
    pb = B.terms[idx]
    pa = A.terms.get(idx)
    if pa is None:
        raise ValueError("generator differentials are not proportional to the wedge power")
    bm, bc = pb.leading()
    ac = pa.terms.get(bm)
    if ac is None:
        raise ValueError("generator differentials are not proportional to the wedge power")
    scale = bc / ac
    if A.scale(scale) != B:
        raise ValueError("generator normalization failed: sides are not proportional")
    gens[0] = gens[0] * scale
    return scale


def membership_linear(h: Polynomial, gens: Sequence[Polynomial],
                      profile: Optional[tuple] = None):
    """Write h as a polynomial in the given homogeneous generators.

    The candidate monomials in the generators are those whose composed total
    degree matches deg h; when profile = (aux degrees, target) is given, the
    composed auxiliary degree must match as well.  Returns the combination as
    a Polynomial in len(gens) variables, or None when no combination exists.
    """
    if h.is_zero:
        raise ValueError("membership of the zero polynomial is trivial")

    def homogeneous(p):
        degset = {sum(e for _, e in m) for m in p.terms}
        return len(degset) == 1

    if not homogeneous(h) or any(not homogeneous(g) for g in gens):
        raise ValueError("membership needs homogeneous input and generators")
    degs = [g.degree() for g in gens]
    if any(d <= 0 for d in degs):
        raise ValueError("generators must be nonconstant")
    target = h.degree()
    exposants = []

    def enumerate_exps(i, remaining, current):
        if i == len(degs):
            if remaining == 0:
                exposants.append(tuple(current))
            return
        step = degs[i]
        for e in range(remaining // step + 1):
            enumerate_exps(i + 1, remaining - e * step, current + [e])

    enumerate_exps(0, target, [])
    if profile is not None:
        aux, aux_target = profile
        exposants = [e for e in exposants
                     if sum(a * x for a, x in zip(aux, e)) == aux_target]
    if not exposants:
        return None
    products = []
    for e in exposants:
        prod = Polynomial.const(h.n, 1)
        for g, x in zip(gens, e):
            if x:
                prod = prod * g ** x
        products.append(prod)
    monomials = set(h.terms)
    for prod in products:
        monomials.update(prod.terms)
    monomials = sorted(monomials)
    columns = [[prod.terms.get(m, _ZERO) for m in monomials] for prod in products]
    targetv = [h.terms.get(m, _ZERO) for m in monomials]
    sol = solve_exact(columns, targetv)
    if sol is None:
        return None
    return Polynomial(len(gens), {tuple((i, x) for i, x in enumerate(e) if x): c
                                  for e, c in zip(exposants, sol)})


def t_degree_reduction(gens: GeneratorSet, w: ContractionWeights) -> GeneratorSet:
    """Lower the t-degrees by subtracting polynomial combinations of the others.

    A generator is replaced by itself minus P(other generators) whenever its
    highest component equals P evaluated on the others' highest components
    with a matching degree and t-degree budget.  Each substitution is
    triangular and invertible, so the new set generates the same centre; the
    total t-degree strictly drops, so the loop terminates.
    """
    current = list(gens.gens)
    order = sorted(range(len(current)), key=lambda i: current[i].degree())
    changed = True
    while changed:
        changed = False
        for j in order:
            fj = current[j]
            dj, topj = t_degree(fj, w)
            others = [i for i in order if i != j]
            if not others:
                continue
            other_polys = [current[i] for i in others]
            other_tops = []
            other_tdegs = []
            for i in others:
                di, ti = t_degree(current[i], w)
                other_tops.append(ti)
                other_tdegs.append(di)
            P = membership_linear(topj, other_tops, profile=(other_tdegs, dj))
            if P is None or P.is_zero:
                continue
            replacement = fj - poly_compose(P, other_polys)
            if replacement.is_zero:
                raise ValueError("reduction annihilated a generator; set is dependent")
            new_d, _ = t_degree(replacement, w)
            if new_d >= dj:
                raise AssertionError("reduction did not lower the t-degree")
            current[j] = replacement
            changed = True
    return GeneratorSet(algebra=gens.algebra, gens=current,
                        normalization=gens.normalization)
