"""One-parameter contractions of polynomial Poisson bivectors.

A contraction is driven by a nonnegative integer weight per coordinate.  The
family of automorphisms scales x_i by t^{w_i}; pulling the bivector back
gives, for a monomial M in the coefficient at the pair (i, j), the t-power

    w_i + w_j - (weighted degree of M).

The contraction is valid when no negative power survives, and the limit is
the t^0 part.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .exterior import MultiVector, TMultiVector, bracket_with_coordinate
from .lie import LieAlgebra, lie_poisson_bivector
from .polyring import Polynomial, t_expand, t_substitute


@dataclass(frozen=True)
class ContractionWeights:
    """Nonnegative integer weight per basis vector."""

    weights: tuple

    def __post_init__(self):
        if any(w < 0 or w != int(w) for w in self.weights):
            raise ValueError("weights must be nonnegative integers")
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    @property
    def total(self) -> int:
        """Degree in t of the determinant of the scaling map."""
        return sum(self.weights)


@dataclass
class ContractionResult:
    pi_t: TMultiVector
    valid: bool
    weights: ContractionWeights
    original: MultiVector
    pi_tilde: Optional[MultiVector] = None
    offending: Optional[tuple] = None        # (index pair, most negative t-power)
    contracted: Optional[LieAlgebra] = None  # read off pi_tilde when linear


def contract(pi: MultiVector, w: ContractionWeights, labels=None) -> ContractionResult:
    """Pull the bivector back along the weight scaling and take the t -> 0 limit."""
    if pi.degree != 2:
        raise ValueError("contract expects a bivector")
    if len(w) != pi.n:
        raise ValueError(f"weight length {len(w)} != ring dimension {pi.n}")
    neg = [-wi for wi in w]
    tterms = {}
    for (i, j), p in pi.terms.items():
        tterms[(i, j)] = t_substitute(p, neg).shift(w[i] + w[j])
    pi_t = TMultiVector(pi.n, 2, tterms)
    if not pi_t.regular:
        return ContractionResult(pi_t=pi_t, valid=False, weights=w, original=pi,
                                 offending=pi_t.offending())
    tilde = pi_t.coefficient_of_power(0)
    contracted = None
    if all(p.degree() <= 1 for p in pi.terms.values()):
        use_labels = list(labels) if labels is not None else [f"x{i}" for i in range(pi.n)]
        brackets = {}
        for (i, j), p in tilde.terms.items():
            row = {}
            for mono, c in p.terms.items():
                if len(mono) != 1 or mono[0][1] != 1:
                    raise ValueError("limit of a linear bivector must stay linear")
                row[mono[0][0]] = c
            brackets[(i, j)] = row
        contracted = LieAlgebra(use_labels, brackets)
    return ContractionResult(pi_t=pi_t, valid=True, weights=w, original=pi,
                             pi_tilde=tilde, contracted=contracted)


def contract_algebra(L: LieAlgebra, w: ContractionWeights) -> ContractionResult:
    """Contraction of a Lie algebra through its Lie-Poisson bivector."""
    return contract(lie_poisson_bivector(L), w, labels=L.labels)


def t_degree(h: Polynomial, w: ContractionWeights):
    """(degree in t, highest component) of h under the weight scaling x -> t^w x."""
    if h.is_zero:
        raise ValueError("t-degree of the zero polynomial is undefined")
    if len(w) != h.n:
        raise ValueError("weight length must match ring dimension")
    return t_expand(h, list(w)).top()


def highest_component_central(h: Polynomial, result: ContractionResult) -> bool:
    """Check the limit-centrality of the highest component of a central element."""
    pi = result.original
    for j in range(pi.n):
        if not bracket_with_coordinate(pi, j, h).is_zero:
            raise ValueError(f"input is not central for the original bivector "
                             f"(bracket with coordinate {j} is nonzero)")
    if not result.valid:
        raise ValueError("contraction is not valid")
    _, top = t_degree(h, result.weights)
    tilde = result.pi_tilde
    return all(bracket_with_coordinate(tilde, j, top).is_zero for j in range(pi.n))
