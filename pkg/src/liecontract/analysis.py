"""High-level verification: regularity equalities, degree laws, and the
consolidated suites for the Borel-split and symmetric-split contractions.

Reports are plain dataclasses whose payloads are JSON-safe; polynomial values
are rendered against the relevant basis labels at construction time so the
output is byte-deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .builders import SymmetricPair, borel_decomposition, symmetric_pair
from .contract import ContractionWeights, contract_algebra, t_degree
from .exterior import MultiVector, differential, volume_dual, wedge, wedge_power
from .invariants import GeneratorSet, char_invariants, t_degree_reduction
from .lie import LieAlgebra, algebra_index, lie_poisson_bivector, subalgebra_on_indices
from .linalg import poly_matrix_rank
from .polyring import (Polynomial, multivariate_gcd, poly_div_exact, poly_monic,
                       poly_rename, poly_to_str)

_ZERO = Fraction(0)


@dataclass
class ProportionalityCertificate:
    """Coprime q1, q2 with q1 * A = q2 * B, when the sides are proportional."""

    proportional: bool
    q1: Optional[Polynomial] = None
    q2: Optional[Polynomial] = None

    @property
    def constant_ratio(self) -> bool:
        return (self.proportional and self.q1 is not None and self.q1.is_constant
                and self.q2 is not None and self.q2.is_constant)

    def ratio(self) -> Fraction:
        """The constant a with A = a * B; only defined for constant certificates."""
        if not self.constant_ratio:
            raise ValueError("certificate does not have constant factors")
        return self.q2.constant_value() / self.q1.constant_value()


def proportionality(a: MultiVector, b: MultiVector) -> ProportionalityCertificate:
    """Decide q1 * a = q2 * b with coprime polynomial factors."""
    if a.is_zero or b.is_zero:
        raise ValueError("proportionality needs two nonzero multivectors")
    if a.n != b.n or a.degree != b.degree:
        raise ValueError("multivectors live in different spaces")
    common = sorted(set(a.terms) & set(b.terms))
    if not common:
        return ProportionalityCertificate(proportional=False)
    if set(a.terms) != set(b.terms):
        return ProportionalityCertificate(proportional=False)
    base = common[0]
    ai, bi = a.terms[base], b.terms[base]
    for idx in sorted(a.terms):
        if a.terms[idx] * bi != ai * b.terms[idx]:
            return ProportionalityCertificate(proportional=False)
    g = multivariate_gcd(ai, bi)
    q2 = poly_div_exact(ai, g)
    q1 = poly_div_exact(bi, g)
    _, lead = q1.leading()
    q1 = q1 * (1 / lead)
    q2 = q2 * (1 / lead)
    return ProportionalityCertificate(proportional=True, q1=q1, q2=q2)


def algebraic_independence(polys) -> bool:
    """Jacobian criterion: symbolic rank of (d g_j / d x_i) equals the count."""
    polys = list(polys)
    if not polys:
        return True
    n = polys[0].n
    jac = [[g.diff(i) for i in range(n)] for g in polys]
    return poly_matrix_rank(jac) == len(polys)


def _wedge_chain(pi: MultiVector):
    """All nonzero wedge powers of a bivector: {k: wedge^k}, k >= 1."""
    powers = {}
    cur = None
    k = 0
    while 2 * (k + 1) <= pi.n:
        nxt = wedge(cur, pi) if cur is not None else pi
        if nxt.is_zero:
            break
        k += 1
        powers[k] = nxt
        cur = nxt
    return powers


def _form_of_differentials(polys, n):
    form = None
    for g in polys:
        dg = differential(g)
        form = dg if form is None else wedge(form, dg)
    return form


@dataclass
class KostantReport:
    is_kostant_type: bool
    certificate: ProportionalityCertificate
    index: int


def kostant_check(gens, pi: MultiVector, ell: int) -> KostantReport:
    """Regularity test: dF_1 ^ ... ^ dF_l / omega against wedge^{(n-l)/2} pi."""
    if isinstance(gens, GeneratorSet):
        gens = gens.gens
    gens = list(gens)
    n = pi.n
    powers = _wedge_chain(pi)
    rank = 2 * max(powers) if powers else 0
    index = n - rank
    if len(gens) != ell or ell != index:
        raise ValueError(f"need exactly index-many generators: count={len(gens)}, "
                         f"ell={ell}, index={index}")
    if not algebraic_independence(gens):
        raise ValueError("generators are algebraically dependent")
    a = volume_dual(_form_of_differentials(gens, n))
    b = powers[(n - ell) // 2]
    if a.is_zero:
        raise ValueError("wedge of generator differentials vanishes")
    cert = proportionality(a, b)
    return KostantReport(is_kostant_type=cert.constant_ratio, certificate=cert,
                         index=index)


@dataclass
class FundamentalSemiInvariant:
    p: Polynomial
    cofactor: MultiVector


def fundamental_semiinvariant(pi: MultiVector, ell: int,
                              power: MultiVector | None = None) -> FundamentalSemiInvariant:
    """Extract the divisor p with  wedge^{(n-l)/2} pi = p * R,  content(R) = 1."""
    n = pi.n
    if (n - ell) % 2:
        raise ValueError("n - ell must be even")
    b = power if power is not None else wedge_power(pi, (n - ell) // 2)
    if b.is_zero:
        raise ValueError("wedge power vanishes; ell is not the index")
    coeffs = sorted(b.terms.values(), key=lambda p_: len(p_.terms))
    g = coeffs[0]
    for c in coeffs[1:]:
        if g.is_constant:
            break
        g = multivariate_gcd(g, c)
    g = poly_monic(g) if not g.is_constant else Polynomial.const(n, 1)
    cof = MultiVector(n, b.degree,
                      {idx: poly_div_exact(c, g) for idx, c in b.terms.items()})
    if cof.scale(g) != b:
        raise AssertionError("cofactor reconstruction failed")
    return FundamentalSemiInvariant(p=g, cofactor=cof)


# ---------------------------------------------------------------------------
# degree trichotomy report
# ---------------------------------------------------------------------------

@dataclass
class ContrDegReport:
    ok: bool
    error: Optional[str]
    index_original: Optional[int] = None
    index_contracted: Optional[int] = None
    index_preserved: Optional[bool] = None
    degrees: Optional[list] = None
    t_degrees: Optional[list] = None
    sum_t_degrees: Optional[int] = None
    weight_total: Optional[int] = None
    classification: Optional[str] = None
    independent: Optional[bool] = None
    kostant_with_limit: Optional[bool] = None
    good_generating_system: Optional[bool] = None

    def as_dict(self):
        return {k: v for k, v in self.__dict__.items()}


def contr_deg_report(gens: GeneratorSet, w: ContractionWeights) -> ContrDegReport:
    """Classify a contraction against the degree law for the invariant set."""
    L = gens.algebra
    pi = lie_poisson_bivector(L)
    ell = len(gens)
    res = contract_algebra(L, w)
    if not res.valid:
        idx, pw = res.offending
        pair = f"({L.labels[idx[0]]},{L.labels[idx[1]]})"
        return ContrDegReport(ok=False, error=f"invalid contraction: t^{pw} at pair {pair}")
    ind0 = algebra_index(L)
    if ind0 != ell:
        return ContrDegReport(ok=False,
                              error=f"generator count {ell} differs from index {ind0}")
    ind1 = algebra_index(res.contracted)
    preserved = ind0 == ind1
    report = ContrDegReport(ok=True, error=None, index_original=ind0,
                            index_contracted=ind1, index_preserved=preserved)
    if not preserved:
        report.ok = False
        report.error = "index is not preserved; the degree law does not apply"
        return report
    pairs = [t_degree(g, w) for g in gens.gens]
    report.degrees = [g.degree() for g in gens.gens]
    report.t_degrees = [d for d, _ in pairs]
    report.sum_t_degrees = sum(report.t_degrees)
    report.weight_total = w.total
    tops = [top for _, top in pairs]
    report.independent = algebraic_independence(tops)
    if report.sum_t_degrees < report.weight_total:
        report.ok = False
        report.error = "degree-law violation: sum of t-degrees below the weight total"
        return report
    if report.sum_t_degrees == report.weight_total:
        report.classification = "equality"
        a = volume_dual(_form_of_differentials(tops, L.n))
        b = wedge_power(res.pi_tilde, (L.n - ell) // 2)
        report.kostant_with_limit = (a == b)
        report.good_generating_system = report.independent
        report.ok = report.independent and report.kostant_with_limit
        if not report.ok:
            report.error = "equality case must give independent tops satisfying the equality"
    else:
        report.classification = "strict"
        report.good_generating_system = False
        report.kostant_with_limit = None
        report.ok = not report.independent
        if not report.ok:
            report.error = "strict case must give dependent highest components"
    return report


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

@dataclass
class Clause:
    name: str
    ok: bool
    data: dict = field(default_factory=dict)


@dataclass
class SuiteReport:
    suite: str
    target: str
    clauses: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.clauses)

    def as_dict(self):
        return {"suite": self.suite, "target": self.target, "ok": self.ok,
                "clauses": [{"name": c.name, "ok": c.ok, "data": c.data}
                            for c in self.clauses]}


def feigin_suite(L: LieAlgebra) -> SuiteReport:
    """Borel-split contraction checks for a built-in simple algebra.

    Clauses: (a) index of the contraction, (b) t-degree drop of each
    generator, (c) exact regularity equality for the highest components,
    (d) the fundamental semi-invariant against the simple-root marks,
    (e) 2l independent semicentre generators and the derived-algebra index,
    (f) the semicentre proportionality constant.
    """
    rd = L.root_data
    if rd is None or rd.marks is None or rd.highest is None:
        raise ValueError("Borel-split suite needs root data with highest-root marks")
    ell = rd.rank
    names = L.labels
    w = borel_decomposition(L)
    res = contract_algebra(L, w)
    clauses = []

    tilde = res.contracted
    powers = _wedge_chain(lie_poisson_bivector(tilde))
    ind_tilde = L.n - (2 * max(powers) if powers else 0)
    tilde._index = ind_tilde
    clauses.append(Clause("index_of_contraction", ind_tilde == ell,
                          {"computed": ind_tilde, "expected": ell}))

    gens = char_invariants(L)
    pairs = [t_degree(g, w) for g in gens.gens]
    drops = [g.degree() - d for g, (d, _) in zip(gens.gens, pairs)]
    clauses.append(Clause("t_degree_drop", all(x == 1 for x in drops),
                          {"degrees": gens.degrees, "t_degrees": [d for d, _ in pairs]}))

    tops = [top for _, top in pairs]
    a = volume_dual(_form_of_differentials(tops, L.n))
    b = powers.get((L.n - ell) // 2)
    clauses.append(Clause("kostant_equality_for_tops", b is not None and a == b, {}))
    if b is None:
        clauses.append(Clause("fundamental_semiinvariant", False,
                              {"reason": "wedge power vanished"}))
        return SuiteReport(suite="feigin", target=L.name or "anon", clauses=clauses)

    fsi = fundamental_semiinvariant(res.pi_tilde, ell, power=b)
    expected = Polynomial.const(L.n, 1)
    for fi, r in zip(rd.simple_f, rd.marks):
        expected = expected * Polynomial.variable(L.n, fi) ** (r - 1)
    clauses.append(Clause("fundamental_semiinvariant", fsi.p == expected,
                          {"computed": poly_to_str(fsi.p, names),
                           "expected": poly_to_str(expected, names)}))

    semis = list(tops[:-1])
    semis.extend(Polynomial.variable(L.n, fi) for fi in rd.simple_f)
    semis.append(Polynomial.variable(L.n, rd.highest))
    keep = sorted(list(rd.positive) + list(rd.negative))
    idx_map = {old: new for new, old in enumerate(keep)}
    try:
        semis_prime = [poly_rename(hh, idx_map, len(keep)) for hh in semis]
        hfree = True
    except ValueError:
        semis_prime = None
        hfree = False
    gprime = subalgebra_on_indices(tilde, keep)
    ind_prime = algebra_index(gprime)
    indep = hfree and algebraic_independence(semis_prime)
    clauses.append(Clause("semicentre_generators",
                          hfree and indep and ind_prime == 2 * ell,
                          {"count": len(semis), "cartan_free": hfree,
                           "independent": indep,
                           "derived_index": ind_prime, "expected_index": 2 * ell}))

    if hfree:
        pi_prime = lie_poisson_bivector(gprime)
        p_prime = poly_rename(fsi.p, idx_map, len(keep))
        h_form = _form_of_differentials(semis_prime, len(keep))
        lhs = volume_dual(h_form).scale(p_prime)
        rhs = wedge_power(pi_prime, (L.n - 3 * ell) // 2)
        if lhs.is_zero:
            clauses.append(Clause("semicentre_proportionality", False,
                                  {"reason": "left side vanished"}))
        else:
            cert = proportionality(lhs, rhs)
            ok = cert.constant_ratio and cert.ratio() != 0
            data = {"constant": str(cert.ratio())} if cert.constant_ratio else {}
            clauses.append(Clause("semicentre_proportionality", ok, data))
    else:
        clauses.append(Clause("semicentre_proportionality", False,
                              {"reason": "semicentre generators involve Cartan variables"}))

    return SuiteReport(suite="feigin", target=L.name or "anon", clauses=clauses)


def z2_suite(pair: SymmetricPair | str) -> SuiteReport:
    """Symmetric-pair contraction checks: grading, the Borel-dimension
    identity, index preservation, and the good-generating-system verdict
    after t-degree reduction."""
    if isinstance(pair, str):
        pair = symmetric_pair(pair)
    L = pair.parent
    clauses = []

    in0, in1 = set(pair.g0), set(pair.g1)
    grading_ok = True
    for (i, j), targets in L.brackets.items():
        expect0 = (i in in0) == (j in in0)
        for k in targets:
            if expect0 != (k in in0):
                grading_ok = False
    clauses.append(Clause("z2_grading", grading_ok,
                          {"dim_g0": len(pair.g0), "dim_g1": len(pair.g1)}))

    ell = algebra_index(L)
    l_alg = pair.centralizer_alg
    rk_l = algebra_index(l_alg)
    dim_b = (L.n + ell) // 2
    dim_b_l = (l_alg.n + rk_l) // 2
    clauses.append(Clause("borel_dimension_identity",
                          dim_b == len(pair.g1) + dim_b_l,
                          {"dim_b": dim_b, "dim_g1": len(pair.g1), "dim_b_l": dim_b_l}))

    res = contract_algebra(L, pair.weights)
    if not res.valid:
        clauses.append(Clause("contraction_valid", False, {}))
        return SuiteReport(suite="z2", target=pair.pair_id, clauses=clauses)
    powers = _wedge_chain(lie_poisson_bivector(res.contracted))
    ind_tilde = L.n - (2 * max(powers) if powers else 0)
    res.contracted._index = ind_tilde
    clauses.append(Clause("index_of_contraction", ind_tilde == ell,
                          {"computed": ind_tilde, "expected": ell}))

    gens = char_invariants(L)
    reduced = t_degree_reduction(gens, pair.weights)
    pairs = [t_degree(g, pair.weights) for g in reduced.gens]
    tds = [d for d, _ in pairs]
    tops = [top for _, top in pairs]
    clauses.append(Clause("reduced_degree_sum",
                          sum(tds) == len(pair.g1) == pair.weights.total,
                          {"t_degrees": tds, "dim_g1": len(pair.g1)}))
    indep = algebraic_independence(tops)
    clauses.append(Clause("tops_independent", indep, {}))
    a = volume_dual(_form_of_differentials(tops, L.n))
    b = powers.get((L.n - ell) // 2)
    kost = b is not None and a == b
    clauses.append(Clause("kostant_equality_for_tops", kost, {}))
    clauses.append(Clause("codim2_note", True,
                          {"note": "centre generation certified through the recorded "
                                   "codimension-2 property of the contracted algebra"}))
    return SuiteReport(suite="z2", target=pair.pair_id, clauses=clauses)
