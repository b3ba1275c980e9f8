"""Multivectors and differential forms with polynomial coefficients.

Both live over the same index machinery: a degree-k element maps strictly
increasing index tuples of length k to Polynomial coefficients.  MultiVector
holds wedge products of coordinate derivations, Form holds wedge products of
coordinate differentials; the two kinds never mix in a wedge.
"""

from __future__ import annotations

from fractions import Fraction

from .polyring import Polynomial, mono_mul

_ZERO = Fraction(0)


def _merge_signed(a: tuple, b: tuple):
    """Merge two disjoint sorted index tuples; returns (merged, sign)."""
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    inv = 0
    while i < la and j < lb:
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            # b[j] jumps over the remaining entries of a
            inv += la - i
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out), (-1) ** (inv & 1)


def shuffle_sign(front: tuple, back: tuple) -> int:
    """Sign of the permutation sorting the concatenation front + back."""
    _, s = _merge_signed(front, back)
    return s


class MultiVector:
    """Degree-k alternating tensor of derivations with Polynomial coefficients."""

    kind = "multivector"

    __slots__ = ("n", "degree", "terms")

    def __init__(self, n: int, degree: int, terms=None):
        if not 0 <= degree <= n:
            raise ValueError(f"degree {degree} out of range for n={n}")
        self.n = n
        self.degree = degree
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for idx, p in items:
                idx = tuple(idx)
                if len(idx) != degree or any(i >= n or i < 0 for i in idx):
                    raise ValueError(f"bad index set {idx} for degree {degree}, n={n}")
                if list(idx) != sorted(set(idx)):
                    raise ValueError(f"index set {idx} must be strictly increasing")
                if not isinstance(p, Polynomial):
                    p = Polynomial.const(n, p)
                if not p.is_zero:
                    clean[idx] = clean[idx] + p if idx in clean else p
        self.terms = {k: v for k, v in clean.items() if not v.is_zero}

    @classmethod
    def _raw(cls, n, degree, terms):
        mv = object.__new__(cls)
        mv.n = n
        mv.degree = degree
        mv.terms = terms
        return mv

    @classmethod
    def unit(cls, n: int):
        """The scalar 1 viewed in degree 0."""
        return cls._raw(n, 0, {(): Polynomial.const(n, 1)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, idx) -> Polynomial:
        return self.terms.get(tuple(idx), Polynomial.zero(self.n))

    def scale(self, factor) -> "MultiVector":
        if isinstance(factor, Polynomial):
            out = {}
            for idx, p in self.terms.items():
                q = p * factor
                if not q.is_zero:
                    out[idx] = q
            return type(self)._raw(self.n, self.degree, out)
        c = Fraction(factor)
        if not c:
            return type(self)._raw(self.n, self.degree, {})
        return type(self)._raw(self.n, self.degree,
                               {idx: p * c for idx, p in self.terms.items()})

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if self.n != other.n or self.degree != other.degree:
            raise ValueError("mismatched degree or ring dimension")
        out = dict(self.terms)
        for idx, p in other.terms.items():
            q = out.get(idx)
            q = p if q is None else q + p
            if q.is_zero:
                out.pop(idx, None)
            else:
                out[idx] = q
        return type(self)._raw(self.n, self.degree, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self.n, self.degree, self.terms) == (other.n, other.degree, other.terms)

    __hash__ = None

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, k={self.degree}, {len(self.terms)} terms)"

    def to_pairs(self, names):
        """Serialization: (index-set, polynomial string) pairs in lex index order."""
        from .polyring import poly_to_str
        out = []
        for idx in sorted(self.terms):
            out.append(("^".join(names[i] for i in idx) if idx else "1",
                        poly_to_str(self.terms[idx], names)))
        return out


class Form(MultiVector):
    """Degree-k differential form with Polynomial coefficients."""

    kind = "form"


class TMultiVector:
    """MultiVector whose coefficients are polynomials in an extra parameter t."""

    __slots__ = ("n", "degree", "terms")

    def __init__(self, n: int, degree: int, terms: dict):
        self.n = n
        self.degree = degree
        self.terms = {idx: tp for idx, tp in terms.items() if not tp.is_zero}

    @property
    def regular(self) -> bool:
        return all(tp.regular for tp in self.terms.values())

    def offending(self):
        """First (index set, most negative t-power) violating regularity."""
        for idx in sorted(self.terms):
            tp = self.terms[idx]
            low = min(tp.coeffs) if tp.coeffs else 0
            if low < 0:
                return idx, low
        return None

    def coefficient_of_power(self, d: int) -> MultiVector:
        out = {}
        for idx, tp in self.terms.items():
            p = tp.coefficient(d)
            if not p.is_zero:
                out[idx] = p
        return MultiVector._raw(self.n, self.degree, out)

    def at_one(self) -> MultiVector:
        out = {}
        for idx, tp in self.terms.items():
            p = tp.at_one()
            if not p.is_zero:
                out[idx] = p
        return MultiVector._raw(self.n, self.degree, out)


def wedge(a: MultiVector, b: MultiVector) -> MultiVector:
    """Exterior product of two elements of the same kind."""
    if type(a) is not type(b):
        raise TypeError(f"cannot wedge {type(a).__name__} with {type(b).__name__}")
    if a.n != b.n:
        raise ValueError("ring dimension mismatch")
    k = a.degree + b.degree
    if k > a.n:
        raise ValueError(f"wedge degree {k} exceeds dimension {a.n}")
    acc: dict = {}
    b_items = [(idx, frozenset(idx), p.terms) for idx, p in b.terms.items()]
    for ia, pa in a.terms.items():
        sa = frozenset(ia)
        ta = pa.terms
        for ib, sb, tb in b_items:
            if sa & sb:
                continue
            merged, sign = _merge_signed(ia, ib)
            bucket = acc.get(merged)
            if bucket is None:
                bucket = acc[merged] = {}
            for ma, ca in ta.items():
                for mb, cb in tb.items():
                    m = mono_mul(ma, mb)
                    c = ca * cb if sign > 0 else -(ca * cb)
                    v = bucket.get(m)
                    v = c if v is None else v + c
                    if v:
                        bucket[m] = v
                    else:
                        del bucket[m]
    out = {}
    for idx, bucket in acc.items():
        if bucket:
            out[idx] = Polynomial._raw(a.n, bucket)
    return type(a)._raw(a.n, k, out)


def wedge_power(pi: MultiVector, k: int) -> MultiVector:
    """k-fold wedge of a bivector with itself."""
    if pi.degree != 2:
        raise ValueError("wedge_power expects a bivector")
    if k < 0:
        raise ValueError("negative wedge power")
    if 2 * k > pi.n:
        raise ValueError(f"wedge power 2k={2 * k} exceeds dimension {pi.n}")
    if k == 0:
        return MultiVector.unit(pi.n)
    out = pi
    for _ in range(k - 1):
        out = wedge(out, pi)
    return out


def differential(p: Polynomial) -> Form:
    """The 1-form dF = sum_i (dF/dx_i) dx_i."""
    terms = {}
    for i in range(p.n):
        d = p.diff(i)
        if not d.is_zero:
            terms[(i,)] = d
    return Form._raw(p.n, 1, terms)


def volume_form(n: int) -> Form:
    return Form._raw(n, n, {tuple(range(n)): Polynomial.const(n, 1)})


def volume_dual(f: Form) -> MultiVector:
    """Division by the volume form: the multivector with coefficient
    sgn(I, complement(I)) * f_I at the complementary index set."""
    n = f.n
    full = tuple(range(n))
    out = {}
    for idx, p in f.terms.items():
        mark = set(idx)
        comp = tuple(i for i in full if i not in mark)
        sign = shuffle_sign(idx, comp)
        out[comp] = p if sign > 0 else -p
    return MultiVector._raw(n, n - f.degree, out)


def bivector_matrix(pi: MultiVector):
    """Antisymmetric n x n matrix of Polynomial entries pi_{ij}."""
    if pi.degree != 2:
        raise ValueError("expected a bivector")
    n = pi.n
    zero = Polynomial.zero(n)
    mat = [[zero] * n for _ in range(n)]
    for (i, j), p in pi.terms.items():
        mat[i][j] = p
        mat[j][i] = -p
    return mat


def bivector_matrix_at(pi: MultiVector, point):
    """Evaluate the bivector's matrix at a rational point."""
    if len(point) != pi.n:
        raise ValueError("point length must match ring dimension")
    n = pi.n
    mat = [[_ZERO] * n for _ in range(n)]
    for (i, j), p in pi.terms.items():
        v = p.evaluate(point)
        mat[i][j] = v
        mat[j][i] = -v
    return mat


def schouten_square(pi: MultiVector) -> MultiVector:
    """The trivector [pi, pi] in coordinates; zero exactly when pi is Poisson.

    Coefficient at i<j<k:
        sum_l  pi_{li} d_l pi_{jk} - pi_{lj} d_l pi_{ik} + pi_{lk} d_l pi_{ij}
    """
    import itertools

    n = pi.n
    if n < 3:
        raise ValueError("Schouten square needs dimension >= 3")
    mat = bivector_matrix(pi)
    dmat = {}
    for (i, j), p in pi.terms.items():
        for l in p.variables():
            d = p.diff(l)
            dmat[(l, i, j)] = d
            dmat[(l, j, i)] = -d

    # only indices occurring in pi can contribute to a nonzero coefficient
    support = sorted({i for idx in pi.terms for i in idx})
    out = {}
    for i, j, k in itertools.combinations(support, 3):
        total = Polynomial.zero(n)
        for l in range(n):
            for positive, a, bc in ((True, i, (j, k)), (False, j, (i, k)), (True, k, (i, j))):
                d = dmat.get((l,) + bc)
                if d is None:
                    continue
                pla = mat[l][a]
                if pla.is_zero:
                    continue
                term = pla * d
                total = total + term if positive else total - term
        if not total.is_zero:
            out[(i, j, k)] = total
    return MultiVector._raw(n, 3, out)


def _is_zero_entry(x) -> bool:
    if isinstance(x, Polynomial):
        return x.is_zero
    return x == 0


def _neg_entry(x):
    return -x


def pfaffian(matrix):
    """Pfaffian of an antisymmetric even-size matrix by first-row expansion."""
    m = len(matrix)
    if m % 2:
        raise ValueError("Pfaffian needs even size")
    for i in range(m):
        if len(matrix[i]) != m:
            raise ValueError("matrix must be square")
        if not _is_zero_entry(matrix[i][i]):
            raise ValueError("matrix is not antisymmetric (nonzero diagonal)")
        for j in range(i + 1, m):
            if matrix[i][j] != _neg_entry(matrix[j][i]):
                raise ValueError(f"matrix is not antisymmetric at ({i},{j})")
    if m == 0:
        return Fraction(1)
    sample = matrix[0][0]
    poly_mode = isinstance(sample, Polynomial)
    one = Polynomial.const(sample.n, 1) if poly_mode else Fraction(1)

    def rec(rows):
        if not rows:
            return one
        r0 = rows[0]
        total = None
        for t in range(1, len(rows)):
            entry = matrix[r0][rows[t]]
            if _is_zero_entry(entry):
                continue
            rest = rows[1:t] + rows[t + 1:]
            term = entry * rec(rest)
            if t % 2 == 0:
                term = -term
            total = term if total is None else total + term
        if total is None:
            return (Polynomial.zero(sample.n) if poly_mode else Fraction(0))
        return total

    return rec(tuple(range(m)))


def bracket_with_coordinate(pi: MultiVector, j: int, h: Polynomial) -> Polynomial:
    """Poisson bracket {x_j, h} = sum_l pi_{jl} dh/dx_l for the given bivector."""
    n = pi.n
    total = Polynomial.zero(n)
    for (a, b), p in pi.terms.items():
        if a == j:
            d = h.diff(b)
            if not d.is_zero:
                total = total + p * d
        elif b == j:
            d = h.diff(a)
            if not d.is_zero:
                total = total - p * d
    return total
