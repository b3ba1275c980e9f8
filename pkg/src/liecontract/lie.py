"""Lie algebras given by structure constants, with optional matrix realizations.

A LieAlgebra stores the bracket sparsely as [x_i, x_j] = sum_k c[i,j][k] x_k
for i < j; antisymmetry is built into the storage.  Instances are immutable
after construction, so every operation here is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import random

from .exterior import MultiVector, bivector_matrix_at, wedge
from .linalg import commutator, flatten, rational_rank, solve_exact
from .polyring import Polynomial

_ZERO = Fraction(0)


@dataclass(frozen=True)
class RootData:
    """Chevalley bookkeeping: which basis slots are roots, which are Cartan."""

    rank: int
    simple_e: tuple          # indices of e_1..e_l
    simple_f: tuple          # indices of f_1..f_l
    cartan: tuple            # indices of h_1..h_l
    positive: tuple          # all positive root vector indices (simple first)
    negative: tuple          # matching negative root vector indices
    highest: Optional[int] = None      # index of a highest-root vector
    marks: Optional[tuple] = None      # coefficients of the highest root


class LieAlgebra:

    def __init__(self, labels: Sequence[str], brackets: dict,
                 matrices=None, root_data: RootData | None = None,
                 name: str | None = None, family=None):
        self.n = len(labels)
        self.labels = list(labels)
        clean: dict = {}
        for (i, j), targets in brackets.items():
            if not 0 <= i < j < self.n:
                raise ValueError(f"bracket pair ({i},{j}) must satisfy 0 <= i < j < n")
            row = {k: Fraction(c) for k, c in targets.items() if Fraction(c)}
            if row:
                clean[(i, j)] = row
        self.brackets = clean
        self.matrices = matrices
        self.root_data = root_data
        self.name = name
        self.family = family
        self._pi = None
        self._index = None
        self._invariants = None

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.labels == other.labels and self.brackets == other.brackets
                and self.matrices == other.matrices and self.root_data == other.root_data)

    __hash__ = None

    def __repr__(self):
        return f"LieAlgebra({self.name or 'anon'}, dim={self.n})"

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown basis label {label!r}") from None

    def bracket_pair(self, i: int, j: int) -> dict:
        """[x_i, x_j] as a sparse coordinate vector, any i, j."""
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def bracket_vectors(self, u: dict, v: dict) -> dict:
        """Bracket of two coordinate vectors (sparse dicts index -> Fraction)."""
        out: dict = {}
        for i, ci in u.items():
            if not ci:
                continue
            for j, cj in v.items():
                if not cj:
                    continue
                for k, c in self.bracket_pair(i, j).items():
                    val = out.get(k, _ZERO) + ci * cj * c
                    if val:
                        out[k] = val
                    else:
                        out.pop(k, None)
        return out

    def ad_matrix(self, i: int):
        """Matrix of ad(x_i) in the chosen basis."""
        mat = [[_ZERO] * self.n for _ in range(self.n)]
        for j in range(self.n):
            for k, c in self.bracket_pair(i, j).items():
                mat[k][j] = c
        return mat

    def structure_matrix(self):
        """Antisymmetric matrix of linear polynomials [x_i, x_j] = sum c x_k."""
        zero = Polynomial.zero(self.n)
        mat = [[zero] * self.n for _ in range(self.n)]
        for (i, j), targets in self.brackets.items():
            p = Polynomial(self.n, {((k, 1),): c for k, c in targets.items()})
            mat[i][j] = p
            mat[j][i] = -p
        return mat


def from_matrices(mats, labels=None, root_data=None, name=None, family=None) -> LieAlgebra:
    """Extract structure constants from a list of matrices closed under commutator."""
    if not mats:
        raise ValueError("need at least one matrix")
    m = len(mats[0])
    for M in mats:
        if len(M) != m or any(len(row) != m for row in M):
            raise ValueError("all matrices must be square of equal size")
    n = len(mats)
    columns = [flatten(M) for M in mats]
    if rational_rank([[columns[j][i] for j in range(n)] for i in range(m * m)]) != n:
        raise ValueError("matrices are linearly dependent")
    if labels is None:
        labels = [f"x{i}" for i in range(n)]
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            target = flatten(commutator(mats[i], mats[j]))
            sol = solve_exact(columns, target)
            if sol is None:
                raise ValueError(
                    f"span is not closed under commutator at pair ({labels[i]},{labels[j]})")
            row = {k: c for k, c in enumerate(sol) if c}
            if row:
                brackets[(i, j)] = row
    return LieAlgebra(labels, brackets, matrices=[ [list(r) for r in M] for M in mats],
                      root_data=root_data, name=name, family=family)


def jacobi_check(L: LieAlgebra):
    """(True, None) when the Jacobi identity holds, else (False, first bad triple)."""
    for i in range(L.n):
        for j in range(i + 1, L.n):
            for k in range(j + 1, L.n):
                acc: dict = {}
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    for t, ct in L.bracket_pair(a, b).items():
                        for u, cu in L.bracket_pair(t, c).items():
                            val = acc.get(u, _ZERO) + ct * cu
                            if val:
                                acc[u] = val
                            else:
                                acc.pop(u, None)
                if acc:
                    return False, (i, j, k)
    return True, None


def lie_poisson_bivector(L: LieAlgebra) -> MultiVector:
    """The linear bivector with coefficient sum_k c_ij^k x_k at each pair i < j."""
    if L._pi is None:
        ok, triple = jacobi_check(L)
        if not ok:
            raise ValueError(f"Jacobi identity fails at triple {triple}")
        terms = {}
        for (i, j), targets in L.brackets.items():
            terms[(i, j)] = Polynomial(L.n, {((k, 1),): c for k, c in targets.items()})
        L._pi = MultiVector(L.n, 2, terms)
    return L._pi


def structure_bivector(L: LieAlgebra) -> MultiVector:
    """Same coefficients as the Lie-Poisson bivector, but without the Jacobi gate."""
    terms = {}
    for (i, j), targets in L.brackets.items():
        terms[(i, j)] = Polynomial(L.n, {((k, 1),): c for k, c in targets.items()})
    return MultiVector(L.n, 2, terms)


def algebra_index(L: LieAlgebra) -> int:
    """Dimension minus the symbolic rank of the structure matrix.

    The rank of an antisymmetric polynomial matrix is 2k for the largest k
    with a nonzero k-fold wedge of the associated bivector, so the rank is
    read off the wedge-power chain.  Evaluations at random rational points
    give a certified lower bound on the rank as a cross-check.
    """
    if L._index is None:
        if not L.brackets:
            L._index = L.n
        else:
            pi = structure_bivector(L)
            k = 0
            cur = None
            while 2 * (k + 1) <= L.n:
                nxt = wedge(cur, pi) if cur is not None else pi
                if nxt.is_zero:
                    break
                cur = nxt
                k += 1
            rank = 2 * k
            rng = random.Random(20240917)
            for _ in range(3):
                point = [Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(L.n)]
                low = rational_rank(bivector_matrix_at(pi, point))
                if low > rank:
                    raise AssertionError("wedge-power rank disagrees with point evaluation")
            L._index = L.n - rank
    return L._index


def killing_form(L: LieAlgebra):
    """K(x_i, x_j) = trace(ad x_i ad x_j) as an n x n rational matrix."""
    ads = []
    for i in range(L.n):
        sparse = {}
        for j in range(L.n):
            row = L.bracket_pair(i, j)
            if row:
                sparse[j] = row
        ads.append(sparse)
    K = [[_ZERO] * L.n for _ in range(L.n)]
    for i in range(L.n):
        for j in range(i, L.n):
            total = _ZERO
            # trace of ad_i ad_j: sum over b of (ad_i ad_j)[b][b]
            for b, colj in ads[j].items():
                adi = ads[i]
                for mid, cj in colj.items():
                    coli = adi.get(mid)
                    if coli:
                        cb = coli.get(b)
                        if cb:
                            total += cb * cj
            K[i][j] = total
            K[j][i] = total
    return K


def subalgebra_on_indices(L: LieAlgebra, indices: Sequence[int]) -> LieAlgebra:
    """Restriction to a subset of basis vectors that spans a subalgebra."""
    idx = list(indices)
    pos = {old: new for new, old in enumerate(idx)}
    keep = set(idx)
    brackets = {}
    for a, old_i in enumerate(idx):
        for b in range(a + 1, len(idx)):
            old_j = idx[b]
            row = L.bracket_pair(old_i, old_j)
            bad = [k for k in row if k not in keep]
            if bad:
                raise ValueError(
                    f"basis subset is not closed: [{L.labels[old_i]},{L.labels[old_j]}] "
                    f"meets {L.labels[bad[0]]}")
            if row:
                # enumeration order gives pos[old_i] = a < b = pos[old_j]
                brackets[(a, b)] = {pos[k]: c for k, c in row.items()}
    mats = None
    if L.matrices is not None:
        mats = [L.matrices[i] for i in idx]
    return LieAlgebra([L.labels[i] for i in idx], brackets, matrices=mats,
                      name=f"{L.name}-sub" if L.name else None)


def subalgebra_from_vectors(L: LieAlgebra, vectors, labels=None) -> LieAlgebra:
    """Subalgebra spanned by coordinate vectors (closure verified by exact solve)."""
    vecs = [dict(v) for v in vectors]
    m = len(vecs)
    if labels is None:
        labels = [f"y{i}" for i in range(m)]
    columns = [[v.get(i, _ZERO) for i in range(L.n)] for v in vecs]
    if m and rational_rank([[columns[j][i] for j in range(m)] for i in range(L.n)]) != m:
        raise ValueError("spanning vectors are linearly dependent")
    brackets = {}
    for a in range(m):
        for b in range(a + 1, m):
            w = L.bracket_vectors(vecs[a], vecs[b])
            target = [w.get(i, _ZERO) for i in range(L.n)]
            sol = solve_exact(columns, target) if m else None
            if sol is None:
                raise ValueError("span is not closed under the bracket")
            row = {k: c for k, c in enumerate(sol) if c}
            if row:
                brackets[(a, b)] = row
    mats = None
    if L.matrices is not None and m:
        size = len(L.matrices[0])
        mats = []
        for v in vecs:
            M = [[_ZERO] * size for _ in range(size)]
            for i, c in v.items():
                if c:
                    Mi = L.matrices[i]
                    for r in range(size):
                        for s in range(size):
                            if Mi[r][s]:
                                M[r][s] += c * Mi[r][s]
            mats.append(M)
    return LieAlgebra(labels, brackets, matrices=mats)


def centralizer_in_span(L: LieAlgebra, fixed, span_indices) -> list:
    """Vectors in the span of the given basis indices commuting with every
    fixed coordinate vector; returned as sparse coordinate dicts."""
    span = list(span_indices)
    fixed = [dict(f) for f in fixed]
    rows = []
    for f in fixed:
        cols = []
        for s in span:
            w = L.bracket_vectors(f, {s: Fraction(1)})
            cols.append([w.get(i, _ZERO) for i in range(L.n)])
        for coord in range(L.n):
            row = [cols[a][coord] for a in range(len(span))]
            if any(row):
                rows.append(row)
    if not rows:
        return [{s: Fraction(1)} for s in span]
    # exact kernel of the constraint matrix
    ncols = len(span)
    mat = [row[:] for row in rows]
    piv_of_col = [None] * ncols
    r = 0
    for c in range(ncols):
        sel = None
        for rr in range(r, len(mat)):
            if mat[rr][c]:
                sel = rr
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for rr in range(len(mat)):
            if rr != r and mat[rr][c]:
                fq = mat[rr][c]
                mat[rr] = [x - fq * y for x, y in zip(mat[rr], mat[r])]
        piv_of_col[c] = r
        r += 1
    basis = []
    for c in range(ncols):
        if piv_of_col[c] is not None:
            continue
        vec = {span[c]: Fraction(1)}
        for c2 in range(ncols):
            rr = piv_of_col[c2]
            if rr is not None and mat[rr][c]:
                vec[span[c2]] = -mat[rr][c]
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# algebra file format
# ---------------------------------------------------------------------------

def algebra_to_text(L: LieAlgebra, weights=None) -> str:
    lines = []
    lines.append(f"name: {L.name or 'anon'}")
    lines.append(f"labels: {' '.join(L.labels)}")
    for (i, j) in sorted(L.brackets):
        for k in sorted(L.brackets[(i, j)]):
            lines.append(f"bracket: {i} {j} {k} {L.brackets[(i, j)][k]}")
    if L.matrices is not None:
        lines.append(f"matsize: {len(L.matrices[0])}")
        for M in L.matrices:
            lines.append("matrix: " + " ".join(str(x) for x in flatten(M)))
    rd = L.root_data
    if rd is not None:
        lines.append(f"rank: {rd.rank}")
        lines.append("simple_e: " + " ".join(map(str, rd.simple_e)))
        lines.append("simple_f: " + " ".join(map(str, rd.simple_f)))
        lines.append("cartan: " + " ".join(map(str, rd.cartan)))
        lines.append("positive: " + " ".join(map(str, rd.positive)))
        lines.append("negative: " + " ".join(map(str, rd.negative)))
        if rd.highest is not None:
            lines.append(f"highest: {rd.highest}")
        if rd.marks is not None:
            lines.append("marks: " + " ".join(map(str, rd.marks)))
    if weights is not None:
        lines.append("weights: [" + ",".join(str(w) for w in weights) + "]")
    return "\n".join(lines) + "\n"


def algebra_from_text(text: str):
    """Parse the algebra file format; returns (LieAlgebra, weights or None)."""
    name = None
    labels = None
    bracket_lines = []
    matsize = None
    matrix_rows = []
    rd_fields: dict = {}
    weights = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValueError(f"line {lineno}: expected 'key: value'")
        key, _, val = line.partition(":")
        key = key.strip()
        val = val.strip()
        if key == "name":
            name = val
        elif key == "labels":
            labels = val.split()
        elif key == "bracket":
            parts = val.split()
            if len(parts) != 4:
                raise ValueError(f"line {lineno}: bracket needs 'i j k coefficient'")
            bracket_lines.append((int(parts[0]), int(parts[1]), int(parts[2]),
                                  Fraction(parts[3])))
        elif key == "matsize":
            matsize = int(val)
        elif key == "matrix":
            matrix_rows.append([Fraction(x) for x in val.split()])
        elif key in ("rank", "highest"):
            rd_fields[key] = int(val)
        elif key in ("simple_e", "simple_f", "cartan", "positive", "negative", "marks"):
            rd_fields[key] = tuple(int(x) for x in val.split())
        elif key == "weights":
            body = val.strip()
            if not (body.startswith("[") and body.endswith("]")):
                raise ValueError(f"line {lineno}: weights must look like [0,0,1]")
            weights = [int(x) for x in body[1:-1].split(",") if x.strip() != ""]
        else:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
    if labels is None:
        raise ValueError("missing 'labels' line")
    brackets: dict = {}
    for i, j, k, c in bracket_lines:
        if i >= j:
            raise ValueError(f"bracket indices must satisfy i < j, got ({i},{j})")
        brackets.setdefault((i, j), {})[k] = brackets.get((i, j), {}).get(k, _ZERO) + c
    matrices = None
    if matrix_rows:
        if matsize is None:
            raise ValueError("matrix lines need a matsize line")
        if len(matrix_rows) != len(labels):
            raise ValueError("need one matrix per basis label")
        matrices = []
        for row in matrix_rows:
            if len(row) != matsize * matsize:
                raise ValueError("matrix line has the wrong number of entries")
            matrices.append([row[r * matsize:(r + 1) * matsize] for r in range(matsize)])
    root_data = None
    if rd_fields:
        try:
            root_data = RootData(rank=rd_fields["rank"],
                                 simple_e=rd_fields["simple_e"],
                                 simple_f=rd_fields["simple_f"],
                                 cartan=rd_fields["cartan"],
                                 positive=rd_fields["positive"],
                                 negative=rd_fields["negative"],
                                 highest=rd_fields.get("highest"),
                                 marks=rd_fields.get("marks"))
        except KeyError as exc:
            raise ValueError(f"incomplete root data block: missing {exc.args[0]}") from None
    if weights is not None and len(weights) != len(labels):
        raise ValueError("weights length must match the basis size")
    L = LieAlgebra(labels, brackets, matrices=matrices, root_data=root_data, name=name)
    return L, weights
