"""Exact sparse linear algebra over Q with a two-prime modular fast path.

Vectors are dicts {index: Fraction} with no stored zeros; matrices store a
sparse {(row, col): Fraction} map.  Ranks default to the modular protocol:
compute the rank modulo two independent random ~62-bit primes and accept on
agreement, escalating to fraction-free (Bareiss) elimination over Z on
disagreement.  Echelon bases (kernels, images, subspace arithmetic) are
always exact; division-normalised reduction happens only at basis
extraction.
"""

import random
from fractions import Fraction

from . import CrossCheckError

PRIME_BITS = 62

_DEFAULT_RNG = random.Random(0x53C0)


def _clean(vec):
    return {k: v for k, v in vec.items() if v}


class SparseMatrix:
    """Immutable sparse matrix over Q.  Entries: {(row, col): Fraction}."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        ent = {}
        if entries:
            for (i, j), v in entries.items():
                if v:
                    if not (0 <= i < rows and 0 <= j < cols):
                        raise ValueError("entry (%d,%d) outside %dx%d" % (i, j, rows, cols))
                    ent[(i, j)] = Fraction(v)
        self.entries = ent

    @classmethod
    def from_row_dicts(cls, row_dicts, cols):
        ent = {}
        for i, row in enumerate(row_dicts):
            for j, v in row.items():
                if v:
                    ent[(i, j)] = Fraction(v)
        return cls(len(row_dicts), cols, ent)

    @classmethod
    def from_dense(cls, rows_list):
        r = len(rows_list)
        c = len(rows_list[0]) if r else 0
        ent = {}
        for i, row in enumerate(rows_list):
            for j, v in enumerate(row):
                if v:
                    ent[(i, j)] = Fraction(v)
        return cls(r, c, ent)

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    def row_dicts(self):
        out = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def col_dicts(self):
        out = [dict() for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            out[j][i] = v
        return out

    def transpose(self):
        return SparseMatrix(self.cols, self.rows,
                            {(j, i): v for (i, j), v in self.entries.items()})

    def apply(self, vec):
        """Matrix times column vector (vector given as {col: value})."""
        out = {}
        for (i, j), v in self.entries.items():
            x = vec.get(j)
            if x:
                s = out.get(i, 0) + v * x
                if s:
                    out[i] = s
                else:
                    out.pop(i, None)
        return out

    def matmul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols_of_other = other.row_dicts()
        ent = {}
        for (i, k), v in self.entries.items():
            for j, w in cols_of_other[k].items():
                key = (i, j)
                s = ent.get(key, 0) + v * w
                if s:
                    ent[key] = s
                else:
                    ent.pop(key, None)
        return SparseMatrix(self.rows, other.cols, ent)

    def is_zero(self):
        return not self.entries

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        ent = dict(self.entries)
        for (i, j), v in other.entries.items():
            ent[(i, j + self.cols)] = v
        return SparseMatrix(self.rows, self.cols + other.cols, ent)

    def __repr__(self):
        return "SparseMatrix(%dx%d, %d nonzero)" % (self.rows, self.cols, len(self.entries))


class Echelon:
    """Incrementally maintained reduced row echelon form over Q.

    Rows are stored per pivot column with pivot value 1 and the pivot column
    cleared from every other stored row (full RREF); a column index keeps
    back-substitution proportional to actual fill.
    """

    def __init__(self):
        self.rows = {}      # pivot col -> row dict
        self._uses = {}     # col -> set of pivot cols whose rows touch it

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self):
        return sorted(self.rows)

    def reduce(self, vec):
        """Residue of ``vec`` after clearing every pivot coordinate."""
        v = dict(vec)
        while True:
            hit = None
            for c in v:
                if c in self.rows:
                    hit = c
                    break
            if hit is None:
                return _clean(v)
            coef = v[hit]
            row = self.rows[hit]
            for c, x in row.items():
                s = v.get(c, 0) - coef * x
                if s:
                    v[c] = s
                else:
                    v.pop(c, None)

    def insert(self, vec):
        """Reduce and, if nonzero, add as a new pivot row.  Returns the pivot or None."""
        res = self.reduce(vec)
        if not res:
            return None
        piv = min(res)
        inv = 1 / Fraction(res[piv])
        row = {c: v * inv for c, v in res.items()}
        # clear the new pivot column from existing rows
        for other in list(self._uses.get(piv, ())):
            orow = self.rows[other]
            coef = orow.pop(piv)
            self._uses[piv].discard(other)
            for c, x in row.items():
                if c == piv:
                    continue
                s = orow.get(c, 0) - coef * x
                if s:
                    if c not in orow:
                        self._uses.setdefault(c, set()).add(other)
                    orow[c] = s
                elif c in orow:
                    del orow[c]
                    self._uses[c].discard(other)
        self.rows[piv] = row
        for c in row:
            self._uses.setdefault(c, set()).add(piv)
        return piv

    def row_list(self):
        return [dict(self.rows[p]) for p in self.pivots]


class Subspace:
    """Subspace of Q^ambient held as an echelonised basis."""

    __slots__ = ("ambient_dim", "_ech")

    def __init__(self, ambient_dim, echelon=None):
        self.ambient_dim = ambient_dim
        self._ech = echelon if echelon is not None else Echelon()

    @classmethod
    def from_vectors(cls, vectors, ambient_dim):
        ech = Echelon()
        for v in vectors:
            for c in v:
                if not (0 <= c < ambient_dim):
                    raise ValueError("coordinate %d outside ambient %d" % (c, ambient_dim))
            ech.insert(v)
        return cls(ambient_dim, ech)

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim):
        return cls.from_vectors(({i: Fraction(1)} for i in range(ambient_dim)),
                                ambient_dim)

    @property
    def dim(self):
        return len(self._ech)

    @property
    def pivots(self):
        return self._ech.pivots

    def basis(self):
        """Echelon basis rows, ordered by pivot."""
        return self._ech.row_list()

    def reduce(self, vec):
        return self._ech.reduce(vec)

    def contains(self, vec):
        return not self._ech.reduce(vec)

    def coords_of(self, vec):
        """Coordinates of ``vec`` in the echelon basis; raises if not a member.

        In RREF the coefficient along the row with pivot p is simply vec[p].
        """
        res = self._ech.reduce(vec)
        if res:
            raise ValueError("vector not in subspace")
        return [Fraction(vec.get(p, 0)) for p in self.pivots]

    def contains_subspace(self, other):
        return all(self.contains(row) for row in other.basis())

    def to_matrix(self):
        return SparseMatrix.from_row_dicts(self.basis(), self.ambient_dim)

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.dim == other.dim
                and self.contains_subspace(other))

    def __repr__(self):
        return "Subspace(dim %d of Q^%d)" % (self.dim, self.ambient_dim)


# ---------------------------------------------------------------------------
# ranks: modular fast path with exact escalation


def _is_probable_prime(n):
    # deterministic Miller-Rabin for n < 3.3e24
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng, bits=PRIME_BITS):
    while True:
        n = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if _is_probable_prime(n):
            return n


class BadPrimeError(ArithmeticError):
    pass


def _rows_mod(M, p):
    rows = []
    for row in M.row_dicts():
        r = {}
        for j, v in row.items():
            den = v.denominator % p
            if den == 0:
                raise BadPrimeError(p)
            x = v.numerator * pow(den, -1, p) % p
            if x:
                r[j] = x
        rows.append(r)
    return rows


def rank_mod(M, p):
    """Rank of M over Z/p (plain sparse Gaussian elimination)."""
    rows = _rows_mod(M, p)
    pivots = {}  # col -> row dict with pivot value 1
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c in pivots:
                coef = row.pop(c)
                prow = pivots[c]
                for cc, x in prow.items():
                    if cc == c:
                        continue
                    s = (row.get(cc, 0) - coef * x) % p
                    if s:
                        row[cc] = s
                    else:
                        row.pop(cc, None)
            else:
                inv = pow(row[c], -1, p)
                pivots[c] = {cc: (x * inv) % p for cc, x in row.items()}
                rank += 1
                break
    return rank


def rank_exact(M):
    """Rank over Q by fraction-free (Bareiss) elimination on integer rows."""
    # scale each row to integers; row scaling does not change the rank
    rows = []
    for row in M.row_dicts():
        if not row:
            continue
        den = 1
        for v in row.values():
            den = den * v.denominator // _gcd(den, v.denominator)
        rows.append({j: int(v * den) for j, v in row.items()})
    if not rows:
        return 0
    rank = 0
    prev = 1
    cols_left = sorted({j for r in rows for j in r})
    for col in cols_left:
        piv_idx = None
        for idx, r in enumerate(rows):
            if r.get(col):
                if piv_idx is None or len(r) < len(rows[piv_idx]):
                    piv_idx = idx
        if piv_idx is None:
            continue
        piv_row = rows.pop(piv_idx)
        piv_val = piv_row[col]
        new_rows = []
        for r in rows:
            c = r.get(col)
            if c:
                merged = {}
                for j in set(piv_row) | set(r):
                    val = piv_val * r.get(j, 0) - c * piv_row.get(j, 0)
                    if val:
                        # Bareiss: division by the previous pivot is exact
                        q, rem = divmod(val, prev)
                        if rem:
                            raise ArithmeticError("fraction-free invariant broken")
                        merged[j] = q
                if merged:
                    new_rows.append(merged)
            elif r:
                scaled = {}
                for j, v in r.items():
                    q, rem = divmod(v * piv_val, prev)
                    if rem:
                        raise ArithmeticError("fraction-free invariant broken")
                    scaled[j] = q
                new_rows.append(scaled)
        rows = new_rows
        prev = piv_val
        rank += 1
        if not rows:
            break
    return rank


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def rank(M, backend="modular", rng=None, audit=0.0):
    """Rank over Q.

    ``modular``: two distinct random ~62-bit primes; agreement is accepted,
    disagreement escalates to exact elimination.  ``audit`` > 0 additionally
    forces the exact path on that fraction of calls (seeded via ``rng``) and
    cross-checks the two answers.
    """
    if backend == "exact":
        return rank_exact(M)
    if backend != "modular":
        raise ValueError("unknown backend %r" % backend)
    rng = rng if rng is not None else _DEFAULT_RNG
    r1 = r2 = None
    for _ in range(8):
        p1 = random_prime(rng)
        p2 = random_prime(rng)
        if p1 == p2:
            continue
        try:
            r1 = rank_mod(M, p1)
            r2 = rank_mod(M, p2)
        except BadPrimeError:
            continue
        break
    if r1 is None:
        return rank_exact(M)
    result = r1 if r1 == r2 else rank_exact(M)
    if audit and rng.random() < audit:
        exact = rank_exact(M)
        if result > exact:
            raise CrossCheckError("modular rank %d exceeds exact rank %d" % (result, exact))
        if result != exact:
            raise CrossCheckError("modular rank %d != exact rank %d" % (result, exact))
    return result


# ---------------------------------------------------------------------------
# kernels, images, subspace arithmetic


def kernel_basis(M):
    """Right kernel {x : Mx = 0} as a Subspace of Q^cols."""
    ech = Echelon()
    for row in M.row_dicts():
        ech.insert(row)
    pivots = set(ech.pivots)
    rows = {p: ech.rows[p] for p in pivots}
    out = Echelon()
    for j in range(M.cols):
        if j in pivots:
            continue
        vec = {j: Fraction(1)}
        for p, row in rows.items():
            c = row.get(j)
            if c:
                vec[p] = -c
        out.insert(vec)
    return Subspace(M.cols, out)


def image_basis(M):
    """Column space of M as a Subspace of Q^rows."""
    return Subspace.from_vectors(M.col_dicts(), M.rows)


def row_space(M):
    return Subspace.from_vectors(M.row_dicts(), M.cols)


def subspace_sum(U, W):
    if U.ambient_dim != W.ambient_dim:
        raise ValueError("ambient mismatch")
    ech = Echelon()
    for row in U.basis():
        ech.insert(row)
    for row in W.basis():
        ech.insert(row)
    return Subspace(U.ambient_dim, ech)


def subspace_intersect(U, W):
    """Zassenhaus: echelonise [u|u] and [w|0]; zero-left rows carry the intersection."""
    if U.ambient_dim != W.ambient_dim:
        raise ValueError("ambient mismatch")
    n = U.ambient_dim
    ech = Echelon()
    for row in U.basis():
        doubled = dict(row)
        for c, v in row.items():
            doubled[c + n] = v
        ech.insert(doubled)
    for row in W.basis():
        ech.insert(dict(row))
    inter = Echelon()
    for piv in ech.pivots:
        if piv >= n:
            row = ech.rows[piv]
            inter.insert({c - n: v for c, v in row.items()})
    return Subspace(n, inter)


def quotient_dim(superspace, U):
    """dim(superspace / U); containment is checked, not assumed."""
    if isinstance(superspace, int):
        superspace = Subspace.full(superspace)
    if superspace.ambient_dim != U.ambient_dim:
        raise ValueError("ambient mismatch")
    if not superspace.contains_subspace(U):
        raise ValueError("quotient by a non-subspace")
    return superspace.dim - U.dim


class QuotientSpace:
    """Quotient V/U with echelon-selected coset representatives.

    Representatives are residues of V's basis after reduction modulo U,
    re-echelonised; ``coords_of`` expresses a vector's class in that basis.
    """

    def __init__(self, V, U):
        if not V.contains_subspace(U):
            raise ValueError("U is not contained in V")
        self.V = V
        self.U = U
        reps = []
        ech = Echelon()
        for row in V.basis():
            res = U.reduce(row)
            if res and ech.insert(res) is not None:
                reps.append(res)
        self._rep_space = Subspace(V.ambient_dim, ech)

    @property
    def dim(self):
        return self._rep_space.dim

    def representatives(self):
        return self._rep_space.basis()

    def coords_of(self, vec):
        """Coordinates of [vec] in the representative basis (vec must lie in V)."""
        res = self.U.reduce(vec)
        return self._rep_space.coords_of(res)


# ---------------------------------------------------------------------------
# cochain complexes


class CochainComplex:
    """Finite complex of coordinate spaces; d(k): C^k -> C^(k+1), d.d = 0 enforced."""

    def __init__(self, degree_start, dims, differentials):
        if len(differentials) != max(len(dims) - 1, 0):
            raise ValueError("need one differential per adjacent degree pair")
        self.degree_start = degree_start
        self.dims = list(dims)
        self.differentials = list(differentials)
        for k, d in enumerate(self.differentials):
            if d.cols != self.dims[k] or d.rows != self.dims[k + 1]:
                raise ValueError("differential %d has shape %dx%d, expected %dx%d"
                                 % (k, d.rows, d.cols, self.dims[k + 1], self.dims[k]))
        for k in range(len(self.differentials) - 1):
            if not self.differentials[k + 1].matmul(self.differentials[k]).is_zero():
                raise ValueError("d.d != 0 between degrees %d and %d"
                                 % (degree_start + k, degree_start + k + 2))

    @property
    def degrees(self):
        return range(self.degree_start, self.degree_start + len(self.dims))

    def differential(self, degree):
        k = degree - self.degree_start
        if 0 <= k < len(self.differentials):
            return self.differentials[k]
        return None

    def cohomology_dims(self, backend="modular", rng=None):
        """H^k dims; only ranks are needed, so the modular path applies."""
        ranks = [rank(d, backend=backend, rng=rng) for d in self.differentials]
        out = {}
        for k, dim in enumerate(self.dims):
            r_out = ranks[k] if k < len(ranks) else 0
            r_in = ranks[k - 1] if k >= 1 else 0
            out[self.degree_start + k] = dim - r_out - r_in
        self._check_euler(out)
        return out

    def cohomology(self, representatives=False, backend="modular", rng=None):
        if not representatives:
            return self.cohomology_dims(backend=backend, rng=rng)
        out = {}
        reps = {}
        for k, dim in enumerate(self.dims):
            deg = self.degree_start + k
            if k < len(self.differentials):
                ker = kernel_basis(self.differentials[k])
            else:
                ker = Subspace.full(dim)
            if k >= 1:
                img = image_basis(self.differentials[k - 1])
            else:
                img = Subspace.zero(dim)
            quot = QuotientSpace(ker, img)
            out[deg] = quot.dim
            reps[deg] = quot.representatives()
        self._check_euler(out)
        return out, reps

    def _check_euler(self, hdims):
        lhs = sum((-1) ** k * d for k, d in enumerate(self.dims))
        rhs = sum((-1) ** (deg - self.degree_start) * d for deg, d in hdims.items())
        if lhs != rhs:
            raise CrossCheckError("Euler characteristic mismatch: %d vs %d" % (lhs, rhs))
