"""Exact gl(V) tensor calculus: wheel invariants and exterior invariants.

The degree-m generator of the exterior invariants of gl(V) is the
antisymmetrised cyclic trace tensor

    x_m = alt2( sum_a E_{a1 a2} (x) E_{a2 a3} (x) ... (x) E_{am a1} )

read off the closed chain of matrix units (one big V*-arc closing m nested
V-arcs); the component formula is validated rather than trusted: m = 1
gives the identity, and the slot action of x_m on V^(x)m is compared
exactly against the distinguished group-algebra element e_m divided by
(m-1)!.  Antisymmetrisation uses the averaged projector (division by m!,
legal in characteristic zero), applying one permutation simultaneously to
the V and V* axes with a single sign.

Internally the tensors are integer numpy arrays scaled by a known
denominator, so every check is exact integer arithmetic.
"""

import json
from fractions import Fraction
from itertools import combinations, product
from math import factorial

import numpy as np

from . import CrossCheckError, ResourceLimitError
from .linalg import SparseMatrix, kernel_basis
from .homology import SnModule, _vstack, cubic_cohomology, cubic_invariants_diagram, top_quotient
from .symgrp import all_permutations

MAX_TENSOR_ENTRIES = 10 ** 7


class LieAlgebraSpec:
    """Lie algebra from structure constants; antisymmetry and Jacobi checked."""

    def __init__(self, dim, table, name="g"):
        self.dim = dim
        self.name = name
        self.table = tuple(tuple(tuple(Fraction(x) for x in row) for row in block)
                           for block in table)
        if len(self.table) != dim or any(len(b) != dim for b in self.table) \
                or any(len(r) != dim for b in self.table for r in b):
            raise ValueError("structure table must be dim^3")
        self._validate()

    def bracket_coords(self, u, v):
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                coef = a * b
                for k, c in enumerate(self.table[i][j]):
                    if c:
                        out[k] += coef * c
        return tuple(out)

    def _basis_vec(self, i):
        return tuple(Fraction(1) if j == i else Fraction(0) for j in range(self.dim))

    def _validate(self):
        d = self.dim
        for i in range(d):
            for j in range(d):
                if self.table[i][j] != tuple(-x for x in self.table[j][i]):
                    raise ValueError("bracket is not antisymmetric")
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    x = self.bracket_coords(self.table[i][j], self._basis_vec(k))
                    y = self.bracket_coords(self.table[j][k], self._basis_vec(i))
                    z = self.bracket_coords(self.table[k][i], self._basis_vec(j))
                    for t in range(d):
                        if x[t] + y[t] + z[t]:
                            raise ValueError("Jacobi identity fails at (%d,%d,%d)"
                                             % (i, j, k))

    def ad_matrix(self, i):
        """Matrix of ad(e_i) in the basis."""
        ent = {}
        for j in range(self.dim):
            for k, c in enumerate(self.table[i][j]):
                if c:
                    ent[(k, j)] = c
        return SparseMatrix(self.dim, self.dim, ent)

    def center(self):
        """z(g): the joint kernel of x -> [x, e_j]."""
        rows = []
        for j in range(self.dim):
            for k in range(self.dim):
                row = {}
                for i in range(self.dim):
                    c = self.table[i][j][k]
                    if c:
                        row[i] = c
                rows.append(row)
        return kernel_basis(SparseMatrix.from_row_dicts(rows, self.dim))

    @classmethod
    def gl(cls, d):
        """gl(d) on matrix units E_{ab}, index a*d + b."""
        dim = d * d
        table = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for a in range(d):
            for b in range(d):
                for c in range(d):
                    for e in range(d):
                        i, j = a * d + b, c * d + e
                        # [E_ab, E_ce] = delta_bc E_ae - delta_ea E_cb
                        if b == c:
                            table[i][j][a * d + e] += 1
                        if e == a:
                            table[i][j][c * d + b] -= 1
        return cls(dim, table, name="gl(%d)" % d)

    @classmethod
    def sl2(cls):
        """Basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f."""
        z = [Fraction(0)] * 3
        table = [[list(z) for _ in range(3)] for _ in range(3)]
        table[0][1][2] = Fraction(1)
        table[1][0][2] = Fraction(-1)
        table[2][0][0] = Fraction(2)
        table[0][2][0] = Fraction(-2)
        table[2][1][1] = Fraction(-2)
        table[1][2][1] = Fraction(2)
        return cls(3, table, name="sl(2)")

    @classmethod
    def abelian(cls, d):
        z = [Fraction(0)] * d
        return cls(d, [[list(z) for _ in range(d)] for _ in range(d)],
                   name="abelian(%d)" % d)

    @classmethod
    def from_json(cls, doc):
        if isinstance(doc, str):
            with open(doc, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
        table = [[[Fraction(x) for x in row] for row in block] for block in doc["table"]]
        return cls(doc["dim"], table, name=doc.get("name", "g"))

    def to_json(self):
        return {
            "dim": self.dim,
            "name": self.name,
            "table": [[[str(x) for x in row] for row in block] for block in self.table],
        }


# ---------------------------------------------------------------------------
# wheels and their action on tensor powers of V


def _guard(m, d):
    if d ** (2 * m) > MAX_TENSOR_ENTRIES:
        raise ResourceLimitError("tensor of %d entries exceeds the guard" % d ** (2 * m))


def wheel(m, d):
    """Cyclic trace tensor in gl(V)^(x)m (integer numpy array).

    Axes alternate (v_1, w_1, ..., v_m, w_m); the entry pattern is
    w_k = v_{k+1} cyclically, i.e. sum_a E_{a1 a2} (x) ... (x) E_{am a1}.
    """
    _guard(m, d)
    T = np.zeros((d,) * (2 * m), dtype=np.int64)
    for a in product(range(d), repeat=m):
        idx = []
        for k in range(m):
            idx.append(a[k])
            idx.append(a[(k + 1) % m])
        T[tuple(idx)] += 1
    return T


def _pair_transform(T, perm):
    """Apply a permutation simultaneously to the V and V* axis pairs."""
    m = len(perm.images)
    order = []
    for k in range(m):
        src = perm.images[k] - 1
        order.append(2 * src)
        order.append(2 * src + 1)
    return np.transpose(T, axes=order)


def alt2_wheel_raw(m, d):
    """(N, m!) with x_m = N / m!; N is an exact integer tensor."""
    _guard(m, d)
    W = wheel(m, d)
    N = np.zeros_like(W)
    for p in all_permutations(m):
        term = _pair_transform(W, p)
        if p.sign() > 0:
            N += term
        else:
            N -= term
    return N, factorial(m)


def alt2_wheel(m, d):
    """x_m as an exact tensor (numpy object array of Fractions)."""
    N, den = alt2_wheel_raw(m, d)
    out = np.empty(N.shape, dtype=object)
    flat_in = N.reshape(-1)
    flat_out = out.reshape(-1)
    for i in range(flat_in.size):
        flat_out[i] = Fraction(int(flat_in[i]), den)
    return out


def act_on_power(t, d):
    """The operator on V^(x)m applying each gl factor to its own slot.

    Accepts the (v_1, w_1, ...)-indexed tensor and returns the d^m x d^m
    matrix with rows indexed by the v multi-index.
    """
    m = t.ndim // 2
    if t.shape != (d,) * (2 * m):
        raise ValueError("shape mismatch")
    order = list(range(0, 2 * m, 2)) + list(range(1, 2 * m, 2))
    return np.transpose(t, axes=order).reshape(d ** m, d ** m)


def perm_matrix(perm, d):
    """Slot permutation on V^(x)m: basis e_{j_1}(x)...(x)e_{j_m} -> slot s(k) gets j_k."""
    m = perm.n
    _guard(m, d)
    size = d ** m
    P = np.zeros((size, size), dtype=np.int64)
    for j in product(range(d), repeat=m):
        i = [0] * m
        for k in range(m):
            i[perm.images[k] - 1] = j[k]
        row = 0
        for x in i:
            row = row * d + x
        col = 0
        for x in j:
            col = col * d + x
        P[row, col] = 1
    return P


def perm_action(u, d):
    """Linear extension of slot permutation to a group algebra element."""
    m = u.n
    size = d ** m
    dens = [c.denominator for c in u.coeffs.values()]
    if all(x == 1 for x in dens):
        M = np.zeros((size, size), dtype=np.int64)
        for p, c in u.coeffs.items():
            M += int(c) * perm_matrix(p, d)
        return M
    M = np.full((size, size), Fraction(0), dtype=object)
    for p, c in u.coeffs.items():
        M = M + c * perm_matrix(p, d).astype(object)
    return M


def ad_transform(X, T):
    """Diagonal ad-action of the d x d matrix X on a gl(V)^(x)m tensor."""
    m = T.ndim // 2
    out = np.zeros_like(T)
    for k in range(m):
        v_axis, w_axis = 2 * k, 2 * k + 1
        # X acting on the V leg
        term = np.tensordot(X, T, axes=([1], [v_axis]))
        out += np.moveaxis(term, 0, v_axis)
        # -X^T acting on the V* leg
        term = np.tensordot(T, X, axes=([w_axis], [0]))
        out -= np.moveaxis(term, -1, w_axis)
    return out


def verify_wheel_action(m, d):
    """Exact check of act(x_m) = e_m-action / (m-1)!.

    Returns (passed, ratio) where ratio is the measured scalar relating the
    two operators (None when both vanish); a mismatch reports the measured
    ratio instead of silently renormalising.
    """
    from .symgrp import e_element

    N, den = alt2_wheel_raw(m, d)        # x_m = N / m!
    left = act_on_power(N, d)            # act(x_m) * m!
    e_act = perm_action(e_element(m), d)
    expected_ratio = Fraction(1, factorial(m - 1))
    # act(x_m) = left/m!; target e_act/(m-1)!; equality iff left == m * e_act
    if np.array_equal(left, m * e_act):
        if not left.any() and not e_act.any():
            return True, None
        return True, expected_ratio
    # measure the actual proportionality constant, if any
    nz = np.argwhere(e_act != 0)
    if nz.size:
        i, j = nz[0]
        measured = Fraction(int(left[i, j]), den) / Fraction(int(e_act[i, j]))
        if np.array_equal(left * e_act[i, j], e_act * left[i, j]):
            return False, measured
    return False, None


def wheel_vanishing_table(max_m, max_d):
    """(m, d) -> bool: whether x_m = 0, over the requested grid."""
    out = {}
    for d in range(1, max_d + 1):
        for m in range(1, max_m + 1):
            N, _ = alt2_wheel_raw(m, d)
            out[(m, d)] = not N.any()
    return out


# ---------------------------------------------------------------------------
# exterior invariants


def _wedge_basis(dim, m):
    return list(combinations(range(dim), m))


def _ad_wedge_matrix(g, xi, m):
    """ad(e_xi) on the m-th exterior power of g, in the sorted-tuple basis."""
    basis = _wedge_basis(g.dim, m)
    index = {b: i for i, b in enumerate(basis)}
    ent = {}
    for col, tup in enumerate(basis):
        for slot, i in enumerate(tup):
            for j, c in enumerate(g.table[xi][i]):
                if not c:
                    continue
                if j in tup and j != i:
                    continue
                rest = tup[:slot] + tup[slot + 1:]
                merged = tuple(sorted(rest + (j,)))
                # j starts at position `slot` in the wedge word; sort it in
                sign = (-1) ** slot * _insertion_sign(rest, j)
                key = (index[merged], col)
                s = ent.get(key, 0) + sign * c
                if s:
                    ent[key] = s
                else:
                    ent.pop(key, None)
    n = len(basis)
    return SparseMatrix(n, n, ent)


def _insertion_sign(sorted_rest, j):
    # sign of sorting j into place within the increasing tuple
    pos = sum(1 for x in sorted_rest if x < j)
    return (-1) ** pos


def exterior_invariants_dims(g, maxdeg):
    """dim of the ad-invariants of each exterior power, degrees 0..maxdeg."""
    out = [1]
    for m in range(1, maxdeg + 1):
        basis = _wedge_basis(g.dim, m)
        if not basis:
            out.append(0)
            continue
        mats = [_ad_wedge_matrix(g, xi, m) for xi in range(g.dim)]
        out.append(kernel_basis(_vstack(mats)).dim)
    return out


# ---------------------------------------------------------------------------
# current algebras g (x) k[x]


def _current_bracket(g, a, b):
    """Bracket on g (x) k[x]: [(i,s), (j,u)] supported in x-degree s+u."""
    (i, s), (j, u) = a, b
    return [((k, s + u), c) for k, c in enumerate(g.table[i][j]) if c]


def current_invariants_dims(g, x_degree_bound, maxdeg, check_extra_power=False):
    """Invariant dims of the exterior powers of g (x) span{1..x^D}.

    Invariance is imposed under ad(xi (x) x^s) for s = 0..m (plus s = m+1
    when ``check_extra_power``); the images live in the larger window
    D + s, which is handled exactly.  Returns (dims, expected, agree) where
    expected counts the exterior powers of z(g) (x) span{1..x^D}.
    """
    D = x_degree_bound
    zdim = g.center().dim
    dims = [1]
    expected = [1]
    for m in range(1, maxdeg + 1):
        dom_labels = [(i, s) for s in range(D + 1) for i in range(g.dim)]
        dom_index = {l: i for i, l in enumerate(dom_labels)}
        dom_basis = list(combinations(range(len(dom_labels)), m))
        s_max = m + 1 if check_extra_power else m
        tgt_labels = [(i, s) for s in range(D + s_max + 1) for i in range(g.dim)]
        tgt_index = {l: i for i, l in enumerate(tgt_labels)}

        rows = {}
        for xi in range(g.dim):
            for s in range(s_max + 1):
                op = (xi, s)
                for col, tup in enumerate(dom_basis):
                    labels = [dom_labels[t] for t in tup]
                    for slot in range(m):
                        for lbl, c in _current_bracket(g, op, labels[slot]):
                            new = labels[:slot] + [lbl] + labels[slot + 1:]
                            idxs = [tgt_index[l] for l in new]
                            if len(set(idxs)) < m:
                                continue
                            sign = _sort_sign(idxs)
                            key_tuple = tuple(sorted(idxs))
                            row_key = (xi, s, key_tuple)
                            row = rows.setdefault(row_key, {})
                            val = row.get(col, 0) + sign * c
                            if val:
                                row[col] = val
                            else:
                                row.pop(col, None)
        mat = SparseMatrix.from_row_dicts(list(rows.values()), len(dom_basis))
        dims.append(kernel_basis(mat).dim)
        expected.append(_binom(zdim * (D + 1), m))
    return dims, expected, dims == expected


def _sort_sign(seq):
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _binom(n, k):
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


# ---------------------------------------------------------------------------
# the cubic route to the invariants of tensor powers


def _flat_index(idx, base):
    out = 0
    for x in idx:
        out = out * base + x
    return out


def cohomology_of_rep_category_graded(g, n, backend="modular", rng=None):
    """Top cubic cohomology of the S_n-module of adjoint invariants in g^(x)n.

    Computed entirely through the cubic machinery, independently of
    :func:`exterior_invariants_dims`; the two routes must agree degreewise.
    The top value is additionally cross-checked against the direct quotient
    M / sum (1 + t_i) M.
    """
    dim = g.dim ** n
    if dim > 100_000:
        raise ResourceLimitError("g^(x)%d too large" % n)
    mats = []
    for xi in range(g.dim):
        A = g.ad_matrix(xi)
        cols_of_A = A.col_dicts()
        ent = {}
        for idx in product(range(g.dim), repeat=n):
            col = _flat_index(idx, g.dim)
            for k in range(n):
                for r, v in cols_of_A[idx[k]].items():
                    j = list(idx)
                    j[k] = r
                    key = (_flat_index(j, g.dim), col)
                    s = ent.get(key, 0) + v
                    if s:
                        ent[key] = s
                    else:
                        ent.pop(key, None)
        mats.append(SparseMatrix(dim, dim, ent))
    invariants = kernel_basis(_vstack(mats))

    if n == 1:
        return invariants.dim
    gens = []
    for k in range(1, n):
        swap_ent = {}
        for idx in product(range(g.dim), repeat=n):
            j = list(idx)
            j[k - 1], j[k] = j[k], j[k - 1]
            swap_ent[(_flat_index(j, g.dim), _flat_index(idx, g.dim))] = Fraction(1)
        T = SparseMatrix(dim, dim, swap_ent)
        mat_ent = {}
        for col, vec in enumerate(invariants.basis()):
            img = T.apply(vec)
            for r, c in enumerate(invariants.coords_of(img)):
                if c:
                    mat_ent[(r, col)] = c
        gens.append(SparseMatrix(invariants.dim, invariants.dim, mat_ent))
    module = SnModule(n, invariants.dim, gens, name="(g^%d)^g" % n)
    top = cubic_cohomology(cubic_invariants_diagram(module), backend=backend, rng=rng)[n - 1]
    independent = top_quotient(module, backend=backend, rng=rng)
    if top != independent:
        raise CrossCheckError("cubic top %d != direct quotient %d" % (top, independent))
    return top
