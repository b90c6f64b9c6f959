"""Multiplicative sequences of algebras and their three bundled instances.

A multiplicative sequence assigns to every level n a finite-dimensional
unital algebra A_n together with pairings mu_{m,n}: A_m (x) A_n -> A_{m+n}
that are unital algebra maps and associative across levels.  Bundled here:

* ``SymmetricGroupSequence``  - A_n = Q[S_n], mu = block placement;
* ``SkewGroupSequence``       - A_n = A^(x)n * S_n for a commutative A;
* ``HeckeSequence``           - degree-truncated degenerate affine Hecke
  algebras with generators t_i, y_j and the relation y_i t_i - t_i y_{i+1} = 1.

Basis orders are fixed (permutations lexicographic; skew by (multi-index,
permutation); Hecke graded-lexicographic), so every matrix downstream is
reproducible bit for bit.
"""

import json
from fractions import Fraction
from itertools import product

from . import ResourceLimitError, TruncationOverflowError
from .linalg import SparseMatrix
from .symgrp import (
    GroupAlgebraElement,
    Permutation,
    all_permutations,
    compose,
    young_positions,
)


class AlgebraElement:
    """Sparse element of a sequence level: {basis label: Fraction}, no zeros."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level, coeffs=None):
        self.level = level
        self.coeffs = {}
        if coeffs:
            for l, c in coeffs.items():
                c = Fraction(c)
                if c:
                    self.coeffs[l] = c

    @classmethod
    def make(cls, level, mapping):
        return cls(level, mapping)

    def items(self):
        return self.coeffs.items()

    def is_zero(self):
        return not self.coeffs

    def scale(self, c):
        c = Fraction(c)
        return AlgebraElement(self.level, {l: c * v for l, v in self.coeffs.items()})

    def __add__(self, other):
        if self.level != other.level:
            raise ValueError("level mismatch")
        out = dict(self.coeffs)
        for l, c in other.coeffs.items():
            s = out.get(l, 0) + c
            if s:
                out[l] = s
            else:
                out.pop(l, None)
        return AlgebraElement(self.level, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement)
                and self.level == other.level and self.coeffs == other.coeffs)

    def __repr__(self):
        return "AlgebraElement(level=%d, %d terms)" % (self.level, len(self.coeffs))


class MultiplicativeSequence:
    """Shared bilinear plumbing; subclasses provide basis-level products."""

    seq_id = "abstract"
    generated_by_first_two = True

    def __init__(self, level_cap):
        self.level_cap = level_cap
        self._basis_cache = {}
        self._index_cache = {}

    # -- subclass surface -------------------------------------------------
    def _build_basis(self, n):
        raise NotImplementedError

    def _mul_basis_raw(self, n, la, lb):
        """Product of two basis labels as a raw {label: Fraction} dict.

        Labels in the result may fall outside the representable basis; the
        caller decides whether surviving ones are an error.
        """
        raise NotImplementedError

    def _mu_basis_label(self, m, n, la, lb):
        """mu of two basis labels; for the bundled sequences a single label."""
        raise NotImplementedError

    def one(self, n):
        raise NotImplementedError

    def _label_ok(self, n, label):
        return True

    # -- generic operations ------------------------------------------------
    def check_level(self, n):
        if n < 0:
            raise ValueError("negative level")
        if n > self.level_cap:
            raise ResourceLimitError(
                "%s: level %d exceeds cap %d" % (self.seq_id, n, self.level_cap))

    def basis(self, n):
        self.check_level(n)
        if n not in self._basis_cache:
            self._basis_cache[n] = tuple(self._build_basis(n))
        return self._basis_cache[n]

    def dim(self, n):
        return len(self.basis(n))

    def index_of(self, n):
        if n not in self._index_cache:
            self._index_cache[n] = {l: i for i, l in enumerate(self.basis(n))}
        return self._index_cache[n]

    def multiply(self, n, u, v):
        """Bilinear product in A_n; raises if a surviving term is unrepresentable."""
        if u.level != n or v.level != n:
            raise ValueError("operands not at level %d" % n)
        acc = {}
        for la, ca in u.coeffs.items():
            for lb, cb in v.coeffs.items():
                for l, c in self._mul_basis_raw(n, la, lb).items():
                    s = acc.get(l, 0) + ca * cb * c
                    if s:
                        acc[l] = s
                    else:
                        acc.pop(l, None)
        for l in acc:
            if not self._label_ok(n, l):
                raise TruncationOverflowError(
                    "%s: product leaves the representable window at %r"
                    % (self.seq_id, l))
        return AlgebraElement.make(n, acc)

    def mu(self, m, n, u, v):
        """The pairing A_m (x) A_n -> A_{m+n} applied to a pure tensor."""
        if u.level != m or v.level != n:
            raise ValueError("operands not at levels (%d, %d)" % (m, n))
        self.check_level(m + n)
        acc = {}
        for la, ca in u.coeffs.items():
            for lb, cb in v.coeffs.items():
                label = self._mu_basis_label(m, n, la, lb)
                s = acc.get(label, 0) + ca * cb
                if s:
                    acc[label] = s
                else:
                    acc.pop(label, None)
        return AlgebraElement.make(m + n, acc)

    def subalgebra_generators(self, comp):
        raise NotImplementedError

    # -- coordinates -------------------------------------------------------
    def element_to_vec(self, u):
        idx = self.index_of(u.level)
        return {idx[l]: c for l, c in u.coeffs.items()}

    def vec_to_element(self, n, vec):
        basis = self.basis(n)
        return AlgebraElement.make(n, {basis[i]: c for i, c in vec.items() if c})

    def basis_element(self, n, i):
        return AlgebraElement.make(n, {self.basis(n)[i]: Fraction(1)})

    def left_mult_matrix(self, n, u):
        idx = self.index_of(n)
        ent = {}
        for j, label in enumerate(self.basis(n)):
            prod_el = self.multiply(n, u, self.basis_element(n, j))
            for l, c in prod_el.coeffs.items():
                ent[(idx[l], j)] = c
        return SparseMatrix(self.dim(n), self.dim(n), ent)

    def right_mult_matrix(self, n, u):
        idx = self.index_of(n)
        ent = {}
        for j, label in enumerate(self.basis(n)):
            prod_el = self.multiply(n, self.basis_element(n, j), u)
            for l, c in prod_el.coeffs.items():
                ent[(idx[l], j)] = c
        return SparseMatrix(self.dim(n), self.dim(n), ent)

    def commutator_matrix(self, n, u):
        """Matrix of a -> [u, a] = ua - au on A_n."""
        L = self.left_mult_matrix(n, u)
        R = self.right_mult_matrix(n, u)
        ent = dict(L.entries)
        for key, v in R.entries.items():
            s = ent.get(key, 0) - v
            if s:
                ent[key] = s
            else:
                ent.pop(key, None)
        return SparseMatrix(L.rows, L.cols, ent)


# ---------------------------------------------------------------------------
# Q[S_*]


class SymmetricGroupSequence(MultiplicativeSequence):
    """Group algebras of the symmetric groups with block-placement pairings."""

    seq_id = "symmetric"

    def __init__(self, level_cap=8):
        super().__init__(level_cap)

    def _build_basis(self, n):
        return all_permutations(n, cap=self.level_cap)

    def one(self, n):
        return AlgebraElement.make(n, {Permutation.identity(n): 1})

    def _mul_basis_raw(self, n, la, lb):
        return {compose(la, lb): Fraction(1)}

    def _mu_basis_label(self, m, n, la, lb):
        img = la.images + tuple(v + m for v in lb.images)
        return Permutation(img)

    def subalgebra_generators(self, comp):
        n = comp.weight
        self.check_level(n)
        return [AlgebraElement.make(n, {Permutation.transposition(n, i): 1})
                for i in young_positions(comp)]

    def from_group_algebra(self, el):
        return AlgebraElement.make(el.n, dict(el.coeffs))

    def to_group_algebra(self, u):
        return GroupAlgebraElement(u.level, dict(u.coeffs))


# ---------------------------------------------------------------------------
# commutative coefficient algebras and skew group algebras


class CommutativeAlgebraSpec:
    """Commutative associative unital algebra given by structure constants.

    ``table[i][j]`` holds the coordinates of e_i * e_j; commutativity,
    associativity and the unit law are verified at construction.
    """

    def __init__(self, dim, table, unit, name="A"):
        self.dim = dim
        self.name = name
        self.table = tuple(tuple(tuple(Fraction(x) for x in row) for row in block)
                           for block in table)
        self.unit = tuple(Fraction(x) for x in unit)
        if len(self.table) != dim or any(len(b) != dim for b in self.table) \
                or any(len(r) != dim for b in self.table for r in b):
            raise ValueError("structure table must be dim^3")
        if len(self.unit) != dim:
            raise ValueError("unit must have dim coordinates")
        self._validate()

    def _validate(self):
        d = self.dim
        for i in range(d):
            for j in range(i + 1, d):
                if self.table[i][j] != self.table[j][i]:
                    raise ValueError("structure constants are not commutative")
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    left = self.mul_coords(self.table[i][j], self._basis_vec(k))
                    right = self.mul_coords(self._basis_vec(i), self.table[j][k])
                    if left != right:
                        raise ValueError("structure constants are not associative")
        for i in range(d):
            if self.mul_coords(self.unit, self._basis_vec(i)) != self._basis_vec(i):
                raise ValueError("unit law fails")

    def _basis_vec(self, i):
        return tuple(Fraction(1) if j == i else Fraction(0) for j in range(self.dim))

    def mul_coords(self, u, v):
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

    def unit_basis_index(self):
        """Index k when the unit is the basis vector e_k, else None."""
        ones = [k for k, c in enumerate(self.unit) if c]
        if len(ones) == 1 and self.unit[ones[0]] == 1:
            return ones[0]
        return None

    def probably_domain(self, rng, trials=64):
        """Heuristic zero-divisor scan; a pass is evidence, not proof."""
        for _ in range(trials):
            u = tuple(Fraction(rng.randint(-3, 3)) for _ in range(self.dim))
            v = tuple(Fraction(rng.randint(-3, 3)) for _ in range(self.dim))
            if any(u) and any(v) and not any(self.mul_coords(u, v)):
                return False
        return True

    @classmethod
    def quadratic(cls, c=2):
        """Q[x]/(x^2 - c); the default c = 2 gives a quadratic field."""
        c = Fraction(c)
        table = [[(1, 0), (0, 1)], [(0, 1), (c, 0)]]
        return cls(2, table, (1, 0), name="Q[x]/(x^2-%s)" % c)

    @classmethod
    def from_json(cls, doc):
        if isinstance(doc, str):
            with open(doc, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
        dim = doc["dim"]
        table = [[[Fraction(x) for x in row] for row in block] for block in doc["table"]]
        unit = [Fraction(x) for x in doc["unit"]]
        return cls(dim, table, unit, name=doc.get("name", "A"))

    def to_json(self):
        return {
            "dim": self.dim,
            "name": self.name,
            "table": [[[str(x) for x in row] for row in block] for block in self.table],
            "unit": [str(x) for x in self.unit],
        }


class SkewGroupSequence(MultiplicativeSequence):
    """A^(x)n twisted by the permutation action: (a,s)(b,t) = (a.s(b), st)."""

    seq_id = "skew"

    def __init__(self, algebra=None, level_cap=4):
        super().__init__(level_cap)
        self.algebra = algebra if algebra is not None else CommutativeAlgebraSpec.quadratic()

    def _build_basis(self, n):
        perms = all_permutations(n, cap=n)
        labels = []
        for a in product(range(self.algebra.dim), repeat=n):
            for p in perms:
                labels.append((a, p))
        return labels

    def one(self, n):
        acc = {}
        pid = Permutation.identity(n)
        for a in product(range(self.algebra.dim), repeat=n):
            c = Fraction(1)
            for i in a:
                c *= self.algebra.unit[i]
                if not c:
                    break
            if c:
                acc[(a, pid)] = c
        return AlgebraElement.make(n, acc)

    def _permute_tuple(self, p, a):
        inv = p.inverse()
        return tuple(a[inv.images[l] - 1] for l in range(len(a)))

    def _mul_basis_raw(self, n, la, lb):
        (a, p), (b, q) = la, lb
        bp = self._permute_tuple(p, b)
        r = compose(p, q)
        # slotwise product a_l * bp_l expanded through the structure constants
        partial = {(): Fraction(1)}
        for l in range(n):
            row = self.algebra.table[a[l]][bp[l]]
            nxt = {}
            for prefix, c in partial.items():
                for k, x in enumerate(row):
                    if x:
                        key = prefix + (k,)
                        nxt[key] = nxt.get(key, Fraction(0)) + c * x
            partial = nxt
        return {(key, r): c for key, c in partial.items() if c}

    def _mu_basis_label(self, m, n, la, lb):
        (a, p), (b, q) = la, lb
        img = p.images + tuple(v + m for v in q.images)
        return (a + b, Permutation(img))

    def subalgebra_generators(self, comp):
        n = comp.weight
        self.check_level(n)
        gens = []
        pid = Permutation.identity(n)
        unit_ix = self.algebra.unit_basis_index()
        for i in young_positions(comp):
            gens.append(self._group_element(n, Permutation.transposition(n, i)))
        for slot in range(n):
            for k in range(self.algebra.dim):
                if unit_ix is not None and k == unit_ix:
                    continue
                if unit_ix is not None:
                    a = tuple(k if l == slot else unit_ix for l in range(n))
                    gens.append(AlgebraElement.make(n, {(a, pid): 1}))
                else:
                    gens.append(self._slot_insertion(n, slot, k))
        return gens

    def _group_element(self, n, perm):
        one = self.one(n)
        return AlgebraElement.make(
            n, {(a, compose(p, perm)): c for (a, p), c in one.coeffs.items()})

    def _slot_insertion(self, n, slot, k):
        acc = {}
        pid = Permutation.identity(n)
        for a in product(range(self.algebra.dim), repeat=n):
            c = Fraction(1)
            for l, i in enumerate(a):
                if l == slot:
                    c *= Fraction(1) if i == k else Fraction(0)
                else:
                    c *= self.algebra.unit[i]
                if not c:
                    break
            if c:
                acc[(a, pid)] = c
        return AlgebraElement.make(n, acc)


# ---------------------------------------------------------------------------
# degree-truncated degenerate affine Hecke algebras


class HeckeSequence(MultiplicativeSequence):
    """Degenerate affine Hecke algebras on the basis y^a s, a_i <= D per slot.

    Products are rewritten to normal form exactly (intermediate terms are
    unbounded); a surviving term with some exponent beyond D raises
    ``TruncationOverflowError``.  The commutation calculus
    d_i(s) = y_i s - s y_{s^-1(i)} is exposed via :meth:`partial`.
    """

    seq_id = "hecke"

    def __init__(self, trunc_degree=3, level_cap=3):
        super().__init__(level_cap)
        self.trunc_degree = trunc_degree
        self._partial_cache = {}
        self._push_cache = {}

    def _build_basis(self, n):
        D = self.trunc_degree
        perms = all_permutations(n, cap=n)
        exps = sorted(product(range(D + 1), repeat=n), key=lambda a: (sum(a), a))
        return [(a, p) for a in exps for p in perms]

    def _label_ok(self, n, label):
        a, _ = label
        return all(x <= self.trunc_degree for x in a)

    def one(self, n):
        zero = tuple(0 for _ in range(n))
        return AlgebraElement.make(n, {(zero, Permutation.identity(n)): 1})

    # -- the d_i calculus --------------------------------------------------
    def partial(self, n, i, perm):
        """d_i(s) = y_i s - s y_{s^-1(i)} as an element of Q[S_n].

        Computed by the twisted Leibniz rule on a reduced word; always a
        group-algebra element of length strictly below l(s).
        """
        if not (1 <= i <= n):
            raise ValueError("index %d out of range" % i)
        key = (n, i, perm.images)
        hit = self._partial_cache.get(key)
        if hit is not None:
            return hit
        if perm.is_identity():
            out = {}
        else:
            j = self._left_descent(perm)
            rest = compose(Permutation.transposition(n, j), perm)
            # d_i(t_j rest) = d_i(t_j) rest + t_j d_{t_j(i)}(rest)
            out = {}
            base = self._partial_of_t(i, j)
            if base:
                out[rest] = Fraction(base)
            ti = i + 1 if i == j else (i - 1 if i == j + 1 else i)
            tj = Permutation.transposition(n, j)
            for q, c in self.partial(n, ti, rest).items():
                r = compose(tj, q)
                s = out.get(r, 0) + c
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        self._partial_cache[key] = out
        return out

    @staticmethod
    def _partial_of_t(i, j):
        if i == j:
            return 1
        if i == j + 1:
            return -1
        return 0

    @staticmethod
    def _left_descent(perm):
        inv = perm.inverse()
        for j in range(1, perm.n):
            if inv.images[j - 1] > inv.images[j]:
                return j
        raise AssertionError("non-identity permutation has a left descent")

    def _push(self, n, perm, b):
        """Normal form of s y^b as {(exps, permutation): Fraction}.

        Uses s y_j = y_{s(j)} s - d_{s(j)}(s) one variable at a time;
        exponents in the output may exceed the truncation window.
        """
        key = (n, perm.images, b)
        hit = self._push_cache.get(key)
        if hit is not None:
            return hit
        if not any(b):
            out = {(b, perm): Fraction(1)}
        else:
            j = next(k for k, x in enumerate(b) if x) + 1
            b2 = tuple(x - 1 if k == j - 1 else x for k, x in enumerate(b))
            sj = perm.images[j - 1]
            out = {}
            for (c, rho), v in self._push(n, perm, b2).items():
                cc = tuple(x + 1 if k == sj - 1 else x for k, x in enumerate(c))
                keyc = (cc, rho)
                s = out.get(keyc, 0) + v
                if s:
                    out[keyc] = s
                else:
                    out.pop(keyc, None)
            for tau, d in self.partial(n, sj, perm).items():
                for (c, rho), v in self._push(n, tau, b2).items():
                    keyc = (c, rho)
                    s = out.get(keyc, 0) - d * v
                    if s:
                        out[keyc] = s
                    else:
                        out.pop(keyc, None)
        self._push_cache[key] = out
        return out

    def _mul_basis_raw(self, n, la, lb):
        (a, p), (b, q) = la, lb
        out = {}
        for (c, rho), v in self._push(n, p, b).items():
            exps = tuple(x + y for x, y in zip(a, c))
            label = (exps, compose(rho, q))
            s = out.get(label, 0) + v
            if s:
                out[label] = s
            else:
                out.pop(label, None)
        return out

    def _mu_basis_label(self, m, n, la, lb):
        (a, p), (b, q) = la, lb
        img = p.images + tuple(v + m for v in q.images)
        return (a + b, Permutation(img))

    def subalgebra_generators(self, comp):
        n = comp.weight
        self.check_level(n)
        gens = []
        zero = tuple(0 for _ in range(n))
        for i in young_positions(comp):
            gens.append(AlgebraElement.make(
                n, {(zero, Permutation.transposition(n, i)): 1}))
        for i in range(n):
            e = tuple(1 if k == i else 0 for k in range(n))
            gens.append(AlgebraElement.make(n, {(e, Permutation.identity(n)): 1}))
        return gens

    # -- word interface ----------------------------------------------------
    def generator(self, n, kind, i):
        """The generator t_i or y_i of level n as an element."""
        zero = tuple(0 for _ in range(n))
        if kind == "t":
            return AlgebraElement.make(
                n, {(zero, Permutation.transposition(n, i)): 1})
        if kind == "y":
            if not (1 <= i <= n):
                raise ValueError("y_%d undefined at level %d" % (i, n))
            e = tuple(1 if k == i - 1 else 0 for k in range(n))
            return AlgebraElement.make(n, {(e, Permutation.identity(n)): 1})
        raise ValueError("unknown generator kind %r" % kind)

    def normal_form(self, word, n):
        """Product of a generator word, e.g. [("y",1),("t",1)], in normal form."""
        el = self.one(n)
        for kind, i in word:
            el = self.multiply(n, el, self.generator(n, kind, i))
        return el


def bundled_sequence(seq_id, algebra=None, trunc_degree=3, level_caps=None):
    """Construct one of the three bundled sequences by identifier."""
    caps = level_caps or {}
    if seq_id == "symmetric":
        return SymmetricGroupSequence(level_cap=caps.get("symmetric", 8))
    if seq_id == "skew":
        return SkewGroupSequence(algebra=algebra, level_cap=caps.get("skew", 4))
    if seq_id == "hecke":
        return HeckeSequence(trunc_degree=trunc_degree,
                             level_cap=caps.get("hecke", 3))
    raise ValueError("unknown sequence %r" % seq_id)
