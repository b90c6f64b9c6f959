"""Permutations, group algebra elements and sign-twisted class functions.

Conventions, fixed once and asserted by tests:

* one-line notation on {1..n}; ``compose(p, q)`` is the map i -> p(q(i));
* ``t(i)`` is the adjacent transposition (i, i+1);
* ``conjugate(p, s)`` is s p s^-1, which relabels points by s;
* the m-cycle t(1)t(2)...t(m-1) is (1, 2, ..., m).

Sign-twisted class functions (f(s p s^-1) = sign(s) f(p)) live on
conjugacy classes whose centraliser contains no odd permutation; the basis
is produced by a breadth-first sweep of each class that tracks signs and
aborts on inconsistency, so a wrong conjugation convention cannot silently
flip values.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _it_permutations

from . import ResourceLimitError

ENUMERATION_CAP = 8      # largest n for which S_n is materialised element by element
COUNTING_CAP = 14        # class-based dimension counts avoid enumeration up to here


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n} in one-line notation."""

    images: tuple

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError("not a permutation of 1..%d: %r" % (n, self.images))

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n, i):
        """The adjacent transposition t_i = (i, i+1) inside S_n."""
        if not (1 <= i <= n - 1):
            raise ValueError("t_%d undefined in S_%d" % (i, n))
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        return cls(tuple(img))

    @classmethod
    def cycle(cls, n, points):
        """The cycle sending points[0] -> points[1] -> ... -> points[0]."""
        img = list(range(1, n + 1))
        pts = list(points)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a - 1] = b
        return cls(tuple(img))

    def is_identity(self):
        return all(v == i + 1 for i, v in enumerate(self.images))

    def inverse(self):
        img = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            img[v - 1] = i
        return Permutation(tuple(img))

    def sign(self):
        seen = [False] * self.n
        sgn = 1
        for i in range(self.n):
            if seen[i]:
                continue
            j = i
            length = 0
            while not seen[j]:
                seen[j] = True
                j = self.images[j] - 1
                length += 1
            if length % 2 == 0:
                sgn = -sgn
        return sgn

    def cycle_type(self):
        """Cycle lengths in decreasing order (a partition of n)."""
        seen = [False] * self.n
        lengths = []
        for i in range(self.n):
            if seen[i]:
                continue
            j = i
            length = 0
            while not seen[j]:
                seen[j] = True
                j = self.images[j] - 1
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def inversions(self):
        img = self.images
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n)
                   if img[i] > img[j])


def compose(p, q):
    """(p.q)(i) = p(q(i))."""
    if p.n != q.n:
        raise ValueError("size mismatch")
    return Permutation(tuple(p.images[q.images[i] - 1] for i in range(p.n)))


def conjugate(p, s):
    """s p s^-1."""
    if p.n != s.n:
        raise ValueError("size mismatch")
    img = [0] * p.n
    for i in range(1, p.n + 1):
        img[s.images[i - 1] - 1] = s.images[p.images[i - 1] - 1]
    return Permutation(tuple(img))


def conjugate_tuple_by_t(img, i):
    """t_i p t_i on a one-line tuple: swap positions i, i+1, then values i, i+1."""
    lst = list(img)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    for k, v in enumerate(lst):
        if v == i:
            lst[k] = i + 1
        elif v == i + 1:
            lst[k] = i
    return tuple(lst)


def conjugate_by_t(p, i):
    return Permutation(conjugate_tuple_by_t(p.images, i))


@lru_cache(maxsize=None)
def all_permutations(n, cap=ENUMERATION_CAP):
    """All of S_n in lexicographic one-line order."""
    if n > cap:
        raise ResourceLimitError("refusing to enumerate S_%d (cap %d)" % (n, cap))
    return tuple(Permutation(p) for p in _it_permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def perm_index(n):
    """Map permutation -> position in the lexicographic enumeration."""
    return {p: i for i, p in enumerate(all_permutations(n))}


class GroupAlgebraElement:
    """Sparse element of Q[S_n]: {Permutation: Fraction}, no stored zeros."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        self.n = n
        self.coeffs = {}
        if coeffs:
            for p, c in coeffs.items():
                if p.n != n:
                    raise ValueError("element of S_%d in Q[S_%d]" % (p.n, n))
                c = Fraction(c)
                if c:
                    self.coeffs[p] = c

    @classmethod
    def unit(cls, n):
        return cls(n, {Permutation.identity(n): Fraction(1)})

    @classmethod
    def of(cls, p):
        return cls(p.n, {p: Fraction(1)})

    def __add__(self, other):
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            s = out.get(p, 0) + c
            if s:
                out[p] = s
            else:
                out.pop(p, None)
        return GroupAlgebraElement(self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return GroupAlgebraElement(self.n, {p: c * v for p, v in self.coeffs.items()})

    def __mul__(self, other):
        out = {}
        for p, a in self.coeffs.items():
            for q, b in other.coeffs.items():
                r = compose(p, q)
                s = out.get(r, 0) + a * b
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return GroupAlgebraElement(self.n, out)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, GroupAlgebraElement)
                and self.n == other.n and self.coeffs == other.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for p, c in sorted(self.coeffs.items(), key=lambda kv: kv[0].images):
            bits.append("%s*%r" % (c, p.images))
        return " + ".join(bits)


def young_positions(comp):
    """Indices i with i and i+1 in the same interval part of the composition."""
    out = []
    pos = 0
    for p in comp.parts:
        out.extend(range(pos + 1, pos + p))
        pos += p
    return out


def young_generators(comp):
    """Adjacent transpositions generating S_{l1} x ... x S_{lr} inside S_n."""
    n = comp.weight
    return [Permutation.transposition(n, i) for i in young_positions(comp)]


# ---------------------------------------------------------------------------
# sign-twisted class functions


def partitions(n, max_part=None):
    """Partitions of n as decreasing tuples (cycle types of S_n)."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for p in range(min(n, max_part), 0, -1):
        for rest in partitions(n - p, p):
            out.append((p,) + rest)
    return out


def class_representative(n, ctype):
    """Canonical representative with cycles on consecutive blocks of points."""
    img = list(range(1, n + 1))
    pos = 1
    for length in ctype:
        for k in range(length):
            img[pos - 1 + k] = pos + (k + 1) % length
        pos += length
    return Permutation(tuple(img))


def signed_orbit_tuples(n, rep):
    """BFS over the conjugacy class of ``rep`` by the t_i, tracking signs.

    Returns {one-line tuple: +-1} with value sign(s) on s rep s^-1, or None
    when no consistent assignment exists (the class centraliser contains an
    odd permutation).
    """
    values = {rep: 1}
    frontier = [rep]
    while frontier:
        nxt = []
        for p in frontier:
            v = values[p]
            for i in range(1, n):
                q = conjugate_tuple_by_t(p, i)
                w = values.get(q)
                if w is None:
                    values[q] = -v
                    nxt.append(q)
                elif w != -v:
                    return None
        frontier = nxt
    return values


def signed_orbit(rep):
    """Permutation-keyed variant of :func:`signed_orbit_tuples`."""
    values = signed_orbit_tuples(rep.n, rep.images)
    if values is None:
        return None
    return {Permutation(t): v for t, v in values.items()}


def has_distinct_odd_type(ctype):
    return all(p % 2 == 1 for p in ctype) and len(set(ctype)) == len(ctype)


def signed_class_dim(n):
    """dim of the space of sign-twisted class functions on S_n.

    Up to the enumeration cap this is established by the orbit sweep itself;
    beyond it (n <= COUNTING_CAP) the cycle-type criterion - all parts odd
    and pairwise distinct - is used without touching the group.
    """
    if n == 0:
        return 1
    if n <= ENUMERATION_CAP:
        return sum(1 for ct in partitions(n)
                   if signed_orbit(class_representative(n, ct)) is not None)
    if n <= COUNTING_CAP:
        return sum(1 for ct in partitions(n) if has_distinct_odd_type(ct))
    raise ResourceLimitError("signed_class_dim capped at n=%d" % COUNTING_CAP)


@dataclass(frozen=True)
class SignedClassFunction:
    """f: S_n -> Q supported on one conjugacy class, with f(sps^-1) = sign(s)f(p)."""

    n: int
    cycle_type: tuple
    values: dict

    def __call__(self, p):
        return self.values.get(p, Fraction(0))


def signed_class_basis(n):
    """One sign-twisted indicator per admissible class, in partition order."""
    out = []
    for ct in sorted(partitions(n), reverse=True):
        orbit = signed_orbit(class_representative(n, ct))
        if orbit is not None:
            out.append(SignedClassFunction(
                n, ct, {p: Fraction(v) for p, v in orbit.items()}))
    return out


def long_cycle(m):
    """t_1 t_2 ... t_{m-1} = (1, 2, ..., m)."""
    p = Permutation.identity(m)
    for i in range(1, m):
        p = compose(p, Permutation.transposition(m, i))
    return p


def e_element(m):
    """The distinguished element supported on the m-cycle class.

    Coefficients follow the sign-twist rule from the class representative
    t_1...t_{m-1}; for even m the sweep finds an inconsistency and the
    element is zero.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return GroupAlgebraElement.unit(1)
    orbit = signed_orbit(long_cycle(m))
    if orbit is None:
        return GroupAlgebraElement(m)
    return GroupAlgebraElement(m, {p: Fraction(v) for p, v in orbit.items()})
