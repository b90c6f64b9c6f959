"""Centralizer diagrams and the cohomology of Schur-Weyl deformation complexes.

The degree-n component of the deformation complex of a multiplicative
sequence splits as a direct sum of centralizers C(lambda) indexed by
compositions lambda.  The weight filtration slices it into horizontal
complexes shaped like cubes (one per weight w, occupying degrees 1..w); for
the bundled sequences these are acyclic away from the top, which collapses
everything onto the one-row reduced complex

    T_w = C(1,...,1) / sum_j C(1,..,2,..,1)

with differential induced by a -> mu(1 (x) a) + (-1)^(w+1) mu(a (x) 1).
Every collapse used here is recomputed, not assumed: the truncated full
complex, the horizontal complexes and the reduced complex are all built
explicitly and compared by the test suite.
"""

from fractions import Fraction

from . import CrossCheckError, ResourceLimitError
from .combinat import Composition, compositions, subdivisions, to_binary
from .linalg import (
    CochainComplex,
    QuotientSpace,
    SparseMatrix,
    Subspace,
    kernel_basis,
    rank,
    subspace_sum,
)
from .sequences import AlgebraElement, SymmetricGroupSequence
from .symgrp import (
    Permutation,
    all_permutations,
    class_representative,
    conjugate_tuple_by_t,
    has_distinct_odd_type,
    partitions,
    signed_orbit_tuples,
    young_positions,
)

# weights above this use the conjugation-orbit route for Q[S_*]
SYMMETRIC_MATRIX_MAX_WEIGHT = 6
# largest symmetric group swept for the dual differential check
SYMMETRIC_DUAL_CAP = 9


def _vstack(mats):
    cols = mats[0].cols
    ent = {}
    off = 0
    for m in mats:
        if m.cols != cols:
            raise ValueError("column mismatch in vstack")
        for (i, j), v in m.entries.items():
            ent[(i + off, j)] = v
        off += m.rows
    return SparseMatrix(off, cols, ent)


# ---------------------------------------------------------------------------
# S_n-modules given by generator matrices


class SnModule:
    """An S_n-module presented by the matrices of t_1..t_{n-1}.

    The involution, braid and distant-commutation relations are checked at
    construction, so a bad presentation fails fast.
    """

    def __init__(self, n, dim, gens, name="M"):
        self.n = n
        self.dim = dim
        self.gens = list(gens)
        self.name = name
        if len(self.gens) != n - 1:
            raise ValueError("need %d generator matrices" % (n - 1))
        eye = SparseMatrix.identity(dim)
        for i, T in enumerate(self.gens, start=1):
            if T.rows != dim or T.cols != dim:
                raise ValueError("generator %d has wrong shape" % i)
            if T.matmul(T).entries != eye.entries:
                raise ValueError("t_%d is not an involution" % i)
        for i in range(1, n - 1):
            a, b = self.gens[i - 1], self.gens[i]
            if a.matmul(b).matmul(a).entries != b.matmul(a).matmul(b).entries:
                raise ValueError("braid relation fails at %d" % i)
        for i in range(1, n - 1):
            for j in range(i + 2, n):
                a, b = self.gens[i - 1], self.gens[j - 1]
                if a.matmul(b).entries != b.matmul(a).entries:
                    raise ValueError("t_%d, t_%d do not commute" % (i, j))

    @classmethod
    def trivial(cls, n):
        return cls(n, 1, [SparseMatrix.identity(1) for _ in range(n - 1)], "triv")

    @classmethod
    def sign(cls, n):
        neg = SparseMatrix(1, 1, {(0, 0): Fraction(-1)})
        return cls(n, 1, [neg for _ in range(n - 1)], "sign")

    @classmethod
    def natural(cls, n):
        gens = []
        for i in range(1, n):
            ent = {(k, k): Fraction(1) for k in range(n) if k not in (i - 1, i)}
            ent[(i - 1, i)] = Fraction(1)
            ent[(i, i - 1)] = Fraction(1)
            gens.append(SparseMatrix(n, n, ent))
        return cls(n, n, gens, "perm")

    @classmethod
    def regular(cls, n):
        basis = all_permutations(n)
        index = {p: k for k, p in enumerate(basis)}
        gens = []
        for i in range(1, n):
            ent = {}
            for k, p in enumerate(basis):
                q = Permutation(tuple(_lmul_t(p.images, i)))
                ent[(index[q], k)] = Fraction(1)
            gens.append(SparseMatrix(len(basis), len(basis), ent))
        return cls(n, len(basis), gens, "regular")

    def tensor(self, other):
        if other.n != self.n:
            raise ValueError("group size mismatch")
        gens = [_kron(a, b) for a, b in zip(self.gens, other.gens)]
        return SnModule(self.n, self.dim * other.dim, gens,
                        "%s(x)%s" % (self.name, other.name))

    def direct_sum(self, other):
        if other.n != self.n:
            raise ValueError("group size mismatch")
        gens = []
        for a, b in zip(self.gens, other.gens):
            ent = dict(a.entries)
            for (i, j), v in b.entries.items():
                ent[(i + a.rows, j + a.cols)] = v
            gens.append(SparseMatrix(a.rows + b.rows, a.cols + b.cols, ent))
        return SnModule(self.n, self.dim + other.dim, gens,
                        "%s(+)%s" % (self.name, other.name))


def _lmul_t(img, i):
    lst = list(img)
    for k, v in enumerate(lst):
        if v == i:
            lst[k] = i + 1
        elif v == i + 1:
            lst[k] = i
    return lst


def _kron(a, b):
    ent = {}
    for (i1, j1), v in a.entries.items():
        for (i2, j2), w in b.entries.items():
            ent[(i1 * b.rows + i2, j1 * b.cols + j2)] = v * w
    return SparseMatrix(a.rows * b.rows, a.cols * b.cols, ent)


def random_module(n, rng, max_dim=8):
    """Seeded S_n-module built from permutation/sign/tensor constructions."""
    pool = [SnModule.trivial(n), SnModule.sign(n), SnModule.natural(n)]
    while True:
        kind = rng.randrange(4)
        if kind == 0:
            m = pool[rng.randrange(len(pool))]
        elif kind == 1:
            m = pool[rng.randrange(len(pool))].direct_sum(pool[rng.randrange(len(pool))])
        elif kind == 2:
            m = pool[rng.randrange(len(pool))].tensor(pool[rng.randrange(len(pool))])
        else:
            m = pool[rng.randrange(len(pool))].tensor(
                pool[rng.randrange(len(pool))]).direct_sum(pool[rng.randrange(len(pool))])
        if m.dim <= max_dim:
            return m


# ---------------------------------------------------------------------------
# centralizers


def centralizer(seq, comp, route="auto"):
    """C(lambda): elements of A_|lambda| commuting with the image subalgebra.

    For Q[S_*] the default route sums conjugation orbits of the Young
    subgroup; the generic route solves the commutant equations [a, g] = 0.
    The two agree and the test suite compares them on small levels.
    """
    cache = seq.__dict__.setdefault("_centralizer_cache", {})
    key = (comp.parts, route)
    if key in cache:
        return cache[key]
    if route == "auto":
        if isinstance(seq, SymmetricGroupSequence):
            out = _centralizer_orbits(seq, comp)
        else:
            out = _centralizer_commutant(seq, comp)
    elif route == "orbits":
        out = _centralizer_orbits(seq, comp)
    elif route == "commutant":
        out = _centralizer_commutant(seq, comp)
    else:
        raise ValueError("unknown route %r" % route)
    cache[key] = out
    return out


def _centralizer_commutant(seq, comp):
    """Kernel of the commutant equations [g, a] = 0 over the generators.

    The commutators are accumulated in the untruncated label space: a
    coefficient that falls outside the representable window is still a
    linear constraint on a, never an error.
    """
    n = comp.weight
    dim = seq.dim(n)
    gens = seq.subalgebra_generators(comp)
    if not gens:
        return Subspace.full(dim)
    rows = {}
    for gi, g in enumerate(gens):
        for j, lb in enumerate(seq.basis(n)):
            acc = {}
            for gl, gc in g.coeffs.items():
                for l, c in seq._mul_basis_raw(n, gl, lb).items():
                    s = acc.get(l, 0) + gc * c
                    if s:
                        acc[l] = s
                    else:
                        acc.pop(l, None)
                for l, c in seq._mul_basis_raw(n, lb, gl).items():
                    s = acc.get(l, 0) - gc * c
                    if s:
                        acc[l] = s
                    else:
                        acc.pop(l, None)
            for l, c in acc.items():
                rows.setdefault((gi, l), {})[j] = c
    mat = SparseMatrix.from_row_dicts(list(rows.values()), dim)
    return kernel_basis(mat)


def _centralizer_orbits(seq, comp):
    if not isinstance(seq, SymmetricGroupSequence):
        raise ValueError("the conjugation-orbit route only applies to Q[S_*]")
    n = comp.weight
    index = {p.images: i for i, p in enumerate(seq.basis(n))}
    positions = young_positions(comp)
    if not positions:
        return Subspace.full(seq.dim(n))
    seen = set()
    vectors = []
    for start in index:
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for t in frontier:
                for i in positions:
                    q = conjugate_tuple_by_t(t, i)
                    if q not in orbit:
                        orbit.add(q)
                        nxt.append(q)
            frontier = nxt
        seen |= orbit
        vectors.append({index[t]: Fraction(1) for t in orbit})
    return Subspace.from_vectors(vectors, seq.dim(n))


# ---------------------------------------------------------------------------
# cubic diagrams and their complexes


class CubicDiagram:
    """Subspaces of one ambient space indexed by the vertices of a cube.

    Monotonicity (coarser vertex => smaller subspace) is verified edgewise
    at construction for weight <= 6 and spot-checked above.
    """

    def __init__(self, weight, ambient_dim, spaces, check=True):
        self.weight = weight
        self.ambient_dim = ambient_dim
        self.spaces = dict(spaces)
        for comp in compositions(weight):
            if to_binary(comp).bits not in self.spaces:
                raise ValueError("missing vertex %r" % (comp,))
        if check:
            self._check_containments()

    def space(self, comp):
        return self.spaces[to_binary(comp).bits]

    def _check_containments(self):
        comps = compositions(self.weight)
        exhaustive = self.weight <= 6
        for lam in comps:
            sub = self.space(lam)
            for k, (sign, mu) in enumerate(subdivisions(lam)):
                if not exhaustive and k % 3:
                    continue
                if not self.spaces[to_binary(mu).bits].contains_subspace(sub):
                    raise CrossCheckError(
                        "containment fails: C%r not inside C%r" % (lam.parts, mu.parts))


def cubic_invariants_diagram(module):
    """Vertices are the joint fixed spaces of the Young generators."""
    n = module.n
    eye = SparseMatrix.identity(module.dim)
    vertex = {}
    for comp in compositions(n):
        positions = young_positions(comp)
        if not positions:
            vertex[to_binary(comp).bits] = Subspace.full(module.dim)
            continue
        mats = []
        for i in positions:
            ent = dict(module.gens[i - 1].entries)
            for k in range(module.dim):
                s = ent.get((k, k), 0) - 1
                if s:
                    ent[(k, k)] = s
                else:
                    ent.pop((k, k), None)
            mats.append(SparseMatrix(module.dim, module.dim, ent))
        vertex[to_binary(comp).bits] = kernel_basis(_vstack(mats))
    return CubicDiagram(n, module.dim, vertex)


def centralizer_diagram(seq, w):
    """The cubic diagram of centralizers at weight w."""
    spaces = {to_binary(c).bits: centralizer(seq, c) for c in compositions(w)}
    return CubicDiagram(w, seq.dim(w), spaces)


def cubic_complex(diagram):
    """Cochain complex of a cubic diagram; degree k sums vertices with k ones."""
    w = diagram.weight
    layout = {k: [] for k in range(w)}
    for comp in compositions(w):
        layout[comp.length - 1].append(comp)
    dims = []
    offsets = {}
    for k in range(w):
        off = 0
        for comp in layout[k]:
            offsets[comp.parts] = off
            off += diagram.space(comp).dim
        dims.append(off)
    diffs = []
    for k in range(w - 1):
        ent = {}
        for comp in layout[k]:
            src = diagram.space(comp)
            col0 = offsets[comp.parts]
            for local, vec in enumerate(src.basis()):
                for sign, refined in subdivisions(comp):
                    tgt = diagram.space(refined)
                    row0 = offsets[refined.parts]
                    for r, c in enumerate(tgt.coords_of(vec)):
                        if c:
                            key = (row0 + r, col0 + local)
                            s = ent.get(key, 0) + sign * c
                            if s:
                                ent[key] = s
                            else:
                                ent.pop(key, None)
        diffs.append(SparseMatrix(dims[k + 1], dims[k], ent))
    return CochainComplex(0, dims, diffs)


def cubic_cohomology(diagram, backend="modular", rng=None):
    return cubic_complex(diagram).cohomology_dims(backend=backend, rng=rng)


def top_quotient(module, backend="modular", rng=None):
    """dim M / sum_i (1 + t_i) M, computed directly from the stacked images."""
    if module.n == 1:
        return module.dim
    blocks = []
    for T in module.gens:
        ent = dict(T.entries)
        for k in range(module.dim):
            s = ent.get((k, k), 0) + 1
            if s:
                ent[(k, k)] = s
            else:
                ent.pop((k, k), None)
        blocks.append(SparseMatrix(module.dim, module.dim, ent))
    stacked = blocks[0]
    for b in blocks[1:]:
        stacked = stacked.hstack(b)
    return module.dim - rank(stacked, backend=backend, rng=rng)


# ---------------------------------------------------------------------------
# horizontal complexes


def horizontal_cohomology(seq, w, backend="modular", rng=None):
    """Cohomology of the weight-w horizontal complex, degrees 1..w."""
    dims = cubic_cohomology(centralizer_diagram(seq, w), backend=backend, rng=rng)
    return {k + 1: v for k, v in dims.items()}


# ---------------------------------------------------------------------------
# the truncated full deformation complex


def deformation_complex_truncated(seq, max_weight):
    """The weight-<=W quotient of the full complex, as one CochainComplex.

    Degree k >= 1 sums C(lambda) over compositions of w <= W into k parts;
    degree 0 is the scalar layer (its differential cancels).  Weight-raising
    faces beyond W are dropped, which is legitimate because weights > W form
    a subcomplex.
    """
    W = max_weight
    layout = {0: [None]}
    for k in range(1, W + 1):
        layout[k] = [c for w in range(1, W + 1) for c in compositions(w)
                     if c.length == k]
    spaces = {c.parts: centralizer(seq, c) for k in range(1, W + 1) for c in layout[k]}
    dims = []
    offsets = {}
    for k in range(W + 1):
        off = 0
        for comp in layout[k]:
            if comp is None:
                offsets[None] = 0
                off = 1
                continue
            offsets[comp.parts] = off
            off += spaces[comp.parts].dim
        dims.append(off)

    diffs = [SparseMatrix(dims[1], dims[0])]  # scalars: d(1) = mu(1(x)1) - mu(1(x)1) = 0
    for k in range(1, W):
        ent = {}
        for comp in layout[k]:
            w = comp.weight
            src = spaces[comp.parts]
            col0 = offsets[comp.parts]
            for local, vec in enumerate(src.basis()):
                col = col0 + local
                el = seq.vec_to_element(w, vec)
                # middle faces: signed identity embeddings into refinements
                for sign, refined in subdivisions(comp):
                    _add_block(ent, spaces[refined.parts], offsets[refined.parts],
                               col, vec, sign)
                # outer faces raise the weight by m on the left or right
                for m in range(1, W - w + 1):
                    left = seq.element_to_vec(seq.mu(m, w, seq.one(m), el))
                    lcomp = Composition((m,) + comp.parts)
                    _add_block(ent, spaces[lcomp.parts], offsets[lcomp.parts],
                               col, left, 1)
                    right = seq.element_to_vec(seq.mu(w, m, el, seq.one(m)))
                    rcomp = Composition(comp.parts + (m,))
                    _add_block(ent, spaces[rcomp.parts], offsets[rcomp.parts],
                               col, right, (-1) ** (k + 1))
        diffs.append(SparseMatrix(dims[k + 1], dims[k], ent))
    return CochainComplex(0, dims, diffs)


def _add_block(ent, target_space, row0, col, vec, sign):
    for r, c in enumerate(target_space.coords_of(vec)):
        if c:
            key = (row0 + r, col)
            s = ent.get(key, 0) + sign * c
            if s:
                ent[key] = s
            else:
                ent.pop(key, None)


class TruncatedCohomology:
    """Cohomology dims of the truncated complex plus validity annotations."""

    def __init__(self, max_weight, dims):
        self.max_weight = max_weight
        self.dims = dims  # degree -> dim

    def is_final(self, degree):
        # the dropped faces only couple weight W to W+1, so degrees below W
        # see the full complex
        return degree <= self.max_weight - 1

    def as_report(self):
        return {
            "H": {str(d): v for d, v in sorted(self.dims.items())},
            "final_degrees": [d for d in sorted(self.dims) if self.is_final(d)],
            "boundary_degree": self.max_weight,
        }


def deformation_cohomology_truncated(seq, max_weight, backend="modular", rng=None):
    cx = deformation_complex_truncated(seq, max_weight)
    return TruncatedCohomology(max_weight, cx.cohomology_dims(backend=backend, rng=rng))


# ---------------------------------------------------------------------------
# the reduced complex


class ReducedComplexData:
    """Quotients T_w, coset representatives and the induced differential.

    ``diff_status[w]`` records how the differential out of weight w was
    handled: "matrix" (computed on representatives), "dual-zero" (proved
    zero by pairing against every sign-twisted class function one weight
    up), "source-zero" (T_w = 0), or "not-computed" (beyond the caps; the
    top cohomology is then only an upper bound and flagged non-final).
    """

    def __init__(self, seq, max_weight):
        self.seq = seq
        self.seq_id = seq.seq_id
        self.max_weight = max_weight
        self.t_dims = {}
        self.quotients = {}      # w -> QuotientSpace (matrix route only)
        self.diffs = {}          # w -> SparseMatrix for delta_w: T_w -> T_{w+1}
        self.diff_status = {}
        self.h_dims = {}
        self.final = {}

    def representatives(self, w):
        q = self.quotients.get(w)
        return q.representatives() if q is not None else None

    def class_of(self, w, vec):
        """Coordinates of [vec] in the representative basis of T_w."""
        q = self.quotients.get(w)
        if q is None:
            raise ResourceLimitError("no representative basis at weight %d" % w)
        return q.coords_of(vec)

    def cup(self, m, n, u, v):
        """Class of mu(u (x) v) in T_{m+n}; u, v are AlgebraElements."""
        w = m + n
        if w > self.max_weight:
            raise ResourceLimitError("cup lands beyond weight %d" % self.max_weight)
        prod = self.seq.mu(m, n, u, v)
        return self.class_of(w, self.seq.element_to_vec(prod))

    def as_report(self):
        ws = range(1, self.max_weight + 1)
        return {
            "sequence": self.seq_id,
            "weights": list(ws),
            "T": {str(w): self.t_dims[w] for w in ws},
            "H": {str(w): self.h_dims[w] for w in ws},
            "diff_status": {str(w): self.diff_status[w] for w in ws},
            "final": {str(w): self.final[w] for w in ws},
        }


def _two_part_compositions(w):
    return [Composition((1,) * (j - 1) + (2,) + (1,) * (w - j - 1))
            for j in range(1, w)]


def reduced_complex(seq, max_weight, backend="modular", rng=None):
    """Build T_1..T_P with the induced differential; see ReducedComplexData."""
    data = ReducedComplexData(seq, max_weight)
    symmetric = isinstance(seq, SymmetricGroupSequence)
    matrix_cap = SYMMETRIC_MATRIX_MAX_WEIGHT if symmetric else seq.level_cap
    # one extra weight, when affordable, makes the top differential computable
    build_weights = list(range(1, max_weight + 1))
    if max_weight + 1 <= matrix_cap:
        build_weights.append(max_weight + 1)
    for w in build_weights:
        if w > matrix_cap:
            data.t_dims[w] = _signed_class_count(w)
        else:
            seq.check_level(w)
            top = centralizer(seq, Composition((1,) * w))
            if w == 1:
                sub = Subspace.zero(seq.dim(1))
            else:
                parts = [centralizer(seq, c) for c in _two_part_compositions(w)]
                sub = parts[0]
                for p in parts[1:]:
                    sub = subspace_sum(sub, p)
            quot = QuotientSpace(top, sub)
            data.quotients[w] = quot
            data.t_dims[w] = quot.dim

    for w in range(1, max_weight + 1):
        if data.t_dims[w] == 0:
            data.diffs[w] = None
            data.diff_status[w] = "source-zero"
            continue
        if w in data.quotients and (w + 1) in data.quotients:
            data.diffs[w] = _reduced_differential_matrix(seq, data, w)
            data.diff_status[w] = "matrix"
        elif symmetric and w + 1 <= SYMMETRIC_DUAL_CAP:
            _reduced_differential_dual_zero(w)
            data.diffs[w] = None
            data.diff_status[w] = "dual-zero"
        else:
            data.diffs[w] = None
            data.diff_status[w] = "not-computed"

    for w in range(1, max_weight + 1):
        out_rank = 0
        if data.diff_status[w] == "matrix":
            out_rank = rank(data.diffs[w], backend=backend, rng=rng)
        in_rank = 0
        if w > 1 and data.diff_status[w - 1] == "matrix" and data.diffs[w - 1] is not None:
            in_rank = rank(data.diffs[w - 1], backend=backend, rng=rng)
        data.h_dims[w] = data.t_dims[w] - out_rank - in_rank
        data.final[w] = data.diff_status[w] != "not-computed"
    return data


def _reduced_delta(seq, w, vec):
    el = seq.vec_to_element(w, vec)
    img = seq.mu(1, w, seq.one(1), el) + seq.mu(w, 1, el, seq.one(1)).scale((-1) ** (w + 1))
    return seq.element_to_vec(img)


def _reduced_differential_matrix(seq, data, w):
    src = data.quotients[w]
    tgt = data.quotients[w + 1]
    # the induced map is only defined on cosets if the subspace maps into the
    # subspace one weight up; assert that, once per sequence and weight
    checked = seq.__dict__.setdefault("_coset_welldef_checked", set())
    if w not in checked:
        for uvec in src.U.basis():
            if tgt.U.reduce(_reduced_delta(seq, w, uvec)):
                raise CrossCheckError(
                    "reduced differential not well-defined on cosets at weight %d" % w)
        checked.add(w)
    ent = {}
    for j, repvec in enumerate(src.representatives()):
        coords = tgt.coords_of(_reduced_delta(seq, w, repvec))
        for i, c in enumerate(coords):
            if c:
                ent[(i, j)] = c
    return SparseMatrix(tgt.dim, src.dim, ent)


def _reduced_differential_dual_zero(w):
    """Prove delta_w = 0 for Q[S_*] by pairing with every f in V_{w+1}.

    f(delta(a)) = f(shift a) + (-1)^(w+1) f(a extended by a fixed point); by
    sign-twisted conjugation-covariance the two terms cancel, and this
    routine checks that identity pointwise on all of S_w.
    """
    for f in _signed_class_basis_tuples(w + 1):
        for p in all_permutations(w):
            shifted = (1,) + tuple(v + 1 for v in p.images)
            extended = p.images + (w + 1,)
            val = f.get(shifted, 0) + (-1) ** (w + 1) * f.get(extended, 0)
            if val:
                raise CrossCheckError(
                    "reduced differential does not vanish dually at weight %d" % w)


def _signed_class_count(n):
    """dim T_n for Q[S_n] by sweeping every conjugacy class with signs."""
    if n > SYMMETRIC_DUAL_CAP:
        raise ResourceLimitError(
            "class sweep of S_%d exceeds the guard (n <= %d)" % (n, SYMMETRIC_DUAL_CAP))
    count = 0
    for ct in partitions(n):
        if signed_orbit_tuples(n, class_representative(n, ct).images) is not None:
            count += 1
    return count


def _signed_class_basis_tuples(n):
    """Sign-twisted indicators (tuple-keyed) of the admissible classes.

    Classes failing the distinct-odd-parts criterion admit none; the sweep
    itself still validates consistency on the classes it returns.
    """
    out = []
    for ct in partitions(n):
        if not has_distinct_odd_type(ct):
            continue
        orbit = signed_orbit_tuples(n, class_representative(n, ct).images)
        if orbit is None:
            raise CrossCheckError("distinct-odd class %r failed the sign sweep" % (ct,))
        out.append(orbit)
    return out


def reduced_cohomology(seq, max_weight, backend="modular", rng=None):
    """Per-weight dims of the reduced complex's cohomology."""
    return reduced_complex(seq, max_weight, backend=backend, rng=rng).h_dims


def first_cohomology_direct(seq):
    """H^1 = {a central in A_1 with mu(a,1) + mu(1,a) central in A_2}."""
    if not seq.generated_by_first_two:
        raise ValueError("sequence is not generated by its first two members")
    z1 = centralizer(seq, Composition((1,)))
    z2 = centralizer(seq, Composition((2,)))
    cols = {}
    basis_els = []
    for j, vec in enumerate(z1.basis()):
        el = seq.vec_to_element(1, vec)
        basis_els.append(el)
        s = seq.mu(1, 1, el, seq.one(1)) + seq.mu(1, 1, seq.one(1), el)
        residue = z2.reduce(seq.element_to_vec(s))
        for i, c in residue.items():
            cols[(i, j)] = c
    M = SparseMatrix(seq.dim(2), z1.dim, cols)
    ker = kernel_basis(M)
    out = []
    for coeffs in ker.basis():
        el = AlgebraElement(1, {})
        for j, c in coeffs.items():
            el = el + basis_els[j].scale(c)
        out.append(el)
    return ker.dim, out


def cup(seq, m, n, u, v, max_weight=None, backend="modular", rng=None):
    """Convenience wrapper: class of mu(u (x) v) in T_{m+n}."""
    P = max_weight if max_weight is not None else m + n
    data = reduced_complex(seq, P, backend=backend, rng=rng)
    return data.cup(m, n, u, v)


# ---------------------------------------------------------------------------
# simplicial-cube cross-check


def relative_cube_dims(n):
    """Count non-degenerate relative simplices of the n-cube against multinomials.

    Degree-m simplices correspond to strictly increasing chains of length m
    from the bottom to the top of the Boolean lattice {0,1}^n; the expected
    count is the sum of n!/prod(parts!) over compositions of n into m parts.
    Returns (counts, expected, agree).
    """
    if n > 6:
        raise ResourceLimitError("relative cube enumeration capped at n=6")
    counts = {m: 0 for m in range(1, n + 1)}
    top = (1,) * n
    def walk(current, steps):
        if current == top:
            counts[steps] += 1
            return
        if steps >= n:
            return
        free = [i for i, b in enumerate(current) if b == 0]
        # choose any nonempty subset of the remaining coordinates to flip
        for mask in range(1, 1 << len(free)):
            nxt = list(current)
            for b, i in enumerate(free):
                if mask >> b & 1:
                    nxt[i] = 1
            walk(tuple(nxt), steps + 1)
    walk((0,) * n, 0)

    fact = [1] * (n + 1)
    for i in range(1, n + 1):
        fact[i] = fact[i - 1] * i
    expected = {m: 0 for m in range(1, n + 1)}
    for comp in compositions(n):
        m = comp.length
        val = fact[n]
        for p in comp.parts:
            val //= fact[p]
        expected[m] += val
    return counts, expected, counts == expected
