"""Matrix models of A5 and 2.A5, conjugacy classes, characters, invariants.

Character tables are never typed in: every character here is the trace of an
explicit matrix model, collected over conjugacy classes found by brute-force
closure.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb

from .errors import (
    ClosureBoundExceeded,
    InvalidInput,
    NonIntegralMultiplicity,
    NonIsolatedFixedLocus,
    SingularGenerator,
    UnsupportedEigenvalue,
    UnsupportedPower,
)
from .numfield import ZETA5, ExtElem, conj, sqrt5_in_zeta5
from .polyalg.linalg import det_bareiss, kernel_basis, matrix_rank
from .polyalg.poly import MultiPoly, PolyRing
from .projective import ProjPoint

# ---------------------------------------------------------------------------
# small matrix toolkit; matrices are tuples of row tuples so they hash


def _norm(x):
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, ExtElem) and x.is_rational():
        return x.to_rational()
    return x


def as_matrix(rows):
    return tuple(tuple(_norm(x) for x in r) for r in rows)


def mat_mul(a, b):
    n, m = len(a), len(b[0])
    inner = len(b)
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            acc = Fraction(0)
            for k in range(inner):
                x = ai[k]
                if x:
                    y = b[k][j]
                    if y:
                        acc = acc + x * y
            row.append(_norm(acc))
        out.append(tuple(row))
    return tuple(out)


def identity(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def trace(m):
    t = Fraction(0)
    for i in range(len(m)):
        t = t + m[i][i]
    return _norm(t)


def is_scalar(m):
    n = len(m)
    return all(not m[i][j] for i in range(n) for j in range(n) if i != j) and all(
        m[i][i] == m[0][0] for i in range(n)
    )


def mat_neg(m):
    return tuple(tuple(-x for x in r) for r in m)


def mat_map(m, fn):
    return tuple(tuple(_norm(fn(x)) for x in r) for r in m)


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    rows = []
    off = 0
    for b in blocks:
        for r in b:
            rows.append((Fraction(0),) * off + tuple(r) + (Fraction(0),) * (n - off - len(r)))
        off += len(b)
    return as_matrix(rows)


def kron(a, b):
    return as_matrix(
        [[a[i][j] * b[k][l] for j in range(len(a[0])) for l in range(len(b[0]))]
         for i in range(len(a)) for k in range(len(b))]
    )


def sym_power_matrix(g, k):
    """Action of a 2x2 matrix on binary forms of degree k.

    Basis ``t^(k-j) s^j``; a form P maps to ``P((t, s) g)``, which makes
    ``g -> sym_power_matrix(g, k)`` a homomorphism.
    """
    (a, b), (c, d) = g
    # (a t + c s)^(k-j) (b t + d s)^j, expanded in powers of s
    out = [[Fraction(0)] * (k + 1) for _ in range(k + 1)]
    for j in range(k + 1):
        m = k - j
        left = [comb(m, i) * (a ** (m - i)) * (c ** i) for i in range(m + 1)]
        right = [comb(j, i) * (b ** (j - i)) * (d ** i) for i in range(j + 1)]
        for i1, x in enumerate(left):
            if not x:
                continue
            for i2, y in enumerate(right):
                if y:
                    out[i1 + i2][j] = out[i1 + i2][j] + x * y
    return as_matrix(out)


def galois_zeta5(x, power=2):
    """Apply the automorphism zeta -> zeta^power of Q(zeta5)."""
    if isinstance(x, ExtElem):
        return x.apply_hom(ZETA5.gen ** power) + ZETA5.zero
    return x


# ---------------------------------------------------------------------------
# groups and classes


@dataclass
class ConjugacyClass:
    representative: tuple
    size: int
    members: frozenset
    order: int
    power_map: dict = field(default_factory=dict)


class MatrixGroup:
    """Finite group of invertible matrices, stored as the full element list."""

    def __init__(self, generators, elements):
        self.generators = list(generators)
        self.elements = list(elements)
        self.dimension = len(self.elements[0])
        self._index = {g: i for i, g in enumerate(self.elements)}
        self._classes = None

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self._index

    def index(self, g):
        return self._index[g]

    def classes(self):
        if self._classes is None:
            self._classes = conjugacy_classes(self)
        return self._classes

    def class_of(self, g):
        for i, c in enumerate(self.classes()):
            if g in c.members:
                return i
        raise KeyError("element not in group")


def generate_group(generators, bound=240):
    gens = [as_matrix(g) for g in generators]
    if not gens:
        raise InvalidInput("need at least one generator")
    n = len(gens[0])
    for g in gens:
        if len(g) != n or any(len(r) != n for r in g):
            raise InvalidInput("generators must be square of one dimension")
        if not det_bareiss([list(r) for r in g]):
            raise SingularGenerator("generator is singular")
    e = identity(n)
    elements = [e]
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mat_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > bound:
                        raise ClosureBoundExceeded(f"closure exceeds {bound} elements")
        frontier = nxt
    return MatrixGroup(gens, elements)


def element_order(g):
    e = identity(len(g))
    x = g
    k = 1
    while x != e:
        x = mat_mul(x, g)
        k += 1
    return k


def _inverse(g):
    k = element_order(g)
    x = identity(len(g))
    for _ in range(k - 1):
        x = mat_mul(x, g)
    return x


def conjugacy_classes(G):
    """Partition of G into classes (identity first, then by element order and size)."""
    gens = G.generators
    gen_inv = [_inverse(s) for s in gens]
    remaining = set(G.elements)
    classes = []
    for g in G.elements:
        if g not in remaining:
            continue
        members = {g}
        frontier = [g]
        while frontier:
            nxt = []
            for x in frontier:
                for s, si in zip(gens, gen_inv):
                    y = mat_mul(mat_mul(s, x), si)
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        remaining -= members
        classes.append(ConjugacyClass(g, len(members), frozenset(members), element_order(g)))
    classes.sort(key=lambda c: (c.order, c.size, str(trace(c.representative))))
    lookup = {}
    for i, c in enumerate(classes):
        for x in c.members:
            lookup[x] = i
    for c in classes:
        x = identity(G.dimension)
        for k in range(1, 7):
            x = mat_mul(x, c.representative)
            c.power_map[k] = lookup[x]
    return classes


# ---------------------------------------------------------------------------
# explicit models


def _perm_matrix_w4(perm):
    """Matrix on (x1..x4) of a permutation of x0..x4 restricted to x0+...+x4 = 0.

    ``perm`` maps index i to perm[i]; coordinate x_i moves to position perm[i].
    """
    cols = []
    for j in range(1, 5):
        v = [Fraction(0)] * 5
        v[j] = Fraction(1)
        v[0] = Fraction(-1)
        w = [Fraction(0)] * 5
        for i in range(5):
            w[perm[i]] = v[i]
        cols.append(w[1:])
    return as_matrix([[cols[j][i] for j in range(4)] for i in range(4)])


def w4_matrices():
    """Generators (01234) and (012) of A5 acting on P(W4) in coordinates x1..x4."""
    five_cycle = (1, 2, 3, 4, 0)
    three_cycle = (1, 2, 0, 3, 4)
    return [_perm_matrix_w4(five_cycle), _perm_matrix_w4(three_cycle)]


def w4_perm_matrix(perm):
    return _perm_matrix_w4(perm)


def even_permutations():
    out = []
    for p in permutations(range(5)):
        inv = sum(1 for i in range(5) for j in range(i + 1, 5) if p[i] > p[j])
        if inv % 2 == 0:
            out.append(p)
    return out


def u2_matrices():
    """Generators S (order 10) and T (order 4) of 2.A5 in SL2(Q(zeta5))."""
    z = ZETA5.gen
    r5 = sqrt5_in_zeta5()
    S = as_matrix([[-(z ** 3), 0], [0, -(z ** 2)]])
    a = (z - z ** 4) / r5
    b = (z ** 2 - z ** 3) / r5
    T = as_matrix([[-a, b], [b, a]])
    return [S, T]


def u4_matrices():
    return [sym_power_matrix(g, 3) for g in u2_matrices()]


@lru_cache(maxsize=None)
def binary_icosahedral():
    return generate_group(u2_matrices(), bound=240)


@lru_cache(maxsize=None)
def a5_permutation_group():
    return generate_group(w4_matrices(), bound=120)


def _u2p(g):
    return mat_map(g, galois_zeta5)


# name -> function of a 2x2 element of 2.A5
IRREPS_2A5 = {
    "I": lambda g: identity(1),
    "U2": lambda g: g,
    "U2'": _u2p,
    "W3": lambda g: sym_power_matrix(g, 2),
    "W3'": lambda g: sym_power_matrix(_u2p(g), 2),
    "W4": lambda g: kron(g, _u2p(g)),
    "U4": lambda g: sym_power_matrix(g, 3),
    "W5": lambda g: sym_power_matrix(g, 4),
    "U6": lambda g: sym_power_matrix(g, 5),
}

# models of P^3 with an A5 action, as functions of a 2.A5 element
P3_MODELS_2A5 = {
    "U4": lambda g: sym_power_matrix(g, 3),
    "U2+U2": lambda g: block_diag(g, g),
    "U2+U2'": lambda g: block_diag(g, _u2p(g)),
    "I+W3": lambda g: block_diag(identity(1), sym_power_matrix(g, 2)),
}

MODEL_NAMES = ("W4", "U4", "U2+U2", "U2+U2'", "I+W3")


def model_group(name):
    """(source group, matrix function) for a named P^3 model."""
    if name == "W4":
        return a5_permutation_group(), lambda g: g
    if name not in P3_MODELS_2A5:
        raise InvalidInput(f"unknown model {name!r}")
    return binary_icosahedral(), P3_MODELS_2A5[name]


def model_generators(name):
    G, rho = model_group(name)
    return [rho(g) for g in G.generators]


def model_images(name):
    """Distinct matrices of the model (the finite linear group acting on P^3)."""
    G, rho = model_group(name)
    seen = []
    s = set()
    for g in G.elements:
        m = rho(g)
        if m not in s:
            s.add(m)
            seen.append(m)
    return seen


# ---------------------------------------------------------------------------
# characters


@dataclass(frozen=True)
class Character:
    group: MatrixGroup = field(repr=False, compare=False)
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(_norm(v) for v in self.values))

    @property
    def degree(self):
        return self.values[0]

    def __add__(self, other):
        return Character(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        return Character(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other):
        if isinstance(other, Character):
            return Character(self.group, tuple(a * b for a, b in zip(self.values, other.values)))
        return Character(self.group, tuple(a * other for a in self.values))

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Character) and self.values == other.values

    def __hash__(self):
        return hash(self.values)


def character_of(G, rho=lambda g: g):
    return Character(G, tuple(trace(rho(c.representative)) for c in G.classes()))


def trivial_character(G):
    return Character(G, tuple(Fraction(1) for _ in G.classes()))


def sym_power_char(chi, k):
    """Character of Sym^k via Newton's identities (k = 1..4)."""
    if k not in (1, 2, 3, 4):
        raise UnsupportedPower(f"symmetric power {k} not supported")
    classes = chi.group.classes()
    v = chi.values
    out = []
    for i, c in enumerate(classes):
        p = [None] + [v[c.power_map[j]] for j in range(1, 5)]
        if k == 1:
            val = p[1]
        elif k == 2:
            val = (p[1] ** 2 + p[2]) / 2
        elif k == 3:
            val = (p[1] ** 3 + 3 * p[1] * p[2] + 2 * p[3]) / 6
        else:
            val = (p[1] ** 4 + 6 * p[1] ** 2 * p[2] + 3 * p[2] ** 2 + 8 * p[1] * p[3] + 6 * p[4]) / 24
        out.append(val)
    return Character(chi.group, tuple(out))


def inner_product(chi1, chi2):
    classes = chi1.group.classes()
    total = Fraction(0)
    for c, a, b in zip(classes, chi1.values, chi2.values):
        total = total + c.size * a * conj(b)
    total = _norm(total / chi1.group.order)
    if not isinstance(total, Fraction):
        raise NonIntegralMultiplicity(f"inner product {total} is not rational")
    return total


def decompose(chi, table):
    """Multiplicities of the irreducibles in ``table`` (name -> Character)."""
    out = {}
    for name, psi in table.items():
        m = inner_product(chi, psi)
        if m.denominator != 1 or m < 0:
            raise NonIntegralMultiplicity(f"multiplicity of {name} is {m}")
        out[name] = int(m)
    return out


@lru_cache(maxsize=None)
def character_table_2a5():
    G = binary_icosahedral()
    return {name: character_of(G, rho) for name, rho in IRREPS_2A5.items()}


def a5_irreducible_names():
    return ("I", "W3", "W3'", "W4", "W5")


def model_character(name):
    G, rho = model_group(name)
    return character_of(G, rho)


def invariant_dim_by_characters(name, degree):
    chi = model_character(name)
    return inner_product(sym_power_char(chi, degree), trivial_character(chi.group))


# ---------------------------------------------------------------------------
# invariant forms


def act_on_poly(matrix, f):
    """(g.f)(x) = f(g x): substitute x_i -> sum_j g_ij x_j."""
    ring = f.ring
    gens = ring.gens
    images = []
    for row in matrix:
        L = ring.zero()
        for a, x in zip(row, gens):
            if a:
                L = L + x * a
        images.append(L)
    return f.compose(images, ring)


def _drop_sign_pairs(matrices):
    n = len(matrices[0])
    minus = mat_neg(identity(n))
    s = set(matrices)
    if minus not in s:
        return matrices, False
    kept, skip = [], set()
    for m in matrices:
        if m in skip:
            continue
        kept.append(m)
        skip.add(m)
        skip.add(mat_neg(m))
    return kept, True


def reynolds_average(matrices, ring, degree):
    """Images of all degree-``degree`` monomials under the Reynolds operator.

    Returns ``(monomials, averages)``.
    """
    matrices = list(matrices)
    order = len(matrices)
    reps, has_minus = _drop_sign_pairs(matrices)
    monos = ring.monomials(degree)
    if has_minus and degree % 2:
        return monos, [ring.zero() for _ in monos]
    weight = Fraction(1, len(reps))
    gens = ring.gens
    n = ring.nvars
    sums = {m: {} for m in monos}
    for g in reps:
        lin = []
        for row in g:
            L = ring.zero()
            for a, x in zip(row, gens):
                if a:
                    L = L + x * a
            lin.append(L)
        cache = {(0,) * n: ring.const(1)}
        for d in range(1, degree + 1):
            for m in ring.monomials(d):
                i = next(k for k in range(n - 1, -1, -1) if m[k])
                prev = m[:i] + (m[i] - 1,) + m[i + 1:]
                cache[m] = cache[prev] * lin[i]
        for m in monos:
            acc = sums[m]
            for e, c in cache[m]._terms.items():
                v = acc.get(e)
                acc[e] = c if v is None else v + c
    del order
    return monos, [MultiPoly(ring, {e: c * weight for e, c in sums[m].items()}) for m in monos]


def independent_subset(polys):
    """Greedy maximal linearly independent subset (keeps input order)."""
    basis = []
    rows = []
    exps = sorted({e for p in polys for e in p.as_dict()}, reverse=True)
    col = {e: i for i, e in enumerate(exps)}
    for p in polys:
        if p.is_zero():
            continue
        v = [Fraction(0)] * len(exps)
        for e, c in p.as_dict().items():
            v[col[e]] = c
        if matrix_rank(rows + [v]) > len(rows):
            rows.append(v)
            basis.append(p)
    return basis


def reynolds_invariant_basis(matrices, ring, degree):
    """Basis of the invariant forms of the given degree, each scaled monic."""
    if degree < 1:
        raise InvalidInput("degree must be >= 1")
    _, avgs = reynolds_average(matrices, ring, degree)
    return [p.monic() for p in independent_subset(avgs)]


def is_invariant(f, matrices):
    return all(act_on_poly(g, f) == f for g in matrices)


def model_ring(name):
    if name == "W4":
        return PolyRing("x1 x2 x3 x4")
    return PolyRing("u0 u1 u2 u3")


def invariant_dim_by_reynolds(name, degree):
    return len(reynolds_invariant_basis(model_images(name), model_ring(name), degree))


# ---------------------------------------------------------------------------
# fixed points


def _candidate_eigenvalues(matrices, field):
    if field is None:
        if all(isinstance(x, Fraction) for m in matrices for r in m for x in r):
            return [Fraction(1), Fraction(-1)]
        fields = {x.field for m in matrices for r in m for x in r if isinstance(x, ExtElem)}
        if len(fields) != 1:
            raise UnsupportedEigenvalue("cannot determine a common coefficient field")
        field = fields.pop()
    roots = field.roots_of_unity()
    if roots is None:
        raise UnsupportedEigenvalue(f"no root-of-unity list for {field.name}")
    return roots


def common_eigenvectors(matrices, field=None):
    """Projective points fixed by every matrix, with coordinates in ``field``.

    Eigenvalues are searched among the roots of unity of ``field`` (the
    matrices are assumed of finite order).  A joint eigenspace of dimension
    > 1 raises :class:`NonIsolatedFixedLocus`.
    """
    matrices = [as_matrix(m) for m in matrices]
    if not matrices or all(is_scalar(m) for m in matrices):
        raise InvalidInput("need at least one non-scalar matrix")
    n = len(matrices[0])
    candidates = _candidate_eigenvalues(matrices, field)
    spaces = [[[Fraction(int(i == j)) for i in range(n)] for j in range(n)]]  # column bases
    for m in matrices:
        new_spaces = []
        for basis in spaces:
            for lam in candidates:
                # vectors B c with (M - lam) B c = 0
                shifted = [[m[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)]
                mb = [[sum((shifted[i][k] * b[k] for k in range(n)), Fraction(0)) for b in basis]
                      for i in range(n)]
                ker = kernel_basis(mb)
                if ker:
                    new_basis = [
                        [sum((c[t] * basis[t][i] for t in range(len(basis))), Fraction(0)) for i in range(n)]
                        for c in ker
                    ]
                    new_spaces.append(new_basis)
        spaces = new_spaces
        if not spaces:
            return []
    points = []
    for basis in spaces:
        if len(basis) > 1:
            raise NonIsolatedFixedLocus(f"joint eigenspace of dimension {len(basis)}")
        points.append(ProjPoint(basis[0]))
    return sorted(set(points), key=str)


def fixed_subspace_dim(matrices):
    """Dimension of the common fixed vectors (eigenvalue 1) of the matrices."""
    matrices = [as_matrix(m) for m in matrices]
    n = len(matrices[0])
    rows = []
    for m in matrices:
        for i in range(n):
            rows.append([m[i][j] - (1 if i == j else 0) for j in range(n)])
    return n - matrix_rank(rows)


# ---------------------------------------------------------------------------
# words in generators


def evaluate_word(word, generators):
    """Product of generators named by letters (``"S"``, ``"T"``; lowercase = inverse)."""
    names = {"S": 0, "T": 1}
    n = len(generators[0])
    out = identity(n)
    for ch in word:
        g = generators[names[ch.upper()]]
        if ch.islower():
            g = _inverse(g)
        out = mat_mul(out, g)
    return out
