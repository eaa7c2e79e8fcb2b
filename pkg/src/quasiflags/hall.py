"""The Hall algebra of the equioriented A-type quiver, realized in matrices.

Isomorphism classes of quiver representations are multisets of interval
indecomposables [i; l] (support on vertices i..i+l-1, all edge maps
isomorphisms).  Sending the class of the simple at vertex i to the matrix
unit E_{i+1,i} realizes the q=1 Hall algebra inside n x n matrices; the
structure constants themselves are counted here by brute force over a finite
field, enumerating every edge-closed tuple of subspaces and classifying sub
and quotient by the rank invariants of composed edge maps.

The same module houses the two closed multiplicative identities used by the
verification suite: the descending product of root exponentials equals the
all-ones unitriangular matrix, and the explicit unitriangular conjugator
turning that matrix times a diagonal into the diagonal again.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product as iter_product
from math import factorial

from .errors import NonGenericParameter
from .matrices import Matrix
from .roots import positive_root_pairs_descending

MAX_AMBIENT_DIM = 4
SUPPORTED_FIELD_SIZES = (2, 3)


class QuiverRepClass:
    """Multiset of indecomposables [i; l], stored as multiplicities k_{il}."""

    __slots__ = ("mults",)

    def __init__(self, mults):
        clean = {}
        items = mults.items() if isinstance(mults, dict) else mults
        for (i, l), k in items:
            i, l, k = int(i), int(l), int(k)
            if i < 1 or l < 1:
                raise ValueError(f"bad indecomposable label [{i}; {l}]")
            if k < 0:
                raise ValueError(f"negative multiplicity for [{i}; {l}]")
            if k:
                clean[(i, l)] = clean.get((i, l), 0) + k
        self.mults = dict(sorted(clean.items()))

    @classmethod
    def indecomposable(cls, i: int, l: int) -> "QuiverRepClass":
        return cls({(i, l): 1})

    def check_valid(self, n: int):
        for (i, l) in self.mults:
            if not (1 <= i <= n - 1 and 1 <= l <= n - i):
                raise ValueError(f"[{i}; {l}] is not a representation of the A_{n - 1} quiver")

    def dimension_vector(self, n: int) -> tuple[int, ...]:
        dims = [0] * (n - 1)
        for (i, l), k in self.mults.items():
            for v in range(i, i + l):
                dims[v - 1] += k
        return tuple(dims)

    def items(self):
        """Multiplicities in ascending (i, l) order."""
        return list(self.mults.items())

    def label(self) -> str:
        if not self.mults:
            return "0"
        return " + ".join(f"{k}*[{i};{l}]" if k > 1 else f"[{i};{l}]"
                          for (i, l), k in self.mults.items())

    def __eq__(self, other):
        return isinstance(other, QuiverRepClass) and self.mults == other.mults

    def __hash__(self):
        return hash(tuple(self.mults.items()))

    def __repr__(self):
        return f"QuiverRepClass({self.label()})"


def indecomposable_matrix(i: int, l: int, n: int) -> Matrix:
    """Iterated commutator [E_{i+l,i+l-1}, [..., [E_{i+2,i+1}, E_{i+1,i}]...]];
    collapses to the single matrix unit E_{i+l,i}."""
    if not (1 <= i <= n - 1 and 1 <= l <= n - i):
        raise ValueError(f"[{i}; {l}] out of range for n={n}")
    result = Matrix.unit(i + 1, i, n)
    for k in range(i + 1, i + l):
        result = Matrix.unit(k + 1, k, n).commutator(result)
    return result


def class_matrix(kappa: QuiverRepClass, n: int) -> Matrix:
    """Product of divided powers of indecomposable matrices, factors taken in
    ascending i then ascending l.  (The abstract product order matters in the
    enveloping algebra; this fixed convention is validated against the
    brute-force structure constants.)"""
    kappa.check_valid(n)
    result = Matrix.identity(n)
    for (i, l), k in kappa.items():
        power = Matrix.identity(n)
        for _ in range(k):
            power = power * indecomposable_matrix(i, l, n)
        result = result * power.scale(Fraction(1, factorial(k)))
    return result


# -- linear algebra over a prime field ---------------------------------------

def _rank_mod(rows, q: int) -> int:
    """Rank of an integer matrix mod q (q prime)."""
    work = [[e % q for e in row] for row in rows]
    rank = 0
    cols = len(work[0]) if work else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = pow(work[rank][col], -1, q)
        work[rank] = [(e * inv) % q for e in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                f = work[r][col]
                work[r] = [(a - f * b) % q for a, b in zip(work[r], work[rank])]
        rank += 1
    return rank


def _mat_mul_mod(a, b, q: int):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % q for col in bt] for row in a]


def _apply_mod(matrix, vec, q: int):
    return tuple(sum(m * v for m, v in zip(row, vec)) % q for row in matrix)


@lru_cache(maxsize=None)
def _all_subspaces(dim: int, q: int):
    """Every subspace of F_q^dim, each as a frozenset of all its vectors."""
    zero = (0,) * dim
    base = frozenset([zero])
    seen = {base}
    frontier = [base]
    vectors = list(iter_product(range(q), repeat=dim))
    while frontier:
        grown = []
        for space in frontier:
            for v in vectors:
                if v in space:
                    continue
                bigger = frozenset(tuple((s_i + c * v_i) % q for s_i, v_i in zip(s, v))
                                   for s in space for c in range(q))
                if bigger not in seen:
                    seen.add(bigger)
                    grown.append(bigger)
        frontier = grown
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def _subspace_basis(space, dim: int, q: int):
    """Row-reduced basis of a subspace given as a vector set."""
    rows = [list(v) for v in sorted(space) if any(v)]
    basis = []
    pivots = []
    for row in rows:
        row = row[:]
        for p, brow in zip(pivots, basis):
            if row[p]:
                f = row[p]
                row = [(a - f * b) % q for a, b in zip(row, brow)]
        lead = next((c for c in range(dim) if row[c]), None)
        if lead is None:
            continue
        inv = pow(row[lead], -1, q)
        row = [(e * inv) % q for e in row]
        basis.append(row)
        pivots.append(lead)
    return basis


class _ExplicitRep:
    """A concrete A-type quiver representation over F_q: one space per vertex,
    one matrix per edge (stored as target-dim x source-dim integer rows)."""

    def __init__(self, dims, edges, q):
        self.dims = list(dims)
        self.edges = edges  # edges[v-1]: map from vertex v to v+1
        self.q = q

    @classmethod
    def from_class(cls, kappa: QuiverRepClass, n: int, q: int) -> "_ExplicitRep":
        dims = kappa.dimension_vector(n)
        # allocate one coordinate per (indecomposable copy, vertex in support)
        slots = {v: [] for v in range(1, n)}
        for (i, l), k in kappa.items():
            for copy in range(k):
                for v in range(i, i + l):
                    slots[v].append((i, l, copy))
        edges = []
        for v in range(1, n - 1):
            rows = [[0] * dims[v - 1] for _ in range(dims[v])]
            for col, key in enumerate(slots[v]):
                if key in slots[v + 1]:
                    rows[slots[v + 1].index(key)][col] = 1
            edges.append(rows)
        return cls(dims, edges, q)

    def composed(self, a: int, b: int):
        """Matrix of the composition vertex a -> vertex b (a <= b)."""
        result = [[int(r == c) for c in range(self.dims[a - 1])]
                  for r in range(self.dims[a - 1])]
        for v in range(a, b):
            result = _mat_mul_mod(self.edges[v - 1], result, self.q)
        return result


def _classify_by_ranks(rank_fn, dims, n: int) -> QuiverRepClass:
    """Krull-Schmidt multiplicities from the rank invariants.

    rank_fn(a, b) is the rank of the composed map vertex a -> vertex b; the
    number of indecomposables with support containing [a, b] is exactly that
    rank, and inclusion-exclusion over interval endpoints isolates each
    multiplicity.
    """
    vertices = n - 1

    def contains(a, b):
        if a < 1 or b > vertices:
            return 0
        return dims[a - 1] if a == b else rank_fn(a, b)

    mults = {}
    for a in range(1, vertices + 1):
        for b in range(a, vertices + 1):
            k = (contains(a, b) - contains(a - 1, b)
                 - contains(a, b + 1) + contains(a - 1, b + 1))
            if k:
                mults[(a, b - a + 1)] = k
    return QuiverRepClass(mults)


def hall_count(sub: QuiverRepClass, quot: QuiverRepClass,
               ambient: QuiverRepClass, q: int) -> int:
    """Number of subrepresentations of the ambient class with the prescribed
    sub and quotient classes, counted over the field with q elements.

    Realizes the ambient class with identity/zero edge blocks, walks every
    tuple of subspaces closed under the edge maps, and classifies sub and
    quotient by composed-map ranks.  Only tiny ambients are supported: the
    vertex dimensions must sum to at most 4 and q must be 2 or 3.
    """
    if q not in SUPPORTED_FIELD_SIZES:
        raise ValueError(f"field size must be one of {SUPPORTED_FIELD_SIZES}, got {q}")
    labels = [i + l for (i, l) in
              list(sub.mults) + list(quot.mults) + list(ambient.mults)]
    n = max(labels) if labels else 2
    dims = ambient.dimension_vector(n)
    if sum(dims) > MAX_AMBIENT_DIM:
        raise ValueError(f"ambient dimension {sum(dims)} exceeds cap {MAX_AMBIENT_DIM}")
    sub_dims = sub.dimension_vector(n)
    quot_dims = quot.dimension_vector(n)
    if tuple(s + t for s, t in zip(sub_dims, quot_dims)) != dims:
        return 0

    rep = _ExplicitRep.from_class(ambient, n, q)
    vertices = n - 1
    spaces_per_vertex = [_all_subspaces(dims[v - 1], q) for v in range(1, vertices + 1)]
    compositions = {(a, b): rep.composed(a, b)
                    for a in range(1, vertices + 1) for b in range(a, vertices + 1)}

    count = 0
    stack = [()]
    while stack:
        chosen = stack.pop()
        v = len(chosen)
        if v == vertices:
            count += _matches(chosen, rep, compositions, sub, quot, dims, n, q)
            continue
        for space in spaces_per_vertex[v]:
            if len(_subspace_basis(space, dims[v], q)) != sub_dims[v]:
                continue
            if v > 0:
                edge = rep.edges[v - 1]
                prev_basis = _subspace_basis(chosen[v - 1], dims[v - 1], q)
                if any(_apply_mod(edge, w, q) not in space for w in prev_basis):
                    continue
            stack.append(chosen + (space,))
    return count


def _matches(chosen, rep, compositions, sub, quot, dims, n, q) -> int:
    vertices = n - 1
    bases = [_subspace_basis(space, dims[v], q) for v, space in enumerate(chosen)]
    sub_dims = tuple(len(b) for b in bases)

    def sub_rank(a, b):
        if not bases[a - 1]:
            return 0
        rows = [_apply_mod(compositions[(a, b)], w, q) for w in bases[a - 1]]
        return _rank_mod(rows, q)

    def quot_rank(a, b):
        if dims[b - 1] == 0:
            return 0
        image = [_apply_mod(compositions[(a, b)], e, q)
                 for e in ([tuple(int(r == c) for c in range(dims[a - 1]))
                            for r in range(dims[a - 1])])]
        rows = image + [tuple(w) for w in bases[b - 1]]
        return _rank_mod(rows, q) - len(bases[b - 1])

    if _classify_by_ranks(sub_rank, sub_dims, n) != sub:
        return 0
    quot_dims = tuple(d - s for d, s in zip(dims, sub_dims))
    if _classify_by_ranks(quot_rank, quot_dims, n) != quot:
        return 0
    return 1


def candidate_classes(dim_vector, n: int) -> list[QuiverRepClass]:
    """Every isomorphism class with the given dimension vector."""
    dim_vector = tuple(int(d) for d in dim_vector)
    labels = [(i, l) for i in range(1, n) for l in range(1, n - i + 1)]

    def walk(idx, remaining):
        if all(r == 0 for r in remaining):
            yield {k: v for k, v in accumulated.items() if v}
            return
        if idx == len(labels):
            return
        i, l = labels[idx]
        max_k = min(remaining[v - 1] for v in range(i, i + l))
        for k in range(max_k + 1):
            accumulated[(i, l)] = k
            reduced = list(remaining)
            for v in range(i, i + l):
                reduced[v - 1] -= k
            yield from walk(idx + 1, tuple(reduced))
        accumulated.pop((i, l), None)

    accumulated: dict = {}
    return sorted((QuiverRepClass(m) for m in walk(0, dim_vector)),
                  key=lambda c: c.label())


def check_product_identity(left: QuiverRepClass, right: QuiverRepClass, n: int) -> dict:
    """Verify, in the matrix realization, that the product of two classes
    expands with the brute-force structure constants:

        mat(left) * mat(right) = sum_kappa count(left, right -> kappa) * mat(kappa)

    The counts are taken over both supported field sizes; the identity must
    hold with each.  Counts that depend on q can only occur at classes whose
    matrix realization vanishes, so the comparison stays exact.
    """
    lhs = class_matrix(left, n) * class_matrix(right, n)
    dim_total = tuple(x + y for x, y in zip(left.dimension_vector(n),
                                            right.dimension_vector(n)))
    candidates = candidate_classes(dim_total, n)
    counts = {}
    holds = True
    for q in SUPPORTED_FIELD_SIZES:
        rhs = Matrix.zero(n)
        for kappa in candidates:
            c = hall_count(left, right, kappa, q)
            counts.setdefault(kappa.label(), {})[q] = c
            if c:
                rhs = rhs + class_matrix(kappa, n).scale(c)
        holds = holds and (rhs == lhs)
    q_dependent = sorted(lbl for lbl, per_q in counts.items()
                         if len(set(per_q.values())) > 1)
    return {
        "left": left.label(),
        "right": right.label(),
        "counts": counts,
        "q_dependent_classes": q_dependent,
        "holds": holds,
    }


# -- closed multiplicative identities ----------------------------------------

def root_exponential_product(n: int, pairs) -> Matrix:
    """Product of exp(E_{i,j}) over the given root index pairs, in order."""
    result = Matrix.identity(n)
    for i, j in pairs:
        result = result * Matrix.unit(i, j, n).exp_nilpotent()
    return result


def all_ones_unitriangular(n: int) -> Matrix:
    return Matrix([[Fraction(int(j >= i)) for j in range(n)] for i in range(n)])


def unipotent_product(n: int) -> Matrix:
    """Product of root exponentials in descending root order; asserts it equals
    the all-ones upper unitriangular matrix."""
    result = root_exponential_product(n, positive_root_pairs_descending(n))
    if result != all_ones_unitriangular(n):
        raise AssertionError(f"descending root product is not all-ones for n={n}")
    return result


def conjugator_matrix(t) -> Matrix:
    """The unitriangular matrix with entries
    x_{ij} = 1/(t_i/t_j - 1) * prod_{k=i+1}^{j-1} 1/(1 - t_k/t_i)  (i < j),
    which conjugates diag(t) into (all-ones unitriangular) * diag(t)."""
    t = [Fraction(v) for v in t]
    n = len(t)
    if any(v == 0 for v in t) or len(set(t)) != n:
        raise NonGenericParameter("entries must be distinct and nonzero")
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = Fraction(1)
        for j in range(i + 1, n):
            entry = Fraction(1) / (t[i] / t[j] - 1)
            for k in range(i + 1, j):
                entry *= Fraction(1) / (1 - t[k] / t[i])
            rows[i][j] = entry
    return Matrix(rows)


def conjugator_check(n: int, t) -> dict:
    """Exact check of the two conjugator identities at the scale point t.

    * conjugation: x * g * diag(t) == diag(t) * x, with g the all-ones
      unitriangular matrix (equivalently g diag(t) = x^{-1} diag(t) x);
    * evaluation: the product of the entries of x applied to the all-ones
      vector equals prod_{j > i} 1/(1 - t_j/t_i).  (Applying the dual action
      of the group element x^{-1} to a product of coordinates pulls the
      coordinates back through x itself, whence the vector is x @ ones.)
    """
    t = [Fraction(v) for v in t]
    if len(t) != n:
        raise ValueError(f"expected {n} entries, got {len(t)}")
    x = conjugator_matrix(t)
    g = all_ones_unitriangular(n)
    diag = Matrix.diagonal(t)
    conj_ok = (x * g * diag == diag * x)
    ones = [Fraction(1)] * n
    prod_entries = Fraction(1)
    for e in x.apply(ones):
        prod_entries *= e
    target = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            target *= Fraction(1) / (1 - t[j] / t[i])
    return {
        "n": n,
        "t": [str(v) for v in t],
        "conjugation_identity": conj_ok,
        "evaluation_identity": prod_entries == target,
        "evaluation_variant": "product of entries of x @ ones",
        "passed": conj_ok and prod_entries == target,
    }
