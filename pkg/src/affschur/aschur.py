"""The degenerate affine Schur algebra through its action on induced modules.

A morphism ``mu -> lambda`` is a right ``AH_r``-module homomorphism
``M(mu) (x) AH_r -> M(lambda) (x) AH_r``.  It is stored in the standard basis
``xi_{A,f}``: ``A`` a coset matrix with row sums ``lambda`` and column sums
``mu``, ``f`` invariant under the Young subgroup of the column redundancy
``mu(A)``.  Composition evaluates on generators and extracts the result back
into the basis.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import accumulate, product
from math import comb, factorial
from typing import Iterable, Sequence

from . import kernels as K
from . import linalg
from .combinat import (
    Composition,
    CosetMatrix,
    Permutation,
    block_bounds,
    coset_matrices,
    dA,
    dA_word,
    enumerate_compositions,
    matrix_of_word,
    redundancies,
    standard_word,
)
from .daha import AHElement, by_permutation
from .polyring import (
    BlockSymPoly,
    Poly,
    USeries,
    as_rational,
    block_orbit_basis,
    dominant_exponents,
    format_poly,
    orbit_coordinates,
    orbit_sum,
    parse_poly,
)
from .tenspace import InducedVector


class NotAHomomorphism(ValueError):
    """Raised when values on a generator do not come from a module homomorphism."""


def column_redundancy(A: CosetMatrix) -> Composition:
    return redundancies(A)[1]


def row_redundancy(A: CosetMatrix) -> Composition:
    return redundancies(A)[0]


class Morphism:
    """``sum_A xi_{A, f_A}`` in ``Hom(source, target)``."""

    __slots__ = ("source", "target", "terms")

    def __init__(self, source: Sequence[int], target: Sequence[int], terms: dict | None = None, check: bool = True):
        self.source = tuple(source)
        self.target = tuple(target)
        if sum(self.source) != sum(self.target):
            raise ValueError(f"objects {self.source} and {self.target} have different sizes")
        clean = {}
        for A, f in (terms or {}).items():
            if not isinstance(A, CosetMatrix):
                A = CosetMatrix(A, len(self.source))
            if isinstance(f, (int, Fraction)):
                f = Poly.constant(f, self.rank)
            if not f:
                continue
            if check:
                if A.row_sums != self.target or A.col_sums != self.source:
                    raise ValueError(f"{A} does not lie in Mat_{self.target}^{self.source}")
                if f.nvars != self.rank:
                    raise ValueError("polynomial has the wrong number of variables")
                if not f.is_invariant(column_redundancy(A)):
                    raise ValueError(f"{f} is not invariant under S_{column_redundancy(A)}")
            clean[A] = Poly._raw(f.terms, f.nvars)
        self.terms = clean

    @property
    def rank(self) -> int:
        return sum(self.source)

    @classmethod
    def zero(cls, source: Sequence[int], target: Sequence[int]) -> "Morphism":
        return cls(source, target)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((f.degree() for f in self.terms.values()), default=-1)

    def _check(self, other: "Morphism"):
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError(f"hom spaces differ: {self.source}->{self.target} vs {other.source}->{other.target}")

    def __add__(self, other: "Morphism") -> "Morphism":
        self._check(other)
        out = dict(self.terms)
        for A, f in other.terms.items():
            g = out.get(A)
            out[A] = f if g is None else g + f
        return Morphism(self.source, self.target, out, check=False)

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + other.scale(-1)

    def __neg__(self) -> "Morphism":
        return self.scale(-1)

    def scale(self, c) -> "Morphism":
        c = as_rational(c)
        return Morphism(self.source, self.target, {A: f * c for A, f in self.terms.items()}, check=False)

    def __mul__(self, c) -> "Morphism":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other: "Morphism") -> "Morphism":
        """``self @ other`` is the composite ``self o other``."""
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Morphism)
            and self.source == other.source
            and self.target == other.target
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.source, self.target, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[CosetMatrix, Poly]]:
        return sorted(self.terms.items(), key=lambda t: t[0].flat())

    def __str__(self) -> str:
        return format_morphism(self)

    def __repr__(self) -> str:
        return f"Morphism({self.source} -> {self.target}: {format_morphism(self)})"


# ---------------------------------------------------------------- evaluation


def _sum_over_cosets(start: dict, nu: Sequence[int], mu: Sequence[int]) -> dict:
    """``sum_y start . y`` over ``y`` in ``(S_nu \\ S_mu)_min``.

    Minimal representatives are visited through their index words
    ``i^nu . y``: a word's children swap an ascent inside one block of ``mu``.
    """
    labels = standard_word(nu)
    r = len(labels)
    block_of = [b for b, (lo, hi) in enumerate(block_bounds(mu)) for _ in range(lo, hi)]
    total = dict(start)
    frontier = [(labels, start)]
    seen = {labels}
    while frontier:
        following = []
        for word, vec in frontier:
            for i in range(r - 1):
                if block_of[i] != block_of[i + 1] or word[i] >= word[i + 1]:
                    continue
                child = word[:i] + (word[i + 1], word[i]) + word[i + 2:]
                if child in seen:
                    continue
                seen.add(child)
                moved = K.vec_rmul_simple(vec, i)
                K.vec_add_into(total, moved)
                following.append((child, moved))
        frontier = following
    return total


@lru_cache(maxsize=None)
def _xi_orbit_value(A: CosetMatrix, exp: tuple[int, ...]) -> dict:
    """Value of ``xi_{A, orbit_sum(exp)}`` on ``m_mu (x) 1`` as flat data (shared; do not mutate)."""
    nu = column_redundancy(A)
    word = dA_word(A)
    start = {(word, e): c for e, c in orbit_sum(exp, nu).terms.items()}
    return _sum_over_cosets(start, nu, A.col_sums)


def _xi_data(A: CosetMatrix, f: Poly) -> dict:
    out: dict = {}
    for exp, c in orbit_coordinates(f, column_redundancy(A)).items():
        K.vec_add_into(out, _xi_orbit_value(A, exp), c)
    return out


def xi_eval(A: CosetMatrix, f: Poly | int = 1) -> InducedVector:
    """``xi_{A,f}(m_mu (x) 1) = sum_y m_lambda (x) d_A f y``."""
    r = A.size
    if isinstance(f, (int, Fraction)):
        f = Poly.constant(f, r)
    if f.nvars != r:
        raise ValueError("polynomial has the wrong number of variables")
    if not f.is_invariant(column_redundancy(A)):
        raise ValueError(f"{f} is not invariant under S_{column_redundancy(A)}")
    return InducedVector(A.row_sums, _xi_data(A, f))


def value_on_generator(m: Morphism) -> InducedVector:
    data: dict = {}
    for A, f in m.terms.items():
        K.vec_add_into(data, _xi_data(A, f))
    return InducedVector(m.target, data)


def _apply_data(G: dict, mu: Composition, vec: dict) -> dict:
    """Image of ``vec`` (weight ``mu``) under the homomorphism with value ``G`` on ``m_mu (x) 1``."""
    images = {standard_word(mu): G}

    def image(word):
        hit = images.get(word)
        if hit is not None:
            return hit
        chain = []
        while word not in images:
            i = next(k for k in range(len(word) - 1) if word[k] > word[k + 1])
            chain.append((word, i))
            word = word[:i] + (word[i + 1], word[i]) + word[i + 2:]
        current = images[word]
        for child, i in reversed(chain):
            current = K.vec_rmul_simple(current, i)
            images[child] = current
        return current

    out: dict = {}
    for word, poly in by_permutation(vec).items():
        K.vec_add_into(out, K.vec_rmul_poly(image(word), poly))
    return out


def apply(m: Morphism, v: InducedVector) -> InducedVector:
    """Apply a morphism to a vector of its source weight, using right ``AH_r``-linearity."""
    if v.weight != m.source:
        raise ValueError(f"vector of weight {v.weight} does not lie in the source {m.source}")
    G = value_on_generator(m).data
    return InducedVector(m.target, _apply_data(G, m.source, v.data))


# ---------------------------------------------------------------- extraction


def _peel_block(A: CosetMatrix, residual: dict) -> Poly:
    """Greedily recover ``f`` with ``xi_{A,f}(m (x) 1) = residual`` (one double coset)."""
    nu = column_redundancy(A)
    key_word = dA_word(A)
    r = A.size
    f: dict = {}
    residual = dict(residual)
    while residual:
        coefficient = {e: c for (w, e), c in residual.items() if w == key_word}
        if not coefficient:
            return _solve_block(A, residual, f)
        top_degree = max(sum(e) for e in coefficient)
        top = Poly._raw({e: c for e, c in coefficient.items() if sum(e) == top_degree}, r)
        if not top.is_invariant(nu):
            return _solve_block(A, residual, f)
        for exp, c in orbit_coordinates(top, nu).items():
            K.vec_add_into(residual, _xi_orbit_value(A, exp), -c)
        K.poly_add_into(f, top.terms)
    return Poly._raw(f, r)


def _solve_block(A: CosetMatrix, residual: dict, partial: dict) -> Poly:
    """Fallback: exact linear solve against the evaluated orbit basis."""
    nu = column_redundancy(A)
    D = max(sum(e) for _, e in residual)
    exps = dominant_exponents(nu, D)
    columns = [_xi_orbit_value(A, e) for e in exps]
    solution = linalg.solve(columns, residual)
    if solution is None:
        raise NotAHomomorphism(f"values in the double coset of {A} are not in the span of xi_(A,f)")
    f = dict(partial)
    for e, c in zip(exps, solution):
        if c:
            K.poly_add_into(f, orbit_sum(e, nu).terms, c)
    return Poly._raw(f, A.size)


def extract(value: InducedVector | dict, target: Sequence[int], source: Sequence[int]) -> Morphism:
    """The morphism ``source -> target`` whose value on ``m_source (x) 1`` is ``value``.

    Terms are grouped by double coset; each block is peeled greedily from the top
    degree down and the residual must vanish exactly, otherwise a linear solve
    decides and inconsistency raises :class:`NotAHomomorphism`.
    """
    target, source = tuple(target), tuple(source)
    data = value.data if isinstance(value, InducedVector) else value
    if isinstance(value, InducedVector) and value.weight != target:
        raise ValueError(f"value has weight {value.weight}, expected {target}")
    groups: dict = {}
    matrix_cache: dict = {}
    for (word, e), c in data.items():
        A = matrix_cache.get(word)
        if A is None:
            A = matrix_cache[word] = matrix_of_word(word, source, len(target))
        groups.setdefault(A, {})[(word, e)] = c
    terms = {}
    for A in sorted(groups, key=lambda M: M.flat()):
        f = _peel_block(A, groups[A])
        if f:
            terms[A] = f
    return Morphism(source, target, terms, check=False)


def compose(g: Morphism, h: Morphism) -> Morphism:
    """``g o h``: evaluate on ``m (x) 1`` through the module action and extract."""
    if h.target != g.source:
        raise ValueError(f"cannot compose: {h.source}->{h.target} followed by {g.source}->{g.target}")
    if g.is_zero() or h.is_zero():
        return Morphism(h.source, g.target)
    X = value_on_generator(h).data
    G = value_on_generator(g).data
    return extract(_apply_data(G, g.source, X), g.target, h.source)


def stack(*layers: Morphism) -> Morphism:
    """Compose layers listed bottom to top."""
    result = layers[0]
    for layer in layers[1:]:
        result = compose(layer, result)
    return result


# ---------------------------------------------------------------- generators


def xi(A: CosetMatrix | Sequence[Sequence[int]], f: Poly | int = 1, ncols: int | None = None) -> Morphism:
    if not isinstance(A, CosetMatrix):
        A = CosetMatrix(A, ncols)
    if isinstance(f, (int, Fraction)):
        f = Poly.constant(f, A.size)
    return Morphism(A.col_sums, A.row_sums, {A: f})


def identity(lam: Sequence[int]) -> Morphism:
    lam = tuple(lam)
    return xi(CosetMatrix.diagonal(lam), 1)


def merge(a: int, b: int) -> Morphism:
    """``(a, b) -> (a + b)``."""
    return xi([[a, b]])


def split(a: int, b: int) -> Morphism:
    """``(a + b) -> (a, b)``."""
    return xi([[a], [b]])


def cross(a: int, b: int) -> Morphism:
    """``(a, b) -> (b, a)``."""
    return xi([[0, b], [a, 0]])


def pin(r: int, f: Poly | int) -> Morphism:
    """``f 1_(r)`` for symmetric ``f`` in ``r`` variables."""
    if isinstance(f, (int, Fraction)):
        f = Poly.constant(f, r)
    if not f.is_invariant((r,)):
        raise ValueError(f"pin polynomial {f} is not symmetric")
    return xi([[r]], f)


def pin_object(lam: Sequence[int], f: Poly) -> Morphism:
    """``f 1_lambda`` for ``f`` in ``P^lambda``."""
    return xi(CosetMatrix.diagonal(tuple(lam)), f)


def spot_up() -> Morphism:
    """``(0) -> ()``."""
    return xi(CosetMatrix([], 1))


def spot_down() -> Morphism:
    """``() -> (0)``."""
    return xi(CosetMatrix([[]]))


def block_diagonal(A: CosetMatrix, B: CosetMatrix) -> CosetMatrix:
    (p, q), (s, t) = A.shape, B.shape
    rows = [list(row) + [0] * t for row in A.entries] + [[0] * q + list(row) for row in B.entries]
    return CosetMatrix(rows, q + t)


def tensor(*morphisms: Morphism) -> Morphism:
    """Horizontal juxtaposition ``g * h``."""
    result = morphisms[0]
    for h in morphisms[1:]:
        r1, r2 = result.rank, h.rank
        terms = {}
        for A, f in result.terms.items():
            for B, g in h.terms.items():
                C = block_diagonal(A, B)
                poly = f.embed(0, r1 + r2) * g.embed(r1, r1 + r2)
                terms[C] = terms[C] + poly if C in terms else poly
        result = Morphism(result.source + h.source, result.target + h.target, terms, check=False)
    return result


def strand_adjoin(m: Morphism, side: str, thickness: int) -> Morphism:
    """Add a vertical string of the given thickness on the left or right."""
    if side == "right":
        return tensor(m, identity((thickness,)))
    if side == "left":
        return tensor(identity((thickness,)), m)
    raise ValueError("side must be 'left' or 'right'")


def leading_term(m: Morphism) -> Morphism:
    d = m.degree()
    return Morphism(m.source, m.target, {A: f.homogeneous_part(d) for A, f in m.terms.items()}, check=False)


# ---------------------------------------------------------------- symmetries


def xi_left(f: Poly | int, A: CosetMatrix) -> Morphism:
    """``xi_{f,A}``: ``m_mu (x) 1 -> sum_y m_lambda (x) f d_A y`` with ``f`` in ``P^{lambda(A)}``."""
    lam, mu = A.row_sums, A.col_sums
    r = A.size
    if isinstance(f, (int, Fraction)):
        f = Poly.constant(f, r)
    if not f.is_invariant(row_redundancy(A)):
        raise ValueError(f"{f} is not invariant under S_{row_redundancy(A)}")
    h = AHElement.from_poly(f).right_perm(dA(A))
    labels = standard_word(lam)
    start: dict = {}
    for (w, e), c in h.data.items():
        K.vec_add_into(start, {(Permutation(w).act_on_word(labels), e): c})
    data = _sum_over_cosets(start, column_redundancy(A), mu)
    return extract(data, lam, mu)


def flip(m: Morphism) -> Morphism:
    """Reflection in a horizontal axis: ``xi_{A,f} -> xi_{f,A^T}``."""
    out = Morphism(m.target, m.source)
    for A, f in m.sorted_terms():
        out = out + xi_left(f, A.transpose())
    return out


def reverse(m: Morphism) -> Morphism:
    """Reflection in a vertical axis with the sign ``(-1)^deg`` on each homogeneous part."""
    terms: dict = {}
    for A, f in m.terms.items():
        B = A.rotate()
        for d in range(f.degree() + 1):
            part = f.homogeneous_part(d)
            if part:
                g = part.reverse_variables() * (-1) ** d
                terms[B] = terms[B] + g if B in terms else g
    return Morphism(m.source[::-1], m.target[::-1], terms, check=False)


# ---------------------------------------------------------------- the algebra AS(n, r)


class ASElement:
    """An element of ``AS(n, r)``: morphisms between compositions in ``Lambda(n, r)``."""

    __slots__ = ("n", "r", "blocks")

    def __init__(self, n: int, r: int, blocks: dict | None = None):
        self.n, self.r = n, r
        clean = {}
        for (lam, mu), m in (blocks or {}).items():
            if len(lam) != n or len(mu) != n or sum(lam) != r:
                raise ValueError(f"block {(lam, mu)} is not in AS({n},{r})")
            if not m.is_zero():
                clean[(tuple(lam), tuple(mu))] = m
        self.blocks = clean

    @classmethod
    def from_morphism(cls, m: Morphism) -> "ASElement":
        return cls(len(m.source), m.rank, {(m.target, m.source): m})

    @classmethod
    def identity(cls, n: int, r: int) -> "ASElement":
        return cls(n, r, {(lam, lam): identity(lam) for lam in enumerate_compositions(n, r)})

    @classmethod
    def zero(cls, n: int, r: int) -> "ASElement":
        return cls(n, r)

    def is_zero(self) -> bool:
        return not self.blocks

    def degree(self) -> int:
        return max((m.degree() for m in self.blocks.values()), default=-1)

    def _check(self, other: "ASElement"):
        if (self.n, self.r) != (other.n, other.r):
            raise ValueError("elements of different Schur algebras")

    def __add__(self, other: "ASElement") -> "ASElement":
        self._check(other)
        out = dict(self.blocks)
        for key, m in other.blocks.items():
            out[key] = out[key] + m if key in out else m
        return ASElement(self.n, self.r, out)

    def __sub__(self, other: "ASElement") -> "ASElement":
        return self + other.scale(-1)

    def __neg__(self) -> "ASElement":
        return self.scale(-1)

    def scale(self, c) -> "ASElement":
        return ASElement(self.n, self.r, {k: m.scale(c) for k, m in self.blocks.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for (lam, mu), g in self.blocks.items():
            for (mu2, nu), h in other.blocks.items():
                if mu == mu2:
                    m = compose(g, h)
                    key = (lam, nu)
                    out[key] = out[key] + m if key in out else m
        return ASElement(self.n, self.r, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return isinstance(other, ASElement) and (self.n, self.r) == (other.n, other.r) and self.blocks == other.blocks

    def coordinates(self) -> dict:
        """Flat coordinates ``(lambda, mu, matrix, exponent) -> coefficient``."""
        out = {}
        for (lam, mu), m in self.blocks.items():
            for A, f in m.terms.items():
                for e, c in f.terms.items():
                    out[(lam, mu, A.flat(), e)] = c
        return out

    def map(self, fn) -> "ASElement":
        return ASElement(self.n, self.r, {k: fn(m) for k, m in self.blocks.items()})

    def __repr__(self) -> str:
        parts = [f"[{lam}<-{mu}] {m}" for (lam, mu), m in sorted(self.blocks.items())]
        return f"ASElement(n={self.n}, r={self.r}: " + ("; ".join(parts) or "0") + ")"


def basis_elements(lam: Sequence[int], mu: Sequence[int], D: int) -> list[Morphism]:
    """``xi_{A,b}`` for ``A`` in ``Mat_lambda^mu`` and ``b`` in the orbit basis of degree ``<= D``."""
    out = []
    for A in coset_matrices(lam, mu):
        for b in block_orbit_basis(column_redundancy(A), D):
            out.append(Morphism(mu, lam, {A: b.poly}, check=False))
    return out


def filtered_dim(lam: Sequence[int], mu: Sequence[int], D: int) -> int:
    return sum(len(dominant_exponents(column_redundancy(A), D)) for A in coset_matrices(lam, mu))


def evaluated_rank(lam: Sequence[int], mu: Sequence[int], D: int) -> int:
    """Rank of the values of the basis of degree ``<= D`` on ``m_mu (x) 1``."""
    vectors = []
    for A in coset_matrices(lam, mu):
        for e in dominant_exponents(column_redundancy(A), D):
            vectors.append(_xi_orbit_value(A, e))
    return linalg.rank(vectors)


def central_basis(n: int, r: int, D: int) -> list[ASElement]:
    """``f 1_{n,r}`` for ``f`` running over the monomial symmetric basis of degree ``<= D``."""
    out = []
    for b in block_orbit_basis((r,), D):
        blocks = {(lam, lam): pin_object(lam, b.poly) for lam in enumerate_compositions(n, r)}
        out.append(ASElement(n, r, blocks))
    return out


def algebra_generators(n: int, r: int) -> list[ASElement]:
    """Degree-0 basis elements together with the pins ``e_d`` on each strand of each object."""
    from .polyring import elementary

    gens = []
    objects = enumerate_compositions(n, r)
    for lam in objects:
        for mu in objects:
            for A in coset_matrices(lam, mu):
                gens.append(ASElement(n, r, {(lam, mu): xi(A)}))
    for lam in objects:
        starts = [0, *accumulate(lam)]
        for k, part in enumerate(lam):
            for d in range(1, part + 1):
                f = elementary(d, range(starts[k] + 1, starts[k] + part + 1), r)
                gens.append(ASElement(n, r, {(lam, lam): pin_object(lam, f)}))
    return gens


def is_central(z: ASElement, generators: Iterable[ASElement] | None = None) -> bool:
    gens = algebra_generators(z.n, z.r) if generators is None else generators
    return all((z * g - g * z).is_zero() for g in gens)


def commutant_dimension(n: int, r: int, D: int, test_degree: int = 1) -> tuple[int, list[ASElement]]:
    """Brute force: all combinations of basis elements of degree ``<= D`` that commute with
    every basis element of degree ``<= test_degree``.  Returns the dimension and a basis."""
    objects = enumerate_compositions(n, r)
    unknowns = [(lam, mu, m) for lam in objects for mu in objects for m in basis_elements(lam, mu, D)]
    tests = [(lam, mu, m) for lam in objects for mu in objects for m in basis_elements(lam, mu, test_degree)]
    columns = []
    for lam, mu, z in unknowns:
        column: dict = {}
        for index, (alpha, beta, t) in enumerate(tests):
            if mu == alpha:
                for A, f in compose(z, t).terms.items():
                    for e, c in f.terms.items():
                        key = (index, A.flat(), e)
                        column[key] = column.get(key, 0) + c
            if beta == lam:
                for A, f in compose(t, z).terms.items():
                    for e, c in f.terms.items():
                        key = (index, A.flat(), e)
                        column[key] = column.get(key, 0) - c
        columns.append({k: c for k, c in column.items() if c})
    solutions = linalg.nullspace(columns)
    basis = []
    for coeffs in solutions:
        blocks: dict = {}
        for (lam, mu, m), c in zip(unknowns, coeffs):
            if c:
                key = (lam, mu)
                blocks[key] = blocks[key] + m.scale(c) if key in blocks else m.scale(c)
        basis.append(ASElement(n, r, blocks))
    return len(solutions), basis


def span_rank(elements: Sequence[ASElement]) -> int:
    return linalg.rank([z.coordinates() for z in elements])


# ---------------------------------------------------------------- Hecke algebra inside AS


def easybit(h: AHElement) -> Morphism:
    """``h`` as an endomorphism of ``(1^r)``: left multiplication on ``M(1^r) (x) AH_r = AH_r``."""
    omega = (1,) * h.rank
    return extract(InducedVector(omega, dict(h.data)), omega, omega)


# ---------------------------------------------------------------- classical Schur oracle


def schur_product_oracle(A: CosetMatrix, B: CosetMatrix) -> dict[CosetMatrix, int]:
    """``xi_A xi_B`` in the classical Schur algebra from sums of matrix units over orbits.

    ``xi_A`` is ``sum e_{i,j}`` over the pairs of index words ``(i, j)`` whose
    position counts form ``A``; the coefficient of ``xi_C`` in the product is the
    number of middle words ``k`` linking a chosen representative of ``C``.
    """
    lam, mid = A.row_sums, A.col_sums
    if B.row_sums != mid:
        raise ValueError("matrices are not composable")
    nu = B.col_sums
    r = A.size
    from sympy.utilities.iterables import multiset_permutations

    def pair_matrix(top, bottom, n_rows, n_cols):
        return CosetMatrix.from_pair(top, bottom, n_rows, n_cols)

    middles = [tuple(w) for w in multiset_permutations(list(standard_word(mid)))] if r else [()]
    out = {}
    j = standard_word(nu)
    for C in coset_matrices(lam, nu):
        # a representative pair (i, j) of the orbit C with j = i^nu
        i = [0] * r
        for col, (lo, hi) in enumerate(block_bounds(nu)):
            k = lo
            for row in range(len(lam)):
                for _ in range(C.entries[row][col]):
                    i[k] = row + 1
                    k += 1
        i = tuple(i)
        count = sum(
            1
            for k in middles
            if pair_matrix(i, k, len(lam), len(mid)) == A and pair_matrix(k, j, len(mid), len(nu)) == B
        )
        if count:
            out[C] = count
    return out


# ---------------------------------------------------------------- serialization


def format_matrix(A: CosetMatrix) -> str:
    return "[" + ", ".join("[" + ", ".join(map(str, row)) + "]" for row in A.entries) + "]"


def format_morphism(m: Morphism) -> str:
    """Canonical ASCII form, e.g. ``2*xi([[2]], 1) + xi([[1], [1]], x1 + x2)``."""
    if m.is_zero():
        return "0"
    pieces = []
    for A, f in m.sorted_terms():
        if f.degree() == 0:
            c = f.constant_term()
            prefix = "" if c == 1 else f"{format_poly(Poly.constant(c, 0))}*"
            pieces.append(f"{prefix}xi({format_matrix(A)}, 1)")
        else:
            pieces.append(f"xi({format_matrix(A)}, {format_poly(f)})")
    return " + ".join(pieces)


_XI = re.compile(r"(?:(-?\d+(?:/\d+)?)\*)?xi\(")


def parse_morphism(text: str, source: Sequence[int], target: Sequence[int]) -> Morphism:
    """Inverse of :func:`format_morphism` for a known hom space."""
    source, target = tuple(source), tuple(target)
    text = text.strip()
    r = sum(source)
    if text == "0":
        return Morphism(source, target)
    terms: dict = {}
    pos = 0
    while pos < len(text):
        match = _XI.match(text, pos)
        if not match:
            raise ValueError(f"malformed morphism near {text[pos:]!r}")
        coeff = Fraction(match.group(1)) if match.group(1) else Fraction(1)
        depth, k = 1, match.end()
        while depth:
            if k >= len(text):
                raise ValueError("unbalanced parentheses")
            depth += {"(": 1, ")": -1}.get(text[k], 0)
            k += 1
        body = text[match.end(): k - 1]
        close = body.index("]]") + 2 if "]]" in body else body.index("]") + 1
        rows = _parse_matrix(body[:close])
        A = CosetMatrix(rows, len(source))
        f = parse_poly(body[close:].lstrip(", ").strip(), r) * coeff
        terms[A] = terms[A] + f if A in terms else f
        pos = k
        rest = text[pos:].lstrip()
        if rest.startswith("+"):
            pos = len(text) - len(rest) + 1
            while pos < len(text) and text[pos] == " ":
                pos += 1
        elif rest:
            raise ValueError(f"unexpected text {rest!r}")
        else:
            pos = len(text)
    return Morphism(source, target, terms)


def _parse_matrix(text: str) -> list[list[int]]:
    import json

    return json.loads(text)


# ---------------------------------------------------------------- series of morphisms


def series_product(g: USeries, h: USeries) -> USeries:
    """Cauchy product of series of morphisms with composition as the coefficient product."""
    return USeries(g.coeffs, compose) * USeries(h.coeffs, compose)


def series_compose(*layers) -> USeries:
    """Compose layers bottom to top; each layer is a Morphism or a USeries of Morphisms."""
    orders = [layer.order for layer in layers if isinstance(layer, USeries)]
    N = min(orders) if orders else 0
    result = None
    for layer in layers:
        series = layer if isinstance(layer, USeries) else constant_series(layer, N)
        result = series if result is None else series_product(series, result)
    return result.truncate(N)


def constant_series(m: Morphism, N: int) -> USeries:
    zero = Morphism(m.source, m.target)
    return USeries([m] + [zero] * N, compose)


def pin_series(lam: Sequence[int], strand_series: dict[int, USeries], N: int) -> USeries:
    """Pins on an object: strand index (0-based) -> series of polynomials in that strand's variables.

    The polynomials of each series are given in the strand's own variables; strands
    without an entry carry ``1``.
    """
    lam = tuple(lam)
    r = sum(lam)
    starts = [0, *accumulate(lam)]
    total = USeries([Poly.one(r)] + [Poly.zero(r)] * N)
    for k, series in strand_series.items():
        embedded = USeries([c.embed(starts[k], r) for c in series.coeffs[: N + 1]])
        total = total * embedded
    D = CosetMatrix.diagonal(lam)
    return USeries([Morphism(lam, lam, {D: c}, check=False) for c in total.coeffs], compose)


def series_equal(g: USeries, h: USeries, N: int) -> bool:
    return all(g[d] == h[d] for d in range(N + 1))


__all__ = [
    "Morphism", "ASElement", "NotAHomomorphism", "xi_eval", "apply", "compose", "extract", "stack",
    "xi", "identity", "merge", "split", "cross", "pin", "pin_object", "spot_up", "spot_down", "tensor",
    "strand_adjoin", "leading_term", "xi_left", "flip", "reverse", "filtered_dim", "evaluated_rank",
    "central_basis", "is_central", "commutant_dimension", "easybit", "schur_product_oracle",
    "format_morphism", "parse_morphism", "value_on_generator", "basis_elements",
]
