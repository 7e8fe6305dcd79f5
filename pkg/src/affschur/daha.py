"""The degenerate affine Hecke algebra ``AH_r`` in normal form ``sum_w w f_w``.

Elements are stored flat as ``(one-line permutation, exponent) -> coefficient``.
Right multiplication by ``s_i`` follows ``f s_i = s_i s_i(f) + d_i(f)``, which is
the same rule as for the induced module of weight ``(1^r)``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement, product

from . import kernels as K
from . import linalg
from .combinat import Permutation, all_permutations
from .polyring import Poly, as_rational, diamond, sym_family


class AHElement:
    __slots__ = ("data", "rank")

    def __init__(self, terms: dict | None = None, rank: int = 0):
        self.rank = rank
        data: dict = {}
        for w, f in (terms or {}).items():
            w = Permutation(w)
            if len(w) != rank:
                raise ValueError(f"{w} is not in S_{rank}")
            if isinstance(f, (int, Fraction)):
                f = Poly.constant(f, rank)
            if f.nvars != rank:
                raise ValueError("polynomial has the wrong number of variables")
            for e, c in f.terms.items():
                data[(tuple(w), e)] = c
        self.data = data

    @classmethod
    def _raw(cls, data: dict, rank: int) -> "AHElement":
        h = object.__new__(cls)
        h.data = data
        h.rank = rank
        return h

    @classmethod
    def one(cls, rank: int) -> "AHElement":
        return cls._raw({(tuple(range(1, rank + 1)), (0,) * rank): 1}, rank)

    @classmethod
    def from_poly(cls, f: Poly) -> "AHElement":
        e = tuple(range(1, f.nvars + 1))
        return cls._raw({(e, exp): c for exp, c in f.terms.items()}, f.nvars)

    @classmethod
    def from_perm(cls, w: Permutation) -> "AHElement":
        return cls._raw({(tuple(w), (0,) * len(w)): 1}, len(w))

    @classmethod
    def simple(cls, i: int, rank: int) -> "AHElement":
        return cls.from_perm(Permutation.simple(i, rank))

    @classmethod
    def x(cls, i: int, rank: int) -> "AHElement":
        return cls.from_poly(Poly.variable(i, rank))

    @property
    def terms(self) -> dict[Permutation, Poly]:
        out: dict = {}
        for (w, e), c in self.data.items():
            out.setdefault(Permutation(w), {})[e] = c
        return {w: Poly(t, self.rank) for w, t in sorted(out.items())}

    def is_zero(self) -> bool:
        return not self.data

    def _check(self, other: "AHElement"):
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "AHElement") -> "AHElement":
        self._check(other)
        return AHElement._raw(K.vec_add_into(dict(self.data), other.data), self.rank)

    def __sub__(self, other: "AHElement") -> "AHElement":
        self._check(other)
        return AHElement._raw(K.vec_add_into(dict(self.data), other.data, -1), self.rank)

    def __neg__(self) -> "AHElement":
        return AHElement._raw({k: -c for k, c in self.data.items()}, self.rank)

    def scale(self, c) -> "AHElement":
        c = as_rational(c)
        if not c:
            return AHElement._raw({}, self.rank)
        return AHElement._raw({k: v * c for k, v in self.data.items()}, self.rank)

    def __mul__(self, other) -> "AHElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Poly):
            other = AHElement.from_poly(other)
        return ah_mul(self, other)

    def __rmul__(self, other) -> "AHElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Poly):
            return ah_mul(AHElement.from_poly(other), self)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return isinstance(other, AHElement) and self.rank == other.rank and self.data == other.data

    def __hash__(self):
        return hash((self.rank, frozenset(self.data.items())))

    def degree(self) -> int:
        return max((sum(e) for _, e in self.data), default=-1)

    def right_simple(self, i: int) -> "AHElement":
        return AHElement._raw(K.vec_rmul_simple(self.data, i - 1), self.rank)

    def right_perm(self, w: Permutation) -> "AHElement":
        data = self.data
        for i in w.reduced_word():
            data = K.vec_rmul_simple(data, i - 1)
        return AHElement._raw(data, self.rank)

    def right_poly(self, f: Poly) -> "AHElement":
        return AHElement._raw(K.vec_rmul_poly(self.data, f.terms), self.rank)

    def left_perm(self, w: Permutation) -> "AHElement":
        return AHElement._raw({(tuple(w[k - 1] for k in v), e): c for (v, e), c in self.data.items()}, self.rank)

    def __repr__(self) -> str:
        parts = [f"{tuple(w)}*({f})" for w, f in self.terms.items()]
        return "AHElement(" + (" + ".join(parts) if parts else "0") + ")"


def by_permutation(data: dict) -> dict[tuple, dict]:
    grouped: dict = {}
    for (w, e), c in data.items():
        grouped.setdefault(w, {})[e] = c
    return grouped


def ah_mul(g: AHElement, h: AHElement) -> AHElement:
    """Product in normal form, commuting polynomials rightwards past group elements."""
    g._check(h)
    out: dict = {}
    for w, poly in by_permutation(h.data).items():
        moved = g.data
        for i in Permutation(w).reduced_word():
            moved = K.vec_rmul_simple(moved, i - 1)
        K.vec_add_into(out, K.vec_rmul_poly(moved, poly))
    return AHElement._raw(out, g.rank)


def poly_rep(h: AHElement, f: Poly) -> Poly:
    """The polynomial representation: ``x_i`` multiplies and ``w`` acts by the deformed action."""
    if h.rank != f.nvars:
        raise ValueError("rank mismatch")
    result = Poly.zero(f.nvars)
    for w, g in h.terms.items():
        result = result + diamond(w, g * f)
    return result


def commutator(a: AHElement, b: AHElement) -> AHElement:
    return ah_mul(a, b) - ah_mul(b, a)


def ah_generators(rank: int) -> list[AHElement]:
    return [AHElement.simple(i, rank) for i in range(1, rank)] + [AHElement.x(j, rank) for j in range(1, rank + 1)]


def filtered_basis(rank: int, D: int) -> list[AHElement]:
    """``w x^a`` with total degree ``<= D``."""
    exps = []
    for d in range(D + 1):
        for combo in combinations_with_replacement(range(rank), d):
            e = [0] * rank
            for k in combo:
                e[k] += 1
            exps.append(tuple(e))
    return [AHElement._raw({(tuple(w), e): 1}, rank) for w, e in product(all_permutations(rank), exps)]


def ah_center_basis(rank: int, D: int) -> list[AHElement]:
    """Basis of the central elements of filtered degree ``<= D`` by an exact nullspace computation."""
    basis = filtered_basis(rank, D)
    generators = ah_generators(rank)
    columns = []
    for b in basis:
        column = {}
        for index, gen in enumerate(generators):
            for key, c in commutator(gen, b).data.items():
                column[(index, key)] = c
        columns.append(column)
    out = []
    for coeffs in linalg.nullspace(columns):
        z: dict = {}
        for b, c in zip(basis, coeffs):
            if c:
                K.vec_add_into(z, b.data, c)
        out.append(AHElement._raw(z, rank))
    return out


def symmetric_span_dimension(rank: int, D: int) -> int:
    """Number of partitions with at most ``rank`` parts and size ``<= D``."""
    from .polyring import dominant_exponents

    return len(dominant_exponents((rank,), D))


def is_central(z: AHElement) -> bool:
    return all(commutator(gen, z).is_zero() for gen in ah_generators(z.rank))


__all__ = [
    "AHElement", "ah_mul", "poly_rep", "ah_center_basis", "commutator", "ah_generators",
    "filtered_basis", "is_central", "symmetric_span_dimension", "sym_family",
]
