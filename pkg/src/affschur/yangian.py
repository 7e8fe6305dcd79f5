"""Images of the Yangian ``Y(gl_n)`` in ``AS(n, r)`` as truncated series.

Nothing here builds the Yangian itself: ``T_{i,j}(u)`` is represented by its
image, a series ``sum_d T_{i,j}^{(d)} u^{-d}`` whose coefficients are
:class:`~affschur.aschur.ASElement`. Everything derived from it (Gauss factors,
the Harish-Chandra series, the shift and transposition symmetries) is computed
by series arithmetic in ``AS(n, r)``.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import accumulate, combinations, product
from typing import Callable, Iterator

from . import linalg
from .aschur import ASElement, Morphism, filtered_dim, flip, identity, is_central, tensor, xi, xi_left
from .combinat import CosetMatrix, enumerate_compositions, standard_word
from .polyring import Poly, USeries, ratio_series, series_inverse_of_linear
from .tenspace import TensorVector, project, ytt_act
from .aschur import extract


def _as_series(coeffs: list[ASElement]) -> USeries:
    return USeries(coeffs, operator.mul)


def zero_series(n: int, r: int, N: int) -> USeries:
    return _as_series([ASElement.zero(n, r) for _ in range(N + 1)])


def one_series(n: int, r: int, N: int) -> USeries:
    return _as_series([ASElement.identity(n, r)] + [ASElement.zero(n, r) for _ in range(N)])


@dataclass
class TMatrixImage:
    """The image of ``T(u)`` in ``AS(n, r)``, truncated after ``u^{-N}``."""

    n: int
    r: int
    N: int
    entries: dict[tuple[int, int], USeries] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> USeries:
        return self.entries[key]

    def coefficient(self, i: int, j: int, d: int) -> ASElement:
        return self.entries[(i, j)][d]

    def map(self, fn: Callable[[USeries], USeries]) -> "TMatrixImage":
        return TMatrixImage(self.n, self.r, self.N, {k: fn(s) for k, s in self.entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TMatrixImage) or (self.n, self.r) != (other.n, other.r):
            return False
        N = min(self.N, other.N)
        return all(
            self.entries[k][d] == other.entries[k][d] for k in self.entries for d in range(N + 1)
        )

    def mismatches(self, other: "TMatrixImage") -> list[tuple[int, int, int]]:
        N = min(self.N, other.N)
        return [
            (i, j, d)
            for (i, j) in sorted(self.entries)
            for d in range(N + 1)
            if self.entries[(i, j)][d] != other.entries[(i, j)][d]
        ]


# ---------------------------------------------------------------- the two constructions


def drinfeld_image(n: int, r: int, N: int) -> TMatrixImage:
    """Act on each generator ``v_{i^mu} (x) 1`` of the tensor space and read off morphisms."""
    weights = enumerate_compositions(n, r)
    entries = {}
    for i, j in product(range(1, n + 1), repeat=2):
        coeffs = [dict() for _ in range(N + 1)]
        for mu in weights:
            series = ytt_act(i, j, TensorVector.basis(n, standard_word(mu)), N)
            for d in range(N + 1):
                for lam, value in project(series[d]).items():
                    m = extract(value, lam, mu)
                    if not m.is_zero():
                        coeffs[d][(lam, mu)] = m
        entries[(i, j)] = _as_series([ASElement(n, r, blocks) for blocks in coeffs])
    return TMatrixImage(n, r, N, entries)


def _chains(i: int, j: int) -> Iterator[tuple[int, ...]]:
    """Increasing sequences ``j_1 < ... < j_t = j`` with ``j_1 <= i``."""
    for j1 in range(1, min(i, j) + 1):
        middle = range(j1 + 1, j)
        for size in range(len(middle) + 1):
            for inner in combinations(middle, size):
                chain = (j1, *inner, j) if j1 != j else (j,)
                yield chain


def _chain_term(i: int, chain: tuple[int, ...], mu: tuple[int, ...], N: int) -> tuple[CosetMatrix, USeries] | None:
    """The matrix and series label contributed by one chain and one weight ``mu``."""
    n, r = len(mu), sum(mu)
    j1 = chain[0]
    if i != j1 and mu[j1 - 1] == 0:
        return None
    if any(mu[k - 1] == 0 for k in chain[1:]):
        return None
    rows = [[mu[a] if a == b else 0 for b in range(n)] for a in range(n)]
    if i != j1:
        rows[i - 1][j1 - 1] += 1
        rows[j1 - 1][j1 - 1] -= 1
    for prev, nxt in zip(chain, chain[1:]):
        rows[prev - 1][nxt - 1] += 1
        rows[nxt - 1][nxt - 1] -= 1
    starts = [0, *accumulate(mu)]
    first = lambda k: starts[k - 1] + 1
    last = lambda k: starts[k]
    one = USeries([Poly.one(r)] + [Poly.zero(r)] * N)
    label = one
    stop = last(j1) - 1 if i > j1 else last(j1)
    for p in range(first(j1), stop + 1):
        label = label * (one + series_inverse_of_linear(p, 0, r, N))
    if i > j1:
        label = label * series_inverse_of_linear(last(j1), 0, r, N)
    for k in chain[1:]:
        label = label * series_inverse_of_linear(first(k), 0, r, N)
    return CosetMatrix(rows, n), label


def slava_closed_form(n: int, r: int, N: int) -> TMatrixImage:
    """Build ``T_{i,j}(u)`` directly as a sum of ``xi_{A, f}`` over chains and weights."""
    weights = enumerate_compositions(n, r)
    entries = {}
    for i, j in product(range(1, n + 1), repeat=2):
        coeffs = [ASElement.zero(n, r) for _ in range(N + 1)]
        for chain in _chains(i, j):
            for mu in weights:
                term = _chain_term(i, chain, mu, N)
                if term is None:
                    continue
                A, label = term
                for d in range(N + 1):
                    if label[d]:
                        coeffs[d] = coeffs[d] + ASElement.from_morphism(xi(A, label[d]))
        entries[(i, j)] = _as_series(coeffs)
    return TMatrixImage(n, r, N, entries)


# ---------------------------------------------------------------- Gauss factorization


@dataclass
class GaussFactors:
    """``T(u) = F(u) D(u) E(u)``; ``E[(i, j)]`` for ``i < j`` and ``F[(i, j)]`` for ``i < j``.

    ``F[(i, j)]`` is the series ``F_{i,j}(u)``, sitting in position ``(j, i)`` of
    the lower unitriangular factor.
    """

    D: dict[int, USeries]
    E: dict[tuple[int, int], USeries]
    F: dict[tuple[int, int], USeries]


def _series_sum(terms: list[USeries], zero: USeries) -> USeries:
    return reduce(operator.add, terms, zero)


def gauss_factorize(T: TMatrixImage) -> GaussFactors:
    """Noncommutative elimination: ``D_k``, then row ``k`` of ``E`` and column ``k`` of ``F``."""
    n, r, N = T.n, T.r, T.N
    one, zero = ASElement.identity(n, r), ASElement.zero(n, r)
    zs = zero_series(n, r, N)
    D: dict[int, USeries] = {}
    Dinv: dict[int, USeries] = {}
    E: dict[tuple[int, int], USeries] = {}
    lower: dict[tuple[int, int], USeries] = {}  # entry (i, k) of F(u), i > k
    for k in range(1, n + 1):
        correction = lambda a, b: _series_sum([lower[(a, l)] * D[l] * E[(l, b)] for l in range(1, k)], zs)
        D[k] = T[(k, k)] - correction(k, k)
        Dinv[k] = D[k].invert(one, zero)
        for j in range(k + 1, n + 1):
            E[(k, j)] = Dinv[k] * (T[(k, j)] - correction(k, j))
        for i in range(k + 1, n + 1):
            lower[(i, k)] = (T[(i, k)] - correction(i, k)) * Dinv[k]
    F = {(k, i): s for (i, k), s in lower.items()}
    return GaussFactors(D, E, F)


def gauss_product(g: GaussFactors, n: int, r: int, N: int) -> TMatrixImage:
    """Multiply the factors back together."""
    zs = zero_series(n, r, N)
    unit = one_series(n, r, N)
    lower = lambda i, k: unit if i == k else g.F.get((k, i), zs)
    upper = lambda k, j: unit if k == j else g.E.get((k, j), zs)
    entries = {}
    for i, j in product(range(1, n + 1), repeat=2):
        entries[(i, j)] = _series_sum([lower(i, k) * g.D[k] * upper(k, j) for k in range(1, min(i, j) + 1)], zs)
    return TMatrixImage(n, r, N, entries)


# ---------------------------------------------------------------- diagram formulas for the Drinfeld generators


def _block_starts(lam: tuple[int, ...]) -> list[int]:
    return [0, *accumulate(lam)]


def d_diagram(n: int, r: int, i: int, N: int) -> USeries:
    """``sum_lambda`` of the pin ``prod (u+i-x)/(u+i-1-x)`` on string ``i`` of ``lambda``."""
    coeffs = [ASElement.zero(n, r) for _ in range(N + 1)]
    for lam in enumerate_compositions(n, r):
        starts = _block_starts(lam)
        variables = range(starts[i - 1] + 1, starts[i] + 1)
        label = ratio_series(list(variables), i, i - 1, r, N)
        D = CosetMatrix.diagonal(lam)
        for d in range(N + 1):
            coeffs[d] = coeffs[d] + ASElement(n, r, {(lam, lam): Morphism(lam, lam, {D: label[d]}, check=False)})
    return _as_series(coeffs)


def _thin_string_matrix(mu: tuple[int, ...], top_row: int, column: int) -> CosetMatrix:
    n = len(mu)
    rows = [[mu[a] if a == b else 0 for b in range(n)] for a in range(n)]
    rows[top_row - 1][column - 1] += 1
    rows[column - 1][column - 1] -= 1
    return CosetMatrix(rows, n)


def e_diagram(n: int, r: int, i: int, j: int, N: int) -> USeries:
    """``E_{i,j}(u)``: a thin string from string ``j`` at the bottom to string ``i`` at the top.

    The label ``1/(u+i-x)`` sits on the thin string at its top end, so the left
    basis ``xi_{f, A}`` is used.
    """
    coeffs = [ASElement.zero(n, r) for _ in range(N + 1)]
    for mu in enumerate_compositions(n, r):
        if mu[j - 1] == 0:
            continue
        A = _thin_string_matrix(mu, i, j)
        position = sum(mu[:i]) + 1
        label = series_inverse_of_linear(position, i, r, N)
        for d in range(1, N + 1):
            coeffs[d] = coeffs[d] + ASElement.from_morphism(xi_left(label[d], A))
    return _as_series(coeffs)


def f_diagram(n: int, r: int, i: int, j: int, N: int) -> USeries:
    """``F_{i,j}(u)``: a thin string from string ``i`` at the bottom to string ``j`` at the top."""
    coeffs = [ASElement.zero(n, r) for _ in range(N + 1)]
    for mu in enumerate_compositions(n, r):
        if mu[i - 1] == 0:
            continue
        A = _thin_string_matrix(mu, j, i)
        position = sum(mu[:i])
        label = series_inverse_of_linear(position, i, r, N)
        for d in range(1, N + 1):
            coeffs[d] = coeffs[d] + ASElement.from_morphism(xi(A, label[d]))
    return _as_series(coeffs)


def _series_agree(a: USeries, b: USeries, N: int) -> bool:
    return all(a[d] == b[d] for d in range(N + 1))


def drinfeld_generator_check(T: TMatrixImage) -> dict[str, bool]:
    """Compare the Gauss factors of ``T`` with the diagram formulas, one flag per generator."""
    n, r, N = T.n, T.r, T.N
    g = gauss_factorize(T)
    out = {}
    for i in range(1, n + 1):
        out[f"D{i}"] = _series_agree(g.D[i], d_diagram(n, r, i, N), N)
    for (i, j), s in sorted(g.E.items()):
        out[f"E{i},{j}"] = _series_agree(s, e_diagram(n, r, i, j, N), N)
    for (i, j), s in sorted(g.F.items()):
        out[f"F{i},{j}"] = _series_agree(s, f_diagram(n, r, i, j, N), N)
    return out


def diagonal_power_sums_check(T: TMatrixImage) -> bool:
    """``1_lambda D_i^{(d+1)} 1_lambda`` against the pin ``tilde p_d`` on string ``i`` of ``lambda``.

    The pin ``tilde p_d`` here is the deformed power sum computed with the shift
    of string ``i``, i.e. the coefficients of ``prod (u+i-x)/(u+i-1-x)``.
    """
    n, r, N = T.n, T.r, T.N
    g = gauss_factorize(T)
    for i in range(1, n + 1):
        for lam in enumerate_compositions(n, r):
            starts = _block_starts(lam)
            variables = list(range(starts[i - 1] + 1, starts[i] + 1))
            label = ratio_series(variables, i, i - 1, r, N)
            for d in range(N):
                block = g.D[i][d + 1].blocks.get((lam, lam), Morphism.zero(lam, lam))
                expected = Morphism(lam, lam, {CosetMatrix.diagonal(lam): label[d + 1]}, check=False)
                if block != expected:
                    return False
    return True


# ---------------------------------------------------------------- relations and symmetries


def rtt_check(T: TMatrixImage, bound: int, variant: str = "standard") -> bool:
    """``[T_{ij}^{(a)}, T_{kl}^{(b)}] = sum_{c < min(a,b)} (T_{kj}^{(c)} T_{il}^{(a+b-1-c)} - T_{kj}^{(a+b-1-c)} T_{il}^{(c)})``.

    ``variant="swapped"`` checks the same identity with each product on the
    right hand side written in the opposite order.
    """
    return not rtt_failures(T, bound, variant)


def rtt_failures(T: TMatrixImage, bound: int, variant: str = "standard") -> list[tuple[int, ...]]:
    if 2 * bound - 1 > T.N:
        raise ValueError(f"order {T.N} too small for bound {bound}")
    n = T.n
    c_ = T.coefficient
    failures = []
    for i, j, k, l in product(range(1, n + 1), repeat=4):
        for a, b in product(range(1, bound + 1), repeat=2):
            lhs = c_(i, j, a) * c_(k, l, b) - c_(k, l, b) * c_(i, j, a)
            rhs = ASElement.zero(T.n, T.r)
            for c in range(min(a, b)):
                e = a + b - 1 - c
                if variant == "standard":
                    rhs = rhs + c_(k, j, c) * c_(i, l, e) - c_(k, j, e) * c_(i, l, c)
                else:
                    rhs = rhs + c_(i, l, e) * c_(k, j, c) - c_(i, l, c) * c_(k, j, e)
            if lhs != rhs:
                failures.append((i, j, k, l, a, b))
    return failures


def eta_shift(T: TMatrixImage, c) -> TMatrixImage:
    """``T_{i,j}(u) -> T_{i,j}(u + c)``."""
    return T.map(lambda s: s.translate(c))


def hc_center_image(n: int, r: int, N: int, T: TMatrixImage | None = None) -> USeries:
    """``D_1(u) D_2(u-1) ... D_n(u-n+1)`` computed from the Gauss factors."""
    T = T or drinfeld_image(n, r, N)
    g = gauss_factorize(T)
    result = one_series(n, r, N)
    for k in range(1, n + 1):
        result = result * g.D[k].translate(-(k - 1))
    return result


def hc_expected(n: int, r: int, N: int) -> USeries:
    """``prod (u+1-x_p)/(u-x_p) 1_{n,r}``."""
    label = ratio_series(list(range(1, r + 1)), 1, 0, r, N)
    coeffs = []
    for d in range(N + 1):
        blocks = {
            (lam, lam): Morphism(lam, lam, {CosetMatrix.diagonal(lam): label[d]}, check=False)
            for lam in enumerate_compositions(n, r)
        }
        coeffs.append(ASElement(n, r, blocks))
    return _as_series(coeffs)


def hc_center_check(n: int, r: int, N: int) -> bool:
    image = hc_center_image(n, r, N)
    expected = hc_expected(n, r, N)
    return _series_agree(image, expected, N) and all(is_central(image[d]) for d in range(N + 1))


def transpose_element(z: ASElement) -> ASElement:
    return ASElement(z.n, z.r, {(mu, lam): flip(m) for (lam, mu), m in z.blocks.items()})


def tau_check(T: TMatrixImage) -> bool:
    """``flip(T_{i,j}^{(d)}) = T_{j,i}^{(d)}`` for every entry and coefficient."""
    return all(
        transpose_element(T.coefficient(i, j, d)) == T.coefficient(j, i, d)
        for (i, j) in T.entries
        for d in range(T.N + 1)
    )


def adjoin_strand(z: ASElement, m: int, side: str) -> ASElement:
    """``phi_m`` (``side="right"``) or ``psi_m`` (``side="left"``) on an element of ``AS(n, r)``."""
    blocks = {}
    for (lam, mu), g in z.blocks.items():
        if side == "right":
            blocks[(lam + (m,), mu + (m,))] = tensor(g, identity((m,)))
        else:
            blocks[((m,) + lam, (m,) + mu)] = tensor(identity((m,)), g)
    return ASElement(z.n + 1, z.r + m, blocks)


def restrict_blocks(z: ASElement, keep: Callable[[tuple, tuple], bool]) -> ASElement:
    return ASElement(z.n, z.r, {k: g for k, g in z.blocks.items() if keep(*k)})


def unnatural_embedding(T: TMatrixImage) -> TMatrixImage:
    """``psi(T_{i,j}(u)) = T_{i+1,j+1}(u) - T_{i+1,1}(u) T_{1,1}(u)^{-1} T_{1,j+1}(u)`` on the images."""
    n, r = T.n - 1, T.r
    one, zero = ASElement.identity(T.n, r), ASElement.zero(T.n, r)
    inverse = T[(1, 1)].invert(one, zero)
    entries = {}
    for i, j in product(range(1, n + 1), repeat=2):
        entries[(i, j)] = T[(i + 1, j + 1)] - T[(i + 1, 1)] * inverse * T[(1, j + 1)]
    return TMatrixImage(T.n, r, T.N, entries)


def shifty_check(n: int, r: int, m: int, N: int = 4) -> dict[str, bool]:
    """Both strand-adjunction squares, compared coefficientwise."""
    small = drinfeld_image(n, r, N)
    big = drinfeld_image(n + 1, r + m, N)
    natural = all(
        restrict_blocks(big.coefficient(i, j, d), lambda lam, mu: mu[-1] == m and lam[-1] == m)
        == adjoin_strand(small.coefficient(i, j, d), m, "right")
        for (i, j) in small.entries
        for d in range(N + 1)
    )
    shifted = eta_shift(unnatural_embedding(big), -1)
    unnatural = all(
        restrict_blocks(shifted.coefficient(i, j, d), lambda lam, mu: mu[0] == m and lam[0] == m)
        == adjoin_strand(small.coefficient(i, j, d), m, "left")
        for (i, j) in small.entries
        for d in range(N + 1)
    )
    return {"phi": natural, "psi": unnatural}


# ---------------------------------------------------------------- surjectivity evidence


def full_filtered_dim(n: int, r: int, D: int) -> int:
    weights = enumerate_compositions(n, r)
    return sum(filtered_dim(lam, mu, D) for lam in weights for mu in weights)


def surjectivity_dim(n: int, r: int, D: int, max_length: int = 12) -> tuple[int, int]:
    """Rank of the span of products of ``T_{i,j}^{(d)}`` of filtered degree ``<= D``.

    A product ``T^{(d_1)} ... T^{(d_k)}`` has filtered degree ``sum (d_i - 1)``.
    A new product is kept when it is independent of the kept products of no
    larger degree, so discarding it loses nothing at any later step; words are
    lengthened until nothing new is kept.
    """
    T = drinfeld_image(n, r, D + 1)
    generators = [(T.coefficient(i, j, d), d - 1) for (i, j) in sorted(T.entries) for d in range(1, D + 2)]
    unit = ASElement.identity(n, r)
    kept: list[tuple[dict, int]] = [(unit.coordinates(), 0)]
    frontier = [(unit, 0)]
    for _ in range(max_length):
        grown = []
        for z, deg in frontier:
            for g, gdeg in generators:
                if deg + gdeg > D:
                    continue
                candidate = g * z
                coords = candidate.coordinates()
                if not coords:
                    continue
                level = [v for v, k in kept if k <= deg + gdeg]
                if linalg.rank(level + [coords]) > linalg.rank(level):
                    kept.append((coords, deg + gdeg))
                    grown.append((candidate, deg + gdeg))
        if not grown:
            break
        frontier = grown
    return linalg.rank([v for v, _ in kept]), full_filtered_dim(n, r, D)


__all__ = [
    "TMatrixImage", "GaussFactors", "drinfeld_image", "slava_closed_form", "gauss_factorize", "gauss_product",
    "d_diagram", "e_diagram", "f_diagram", "drinfeld_generator_check", "diagonal_power_sums_check",
    "rtt_check", "rtt_failures", "eta_shift", "hc_center_image", "hc_expected", "hc_center_check",
    "transpose_element", "tau_check", "adjoin_strand", "unnatural_embedding", "shifty_check",
    "surjectivity_dim", "full_filtered_dim", "restrict_blocks",
]
