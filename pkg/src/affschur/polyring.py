"""Exact sparse polynomials in ``x_1..x_r``, symmetric group actions, Demazure
operators, symmetric function families and truncated series in ``u^{-1}``."""

from __future__ import annotations

import operator
import re
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations, product
from math import comb
from typing import Callable, Iterable, Sequence

from . import kernels as K
from .combinat import Permutation, block_bounds

Rat = Fraction


def as_rational(value) -> int | Fraction:
    """Canonical coefficient: an ``int`` when integral, otherwise a ``Fraction``."""
    if isinstance(value, int):
        return value
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


def format_rational(value) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class Poly:
    """A polynomial in a fixed number of variables with exact rational coefficients."""

    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms: dict | None = None, nvars: int = 0):
        self.nvars = nvars
        clean = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            if coeff:
                clean[exp] = as_rational(coeff)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "Poly":
        p = object.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, value, nvars: int) -> "Poly":
        return cls._raw({(0,) * nvars: as_rational(value)} if value else {}, nvars)

    @classmethod
    def one(cls, nvars: int) -> "Poly":
        return cls.constant(1, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Poly":
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"x_{i} is not a variable of P_{nvars}")
        return cls._raw({tuple(int(k == i - 1) for k in range(nvars)): 1}, nvars)

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff=1) -> "Poly":
        return cls({tuple(exp): coeff}, len(exp))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly._raw({e: c for e, c in self.terms.items() if sum(e) == d}, self.nvars)

    def top_part(self) -> "Poly":
        return self.homogeneous_part(self.degree())

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def _check(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._raw(K.poly_add_into(dict(self.terms), other.terms), self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._raw(K.poly_add_into(dict(self.terms), other.terms, -1), self.nvars)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly.zero(self.nvars)
            return Poly._raw({e: as_rational(c * other) for e, c in self.terms.items()}, self.nvars)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        return Poly._raw(K.poly_mul(self.terms, other.terms), self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        result = Poly.one(self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other, self.nvars)
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def swap(self, i: int) -> "Poly":
        """``s_i(f)`` for 1-based ``i``."""
        return Poly._raw(K.poly_swap(self.terms, i - 1), self.nvars)

    def act(self, w: Permutation) -> "Poly":
        """``w(f)``: the variable ``x_k`` is sent to ``x_{w(k)}``."""
        if len(w) != self.nvars:
            raise ValueError(f"variable-count mismatch: S_{len(w)} acting on P_{self.nvars}")
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.nvars
            for k, a in enumerate(e):
                new[w[k] - 1] = a
            out[tuple(new)] = c
        return Poly._raw(out, self.nvars)

    def embed(self, offset: int, nvars: int) -> "Poly":
        """Rename ``x_k`` to ``x_{k+offset}`` inside ``nvars`` variables."""
        tail = nvars - offset - self.nvars
        if tail < 0 or offset < 0:
            raise ValueError("embedding does not fit")
        return Poly._raw({(0,) * offset + e + (0,) * tail: c for e, c in self.terms.items()}, nvars)

    def restrict(self, lo: int, hi: int) -> "Poly":
        """Keep variables ``x_{lo+1}..x_hi``; the polynomial must not involve the others."""
        out = {}
        for e, c in self.terms.items():
            if any(e[:lo]) or any(e[hi:]):
                raise ValueError("polynomial involves dropped variables")
            out[e[lo:hi]] = c
        return Poly._raw(out, hi - lo)

    def reverse_variables(self) -> "Poly":
        """``x_k -> x_{r+1-k}``."""
        return Poly._raw({e[::-1]: c for e, c in self.terms.items()}, self.nvars)

    def negate_variables(self) -> "Poly":
        """``x_k -> -x_k``."""
        return Poly._raw({e: (-c if sum(e) % 2 else c) for e, c in self.terms.items()}, self.nvars)

    def shift_variables(self, c) -> "Poly":
        """``f(x_1 + c, ..., x_r + c)``."""
        c = as_rational(c)
        if not c:
            return self
        result = Poly.zero(self.nvars)
        shifted = [Poly.variable(k + 1, self.nvars) + c for k in range(self.nvars)]
        for e, coeff in self.terms.items():
            term = Poly.constant(coeff, self.nvars)
            for k, a in enumerate(e):
                if a:
                    term = term * shifted[k] ** a
            result = result + term
        return result

    def evaluate(self, values: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, a in zip(values, e):
                term *= Fraction(v) ** a
            total += term
        return total

    def is_invariant(self, blocks: Sequence[int]) -> bool:
        """Invariance under the Young subgroup ``S_blocks``."""
        for lo, hi in block_bounds(blocks):
            for i in range(lo, hi - 1):
                if K.poly_swap(self.terms, i) != self.terms:
                    return False
        return True

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int | Fraction]]:
        """Terms in graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r}, nvars={self.nvars})"


def format_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for exp, coeff in p.sorted_terms():
        factors = [f"x{k + 1}" + (f"^{a}" if a > 1 else "") for k, a in enumerate(exp) if a]
        c = Fraction(coeff)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not factors:
            body = format_rational(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = format_rational(mag) + "*" + "*".join(factors)
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


_TERM = re.compile(r"([+-]?)\s*([^+-]+)")


def parse_poly(text: str, nvars: int) -> Poly:
    """Inverse of :func:`format_poly`."""
    text = text.strip()
    if text == "0":
        return Poly.zero(nvars)
    out: dict = {}
    for sign, body in _TERM.findall(text):
        body = body.strip()
        if not body:
            raise ValueError(f"malformed polynomial {text!r}")
        coeff = Fraction(-1 if sign == "-" else 1)
        exp = [0] * nvars
        for factor in body.split("*"):
            factor = factor.strip()
            match = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
            if match:
                k = int(match.group(1))
                if not 1 <= k <= nvars:
                    raise ValueError(f"variable x{k} outside P_{nvars}")
                exp[k - 1] += int(match.group(2) or 1)
            elif re.fullmatch(r"\d+(?:/\d+)?", factor):
                coeff *= Fraction(factor)
            else:
                raise ValueError(f"malformed factor {factor!r} in {text!r}")
        key = tuple(exp)
        out[key] = out.get(key, 0) + coeff
    return Poly(out, nvars)


def act(w: Permutation, f: Poly) -> Poly:
    return f.act(w)


def demazure(i: int, f: Poly) -> Poly:
    """The divided difference ``(f - s_i f) / (x_i - x_{i+1})``."""
    if not 1 <= i < f.nvars:
        raise ValueError(f"Demazure index {i} out of range for P_{f.nvars}")
    return Poly._raw(K.poly_demazure(f.terms, i - 1), f.nvars)


def diamond(w: Permutation, f: Poly) -> Poly:
    """The deformed action ``s_i <> f = s_i(f) + d_i(f)`` extended along the smallest reduced word."""
    if len(w) != f.nvars:
        raise ValueError(f"variable-count mismatch: S_{len(w)} acting on P_{f.nvars}")
    terms = f.terms
    for i in reversed(w.reduced_word()):
        terms = K.poly_diamond(terms, i - 1)
    return Poly._raw(terms, f.nvars)


def elementary(d: int, variables: Sequence[int], nvars: int) -> Poly:
    """``e_d`` in the listed (1-based) variables."""
    terms = {}
    for subset in combinations(variables, d):
        exp = [0] * nvars
        for k in subset:
            exp[k - 1] = 1
        terms[tuple(exp)] = 1
    return Poly._raw(terms, nvars)


def complete(d: int, variables: Sequence[int], nvars: int) -> Poly:
    """``h_d`` in the listed (1-based) variables."""
    from itertools import combinations_with_replacement

    terms: dict = {}
    for multiset in combinations_with_replacement(variables, d):
        exp = [0] * nvars
        for k in multiset:
            exp[k - 1] += 1
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + 1
    return Poly._raw(terms, nvars)


def power_sum(d: int, variables: Sequence[int], nvars: int) -> Poly:
    terms = {}
    for k in variables:
        exp = [0] * nvars
        exp[k - 1] = d
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + 1
    return Poly(terms, nvars)


@lru_cache(maxsize=None)
def _newton_power_sum(d: int, r: int) -> Poly:
    # p_d = (-1)^{d-1} d e_d + sum_{i=1}^{d-1} (-1)^{i-1} e_i p_{d-i}
    e = lambda k: elementary(k, range(1, r + 1), r)
    result = e(d) * ((-1) ** (d - 1) * d)
    for i in range(1, d):
        result = result + e(i) * _newton_power_sum(d - i, r) * ((-1) ** (i - 1))
    return result


@lru_cache(maxsize=None)
def _deformed_lower(d: int, r: int) -> Poly:
    # the inhomogeneous correction p_{<d} of the deformed power sum
    result = Poly.constant(comb(r, d + 1), r)
    for i in range(1, d):
        bracket = _deformed_lower(d - i, r) - comb(r - i, d + 1 - i) if r >= i else _deformed_lower(d - i, r)
        result = result + bracket * elementary(i, range(1, r + 1), r) * ((-1) ** (i - 1))
    return result


def sym_family(kind: str, d: int, r: int) -> Poly:
    """``e_d``, ``h_d``, ``p_d`` or the deformed power sum ``tilde_p_d`` in ``x_1..x_r``."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    variables = range(1, r + 1)
    if kind == "e":
        return elementary(d, variables, r)
    if kind == "h":
        return complete(d, variables, r)
    if kind == "p":
        return Poly.constant(r, r) if d == 0 else _newton_power_sum(d, r)
    if kind == "tilde_p":
        if d == 0:
            return Poly.constant(r, r)
        return _newton_power_sum(d, r) + _deformed_lower(d, r)
    raise ValueError(f"unknown symmetric family {kind!r}")


def deformed_power_sum_closed(d: int, variables: Sequence[int], nvars: int) -> Poly:
    """``sum_s sum_{i_0<...<i_s} h_{d-s}(x_{i_0},...,x_{i_s})``."""
    result = Poly.zero(nvars)
    for s in range(0, d + 1):
        for subset in combinations(variables, s + 1):
            result = result + complete(d - s, subset, nvars)
    return result


def dominant_exponents(blocks: Sequence[int], D: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree ``<= D``, weakly decreasing inside each block."""
    per_block = []
    for size in blocks:
        per_block.append(_partitions_in_box(size, D))
    out = []
    for choice in product(*per_block):
        exp = tuple(a for part in choice for a in part)
        if sum(exp) <= D:
            out.append(exp)
    out.sort(key=lambda e: (sum(e), e))
    return out


@lru_cache(maxsize=None)
def _partitions_in_box(length: int, D: int) -> tuple[tuple[int, ...], ...]:
    if length == 0:
        return ((),)
    out = []

    def grow(prefix, cap, budget):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for a in range(min(cap, budget), -1, -1):
            grow(prefix + [a], a, budget - a)

    grow([], D, D)
    return tuple(out)


def orbit_sum(exp: Sequence[int], blocks: Sequence[int]) -> Poly:
    """Sum of the distinct monomials in the ``S_blocks``-orbit of ``x^exp``."""
    from sympy.utilities.iterables import multiset_permutations

    pieces = [list(multiset_permutations(list(exp[lo:hi]))) for lo, hi in block_bounds(blocks)]
    terms = {tuple(a for piece in choice for a in piece): 1 for choice in product(*pieces)}
    return Poly._raw(terms, len(exp))


class BlockSymPoly(Poly):
    """A polynomial invariant under the Young subgroup ``S_blocks``."""

    __slots__ = ("blocks",)

    def __init__(self, poly: Poly, blocks: Sequence[int]):
        blocks = tuple(blocks)
        if sum(blocks) != poly.nvars:
            raise ValueError("blocks do not match the number of variables")
        if not poly.is_invariant(blocks):
            raise ValueError(f"polynomial {poly} is not invariant under S_{blocks}")
        self.terms, self.nvars, self._hash, self.blocks = poly.terms, poly.nvars, None, blocks

    @property
    def poly(self) -> Poly:
        return Poly._raw(self.terms, self.nvars)


def block_orbit_basis(blocks: Sequence[int], D: int) -> list[BlockSymPoly]:
    """Orbit sums of block-dominant monomials of degree ``<= D``: a basis of ``(P^blocks)_{<= D}``."""
    blocks = tuple(blocks)
    return [BlockSymPoly(orbit_sum(e, blocks), blocks) for e in dominant_exponents(blocks, D)]


def orbit_coordinates(f: Poly, blocks: Sequence[int]) -> dict[tuple[int, ...], int | Fraction]:
    """Coordinates of a block-invariant polynomial in the orbit-sum basis, keyed by dominant exponent."""
    out = {}
    bounds = block_bounds(blocks)
    for e, c in f.terms.items():
        if all(all(e[k] >= e[k + 1] for k in range(lo, hi - 1)) for lo, hi in bounds):
            out[e] = c
    return out


def coproduct_split(f: Poly, a: int, b: int) -> list[tuple[Poly, Poly]]:
    """Pairs ``(f1, f2)`` symmetric in ``a`` and ``b`` variables with ``sum f1 (x) f2 = f``."""
    if f.nvars != a + b:
        raise ValueError("variable count must be a + b")
    if not f.is_invariant((a + b,)):
        raise ValueError("polynomial is not symmetric")
    grouped: dict = {}
    for exp, c in orbit_coordinates(f, (a, b)).items():
        left, right = exp[:a], exp[a:]
        grouped.setdefault(right, {})[left] = c
    pairs = []
    for right, lefts in sorted(grouped.items()):
        f1 = sum((orbit_sum(left, (a,)) * c for left, c in lefts.items()), Poly.zero(a))
        pairs.append((f1, orbit_sum(right, (b,))))
    return pairs


class USeries:
    """A truncated series ``c_0 + c_1 u^{-1} + ... + c_N u^{-N}`` over a coefficient ring.

    Coefficient products default to ``*``; pass ``product`` to use another
    bilinear operation (for instance composition of morphisms).
    """

    __slots__ = ("coeffs", "product")

    def __init__(self, coeffs: Sequence, product: Callable | None = None):
        self.coeffs = list(coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.product = product or operator.mul

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int):
        return self.coeffs[d]

    def _like(self, coeffs) -> "USeries":
        return USeries(coeffs, self.product)

    def __add__(self, other: "USeries") -> "USeries":
        n = min(self.order, other.order)
        return self._like([self.coeffs[d] + other.coeffs[d] for d in range(n + 1)])

    def __sub__(self, other: "USeries") -> "USeries":
        n = min(self.order, other.order)
        return self._like([self.coeffs[d] - other.coeffs[d] for d in range(n + 1)])

    def __neg__(self) -> "USeries":
        return self._like([-c for c in self.coeffs])

    def scale(self, scalar) -> "USeries":
        return self._like([c * scalar for c in self.coeffs])

    def __mul__(self, other: "USeries") -> "USeries":
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            terms = [self.product(self.coeffs[d], other.coeffs[k - d]) for d in range(k + 1)]
            out.append(reduce(operator.add, terms))
        return self._like(out)

    def map(self, fn: Callable) -> "USeries":
        return self._like([fn(c) for c in self.coeffs])

    def shift(self, k: int, zero) -> "USeries":
        """Multiply by ``u^{-k}`` (keeping the order)."""
        return self._like(([zero] * k + self.coeffs)[: self.order + 1])

    def truncate(self, N: int) -> "USeries":
        return self._like(self.coeffs[: N + 1])

    def invert(self, one, zero=None) -> "USeries":
        """Inverse of a series whose constant term is the unit ``one``."""
        if self.coeffs[0] != one:
            raise ValueError("constant coefficient is not the unit")
        out = [one]
        for k in range(1, self.order + 1):
            acc = zero if zero is not None else None
            for m in range(1, k + 1):
                term = self.product(self.coeffs[m], out[k - m])
                acc = term if acc is None else acc + term
            out.append(-acc)
        return self._like(out)

    def translate(self, c) -> "USeries":
        """The series in ``u + c``: ``u^{-d} -> sum_s (-1)^s C(d+s-1, s) c^s u^{-d-s}``."""
        c = as_rational(c)
        out = list(self.coeffs)
        if c:
            out = [self.coeffs[0]] + [None] * self.order
            for k in range(1, self.order + 1):
                acc = None
                for d in range(1, k + 1):
                    s = k - d
                    weight = (-1) ** s * comb(k - 1, s) * c ** s
                    if weight:
                        term = self.coeffs[d] * weight
                        acc = term if acc is None else acc + term
                out[k] = acc if acc is not None else self.coeffs[k] * 0
        return self._like(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, USeries) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"USeries({self.coeffs!r})"


def expand_linear_inverse(c: Poly, N: int) -> USeries:
    """``1/(u - c) = sum_{d >= 0} c^d u^{-d-1}`` truncated at ``u^{-N}``."""
    coeffs = [Poly.zero(c.nvars)]
    power = Poly.one(c.nvars)
    for _ in range(N):
        coeffs.append(power)
        power = power * c
    return USeries(coeffs)


def series_inverse_of_linear(variable: int, shift, nvars: int, N: int) -> USeries:
    """``1/(u + shift - x_variable)`` as a series in ``u^{-1}``."""
    return expand_linear_inverse(Poly.variable(variable, nvars) - shift, N)


def series_constant(value: Poly, N: int) -> USeries:
    return USeries([value] + [Poly.zero(value.nvars)] * N)


def series_product_over(variables: Iterable[int], factor: Callable[[int], USeries], nvars: int, N: int) -> USeries:
    result = series_constant(Poly.one(nvars), N)
    for k in variables:
        result = result * factor(k)
    return result


def ratio_series(variables: Sequence[int], top_shift, bottom_shift, nvars: int, N: int) -> USeries:
    """``prod_p (u + top - x_p) / (u + bottom - x_p)`` over the listed variables.

    Each factor is ``1 + (top - bottom) / (u + bottom - x_p)``.
    """
    delta = as_rational(top_shift) - as_rational(bottom_shift)

    def factor(k):
        inv = series_inverse_of_linear(k, bottom_shift, nvars, N).scale(delta)
        return series_constant(Poly.one(nvars), N) + inv

    return series_product_over(variables, factor, nvars, N)


def inverse_product_series(variables: Sequence[int], shift, nvars: int, N: int) -> USeries:
    """``1 / prod_p (u + shift - x_p)``."""
    return series_product_over(variables, lambda k: series_inverse_of_linear(k, shift, nvars, N), nvars, N)


def normalized_product_series(variables: Sequence[int], shift, nvars: int, N: int) -> USeries:
    """``u^{-m} prod_p (u + shift - x_p) = prod_p (1 - (x_p - shift) u^{-1})`` for ``m`` variables."""
    def factor(k):
        coeffs = [Poly.one(nvars), Poly.constant(shift, nvars) - Poly.variable(k, nvars)]
        return USeries(coeffs + [Poly.zero(nvars)] * (N - 1)) if N >= 1 else USeries(coeffs[:1])

    return series_product_over(variables, factor, nvars, N)
