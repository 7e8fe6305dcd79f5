"""Finite-dimensional polynomial representations of ``Y(gl_n)`` as explicit matrices.

A module stores, for every ``(i, j)``, the action of ``T_{i,j}(u)`` as
``P_{i,j}(u) / Q(u)``: ``Q`` is the monic scalar ``prod (u - b)`` over the
evaluation points used, and ``P_{i,j}`` is a matrix polynomial given by its
coefficient matrices. All arithmetic is exact (sympy rationals).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import Sequence

import sympy
from sympy import Matrix, Rational, Symbol, eye, zeros

from .combinat import Permutation, enumerate_compositions

u = Symbol("u")
_v = Symbol("v")


class InvalidSequence(ValueError):
    pass


class IrrationalRoot(ValueError):
    pass


class NotHighestWeight(ValueError):
    pass


# ---------------------------------------------------------------- polynomial sequences


def format_expr(expr) -> str:
    """Factored ASCII form with ``^`` for powers."""
    return str(sympy.factor(expr)).replace("**", "^")


def _poly(p) -> sympy.Poly:
    if isinstance(p, sympy.Poly):
        return p
    return sympy.Poly(sympy.sympify(p), u, domain="QQ")


@dataclass(frozen=True)
class PolySequence:
    """Monic ``lambda_1(u), ..., lambda_n(u)`` with ``lambda_{i+1} | lambda_i``."""

    polys: tuple

    def __init__(self, polys: Sequence):
        object.__setattr__(self, "polys", tuple(_poly(p) for p in polys))

    @property
    def n(self) -> int:
        return len(self.polys)

    @property
    def degree(self) -> int:
        return sum(p.degree() for p in self.polys)

    @classmethod
    def parse(cls, text: str) -> "PolySequence":
        """Comma separated polynomials in ``u``, e.g. ``"(u-1)^2, (u-1)"``."""
        parts = [part.strip() for part in text.replace("^", "**").split(",")]
        if not all(parts):
            raise InvalidSequence(f"empty entry in {text!r}")
        try:
            return cls([sympy.sympify(part, locals={"u": u}) for part in parts])
        except (sympy.SympifyError, TypeError, sympy.PolynomialError) as exc:
            raise InvalidSequence(str(exc)) from exc

    def __eq__(self, other) -> bool:
        return isinstance(other, PolySequence) and all(
            (a - b).is_zero for a, b in zip(self.polys, other.polys)
        ) and self.n == other.n

    def __hash__(self):
        return hash(tuple(tuple(p.all_coeffs()) for p in self.polys))

    def __str__(self) -> str:
        return ", ".join(format_expr(p.as_expr()) for p in self.polys)


def validate_sequence(s: PolySequence, r: int | None = None) -> bool:
    if any(p.is_zero or p.LC() != 1 for p in s.polys):
        return False
    if r is not None and s.degree != r:
        return False
    for upper, lower in zip(s.polys, s.polys[1:]):
        if not upper.rem(lower).is_zero:
            return False
    return True


def drinfeld_polys(s: PolySequence) -> list[sympy.Poly]:
    """``P_i = lambda_i / lambda_{i+1}`` for ``i < n``."""
    out = []
    for upper, lower in zip(s.polys, s.polys[1:]):
        q, rem = upper.div(lower)
        if not rem.is_zero:
            raise InvalidSequence(f"{lower.as_expr()} does not divide {upper.as_expr()}")
        out.append(q)
    return out


def rational_roots(p: sympy.Poly) -> Counter:
    """Roots with multiplicity; irrational or complex roots are rejected."""
    roots = Counter()
    for factor, mult in p.factor_list()[1]:
        if factor.degree() != 1:
            raise IrrationalRoot(f"{factor.as_expr()} has no rational root")
        a, b = factor.all_coeffs()
        root = sympy.Rational(-b / a)
        roots[Fraction(int(root.p), int(root.q))] += mult
    return roots


# ---------------------------------------------------------------- segments


@dataclass(frozen=True)
class Segment:
    """The segment ``[b, a]``; ``a - b`` is a natural number."""

    b: Fraction
    a: Fraction

    @property
    def length(self) -> int:
        return int(self.a - self.b) + 1


def _frac(x) -> Fraction:
    return Fraction(x)


def make_segments(pairs: Sequence[tuple]) -> list[Segment]:
    segs = [Segment(_frac(b), _frac(a)) for b, a in pairs]
    for s in segs:
        gap = s.a - s.b
        if gap.denominator != 1 or gap < 0:
            raise ValueError(f"{(s.b, s.a)} is not a segment")
    return segs


def is_dominant(segs: Sequence[Segment]) -> bool:
    return not any(segs[i].a < segs[j].a for i in range(len(segs)) for j in range(i + 1, len(segs)))


def dominant_order(segs: Sequence[Segment]) -> list[Segment]:
    return sorted(segs, key=lambda s: (-s.a, -s.b))


def segments_from_sequence(s: PolySequence) -> list[Segment]:
    """Peel off one segment at a time starting from a root of ``lambda_1``."""
    if not validate_sequence(s):
        raise InvalidSequence(f"not a valid sequence: {s}")
    roots = [rational_roots(p) for p in s.polys]
    segs = []
    while roots and +roots[0]:
        b = min(roots[0])
        k = 0
        while k < len(roots) and roots[k][b] > 0:
            k += 1
        for i in range(k):
            roots[i][b] -= 1
            roots[i] = +roots[i]
        segs.append(Segment(b, b + k - 1))
    return dominant_order(segs)


def sequence_from_segments(segs: Sequence[Segment], n: int) -> PolySequence:
    """``lambda_i(u) = prod_{j : i <= length_j} (u - b_j)``."""
    polys = []
    for i in range(1, n + 1):
        p = sympy.Integer(1)
        for s in segs:
            if i <= s.length:
                p = p * (u - Rational(s.b.numerator, s.b.denominator))
        polys.append(p)
    return PolySequence(polys)


# ---------------------------------------------------------------- modules


def _rat(x) -> Rational:
    x = Fraction(x)
    return Rational(x.numerator, x.denominator)


def _kron(a: Matrix, b: Matrix) -> Matrix:
    return Matrix(a.rows * b.rows, a.cols * b.cols, lambda i, j: a[i // b.rows, j // b.cols] * b[i % b.rows, j % b.cols])


def _poly_mul(p: list[Matrix], q: list[Matrix], combine) -> list[Matrix]:
    out = [None] * (len(p) + len(q) - 1)
    for a, x in enumerate(p):
        for b, y in enumerate(q):
            term = combine(x, y)
            out[a + b] = term if out[a + b] is None else out[a + b] + term
    return out


def _poly_add(p: list[Matrix], q: list[Matrix]) -> list[Matrix]:
    size = max(len(p), len(q))
    shape = (p or q)[0].shape
    pad = lambda s: s + [zeros(*shape)] * (size - len(s))
    return [x + y for x, y in zip(pad(p), pad(q))]


@dataclass
class YModule:
    """``T_{i,j}(u)`` acts by ``sum_k numerators[(i,j)][k] u^k / prod_b (u - b)``."""

    n: int
    dim: int
    labels: list
    denominator: list
    numerators: dict

    @property
    def q_poly(self) -> sympy.Expr:
        q = sympy.Integer(1)
        for b in self.denominator:
            q = q * (u - _rat(b))
        return sympy.expand(q)

    def numerator(self, i: int, j: int, at=u) -> Matrix:
        return sum((c * at**k for k, c in enumerate(self.numerators[(i, j)])), zeros(self.dim, self.dim))

    def action(self, i: int, j: int) -> Matrix:
        """``T_{i,j}(u)`` as a matrix of rational functions in ``u``."""
        q = self.q_poly
        return self.numerator(i, j).applyfunc(lambda e: sympy.cancel(e / q))

    def coefficient(self, i: int, j: int, d: int) -> Matrix:
        """``T_{i,j}^{(d)}``, the coefficient of ``u^{-d}``."""
        return self.coefficients(i, j, d)[d]

    def coefficients(self, i: int, j: int, N: int) -> list[Matrix]:
        # with z = 1/u: T = (z^m P(1/z)) / (z^m Q(1/z)) and the denominator has constant term 1
        m = len(self.denominator)
        q = sympy.Poly(self.q_poly, u).all_coeffs()  # leading first
        num = self.numerators[(i, j)]
        ptilde = [num[m - k] if 0 <= m - k < len(num) else zeros(self.dim, self.dim) for k in range(N + 1)]
        qtilde = [q[k] if k < len(q) else 0 for k in range(N + 1)]
        out = []
        for k in range(N + 1):
            c = ptilde[k]
            for l in range(1, k + 1):
                if qtilde[l]:
                    c = c - qtilde[l] * out[k - l]
            out.append(c)
        return out

    def generators(self) -> list[Matrix]:
        """Coefficient matrices of all numerators; they span the image of ``Y(gl_n)``."""
        mats = []
        for key in sorted(self.numerators):
            mats.extend(c for c in self.numerators[key] if not c.is_zero_matrix)
        return mats

    def gl_action(self, i: int, j: int) -> Matrix:
        return self.coefficient(i, j, 1)


def trivial_module(n: int) -> YModule:
    nums = {(i, j): [eye(1) if i == j else zeros(1, 1)] for i, j in product(range(1, n + 1), repeat=2)}
    return YModule(n, 1, [()], [], nums)


def _wedge_action(n: int, k: int) -> tuple[list[tuple[int, ...]], dict]:
    """Basis of ``Lambda^k V`` and the matrices of ``e_{i,j}``."""
    basis = list(combinations(range(1, n + 1), k))
    index = {s: p for p, s in enumerate(basis)}
    mats = {}
    for i, j in product(range(1, n + 1), repeat=2):
        m = zeros(len(basis), len(basis))
        for col, s in enumerate(basis):
            if j not in s or (i != j and i in s):
                continue
            replaced = [i if a == j else a for a in s]
            target = tuple(sorted(replaced))
            inversions = sum(1 for x, y in combinations(replaced, 2) if x > y)
            m[index[target], col] += (-1) ** inversions
        mats[(i, j)] = m
    return basis, mats


def evaluation_module(c, k: int, n: int) -> YModule:
    """``Lambda^k V`` with ``T_{i,j}(u) = delta_{i,j} + e_{i,j} / (u - c)``."""
    if not 0 <= k <= n:
        raise ValueError(f"exterior power {k} out of range for gl_{n}")
    basis, mats = _wedge_action(n, k)
    d = len(basis)
    c = _rat(c)
    nums = {}
    for (i, j), e in mats.items():
        delta = eye(d) if i == j else zeros(d, d)
        nums[(i, j)] = [e - c * delta, delta]
    return YModule(n, d, basis, [Fraction(int(c.p), int(c.q))], nums)


def tensor_modules(M: YModule, N: YModule) -> YModule:
    """``T_{i,j}(u) -> sum_k T_{i,k}(u) (x) T_{k,j}(u)``."""
    if M.n != N.n:
        raise ValueError("modules for different gl_n")
    n = M.n
    nums = {}
    for i, j in product(range(1, n + 1), repeat=2):
        total: list[Matrix] = []
        for k in range(1, n + 1):
            total = _poly_add(total, _poly_mul(M.numerators[(i, k)], N.numerators[(k, j)], _kron)) if total else \
                _poly_mul(M.numerators[(i, k)], N.numerators[(k, j)], _kron)
        nums[(i, j)] = total
    labels = [(a, b) for a in M.labels for b in N.labels]
    return YModule(n, M.dim * N.dim, labels, M.denominator + N.denominator, nums)


def standard_module(segs: Sequence[Segment], n: int) -> YModule:
    """Tensor product of ``ev_{b_j}^* Lambda^{a_j - b_j + 1} V`` in the given order."""
    for s in segs:
        if not 1 <= s.length <= n:
            raise ValueError(f"segment [{s.b}, {s.a}] too long for gl_{n}")
    module = trivial_module(n)
    for s in segs:
        module = tensor_modules(module, evaluation_module(s.b, s.length, n))
    return module


# ---------------------------------------------------------------- weights and highest weights


def _nullspace(stacked: Matrix) -> list[Matrix]:
    return stacked.nullspace()


def _span_matrix(vectors: list[Matrix], dim: int) -> Matrix:
    return Matrix.hstack(*vectors) if vectors else zeros(dim, 0)


def weight_spaces(M: YModule) -> dict[tuple[int, ...], list[Matrix]]:
    """Joint eigenspaces of ``T_{i,i}^{(1)}``; raises if the action is not semisimple with natural eigenvalues."""
    diag = [M.gl_action(i, i) for i in range(1, M.n + 1)]
    total = diag[0]
    for d in diag[1:]:
        total = total + d
    eigen = set(total.eigenvals())
    if len(eigen) > 1 or not total.is_diagonalizable():
        raise NotHighestWeight("the total degree is not a scalar")
    r = int(next(iter(eigen))) if eigen else 0
    spaces = {}
    for weight in enumerate_compositions(M.n, r):
        stacked = Matrix.vstack(*[d - w * eye(M.dim) for d, w in zip(diag, weight)])
        basis = _nullspace(stacked)
        if basis:
            spaces[weight] = basis
    found = sum(len(b) for b in spaces.values())
    if found != M.dim:
        raise NotHighestWeight("weight spaces do not span the module")
    return spaces


def top_weight(M: YModule) -> tuple[tuple[int, ...], list[Matrix]]:
    spaces = weight_spaces(M)
    weight = max(spaces)
    return weight, spaces[weight]


def singular_space(M: YModule) -> list[Matrix]:
    """Common kernel of every coefficient of ``T_{i,j}(u)`` with ``i < j``."""
    mats = [c for i, j in product(range(1, M.n + 1), repeat=2) if i < j for c in M.numerators[(i, j)]]
    if not mats:
        return [eye(M.dim)[:, k] for k in range(M.dim)]
    return _nullspace(Matrix.vstack(*mats))


def _eigenvalue(matrix: Matrix, v: Matrix) -> sympy.Expr:
    w = matrix * v
    pivot = next(k for k in range(v.rows) if v[k] != 0)
    ratio = sympy.cancel(w[pivot] / v[pivot])
    if not (w - ratio * v).applyfunc(sympy.cancel).is_zero_matrix:
        raise NotHighestWeight("vector is not an eigenvector")
    return ratio


def highest_weight(M: YModule) -> tuple[Matrix, list[sympy.Expr]]:
    """The singular vector of top weight and the eigenvalues ``A_i(u)`` of ``T_{i,i}(u)`` on it."""
    weight, space = top_weight(M)
    singular = singular_space(M)
    combined = _span_matrix(space, M.dim)
    both = _nullspace(Matrix.hstack(combined, -_span_matrix(singular, M.dim))) if singular else []
    if len(space) != 1 or len(both) != 1:
        raise NotHighestWeight(f"top weight space {weight} has dimension {len(space)}")
    v = space[0]
    return v, [_eigenvalue(M.action(i, i), v) for i in range(1, M.n + 1)]


def drinfeld_d_action(M: YModule) -> list[Matrix]:
    """``D_i(u)`` on ``M`` from the Gauss factorization of the operator matrix ``T(u)``."""
    n = M.n
    T = {(i, j): M.action(i, j) for i, j in product(range(1, n + 1), repeat=2)}
    out = []
    for i in range(1, n + 1):
        if i == 1:
            out.append(T[(1, 1)])
            continue
        # quasideterminant: T_ii - row * (leading block)^{-1} * column
        size = (i - 1) * M.dim
        block = Matrix(size, size, lambda a, b: T[(a // M.dim + 1, b // M.dim + 1)][a % M.dim, b % M.dim])
        row = Matrix.hstack(*[T[(i, k)] for k in range(1, i)])
        col = Matrix.vstack(*[T[(k, i)] for k in range(1, i)])
        out.append((T[(i, i)] - row * block.inv() * col).applyfunc(sympy.cancel))
    return out


def sequence_from_eigenvalues(values: Sequence[sympy.Expr]) -> PolySequence:
    """Solve ``A_i(u) = lambda_i(u+1) / lambda_i(u)`` for monic ``lambda_i``."""
    polys = []
    for value in values:
        num, den = sympy.fraction(sympy.cancel(sympy.together(value)))
        num, den = _poly(num), _poly(den)
        scale = num.LC() / den.LC()
        if scale != 1:
            raise NotHighestWeight(f"{value} is not a ratio of monic shifts")
        gain = Counter(rational_roots(den))
        gain.subtract(rational_roots(num))
        # with f = root multiplicities of lambda: gain(x) = f(x) - f(x + 1)
        classes: dict = {}
        for x in gain:
            classes.setdefault(x - (x.numerator // x.denominator), []).append(x)
        roots = Counter()
        for members in classes.values():
            lo, hi = min(members), max(members)
            running, x = 0, hi
            while x >= lo:
                running += gain.get(x, 0)
                if running < 0:
                    raise NotHighestWeight(f"{value} is not of the form lambda(u+1)/lambda(u)")
                if running:
                    roots[x] = running
                x -= 1
            if running != 0:
                raise NotHighestWeight(f"{value} is not of the form lambda(u+1)/lambda(u)")
        p = sympy.Integer(1)
        for x, mult in roots.items():
            p = p * (u - _rat(x)) ** mult
        lam = _poly(sympy.expand(p))
        check = sympy.cancel(lam.as_expr().subs(u, u + 1) / lam.as_expr() - value)
        if check != 0:
            raise NotHighestWeight(f"{value} is not of the form lambda(u+1)/lambda(u)")
        polys.append(lam)
    return PolySequence(polys)


def nazarov_tarasov_eigenvalues(segs: Sequence[Segment], n: int) -> list[sympy.Expr]:
    lam = sequence_from_segments(segs, n)
    return [sympy.cancel(p.as_expr().subs(u, u + 1) / p.as_expr()) for p in lam.polys]


# ---------------------------------------------------------------- quotients


def _annihilator(basis: list[Matrix], dim: int) -> Matrix:
    """Rows spanning the linear forms that vanish on ``span(basis)``."""
    if not basis:
        return eye(dim)
    forms = _span_matrix(basis, dim).T.nullspace()
    return Matrix.vstack(*[f.T for f in forms]) if forms else zeros(0, dim)


def largest_submodule_inside(M: YModule, start: list[Matrix]) -> list[Matrix]:
    """Decreasing fixed point ``N_{t+1} = N_t cap g^{-1}(N_t)`` over all generators ``g``."""
    gens = M.generators()
    current = start
    while True:
        L = _annihilator(current, M.dim)
        if L.rows == 0:
            return current
        stacked = Matrix.vstack(L, *[L * g for g in gens])
        nxt = stacked.nullspace()
        if len(nxt) == len(current):
            return nxt
        current = nxt


def quotient_module(M: YModule, sub: list[Matrix]) -> YModule:
    """``M / sub`` in the basis of coordinate vectors complementing ``sub``."""
    S = _span_matrix(sub, M.dim)
    complement = []
    for k in range(M.dim):
        e = eye(M.dim)[:, k]
        trial = Matrix.hstack(S, *complement, e)
        if trial.rank() == trial.cols:
            complement.append(e)
    C = _span_matrix(complement, M.dim)
    change = Matrix.hstack(C, S).inv()
    q = C.cols
    nums = {key: [(change * c * C)[:q, :] for c in coeffs] for key, coeffs in M.numerators.items()}
    labels = [M.labels[list(col).index(1)] for col in complement]
    return YModule(M.n, q, labels, list(M.denominator), nums)


def irreducible_quotient(M: YModule) -> YModule:
    """Quotient by the largest submodule avoiding the top weight vector."""
    weight, space = top_weight(M)
    if len(space) != 1:
        raise NotHighestWeight(f"top weight space {weight} has dimension {len(space)}")
    spaces = weight_spaces(M)
    complement = [v for w, vs in spaces.items() if w != weight for v in vs]
    return quotient_module(M, largest_submodule_inside(M, complement))


def cyclic_span(M: YModule, v: Matrix) -> int:
    gens = M.generators()
    basis = [v]
    frontier = [v]
    while frontier:
        grown = []
        for w in frontier:
            for g in gens:
                candidate = g * w
                if _span_matrix(basis + [candidate], M.dim).rank() > len(basis):
                    basis.append(candidate)
                    grown.append(candidate)
        frontier = grown
    return len(basis)


def is_irreducible(M: YModule) -> bool:
    """Cyclic on its highest weight vector and with no submodule avoiding it."""
    v, _ = highest_weight(M)
    return cyclic_span(M, v) == M.dim and irreducible_quotient(M).dim == M.dim


# ---------------------------------------------------------------- checks


def rtt_holds(M: YModule) -> bool:
    """``(u-v)[T_ij(u), T_kl(v)] = T_kj(u) T_il(v) - T_kj(v) T_il(u)`` with denominators cleared."""
    n = M.n
    P = {key: (M.numerator(*key, at=u), M.numerator(*key, at=_v)) for key in M.numerators}
    for i, j, k, l in product(range(1, n + 1), repeat=4):
        lhs = (u - _v) * (P[(i, j)][0] * P[(k, l)][1] - P[(k, l)][1] * P[(i, j)][0])
        rhs = P[(k, j)][0] * P[(i, l)][1] - P[(k, j)][1] * P[(i, l)][0]
        if not (lhs - rhs).applyfunc(sympy.expand).is_zero_matrix:
            return False
    return True


def enumerate_sequences(n: int, r: int, roots: Sequence) -> list[PolySequence]:
    """Every valid sequence of total degree ``r`` whose roots lie in ``roots``."""
    out = []

    def extend(prefix: list[Counter], remaining: int):
        if len(prefix) == n:
            if remaining == 0:
                out.append(PolySequence([_counter_poly(c) for c in prefix]))
            return
        bound = prefix[-1] if prefix else None
        top = remaining if bound is None else min(remaining, sum(bound.values()))
        for size in range(top + 1):
            for combo in combinations_with_replacement(roots, size):
                c = Counter(combo)
                if bound is not None and any(c[x] > bound[x] for x in c):
                    continue
                extend(prefix + [c], remaining - size)

    extend([], r)
    return out


def _counter_poly(c: Counter) -> sympy.Expr:
    p = sympy.Integer(1)
    for x, mult in c.items():
        p = p * (u - _rat(x)) ** mult
    return sympy.expand(p)


@dataclass
class RoundTrip:
    sequence: PolySequence
    segments: list
    module_dim: int
    head_dim: int
    recovered: PolySequence
    eigenvalues_match: bool

    @property
    def ok(self) -> bool:
        return self.recovered == self.sequence and self.eigenvalues_match


def round_trip(s: PolySequence) -> RoundTrip:
    segs = segments_from_sequence(s)
    M = standard_module(segs, s.n)
    head = irreducible_quotient(M)
    _, values = highest_weight(head)
    expected = nazarov_tarasov_eigenvalues(segs, s.n)
    match = all(sympy.cancel(a - b) == 0 for a, b in zip(values, expected))
    return RoundTrip(s, segs, M.dim, head.dim, sequence_from_eigenvalues(values), match)


def segment_module_via_tensor_space(b, r: int, n: int, N: int) -> dict[tuple[int, int], list[Matrix]]:
    """``T_{i,j}^{(d)}`` on ``V^{(x) r} (x)_{kS_r} k_{[b, b+r-1]}`` in the wedge basis, ``d <= N``.

    The segment module has ``x_p -> b + p - 1`` and ``S_r`` acting by the sign;
    the induced tensor space collapses onto ``Lambda^r V`` with ``v_word`` going to
    ``v_{word_1} ^ ... ^ v_{word_r}``.
    """
    from .tenspace import TensorVector, ytt_act

    basis = list(combinations(range(1, n + 1), r))
    index = {s: p for p, s in enumerate(basis)}
    points = [Fraction(b) + p for p in range(r)]

    def wedge(word):
        if len(set(word)) < len(word):
            return None, 0
        inversions = sum(1 for x, y in combinations(word, 2) if x > y)
        return tuple(sorted(word)), (-1) ** inversions

    def scalar(h) -> Fraction:
        total = Fraction(0)
        for (w, e), c in h.data.items():
            sign = (-1) ** Permutation(w).length()
            value = Fraction(c)
            for x, k in zip(points, e):
                value *= x**k
            total += sign * value
        return total

    out = {}
    for i, j in product(range(1, n + 1), repeat=2):
        mats = [zeros(len(basis), len(basis)) for _ in range(N + 1)]
        for col, s in enumerate(basis):
            series = ytt_act(i, j, TensorVector.basis(n, s), N)
            for d in range(N + 1):
                for word, h in series[d].terms.items():
                    target, sign = wedge(word)
                    if target is None:
                        continue
                    mats[d][index[target], col] += _rat(sign * scalar(h))
        out[(i, j)] = mats
    return out


__all__ = [
    "PolySequence", "Segment", "YModule", "InvalidSequence", "IrrationalRoot", "NotHighestWeight",
    "validate_sequence", "drinfeld_polys", "segments_from_sequence", "sequence_from_segments", "make_segments",
    "is_dominant", "dominant_order", "evaluation_module", "tensor_modules", "standard_module", "trivial_module",
    "weight_spaces", "top_weight", "singular_space", "highest_weight", "drinfeld_d_action",
    "sequence_from_eigenvalues", "nazarov_tarasov_eigenvalues", "largest_submodule_inside", "quotient_module",
    "irreducible_quotient", "is_irreducible", "cyclic_span", "rtt_holds", "enumerate_sequences", "round_trip",
    "RoundTrip", "segment_module_via_tensor_space", "format_expr", "u",
]
