"""The induced tensor space ``V^{(x) r} (x)_{kS_r} AH_r``.

The summand of weight ``mu`` is ``M(mu) (x) AH_r`` with basis
``m_mu (x) y x^a``, ``y`` a minimal right coset representative of ``S_mu``.
We key it by the index word ``i^mu . y`` instead of ``y`` itself, so a vector is
a flat dict ``(word, exponent) -> coefficient``; ``v_word (x) x^a`` is then the
same basis element read in tensor space.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels as K
from .combinat import Composition, Permutation, standard_word, word_to_min_rep
from .daha import AHElement, ah_mul, by_permutation
from .polyring import Poly, USeries, as_rational


class InducedVector:
    __slots__ = ("weight", "data")

    def __init__(self, weight: Sequence[int], data: dict | None = None):
        self.weight = tuple(weight)
        self.data = data if data is not None else {}

    @property
    def rank(self) -> int:
        return sum(self.weight)

    @classmethod
    def generator(cls, weight: Sequence[int]) -> "InducedVector":
        """``m_mu (x) 1``."""
        weight = tuple(weight)
        return cls(weight, {(standard_word(weight), (0,) * sum(weight)): 1})

    @classmethod
    def from_terms(cls, weight: Sequence[int], terms: dict) -> "InducedVector":
        """Build from a map ``minimal coset rep -> Poly``."""
        weight = tuple(weight)
        labels = standard_word(weight)
        data = {}
        for y, f in terms.items():
            y = Permutation(y)
            if word_to_min_rep(weight, y.act_on_word(labels)) != y:
                raise ValueError(f"{y} is not a minimal coset representative for S_{weight}")
            word = y.act_on_word(labels)
            for e, c in f.terms.items():
                data[(word, e)] = c
        return cls(weight, data)

    @property
    def terms(self) -> dict[Permutation, Poly]:
        """The map ``minimal coset rep -> Poly``."""
        r = self.rank
        return {word_to_min_rep(self.weight, w): Poly(t, r) for w, t in sorted(by_permutation(self.data).items())}

    def by_word(self) -> dict[tuple, Poly]:
        r = self.rank
        return {w: Poly._raw(t, r) for w, t in by_permutation(self.data).items()}

    def is_zero(self) -> bool:
        return not self.data

    def _check(self, other: "InducedVector"):
        if self.weight != other.weight:
            raise ValueError(f"weight mismatch: {self.weight} vs {other.weight}")

    def __add__(self, other: "InducedVector") -> "InducedVector":
        self._check(other)
        return InducedVector(self.weight, K.vec_add_into(dict(self.data), other.data))

    def __sub__(self, other: "InducedVector") -> "InducedVector":
        self._check(other)
        return InducedVector(self.weight, K.vec_add_into(dict(self.data), other.data, -1))

    def __neg__(self) -> "InducedVector":
        return InducedVector(self.weight, {k: -c for k, c in self.data.items()})

    def scale(self, c) -> "InducedVector":
        c = as_rational(c)
        if not c:
            return InducedVector(self.weight, {})
        return InducedVector(self.weight, {k: v * c for k, v in self.data.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, InducedVector) and self.weight == other.weight and self.data == other.data

    def right_simple(self, i: int) -> "InducedVector":
        return InducedVector(self.weight, K.vec_rmul_simple(self.data, i - 1))

    def right_perm(self, w: Permutation) -> "InducedVector":
        data = self.data
        for i in w.reduced_word():
            data = K.vec_rmul_simple(data, i - 1)
        return InducedVector(self.weight, data)

    def right_poly(self, f: Poly) -> "InducedVector":
        return InducedVector(self.weight, K.vec_rmul_poly(self.data, f.terms))

    def __repr__(self) -> str:
        parts = [f"{tuple(y)}:({f})" for y, f in self.terms.items()]
        return f"InducedVector({self.weight}, " + ("{" + ", ".join(parts) + "})")


def normalize(mu: Sequence[int], w: Permutation, f: Poly) -> InducedVector:
    """Normal form of ``m_mu (x) w f``: the ``S_mu`` part of ``w`` is absorbed."""
    mu = tuple(mu)
    word = w.act_on_word(standard_word(mu))
    return InducedVector(mu, {(word, e): c for e, c in f.terms.items()})


def right_act(v: InducedVector, h: AHElement) -> InducedVector:
    if v.rank != h.rank:
        raise ValueError("rank mismatch")
    out: dict = {}
    for w, poly in by_permutation(h.data).items():
        moved = v.data
        for i in Permutation(w).reduced_word():
            moved = K.vec_rmul_simple(moved, i - 1)
        K.vec_add_into(out, K.vec_rmul_poly(moved, poly))
    return InducedVector(v.weight, out)


def content(word: Sequence[int], n: int) -> Composition:
    counts = [0] * n
    for a in word:
        counts[a - 1] += 1
    return tuple(counts)


class TensorVector:
    """An element of ``V^{(x) r} (x) AH_r``: a map from index words to ``AHElement``."""

    __slots__ = ("n", "rank", "terms")

    def __init__(self, n: int, rank: int, terms: dict | None = None):
        self.n = n
        self.rank = rank
        clean = {}
        for word, h in (terms or {}).items():
            word = tuple(word)
            if len(word) != rank or any(not 1 <= a <= n for a in word):
                raise ValueError(f"index word {word} outside I({n},{rank})")
            if not h.is_zero():
                clean[word] = h
        self.terms = clean

    @classmethod
    def basis(cls, n: int, word: Sequence[int]) -> "TensorVector":
        word = tuple(word)
        return cls(n, len(word), {word: AHElement.one(len(word))})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TensorVector") -> "TensorVector":
        out = dict(self.terms)
        for word, h in other.terms.items():
            out[word] = out[word] + h if word in out else h
        return TensorVector(self.n, self.rank, {w: h for w, h in out.items() if not h.is_zero()})

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + other.scale(-1)

    def scale(self, c) -> "TensorVector":
        return TensorVector(self.n, self.rank, {w: h.scale(c) for w, h in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorVector) and self.terms == other.terms

    def right_mul(self, h: AHElement) -> "TensorVector":
        return TensorVector(self.n, self.rank, {w: ah_mul(g, h) for w, g in self.terms.items()})

    def place_swap(self, p: int) -> "TensorVector":
        """Apply the flip ``P^{[p,p+1]}`` of tensor positions ``p, p+1`` to the ``V`` factor."""
        out = {}
        for word, h in self.terms.items():
            w = list(word)
            w[p - 1], w[p] = w[p], w[p - 1]
            out[tuple(w)] = h
        return TensorVector(self.n, self.rank, out)

    def left_poly(self, f: Poly) -> "TensorVector":
        g = AHElement.from_poly(f)
        return TensorVector(self.n, self.rank, {w: ah_mul(g, h) for w, h in self.terms.items()})

    def matrix_unit(self, a: int, b: int, p: int) -> "TensorVector":
        """``e_{a,b}^{[p]}``: replace letter ``b`` by ``a`` in place ``p``."""
        out = {}
        for word, h in self.terms.items():
            if word[p - 1] == b:
                w = list(word)
                w[p - 1] = a
                key = tuple(w)
                out[key] = out[key] + h if key in out else h
        return TensorVector(self.n, self.rank, out)

    def __repr__(self) -> str:
        return f"TensorVector({self.terms!r})"


def project(tv: TensorVector) -> dict[Composition, InducedVector]:
    """``pi(v_i (x) h) = m_mu (x) w h`` where ``i = i^mu . w``; split by weight."""
    out: dict[Composition, dict] = {}
    for word, h in tv.terms.items():
        mu = content(word, tv.n)
        target = out.setdefault(mu, {})
        for (w, e), c in h.data.items():
            moved = Permutation(w).act_on_word(word)
            key = (moved, e)
            value = target.get(key, 0) + c
            if value:
                target[key] = value
            else:
                del target[key]
    return {mu: InducedVector(mu, data) for mu, data in sorted(out.items()) if data}


def _zero_series(n: int, rank: int, N: int) -> list[TensorVector]:
    return [TensorVector(n, rank) for _ in range(N + 1)]


def ytt_act(i: int, j: int, tv: TensorVector, N: int) -> USeries:
    """Entry ``(i, j)`` of ``prod_{p=1..r} (1 + Q^{[1,p+1]} / (u - x_p))`` applied to ``tv``.

    Computed right to left: ``W_p^{(k)}`` is the ``(k, j)`` entry of the partial
    product ``M_p ... M_r`` applied to ``tv``, a truncated series of tensor vectors.
    """
    n, r = tv.n, tv.rank
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("matrix entry outside gl_n")
    # current[k] = entry (k, j) of M_{p+1} ... M_r applied to tv
    current = {k: _zero_series(n, r, N) for k in range(1, n + 1)}
    current[j][0] = tv
    for p in range(r, 0, -1):
        powers = [Poly.one(r)]
        for _ in range(N):
            powers.append(powers[-1] * Poly.variable(p, r))
        nxt = {}
        for a in range(1, n + 1):
            series = list(current[a])
            for b in range(1, n + 1):
                moved = [v.matrix_unit(a, b, p) for v in current[b]]
                for d, v in enumerate(moved):
                    if v.is_zero():
                        continue
                    # 1/(u - x_p) = sum_k x_p^k u^{-k-1}
                    for k in range(0, N - d):
                        series[d + k + 1] = series[d + k + 1] + v.left_poly(powers[k])
            nxt[a] = series
        current = nxt
    return USeries(current[i], product=None)
