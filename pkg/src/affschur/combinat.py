"""Compositions, permutations, coset matrices and double cosets of symmetric groups.

Permutations are one-line tuples of ``1..r``.  The product is ordinary
composition, ``(v * w)(k) = v(w(k))``, and index words are acted on from the
right by ``word . w = (word[w(1)], ..., word[w(r)])``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import accumulate, combinations_with_replacement, product
from typing import Iterable, Iterator, Sequence

Composition = tuple[int, ...]


def composition(parts: Iterable[int]) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"composition parts must be natural numbers: {parts}")
    return parts


def enumerate_compositions(n: int, r: int) -> list[Composition]:
    """All length-``n`` compositions of ``r`` in lexicographic order."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    if n == 0:
        return [()] if r == 0 else []
    out = []
    for bars in combinations_with_replacement(range(r + 1), n - 1):
        cuts = (0, *bars, r)
        out.append(tuple(cuts[k + 1] - cuts[k] for k in range(n)))
    return sorted(out)


def block_bounds(parts: Sequence[int]) -> list[tuple[int, int]]:
    """0-based half-open position ranges of the blocks of a composition."""
    ends = list(accumulate(parts))
    return [(end - size, end) for size, end in zip(parts, ends)]


def standard_word(parts: Sequence[int]) -> tuple[int, ...]:
    """The index word ``i^lambda = (1^{lambda_1}, 2^{lambda_2}, ...)``."""
    return tuple(label for label, size in enumerate(parts, 1) for _ in range(size))


class Permutation(tuple):
    """A permutation of ``1..r`` in one-line notation."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation in one-line notation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, r: int) -> "Permutation":
        return tuple.__new__(cls, range(1, r + 1))

    @classmethod
    def simple(cls, i: int, r: int) -> "Permutation":
        if not 1 <= i < r:
            raise ValueError(f"s_{i} is not a simple transposition of S_{r}")
        images = list(range(1, r + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return tuple.__new__(cls, images)

    @classmethod
    def from_word(cls, letters: Iterable[int], r: int) -> "Permutation":
        """The product ``s_{i_1} s_{i_2} ...`` of simple transpositions."""
        w = cls.identity(r)
        for i in letters:
            w = w.right_simple(i)
        return w

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], r: int) -> "Permutation":
        images = list(range(1, r + 1))
        for cycle in cycles:
            for a, b in zip(cycle, (*cycle[1:], cycle[0])):
                images[a - 1] = b
        return cls(images)

    @property
    def rank(self) -> int:
        return len(self)

    def __call__(self, k: int) -> int:
        return self[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self) != len(other):
            raise ValueError("permutations of different degree")
        return tuple.__new__(Permutation, (self[k - 1] for k in other))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for k, image in enumerate(self, 1):
            inv[image - 1] = k
        return tuple.__new__(Permutation, inv)

    def right_simple(self, i: int) -> "Permutation":
        """``self * s_i``: swap the entries in places ``i`` and ``i+1``."""
        images = list(self)
        images[i - 1], images[i] = images[i], images[i - 1]
        return tuple.__new__(Permutation, images)

    def left_simple(self, i: int) -> "Permutation":
        """``s_i * self``: swap the values ``i`` and ``i+1``."""
        swap = {i: i + 1, i + 1: i}
        return tuple.__new__(Permutation, (swap.get(v, v) for v in self))

    def length(self) -> int:
        return sum(1 for a in range(len(self)) for b in range(a + 1, len(self)) if self[a] > self[b])

    def reduced_word(self) -> tuple[int, ...]:
        """Lexicographically smallest reduced word ``(i_1, ..., i_l)`` with ``self = s_{i_1}...s_{i_l}``."""
        return _reduced_word(tuple(self))

    def act_on_word(self, word: Sequence) -> tuple:
        """Right action ``word . self``."""
        return tuple(word[k - 1] for k in self)

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, len(self) + 1):
            if start in seen or self(start) == start:
                continue
            cycle, k = [], start
            while k not in seen:
                seen.add(k)
                cycle.append(k)
                k = self(k)
            out.append(tuple(cycle))
        return out

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)})"


@lru_cache(maxsize=None)
def _reduced_word(images: tuple[int, ...]) -> tuple[int, ...]:
    # the smallest left descent comes first; peel it off and recurse
    letters = []
    w = list(images)
    position = {v: k for k, v in enumerate(w)}
    while True:
        for i in range(1, len(w)):
            if position[i] > position[i + 1]:
                break
        else:
            return tuple(letters)
        letters.append(i)
        a, b = position[i], position[i + 1]
        w[a], w[b] = i + 1, i
        position[i], position[i + 1] = b, a


def all_permutations(r: int) -> list[Permutation]:
    from itertools import permutations

    return [tuple.__new__(Permutation, p) for p in permutations(range(1, r + 1))]


def in_young_subgroup(w: Permutation, parts: Sequence[int]) -> bool:
    labels = standard_word(parts)
    return w.act_on_word(labels) == labels


class CosetMatrix:
    """A natural-number matrix; an element of ``Mat_lambda^mu`` with ``lambda`` the row sums."""

    __slots__ = ("entries", "ncols", "_hash")

    def __init__(self, entries: Iterable[Iterable[int]], ncols: int | None = None):
        rows = tuple(tuple(int(a) for a in row) for row in entries)
        if rows and len({len(row) for row in rows}) != 1:
            raise ValueError("ragged matrix")
        if any(a < 0 for row in rows for a in row):
            raise ValueError("coset matrices have natural number entries")
        if rows:
            if ncols is not None and ncols != len(rows[0]):
                raise ValueError("column count does not match the entries")
            ncols = len(rows[0])
        self.entries = rows
        # a matrix with no rows still has a column count (morphisms out of (0, ..., 0))
        self.ncols = ncols or 0
        self._hash = hash((rows, self.ncols))

    @classmethod
    def diagonal(cls, parts: Sequence[int]) -> "CosetMatrix":
        n = len(parts)
        return cls([[parts[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_pair(cls, top: Sequence[int], bottom: Sequence[int], n_rows: int, n_cols: int) -> "CosetMatrix":
        """The matrix counting positions ``k`` with ``top[k] = i`` and ``bottom[k] = j``."""
        counts = [[0] * n_cols for _ in range(n_rows)]
        for i, j in zip(top, bottom):
            counts[i - 1][j - 1] += 1
        return cls(counts, n_cols)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), self.ncols

    @property
    def row_sums(self) -> Composition:
        return tuple(sum(row) for row in self.entries)

    @property
    def col_sums(self) -> Composition:
        n_cols = self.shape[1]
        return tuple(sum(row[j] for row in self.entries) for j in range(n_cols))

    @property
    def size(self) -> int:
        return sum(self.row_sums)

    def transpose(self) -> "CosetMatrix":
        n_rows, n_cols = self.shape
        return CosetMatrix([[self.entries[i][j] for i in range(n_rows)] for j in range(n_cols)], n_rows)

    def rotate(self) -> "CosetMatrix":
        """Reverse the order of rows and columns."""
        return CosetMatrix([row[::-1] for row in self.entries[::-1]], self.ncols)

    def flat(self) -> tuple[int, ...]:
        return tuple(a for row in self.entries for a in row)

    def __eq__(self, other) -> bool:
        return isinstance(other, CosetMatrix) and self.entries == other.entries and self.ncols == other.ncols

    def __lt__(self, other: "CosetMatrix") -> bool:
        return (self.shape, self.flat()) < (other.shape, other.flat())

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if not self.entries and self.ncols:
            return f"CosetMatrix([], ncols={self.ncols})"
        return f"CosetMatrix({[list(row) for row in self.entries]})"


def coset_matrices(lam: Sequence[int], mu: Sequence[int]) -> list[CosetMatrix]:
    """All of ``Mat_lambda^mu``, ordered lexicographically by row-major entries."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    n_rows, n_cols = len(lam), len(mu)
    found: list[tuple[int, ...]] = []

    def fill(row: int, remaining: list[int], acc: list[tuple[int, ...]]):
        if row == n_rows:
            if not any(remaining):
                found.append(tuple(a for r in acc for a in r))
            return
        for entries in _row_fillings(lam[row], remaining):
            fill(row + 1, [c - a for c, a in zip(remaining, entries)], acc + [entries])

    fill(0, list(mu), [])
    found.sort()
    return [CosetMatrix([flat[i * n_cols:(i + 1) * n_cols] for i in range(n_rows)], n_cols) for flat in found]


def _row_fillings(total: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if not caps:
        if total == 0:
            yield ()
        return
    for first in range(min(total, caps[0]) + 1):
        for rest in _row_fillings(total - first, caps[1:]):
            yield (first, *rest)


def dA(A: CosetMatrix) -> Permutation:
    """The minimal length double coset representative attached to ``A``.

    The bottom strand at position ``k`` of column block ``j`` runs to row ``i``
    (rows taken in increasing order inside the block); top block ``i`` receives
    its strands in column order.
    """
    return tuple.__new__(Permutation, _dA_images(A.entries))


@lru_cache(maxsize=None)
def _dA_images(rows: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    lam = [sum(row) for row in rows]
    row_start = [0, *accumulate(lam)]
    filled = [0] * n_rows
    images = []
    for j in range(n_cols):
        for i in range(n_rows):
            for _ in range(rows[i][j]):
                filled[i] += 1
                images.append(row_start[i] + filled[i])
    return tuple(images)


def dA_word(A: CosetMatrix) -> tuple[int, ...]:
    """The index word ``i^lambda . d_A``: the row reached by each bottom strand."""
    return _dA_word(A.entries)


@lru_cache(maxsize=None)
def _dA_word(rows: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    return tuple(i + 1 for j in range(n_cols) for i in range(n_rows) for _ in range(rows[i][j]))


def redundancies(A: CosetMatrix) -> tuple[Composition, Composition]:
    """``(lambda(A), mu(A))``: entries read along rows and down columns."""
    return A.flat(), A.transpose().flat()


def refines(nu: Sequence[int], mu: Sequence[int]) -> bool:
    """Whether every block of ``mu`` is a union of consecutive blocks of ``nu`` (zeros allowed)."""
    if sum(nu) != sum(mu):
        return False
    cuts_nu = set(accumulate(nu))
    return all(c in cuts_nu for c in accumulate(mu))


def min_coset_reps(nu: Sequence[int], mu: Sequence[int]) -> list[Permutation]:
    """Minimal length representatives of the right cosets ``S_nu y`` inside ``S_mu``."""
    return [word_to_min_rep(nu, word) for word in coset_words(nu, mu)]


def coset_words(nu: Sequence[int], mu: Sequence[int]) -> list[tuple[int, ...]]:
    """Words ``i^nu . y`` for ``y`` in ``(S_nu\\S_mu)_min``, ordered by length then lexicographically."""
    nu, mu = tuple(nu), tuple(mu)
    if not refines(nu, mu):
        raise ValueError(f"{nu} does not refine {mu}")
    return list(_coset_words(nu, mu))


@lru_cache(maxsize=None)
def _coset_words(nu: Composition, mu: Composition) -> tuple[tuple[int, ...], ...]:
    from sympy.utilities.iterables import multiset_permutations

    labels = standard_word(nu)
    pieces = [sorted(tuple(p) for p in multiset_permutations(list(labels[lo:hi]))) for lo, hi in block_bounds(mu)]
    words = [tuple(a for piece in choice for a in piece) for choice in product(*pieces)]
    words.sort(key=lambda w: (inversions(w), w))
    return tuple(words)


def inversions(word: Sequence) -> int:
    return sum(1 for a in range(len(word)) for b in range(a + 1, len(word)) if word[a] > word[b])


def word_to_min_rep(parts: Sequence[int], word: Sequence[int]) -> Permutation:
    """The minimal ``y`` with ``i^parts . y = word``."""
    next_free = [lo + 1 for lo, _ in block_bounds(parts)]
    images = []
    for label in word:
        images.append(next_free[label - 1])
        next_free[label - 1] += 1
    return Permutation(images)


def bruhat_leq(A: CosetMatrix, B: CosetMatrix) -> bool:
    """``d_A <= d_B`` in Bruhat order, by the top-left partial sum criterion."""
    if A.row_sums != B.row_sums or A.col_sums != B.col_sums:
        raise ValueError("matrices index different double coset spaces")
    n_rows, n_cols = A.shape
    sum_a = [[0] * (n_cols + 1) for _ in range(n_rows + 1)]
    sum_b = [[0] * (n_cols + 1) for _ in range(n_rows + 1)]
    for s in range(n_rows):
        for t in range(n_cols):
            sum_a[s + 1][t + 1] = A.entries[s][t] + sum_a[s][t + 1] + sum_a[s + 1][t] - sum_a[s][t]
            sum_b[s + 1][t + 1] = B.entries[s][t] + sum_b[s][t + 1] + sum_b[s + 1][t] - sum_b[s][t]
            if sum_a[s + 1][t + 1] < sum_b[s + 1][t + 1]:
                return False
    return True


def bruhat_leq_perm(v: Permutation, w: Permutation) -> bool:
    """Bruhat order on ``S_r`` by the subword criterion: some reduced word of ``w`` contains one of ``v``."""
    target = tuple(v)
    word = w.reduced_word()
    r = len(w)
    reachable = {tuple(range(1, r + 1))}
    for letter in word:
        reachable |= {tuple(x[k - 1] for k in Permutation.simple(letter, r)) for x in reachable}
    return target in reachable


def matrix_of_word(word: Sequence[int], mu: Sequence[int], n_rows: int) -> CosetMatrix:
    """The coset matrix of the double coset containing the minimal rep with index word ``word``."""
    return CosetMatrix.from_pair(word, standard_word(mu), n_rows, len(mu))


def coset_decompose(w: Permutation, lam: Sequence[int], mu: Sequence[int]) -> tuple[Permutation, CosetMatrix, Permutation]:
    """Write ``w = x * d_A * y`` with ``x`` in ``S_lambda`` and ``y`` in ``(S_{mu(A)}\\S_mu)_min``."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != len(w) or sum(mu) != len(w):
        raise ValueError("compositions do not match the permutation degree")
    word = w.act_on_word(standard_word(lam))
    A = matrix_of_word(word, mu, len(lam))
    u = word_to_min_rep(lam, word)
    y = dA(A).inverse() * u
    x = w * u.inverse()
    return x, A, y
