"""Defining relations and generating-function identities of the affine Schur category.

Every relation is turned into pairs of morphisms (or truncated series of
morphisms) that are computed independently through the module action and
compared exactly.  Generating functions are normalized so that both sides are
series in ``u^{-1}``: a pin ``prod (u - x)`` on a strand of thickness ``c`` is
replaced by ``u^{-c} prod (u - x)``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial
from typing import Callable, Iterator

from .aschur import (
    Morphism,
    USeries,
    compose,
    constant_series,
    cross,
    identity,
    leading_term,
    merge,
    pin,
    pin_object,
    pin_series,
    series_compose,
    spot_down,
    spot_up,
    split,
    stack,
    tensor,
)
from .combinat import min_coset_reps
from .polyring import (
    Poly,
    block_orbit_basis,
    coproduct_split,
    diamond,
    elementary,
    inverse_product_series,
    normalized_product_series,
    ratio_series,
)


def one(*parts: int) -> Morphism:
    return identity(parts)


def generalized_binomial(n: int, k: int) -> int | Fraction:
    """``n (n-1) ... (n-k+1) / k!`` for any integer ``n``."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= n - i
    value = Fraction(num, factorial(k))
    return value.numerator if value.denominator == 1 else value


def total(morphisms, source, target) -> Morphism:
    out = Morphism(source, target)
    for m in morphisms:
        out = out + m
    return out


def series_total(series: list[USeries], source, target, N: int) -> USeries:
    out = constant_series(Morphism(source, target), N)
    for s in series:
        out = out + s
    return out


def strand_vars(c: int) -> list[int]:
    return list(range(1, c + 1))


def E_series(c: int, N: int) -> USeries:
    """``u^{-c} prod_{k<=c} (u - x_k)`` in the strand's own variables."""
    return normalized_product_series(strand_vars(c), 0, c, N)


def H_series(c: int, N: int) -> USeries:
    """``1 / prod_{k<=c} (u - x_k)``."""
    return inverse_product_series(strand_vars(c), 0, c, N)


def pins_on(lam, polys: dict[int, Poly]) -> Morphism:
    """Pin polynomials (each in its own strand variables) on strands of ``lam``."""
    lam = tuple(lam)
    r = sum(lam)
    f = Poly.one(r)
    start = 0
    for k, part in enumerate(lam):
        if k in polys:
            f = f * polys[k].embed(start, r)
        start += part
    return pin_object(lam, f)


# ---------------------------------------------------------------- the crossing ladder X_s


def ladder(s: int, a: int, b: int, before=None, after=None):
    """``X_s(a, b)``: split ``a = s + (a-s)`` and ``b = (b-s) + s``, cross the middle, merge.

    ``before`` / ``after`` are optional pin layers on ``(s, a-s, b-s, s)`` and
    ``(s, b-s, a-s, s)``: a Morphism, a series, or ``None``.
    """
    layers = [tensor(split(s, a - s), split(b - s, s))]
    if before is not None:
        layers.append(before)
    layers.append(tensor(one(s), cross(a - s, b - s), one(s)))
    if after is not None:
        layers.append(after)
    layers.append(tensor(merge(s, b - s), merge(a - s, s)))
    if any(isinstance(layer, USeries) for layer in layers):
        return series_compose(*layers)
    return stack(*layers)


# ---------------------------------------------------------------- relation builders
# each returns a list of (label, lhs, rhs)


def rel_secondone():
    return [
        ("spot_up o spot_down", compose(spot_up(), spot_down()), identity(())),
        ("spot_down o spot_up", compose(spot_down(), spot_up()), identity((0,))),
    ]


def rel_zeroforks(a):
    return [
        ("merge(a,0)", merge(a, 0), tensor(one(a), spot_up())),
        ("merge(0,a)", merge(0, a), tensor(spot_up(), one(a))),
        ("split(a,0)", split(a, 0), tensor(one(a), spot_down())),
        ("split(0,a)", split(0, a), tensor(spot_down(), one(a))),
    ]


def rel_assrel(a, b, c):
    return [
        (
            "associativity",
            stack(tensor(merge(a, b), one(c)), merge(a + b, c)),
            stack(tensor(one(a), merge(b, c)), merge(a, b + c)),
        ),
        (
            "coassociativity",
            stack(split(a + b, c), tensor(split(a, b), one(c))),
            stack(split(a, b + c), tensor(one(a), split(b, c))),
        ),
    ]


def rel_mergesplit(a, b, c=None, d=None):
    out = [("merge o split", compose(merge(a, b), split(a, b)), one(a + b).scale(generalized_binomial(a + b, a)))]
    if c is not None and d is not None:
        if c + d != a + b:
            raise ValueError("mergesplit needs a + b = c + d")
        terms = []
        for s in range(a + 1):
            t = s + d - a
            if not 0 <= t <= b or b - t < 0:
                continue
            terms.append(
                stack(
                    tensor(split(s, a - s), split(b - t, t)),
                    tensor(one(s), cross(a - s, b - t), one(t)),
                    tensor(merge(s, b - t), merge(a - s, t)),
                )
            )
        out.append(("split o merge", compose(split(c, d), merge(a, b)), total(terms, (a, b), (c, d))))
    return out


def rel_tourists(a, b):
    left = [
        stack(
            tensor(split(s, a - s), one(b)),
            tensor(one(s), merge(a - s, b)),
            tensor(one(s), split(b - s, a)),
            tensor(merge(s, b - s), one(a)),
        ).scale((-1) ** s)
        for s in range(min(a, b) + 1)
    ]
    right = [
        stack(
            tensor(one(a), split(b - s, s)),
            tensor(merge(a, b - s), one(s)),
            tensor(split(b, a - s), one(s)),
            tensor(one(b), merge(a - s, s)),
        ).scale((-1) ** s)
        for s in range(min(a, b) + 1)
    ]
    return [
        ("crossing via left ladder", cross(a, b), total(left, (a, b), (b, a))),
        ("crossing via right ladder", cross(a, b), total(right, (a, b), (b, a))),
    ]


def rel_sliders(a, b, c):
    return [
        (
            "split slides through a crossing (right)",
            stack(cross(b + c, a), tensor(one(a), split(b, c))),
            stack(tensor(split(b, c), one(a)), tensor(one(b), cross(c, a)), tensor(cross(b, a), one(c))),
        ),
        (
            "split slides through a crossing (left)",
            stack(cross(c, a + b), tensor(split(a, b), one(c))),
            stack(tensor(one(c), split(a, b)), tensor(cross(c, a), one(b)), tensor(one(a), cross(c, b))),
        ),
        (
            "merge slides through a crossing (right)",
            stack(tensor(one(a), merge(b, c)), cross(a, b + c)),
            stack(tensor(cross(a, b), one(c)), tensor(one(b), cross(a, c)), tensor(merge(b, c), one(a))),
        ),
        (
            "merge slides through a crossing (left)",
            stack(tensor(merge(a, b), one(c)), cross(a + b, c)),
            stack(tensor(one(a), cross(b, c)), tensor(cross(a, c), one(b)), tensor(one(c), merge(a, b))),
        ),
    ]


def rel_symmetric(a, b, c):
    return [
        ("involution", compose(cross(b, a), cross(a, b)), one(a, b)),
        (
            "braid",
            stack(tensor(cross(a, b), one(c)), tensor(one(b), cross(a, c)), tensor(cross(b, c), one(a))),
            stack(tensor(one(a), cross(b, c)), tensor(cross(a, c), one(b)), tensor(one(c), cross(a, b))),
        ),
    ]


def rel_swallows(a, b):
    return [
        ("merge swallows crossing", compose(merge(b, a), cross(a, b)), merge(a, b)),
        ("split swallows crossing", compose(cross(b, a), split(b, a)), split(a, b)),
    ]


def _squareswitch_range(b, c, d):
    return range(max(0, c - b), min(c, d) + 1)


def rel_squareswitch1(a, b, c, d):
    lhs = stack(
        tensor(split(a - d, d), one(b)),
        tensor(one(a - d), merge(d, b)),
        tensor(one(a - d), split(c, b + d - c)),
        tensor(merge(a - d, c), one(b + d - c)),
    )
    terms = []
    for s in _squareswitch_range(b, c, d):
        coeff = generalized_binomial(a - b + c - d, s)
        if not coeff:
            continue
        terms.append(
            stack(
                tensor(one(a), split(c - s, b - c + s)),
                tensor(merge(a, c - s), one(b - c + s)),
                tensor(split(a + c - d, d - s), one(b - c + s)),
                tensor(one(a + c - d), merge(d - s, b - c + s)),
            ).scale(coeff)
        )
    return [("square switch, strand on the right", lhs, total(terms, (a, b), (a - d + c, b + d - c)))]


def rel_squareswitch2(a, b, c, d):
    lhs = stack(
        tensor(one(b), split(d, a - d)),
        tensor(merge(b, d), one(a - d)),
        tensor(split(b + d - c, c), one(a - d)),
        tensor(one(b + d - c), merge(c, a - d)),
    )
    terms = []
    for s in _squareswitch_range(b, c, d):
        coeff = generalized_binomial(a - b + c - d, s)
        if not coeff:
            continue
        terms.append(
            stack(
                tensor(split(b - c + s, c - s), one(a)),
                tensor(one(b - c + s), merge(c - s, a)),
                tensor(one(b - c + s), split(d - s, a + c - d)),
                tensor(merge(b - c + s, d - s), one(a + c - d)),
            ).scale(coeff)
        )
    return [("square switch, strand on the left", lhs, total(terms, (b, a), (b + d - c, a - d + c)))]


def rel_alghom(r, f: Poly, g: Poly, c=3):
    return [
        ("scalars", pin(r, c), one(r).scale(c)),
        ("additive", pin(r, f + g), pin(r, f) + pin(r, g)),
        ("multiplicative", pin(r, f * g), compose(pin(r, f), pin(r, g))),
    ]


def rel_fridaynight(a, b, f: Poly):
    pairs = coproduct_split(f, a, b)
    middle = total([tensor(pin(a, f1), pin(b, f2)) for f1, f2 in pairs], (a, b), (a, b))
    return [
        ("pin slides down through a merge", compose(pin(a + b, f), merge(a, b)), compose(merge(a, b), middle)),
        ("pin slides up through a split", compose(split(a, b), pin(a + b, f)), compose(middle, split(a, b))),
    ]


def _shuffle_reps(a, b):
    # minimal length representatives of the left cosets w S_(a,b)
    return [w.inverse() for w in min_coset_reps((a, b), (a + b,))]


def rel_deformedshuffle(a, b, f: Poly, g: Poly):
    r = a + b
    fg = f.embed(0, r) * g.embed(a, r)
    shuffled = Poly.zero(r)
    for w in _shuffle_reps(a, b):
        shuffled = shuffled + diamond(w, fg)
    lhs = stack(split(a, b), tensor(pin(a, f), pin(b, g)), merge(a, b))
    return [("deformed shuffle", lhs, pin(r, shuffled))]


def rel_shufflerel(a, b, f: Poly, g: Poly):
    r = a + b
    fg = f.embed(0, r) * g.embed(a, r)
    shuffled = Poly.zero(r)
    for w in _shuffle_reps(a, b):
        shuffled = shuffled + fg.act(w)
    lhs = stack(split(a, b), tensor(pin(a, f), pin(b, g)), merge(a, b))
    return [("shuffle on leading terms", leading_term(lhs), pin(r, shuffled))]


def _e(k, c):
    return elementary(k, strand_vars(c), c) if 0 <= k <= c else Poly.zero(c)


def rel_jonrel(a, b, d):
    """Elementary dot slides with the dot below the crossing."""
    lhs1 = compose(cross(a, b), pins_on((a, b), {0: _e(d, a)}))
    rhs1 = total(
        [
            ladder(s, a, b, after=pins_on((s, b - s, a - s, s), {2: _e(d - s, a - s)})).scale(factorial(s))
            for s in range(min(a, b, d) + 1)
        ],
        (a, b), (b, a),
    )
    lhs2 = compose(cross(b, a), pins_on((b, a), {1: _e(d, a)}))
    rhs2 = total(
        [
            ladder(s, b, a, after=pins_on((s, a - s, b - s, s), {1: _e(d - s, a - s)})).scale((-1) ** s * factorial(s))
            for s in range(min(a, b, d) + 1)
        ],
        (b, a), (a, b),
    )
    return [("dot on the left strand slides up", lhs1, rhs1), ("dot on the right strand slides up", lhs2, rhs2)]


def rel_otherjon(a, b, d):
    """Elementary dot slides with the dot above the crossing."""
    lhs1 = compose(pins_on((a, b), {0: _e(d, a)}), cross(b, a))
    rhs1 = total(
        [
            ladder(s, b, a, before=pins_on((s, b - s, a - s, s), {2: _e(d - s, a - s)})).scale(factorial(s))
            for s in range(min(a, b, d) + 1)
        ],
        (b, a), (a, b),
    )
    lhs2 = compose(pins_on((b, a), {1: _e(d, a)}), cross(a, b))
    rhs2 = total(
        [
            ladder(s, a, b, before=pins_on((s, a - s, b - s, s), {1: _e(d - s, a - s)})).scale((-1) ** s * factorial(s))
            for s in range(min(a, b, d) + 1)
        ],
        (a, b), (b, a),
    )
    return [("dot on the left strand slides down", lhs1, rhs1), ("dot on the right strand slides down", lhs2, rhs2)]


def _zero_series(source, target, N):
    return constant_series(Morphism(source, target), N)


def rel_bingley(a, b, N, part=None):
    """Generating-function crossing slides; both sides multiplied by ``u^{-thickness}``."""
    parts = [part] if part else [1, 2, 3, 4]
    out = []
    bottom, top = (a, b), (b, a)
    for p in parts:
        terms = []
        for s in range(min(a, b) + 1):
            if p == 1:
                lhs = series_compose(pin_series(bottom, {0: E_series(a, N)}, N), cross(a, b))
                layer = pin_series((s, b - s, a - s, s), {2: E_series(a - s, N)}, N)
                term, sign = ladder(s, a, b, after=layer), (-1) ** s
            elif p == 2:
                lhs = series_compose(cross(a, b), pin_series(top, {0: E_series(b, N)}, N))
                layer = pin_series((s, a - s, b - s, s), {2: E_series(b - s, N)}, N)
                term, sign = ladder(s, a, b, before=layer), (-1) ** s
            elif p == 3:
                lhs = series_compose(pin_series(bottom, {1: E_series(b, N)}, N), cross(a, b))
                layer = pin_series((s, b - s, a - s, s), {1: E_series(b - s, N)}, N)
                term, sign = ladder(s, a, b, after=layer), 1
            else:
                lhs = series_compose(cross(a, b), pin_series(top, {1: E_series(a, N)}, N))
                layer = pin_series((s, a - s, b - s, s), {1: E_series(a - s, N)}, N)
                term, sign = ladder(s, a, b, before=layer), 1
            terms.append(term.scale(sign * factorial(s)).shift(s, Morphism(bottom, top)))
        out.append((f"crossing slide ({p})", lhs, series_total(terms, bottom, top, N)))
    return out


def rel_rome(a, b, N):
    out = []
    for name, series in (("E", E_series), ("H", H_series)):
        lhs = series_compose(pin_series((a, b), {0: series(a, N), 1: series(b, N)}, N), cross(a, b))
        rhs = series_compose(cross(a, b), pin_series((b, a), {0: series(b, N), 1: series(a, N)}, N))
        out.append((f"double slide of {name}", lhs, rhs))
    return out


def rel_averagedotslide(r, N):
    H = H_series(1, N)
    lhs1 = series_compose(cross(r, 1), pin_series((1, r), {0: H}, N))
    rhs1 = series_compose(pin_series((r, 1), {1: H}, N), cross(r, 1)) + series_compose(
        tensor(split(1, r - 1), one(1)), pin_series((1, r - 1, 1), {0: H, 2: H}, N), tensor(one(1), merge(r - 1, 1))
    )
    lhs2 = series_compose(pin_series((1, r), {0: H}, N), cross(1, r))
    rhs2 = series_compose(cross(1, r), pin_series((r, 1), {1: H}, N)) + series_compose(
        tensor(one(1), split(r - 1, 1)), pin_series((1, r - 1, 1), {0: H, 2: H}, N), tensor(merge(1, r - 1), one(1))
    )
    return [("thin dot slides up", lhs1, rhs1), ("thin dot slides down", lhs2, rhs2)]


def _ratio_pin(r, top, bottom, N):
    return pin_series((r,), {0: ratio_series(strand_vars(r), top, bottom, r, N)}, N)


def rel_skiving(r, N):
    lhs = constant_series(one(r), N) + series_compose(split(1, r - 1), pin_series((1, r - 1), {0: H_series(1, N)}, N), merge(1, r - 1))
    return [("thin loop on the left", lhs, _ratio_pin(r, 1, 0, N))]


def rel_skiving2(r, N):
    lhs = constant_series(one(r), N) - series_compose(split(r - 1, 1), pin_series((r - 1, 1), {1: H_series(1, N)}, N), merge(r - 1, 1))
    return [("thin loop on the right", lhs, _ratio_pin(r, -1, 0, N))]


def rel_crazy(a, b, N):
    r = a + b
    lhs1 = series_compose(split(a, b), pin_series((a, b), {0: H_series(a, N)}, N), merge(a, b))
    rhs1 = series_total(
        [_ratio_pin(r, i, 0, N).scale(Fraction((-1) ** (a - i) * generalized_binomial(a, i), factorial(a))) for i in range(a + 1)],
        (r,), (r,), N,
    )
    lhs2 = series_compose(split(a, b), pin_series((a, b), {1: H_series(b, N)}, N), merge(a, b))
    rhs2 = series_total(
        [_ratio_pin(r, -i, 0, N).scale(Fraction((-1) ** i * generalized_binomial(b, i), factorial(b))) for i in range(b + 1)],
        (r,), (r,), N,
    )
    return [("factorial loop on the left", lhs1, rhs1), ("factorial loop on the right", lhs2, rhs2)]


RELATIONS: dict[str, Callable] = {
    "secondone": rel_secondone,
    "zeroforks": rel_zeroforks,
    "assrel": rel_assrel,
    "mergesplit": rel_mergesplit,
    "tourists": rel_tourists,
    "sliders": rel_sliders,
    "symmetric": rel_symmetric,
    "swallows": rel_swallows,
    "squareswitch1": rel_squareswitch1,
    "squareswitch2": rel_squareswitch2,
    "alghom": rel_alghom,
    "fridaynight": rel_fridaynight,
    "shufflerel": rel_shufflerel,
    "deformedshuffle": rel_deformedshuffle,
    "jonrel": rel_jonrel,
    "otherjon": rel_otherjon,
    "bingley": rel_bingley,
    "rome": rel_rome,
    "averagedotslide": rel_averagedotslide,
    "skiving": rel_skiving,
    "skiving2": rel_skiving2,
    "crazy": rel_crazy,
}

SERIES_RELATIONS = {"bingley", "rome", "averagedotslide", "skiving", "skiving2", "crazy"}


def relation_sides(name: str, **params):
    try:
        builder = RELATIONS[name]
    except KeyError:
        raise KeyError(f"unknown relation {name!r}") from None
    return builder(**params)


def sides_agree(lhs, rhs, N: int | None = None) -> bool:
    if isinstance(lhs, USeries) or isinstance(rhs, USeries):
        order = min(lhs.order, rhs.order) if N is None else N
        return all(lhs[d] == rhs[d] for d in range(order + 1))
    return lhs == rhs


def check_relation(name: str, N: int = 6, **params) -> list[tuple[str, bool]]:
    """Per-identity results for one parameter choice."""
    if name in SERIES_RELATIONS:
        params = dict(params, N=N)
    return [(label, sides_agree(lhs, rhs)) for label, lhs, rhs in relation_sides(name, **params)]


def verify_relation(name: str, N: int = 6, **params) -> bool:
    return all(ok for _, ok in check_relation(name, N, **params))


def symmetric_test_polys(r: int, max_degree: int) -> list[Poly]:
    """Monomial symmetric functions of degree ``1..max_degree`` together with ``e_1 + 1``."""
    polys = [b.poly for b in block_orbit_basis((r,), max_degree) if b.poly.degree() > 0]
    if r:
        polys.append(elementary(1, strand_vars(r), r) + 1)
    return polys


def relation_grid(name: str, max_thickness: int = 3, max_degree: int = 3) -> Iterator[dict]:
    """The desk-scale parameter grid for a relation."""
    T = max_thickness
    rng = range(T + 1)
    if name == "secondone":
        yield {}
    elif name == "zeroforks":
        for a in rng:
            yield {"a": a}
    elif name in ("assrel", "sliders", "symmetric"):
        for a, b, c in product(rng, repeat=3):
            yield {"a": a, "b": b, "c": c}
    elif name == "mergesplit":
        for a, b in product(rng, repeat=2):
            yield {"a": a, "b": b}
            for c in range(a + b + 1):
                d = a + b - c
                if c <= T and d <= T:
                    yield {"a": a, "b": b, "c": c, "d": d}
    elif name in ("tourists", "swallows"):
        for a, b in product(rng, repeat=2):
            yield {"a": a, "b": b}
    elif name in ("squareswitch1", "squareswitch2"):
        for a, b, c, d in product(rng, repeat=4):
            if d <= a and c <= b + d:
                yield {"a": a, "b": b, "c": c, "d": d}
    elif name == "alghom":
        for r in range(1, T + 1):
            polys = symmetric_test_polys(r, max_degree)
            for f, g in product(polys, repeat=2):
                if f.degree() + g.degree() <= max_degree + 1:
                    yield {"r": r, "f": f, "g": g}
    elif name == "fridaynight":
        for a, b in product(rng, repeat=2):
            if a + b:
                for f in symmetric_test_polys(a + b, max_degree):
                    yield {"a": a, "b": b, "f": f}
    elif name in ("deformedshuffle", "shufflerel"):
        for a, b in product(rng, repeat=2):
            for f in [Poly.one(a)] + symmetric_test_polys(a, max_degree):
                for g in [Poly.one(b)] + symmetric_test_polys(b, max_degree):
                    if f.degree() + g.degree() > max_degree:
                        continue
                    if name == "shufflerel" and not (f.is_homogeneous() and g.is_homogeneous()):
                        continue
                    yield {"a": a, "b": b, "f": f, "g": g}
    elif name in ("jonrel", "otherjon"):
        for a, b in product(range(1, T + 1), repeat=2):
            for d in range(1, min(a, max_degree) + 1):
                yield {"a": a, "b": b, "d": d}
    elif name in ("bingley", "rome"):
        for a, b in product(rng, repeat=2):
            yield {"a": a, "b": b}
    elif name in ("averagedotslide", "skiving", "skiving2"):
        for r in range(1, T + 1):
            yield {"r": r}
    elif name == "crazy":
        for a, b in product(rng, repeat=2):
            if a + b:
                yield {"a": a, "b": b}
    else:
        raise KeyError(f"unknown relation {name!r}")
