# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot loops on sparse polynomials and induced-module vectors.

A polynomial is a dict ``exponent tuple -> coefficient``.  A vector of the
induced module is a flat dict ``(index word, exponent tuple) -> coefficient``.
Positions ``i`` are 0-based here: ``i`` stands for the pair of variables
``x_{i+1}, x_{i+2}``.
"""

cdef dict _demazure_cache = {}


def demazure_monomial(tuple exp, Py_ssize_t i):
    """Terms ``(exponent, sign)`` of the Demazure operator applied to one monomial."""
    cdef Py_ssize_t a, b, lo, hi, k
    cdef int sign
    cdef list base
    key = (exp, i)
    hit = _demazure_cache.get(key)
    if hit is not None:
        return hit
    a = exp[i]
    b = exp[i + 1]
    out = []
    if a != b:
        lo, hi, sign = (b, a, 1) if a > b else (a, b, -1)
        base = list(exp)
        for k in range(hi - lo):
            base[i] = hi - 1 - k
            base[i + 1] = lo + k
            out.append((tuple(base), sign))
    out = tuple(out)
    _demazure_cache[key] = out
    return out


cpdef tuple swap_exp(tuple exp, Py_ssize_t i):
    e = list(exp)
    e[i], e[i + 1] = e[i + 1], e[i]
    return tuple(e)


def poly_add_into(target, source, scale=1):
    for e, c in source.items():
        v = target.get(e, 0) + scale * c
        if v:
            target[e] = v
        else:
            target.pop(e, None)
    return target


def poly_mul(dict p, dict q):
    cdef dict out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def poly_swap(p, i):
    return {swap_exp(e, i): c for e, c in p.items()}


def poly_demazure(p, i):
    out = {}
    for e, c in p.items():
        for e2, sign in demazure_monomial(e, i):
            v = out.get(e2, 0) + sign * c
            if v:
                out[e2] = v
            else:
                del out[e2]
    return out


def poly_diamond(p, i):
    out = poly_swap(p, i)
    for e, c in p.items():
        for e2, sign in demazure_monomial(e, i):
            v = out.get(e2, 0) + sign * c
            if v:
                out[e2] = v
            else:
                del out[e2]
    return out


def vec_rmul_simple(dict vec, Py_ssize_t i):
    """Right multiplication by ``s_{i+1}`` in ``M(mu) (x) AH_r``.

    ``word (x) g s = word.s (x) s(g) + word (x) d(g)``; when the two letters agree
    ``word.s = word`` is absorbed.
    """
    cdef dict out = {}
    cdef tuple word, e, key
    for (word, e), c in vec.items():
        a = word[i]
        b = word[i + 1]
        if a != b:
            w = list(word)
            w[i] = b
            w[i + 1] = a
            key = (tuple(w), swap_exp(e, i))
        else:
            key = (word, swap_exp(e, i))
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            del out[key]
        for e2, sign in demazure_monomial(e, i):
            key = (word, e2)
            v = out.get(key, 0) + sign * c
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def vec_rmul_poly(dict vec, dict p):
    cdef dict out = {}
    for (word, e1), c1 in vec.items():
        for e2, c2 in p.items():
            key = (word, tuple(a + b for a, b in zip(e1, e2)))
            v = out.get(key, 0) + c1 * c2
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def vec_add_into(target, source, scale=1):
    for k, c in source.items():
        v = target.get(k, 0) + scale * c
        if v:
            target[k] = v
        else:
            target.pop(k, None)
    return target
