# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_pykernels``; same signatures and results."""


def add_terms(dict a, dict b, long sign):
    cdef dict out = dict(a)
    cdef object k, v, nv
    if not b:
        return out
    for k, v in b.items():
        nv = out.get(k, 0) + sign * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef object ka, va, kb, vb, nv
    cdef long k
    if not a or not b:
        return out
    if len(a) < len(b):
        a, b = b, a
    for kb, vb in b.items():
        for ka, va in a.items():
            k = <long>ka + <long>kb
            nv = out.get(k, 0) + va * vb
            if nv:
                out[k] = nv
            else:
                del out[k]
    return out


def accumulate(dict target, dict source, object scale):
    cdef object key, c, v, old
    for key, c in source.items():
        v = c * scale
        old = target.get(key)
        if old is not None:
            v = old + v
        if v:
            target[key] = v
        elif old is not None:
            del target[key]


cdef dict _reduce(tuple word, dict rules, dict memo, list budget, object one):
    cdef object hit = memo.get(word)
    if hit is not None:
        return <dict>hit
    cdef Py_ssize_t n = len(word)
    cdef Py_ssize_t p, pos = -1
    for p in range(n - 1):
        if (word[p], word[p + 1]) in rules:
            pos = p
            break
    cdef dict res
    if pos < 0:
        res = {word: one}
        memo[word] = res
        return res
    budget[0] -= 1
    if budget[0] < 0:
        raise RecursionError("rewrite step budget exhausted")
    cdef tuple prefix = word[:pos]
    cdef tuple suffix = word[pos + 2:]
    cdef dict out = {}
    cdef dict sub
    cdef object rhs, c, key, v, nv, old
    for rhs, c in rules[(word[pos], word[pos + 1])]:
        sub = _reduce(prefix + rhs + suffix, rules, memo, budget, one)
        for key, v in sub.items():
            nv = v * c
            old = out.get(key)
            if old is not None:
                nv = old + nv
            if nv:
                out[key] = nv
            elif old is not None:
                del out[key]
    memo[word] = out
    return out


def reduce_word(tuple word, dict rules, dict memo, list budget, object one):
    return _reduce(word, rules, memo, budget, one)
