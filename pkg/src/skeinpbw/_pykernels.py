"""Pure-Python versions of the hot kernels.

These are the reference implementations; ``_ckernels.pyx`` mirrors them
one-for-one and is preferred when the compiled module is importable.
"""


def add_terms(a, b, sign):
    """Return the canonical dict ``a + sign*b`` (exponent -> int)."""
    if not b:
        return dict(a) if sign == 1 else {k: v for k, v in a.items()}
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, 0) + sign * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def mul_terms(a, b):
    """Return the canonical dict of the product of two Laurent term maps."""
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    out = {}
    for kb, vb in b.items():
        for ka, va in a.items():
            k = ka + kb
            nv = out.get(k, 0) + va * vb
            if nv:
                out[k] = nv
            else:
                del out[k]
    return out


def accumulate(target, source, scale):
    """In place ``target += scale * source`` on {word: coeff} maps.

    Coefficients are arbitrary ring elements supporting ``*``, ``+`` and
    truthiness.  Zero results are removed.
    """
    for key, c in source.items():
        v = c * scale
        old = target.get(key)
        if old is not None:
            v = old + v
        if v:
            target[key] = v
        elif old is not None:
            del target[key]


def reduce_word(word, rules, memo, budget, one):
    """Normal form of a word (tuple of ints) under quadratic rules.

    ``rules`` maps a pair ``(i, j)`` to a list of ``(rhs_word, coeff)`` where
    ``rhs_word`` has length at most two.  The leftmost reducible position is
    rewritten first; results are memoised per word.  ``budget`` is a
    one-element list counting remaining rewrite steps and ``one`` is the
    unit of the coefficient ring.
    """
    hit = memo.get(word)
    if hit is not None:
        return hit
    n = len(word)
    pos = -1
    for p in range(n - 1):
        if (word[p], word[p + 1]) in rules:
            pos = p
            break
    if pos < 0:
        res = {word: one}
        memo[word] = res
        return res
    budget[0] -= 1
    if budget[0] < 0:
        raise RecursionError("rewrite step budget exhausted")
    prefix = word[:pos]
    suffix = word[pos + 2:]
    out = {}
    for rhs, c in rules[(word[pos], word[pos + 1])]:
        sub = reduce_word(prefix + rhs + suffix, rules, memo, budget, one)
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
