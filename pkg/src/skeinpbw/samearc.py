"""The seven relations among the four stated generators of a single arc.

The three systems below are tabulated, not re-derived; the test-suite
checks them against the matrix equations they come from.
"""

from .laurent import ONE, A, q
from .ncpoly import NCPolynomial, sg
from .rewrite import Relator

_qq = q - q ** -1


def _system_a():
    q2 = q ** 2
    return [
        ("pm", "pp", [(q, ("pp", "pm"))]),
        ("mp", "pp", [(q, ("pp", "mp"))]),
        ("mm", "pm", [(q, ("pm", "mm"))]),
        ("mm", "mp", [(q, ("mp", "mm"))]),
        ("pm", "mp", [(q, ("pp", "mm")), (-q, ())]),
        ("mp", "pm", [(q, ("pp", "mm")), (-q, ())]),
        ("mm", "pp", [(q2, ("pp", "mm")), (ONE - q2, ())]),
    ]


def _system_d():
    q2 = q ** 2
    return [
        ("mp", "pp", [(ONE, ("pp", "mp")), (_qq * q2, ("pp", "pm"))]),
        ("pm", "pp", [(q2, ("pp", "pm"))]),
        ("mm", "mp", [(ONE, ("mp", "mm")), (_qq * q2, ("pm", "mm"))]),
        ("mm", "pm", [(q2, ("pm", "mm"))]),
        ("pm", "mp", [(ONE, ("pp", "mm")), (_qq, ("pm", "pm")), (-A, ())]),
        ("mp", "pm", [(ONE, ("pp", "mm")), (_qq, ("pm", "pm")), (-A, ())]),
        ("mm", "pp", [(q2, ("pp", "mm")), (q2 * _qq, ("pm", "pm")),
                      (A * (ONE - q2), ())]),
    ]


def _system_c():
    q2 = q ** 2
    return [
        ("mp", "pp", [(ONE, ("pp", "mp")), (_qq, ("pp", "pm"))]),
        ("pm", "pp", [(q2, ("pp", "pm"))]),
        ("mm", "mp", [(ONE, ("mp", "mm")), (_qq, ("pm", "mm"))]),
        ("mm", "pm", [(q2, ("pm", "mm"))]),
        ("pm", "mp", [(q2, ("pp", "mm")), (-A ** 3, ())]),
        ("mp", "pm", [(q2, ("pp", "mm")), (-A ** 3, ())]),
        ("mm", "pp", [(q2, ("pp", "mm")), (_qq, ("pm", "pm")),
                      (A ** -1 * (ONE - q2), ())]),
    ]


TABLES = {"a": _system_a, "c": _system_c, "d": _system_d}


def same_arc_relators(arc_id, arc_type):
    """The seven relators of the arc ``arc_id`` of type ``a``, ``c`` or ``d``."""
    rows = TABLES[arc_type]()
    out = []
    for s1, s2, rhs in rows:
        lower = NCPolynomial()
        for c, states in rhs:
            lower = lower + NCPolynomial.word([sg(arc_id, s) for s in states], c)
        out.append(Relator((sg(arc_id, s1), sg(arc_id, s2)), lower))
    return out
