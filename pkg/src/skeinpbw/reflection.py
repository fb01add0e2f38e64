"""The reflection anti-involution.

It conjugates coefficients (w -> w^-1), reverses the order of products and
swaps the two heights of every same-arc generator.  Stated generators keep
their names and states; what changes is the presentation they live in.
"""

from dataclasses import replace

from .laurent import Laurent
from .ncpoly import NCPolynomial
from .presentation import SOURCE_ABOVE, TARGET_ABOVE, Presentation

_FLIP = {SOURCE_ABOVE: TARGET_ABOVE, TARGET_ABOVE: SOURCE_ABOVE}


def reflect_presentation(p):
    gens = [replace(g, height=_FLIP[g.height]) if g.same_arc else g for g in p.generators]
    return Presentation(list(p.boundary_arcs), gens, [list(w) for w in p.relations])


def _bar(c):
    return c.bar() if isinstance(c, Laurent) else c


def reflection_theta(x):
    """Image of ``x`` under the reflection; an element of the reflected presentation."""
    return NCPolynomial({tuple(reversed(w)): _bar(c) for w, c in x.items()})
