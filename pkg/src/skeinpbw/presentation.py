"""Groupoid presentations, arc types, dressed matrices and their transforms.

An arc is described by the boundary arcs and positions of its endpoints
and, when both endpoints share a boundary arc, by which endpoint lies on
top.  The height datum is attached to the endpoint *roles*: reversing the
orientation keeps ``source_above`` as ``source_above``.  With that
convention orientation reversal swaps types b<->c and d<->e, height
reversal swaps b<->e and c<->d, and the tabulated matrix formulas for the
two moves commute.
"""

import itertools
import json
from dataclasses import dataclass, field, replace
from typing import Optional

from .errors import ConfigurationError, UnsupportedError, ValidationError
from .laurent import ONE
from .matrices import C, C_INV, R, R_INV, Matrix, trace_left, trace_right
from .ncpoly import NCPolynomial, StatedGenerator

SOURCE_ABOVE = "source_above"
TARGET_ABOVE = "target_above"
STATE_PAIRS = ((0, 0), (0, 1), (1, 0), (1, 1))


@dataclass(frozen=True)
class GeneratorArc:
    id: str
    source: tuple
    target: tuple
    height: Optional[str] = None
    order_index: int = 0

    @property
    def same_arc(self):
        return self.source[0] == self.target[0]

    @property
    def arc_type(self):
        return classify_type(self)

    def letters(self):
        return [StatedGenerator(self.id, i, j) for i, j in STATE_PAIRS]

    def to_json(self):
        out = {"id": self.id, "source": list(self.source), "target": list(self.target)}
        if self.height is not None:
            out["height"] = self.height
        return out


def classify_type(arc):
    """Five-way classification of an oriented arc (types ``a`` to ``e``)."""
    if arc.source[0] != arc.target[0]:
        return "a"
    if arc.height not in (SOURCE_ABOVE, TARGET_ABOVE):
        raise ValidationError("same-arc generator needs a height order", {"generator": arc.id})
    s, t = arc.source[1], arc.target[1]
    if s == t:
        raise ValidationError("endpoints of an arc must be distinct", {"generator": arc.id})
    if arc.height == TARGET_ABOVE:
        return "c" if s < t else "b"
    return "d" if s < t else "e"


@dataclass
class Presentation:
    boundary_arcs: list
    generators: list
    relations: list = field(default_factory=list)

    def __post_init__(self):
        self.validate()

    @property
    def by_id(self):
        return {g.id: g for g in self.generators}

    def ordered(self):
        return sorted(self.generators, key=lambda g: g.order_index)

    def alphabet(self):
        """Stated generators in the total order used by the rewriting."""
        return [x for g in self.ordered() for x in g.letters()]

    def validate(self):
        ids = [g.id for g in self.generators]
        if len(set(ids)) != len(ids):
            raise ValidationError("generator ids must be distinct")
        orders = [g.order_index for g in self.generators]
        if len(set(orders)) != len(orders):
            raise ValidationError("order indices must be distinct")
        arcs = set(self.boundary_arcs)
        seen = set()
        for g in self.generators:
            for end in (g.source, g.target):
                if end[0] not in arcs:
                    raise ValidationError("unknown boundary arc", {"generator": g.id, "arc": end[0]})
                if tuple(end) in seen:
                    raise ValidationError("two endpoints share a position",
                                          {"generator": g.id, "endpoint": list(end)})
                seen.add(tuple(end))
            classify_type(g)
        gens = self.by_id
        for word in self.relations:
            letters = [parse_letter(x) for x in word]
            for name, _ in letters:
                if name not in gens:
                    raise ValidationError("relation uses an unknown generator", {"letter": name})
            # word beta_k ... beta_1: the source of beta_i is the target of beta_{i+1}
            for (n1, inv1), (n2, inv2) in zip(letters, letters[1:]):
                s1 = endpoint(gens[n1], inv1, "source")[0]
                t2 = endpoint(gens[n2], inv2, "target")[0]
                if s1 != t2:
                    raise ValidationError("relation word is not composable", {"word": list(word)})
            if letters:
                s_last = endpoint(gens[letters[-1][0]], letters[-1][1], "source")[0]
                t_first = endpoint(gens[letters[0][0]], letters[0][1], "target")[0]
                if s_last != t_first:
                    raise ValidationError("relation word is not closed", {"word": list(word)})

    def normalized(self):
        """Replace every b/e arc by its inverse so that only types a, c, d remain.

        Returns ``(presentation, flips)`` where ``flips`` is the set of ids
        whose orientation was reversed (their stated generators are the
        transposed ones of the input).
        """
        gens = []
        flips = set()
        for g in self.generators:
            if g.arc_type in ("b", "e"):
                g = replace(g, source=g.target, target=g.source)
                flips.add(g.id)
            gens.append(g)
        rels = [[_flip_letter(x) if parse_letter(x)[0] in flips else x for x in w]
                for w in self.relations]
        return Presentation(list(self.boundary_arcs), gens, rels), flips

    def to_json(self):
        out = {
            "boundary_arcs": list(self.boundary_arcs),
            "generators": [g.to_json() for g in self.generators],
            "order": [g.id for g in self.ordered()],
        }
        if self.relations:
            out["relations"] = [list(w) for w in self.relations]
        return out

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def parse_letter(x):
    """``"a"`` -> ``("a", False)``; ``"a^-1"`` or ``"a-"`` -> ``("a", True)``."""
    if x.endswith("^-1"):
        return x[:-3], True
    return x, False


def _flip_letter(x):
    name, inv = parse_letter(x)
    return name if inv else name + "^-1"


def endpoint(g, inverted, which):
    if inverted:
        which = "target" if which == "source" else "source"
    return g.source if which == "source" else g.target


def presentation_from_json(data):
    """Parse presentation JSON (generators, optional relations and order)."""
    try:
        gens_raw = data["generators"]
        order = data.get("order") or [g["id"] for g in gens_raw]
        rank = {name: k for k, name in enumerate(order)}
        gens = []
        arcs = []
        for g in gens_raw:
            src = (str(g["source"][0]), int(g["source"][1]))
            tgt = (str(g["target"][0]), int(g["target"][1]))
            for a in (src[0], tgt[0]):
                if a not in arcs:
                    arcs.append(a)
            if g["id"] not in rank:
                raise ValidationError("order list misses a generator", {"generator": g["id"]})
            gens.append(GeneratorArc(str(g["id"]), src, tgt, g.get("height"), rank[g["id"]]))
        arcs = data.get("boundary_arcs") or arcs
        rels = [list(map(str, w)) for w in data.get("relations", [])]
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise ValidationError("malformed presentation JSON", {"detail": str(exc)}) from None
    return Presentation(list(arcs), gens, rels)


# dressed matrices ----------------------------------------------------------

_ONE_P = NCPolynomial.scalar(ONE)
_ZERO_P = NCPolynomial()


def lift(m):
    """Scalar matrix -> matrix of constant polynomials."""
    return m.map(NCPolynomial.scalar)


I2P = Matrix([[_ONE_P, _ZERO_P], [_ZERO_P, _ONE_P]])
CP, CIP = lift(C), lift(C_INV)
RP, RIP = lift(R), lift(R_INV)


def m_matrix(arc_id):
    """``M(alpha)`` with entry ``(i, j)`` equal to ``alpha_{ij}``."""
    return Matrix([[NCPolynomial.letter(StatedGenerator(arc_id, i, j)) for j in range(2)]
                   for i in range(2)])


def dress(arc_type, m):
    """``N`` from ``M`` according to the arc type."""
    if arc_type == "a":
        return m
    if arc_type == "b":
        return m @ CP
    if arc_type == "c":
        return m @ CP.T
    if arc_type == "d":
        return CIP @ m
    if arc_type == "e":
        return CIP.T @ m
    raise ValueError(arc_type)


def n_matrix(arc):
    return dress(classify_type(arc), m_matrix(arc.id))


def inverse_n(arc_type, n):
    """``N(alpha^-1)`` in terms of ``N(alpha)``."""
    if arc_type == "a":
        return n.T
    if arc_type in ("b", "d"):
        return CIP.T @ n.T @ CP.T
    return CIP @ n.T @ CP


def height_reversed_m(arc_type, m):
    """``M(alpha^0)`` from ``M(alpha)``; the result has the height-flipped type."""
    if arc_type == "b":
        return trace_right(RIP @ CIP.T.kron(m @ CP.T))
    if arc_type == "c":
        return trace_left(RIP @ (m @ CP).kron(CIP))
    if arc_type == "d":
        return trace_left((CIP.T @ m).kron(CP.T) @ RP)
    if arc_type == "e":
        return trace_right(CP.kron(CIP @ m) @ RP)
    raise UnsupportedError("height reversal needs both endpoints on one boundary arc",
                           {"type": arc_type})


ORIENTATION_SWAP = {"a": "a", "b": "c", "c": "b", "d": "e", "e": "d"}
HEIGHT_SWAP = {"b": "e", "e": "b", "c": "d", "d": "c"}


@dataclass(frozen=True)
class ArcView:
    """An arc after a sequence of moves, with ``M`` expressed in the original letters."""

    arc: GeneratorArc
    source: tuple
    target: tuple
    height: Optional[str]
    m: Matrix
    moves: tuple = ()

    @classmethod
    def of(cls, arc):
        return cls(arc, arc.source, arc.target, arc.height, m_matrix(arc.id))

    @property
    def arc_type(self):
        return classify_type(self)

    @property
    def id(self):
        return self.arc.id

    def n(self):
        return dress(self.arc_type, self.m)


def reverse_orientation(view):
    return ArcView(view.arc, view.target, view.source, view.height, view.m.T,
                   view.moves + ("orientation",))


def reverse_height(view):
    t = view.arc_type
    if t == "a":
        raise UnsupportedError("type a arcs have no height order", {"generator": view.id})
    flipped = TARGET_ABOVE if view.height == SOURCE_ABOVE else SOURCE_ABOVE
    return ArcView(view.arc, view.source, view.target, flipped,
                   height_reversed_m(t, view.m), view.moves + ("height",))


def apply_moves(view, moves):
    for mv in moves:
        view = reverse_orientation(view) if mv == "orientation" else reverse_height(view)
    return view


# configurations ------------------------------------------------------------

def _pattern(x, y):
    """Which of the ten configurations ``(x, y)`` realises, with x in the alpha role."""
    a, b = x.source[0], x.target[0]
    c, d = y.source[0], y.target[0]
    sx, tx, sy, ty = x.source[1], x.target[1], y.source[1], y.target[1]
    tyx, tyy = x.arc_type, y.arc_type
    if not ({a, b} & {c, d}):
        return "i"
    if tyx == "a" and tyy == "a":
        if a == c and len({a, b, d}) == 3 and sy < sx:
            return "ii"
        if a == c and b == d and a != b and sy < sx:
            return "iii" if tx < ty else "iv"
        return None
    if tyx == "a" and b == c == d and a != b:
        if tyy == "c" and sy < ty < tx:
            return "v"
        if tyy == "b" and tx < ty < sy:
            return "vi"
        if tyy == "b" and ty < tx < sy:
            return "vii"
        return None
    if a == b == c == d and tyx == "d" and tyy == "d":
        if sy < sx < ty < tx:
            return "viii"
        if sy < ty < sx < tx:
            return "ix"
        if sx < sy < ty < tx:
            return "x"
    return None


def _move_options(view):
    if view.arc_type == "a":
        return [(), ("orientation",)]
    return [(), ("orientation",), ("height",), ("orientation", "height")]


@dataclass(frozen=True)
class ConfigurationMatch:
    case: str
    alpha_role: ArcView
    beta_role: ArcView
    swapped: bool

    @property
    def recipe(self):
        return {self.alpha_role.id: self.alpha_role.moves, self.beta_role.id: self.beta_role.moves}


def match_configuration(alpha, beta):
    """Find moves bringing the pair into one of the ten configurations.

    Tries the empty recipe first, then recipes with more moves; both role
    assignments are tried for each recipe.  The first match wins.
    """
    va, vb = ArcView.of(alpha), ArcView.of(beta)
    combos = list(itertools.product(_move_options(va), _move_options(vb)))
    combos.sort(key=lambda mv: (len(mv[0]) + len(mv[1]), len(mv[0])))
    for ma, mb in combos:
        xa, xb = apply_moves(va, ma), apply_moves(vb, mb)
        for swapped, (x, y) in ((False, (xa, xb)), (True, (xb, xa))):
            case = _pattern(x, y)
            if case is not None:
                return ConfigurationMatch(case, x, y, swapped)
    raise ConfigurationError("no configuration matches this pair of arcs",
                             {"alpha": alpha.id, "beta": beta.id})
