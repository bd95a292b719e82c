# -*- coding: utf-8 -*-
"""The five families of grid graphs ``Gamma(r, s)`` and their half-arc-transitive groups.

Vertices of ``Gamma(r, s)`` are the pairs ``(i, j)`` of ``Z_r x Z_s``, with
``(i, j)`` adjacent to the four vertices ``(i +- 1, j +- 1)``. Groups are
generated by words in four coordinate maps::

    mu:    (i, j) -> (i + 1, j)
    nu:    (i, j) -> (i, j + 1)
    sigma: (i, j) -> (-i, j)
    tau:   (i, j) -> (-i, -j)

On the double cover the vertices are ``(i, j, d)`` with ``d`` in ``Z_2``;
``mu``, ``nu`` and ``tau`` leave ``d`` alone while ``sigma`` becomes
``(i, j, d) -> (i, -j, d + 1)``.

Words are read from left to right, like products of permutations.
"""

import collections
import enum
import logging
import re

from halfarc import graphs
from halfarc.permutations import PermGroup, Permutation, describe_structure

logger = logging.getLogger(__name__)


class InvalidParameters(ValueError):
    """Raised when ``(r, s)`` violate the conditions of a family."""


class ConstructionError(RuntimeError):
    """Raised when a constructed pair fails a structural sanity check."""


class FamilyId(enum.Enum):
    """The five families of graph-group pairs."""

    GAMMA_G = 1
    GAMMA_PLUS_G_PLUS = 2
    GAMMA_H = 3
    GAMMA_PLUS_H_PLUS = 4
    GAMMA_2_G_2 = 5

    @property
    def row(self):
        """Row number of the family in the classification table."""
        return self.value

    @property
    def label(self):
        """Name used on the command line and in reports."""
        return "row{0}".format(self.value)

    @property
    def graph_name(self):
        """Name of the graph, e.g. ``Gamma+(r,s)``."""
        return _NAMES[self][0]

    @property
    def group_name(self):
        """Name of the group, e.g. ``H+(r,s)``."""
        return _NAMES[self][1]

    @property
    def on_plus_vertices(self):
        """True for the families living on the same-parity vertices."""
        return self in (FamilyId.GAMMA_PLUS_G_PLUS, FamilyId.GAMMA_PLUS_H_PLUS)

    @classmethod
    def from_label(cls, label):
        """Parses ``row3``, ``3`` or ``GAMMA_H`` (case insensitive).

        Raises:
            ValueError: if the label does not name a family
        """
        text = str(label).strip().lower()
        for family in cls:
            if text in (family.label, str(family.value), family.name.lower()):
                return family
        msg = "unknown family {0!r} [use one of {1}]"
        raise ValueError(msg.format(label, ", ".join(f.label for f in cls)))


_NAMES = {
    FamilyId.GAMMA_G: ("Gamma(r,s)", "G(r,s)"),
    FamilyId.GAMMA_PLUS_G_PLUS: ("Gamma+(r,s)", "G+(r,s)"),
    FamilyId.GAMMA_H: ("Gamma(r,s)", "H(r,s)"),
    FamilyId.GAMMA_PLUS_H_PLUS: ("Gamma+(r,s)", "H+(r,s)"),
    FamilyId.GAMMA_2_G_2: ("Gamma2(r,s)", "G2(r,s)"),
}

#: Generating words of each family
GENERATOR_WORDS = {
    FamilyId.GAMMA_G: ("mu", "nu", "sigma"),
    FamilyId.GAMMA_PLUS_G_PLUS: ("mu^2", "mu nu", "sigma"),
    FamilyId.GAMMA_H: ("mu", "sigma nu", "tau"),
    FamilyId.GAMMA_PLUS_H_PLUS: ("mu^2", "sigma mu nu", "tau"),
    FamilyId.GAMMA_2_G_2: ("mu", "nu", "sigma", "tau"),
}

#: Distinguished subgroups of each family, as lists of generating words
NAMED_WORDS = {
    FamilyId.GAMMA_G: (("M~", ("mu", "sigma")), ("M", ("mu",)), ("N", ("nu",))),
    FamilyId.GAMMA_PLUS_G_PLUS: (
        ("M~+", ("mu^2", "sigma")),
        ("M+", ("mu^2",)),
        ("N+", ("nu^2",)),
    ),
    FamilyId.GAMMA_H: (("M", ("mu",)), ("N#", ("nu^2", "tau sigma nu"))),
    FamilyId.GAMMA_PLUS_H_PLUS: (("M+", ("mu^2",)), ("N+", ("nu^2",))),
    FamilyId.GAMMA_2_G_2: (
        ("M^", ("mu", "sigma tau")),
        ("N^", ("nu", "sigma")),
        ("M", ("mu",)),
        ("N", ("nu",)),
    ),
}

#: Subgroup with a name and coarse isomorphism type
NamedSubgroup = collections.namedtuple(
    "NamedSubgroup", ["name", "subgroup", "structure", "order", "words"]
)

#: Graph whose vertices carry coordinate labels
LabeledGraph = collections.namedtuple("LabeledGraph", ["graph", "labels", "index"])

_SYMBOLS = {
    "mu": "mu",
    "μ": "mu",
    "nu": "nu",
    "ν": "nu",
    "sigma": "sigma",
    "σ": "sigma",
    "tau": "tau",
    "τ": "tau",
}
_TOKEN = re.compile(r"^([a-zμνστ]+)(?:\^(-?\d+))?$")


def parse_word(expression):
    """Splits a word such as ``"mu^3 nu^-1 sigma"`` into ``(symbol, exponent)`` pairs.

    Factors are separated by spaces or ``*``; the empty word is the identity.

    Raises:
        ValueError: if a factor is not one of ``mu``, ``nu``, ``sigma``, ``tau``
    """
    factors = []
    for token in re.split(r"[\s*]+", expression.strip()):
        if not token:
            continue
        match = _TOKEN.match(token)
        if not match or match.group(1) not in _SYMBOLS:
            raise ValueError("cannot parse factor {0!r} of word {1!r}".format(token, expression))
        exponent = int(match.group(2)) if match.group(2) is not None else 1
        factors.append((_SYMBOLS[match.group(1)], exponent))
    return factors


def check_parameters(family, r, s):
    """Checks the parity conditions of a family.

    Raises:
        InvalidParameters: if ``(r, s)`` do not satisfy them
    """
    if r < 3 or s < 3:
        raise InvalidParameters("r and s must be at least 3 [r={0}, s={1}]".format(r, s))
    conditions = {
        FamilyId.GAMMA_G: (r % 2 == 1 or s % 2 == 1, "at least one of r, s odd"),
        FamilyId.GAMMA_PLUS_G_PLUS: (r % 2 == 0 and s % 2 == 0, "r and s both even"),
        FamilyId.GAMMA_H: (r % 2 == 1 and s % 2 == 0, "r odd and s even"),
        FamilyId.GAMMA_PLUS_H_PLUS: (r % 2 == 0 and s % 2 == 0, "r and s both even"),
        FamilyId.GAMMA_2_G_2: (r % 2 == 1 and s % 2 == 1, "r and s both odd"),
    }
    holds, description = conditions[family]
    if not holds:
        msg = "{0} requires {1} [r={2}, s={3}]"
        raise InvalidParameters(msg.format(family.label, description, r, s))


def gamma(r, s):
    """The grid graph ``Gamma(r, s)``; vertex ``(i, j)`` is numbered ``i * s + j``.

    Raises:
        InvalidParameters: if ``r`` or ``s`` is smaller than 3
    """
    if r < 3 or s < 3:
        raise InvalidParameters("r and s must be at least 3 [r={0}, s={1}]".format(r, s))
    labels = tuple((i, j) for i in range(r) for j in range(s))
    edges = []
    for i, j in labels:
        for di in (1, -1):
            for dj in (1, -1):
                edges.append((i * s + j, ((i + di) % r) * s + (j + dj) % s))
    return LabeledGraph(graphs.build(r * s, edges), labels, _index(labels))


def gamma_plus(r, s):
    """Subgraph of ``Gamma(r, s)`` induced on the vertices whose coordinates share parity.

    Raises:
        InvalidParameters: unless ``r, s >= 4`` are both even
    """
    if r < 4 or s < 4 or r % 2 or s % 2:
        raise InvalidParameters("r and s must be even and at least 4 [r={0}, s={1}]".format(r, s))
    base = gamma(r, s)
    keep = [v for v, (i, j) in enumerate(base.labels) if i % 2 == j % 2]
    subgraph = graphs.induced(base.graph, keep)
    labels = tuple(base.labels[v] for v in subgraph.vertices)
    return LabeledGraph(subgraph.graph, labels, _index(labels))


def gamma_2(r, s):
    """Standard double cover of ``Gamma(r, s)``; ``(i, j, d)`` is numbered ``d*r*s + i*s + j``.

    Raises:
        InvalidParameters: unless ``r, s >= 3`` are both odd
    """
    if r < 3 or s < 3 or r % 2 == 0 or s % 2 == 0:
        raise InvalidParameters("r and s must be odd and at least 3 [r={0}, s={1}]".format(r, s))
    base = gamma(r, s)
    labels = tuple((i, j, d) for d in (0, 1) for i, j in base.labels)
    return LabeledGraph(graphs.standard_double_cover(base.graph), labels, _index(labels))


def _index(labels):
    return {label: vertex for vertex, label in enumerate(labels)}


def _grid_maps(r, s):
    return {
        "mu": lambda i, j: ((i + 1) % r, j),
        "nu": lambda i, j: (i, (j + 1) % s),
        "sigma": lambda i, j: ((-i) % r, j),
        "tau": lambda i, j: ((-i) % r, (-j) % s),
    }


def _cover_maps(r, s):
    return {
        "mu": lambda i, j, d: ((i + 1) % r, j, d),
        "nu": lambda i, j, d: (i, (j + 1) % s, d),
        "sigma": lambda i, j, d: (i, (-j) % s, 1 - d),
        "tau": lambda i, j, d: ((-i) % r, (-j) % s, d),
    }


def base_maps(labels, index, maps):
    """Realizes coordinate maps as permutations of the labeled vertices."""
    return {
        name: Permutation(index[formula(*label)] for label in labels)
        for name, formula in maps.items()
    }


class FamilyPair(object):
    """A graph of one of the five families together with its group.

    Attributes:
        family (FamilyId): the family
        r (int): first parameter
        s (int): second parameter
        graph (UGraph): the graph
        labels (tuple): coordinate label of each vertex
        group (PermGroup): the group, acting on the vertices of ``graph``
        strict (bool): whether the parity conditions of the family were enforced
    """

    def __init__(self, family, r, s, labeled, base, maps, group, strict):
        self.family = family
        self.r = r
        self.s = s
        self.graph = labeled.graph
        self.labels = labeled.labels
        self._index = labeled.index
        self._base = base
        self.base_maps = maps
        self.group = group
        self.strict = strict
        self._named = None
        self._words = None

    @property
    def pair_id(self):
        """``(family label, r, s)``."""
        return (self.family.label, self.r, self.s)

    def vertex(self, label):
        """Vertex number of a coordinate label."""
        return self._index[tuple(label)]

    def word(self, expression):
        """Permutation of the vertices realizing a word in ``mu nu sigma tau``.

        The word is evaluated on the full grid (or its double cover) and then
        restricted to the vertices of the graph.

        Raises:
            ValueError: if the word does not preserve the vertex set
        """
        size = len(self._base.labels)
        perm = Permutation.identity(size)
        for symbol, exponent in parse_word(expression):
            perm = perm * self.base_maps[symbol] ** exponent
        return self._restrict(perm, expression)

    def _restrict(self, perm, expression):
        if len(self._base.labels) == len(self.labels):
            return perm
        images = []
        for label in self.labels:
            image = self._base.labels[perm(self._base.index[label])]
            if image not in self._index:
                msg = "word {0!r} does not preserve the vertices of {1}"
                raise ValueError(msg.format(expression, self.family.graph_name))
            images.append(self._index[image])
        return Permutation(images)

    def subgroup(self, *expressions):
        """Subgroup of ``group`` generated by words.

        Raises:
            ValueError: if a word is not an element of the group
        """
        return self.group.subgroup(self.word(expression) for expression in expressions)

    @property
    def named_subgroups(self):
        """Ordered mapping from names to :class:`NamedSubgroup` records."""
        if self._named is None:
            named = collections.OrderedDict()
            for name, words in NAMED_WORDS[self.family]:
                named[name] = self._named_record(name, words)
            for prefix, symbol, modulus in (("M", "mu", self.r), ("N", "nu", self.s)):
                for divisor in range(2, modulus):
                    if modulus % divisor:
                        continue
                    word = "{0}^{1}".format(symbol, divisor)
                    try:
                        record = self._named_record("{0}_{1}".format(prefix, divisor), (word,))
                    except ValueError:
                        continue
                    named[record.name] = record
            self._named = named
        return self._named

    def _named_record(self, name, words):
        subgroup = self.subgroup(*words)
        return NamedSubgroup(name, subgroup, describe_structure(subgroup), len(subgroup), words)

    def named_subgroup(self, name):
        """Subgroup registered under ``name``.

        Raises:
            KeyError: if the name is not defined for the family
        """
        try:
            return self.named_subgroups[name].subgroup
        except KeyError:
            msg = "{0} has no subgroup named {1!r} [available: {2}]"
            raise KeyError(
                msg.format(self.family.group_name, name, ", ".join(self.named_subgroups))
            )

    def _word_table(self):
        """Maps each element reachable as ``mu^a nu^b sigma^c tau^d`` to its simplest word."""
        if self._words is None:
            table = {}
            r, s = self.r, self.s
            cover = self.family is FamilyId.GAMMA_2_G_2
            for a in range(r):
                for b in range(s):
                    for c in (0, 1):
                        for d in (0, 1):
                            images = []
                            for label in self.labels:
                                image = _apply_normal_form(label, a, b, c, d, r, s, cover)
                                if image not in self._index:
                                    break
                                images.append(self._index[image])
                            else:
                                key = _word_key(a, b, c, d)
                                perm = Permutation(images)
                                if perm not in table or key < table[perm]:
                                    table[perm] = key
            self._words = table
        return self._words

    def word_of(self, element):
        """Simplest word ``mu^a nu^b sigma^c tau^d`` realizing ``element``, or None."""
        key = self._word_table().get(element)
        return None if key is None else key[2]

    def describe(self, subgroup):
        """Human readable generators of a subgroup, e.g. ``<mu^2, sigma>``."""
        if subgroup.is_trivial():
            return "<>"
        table = self._word_table()
        ranked = sorted(
            (e for e in subgroup.elements if not e.is_identity()),
            key=lambda e: table.get(e, (99, 0, repr(e))),
        )
        if describe_structure(subgroup) == "cyclic":
            generators = [next(e for e in ranked if e.order() == len(subgroup))]
        else:
            generators = []
            current = self.group.trivial_subgroup()
            for element in ranked:
                if element not in current:
                    generators.append(element)
                    current = self.group.subgroup(generators)
                    if current == subgroup:
                        break
        words = [table[e][2] if e in table else str(e) for e in generators]
        return "<{0}>".format(", ".join(words))

    def __repr__(self):
        return "FamilyPair({0}, r={1}, s={2})".format(self.family.label, self.r, self.s)


def _apply_normal_form(label, a, b, c, d, r, s, cover):
    if cover:
        i, j, layer = label
        i, j = (i + a) % r, (j + b) % s
        if c:
            j, layer = (-j) % s, 1 - layer
        if d:
            i, j = (-i) % r, (-j) % s
        return (i, j, layer)
    i, j = label
    i, j = (i + a) % r, (j + b) % s
    if c:
        i = (-i) % r
    if d:
        i, j = (-i) % r, (-j) % s
    return (i, j)


def _word_key(a, b, c, d):
    factors = []
    for symbol, exponent in (("mu", a), ("nu", b), ("sigma", c), ("tau", d)):
        if exponent == 1:
            factors.append(symbol)
        elif exponent:
            factors.append("{0}^{1}".format(symbol, exponent))
    return (len(factors), a + b + c + d, " ".join(factors))


def make_pair(family, r, s, strict=True, cap=None):
    """Builds the graph and group of a family for the parameters ``(r, s)``.

    Args:
        family (FamilyId): the family
        r (int): first parameter
        s (int): second parameter
        strict (bool): enforce the parity conditions of the family and check
            that the graph is connected and 4-regular. The relaxed mode only
            needs what the construction itself requires, e.g. it builds
            ``H(r, s)`` with ``r`` even on the disconnected ``Gamma(r, s)``
        cap (int or None): element cap for the group

    Returns:
        FamilyPair: the constructed pair

    Raises:
        InvalidParameters: if the parameters are not valid for the family
        ConstructionError: if a generator is not an automorphism, or the
            graph is not connected and 4-regular in strict mode
    """
    if strict:
        check_parameters(family, r, s)
    elif family is FamilyId.GAMMA_H and s % 2:
        raise InvalidParameters("H(r,s) needs s even [r={0}, s={1}]".format(r, s))

    if family is FamilyId.GAMMA_2_G_2:
        labeled = gamma_2(r, s)
        base = labeled
        maps = base_maps(labeled.labels, labeled.index, _cover_maps(r, s))
    else:
        base = gamma(r, s)
        labeled = gamma_plus(r, s) if family.on_plus_vertices else base
        maps = base_maps(base.labels, base.index, _grid_maps(r, s))

    pair = FamilyPair(family, r, s, labeled, base, maps, None, strict)
    generators = [pair.word(word) for word in GENERATOR_WORDS[family]]
    for word, generator in zip(GENERATOR_WORDS[family], generators):
        if not graphs.is_automorphism(labeled.graph, generator):
            msg = "{0} is not an automorphism of {1} [r={2}, s={3}]"
            raise ConstructionError(msg.format(word, family.graph_name, r, s))
    if strict:
        if not graphs.is_regular(labeled.graph, 4) or not graphs.is_connected(labeled.graph):
            msg = "{0} is not a connected 4-regular graph [r={1}, s={2}]"
            raise ConstructionError(msg.format(family.graph_name, r, s))

    pair.group = PermGroup(generators, cap=cap)
    logger.debug(
        "built %s with r=%d, s=%d on %d vertices", family.group_name, r, s, len(pair.labels)
    )
    return pair


def named_subgroup(pair, name):
    """Subgroup of ``pair`` registered under ``name`` (see :attr:`FamilyPair.named_subgroups`)."""
    return pair.named_subgroup(name)
