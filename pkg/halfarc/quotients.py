# -*- coding: utf-8 -*-
"""Membership in the class of 4-valent G-oriented pairs and normal quotients.

A pair ``(graph, group)`` belongs to the class when the graph is connected
and 4-valent and the group acts on it transitively on vertices and on edges
but with exactly two orbits on arcs.
"""

import collections
import enum
import logging

from networkx.utils import UnionFind

from halfarc import graphs
from halfarc.permutations import (
    PermGroup,
    Subgroup,
    induced_permutation,
    is_normal,
    orbits,
    point_stabilizer,
)

logger = logging.getLogger(__name__)


class NotAnAction(ValueError):
    """Raised when a group element does not map edges onto edges."""


class NotOG4(ValueError):
    """Raised when a pair fails one of the membership conditions.

    Attributes:
        condition (str): the first condition that failed
        facts (OG4Facts): what was computed about the pair
    """

    def __init__(self, condition, facts):
        self.condition = condition
        self.facts = facts
        msg = "pair is not 4-valent G-oriented [failed condition: {0}]"
        super(NotOG4, self).__init__(msg.format(condition))


class NotNormal(ValueError):
    """Raised when a quotient is requested by a subgroup that is not normal."""


class TrivialSubgroup(ValueError):
    """Raised when a quotient is requested by the trivial subgroup."""


class PartitionNotInvariant(ValueError):
    """Raised when a group does not permute the cells of a partition."""


class QuotientInvariantError(RuntimeError):
    """Raised when a computed quotient contradicts the structure theory.

    :func:`normal_quotient` raises it for a cyclic quotient whose induced
    group is neither the rotations nor the full dihedral group. A
    non-degenerate quotient that is not itself a 4-valent G-oriented pair is
    only recorded in ``QuotientReport.in_og4``; the classifier raises this
    error when it meets one.
    """


#: Facts gathered while checking membership
OG4Facts = collections.namedtuple(
    "OG4Facts",
    [
        "vertex_count",
        "regular_of_valency_4",
        "connected",
        "vertex_orbits",
        "edge_orbits",
        "arc_orbits",
        "stabilizer_order",
        "group_order",
    ],
)


class PairOG4(object):
    """A graph and a group verified to form a 4-valent G-oriented pair.

    Instances are returned by :func:`verify_og4`.
    """

    def __init__(self, graph, group, facts):
        self.graph = graph
        self.group = group
        self.facts = facts

    @property
    def stabilizer_order(self):
        """Order of the stabilizer of a vertex."""
        return self.facts.stabilizer_order

    def __repr__(self):
        return "PairOG4(<{0} vertices, group of order {1}>)".format(
            self.facts.vertex_count, self.facts.group_order
        )


def _count_orbits(items, generators, image_of):
    classes = UnionFind(items)
    for generator in generators:
        for item in items:
            classes.union(item, image_of(generator, item))
    return sum(1 for _ in classes.to_sets())


def check_og4(graph, group):
    """Computes the membership facts of a pair without raising on failure.

    Args:
        graph (UGraph): the graph
        group (PermGroup): a group acting on the vertices of ``graph``

    Returns:
        tuple: ``(facts, condition)`` where ``condition`` is None for a member
        and otherwise names the first failed condition: ``"valency"``,
        ``"connected"``, ``"vertex-transitive"``, ``"edge-transitive"`` or
        ``"arc-transitive"``

    Raises:
        NotAnAction: if a generator is not an automorphism of ``graph``
    """
    if group.domain_size != graph.vertex_count:
        msg = "group acts on {0} points but the graph has {1} vertices"
        raise NotAnAction(msg.format(group.domain_size, graph.vertex_count))
    for generator in group.generators:
        if not graphs.is_automorphism(graph, generator):
            raise NotAnAction("{0} does not preserve adjacency".format(generator))

    regular = graphs.is_regular(graph, 4)
    connected = graphs.is_connected(graph)
    vertex_orbits = len(orbits(group))
    edge_orbits = _count_orbits(
        graph.edges(), group.generators, lambda g, e: tuple(sorted((g(e[0]), g(e[1]))))
    )
    arc_orbits = _count_orbits(graph.arcs(), group.generators, lambda g, a: (g(a[0]), g(a[1])))
    stabilizer_order = len(point_stabilizer(group, 0)) if graph.vertex_count else 0
    facts = OG4Facts(
        graph.vertex_count,
        regular,
        connected,
        vertex_orbits,
        edge_orbits,
        arc_orbits,
        stabilizer_order,
        group.order(),
    )

    condition = None
    if not regular:
        condition = "valency"
    elif not connected:
        condition = "connected"
    elif vertex_orbits != 1:
        condition = "vertex-transitive"
    elif edge_orbits != 1:
        condition = "edge-transitive"
    elif arc_orbits != 2:
        condition = "arc-transitive"
    return facts, condition


def verify_og4(graph, group):
    """Checks that ``(graph, group)`` is a 4-valent G-oriented pair.

    Args:
        graph (UGraph): the graph
        group (PermGroup): a group acting on the vertices of ``graph``

    Returns:
        PairOG4: the verified pair

    Raises:
        NotAnAction: if the group does not act by automorphisms
        NotOG4: if a membership condition fails
    """
    facts, condition = check_og4(graph, group)
    if condition is not None:
        raise NotOG4(condition, facts)
    return PairOG4(graph, group, facts)


class Orientation(enum.Enum):
    """How the group induced on a cyclic quotient acts on the cycle."""

    ORIENTED = "oriented"
    UNORIENTED = "unoriented"
    NOT_APPLICABLE = "not-applicable"


#: Everything computed about the quotient by one normal subgroup
QuotientReport = collections.namedtuple(
    "QuotientReport",
    [
        "subgroup",
        "partition",
        "graph",
        "kernel",
        "degeneracy",
        "orientation",
        "induced_group_order",
        "intra_cell_edges",
        "in_og4",
        "og4_failure",
    ],
)


def kernel_of_partition_action(group, partition):
    """Elements of ``group`` that fix every cell of ``partition`` setwise.

    Since the group permutes the cells, looking at one point per cell is
    enough.

    Args:
        group (PermGroup): the acting group
        partition (Partition): a partition of the domain permuted by ``group``

    Returns:
        Subgroup: the kernel of the action on the cells

    Raises:
        PartitionNotInvariant: if the group does not permute the cells
    """
    if not partition.is_invariant(group.generators):
        raise PartitionNotInvariant("the group does not permute the cells of the partition")
    cell_of = partition.cell_of
    representatives = [(index, cell[0]) for index, cell in enumerate(partition.cells)]
    members = [
        element
        for element in group.elements
        if all(cell_of[element(point)] == index for index, point in representatives)
    ]
    return Subgroup(group, members)


def normal_quotient(pair, subgroup):
    """Quotient of a pair by the orbits of a nontrivial normal subgroup.

    Args:
        pair (PairOG4): the pair
        subgroup (Subgroup): a nontrivial normal subgroup of ``pair.group``

    Returns:
        QuotientReport: quotient graph, kernel, degeneracy and orientation

    Raises:
        TrivialSubgroup: if ``subgroup`` is trivial
        NotNormal: if ``subgroup`` is not normal
        QuotientInvariantError: if a cyclic quotient carries an induced group
            that is neither cyclic nor dihedral of the right order
    """
    if subgroup.is_trivial():
        raise TrivialSubgroup("quotients are taken by nontrivial normal subgroups")
    if not is_normal(pair.group, subgroup):
        raise NotNormal("the subgroup is not normal in the group of the pair")

    partition = orbits(subgroup)
    quotient_graph = graphs.quotient(pair.graph, partition)
    kernel = kernel_of_partition_action(pair.group, partition)
    degeneracy = graphs.classify_degenerate(quotient_graph)
    induced_order = pair.group.order() // kernel.order()

    orientation = Orientation.NOT_APPLICABLE
    if degeneracy.is_cycle:
        if induced_order == degeneracy.length:
            orientation = Orientation.ORIENTED
        elif induced_order == 2 * degeneracy.length:
            orientation = Orientation.UNORIENTED
        else:
            msg = "group induced on a {0}-cycle quotient has order {1} [expected {0} or {2}]"
            raise QuotientInvariantError(
                msg.format(degeneracy.length, induced_order, 2 * degeneracy.length)
            )

    in_og4 = failure = None
    if not degeneracy.is_degenerate:
        induced = PermGroup(
            [induced_permutation(g, partition) for g in pair.group.generators],
            domain_size=len(partition),
        )
        _, failure = check_og4(quotient_graph, induced)
        in_og4 = failure is None

    logger.debug(
        "quotient by a normal subgroup of order %d: %s, kernel of order %d",
        len(subgroup),
        degeneracy,
        len(kernel),
    )
    return QuotientReport(
        subgroup,
        partition,
        quotient_graph,
        kernel,
        degeneracy,
        orientation,
        induced_order,
        graphs.has_intra_cell_edges(pair.graph, partition),
        in_og4,
        failure,
    )


class Independence(object):
    """Outcome of an independence test between two cyclic normal quotients.

    Evaluates to True when the quotients are independent.

    Attributes:
        independent (bool): whether the quotients are independent
        kernel_intersection (Subgroup): intersection of the two kernels
        trivial (bool): whether that intersection is trivial
        degeneracy (Degeneracy): degeneracy of the quotient by the intersection
    """

    def __init__(self, independent, kernel_intersection, degeneracy):
        self.independent = independent
        self.kernel_intersection = kernel_intersection
        self.trivial = kernel_intersection.is_trivial()
        self.degeneracy = degeneracy

    def __bool__(self):
        return self.independent

    __nonzero__ = __bool__

    def __repr__(self):
        return "Independence(independent={0}, trivial={1})".format(self.independent, self.trivial)


def are_independent(pair, first, second):
    """Tests whether two cyclic normal quotients are independent.

    The quotients are independent when the quotient by the intersection of
    their kernels is not a cycle. A trivial intersection leaves the graph
    itself, which is 4-valent.

    Args:
        pair (PairOG4): the pair
        first (Subgroup or QuotientReport): first normal subgroup or its report
        second (Subgroup or QuotientReport): second normal subgroup or its report

    Returns:
        Independence: truthy when independent

    Raises:
        ValueError: if either quotient is not a cycle
    """
    first = first if isinstance(first, QuotientReport) else normal_quotient(pair, first)
    second = second if isinstance(second, QuotientReport) else normal_quotient(pair, second)
    if not (first.degeneracy.is_cycle and second.degeneracy.is_cycle):
        raise ValueError("independence is defined for cyclic normal quotients only")

    meet = first.kernel.intersection(second.kernel)
    if meet.is_trivial():
        degeneracy = graphs.classify_degenerate(pair.graph)
    else:
        degeneracy = graphs.classify_degenerate(graphs.quotient(pair.graph, orbits(meet)))
    return Independence(not degeneracy.is_cycle, meet, degeneracy)


#: Result of checking vertex stabilizers against the kernel of a cyclic quotient
StabilizerKernelCheck = collections.namedtuple(
    "StabilizerKernelCheck", ["orientation", "holds", "violations"]
)


def stabilizer_kernel_relation(pair, report):
    """Checks how vertex stabilizers sit relative to the kernel of a cyclic quotient.

    On an oriented quotient every vertex stabilizer lies in the kernel; on an
    unoriented one every vertex stabilizer meets the kernel trivially.

    Args:
        pair (PairOG4): the pair
        report (QuotientReport): a cyclic quotient of ``pair``

    Returns:
        StabilizerKernelCheck: whether the relation holds and the vertices
        where it fails

    Raises:
        ValueError: if the quotient is not a cycle
    """
    if not report.degeneracy.is_cycle:
        raise ValueError("the stabilizer-kernel relation concerns cyclic quotients only")
    oriented = report.orientation is Orientation.ORIENTED
    violations = set()
    for element in pair.group.elements:
        if element.is_identity():
            continue
        fixed = element.fixed_points()
        if not fixed:
            continue
        if (element in report.kernel) != oriented:
            violations.update(fixed)
    return StabilizerKernelCheck(report.orientation, not violations, tuple(sorted(violations)))
