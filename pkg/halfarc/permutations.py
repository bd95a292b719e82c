# -*- coding: utf-8 -*-
"""Permutations of ``{0, ..., n-1}`` and small permutation groups.

Groups here are small enough to be enumerated element by element, so every
subgroup is kept as an explicit set of elements. Products are read from left
to right: ``p * q`` applies ``p`` first and then ``q``, and the conjugate of
``p`` by ``x`` is ``x**-1 * p * x``.
"""

import collections
import functools
import logging
import math

from halfarc.partitions import Partition

logger = logging.getLogger(__name__)

#: Largest number of elements enumerated for a single group, unless overridden
DEFAULT_ELEMENT_CAP = 100000


class ElementCapExceeded(RuntimeError):
    """Raised when the closure of a generating set grows past the element cap."""

    def __init__(self, cap):
        self.cap = cap
        msg = "group has more than {0} elements [raise the cap to enumerate it]"
        super(ElementCapExceeded, self).__init__(msg.format(cap))


class DomainMismatch(ValueError):
    """Raised when permutations on domains of different sizes are combined."""


def is_prime(number):
    """Primality by trial division.

    Args:
        number (int): integer to be tested

    Returns:
        True if ``number`` is a prime
    """
    if number < 2:
        return False
    if number % 2 == 0:
        return number == 2
    divisor = 3
    while divisor * divisor <= number:
        if number % divisor == 0:
            return False
        divisor += 2
    return True


@functools.total_ordering
class Permutation(object):
    """A bijection of ``{0, ..., n-1}`` stored as its sequence of images.

    Permutations are immutable, hashable and ordered lexicographically by
    their images.

    Args:
        images (iterable of int): ``images[x]`` is the image of ``x``

    Raises:
        ValueError: if ``images`` is not a bijection of ``0..n-1``
    """

    __slots__ = ("_images", "_hash")

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            msg = "images must be a bijection of 0..{0} [got {1}]"
            raise ValueError(msg.format(len(images) - 1, list(images)))
        self._images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images):
        perm = cls.__new__(cls)
        perm._images = images
        perm._hash = hash(images)
        return perm

    @classmethod
    def identity(cls, size):
        """Identity permutation on ``size`` points."""
        return cls._trusted(tuple(range(size)))

    @classmethod
    def from_cycles(cls, size, *cycles):
        """Builds a permutation from disjoint cycles.

        Args:
            size (int): size of the domain
            *cycles: each cycle is a sequence ``(a, b, c, ...)`` mapping
                ``a -> b -> c -> ... -> a``
        """
        images = list(range(size))
        for cycle in cycles:
            for position, point in enumerate(cycle):
                images[point] = cycle[(position + 1) % len(cycle)]
        return cls(images)

    @property
    def images(self):
        """Tuple of images, ``images[x]`` being the image of ``x``."""
        return self._images

    @property
    def domain_size(self):
        """Number of points the permutation acts on."""
        return len(self._images)

    def __call__(self, point):
        return self._images[point]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other._images) != len(self._images):
            msg = "cannot compose permutations on {0} and {1} points"
            raise DomainMismatch(msg.format(len(self._images), len(other._images)))
        return Permutation._trusted(tuple(map(other._images.__getitem__, self._images)))

    def inverse(self):
        """Returns the inverse permutation."""
        inverse = [0] * len(self._images)
        for point, image in enumerate(self._images):
            inverse[image] = point
        return Permutation._trusted(tuple(inverse))

    def __pow__(self, exponent):
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = Permutation.identity(len(self._images))
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self, other):
        """Returns ``other**-1 * self * other``."""
        return other.inverse() * self * other

    def commutes_with(self, other):
        """True if ``self * other == other * self``."""
        return self * other == other * self

    def is_identity(self):
        """True if every point is fixed."""
        return all(point == image for point, image in enumerate(self._images))

    def fixed_points(self):
        """Sorted list of the points fixed by the permutation."""
        return [point for point, image in enumerate(self._images) if point == image]

    def cycles(self):
        """Cycles of length at least 2, each starting at its smallest point."""
        seen = set()
        result = []
        for start in range(len(self._images)):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            current = self._images[start]
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self._images[current]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def order(self):
        """Order of the permutation in the symmetric group."""
        return functools.reduce(
            lambda a, b: a * b // math.gcd(a, b), (len(c) for c in self.cycles()), 1
        )

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __lt__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images < other._images

    def __hash__(self):
        return self._hash

    def __getstate__(self):
        return self._images

    def __setstate__(self, state):
        self._images = state
        self._hash = hash(state)

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(x) for x in cycle) + ")" for cycle in cycles)

    def __repr__(self):
        return "Permutation({0})".format(list(self._images))


def compose(first, second):
    """Product that applies ``first`` and then ``second``.

    Args:
        first (Permutation): permutation applied first
        second (Permutation): permutation applied second

    Returns:
        Permutation: the map ``x -> second(first(x))``

    Raises:
        DomainMismatch: if the two permutations act on domains of different size
    """
    return first * second


def induced_permutation(perm, partition):
    """Action of ``perm`` on the cells of an invariant partition.

    Args:
        perm (Permutation): permutation that maps cells onto cells
        partition (Partition): partition of the domain of ``perm``

    Returns:
        Permutation: permutation of the cell indices
    """
    cell_of = partition.cell_of
    return Permutation(cell_of[perm(cell[0])] for cell in partition.cells)


def _extend(subgroup, generators, cap):
    """Closure of a group under one more generator.

    ``subgroup`` lists the elements of the group generated by all but the
    last entry of ``generators``, and the last generator is not in it. The
    result is built as a union of right cosets of ``subgroup``.
    """
    elements = list(subgroup)
    seen = set(subgroup)
    representatives = [generators[-1]]
    coset = [element * generators[-1] for element in subgroup]
    elements.extend(coset)
    seen.update(coset)
    if len(elements) > cap:
        raise ElementCapExceeded(cap)

    position = 0
    while position < len(representatives):
        representative = representatives[position]
        for generator in generators:
            candidate = representative * generator
            if candidate in seen:
                continue
            coset = [element * candidate for element in subgroup]
            elements.extend(coset)
            seen.update(coset)
            if len(elements) > cap:
                raise ElementCapExceeded(cap)
            representatives.append(candidate)
        position += 1
    return elements, seen


def _close(candidates, base, base_generators, cap):
    """Adds candidates one at a time to a group, skipping those already in it.

    Returns:
        tuple: (elements, element set, generators actually used)
    """
    elements = list(base)
    seen = set(base)
    used = list(base_generators)
    for candidate in candidates:
        if candidate in seen:
            continue
        used.append(candidate)
        elements, seen = _extend(elements, used, cap)
    return elements, seen, used


def generate_elements(generators, cap=None):
    """Enumerates the group generated by a list of permutations.

    Args:
        generators (list of Permutation): nonempty list of permutations on a
            common domain
        cap (int or None): largest number of elements allowed, defaults to
            ``DEFAULT_ELEMENT_CAP``

    Returns:
        tuple: the elements of the group, sorted

    Raises:
        ValueError: if ``generators`` is empty
        DomainMismatch: if generators act on different domains
        ElementCapExceeded: if the group has more than ``cap`` elements
    """
    generators = list(generators)
    if not generators:
        raise ValueError("at least one generator is needed to enumerate a group")
    size = generators[0].domain_size
    if any(g.domain_size != size for g in generators):
        raise DomainMismatch("all generators must act on {0} points".format(size))
    cap = DEFAULT_ELEMENT_CAP if cap is None else cap
    identity = Permutation.identity(size)
    elements, _, _ = _close(generators, [identity], [], cap)
    return tuple(sorted(elements))


class PermGroup(object):
    """A permutation group given by generators, with elements computed on demand.

    Args:
        generators (iterable of Permutation): generators of the group
        domain_size (int or None): number of points, needed only when there
            are no generators
        cap (int or None): largest number of elements the group may have

    Raises:
        ValueError: if neither generators nor a domain size are given
        DomainMismatch: if generators act on different domains
    """

    def __init__(self, generators, domain_size=None, cap=None):
        generators = tuple(generators)
        if domain_size is None:
            if not generators:
                raise ValueError("a group without generators needs an explicit domain size")
            domain_size = generators[0].domain_size
        if any(g.domain_size != domain_size for g in generators):
            raise DomainMismatch("all generators must act on {0} points".format(domain_size))
        self.domain_size = domain_size
        self.generators = generators
        self.cap = DEFAULT_ELEMENT_CAP if cap is None else cap
        self._elements = None
        self._element_set = None
        self._classes = None

    @property
    def identity(self):
        """Identity element of the group."""
        return Permutation.identity(self.domain_size)

    @property
    def elements(self):
        """Sorted tuple of all the elements of the group."""
        if self._elements is None:
            elements = generate_elements(self.generators or [self.identity], self.cap)
            self._element_set = frozenset(elements)
            self._elements = elements
            logger.debug(
                "enumerated a group of order %d on %d points", len(elements), self.domain_size
            )
        return self._elements

    @property
    def element_set(self):
        """Frozen set of all the elements of the group."""
        if self._elements is None:
            self.elements  # pylint: disable=pointless-statement
        return self._element_set

    @property
    def group(self):
        """The group itself (subgroups answer with their parent)."""
        return self

    def order(self):
        """Number of elements of the group."""
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, element):
        return element in self.element_set

    def is_abelian(self):
        """True if all generators commute pairwise."""
        return all(a.commutes_with(b) for a in self.generators for b in self.generators)

    def as_subgroup(self):
        """The whole group as a Subgroup of itself."""
        return Subgroup(self, self.element_set, self.generators)

    def trivial_subgroup(self):
        """The subgroup containing only the identity."""
        return Subgroup(self, [self.identity], ())

    def subgroup(self, generators):
        """Subgroup generated by a list of elements.

        Args:
            generators (iterable of Permutation): elements of the group

        Returns:
            Subgroup: the subgroup they generate

        Raises:
            ValueError: if some generator is not an element of the group
        """
        generators = list(generators)
        for generator in generators:
            if generator not in self:
                raise ValueError("{0} is not an element of the group".format(generator))
        _, seen, used = _close(generators, [self.identity], [], self.cap)
        return Subgroup(self, seen, used)

    def conjugacy_class(self, element):
        """Sorted tuple of the conjugates of ``element``."""
        found = {element}
        frontier = [element]
        inverses = [(g.inverse(), g) for g in self.generators]
        while frontier:
            discovered = []
            for current in frontier:
                for inverse, generator in inverses:
                    conjugate = inverse * current * generator
                    if conjugate not in found:
                        found.add(conjugate)
                        discovered.append(conjugate)
            frontier = discovered
        return tuple(sorted(found))

    def conjugacy_classes(self):
        """Conjugacy classes, ordered by their smallest element."""
        if self._classes is None:
            assigned = set()
            classes = []
            for element in self.elements:
                if element in assigned:
                    continue
                current = self.conjugacy_class(element)
                assigned.update(current)
                classes.append(current)
            self._classes = tuple(classes)
        return self._classes

    def __repr__(self):
        return "PermGroup(<{0} generators on {1} points>)".format(
            len(self.generators), self.domain_size
        )


class Subgroup(object):
    """A subgroup of a PermGroup, stored as its set of elements.

    Two subgroups are equal when they have the same elements.

    Args:
        parent (PermGroup): the group containing the subgroup
        elements (iterable of Permutation): elements of the subgroup
        generators (iterable of Permutation or None): a generating set, if
            known. It is computed on demand otherwise
    """

    def __init__(self, parent, elements, generators=None):
        self.parent = parent
        self.element_set = frozenset(elements)
        self.elements = tuple(sorted(self.element_set))
        self._generators = None if generators is None else tuple(generators)

    @property
    def group(self):
        """The ambient group."""
        return self.parent

    @property
    def domain_size(self):
        """Number of points the subgroup acts on."""
        return self.parent.domain_size

    @property
    def identity(self):
        """Identity element."""
        return self.parent.identity

    @property
    def generators(self):
        """A generating set, greedily chosen among the sorted elements."""
        if self._generators is None:
            _, _, used = _close(self.elements, [self.identity], [], len(self.elements))
            self._generators = tuple(used)
        return self._generators

    def order(self):
        """Number of elements of the subgroup."""
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, element):
        return element in self.element_set

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.element_set == other.element_set

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.element_set)

    def sort_key(self):
        """Key ordering subgroups by order and then by their sorted elements."""
        return (len(self.elements), self.elements)

    def is_trivial(self):
        """True if the subgroup contains only the identity."""
        return len(self.elements) == 1

    def issubset(self, other):
        """True if every element of ``self`` belongs to ``other``."""
        return self.element_set <= other.element_set

    def intersection(self, other):
        """Subgroup of the elements common to ``self`` and ``other``."""
        return Subgroup(self.parent, self.element_set & other.element_set)

    def join(self, other):
        """Smallest subgroup containing both ``self`` and ``other``."""
        if other.issubset(self):
            return self
        if self.issubset(other):
            return other
        _, seen, used = _close(
            other.generators, self.elements, self.generators, self.parent.cap
        )
        return Subgroup(self.parent, seen, used)

    def conjugate(self, element):
        """The subgroup ``element**-1 * self * element``."""
        inverse = element.inverse()
        return Subgroup(
            self.parent,
            (inverse * x * element for x in self.elements),
            [inverse * g * element for g in self.generators],
        )

    def as_group(self, cap=None):
        """The subgroup as a standalone PermGroup."""
        group = PermGroup(self.generators, domain_size=self.domain_size, cap=cap)
        group._elements = self.elements  # pylint: disable=protected-access
        group._element_set = self.element_set  # pylint: disable=protected-access
        return group

    def __repr__(self):
        return "Subgroup(<order {0} on {1} points>)".format(len(self.elements), self.domain_size)


def _ambient(group):
    """PermGroup owning ``group`` (itself, or the parent of a Subgroup)."""
    return group.parent if isinstance(group, Subgroup) else group


def orbits(group, domain=None):
    """Orbits of a group or subgroup.

    Args:
        group (PermGroup or Subgroup): the acting group
        domain (iterable of int or None): points whose orbits are wanted,
            all the points by default

    Returns:
        Partition: the orbits through the points of ``domain``
    """
    points = range(group.domain_size) if domain is None else sorted(set(domain))
    generators = group.generators
    seen = set()
    cells = []
    for start in points:
        if start in seen:
            continue
        orbit = [start]
        seen.add(start)
        position = 0
        while position < len(orbit):
            point = orbit[position]
            for generator in generators:
                image = generator(point)
                if image not in seen:
                    seen.add(image)
                    orbit.append(image)
            position += 1
        cells.append(orbit)
    return Partition(cells)


def point_stabilizer(group, point):
    """Subgroup of the elements fixing ``point``.

    Args:
        group (PermGroup or Subgroup): the acting group
        point (int): a point of the domain

    Returns:
        Subgroup: the stabilizer, as a subgroup of the ambient group
    """
    if not 0 <= point < group.domain_size:
        msg = "point {0} is outside the domain [0..{1}]"
        raise ValueError(msg.format(point, group.domain_size - 1))
    return Subgroup(_ambient(group), [e for e in group.elements if e(point) == point])


def is_normal(group, subgroup):
    """Checks whether ``subgroup`` is normal in ``group``.

    It is enough to conjugate the generators of the subgroup by the
    generators of the group.

    Args:
        group (PermGroup or Subgroup): the ambient group
        subgroup (Subgroup): a subgroup of ``group``

    Returns:
        True if ``subgroup`` is normal in ``group``

    Raises:
        ValueError: if ``subgroup`` is not contained in ``group``
    """
    if not all(generator in group for generator in subgroup.generators):
        raise ValueError("the subgroup is not contained in the group")
    for element in group.generators:
        inverse = element.inverse()
        for generator in subgroup.generators:
            if inverse * generator * element not in subgroup:
                return False
    return True


def _closure_of_classes(group, classes):
    ambient = _ambient(group)
    candidates = [x for current in classes for x in current]
    _, seen, used = _close(candidates, [ambient.identity], [], ambient.cap)
    return Subgroup(ambient, seen, used)


def normal_closure(group, seed):
    """Smallest normal subgroup of ``group`` containing ``seed``.

    Args:
        group (PermGroup): the ambient group
        seed (iterable of Permutation): elements of ``group``

    Returns:
        Subgroup: the normal closure

    Raises:
        ValueError: if some element of ``seed`` is not in ``group``
    """
    seed = list(seed)
    for element in seed:
        if element not in group:
            raise ValueError("{0} is not an element of the group".format(element))
    return _closure_of_classes(group, [group.conjugacy_class(x) for x in seed])


def minimal_normal_subgroups(group):
    """Minimal normal subgroups of a nontrivial group.

    Every minimal normal subgroup is the normal closure of any of its
    elements of prime order, so only those closures are candidates.

    Args:
        group (PermGroup): a nontrivial group

    Returns:
        list of Subgroup: the minimal normal subgroups, sorted by order and
        elements

    Raises:
        ValueError: if the group is trivial
    """
    if group.order() == 1:
        raise ValueError("the trivial group has no minimal normal subgroups")
    candidates = set()
    for current in group.conjugacy_classes():
        if is_prime(current[0].order()):
            candidates.add(_closure_of_classes(group, [current]))
    minimal = [
        c for c in candidates if not any(o != c and o.issubset(c) for o in candidates)
    ]
    logger.debug(
        "found %d minimal normal subgroups in a group of order %d", len(minimal), group.order()
    )
    return sorted(minimal, key=Subgroup.sort_key)


def all_normal_subgroups(group):
    """All normal subgroups, trivial and whole group included.

    A normal subgroup is the join of the normal closures of its elements, so
    the set of normal closures of single elements is closed under joins.

    Args:
        group (PermGroup): the ambient group

    Returns:
        list of Subgroup: the normal subgroups, sorted by order and elements

    Raises:
        ElementCapExceeded: if the group is too large to be enumerated
    """
    normals = {group.trivial_subgroup(), group.as_subgroup()}
    for current in group.conjugacy_classes():
        normals.add(_closure_of_classes(group, [current]))

    frontier = sorted(normals, key=Subgroup.sort_key)
    while frontier:
        discovered = []
        snapshot = sorted(normals, key=Subgroup.sort_key)
        for first in frontier:
            for second in snapshot:
                if first.issubset(second) or second.issubset(first):
                    continue
                joined = first.join(second)
                if joined not in normals:
                    normals.add(joined)
                    discovered.append(joined)
        frontier = discovered
    logger.debug("found %d normal subgroups in a group of order %d", len(normals), group.order())
    return sorted(normals, key=Subgroup.sort_key)


def centralizer(group, subgroup):
    """Elements of ``group`` commuting with every element of ``subgroup``."""
    generators = subgroup.generators
    members = [e for e in group.elements if all(e * g == g * e for g in generators)]
    return Subgroup(_ambient(group), members)


def center(group):
    """Elements commuting with the whole group."""
    return centralizer(group, group.as_subgroup())


def describe_structure(subgroup):
    """Coarse isomorphism type of a group.

    Returns:
        str: one of ``"trivial"``, ``"cyclic"``, ``"dihedral"`` or ``"other"``
    """
    size = len(subgroup)
    if size == 1:
        return "trivial"
    orders = {element: element.order() for element in subgroup.elements}
    if size in orders.values():
        return "cyclic"
    if size % 2 == 0 and size >= 4:
        for element, element_order in orders.items():
            if element_order != size // 2:
                continue
            rotations = {element ** k for k in range(element_order)}
            if all(orders[x] == 2 for x in subgroup.elements if x not in rotations):
                return "dihedral"
    return "other"


#: A direct product together with its embedded factors
DirectProduct = collections.namedtuple("DirectProduct", ["group", "factors"])


def cyclic_group(order):
    """Cyclic group of the given order acting regularly on ``order`` points."""
    if order < 1:
        raise ValueError("the order of a cyclic group must be positive")
    rotation = Permutation((x + 1) % order for x in range(order))
    return PermGroup([rotation])


def dihedral_group(degree):
    """Dihedral group of order ``2 * degree`` acting on the vertices of a polygon."""
    if degree < 3:
        raise ValueError("dihedral groups are built on polygons with at least 3 vertices")
    rotation = Permutation((x + 1) % degree for x in range(degree))
    reflection = Permutation((-x) % degree for x in range(degree))
    return PermGroup([rotation, reflection])


def direct_product(*groups):
    """Direct product acting on the disjoint union of the domains.

    Args:
        *groups (PermGroup): the factors

    Returns:
        DirectProduct: the product group and the factors embedded in it as
        subgroups
    """
    total = sum(g.domain_size for g in groups)
    embedded = []
    offset = 0
    for group in groups:
        images = []
        for generator in group.generators:
            current = list(range(total))
            for point in range(group.domain_size):
                current[offset + point] = offset + generator(point)
            images.append(Permutation(current))
        embedded.append(images)
        offset += group.domain_size
    product = PermGroup([g for images in embedded for g in images], domain_size=total)
    factors = [product.subgroup(images) for images in embedded]
    return DirectProduct(product, factors)
