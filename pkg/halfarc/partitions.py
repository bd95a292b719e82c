# -*- coding: utf-8 -*-
"""Partitions of a finite point set into disjoint, nonempty cells.

Cells are stored as sorted tuples and ordered by their smallest point, so
two partitions describing the same split of the points compare equal and
number their cells identically.
"""


class Partition(object):
    """A split of a set of points into disjoint, nonempty cells.

    Args:
        cells (iterable): iterable of iterables of hashable, orderable points
            (vertex indices in practice)

    Raises:
        ValueError: if a cell is empty or a point belongs to two cells
    """

    def __init__(self, cells):
        cells = [tuple(sorted(cell)) for cell in cells]
        if not all(cells):
            raise ValueError("cells of a partition must be nonempty")
        cells.sort()

        cell_of = {}
        for index, cell in enumerate(cells):
            for point in cell:
                if point in cell_of:
                    msg = "cells of a partition must be disjoint [point {0} repeated]"
                    raise ValueError(msg.format(point))
                cell_of[point] = index

        self.cells = tuple(cells)
        self.cell_of = cell_of
        self.points = tuple(sorted(cell_of))

    @classmethod
    def discrete(cls, points):
        """Partition with one cell per point."""
        return cls((point,) for point in points)

    @classmethod
    def whole(cls, points):
        """Partition with a single cell."""
        return cls([tuple(points)])

    @classmethod
    def from_labels(cls, labels):
        """Builds a partition of ``0..len(labels)-1`` grouping points with equal labels.

        Args:
            labels (sequence): ``labels[x]`` is the label of point ``x``

        Returns:
            Partition: points sharing a label share a cell
        """
        groups = {}
        for point, label in enumerate(labels):
            groups.setdefault(label, []).append(point)
        return cls(groups.values())

    def covers(self, size):
        """True if the partition is a partition of ``0..size-1``."""
        return self.points == tuple(range(size))

    def cell(self, point):
        """Returns the cell containing ``point``."""
        return self.cells[self.cell_of[point]]

    def refines(self, other):
        """True if every cell of ``self`` lies inside a cell of ``other``."""
        if self.points != other.points:
            return False
        return all(len({other.cell_of[x] for x in cell}) == 1 for cell in self.cells)

    def compose(self, coarser):
        """Merges cells according to a partition of the cell indices.

        Args:
            coarser (Partition): partition of ``0..len(self)-1``, i.e. of the
                cells of ``self``

        Returns:
            Partition: partition of the points of ``self`` whose cells are the
            unions of the cells of ``self`` grouped by ``coarser``

        Raises:
            ValueError: if ``coarser`` does not partition the cells of ``self``
        """
        if not coarser.covers(len(self)):
            msg = "the coarser partition must partition the {0} cells"
            raise ValueError(msg.format(len(self)))
        merged = []
        for group in coarser.cells:
            merged.append([point for index in group for point in self.cells[index]])
        return Partition(merged)

    def is_invariant(self, permutations):
        """True if every permutation maps each cell onto a single cell."""
        cell_of = self.cell_of
        for perm in permutations:
            for cell in self.cells:
                target = cell_of.get(perm(cell[0]))
                if target is None:
                    return False
                if any(cell_of.get(perm(point)) != target for point in cell):
                    return False
        return True

    def as_lists(self):
        """Cells as lists, for serialization."""
        return [list(cell) for cell in self.cells]

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.cells == other.cells

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        return "Partition({0})".format(list(self.cells))
