"""Shared fixtures data for the test modules."""

from orthantgeo import ConvexGeometry, SetFamily, Universe

FIG_LEFT_SETS = [[], "1", "2", "3", "4", "12", "23", "34", "123", "234", "1234"]
FIG_RIGHT_SETS = [[], "1", "2", "3", "4", "12", "14", "23", "34", "123", "234"]
U4 = Universe.of_size(4)


def fig_left() -> ConvexGeometry:
    return ConvexGeometry.from_sets(U4, FIG_LEFT_SETS)


def fig_right() -> SetFamily:
    return SetFamily.from_sets(U4, FIG_RIGHT_SETS)


def chain(n: int) -> ConvexGeometry:
    labels = [str(i) for i in range(1, n + 1)]
    return ConvexGeometry.from_sets(n, [labels[:k] for k in range(n + 1)])


def free(n: int) -> ConvexGeometry:
    return ConvexGeometry.free(Universe.of_size(n))


def m(*labels: str, universe: Universe = U4) -> int:
    """Mask of the listed labels, each given as a string of digits."""
    return universe.mask("".join(labels))
