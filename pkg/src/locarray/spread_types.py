"""Block-size shapes, shape multisets (types), and the optimal constructions.

A shape records the block sizes of one partial spread; a type is a multiset of
shapes. A type is admissible when, for every size x, the number of size-x
slots across all its shapes stays within C(n, x), the number of x-subsets of
the ground set; it is full when every one of those capacities is met exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .combinatorics import Variant, binomial, bound_params

__all__ = [
    "Admissibility",
    "FullType",
    "InadmissibleTypeError",
    "Shape",
    "VType",
    "balanced_shape",
    "build_optimal_type",
    "build_variant_type",
    "is_admissible",
    "make_full",
    "offset_shape",
]


@dataclass(frozen=True, order=True)
class Shape:
    """A multiset of nonnegative block sizes, stored sorted ascending."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        ent = tuple(sorted(self.entries))
        if ent and ent[0] < 0:
            raise ValueError("block sizes must be nonnegative")
        object.__setattr__(self, "entries", ent)

    def mu(self, x: int) -> int:
        """Number of entries equal to x."""
        return self.entries.count(x)

    def defect(self, f: int) -> int:
        """Total shortfall of the entries below f + 1."""
        return sum(f + 1 - x for x in self.entries if x <= f)

    @property
    def total(self) -> int:
        return sum(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self) -> str:
        return f"Shape({list(self.entries)!r})"


class VType:
    """A multiset of shapes over the ground set {1..n}, with symbol count v.

    Shapes may have any number of entries (padding shapes are singletons);
    is_v_type() reports whether every shape has exactly v of them.
    """

    __slots__ = ("n", "v", "_shapes")

    def __init__(
        self,
        n: int,
        v: int,
        shapes: Mapping[Shape, int] | Iterable[tuple[Shape, int]] = (),
    ) -> None:
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        if v < 2:
            raise ValueError(f"need v >= 2, got {v}")
        items = shapes.items() if isinstance(shapes, Mapping) else shapes
        merged: dict[Shape, int] = {}
        for shape, count in items:
            if count <= 0:
                raise ValueError(f"multiplicity of {shape} must be positive")
            if shape.total > n:
                raise ValueError(f"{shape} does not fit in a ground set of size {n}")
            merged[shape] = merged.get(shape, 0) + count
        self.n = n
        self.v = v
        self._shapes = dict(sorted(merged.items()))

    def items(self) -> list[tuple[Shape, int]]:
        """(shape, multiplicity) pairs in canonical (lexicographic) order."""
        return list(self._shapes.items())

    def multiplicity(self, shape: Shape) -> int:
        return self._shapes.get(shape, 0)

    def size(self) -> int:
        """Total number of shapes, counted with multiplicity."""
        return sum(self._shapes.values())

    def sigma(self, x: int) -> int:
        """Number of size-x slots across all shapes, counted with multiplicity."""
        return sum(count * shape.mu(x) for shape, count in self._shapes.items())

    def is_v_type(self) -> bool:
        return all(len(shape) == self.v for shape in self._shapes)

    def with_shape(self, shape: Shape, count: int = 1) -> "VType":
        items = list(self._shapes.items()) + [(shape, count)]
        return VType(self.n, self.v, items)

    def without_shape(self, shape: Shape, count: int = 1) -> "VType":
        have = self._shapes.get(shape, 0)
        if have < count:
            raise ValueError(f"cannot remove {count} x {shape}: only {have} present")
        items = {s: c for s, c in self._shapes.items() if s != shape}
        if have > count:
            items[shape] = have - count
        return VType(self.n, self.v, items)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VType):
            return NotImplemented
        return (self.n, self.v, self._shapes) == (other.n, other.v, other._shapes)

    def __repr__(self) -> str:
        body = ", ".join(f"{list(s.entries)}x{c}" for s, c in self._shapes.items())
        return f"VType(n={self.n}, v={self.v}, [{body}])"


@dataclass(frozen=True)
class Admissibility:
    """Outcome of the capacity check; falsy with the least oversubscribed size."""

    ok: bool
    size: int | None = None
    used: int | None = None
    capacity: int | None = None

    def __bool__(self) -> bool:
        return self.ok


class InadmissibleTypeError(ValueError):
    """An operation needed an admissible type but the capacity check failed."""

    def __init__(self, verdict: Admissibility) -> None:
        self.verdict = verdict
        super().__init__(
            f"type is not admissible: {verdict.used} slots of size {verdict.size}, "
            f"only {verdict.capacity} subsets available"
        )


def is_admissible(t: VType) -> Admissibility:
    """Check sigma(x) <= C(n, x) for every block size x present in the type."""
    sizes = sorted({x for shape, _ in t.items() for x in shape.entries})
    for x in sizes:
        used = t.sigma(x)
        capacity = binomial(t.n, x)
        if used > capacity:
            return Admissibility(False, x, used, capacity)
    return Admissibility(True)


def balanced_shape(n: int, v: int, i: int) -> Shape:
    """The v-shape summing to n whose smallest entry is i and whose remaining
    entries are as equal as possible (they pairwise differ by at most one).

    Defined for 0 <= i <= floor((n+1)/v), except at the top value when
    n = v - 1 (mod v), where the remaining entries would drop below i.
    """
    p = bound_params(n, v)
    if not 0 <= i <= p.f:
        raise ValueError(f"smallest entry {i} out of range 0..{p.f} for n={n}, v={v}")
    q, r = divmod(n - i, v - 1)
    shape = Shape((i,) + (q,) * (v - 1 - r) + (q + 1,) * r)
    if shape.entries[0] != i:
        raise ValueError(f"no such shape: smallest entry {i} unreachable for n={n}, v={v}")
    return shape


def offset_shape(n: int, v: int) -> Shape:
    """The near-balanced v-shape used when n = v - 1 (mod v): two entries one
    below the middle size f, v - 3 entries equal to f, one entry f + 1."""
    if v < 3:
        raise ValueError(f"need v >= 3, got {v}")
    if n % v != v - 1:
        raise ValueError(f"needs n = v-1 (mod v); got n={n}, v={v}")
    f = (n + 1) // v
    return Shape((f - 1, f - 1) + (f,) * (v - 3) + (f + 1,))


def build_optimal_type(n: int, v: int) -> VType:
    """The admissible v-type of maximum size, one shape per future column.

    Bottom-up: C(n, i) copies of the balanced shape with minimum i for every
    small i, then the top level filled to the remaining size-f capacity; when
    n = v - 1 (mod v) the top level instead trades pairs of balanced shapes
    for offset shapes so the capacity works out.
    """
    if not 2 <= v <= n + 1:
        raise ValueError(f"need 2 <= v <= n + 1; got v={v}, n={n}")
    p = bound_params(n, v)
    shapes: dict[Shape, int] = {}

    def add(shape: Shape, count: int) -> None:
        if count < 0:
            raise RuntimeError(f"internal: negative count for {shape} at n={n}, v={v}")
        if count:
            shapes[shape] = shapes.get(shape, 0) + count

    for i in range(0, p.f - 1):
        add(balanced_shape(n, v, i), binomial(n, i))
    if n % v != v - 1:
        add(balanced_shape(n, v, p.f - 1), binomial(n, p.f - 1))
        add(balanced_shape(n, v, p.f), (binomial(n, p.f) - p.s) // p.d)
    else:
        offs = -(-p.s_prime // (v + 1))  # ceil
        add(balanced_shape(n, v, p.f - 1), binomial(n, p.f - 1) - 2 * offs)
        if offs:
            add(offset_shape(n, v), offs)
    return VType(n, v, shapes)


def build_variant_type(n: int, v: int, variant: Variant) -> VType:
    """Optimal admissible v-type for the given variant.

    For d-barred variants no shape in the result contains a zero entry (every
    class of the derived array must be nonempty); its size drops below the
    base optimum except in the residue window where a top-level swap recovers
    the lost shape.
    """
    if variant.d_barred:
        if not 2 <= v <= n:
            raise ValueError(f"need 2 <= v <= n for this variant; got v={v}, n={n}")
        p = bound_params(n, v)
        t = build_optimal_type(n, v).without_shape(balanced_shape(n, v, 0))
        weighted = sum((p.f + 1 - i) * binomial(n, i) for i in range(0, p.f + 1))
        if p.d >= p.f + 2 and weighted % p.d > p.f:
            if n % v != v - 1:
                t = t.with_shape(balanced_shape(n, v, p.f))
            else:
                t = t.without_shape(offset_shape(n, v))
                t = t.with_shape(balanced_shape(n, v, p.f - 1), 2)
        return t
    if not 2 <= v <= n + 1:
        raise ValueError(f"need 2 <= v <= n + 1; got v={v}, n={n}")
    t = build_optimal_type(n, v)
    if variant.t_barred and v == 2:
        t = t.without_shape(Shape((0, n)))
    return t


@dataclass
class FullType:
    """An admissible type padded with singleton shapes to meet every capacity.

    requested holds the caller's shapes untouched; fill maps each singleton
    padding shape to the number of copies added for its block size.
    """

    n: int
    requested: VType
    fill: dict[Shape, int]

    def sigma(self, x: int) -> int:
        pad = sum(count * shape.mu(x) for shape, count in self.fill.items())
        return self.requested.sigma(x) + pad

    def is_full(self) -> bool:
        return all(self.sigma(x) == binomial(self.n, x) for x in range(self.n + 1))


def make_full(t: VType) -> FullType:
    """Pad an admissible type with singleton shapes until every size is saturated."""
    verdict = is_admissible(t)
    if not verdict:
        raise InadmissibleTypeError(verdict)
    fill: dict[Shape, int] = {}
    for x in range(t.n + 1):
        gap = binomial(t.n, x) - t.sigma(x)
        if gap:
            fill[Shape((x,))] = gap
    return FullType(t.n, t, fill)
