"""Shared helpers for the test suite: seeded random generators for arrays and types."""

import random

from locarray import Shape, TestArray, VType, binomial


def random_array(rng: random.Random, max_rows=6, max_cols=6, max_symbols=4) -> TestArray:
    n = rng.randint(2, max_rows)
    k = rng.randint(1, max_cols)
    v = rng.randint(2, max_symbols)
    rows = tuple(tuple(rng.randrange(v) for _ in range(k)) for _ in range(n))
    return TestArray(rows, v)


def random_admissible_type(rng: random.Random, min_n=2, max_n=10) -> VType:
    """A random admissible type: shapes are accepted greedily while capacities allow."""
    n = rng.randint(min_n, max_n)
    v = rng.randint(2, min(n + 1, 5))
    sigma = [0] * (n + 1)
    shapes: dict[Shape, int] = {}
    for _ in range(rng.randint(1, 10)):
        length = rng.randint(1, v)
        entries, remaining = [], n
        for _ in range(length):
            e = rng.randint(0, remaining)
            entries.append(e)
            remaining -= e
        shape = Shape(tuple(entries))
        if all(sigma[x] + shape.mu(x) <= binomial(n, x) for x in set(shape.entries)):
            shapes[shape] = shapes.get(shape, 0) + 1
            for x in shape.entries:
                sigma[x] += 1
    if not shapes:
        shapes[Shape((n,))] = 1
    return VType(n, v, shapes)
