import math

import pytest

import hornlab as hl


@pytest.fixture
def example():
    return hl.example_domain()


@pytest.fixture
def harmonic():
    return hl.harmonic_domain()


@pytest.fixture
def square_prefix():
    """Domain whose spectral behaviour at moderate E is a single 1x1 box."""
    return hl.SimpleDomain(
        hl.explicit([1.0], tail=hl.power(0.01, -2.0)),
        hl.explicit([1.0], tail=hl.power(1.0, 0.0)),
    )


PI = math.pi


def brute_dirichlet(w, h, E):
    """Independent double-loop enumeration of fixed-membrane modes <= E."""
    n = 0
    l = 1
    while (PI * l / w) ** 2 <= E:
        m = 1
        while (PI * l / w) ** 2 + (PI * m / h) ** 2 <= E:
            n += 1
            m += 1
        l += 1
    return n


def brute_mixed(w, h, E):
    """Enumeration with the free-wall l = 0 column included."""
    n = 0
    l = 0
    while (PI * l / w) ** 2 <= E:
        m = 1
        while (PI * l / w) ** 2 + (PI * m / h) ** 2 <= E:
            n += 1
            m += 1
        l += 1
    return n


def brute_cuboid(sides, E):
    """Nested-loop enumeration for up to three sides."""
    total = 0
    s = list(sides)
    if len(s) == 1:
        m = 1
        while (PI * m / s[0]) ** 2 <= E:
            total += 1
            m += 1
        return total
    m = 1
    while (PI * m / s[0]) ** 2 <= E:
        total += brute_cuboid(s[1:], E - (PI * m / s[0]) ** 2)
        m += 1
    return total
