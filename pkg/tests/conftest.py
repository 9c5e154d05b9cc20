"""Shared independent oracles.

These deliberately avoid the package's own code paths: expansions come from
repeated floor/reciprocal on Fractions, convergents from direct evaluation of
truncations, Farey series from a sorted set comprehension.
"""

from fractions import Fraction as F
from math import floor, gcd

import pytest

ACCEPTANCE_LINES = []


def naive_expansion(x):
    """Canonical partial quotients [a0, a1, ...] by floor and reciprocal."""
    x = F(x)
    out = []
    while True:
        a = floor(x)
        out.append(a)
        if x == a:
            return out
        x = 1 / (x - a)


def naive_expansions(x):
    canon = naive_expansion(x)
    comp = canon[:-1] + [canon[-1] - 1, 1]
    return canon, comp


def naive_value(quotients):
    """Value of [a0; a1, ..., an] by nesting from the right."""
    v = F(quotients[-1])
    for a in reversed(quotients[:-1]):
        v = a + 1 / v
    return v


def naive_convergents(quotients):
    return [naive_value(quotients[: k + 1]) for k in range(len(quotients))]


def naive_is_convergent(alpha, pq):
    """(in canonical, in companion) by direct truncation."""
    return tuple(F(pq) in naive_convergents(e) for e in naive_expansions(alpha))


def naive_farey(q):
    return sorted({F(a, b) for b in range(1, q + 1) for a in range(0, b + 1)})


def reduced_in_unit(max_den, closed=False):
    """Reduced fractions in (0, 1), or [0, 1] with ``closed``, in (den, num) order."""
    out = [F(0), F(1)] if closed else []
    out += [F(a, d) for d in range(2, max_den + 1) for a in range(1, d) if gcd(a, d) == 1]
    return out


def record_acceptance(number, passed, detail):
    line = f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)


@pytest.fixture
def record():
    return record_acceptance
