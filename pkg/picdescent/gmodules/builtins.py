"""
Built-in finite groups: cyclic, dihedral, symmetric (3 and 4) and the
quaternion group of order 8.
"""

import re
from itertools import permutations

from picdescent.exceptions import UnknownGroupError

from .models import FiniteGroup

BUILTIN_NAMES = ('C2', 'C3', 'C4', 'C6', 'S3', 'D4', 'Q8', 'S4')


def cyclic_group(n):
    if n < 1:
        raise UnknownGroupError('cyclic groups need n >= 1')
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], name=f'C{n}')


def dihedral_group(n):
    """
    The dihedral group of order 2n: element i + n·j is r^i s^j.
    """
    if n < 1:
        raise UnknownGroupError('dihedral groups need n >= 1')

    def mul(x, y):
        i, a = x % n, x // n
        k, b = y % n, y // n
        rotation = (i + (k if a == 0 else -k)) % n
        return rotation + n * ((a + b) % 2)

    order = 2 * n
    return FiniteGroup([[mul(x, y) for y in range(order)] for x in range(order)], name=f'D{n}')


def symmetric_group(n):
    """
    Permutations of 0..n-1 in lexicographic order, composed right to left.
    """
    if n < 1:
        raise UnknownGroupError('symmetric groups need n >= 1')
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(s[t[x]] for x in range(n))] for t in perms] for s in perms]
    return FiniteGroup(table, name=f'S{n}')


# Unit quaternions 1, i, j, k and the sign of their products.
_UNIT_PRODUCTS = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion_group():
    """
    Q8 with element 2u + s standing for (-1)^s times the unit u in (1, i, j, k).
    """
    def mul(x, y):
        u, s = divmod(x, 2)
        v, t = divmod(y, 2)
        sign, w = _UNIT_PRODUCTS[(u, v)]
        negative = (s + t + (1 if sign < 0 else 0)) % 2
        return 2 * w + negative

    return FiniteGroup([[mul(x, y) for y in range(8)] for x in range(8)], name='Q8')


_PATTERNS = (
    (re.compile(r'^(?:C|cyclic\()(\d+)\)?$'), cyclic_group),
    (re.compile(r'^(?:D|dihedral\()(\d+)\)?$'), dihedral_group),
    (re.compile(r'^(?:S|symmetric\()([34])\)?$'), symmetric_group),
)


def builtin_group(name):
    """
    Look up a built-in group by name.

    Accepts `C<n>`/`cyclic(n)`, `D<n>`/`dihedral(n)` (order 2n),
    `S3`, `S4`/`symmetric(3|4)` and `Q8`/`quaternion8`.
    """
    key = str(name).strip()
    if key in ('Q8', 'quaternion8'):
        return quaternion_group()
    for pattern, factory in _PATTERNS:
        match = pattern.match(key)
        if match:
            return factory(int(match.group(1)))
    raise UnknownGroupError(f'unknown group {name!r}')
