"""Affine coordinates on the big cell of iGr(2,2n) and the twistor cover.

A point of the big cell is a 2n x 2 matrix whose columns span an
isotropic 2-plane for omega(u, v) = sum_i (u_i v_{n+i} - u_{n+i} v_i).
The 4(n-2)+3 free parameters match the nilradical letters of the
crossed-{2} parabolic; the symmetric correction S makes the plane
isotropic identically in the parameters.

All arithmetic is exact (integers and Fractions).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

Scalar = Fraction  # or int


def parameter_count(n: int) -> int:
    """Dimension of the big cell: 4(n-2) + 3."""
    return 4 * (n - 2) + 3


@dataclass(frozen=True)
class BigCellPoint:
    """Affine coordinates (a_1j, a_2j, c_1j, c_2j for j = 3..n, and
    b_1, b_2, c_12) of an isotropic 2-plane."""

    n: int
    a1: tuple
    a2: tuple
    c1: tuple
    c2: tuple
    b1: Scalar
    b2: Scalar
    c12: Scalar

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("rank must be at least 2")
        for row in (self.a1, self.a2, self.c1, self.c2):
            if len(row) != self.n - 2:
                raise ValueError("coordinate rows must have length n-2")

    def s_correction(self) -> Scalar:
        """S = (1/2) sum_j (a_1j c_2j - a_2j c_1j)."""
        total = sum(
            p * q - r * s
            for p, q, r, s in zip(self.a1, self.c2, self.a2, self.c1)
        )
        return Fraction(total, 2)

    def matrix(self) -> list[list[Scalar]]:
        """The 2n x 2 matrix whose columns span the plane."""
        s = self.s_correction()
        rows = [[1, 0], [0, 1]]
        rows += [[p, q] for p, q in zip(self.a1, self.a2)]
        rows += [[self.b1, self.c12 - s]]
        rows += [[self.c12 + s, self.b2]]
        rows += [[p, q] for p, q in zip(self.c1, self.c2)]
        return rows

    def columns(self) -> tuple[list, list]:
        m = self.matrix()
        return [r[0] for r in m], [r[1] for r in m]


def omega(u: Sequence, v: Sequence) -> Scalar:
    """The standard symplectic form on C^{2n}."""
    if len(u) != len(v) or len(u) % 2:
        raise ValueError("vectors must have equal even length")
    n = len(u) // 2
    return sum(u[i] * v[n + i] - u[n + i] * v[i] for i in range(n))


def isotropy_check(point: BigCellPoint) -> bool:
    """Whether the spanned plane is omega-isotropic (exact)."""
    c1, c2 = point.columns()
    return omega(c1, c2) == 0


def twistor_cover_solve(gamma: Sequence) -> BigCellPoint:
    """The canonical isotropic plane through the line spanned by gamma.

    Requires gamma_1 != 0; after normalizing gamma_1 = 1 the solution has
    a_2j = c_2j = b_2 = 0, a_1j = gamma_j, c_1j = gamma_{n+j},
    c_12 = gamma_{n+2}, b_1 = gamma_{n+1} - gamma_2 gamma_{n+2}, and
    satisfies C_1 + gamma_2 C_2 = gamma.
    """
    if len(gamma) % 2:
        raise ValueError("gamma must have even length")
    n = len(gamma) // 2
    if n < 2:
        raise ValueError("rank must be at least 2")
    if gamma[0] == 0:
        raise ValueError("the solve chart needs gamma_1 != 0")
    g = [Fraction(x) / Fraction(gamma[0]) for x in gamma]
    zeros = (Fraction(0),) * (n - 2)
    point = BigCellPoint(
        n,
        tuple(g[2:n]),
        zeros,
        tuple(g[n + 2 :]),
        zeros,
        g[n] - g[1] * g[n + 1],
        Fraction(0),
        g[n + 1],
    )
    c1, c2 = point.columns()
    recon = [x + g[1] * y for x, y in zip(c1, c2)]
    if recon != g:
        raise AssertionError("twistor line does not lie on the solved plane")
    return point


def random_point(n: int, rng: Optional[random.Random] = None, seed: Optional[int] = None) -> BigCellPoint:
    """A seeded random rational point of the big cell."""
    if rng is None:
        rng = random.Random(seed)

    def frac():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    def row():
        return tuple(frac() for _ in range(n - 2))

    return BigCellPoint(n, row(), row(), row(), row(), frac(), frac(), frac())


def random_line(n: int, rng: Optional[random.Random] = None, seed: Optional[int] = None) -> list:
    """A seeded random rational vector in C^{2n} with first coordinate 1."""
    if rng is None:
        rng = random.Random(seed)
    out = [Fraction(1)]
    out += [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(2 * n - 1)]
    return out
