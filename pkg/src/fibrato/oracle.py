"""Independent multiplicity oracle for binomial-type germs.

For germs of the shape y^e * z^f * (y^a - z^b) the whole even-resolution
process can be tracked on exponents alone: blowing up maps the germ to
another germ of the same shape in each chart, and the only extra singular
points are transverse crossings with the surviving exceptional line, each a
single multiplicity-2 step.  This module records the resulting multiplicity
sequence by pure integer recursion — no polynomial arithmetic, no germ
objects, no sympy — and exists solely to cross-check the resolution engine
on an infinite family it cannot have been tuned to.

Chart bookkeeping (m = e + f + min(a, b), eps = m mod 2):

  a < b: in the direction chart the residual is y^eps * v^f * (unit); it is
         singular only at the crossing v = 0, when eps = f = 1, and that
         point is a node.  The point at infinity carries
         z^eps * u^e * (u^a - z^(b-a)).
  a > b: symmetric; the chart-1 origin carries y^eps * v^f * (y^(a-b) - v^b)
         and the point at infinity is a node exactly when eps = e = 1.
  a = b: the residual meets E at v = 0 (f = 1), at the a roots of unity of
         1 - v^a, and at infinity (e = 1); for eps = 1 each crossing is a
         node, for eps = 0 all of them are smooth simple points.

Children are recorded in the engine's depth-first order: finite directions
first (ascending), then the point at infinity.
"""

from __future__ import annotations

__all__ = ["binomial_oracle"]


def binomial_oracle(e: int, f: int, a: int, b: int) -> list[int]:
    """Multiplicity sequence of the even resolution of y^e z^f (y^a - z^b).

    e, f must be 0 or 1 (larger values give a non-reduced divisor, whose
    resolution does not terminate); a, b must be positive.
    """
    if e not in (0, 1) or f not in (0, 1):
        raise ValueError("axis exponents must be 0 or 1")
    if a < 1 or b < 1:
        raise ValueError("binomial exponents must be positive")
    seq: list[int] = []

    def descend(e, f, a, b):
        m = e + f + min(a, b)
        if m < 2:
            return
        seq.append(m)
        eps = m % 2
        if a < b:
            if eps == 1 and f == 1:
                seq.append(2)
            descend(e, eps, a, b - a)
        elif a > b:
            descend(eps, f, a - b, b)
            if eps == 1 and e == 1:
                seq.append(2)
        else:
            if eps == 1 and f == 1:
                seq.append(2)
            if eps == 1:
                seq.extend([2] * a)
            if eps == 1 and e == 1:
                seq.append(2)

    descend(e, f, a, b)
    return seq
