"""Independent reference for the left-to-right fold.

Works on plain dicts ``{order: (re, im)}`` of Fractions and never touches the
package's Coefficient or CalpanicNumber code, so it can check ``add`` and
``multiply`` from outside.
"""

from fractions import Fraction


def _cancelled(a, b):
    # magnitude min(|a|, |b|) carrying a's sign, only where the signs oppose
    if a * b >= 0:
        return Fraction(0)
    return a if abs(a) <= abs(b) else -b


def push(acc, order, term):
    if order not in acc:
        acc[order] = term
        return
    a = acc[order]
    rel = tuple(_cancelled(p, q) for p, q in zip(a, term))
    total = (a[0] + term[0], a[1] + term[1])
    if total == (0, 0):
        del acc[order]
    else:
        acc[order] = total
    if rel != (0, 0):
        push(acc, order - 1, rel)


def ref_add(x, y):
    acc = dict(x)
    for order in sorted(y, reverse=True):
        push(acc, order, y[order])
    return acc


def _cmul(p, q):
    return (p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0])


def ref_mul(x, y):
    acc = None
    for nx in sorted(x, reverse=True):
        for ny in sorted(y, reverse=True):
            mono = {nx + ny: _cmul(x[nx], y[ny])}
            acc = mono if acc is None else ref_add(acc, mono)
    return acc


def to_plain(v):
    return {n: (c.re, c.im) for n, c in v.terms}
