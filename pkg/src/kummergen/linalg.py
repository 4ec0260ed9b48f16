"""Row reduction over Q or F_p for small dense matrices."""

from fractions import Fraction

__all__ = ["field_rank", "solve_mod_p"]


def field_rank(rows, p=0):
    """Rank of a matrix over Q (``p == 0``) or over F_p."""
    m = [[(int(x) % p) if p else Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = max(len(r) for r in m)
    for r in m:
        r.extend([0] * (ncols - len(r)))
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p) if p else 1 / m[rank][col]
        for i in range(rank + 1, len(m)):
            f = m[i][col]
            if f:
                f = f * inv
                m[i] = [(a - f * b) % p if p else a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def solve_mod_p(a, b, p):
    """Solve the square system ``a x = b`` over F_p; ``a`` must be invertible."""
    n = len(a)
    m = [[x % p for x in row] + [b[i] % p] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = pow(m[col][col], -1, p)
        m[col] = [x * inv % p for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[col])]
    return [m[i][n] for i in range(n)]
