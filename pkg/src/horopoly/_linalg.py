"""Exact linear algebra over the rationals.

Small dense routines backing the polytope and root-system machinery.
Everything operates on tuples of Fraction; nothing here touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    """Coerce an int, string, float or Fraction to Fraction.

    Floats convert to their exact binary value, which keeps the conversion
    deterministic; callers that want a short decimal should pass strings.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def vec(values) -> tuple:
    return tuple(frac(x) for x in values)


def vzero(n: int) -> tuple:
    return (ZERO,) * n


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vneg(a):
    return tuple(-x for x in a)


def vscale(a, t):
    t = frac(t)
    return tuple(t * x for x in a)


def vdot(a, b) -> Fraction:
    if len(a) != len(b):
        raise ValueError("dimension mismatch in dot product")
    return sum((x * y for x, y in zip(a, b)), start=ZERO)


def is_zero_vec(a) -> bool:
    return all(x == 0 for x in a)


def transpose(M):
    return tuple(zip(*M, strict=True))


def mat_vec(M, v):
    return tuple(vdot(row, v) for row in M)


def mat_mul(A, B):
    cols = transpose(B)
    return tuple(tuple(vdot(row, col) for col in cols) for row in A)


def identity_matrix(n: int):
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def rref(rows):
    """Reduced row echelon form of a list of equal-length rows.

    Returns (echelon_rows, pivot_columns).  Zero rows are dropped.
    """
    m = [list(vec(r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(vectors) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    return len(rref(vectors)[1])


def solve_square(A, b):
    """Unique solution of A x = b for square A, or None when A is singular."""
    n = len(A)
    aug = [list(vec(row)) + [frac(b[i])] for i, row in enumerate(A)]
    rows, pivots = rref(aug)
    if len(pivots) < n or n in pivots:
        return None
    x = [ZERO] * n
    for row, c in zip(rows, pivots):
        x[c] = row[-1]
    return tuple(x)


def solve_system(A, b):
    """Some solution of A x = b (free variables set to zero), or None."""
    if not A:
        return None
    ncols = len(A[0])
    aug = [list(vec(row)) + [frac(bi)] for row, bi in zip(A, b, strict=True)]
    rows, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for row, c in zip(rows, pivots):
        x[c] = row[-1]
    return tuple(x)


def nullspace(rows, ambient_dim: int | None = None):
    """Basis of {x : <row|x> = 0 for every row}.

    ambient_dim is required when rows is empty.
    """
    rows = list(rows)
    if not rows:
        if ambient_dim is None:
            raise ValueError("ambient_dim required for an empty row list")
        return [tuple(ONE if i == j else ZERO for j in range(ambient_dim))
                for i in range(ambient_dim)]
    ncols = len(rows[0])
    ech, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, c in zip(ech, pivots):
            x[c] = -row[f]
        basis.append(tuple(x))
    return basis


def span_basis(vectors):
    """Basis of the linear span of the given vectors (echelon form rows)."""
    vectors = [v for v in vectors if not is_zero_vec(v)]
    if not vectors:
        return []
    rows, _ = rref(vectors)
    return [tuple(r) for r in rows]


def affine_span(points):
    """(origin, basis of the direction space) for a nonempty point list."""
    pts = list(points)
    origin = vec(pts[0])
    dirs = [vsub(vec(p), origin) for p in pts[1:]]
    return origin, span_basis(dirs)


def affine_dim(points) -> int:
    return len(affine_span(points)[1])


def coords_in_basis(basis, v):
    """Coefficients c with sum(c_i * basis_i) = v, or None when v is outside."""
    if not basis:
        return () if is_zero_vec(v) else None
    cols = transpose(basis)
    return solve_system(cols, v)


def project_onto_span(vectors, v):
    """Orthogonal projection of v onto span(vectors), standard inner product."""
    basis = span_basis(vectors)
    if not basis:
        return vzero(len(v))
    gram = [[vdot(bi, bj) for bj in basis] for bi in basis]
    rhs = [vdot(bi, v) for bi in basis]
    coeffs = solve_square(gram, rhs)
    out = vzero(len(v))
    for c, bi in zip(coeffs, basis):
        out = vadd(out, vscale(bi, c))
    return out


def primitive(vector):
    """Positive rescale of a nonzero rational vector to coprime integers."""
    denom = lcm(*(x.denominator for x in vector)) if len(vector) > 1 else vector[0].denominator
    ints = [int(x * denom) for x in vector]
    g = 0
    for n in ints:
        g = gcd(g, abs(n))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(Fraction(n, g) for n in ints)
