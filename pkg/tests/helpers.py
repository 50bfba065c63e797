"""Independent oracles for the test suite.

Everything here recomputes a result by a different route than the library
(cofactor determinants instead of elimination, brute-force quantification
instead of the reduced scans, exact angle sorting instead of the pivot
construction), so agreement is meaningful.
"""

import functools
import itertools
from fractions import Fraction

from omkit import SignMap, normalize


def det_laplace(matrix):
    """Determinant by cofactor expansion along the first row."""
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    total = 0
    for j in range(size):
        if matrix[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * det_laplace(minor)
        total += -term if j % 2 else term
    return total


# ------------------------------------------------- literal axiom checking

def _signed(n):
    out = []
    for e in range(1, n + 1):
        out.extend((e, -e))
    return out


def literal_c1(m):
    for e in range(1, m.n + 1):
        if not any(e in s for s in m.nonzero_supports()):
            return False
    return True


def literal_c3(m):
    """Exchange, quantified over every pair of nonzero supports and every
    dropped element, trying every element of the other support."""
    nz = m.nonzero_supports()
    for s in nz:
        for t in nz:
            for x in s:
                rest = tuple(e for e in s if e != x)
                if not any(m.evaluate(rest + (u,)) for u in t):
                    return False
    return True


def literal_c4(m):
    """Three-term sign condition, quantified over every signed tuple with
    no reduction: all signed (r-2)-prefixes, all signed slots a, b, c, d."""
    se = _signed(m.n)
    r = m.rank
    for prefix in itertools.product(se, repeat=r - 2):
        for a, b, c, d in itertools.product(se, repeat=4):
            t1 = m.evaluate(prefix + (c, b)) * m.evaluate(prefix + (a, d))
            t2 = m.evaluate(prefix + (d, b)) * m.evaluate(prefix + (a, -c))
            t3 = m.evaluate(prefix + (a, b)) * m.evaluate(prefix + (c, d))
            if t1 >= 0 and t2 >= 0 and t3 < 0:
                return False
    return True


def literal_axiom_check(m):
    return literal_c1(m) and literal_c3(m) and literal_c4(m)


# ------------------------------------------------------ rank 2 by angles

def angular_atoms(rows):
    """Atoms of a planar configuration by exact angle sorting: the 2n
    signed vectors grouped by direction, in counterclockwise order.
    Returns a tuple of frozensets, rotation unspecified."""
    rows = [tuple(Fraction(x) for x in row) for row in rows]

    def half(v):
        # 0 for angles in [0, pi), 1 for [pi, 2pi)
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    def cross(u, v):
        return u[0] * v[1] - u[1] * v[0]

    signed = []
    for i, row in enumerate(rows, start=1):
        signed.append((i, row))
        signed.append((-i, tuple(-x for x in row)))

    def cmp(a, b):
        ha, hb = half(a[1]), half(b[1])
        if ha != hb:
            return -1 if ha < hb else 1
        c = cross(a[1], b[1])
        return 0 if c == 0 else (-1 if c > 0 else 1)

    ordered = sorted(signed, key=functools.cmp_to_key(cmp))
    atoms = []
    for s, v in ordered:
        if atoms and cross(atoms[-1][1], v) == 0 and (
            atoms[-1][1][0] * v[0] >= 0 and atoms[-1][1][1] * v[1] >= 0
        ):
            atoms[-1][0].add(s)
        else:
            atoms.append(({s}, v))
    return tuple(frozenset(a) for a, _ in atoms)


def rotations_equal(atoms1, atoms2):
    a1, a2 = tuple(atoms1), tuple(atoms2)
    if len(a1) != len(a2):
        return False
    p = len(a1)
    return any(tuple(a1[(s + i) % p] for i in range(p)) == a2 for s in range(p))


# ----------------------------------------------------------- permutations

def relabel_signmap(m, perm):
    """SignMap with element e renamed to perm[e]; values follow by
    evaluating the preimage tuple, so alternation is handled exactly."""
    inv = {v: k for k, v in perm.items()}
    values = {}
    for s in m.supports():
        values[s] = m.evaluate(tuple(inv[e] for e in s))
    return SignMap(m.rank, m.n, values)


# --------------------------------------------------------------- sampling

def random_fullrank_rows(rng, n, r, bound=5):
    """Random integer configuration of n nonzero rows spanning rank r."""
    from omkit import from_vectors

    while True:
        rows = []
        while len(rows) < n:
            row = tuple(rng.randint(-bound, bound) for _ in range(r))
            if any(row):
                rows.append(row)
        try:
            from_vectors(rows)
        except Exception:
            continue
        return rows


def random_signmap(rng, n, r):
    values = {}
    for s in itertools.combinations(range(1, n + 1), r):
        values[s] = rng.choice((-1, 0, 1))
    return SignMap(r, n, values)


# ---------------------------------------------------- quotient projection

def _rank_fraction(rows):
    mat = [list(row) for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for i in range(rank + 1, len(mat)):
            if mat[i][c] != 0:
                f = mat[i][c] / mat[rank][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def _solve(columns, v):
    """x with sum x_i * columns_i = v, by Gaussian elimination."""
    size = len(v)
    aug = [[columns[j][i] for j in range(size)] + [v[i]] for i in range(size)]
    for c in range(size):
        piv = next(i for i in range(c, size) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [a / pv for a in aug[c]]
        for i in range(size):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [aug[i][size] for i in range(size)]


def quotient_coords(rows, fixed):
    """Images of the non-fixed rows in the quotient by the span of the
    fixed ones: completes the fixed rows to a basis with standard unit
    vectors, reads off the trailing coordinates.  Returns (kept original
    ids, coordinate rows, sign of the basis-change determinant)."""
    rows = [tuple(Fraction(x) for x in row) for row in rows]
    r = len(rows[0])
    k = len(fixed)
    ext = [rows[i - 1] for i in fixed]
    for j in range(r):
        if len(ext) == r:
            break
        unit = tuple(Fraction(int(i == j)) for i in range(r))
        if _rank_fraction(ext + [unit]) == len(ext) + 1:
            ext.append(unit)
    assert len(ext) == r, "fixed rows are dependent"
    corr = det_laplace([list(row) for row in ext])
    corr = 1 if corr > 0 else -1
    kept, coords = [], []
    for i, row in enumerate(rows, start=1):
        if i in fixed:
            continue
        x = _solve(ext, row)
        tail = tuple(x[k:])
        if any(tail):
            kept.append(i)
            coords.append(tail)
    return kept, coords, corr


# ------------------------------------------------------- canonical orbits

def orbit_by_moves(entries):
    """All tuples reachable by swapping an adjacent pair and barring one
    of the two entries.  This is the move set that leaves the oriented
    simplex unchanged."""
    start = tuple(entries)
    seen = {start}
    frontier = [start]
    while frontier:
        t = frontier.pop()
        for i in range(len(t) - 1):
            a, b = t[i], t[i + 1]
            for moved in (
                t[:i] + (-b, a) + t[i + 2:],
                t[:i] + (b, -a) + t[i + 2:],
            ):
                if moved not in seen:
                    seen.add(moved)
                    frontier.append(moved)
    return seen


def equivalence_class(entries):
    """All signed rearrangements with the same canonical form, brute force."""
    target = normalize(entries)
    out = set()
    for perm in itertools.permutations(entries):
        for signs in itertools.product((1, -1), repeat=len(entries)):
            t = tuple(s * x for s, x in zip(signs, perm))
            if normalize(t) == target:
                out.add(t)
    return out
