"""Exact integer matrix arithmetic: normal forms, solving, Hilbert bases.

Everything here is over Python's arbitrary-precision integers; no floating
point enters any decision.  Vectors are rows, and matrices act on the right
(x * m), so composing morphisms multiplies their matrices in application
order.

Conventions fixed here and relied on elsewhere:
  * hermite_normal_form(m) returns (h, u) with u * m = h, u unimodular,
    h in row echelon form with positive pivots and reduced entries above.
  * smith_normal_form(m) returns (d, u, v) with u * m * v = d diagonal,
    nonnegative, each entry dividing the next.
  * hilbert_basis(a) returns the minimal nonzero solutions of a * x = 0,
    x >= 0, via the Contejean-Devie completion procedure.
"""

from dataclasses import dataclass

from .errors import DimensionError, ResourceLimitError

Vec = tuple[int, ...]

# Frontier budget for the Hilbert-basis completion; exceeding it raises
# ResourceLimitError instead of grinding on.
HILBERT_STATE_CAP = 10**6


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; entries row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )
        for e in self.entries:
            if type(e) is not int:
                raise DimensionError(f"non-integer entry {e!r}")

    @staticmethod
    def from_rows(rows, cols: int | None = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if rows:
            width = len(rows[0])
            if cols is not None and cols != width:
                raise DimensionError(f"declared {cols} cols, rows have {width}")
            cols = width
            if any(len(r) != cols for r in rows):
                raise DimensionError("ragged rows")
        elif cols is None:
            raise DimensionError("empty matrix needs an explicit column count")
        flat = tuple(x for r in rows for x in r)
        return IntMatrix(len(rows), cols, flat)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(rows, cols, (0,) * (rows * cols))

    def row(self, i: int) -> Vec:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> tuple[Vec, ...]:
        return tuple(self.row(i) for i in range(self.rows))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def col(self, j: int) -> Vec:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([self.col(j) for j in range(self.cols)], cols=self.rows)

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"{self.rows}x{self.cols} * {other.rows}x{other.cols}")
        out = []
        orows = other.to_rows()
        for i in range(self.rows):
            r = self.row(i)
            acc = [0] * other.cols
            for k, coeff in enumerate(r):
                if coeff:
                    ork = orows[k]
                    for j in range(other.cols):
                        acc[j] += coeff * ork[j]
            out.append(acc)
        return IntMatrix.from_rows(out, cols=other.cols)

    def stack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols:
            raise DimensionError(f"stack {self.cols} cols with {other.cols}")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def neg(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-e for e in self.entries))

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)


def vec_add(x: Vec, y: Vec) -> Vec:
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vec, y: Vec) -> Vec:
    return tuple(a - b for a, b in zip(x, y))


def vec_neg(x: Vec) -> Vec:
    return tuple(-a for a in x)


def vec_dot(x: Vec, y: Vec) -> int:
    return sum(a * b for a, b in zip(x, y))


def vec_is_zero(x: Vec) -> bool:
    return all(a == 0 for a in x)


def row_times_matrix(x: Vec, m: IntMatrix) -> Vec:
    if len(x) != m.rows:
        raise DimensionError(f"row of length {len(x)} times {m.rows}x{m.cols}")
    acc = [0] * m.cols
    for k, coeff in enumerate(x):
        if coeff:
            rk = m.row(k)
            for j in range(m.cols):
                acc[j] += coeff * rk[j]
    return tuple(acc)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style HNF: returns (h, u) with u * m = h and u unimodular.

    h is in row echelon form with strictly increasing pivot columns,
    positive pivots, entries above each pivot reduced into [0, pivot),
    and zero rows collected at the bottom.
    """
    work = [list(m.row(i)) for i in range(m.rows)]
    u = [list(IntMatrix.identity(m.rows).row(i)) for i in range(m.rows)]
    nrows, ncols = m.rows, m.cols
    pivot = 0
    for col in range(ncols):
        if pivot >= nrows:
            break
        # Clear the column below `pivot` by pairwise unimodular combinations.
        for i in range(pivot + 1, nrows):
            if work[i][col] == 0:
                continue
            a, b = work[pivot][col], work[i][col]
            if a == 0:
                work[pivot], work[i] = work[i], work[pivot]
                u[pivot], u[i] = u[i], u[pivot]
                continue
            if b % a == 0:
                q = b // a
                work[i] = [x - q * y for x, y in zip(work[i], work[pivot])]
                u[i] = [x - q * y for x, y in zip(u[i], u[pivot])]
                continue
            g, s, t = xgcd(a, b)
            aa, bb = a // g, b // g
            rp, ri = work[pivot], work[i]
            up, ui = u[pivot], u[i]
            work[pivot] = [s * p + t * q for p, q in zip(rp, ri)]
            work[i] = [-bb * p + aa * q for p, q in zip(rp, ri)]
            u[pivot] = [s * p + t * q for p, q in zip(up, ui)]
            u[i] = [-bb * p + aa * q for p, q in zip(up, ui)]
        if work[pivot][col] == 0:
            continue
        if work[pivot][col] < 0:
            work[pivot] = [-x for x in work[pivot]]
            u[pivot] = [-x for x in u[pivot]]
        p = work[pivot][col]
        for i in range(pivot):
            q = work[i][col] // p
            if q:
                work[i] = [x - q * y for x, y in zip(work[i], work[pivot])]
                u[i] = [x - q * y for x, y in zip(u[i], u[pivot])]
        pivot += 1
    h = IntMatrix.from_rows(work, cols=ncols)
    return h, IntMatrix.from_rows(u, cols=nrows)


def hnf_reduced(m: IntMatrix) -> IntMatrix:
    """Canonical basis of rowspan(m): HNF rows with zero rows dropped."""
    h, _ = hermite_normal_form(m)
    rows = [h.row(i) for i in range(h.rows) if not vec_is_zero(h.row(i))]
    return IntMatrix.from_rows(rows, cols=m.cols)


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (d, u, v) with u * m * v = d, u and v unimodular.

    d is diagonal with nonnegative entries and d[i] divides d[i+1].
    """
    work = [list(m.row(i)) for i in range(m.rows)]
    nrows, ncols = m.rows, m.cols
    u = [list(IntMatrix.identity(nrows).row(i)) for i in range(nrows)]
    v = [list(IntMatrix.identity(ncols).row(i)) for i in range(ncols)]

    def col_combine(j0: int, j1: int, a: int, b: int, c: int, d_: int):
        # columns (j0, j1) <- (a*j0 + c*j1, b*j0 + d*j1); right-multiplying
        # by a unimodular block keeps u * m * v = work.
        for r in work:
            x, y = r[j0], r[j1]
            r[j0], r[j1] = a * x + c * y, b * x + d_ * y
        for r in v:
            x, y = r[j0], r[j1]
            r[j0], r[j1] = a * x + c * y, b * x + d_ * y

    def row_combine(i0: int, i1: int, a: int, b: int, c: int, d_: int):
        # rows (i0, i1) <- (a*i0 + b*i1, c*i0 + d*i1)
        r0 = [a * x + b * y for x, y in zip(work[i0], work[i1])]
        r1 = [c * x + d_ * y for x, y in zip(work[i0], work[i1])]
        work[i0], work[i1] = r0, r1
        s0 = [a * x + b * y for x, y in zip(u[i0], u[i1])]
        s1 = [c * x + d_ * y for x, y in zip(u[i0], u[i1])]
        u[i0], u[i1] = s0, s1

    for k in range(min(nrows, ncols)):
        while True:
            # Pick the nonzero entry of smallest magnitude in the trailing block.
            best = None
            for i in range(k, nrows):
                for j in range(k, ncols):
                    e = work[i][j]
                    if e and (best is None or abs(e) < abs(work[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            bi, bj = best
            if bi != k:
                work[k], work[bi] = work[bi], work[k]
                u[k], u[bi] = u[bi], u[k]
            if bj != k:
                for r in work:
                    r[k], r[bj] = r[bj], r[k]
                for r in v:
                    r[k], r[bj] = r[bj], r[k]
            # Clear row k and column k.  When the pivot divides the target,
            # plain subtraction leaves the pivot row/column untouched; the
            # full xgcd transform strictly shrinks the pivot otherwise, so
            # the surrounding while loop terminates.
            for i in range(k + 1, nrows):
                if work[i][k]:
                    a, b = work[k][k], work[i][k]
                    if b % a == 0:
                        row_combine(k, i, 1, 0, -(b // a), 1)
                    else:
                        g, s, t = xgcd(a, b)
                        row_combine(k, i, s, t, -(b // g), a // g)
            for j in range(k + 1, ncols):
                if work[k][j]:
                    a, b = work[k][k], work[k][j]
                    if b % a == 0:
                        col_combine(k, j, 1, -(b // a), 0, 1)
                    else:
                        g, s, t = xgcd(a, b)
                        col_combine(k, j, s, -(b // g), t, a // g)
            if any(work[i][k] for i in range(k + 1, nrows)):
                continue
            if any(work[k][j] for j in range(k + 1, ncols)):
                continue
            # Enforce divisibility of the trailing block by the pivot.
            pivot_val = work[k][k]
            culprit = None
            for i in range(k + 1, nrows):
                for j in range(k + 1, ncols):
                    if pivot_val and work[i][j] % pivot_val:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            row_combine(k, culprit, 1, 1, 0, 1)
        if work[k][k] < 0:
            for j in range(ncols):
                work[k][j] = -work[k][j]
            u[k] = [-x for x in u[k]]
    d = IntMatrix.from_rows(work, cols=ncols)
    return d, IntMatrix.from_rows(u, cols=nrows), IntMatrix.from_rows(v, cols=ncols)


def determinant(m: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise DimensionError("determinant of non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(m.row(i)) for i in range(n)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_left(h: IntMatrix, b: Vec) -> Vec | None:
    """Solve y * h = b for h in row echelon form (as produced by HNF)."""
    if len(b) != h.cols:
        raise DimensionError("target length does not match matrix columns")
    residual = list(b)
    y = [0] * h.rows
    for i in range(h.rows):
        r = h.row(i)
        lead = next((j for j, e in enumerate(r) if e), None)
        if lead is None:
            continue
        if residual[lead] % r[lead]:
            return None
        c = residual[lead] // r[lead]
        y[i] = c
        if c:
            for j in range(h.cols):
                residual[j] -= c * r[j]
    if any(residual):
        return None
    return tuple(y)


def solve_integer(a: IntMatrix, b: Vec) -> Vec | None:
    """Find an integer row x with x * a = b, or None if there is none."""
    h, u = hermite_normal_form(a)
    y = solve_left(h, b)
    if y is None:
        return None
    return row_times_matrix(y, u)


def lattice_membership(gens: IntMatrix, x: Vec) -> bool:
    """Is x in the lattice spanned by the rows of gens?"""
    return solve_integer(gens, x) is not None


def in_rowspan_reduced(h: IntMatrix, x: Vec) -> bool:
    """Membership test against an already HNF-reduced basis (fast path)."""
    return solve_left(h, x) is not None


def left_kernel(m: IntMatrix) -> IntMatrix:
    """Basis (as rows) of {x : x * m = 0}."""
    h, u = hermite_normal_form(m)
    rows = [u.row(i) for i in range(h.rows) if vec_is_zero(h.row(i))]
    return IntMatrix.from_rows(rows, cols=m.rows)


def unimodular_inverse(v: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular matrix, computed exactly."""
    if v.rows != v.cols:
        raise DimensionError("inverse of non-square matrix")
    rows = []
    ident = IntMatrix.identity(v.rows)
    h, u = hermite_normal_form(v)
    for i in range(v.rows):
        y = solve_left(h, ident.row(i))
        if y is None:
            raise DimensionError("matrix is not unimodular")
        rows.append(row_times_matrix(y, u))
    return IntMatrix.from_rows(rows, cols=v.rows)


def hilbert_basis(
    system: IntMatrix, state_cap: int = HILBERT_STATE_CAP, early=None
) -> tuple[Vec, ...]:
    """Minimal nonzero nonnegative integer solutions of system * x = 0.

    Contejean-Devie completion: grow candidate vectors from the unit
    vectors, branching on coordinate i only while <A*t, A*e_i> < 0, and
    prune anything componentwise above an already-found solution.
    Breadth-first order makes every recorded solution minimal; the branch
    rule makes the recorded set complete.

    state_cap bounds the total number of states visited.  When early is
    given, the search stops as soon as a recorded solution satisfies it
    and the basis returned so far may be incomplete; existence queries
    use this to avoid completing the enumeration.
    """
    nvars = system.cols
    neqs = system.rows
    cols = [system.col(j) for j in range(nvars)]
    zero_val = (0,) * neqs

    basis: list[Vec] = []
    frontier: dict[Vec, Vec] = {}
    for i in range(nvars):
        t = tuple(1 if j == i else 0 for j in range(nvars))
        frontier[t] = cols[i]
    visited = len(frontier)
    if visited > state_cap:
        raise ResourceLimitError(f"Hilbert completion exceeded {state_cap} states")

    while frontier:
        solved = sorted(t for t, val in frontier.items() if val == zero_val)
        basis.extend(solved)
        if early is not None and any(early(s) for s in solved):
            return tuple(sorted(basis))
        nxt: dict[Vec, Vec] = {}
        for t, val in frontier.items():
            if val == zero_val:
                continue
            for i in range(nvars):
                if vec_dot(val, cols[i]) >= 0:
                    continue
                s = tuple(t[j] + 1 if j == i else t[j] for j in range(nvars))
                if s in nxt:
                    continue
                if any(all(sj >= bj for sj, bj in zip(s, b)) for b in basis):
                    continue
                nxt[s] = vec_add(val, cols[i])
        visited += len(nxt)
        if visited > state_cap:
            raise ResourceLimitError(
                f"Hilbert completion exceeded {state_cap} states"
            )
        frontier = nxt
    return tuple(sorted(basis))


def monoid_zero_solutions(
    gens: IntMatrix, lattice: IntMatrix, state_cap: int = HILBERT_STATE_CAP
) -> tuple[Vec, ...]:
    """Coefficient parts of the Hilbert basis of c*gens = 0 modulo a lattice.

    Solves {(c, p, q) >= 0 : c*gens + (p - q)*lattice = 0} with the lattice
    contribution sign-split into p - q, then projects the basis onto c,
    dropping zero projections and duplicates.  Every nonnegative c with
    c*gens in the lattice is a sum of the returned vectors.
    """
    k, n = gens.rows, gens.cols
    if lattice.cols != n:
        raise DimensionError("lattice columns must match generator columns")
    r = lattice.rows
    cols = []
    for i in range(k):
        cols.append(gens.row(i))
    for j in range(r):
        cols.append(lattice.row(j))
    for j in range(r):
        cols.append(vec_neg(lattice.row(j)))
    system = IntMatrix.from_rows(cols, cols=n).transpose() if cols else IntMatrix.zeros(n, 0)
    full = hilbert_basis(system, state_cap)
    seen = set()
    out = []
    for sol in full:
        c = sol[:k]
        if vec_is_zero(c) or c in seen:
            continue
        seen.add(c)
        out.append(c)
    return tuple(sorted(out))


def nonneg_feasible(
    gens: IntMatrix,
    modulus: IntMatrix,
    x: Vec,
    state_cap: int = HILBERT_STATE_CAP,
) -> tuple[Vec, Vec] | None:
    """Find a >= 0 and integer t with x = a*gens + t*modulus, or None.

    Decided by homogenization: a Hilbert basis of the system in
    (a, t+, t-, s) with column -x attached to the slack s contains an
    element with s = 1 exactly when x is expressible, because the s
    coordinates of a decomposition of any solution with s = 1 sum to 1.
    The returned certificate is re-checked by exact back-substitution.
    """
    k, n = gens.rows, gens.cols
    r = modulus.rows
    if len(x) != n or modulus.cols != n:
        raise DimensionError("dimension mismatch in nonneg_feasible")
    if vec_is_zero(x):
        return (0,) * k, (0,) * r
    rows = [gens.row(i) for i in range(k)]
    rows += [modulus.row(j) for j in range(r)]
    rows += [vec_neg(modulus.row(j)) for j in range(r)]
    rows.append(vec_neg(x))
    system = IntMatrix.from_rows(rows, cols=n).transpose()
    for sol in hilbert_basis(system, state_cap, early=lambda s: s[-1] == 1):
        if sol[-1] != 1:
            continue
        a = sol[:k]
        t = tuple(p - q for p, q in zip(sol[k : k + r], sol[k + r : k + 2 * r]))
        got = row_times_matrix(a, gens) if k else (0,) * n
        if r:
            got = vec_add(got, row_times_matrix(t, modulus))
        assert got == x, "homogenization produced an invalid certificate"
        return a, t
    return None
