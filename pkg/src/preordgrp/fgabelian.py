"""Finitely generated abelian groups presented by integer relation matrices.

A group is Z^rank modulo the row span of its relation matrix; an element is
any integer row vector of length rank, with equality decided modulo the
relation lattice.  Morphisms are integer matrices acting on row vectors,
checked to send relations into relations.

Groups built by the constructions here (kernels, quotients, subgroup
presentations, ...) carry HNF-reduced relation matrices, so independently
computed presentations of the same construction compare structurally equal;
make_group keeps the caller's relation matrix untouched.
"""

from dataclasses import dataclass
from functools import cached_property

from .errors import DimensionError, ValidationError
from .intmat import (
    IntMatrix,
    Vec,
    hermite_normal_form,
    hnf_reduced,
    left_kernel,
    row_times_matrix,
    smith_normal_form,
    solve_left,
    unimodular_inverse,
    vec_sub,
)


def _unit_row(length: int, position: int) -> Vec:
    return tuple(1 if j == position else 0 for j in range(length))


@dataclass(frozen=True)
class FgAbGroup:
    rank: int
    relations: IntMatrix  # rows live in Z^rank

    @cached_property
    def reduced_relations(self) -> IntMatrix:
        return hnf_reduced(self.relations)

    def __repr__(self):
        return f"FgAbGroup(rank={self.rank}, relations={self.relations.to_rows()})"


def make_group(rank: int, relation_rows) -> FgAbGroup:
    if rank < 0:
        raise ValidationError(f"negative rank {rank}")
    try:
        rel = IntMatrix.from_rows(relation_rows, cols=rank)
    except DimensionError as exc:
        raise ValidationError(str(exc)) from exc
    return FgAbGroup(rank, rel)


def zero_group() -> FgAbGroup:
    return FgAbGroup(0, IntMatrix.zeros(0, 0))


def element_eq(g: FgAbGroup, x: Vec, y: Vec) -> bool:
    if len(x) != g.rank or len(y) != g.rank:
        raise DimensionError(f"elements of length {len(x)}, {len(y)} in rank {g.rank}")
    return solve_left(g.reduced_relations, vec_sub(x, y)) is not None


def is_zero_element(g: FgAbGroup, x: Vec) -> bool:
    return solve_left(g.reduced_relations, x) is not None if any(x) else True


def is_trivial(g: FgAbGroup) -> bool:
    """All of Z^rank collapses: the reduced relations span the full lattice."""
    return g.rank == 0 or g.reduced_relations == IntMatrix.identity(g.rank)


@dataclass(frozen=True)
class AbMorphism:
    dom: FgAbGroup
    cod: FgAbGroup
    matrix: IntMatrix  # dom.rank x cod.rank, row i = image of basis vector i


def make_morphism(dom: FgAbGroup, cod: FgAbGroup, matrix_rows) -> AbMorphism:
    m = (
        matrix_rows
        if isinstance(matrix_rows, IntMatrix)
        else IntMatrix.from_rows(matrix_rows, cols=cod.rank)
    )
    if m.rows != dom.rank or m.cols != cod.rank:
        raise ValidationError(
            f"matrix is {m.rows}x{m.cols}, needs {dom.rank}x{cod.rank}", witness=m
        )
    for i in range(dom.relations.rows):
        r = dom.relations.row(i)
        if not is_zero_element(cod, row_times_matrix(r, m)):
            raise ValidationError(
                f"relation row {r} does not map into codomain relations", witness=r
            )
    return AbMorphism(dom, cod, m)


def apply(f: AbMorphism, x: Vec) -> Vec:
    return row_times_matrix(x, f.matrix)


def identity_morphism(g: FgAbGroup) -> AbMorphism:
    return AbMorphism(g, g, IntMatrix.identity(g.rank))


def zero_morphism(dom: FgAbGroup, cod: FgAbGroup) -> AbMorphism:
    return AbMorphism(dom, cod, IntMatrix.zeros(dom.rank, cod.rank))


def compose(f: AbMorphism, g: AbMorphism) -> AbMorphism:
    """f then g; requires f.cod == g.dom structurally."""
    if f.cod != g.dom:
        raise ValidationError("composition endpoints do not match")
    return AbMorphism(f.dom, g.cod, f.matrix.mul(g.matrix))


def morphism_eq(f: AbMorphism, g: AbMorphism) -> bool:
    if f.dom != g.dom or f.cod != g.cod:
        return False
    for i in range(f.dom.rank):
        if not element_eq(f.cod, f.matrix.row(i), g.matrix.row(i)):
            return False
    return True


def preimage_lattice(m: IntMatrix, cod_relations: IntMatrix) -> IntMatrix:
    """Rows generating {x : x * m lies in the row span of cod_relations}."""
    stacked = m.stack(cod_relations)
    kern = left_kernel(stacked)
    rows = [kern.row(i)[: m.rows] for i in range(kern.rows)]
    return hnf_reduced(IntMatrix.from_rows(rows, cols=m.rows))


def present_subgroup(g: FgAbGroup, gen_rows) -> tuple[FgAbGroup, AbMorphism]:
    """Independent presentation of the subgroup generated by the given rows.

    The relation lattice among the generators is put into Smith normal form;
    coordinates with invariant factor 1 are dropped, leaving a presentation
    whose inclusion into g is injective by construction.
    """
    gens = (
        gen_rows
        if isinstance(gen_rows, IntMatrix)
        else IntMatrix.from_rows(gen_rows, cols=g.rank)
    )
    if gens.cols != g.rank:
        raise DimensionError(f"generators of length {gens.cols} in rank {g.rank}")
    m = gens.rows
    if m == 0:
        sub = zero_group()
        return sub, AbMorphism(sub, g, IntMatrix.zeros(0, g.rank))
    coeff_relations = preimage_lattice(gens, g.relations)  # {c : c*gens == 0 in g}
    d, _, v = smith_normal_form(coeff_relations)
    vinv = unimodular_inverse(v)
    newgens = vinv.mul(gens)

    def invariant(i: int) -> int:
        return d.entry(i, i) if i < min(d.rows, d.cols) else 0

    keep = [i for i in range(m) if invariant(i) != 1]
    rel_rows = []
    for pos, i in enumerate(keep):
        di = invariant(i)
        if di > 1:
            rel_rows.append(tuple(di if j == pos else 0 for j in range(len(keep))))
    sub = FgAbGroup(len(keep), hnf_reduced(IntMatrix.from_rows(rel_rows, cols=len(keep))))
    incl = make_morphism(sub, g, [newgens.row(i) for i in range(m) if i in set(keep)])
    return sub, incl


def subgroup_generated(g: FgAbGroup, gen_rows) -> tuple[FgAbGroup, AbMorphism]:
    return present_subgroup(g, gen_rows)


def kernel(f: AbMorphism) -> tuple[FgAbGroup, AbMorphism]:
    """Kernel subgroup with its inclusion, re-presented independently."""
    lat = preimage_lattice(f.matrix, f.cod.relations)
    return present_subgroup(f.dom, lat)


def cokernel(f: AbMorphism) -> tuple[FgAbGroup, AbMorphism]:
    """Quotient of the codomain by the image; projection has identity matrix."""
    rel = hnf_reduced(f.cod.relations.stack(f.matrix))
    q = FgAbGroup(f.cod.rank, rel)
    return q, AbMorphism(f.cod, q, IntMatrix.identity(f.cod.rank))


def quotient_by_subgroup(g: FgAbGroup, incl: AbMorphism) -> tuple[FgAbGroup, AbMorphism]:
    if incl.cod != g:
        raise ValidationError("inclusion does not land in the group being quotiented")
    return cokernel(incl)


@dataclass(frozen=True)
class DirectSum:
    group: FgAbGroup
    inj_left: AbMorphism
    inj_right: AbMorphism
    proj_left: AbMorphism
    proj_right: AbMorphism


def direct_sum(a: FgAbGroup, b: FgAbGroup) -> DirectSum:
    n, m = a.rank, b.rank
    rows = []
    for i in range(a.relations.rows):
        rows.append(a.relations.row(i) + (0,) * m)
    for i in range(b.relations.rows):
        rows.append((0,) * n + b.relations.row(i))
    total = FgAbGroup(n + m, hnf_reduced(IntMatrix.from_rows(rows, cols=n + m)))
    inj_l_rows = [_unit_row(n + m, i) for i in range(n)]
    inj_r_rows = [_unit_row(n + m, n + i) for i in range(m)]
    proj_l_rows = [_unit_row(n, i) if i < n else (0,) * n for i in range(n + m)]
    proj_r_rows = [(0,) * m if i < n else _unit_row(m, i - n) for i in range(n + m)]
    return DirectSum(
        total,
        AbMorphism(a, total, IntMatrix.from_rows(inj_l_rows, cols=n + m)),
        AbMorphism(b, total, IntMatrix.from_rows(inj_r_rows, cols=n + m)),
        AbMorphism(total, a, IntMatrix.from_rows(proj_l_rows, cols=n)),
        AbMorphism(total, b, IntMatrix.from_rows(proj_r_rows, cols=m)),
    )


def is_injective(f: AbMorphism) -> bool:
    k, _ = kernel(f)
    return k.rank == 0


def is_surjective(f: AbMorphism) -> bool:
    q, _ = cokernel(f)
    return is_trivial(q)


def factor_through_injection(
    alpha: AbMorphism, incl: AbMorphism
) -> AbMorphism | None:
    """Solve alpha = phi ; incl for phi, given morphisms into a common group.

    Works row by row: alpha's basis image must be an integer combination of
    incl's generator images modulo the ambient relations.  Returns None when
    some row has no solution.
    """
    if alpha.cod != incl.cod:
        raise ValidationError("factorization endpoints do not match")
    stacked = incl.matrix.stack(incl.cod.relations)
    h, u = hermite_normal_form(stacked)
    rows = []
    for i in range(alpha.dom.rank):
        y = solve_left(h, alpha.matrix.row(i))
        if y is None:
            return None
        full = row_times_matrix(y, u)
        rows.append(full[: incl.dom.rank])
    return make_morphism(alpha.dom, incl.dom, rows)


def factor_through_surjection(
    beta: AbMorphism, proj: AbMorphism
) -> AbMorphism | None:
    """Solve beta = proj ; psi for psi, given a surjective proj."""
    if beta.dom != proj.dom:
        raise ValidationError("factorization endpoints do not match")
    stacked = proj.matrix.stack(proj.cod.relations)
    h, u = hermite_normal_form(stacked)
    rows = []
    for j in range(proj.cod.rank):
        target = tuple(1 if t == j else 0 for t in range(proj.cod.rank))
        y = solve_left(h, target)
        if y is None:
            return None  # proj not surjective onto this coordinate
        pre = row_times_matrix(y, u)[: proj.dom.rank]
        rows.append(row_times_matrix(pre, beta.matrix))
    try:
        psi = make_morphism(proj.cod, beta.cod, rows)
    except ValidationError:
        return None
    if not morphism_eq(compose(proj, psi), beta):
        return None
    return psi


def factorization_unique_through(incl: AbMorphism) -> bool:
    """Do any two factorizations through incl agree as morphisms?

    Solutions of r * incl.matrix == x (mod ambient relations) differ by the
    projection of the left kernel of the stacked system; uniqueness modulo
    the subgroup presentation's relations is exactly that projection lying
    in the relation lattice, which is also equivalent to incl being mono.
    """
    stacked = incl.matrix.stack(incl.cod.relations)
    kern = left_kernel(stacked)
    for i in range(kern.rows):
        candidate = kern.row(i)[: incl.dom.rank]
        if not is_zero_element(incl.dom, candidate):
            return False
    return True
