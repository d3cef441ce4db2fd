"""Finite groups given by Cayley tables.

Elements are 0..order-1 with 0 the identity; table[a * order + b] is a * b.
Validation checks the identity row/column, the Latin square property, and
associativity via Light's test on a greedy generating set, so tables of a
few hundred elements validate quickly.  Subgroups, normal closures, and
quotients all return groups whose element 0 is again the identity (subgroup
elements keep ambient order, coset representatives are coset minima).
"""

from dataclasses import dataclass
from functools import cached_property

from .errors import ResourceLimitError, ValidationError

ORDER_CAP = 512


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple  # row-major, table[a * order + b] = a . b

    def mul(self, a: int, b: int) -> int:
        return self.table[a * self.order + b]

    @cached_property
    def inverses(self) -> tuple:
        inv = [0] * self.order
        for a in range(self.order):
            row = self.table[a * self.order : (a + 1) * self.order]
            inv[a] = row.index(0)
        return tuple(inv)

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, x: int, a: int) -> int:
        """x . a . x^-1"""
        return self.mul(self.mul(x, a), self.inv(x))

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


def _closure_set(table, order, seed):
    out = set(seed)
    out.add(0)
    frontier = list(out)
    while frontier:
        a = frontier.pop()
        for b in list(out):
            for c in (table[a * order + b], table[b * order + a]):
                if c not in out:
                    out.add(c)
                    frontier.append(c)
    return out


def make_finite_group(rows, cap: int = ORDER_CAP) -> FiniteGroup:
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 0:
        raise ValidationError("empty multiplication table")
    if n > cap:
        raise ResourceLimitError(f"group order {n} exceeds cap {cap}")
    for a, row in enumerate(rows):
        if len(row) != n:
            raise ValidationError(f"table row {a} has {len(row)} entries, expected {n}")
        for b, e in enumerate(row):
            if not isinstance(e, int) or isinstance(e, bool) or not 0 <= e < n:
                raise ValidationError(f"table entry at ({a}, {b}) is {e!r}")
    flat = tuple(e for row in rows for e in row)
    for a in range(n):
        if flat[a] != a:
            raise ValidationError(f"0 is not a left identity: 0 . {a} = {flat[a]}")
        if flat[a * n] != a:
            raise ValidationError(f"0 is not a right identity: {a} . 0 = {flat[a * n]}")
    for a in range(n):
        if len(set(flat[a * n : (a + 1) * n])) != n:
            raise ValidationError(f"row {a} repeats an element", witness=a)
        if len({flat[b * n + a] for b in range(n)}) != n:
            raise ValidationError(f"column {a} repeats an element", witness=a)
    # Light's test: associativity on a generating set implies it everywhere
    gens = []
    closure = {0}
    while len(closure) < n:
        x = min(set(range(n)) - closure)
        gens.append(x)
        closure = _closure_set(flat, n, closure | {x})
    for g in gens:
        for a in range(n):
            ag = flat[a * n + g]
            arow = a * n
            agrow = ag * n
            grow = g * n
            for c in range(n):
                if flat[agrow + c] != flat[arow + flat[grow + c]]:
                    raise ValidationError(
                        f"not associative at ({a}, {g}, {c})", witness=(a, g, c)
                    )
    group = FiniteGroup(n, flat)
    for a in range(n):
        b = group.inv(a)
        if group.mul(b, a) != 0:
            raise ValidationError(f"{a} has no two-sided inverse", witness=a)
    return group


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValidationError(f"cyclic group order {n}")
    return FiniteGroup(n, tuple((a + b) % n for a in range(n) for b in range(n)))


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


def group_from_permutations(gens, cap: int = ORDER_CAP):
    """Close permutation tuples under composition; returns (group, elements).

    elements[i] is the permutation at index i, sorted so the identity
    permutation lands at index 0.
    """
    gens = [tuple(g) for g in gens]
    if not gens:
        raise ValidationError("need at least one permutation")
    degree = len(gens[0])
    ident = tuple(range(degree))
    for g in gens:
        if sorted(g) != list(ident):
            raise ValidationError(f"not a permutation: {g!r}")
    elems = {ident}
    frontier = [ident]
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = tuple(p[g[i]] for i in range(degree))
            if q not in elems:
                if len(elems) >= cap:
                    raise ResourceLimitError(f"permutation closure exceeds cap {cap}")
                elems.add(q)
                frontier.append(q)
    ordered = sorted(elems)  # identity is lexicographically least
    index = {p: i for i, p in enumerate(ordered)}
    n = len(ordered)
    table = tuple(
        index[tuple(p[q[i]] for i in range(degree))] for p in ordered for q in ordered
    )
    return FiniteGroup(n, table), tuple(ordered)


@dataclass(frozen=True)
class FinMorphism:
    dom: FiniteGroup
    cod: FiniteGroup
    mapping: tuple  # mapping[a] = image of a

    def apply(self, a: int) -> int:
        return self.mapping[a]

    def __repr__(self):
        return f"FinMorphism({self.dom.order} -> {self.cod.order}, {self.mapping})"


def make_fin_morphism(dom: FiniteGroup, cod: FiniteGroup, mapping) -> FinMorphism:
    mapping = tuple(mapping)
    if len(mapping) != dom.order:
        raise ValidationError(
            f"mapping has {len(mapping)} entries for a group of order {dom.order}"
        )
    for a, v in enumerate(mapping):
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < cod.order:
            raise ValidationError(f"mapping[{a}] = {v!r} is not a codomain element")
    for a in range(dom.order):
        for b in range(dom.order):
            if mapping[dom.mul(a, b)] != cod.mul(mapping[a], mapping[b]):
                raise ValidationError(
                    f"not a homomorphism at ({a}, {b})", witness=(a, b)
                )
    return FinMorphism(dom, cod, mapping)


def fin_identity(g: FiniteGroup) -> FinMorphism:
    return FinMorphism(g, g, tuple(range(g.order)))


def fin_zero_morphism(dom: FiniteGroup, cod: FiniteGroup) -> FinMorphism:
    return FinMorphism(dom, cod, (0,) * dom.order)


def fin_compose(f: FinMorphism, g: FinMorphism) -> FinMorphism:
    """f then g."""
    if f.cod != g.dom:
        raise ValidationError("middle groups differ in composition")
    return FinMorphism(f.dom, g.cod, tuple(g.mapping[v] for v in f.mapping))


def fin_is_injective(f: FinMorphism) -> bool:
    return len(set(f.mapping)) == f.dom.order


def fin_is_surjective(f: FinMorphism) -> bool:
    return len(set(f.mapping)) == f.cod.order


def kernel_set(f: FinMorphism) -> frozenset:
    return frozenset(a for a in range(f.dom.order) if f.mapping[a] == 0)


def image_set(f: FinMorphism) -> frozenset:
    return frozenset(f.mapping)


def submonoid_closure(g: FiniteGroup, gens) -> frozenset:
    """Smallest subset containing the identity and closed under the product.

    In a finite group this is automatically a subgroup when it is closed
    under the product, but callers that track cones only rely on the
    submonoid property.
    """
    return frozenset(_closure_set(g.table, g.order, set(gens)))


def conjugation_witness(g: FiniteGroup, subset) -> tuple | None:
    """(x, a) with x . a . x^-1 outside the subset, or None if closed."""
    sub = frozenset(subset)
    for x in range(g.order):
        for a in sub:
            if g.conj(x, a) not in sub:
                return (x, a)
    return None


def normal_closure(g: FiniteGroup, gens) -> frozenset:
    conjugates = {g.conj(x, a) for a in gens for x in range(g.order)}
    conjugates |= {g.inv(c) for c in conjugates}
    return submonoid_closure(g, conjugates)


def subgroup_from_set(g: FiniteGroup, elems):
    """Present a product-closed subset as a group; returns (subgroup, incl).

    incl[i] is the ambient element at subgroup index i; ambient order is
    kept, so the identity is subgroup element 0.
    """
    elems = sorted(set(elems))
    if not elems or elems[0] != 0:
        raise ValidationError("subset does not contain the identity")
    index = {a: i for i, a in enumerate(elems)}
    n = len(elems)
    table = []
    for a in elems:
        for b in elems:
            c = g.mul(a, b)
            if c not in index:
                raise ValidationError(
                    f"subset not closed: {a} . {b} = {c}", witness=(a, b)
                )
            table.append(index[c])
    incl = make_fin_morphism(FiniteGroup(n, tuple(table)), g, tuple(elems))
    return incl.dom, incl


def quotient_by_normal(g: FiniteGroup, nset):
    """Quotient by a normal subgroup; returns (quotient, projection).

    Cosets are represented by their least element and sorted by it, so the
    identity coset is quotient element 0.
    """
    nset = frozenset(nset)
    if 0 not in nset:
        raise ValidationError("normal subgroup misses the identity")
    if submonoid_closure(g, nset) != nset:
        raise ValidationError("subset is not product-closed")
    witness = conjugation_witness(g, nset)
    if witness is not None:
        raise ValidationError(
            f"subgroup is not normal: conjugating {witness[1]} by {witness[0]} leaves it",
            witness=witness,
        )
    coset_of = [-1] * g.order
    reps = []
    for a in range(g.order):
        if coset_of[a] >= 0:
            continue
        members = sorted(g.mul(a, x) for x in nset)
        idx = len(reps)
        reps.append(members[0])
        for m in members:
            coset_of[m] = idx
    order_pairs = sorted(range(len(reps)), key=lambda i: reps[i])
    relabel = {old: new for new, old in enumerate(order_pairs)}
    reps = [reps[old] for old in order_pairs]
    coset_of = [relabel[c] for c in coset_of]
    n = len(reps)
    table = tuple(coset_of[g.mul(reps[i], reps[j])] for i in range(n) for j in range(n))
    quot = FiniteGroup(n, table)
    proj = make_fin_morphism(g, quot, tuple(coset_of))
    return quot, proj


@dataclass(frozen=True)
class FinProduct:
    group: FiniteGroup
    proj_left: FinMorphism
    proj_right: FinMorphism
    inj_left: FinMorphism
    inj_right: FinMorphism


def product_group(g: FiniteGroup, h: FiniteGroup, cap: int = ORDER_CAP) -> FinProduct:
    """Direct product with pair (a, b) at index a * h.order + b."""
    n = g.order * h.order
    if n > cap:
        raise ResourceLimitError(f"product order {n} exceeds cap {cap}")
    m = h.order
    table = tuple(
        g.mul(a, c) * m + h.mul(b, d)
        for a in range(g.order)
        for b in range(m)
        for c in range(g.order)
        for d in range(m)
    )
    prod = FiniteGroup(n, table)
    proj_l = FinMorphism(prod, g, tuple(i // m for i in range(n)))
    proj_r = FinMorphism(prod, h, tuple(i % m for i in range(n)))
    inj_l = FinMorphism(g, prod, tuple(a * m for a in range(g.order)))
    inj_r = FinMorphism(h, prod, tuple(range(m)))
    return FinProduct(prod, proj_l, proj_r, inj_l, inj_r)


def is_abelian(g: FiniteGroup) -> bool:
    return all(
        g.mul(a, b) == g.mul(b, a)
        for a in range(g.order)
        for b in range(a + 1, g.order)
    )
