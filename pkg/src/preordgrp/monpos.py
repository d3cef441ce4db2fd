"""Positive-cone monoids and the cone functor from preordered groups.

A cone monoid is the positive cone of a preordered group kept together
with its ambient group: abelian monoids are generator rows over a
presented group, finite ones are closed subsets of a Cayley-table group.
The group completion is presented on generator coordinates (one basis
element per monoid generator, relations the vanishing lattice), so a
monoid morphism is stored as the induced homomorphism between the
completions and validates by a single relation check plus membership
certificates for the generator images.

The torsion theory of this category is computed exactly: the unit group
of a monoid, the reduced quotient by it, the short exact sequence they
form, and the factorization helpers that make its kernel / cokernel
universal properties checkable.  The cone functor P sends objects to
their cones and morphisms to their certificate matrices; the comparison
morphism embeds the completion back into the ambient group, and the
consistency map identifies P of that completion object with the monoid
it came from.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import fgabelian as ab
from . import finitegroup as fg
from . import preord as po
from .errors import ValidationError
from .intmat import IntMatrix, Vec

ABELIAN = po.ABELIAN
FINITE = po.FINITE


@dataclass(frozen=True)
class ConeMonoid:
    ambient: object  # FgAbGroup | FiniteGroup
    gens: object  # IntMatrix of generator rows | frozenset of elements

    @property
    def universe(self) -> str:
        return ABELIAN if isinstance(self.ambient, ab.FgAbGroup) else FINITE

    def __repr__(self):
        if self.universe == ABELIAN:
            return f"ConeMonoid({self.ambient!r}, gens={self.gens.to_rows()})"
        return f"ConeMonoid({self.ambient!r}, elements={sorted(self.gens)})"


def make_monoid(ambient, gens) -> ConeMonoid:
    """Validate the generators against the ambient group.

    Finite generator sets are closed up and must be stable under ambient
    conjugation, so the monoid is the cone of a preorder on the ambient
    group.
    """
    obj = po.make_object(ambient, gens)
    return ConeMonoid(obj.group, obj.cone)


def positive_cone(obj: po.PreOrdObj) -> ConeMonoid:
    return ConeMonoid(obj.group, obj.cone)


def ambient_object(m: ConeMonoid) -> po.PreOrdObj:
    return po.PreOrdObj(m.ambient, m.gens)


@lru_cache(maxsize=4096)
def group_completion(m: ConeMonoid):
    """The subgroup the monoid generates, on generator coordinates.

    Returns (group, embed) with embed the injection into the ambient
    group; abelian completions have one basis element per generator and
    the vanishing lattice as relations, finite ones are the closed subset
    itself presented as a group.
    """
    if m.universe == ABELIAN:
        lattice = ab.preimage_lattice(m.gens, m.ambient.relations)
        group = ab.FgAbGroup(m.gens.rows, lattice)
        embed = ab.AbMorphism(group, m.ambient, m.gens)
        return group, embed
    return fg.subgroup_from_set(m.ambient, m.gens)


def completion_object(m: ConeMonoid) -> po.PreOrdObj:
    """The completion preordered by the monoid itself."""
    group, _ = group_completion(m)
    if m.universe == ABELIAN:
        return po.PreOrdObj(group, IntMatrix.identity(m.gens.rows))
    return po.PreOrdObj(group, frozenset(range(group.order)))


def mon_certificate(m: ConeMonoid, x) -> Vec | None:
    """Nonnegative generator coefficients for an ambient element, or None."""
    return po.cone_certificate(ambient_object(m), x)


def mon_contains(m: ConeMonoid, x) -> bool:
    return po.cone_contains(ambient_object(m), x)


def ore_condition_failure(m: ConeMonoid):
    """A pair (a, b) with no common multiple x + a = y + b inside the monoid.

    Abelian monoids always satisfy the condition with x = b, y = a.  Finite
    cones are subgroups, so the exhaustive scan is a consistency check.
    """
    if m.universe == ABELIAN:
        return None
    for a in m.gens:
        for b in m.gens:
            target = {m.ambient.mul(x, a) for x in m.gens}
            if target.isdisjoint({m.ambient.mul(y, b) for y in m.gens}):
                return (a, b)
    return None


@dataclass(frozen=True)
class MonMorphism:
    dom: ConeMonoid
    cod: ConeMonoid
    ext: object  # AbMorphism | FinMorphism between the completions

    def __repr__(self):
        return f"MonMorphism({self.dom!r} -> {self.cod!r})"


def make_mon_morphism(dom: ConeMonoid, cod: ConeMonoid, rows) -> MonMorphism:
    """Build from generator images given in codomain generator coordinates.

    The relation check on the completions makes the assignment
    well-defined; each image row must describe a monoid element, which is
    immediate when the row is nonnegative and otherwise decided exactly.
    """
    if dom.universe != cod.universe:
        raise ValidationError("morphisms do not cross universes")
    gd, _ = group_completion(dom)
    gc, _ = group_completion(cod)
    if dom.universe == FINITE:
        ext = rows if isinstance(rows, fg.FinMorphism) else fg.make_fin_morphism(
            gd, gc, rows
        )
        return MonMorphism(dom, cod, ext)
    ext = rows if isinstance(rows, ab.AbMorphism) else ab.make_morphism(gd, gc, rows)
    if ext.dom != gd or ext.cod != gc:
        raise ValidationError("extension endpoints do not match the completions")
    target = completion_object(cod)
    for i in range(gd.rank):
        row = ext.matrix.row(i)
        if all(v >= 0 for v in row):
            continue  # the row is its own membership certificate
        if po.cone_certificate(target, row) is None:
            raise ValidationError(
                f"generator {i} maps to {row}, outside the monoid", witness=(i, row)
            )
    return MonMorphism(dom, cod, ext)


def as_preord(h: MonMorphism) -> po.PreOrdMor:
    """The same morphism between the completion objects."""
    return po.make_morphism(completion_object(h.dom), completion_object(h.cod), h.ext)


def mon_identity(m: ConeMonoid) -> MonMorphism:
    group, _ = group_completion(m)
    if m.universe == ABELIAN:
        return MonMorphism(m, m, ab.identity_morphism(group))
    return MonMorphism(m, m, fg.fin_identity(group))


def mon_zero(dom: ConeMonoid, cod: ConeMonoid) -> MonMorphism:
    gd, _ = group_completion(dom)
    gc, _ = group_completion(cod)
    if dom.universe == ABELIAN:
        return MonMorphism(dom, cod, ab.zero_morphism(gd, gc))
    return MonMorphism(dom, cod, fg.fin_zero_morphism(gd, gc))


def mon_compose(f: MonMorphism, g: MonMorphism) -> MonMorphism:
    if f.cod != g.dom:
        raise ValidationError("middle monoids differ in composition")
    if f.dom.universe == ABELIAN:
        return MonMorphism(f.dom, g.cod, ab.compose(f.ext, g.ext))
    return MonMorphism(f.dom, g.cod, fg.fin_compose(f.ext, g.ext))


def mon_eq(f: MonMorphism, g: MonMorphism) -> bool:
    if f.dom != g.dom or f.cod != g.cod:
        return False
    if f.dom.universe == ABELIAN:
        return ab.morphism_eq(f.ext, g.ext)
    return f.ext.mapping == g.ext.mapping


def mon_is_zero(h: MonMorphism) -> bool:
    if h.dom.universe == ABELIAN:
        gc, _ = group_completion(h.cod)
        return all(
            ab.is_zero_element(gc, h.ext.matrix.row(i))
            for i in range(h.ext.matrix.rows)
        )
    return all(v == 0 for v in h.ext.mapping)


def mon_is_isomorphism(h: MonMorphism) -> bool:
    return po.is_isomorphism(as_preord(h))


def is_group_monoid(m: ConeMonoid) -> bool:
    """Every element invertible: each generator occurs in a vanishing sum."""
    if m.universe == FINITE:
        return True
    touched = po.touched_unit_generators(ambient_object(m))
    return set(touched) == set(range(m.gens.rows))


def is_reduced(m: ConeMonoid) -> bool:
    """No unit but zero."""
    if m.universe == FINITE:
        return m.gens == frozenset({0})
    touched = po.touched_unit_generators(ambient_object(m))
    return all(ab.is_zero_element(m.ambient, m.gens.row(i)) for i in touched)


def is_trivial_monoid(m: ConeMonoid) -> bool:
    if m.universe == FINITE:
        return m.gens == frozenset({0})
    return all(
        ab.is_zero_element(m.ambient, m.gens.row(i)) for i in range(m.gens.rows)
    )


def units(m: ConeMonoid):
    """The unit group as a submonoid; returns (U, inclusion)."""
    if m.universe == FINITE:
        return m, mon_identity(m)
    touched = po.touched_unit_generators(ambient_object(m))
    rows = [m.gens.row(i) for i in touched]
    u = ConeMonoid(m.ambient, IntMatrix.from_rows(rows, cols=m.ambient.rank))
    ext_rows = [list(_unit(m.gens.rows, i)) for i in touched]
    return u, make_mon_morphism(u, m, ext_rows)


def quotient_by_units(m: ConeMonoid):
    """The reduced quotient; returns (M/U, projection)."""
    if m.universe == FINITE:
        reduced = ConeMonoid(fg.trivial_group(), frozenset({0}))
        group, _ = group_completion(m)
        return reduced, MonMorphism(m, reduced, fg.fin_zero_morphism(group, fg.trivial_group()))
    touched = po.touched_unit_generators(ambient_object(m))
    trows = [m.gens.row(i) for i in touched]
    _, incl = ab.subgroup_generated(m.ambient, trows)
    qgroup, _ = ab.quotient_by_subgroup(m.ambient, incl)
    reduced = ConeMonoid(qgroup, m.gens)
    eta = make_mon_morphism(m, reduced, IntMatrix.identity(m.gens.rows).to_rows())
    return reduced, eta


@dataclass(frozen=True)
class MonSes:
    units: ConeMonoid
    kappa: MonMorphism
    monoid: ConeMonoid
    reduced: ConeMonoid
    eta: MonMorphism


def torsion_ses(m: ConeMonoid) -> MonSes:
    """U(M) -> M ->> M/U(M)."""
    u, kappa = units(m)
    reduced, eta = quotient_by_units(m)
    return MonSes(u, kappa, m, reduced, eta)


def factor_through_units(h: MonMorphism, u: ConeMonoid) -> MonMorphism | None:
    """Factor h: T -> M through the unit inclusion U -> M, if possible.

    Exists exactly when every generator image of h is a unit, which makes
    the inclusion the kernel of the reduced quotient.
    """
    if h.dom.universe == FINITE:
        return MonMorphism(h.dom, u, h.ext)
    rows = []
    for i in range(h.ext.matrix.rows):
        cert = mon_certificate(u, _to_ambient(h.cod, h.ext.matrix.row(i)))
        if cert is None:
            return None
        rows.append(list(cert))
    try:
        return make_mon_morphism(h.dom, u, rows)
    except ValidationError:
        return None


def factor_through_reduction(h: MonMorphism, eta: MonMorphism) -> MonMorphism | None:
    """Factor h: M -> T through the reduced quotient M -> M/U, if possible.

    Exists exactly when h kills the units, which makes the quotient the
    cokernel of the unit inclusion.
    """
    if h.dom.universe == FINITE:
        if not mon_is_zero(h):
            return None
        gq, _ = group_completion(eta.cod)
        gc, _ = group_completion(h.cod)
        return MonMorphism(eta.cod, h.cod, fg.fin_zero_morphism(gq, gc))
    try:
        return make_mon_morphism(eta.cod, h.cod, h.ext.matrix.to_rows())
    except ValidationError:
        return None


def _to_ambient(m: ConeMonoid, row: Vec) -> Vec:
    _, embed = group_completion(m)
    return ab.apply(embed, row)


def positive_cone_mor(f: po.PreOrdMor) -> MonMorphism:
    """P on morphisms: the restriction of f to the cones.

    Abelian morphisms carry membership certificates for their generator
    images; those certificate rows are exactly the extension matrix on
    generator coordinates.
    """
    mdom = positive_cone(f.dom)
    mcod = positive_cone(f.cod)
    if f.dom.universe == ABELIAN:
        certs = f.certs
        if certs is None:
            certs = tuple(
                po.cone_certificate(f.cod, ab.apply(f.map, f.dom.cone.row(i)))
                for i in range(f.dom.cone.rows)
            )
        rows = [list(c) for c in certs]
        return make_mon_morphism(mdom, mcod, rows)
    gd, incl_d = group_completion(mdom)
    gc, incl_c = group_completion(mcod)
    index_c = {a: i for i, a in enumerate(incl_c.mapping)}
    mapping = tuple(index_c[f.map.mapping[a]] for a in incl_d.mapping)
    return MonMorphism(mdom, mcod, fg.FinMorphism(gd, gc, mapping))


def comparison_morphism(m: ConeMonoid) -> po.PreOrdMor:
    """(completion, M) -> (ambient, M), always a monomorphism."""
    group, embed = group_completion(m)
    dom_obj = completion_object(m)
    cod_obj = ambient_object(m)
    if m.universe == ABELIAN:
        certs = tuple(_unit(m.gens.rows, i) for i in range(m.gens.rows))
        return po.PreOrdMor(dom_obj, cod_obj, embed, certs)
    return po.PreOrdMor(dom_obj, cod_obj, embed)


def fhat_consistency(m: ConeMonoid) -> MonMorphism:
    """P of the completion object back onto the monoid, an isomorphism."""
    source = positive_cone(completion_object(m))
    if m.universe == ABELIAN:
        rows = IntMatrix.identity(m.gens.rows).to_rows()
        return make_mon_morphism(source, m, rows)
    # completing the full subset of the completion relabels nothing
    gs, _ = group_completion(source)
    gm, _ = group_completion(m)
    return MonMorphism(source, m, fg.make_fin_morphism(gs, gm, tuple(range(gs.order))))


@dataclass(frozen=True)
class SpecialSes:
    sub: po.PreOrdObj
    incl: po.PreOrdMor
    obj: po.PreOrdObj
    quot: po.PreOrdObj
    proj: po.PreOrdMor


def special_ses(obj: po.PreOrdObj, subgroup) -> SpecialSes:
    """(H, P) -> (G, P) ->> (G/H, 0) for a subgroup H containing the cone.

    The cone functor collapses the right leg, so the sequence P maps to
    has an isomorphic left leg and a trivial right term.
    """
    if obj.universe == ABELIAN:
        rows = subgroup if isinstance(subgroup, IntMatrix) else IntMatrix.from_rows(
            subgroup, cols=obj.group.rank
        )
        _, incl_ab = ab.subgroup_generated(obj.group, rows.to_rows())
        pulled = []
        for i in range(obj.cone.rows):
            alpha = ab.make_morphism(_Z1, obj.group, [list(obj.cone.row(i))])
            phi = ab.factor_through_injection(alpha, incl_ab)
            if phi is None:
                raise ValidationError(
                    f"subgroup does not contain cone generator {i}", witness=i
                )
            pulled.append(phi.matrix.row(0))
        sub_obj = po.PreOrdObj(
            incl_ab.dom, IntMatrix.from_rows(pulled, cols=incl_ab.dom.rank)
        )
        certs = tuple(_unit(obj.cone.rows, i) for i in range(obj.cone.rows))
        incl = po.PreOrdMor(sub_obj, obj, incl_ab, certs)
    else:
        closed = fg.submonoid_closure(obj.group, subgroup)
        if not obj.cone <= closed:
            missing = min(obj.cone - closed)
            raise ValidationError(
                f"subgroup does not contain cone element {missing}", witness=missing
            )
        sub, incl_f = fg.subgroup_from_set(obj.group, closed)
        indices = frozenset(
            i for i, a in enumerate(incl_f.mapping) if a in obj.cone
        )
        sub_obj = po.PreOrdObj(sub, indices)
        incl = po.PreOrdMor(sub_obj, obj, incl_f)
    quot, proj = po.cokernel(incl)
    return SpecialSes(sub_obj, incl, obj, quot, proj)


def _unit(length: int, position: int) -> Vec:
    return tuple(1 if j == position else 0 for j in range(length))


_Z1 = ab.make_group(1, [])
