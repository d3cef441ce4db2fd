"""Probe objects and seeded samplers for the checking harness.

The fixed probe lists cover the behaviours the constructions have to
distinguish: discrete preorders, total preorders, cones with and without
units, torsion and torsion-free parts, and a non-abelian cone.  The
samplers draw random objects and morphisms from a deterministic stream;
a sampler never fails, it falls back to the zero morphism when rejection
sampling finds nothing better, so sample counts stay exact.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import fgabelian as ab
from . import finitegroup as fg
from . import monpos as mp
from . import preord as po
from .errors import ResourceLimitError, ValidationError
from .intmat import IntMatrix, hnf_reduced, in_rowspan_reduced, nonneg_feasible
from .rng import DetRng


@dataclass(frozen=True)
class Probe:
    name: str
    obj: po.PreOrdObj


def _perm_group(perms) -> fg.FiniteGroup:
    group, _ = fg.group_from_permutations(perms)
    return group


@lru_cache(maxsize=1)
def _symmetric3() -> fg.FiniteGroup:
    return _perm_group([(1, 0, 2), (1, 2, 0)])


@lru_cache(maxsize=1)
def _alternating3() -> frozenset:
    g = _symmetric3()
    rotations = [a for a in range(g.order) if _element_order(g, a) != 2]
    return fg.submonoid_closure(g, rotations)


def _center(g: fg.FiniteGroup) -> frozenset:
    return frozenset(
        a
        for a in range(g.order)
        if all(g.mul(a, b) == g.mul(b, a) for b in range(g.order))
    )


@lru_cache(maxsize=1)
def abelian_probes() -> tuple[Probe, ...]:
    z = ab.make_group(1, [])
    z2 = ab.make_group(1, [[2]])
    z4 = ab.make_group(1, [[4]])
    zz = ab.make_group(2, [])
    return (
        Probe("Z-discrete", po.discrete_object(z)),
        Probe("Z-natural", po.make_object(z, [[1]])),
        Probe("Z-even", po.make_object(z, [[2]])),
        Probe("Z-group-cone", po.make_object(z, [[1], [-1]])),
        Probe("Z2-discrete", po.discrete_object(z2)),
        Probe("Z2-full", po.make_object(z2, [[1]])),
        Probe("ZZ-halfplane", po.make_object(zz, [[1, 0], [-1, 0], [0, 1]])),
        Probe("Z4-even", po.make_object(z4, [[2]])),
    )


@lru_cache(maxsize=1)
def finite_probes() -> tuple[Probe, ...]:
    s3 = _symmetric3()
    c2 = fg.cyclic_group(2)
    c4 = fg.cyclic_group(4)
    c6 = fg.cyclic_group(6)
    q8 = _quaternion8()
    return (
        Probe("S3-alternating", po.make_object(s3, _alternating3())),
        Probe("S3-discrete", po.discrete_object(s3)),
        Probe("C2-full", po.make_object(c2, (1,))),
        Probe("C4-even", po.make_object(c4, (2,))),
        Probe("C6-even", po.make_object(c6, (2,))),
        Probe("Q8-center", po.make_object(q8, _center(q8))),
    )


def probes_for(universe: str) -> tuple[Probe, ...]:
    if universe == po.ABELIAN:
        return abelian_probes()
    if universe == po.FINITE:
        return finite_probes()
    raise ValidationError(f"unknown universe {universe!r}")


def monoid_probes(universe: str) -> tuple[tuple[str, mp.ConeMonoid], ...]:
    """The positive cones of the fixed probes, skipping trivial repeats."""
    out = []
    for probe in probes_for(universe):
        m = mp.positive_cone(probe.obj)
        out.append((probe.name, m))
    return tuple(out)


@lru_cache(maxsize=1)
def _quaternion8() -> fg.FiniteGroup:
    # left multiplication by i and by j on (1, -1, i, -i, j, -j, k, -k)
    left_i = (2, 3, 1, 0, 6, 7, 5, 4)
    left_j = (4, 5, 7, 6, 1, 0, 2, 3)
    return _perm_group([left_i, left_j])


def _dihedral(n: int) -> fg.FiniteGroup:
    rotation = tuple((i + 1) % n for i in range(n))
    reflection = tuple((n - i) % n for i in range(n))
    return _perm_group([rotation, reflection])


@lru_cache(maxsize=1)
def finite_catalog() -> tuple[tuple[str, fg.FiniteGroup], ...]:
    """Named groups of order at most 24 the finite samplers draw from."""
    entries = [(f"C{n}", fg.cyclic_group(n)) for n in (1, 2, 3, 4, 5, 6, 8, 12)]
    c2 = fg.cyclic_group(2)
    entries.append(("C2xC2", fg.product_group(c2, c2).group))
    entries.append(("C2xC4", fg.product_group(c2, fg.cyclic_group(4)).group))
    entries.append(("C3xC3", fg.product_group(fg.cyclic_group(3), fg.cyclic_group(3)).group))
    entries.append(("S3", _symmetric3()))
    entries.append(("D4", _dihedral(4)))
    entries.append(("D5", _dihedral(5)))
    entries.append(("D6", _dihedral(6)))
    entries.append(("Q8", _quaternion8()))
    entries.append(("A4", _perm_group([(1, 2, 0, 3), (1, 0, 3, 2)])))
    entries.append(("S4", _perm_group([(1, 0, 2, 3), (1, 2, 3, 0)])))
    return tuple(entries)


@lru_cache(maxsize=None)
def _element_order(g: fg.FiniteGroup, a: int) -> int:
    x = a
    n = 1
    while x != 0:
        x = g.mul(x, a)
        n += 1
    return n


@lru_cache(maxsize=None)
def _generator_words(g: fg.FiniteGroup):
    """A greedy generating set and, per element, a word over it."""
    gens = []
    reached = frozenset({0})
    for a in range(g.order):
        if a not in reached:
            gens.append(a)
            reached = fg.submonoid_closure(g, gens)
    words = {0: ()}
    frontier = [0]
    while frontier:
        x = frontier.pop(0)
        for i, a in enumerate(gens):
            y = g.mul(x, a)
            if y not in words:
                words[y] = words[x] + (i,)
                frontier.append(y)
    return tuple(gens), tuple(words[x] for x in range(g.order))


@lru_cache(maxsize=None)
def _compatible_images(dom: fg.FiniteGroup, cod: fg.FiniteGroup):
    """Per domain generator, the codomain elements of dividing order."""
    gens, _ = _generator_words(dom)
    out = []
    for a in gens:
        oa = _element_order(dom, a)
        out.append(tuple(b for b in range(cod.order) if oa % _element_order(cod, b) == 0))
    return tuple(out)


MORPHISM_TRIES = 24


def random_abelian_object(rng: DetRng) -> po.PreOrdObj:
    rank = rng.randint(0, 3)
    nrel = rng.randint(0, 2) if rank else 0
    rel = [[rng.randint(-4, 4) for _ in range(rank)] for _ in range(nrel)]
    ngen = rng.randint(0, 3) if rank else 0
    gens = [[rng.randint(-3, 3) for _ in range(rank)] for _ in range(ngen)]
    return po.make_object(ab.make_group(rank, rel), gens)


def random_finite_object(rng: DetRng) -> po.PreOrdObj:
    _, group = rng.choice(finite_catalog())
    style = rng.randint(0, 3)
    if style == 0:
        seeds = ()
    elif style == 3:
        seeds = tuple(range(group.order))
    else:
        seeds = tuple(rng.randint(0, group.order - 1) for _ in range(style))
    return po.make_object(group, fg.normal_closure(group, seeds))


def random_object(rng: DetRng, universe: str) -> po.PreOrdObj:
    if universe == po.ABELIAN:
        return random_abelian_object(rng)
    return random_finite_object(rng)


@lru_cache(maxsize=4096)
def _cone_span(gens: IntMatrix, relations: IntMatrix) -> IntMatrix:
    return hnf_reduced(gens.stack(relations))


def _cone_images_plausible(f: ab.AbMorphism, dom: po.PreOrdObj, cod: po.PreOrdObj) -> bool:
    """Necessary test: cone images must at least lie in the cone's span."""
    if cod.cone.rows == 0:
        span = hnf_reduced(cod.group.relations)
    else:
        span = _cone_span(cod.cone, cod.group.relations)
    for i in range(dom.cone.rows):
        if not in_rowspan_reduced(span, ab.apply(f, dom.cone.row(i))):
            return False
    return True


SAMPLER_STATE_CAP = 1_500


def _budget_cone_certs(dom: po.PreOrdObj, cod: po.PreOrdObj, f: ab.AbMorphism):
    """Membership certificates for the cone images, or None.

    Gives the search a small state budget: a candidate whose membership
    is expensive to settle is rejected like an invalid one, keeping the
    sampler's cost bounded on adversarial cones.
    """
    certs = []
    for i in range(dom.cone.rows):
        img = ab.apply(f, dom.cone.row(i))
        if ab.is_zero_element(cod.group, img):
            certs.append((0,) * cod.cone.rows)
            continue
        try:
            got = nonneg_feasible(
                cod.cone, cod.group.reduced_relations, img, state_cap=SAMPLER_STATE_CAP
            )
        except ResourceLimitError:
            return None
        if got is None:
            return None
        certs.append(got[0])
    return tuple(certs)


def _random_abelian_morphism(rng: DetRng, dom: po.PreOrdObj, cod: po.PreOrdObj, tries: int):
    for _ in range(tries):
        rows = [
            [rng.randint(-3, 3) for _ in range(cod.group.rank)]
            for _ in range(dom.group.rank)
        ]
        try:
            f = ab.make_morphism(dom.group, cod.group, rows)
        except ValidationError:
            continue
        if not _cone_images_plausible(f, dom, cod):
            continue
        certs = _budget_cone_certs(dom, cod, f)
        if certs is None:
            continue
        return po.PreOrdMor(dom, cod, f, certs)
    return po.zero_preord(dom, cod)


def _random_finite_morphism(rng: DetRng, dom: po.PreOrdObj, cod: po.PreOrdObj, tries: int):
    gens, words = _generator_words(dom.group)
    pools = _compatible_images(dom.group, cod.group)
    for _ in range(tries):
        images = [rng.choice(pool) for pool in pools]
        mapping = []
        for word in words:
            y = 0
            for i in word:
                y = cod.group.mul(y, images[i])
            mapping.append(y)
        try:
            fg.make_fin_morphism(dom.group, cod.group, mapping)
            return po.make_morphism(dom, cod, tuple(mapping))
        except ValidationError:
            continue
    return po.zero_preord(dom, cod)


def random_morphism(
    rng: DetRng, dom: po.PreOrdObj, cod: po.PreOrdObj, tries: int = MORPHISM_TRIES
) -> po.PreOrdMor:
    """A valid morphism dom -> cod; the zero morphism when tries run out."""
    if dom.universe != cod.universe:
        raise ValidationError("morphisms do not cross universes")
    if dom.universe == po.ABELIAN:
        return _random_abelian_morphism(rng, dom, cod, tries)
    return _random_finite_morphism(rng, dom, cod, tries)


def random_morphism_sample(rng: DetRng, universe: str) -> po.PreOrdMor:
    """A morphism between fresh random objects."""
    dom = random_object(rng.child("dom"), universe)
    cod = random_object(rng.child("cod"), universe)
    return random_morphism(rng.child("mor"), dom, cod)


def random_mon_morphism(
    rng: DetRng, dom: mp.ConeMonoid, cod: mp.ConeMonoid, tries: int = MORPHISM_TRIES
) -> mp.MonMorphism:
    """A valid monoid morphism dom -> cod; zero when tries run out."""
    if dom.universe != cod.universe:
        raise ValidationError("morphisms do not cross universes")
    if dom.universe == po.FINITE:
        gd, _ = mp.group_completion(dom)
        gc, _ = mp.group_completion(cod)
        dom_obj = po.make_object(gd, range(gd.order))
        cod_obj = po.make_object(gc, range(gc.order))
        f = _random_finite_morphism(rng, dom_obj, cod_obj, tries)
        return mp.make_mon_morphism(dom, cod, f.map.mapping)
    ngen = dom.gens.rows
    mgen = cod.gens.rows
    for _ in range(tries):
        rows = [[rng.randint(0, 3) for _ in range(mgen)] for _ in range(ngen)]
        try:
            return mp.make_mon_morphism(dom, cod, rows)
        except ValidationError:
            continue
    return mp.mon_zero(dom, cod)
