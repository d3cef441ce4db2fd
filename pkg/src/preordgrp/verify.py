"""Machine checks for the universal properties of the constructions.

Every check returns a Certificate: a claim name, pass/fail, counters, and
witness lines describing each failure.  Checks are deterministic: probes
come from the fixed library and all sampling derives from labelled
streams of the suite seed, so two runs with the same seed produce
byte-identical reports.

Uniqueness of factorizations is decided structurally, not by sampling:
a factorization through a morphism is unique exactly when the morphism
is injective (dually, surjective) on the underlying groups, because two
factorizations differ by a morphism into its kernel.

Each universal-property verifier also knows how to build deliberately
corrupted candidates (enlarged or punctured cones, skipped quotient
generators, forgotten collapse generators); claim runners require every
applicable corruption to fail its check.
"""

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from . import fgabelian as ab
from . import finitegroup as fg
from . import monpos as mp
from . import preord as po
from . import probes as pr
from .errors import ResourceLimitError, ValidationError
from .intmat import (
    IntMatrix,
    hilbert_basis,
    hnf_reduced,
    in_rowspan_reduced,
    nonneg_feasible,
    row_times_matrix,
    vec_dot,
    vec_is_zero,
    vec_sub,
)
from .rng import DetRng


@dataclass(frozen=True)
class Certificate:
    claim: str
    status: str  # "pass" | "fail"
    stats: tuple  # ((label, count), ...)
    witnesses: tuple = ()

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _certificate(claim: str, stats: dict, witnesses) -> Certificate:
    packed = tuple(sorted(stats.items()))
    witnesses = tuple(witnesses)
    return Certificate(claim, "fail" if witnesses else "pass", packed, witnesses)


def format_certificate(cert: Certificate) -> str:
    lines = [f"claim {cert.claim}", f"status {cert.status}"]
    lines += [f"stat {label} {count}" for label, count in cert.stats]
    lines += [f"witness {w}" for w in cert.witnesses]
    return "\n".join(lines)


def format_certificates(certs) -> str:
    return "\n\n".join(format_certificate(c) for c in certs) + "\n"


def _bump(stats: dict, label: str, n: int = 1) -> None:
    stats[label] = stats.get(label, 0) + n


def _obj_key(obj: po.PreOrdObj) -> str:
    if obj.universe == po.ABELIAN:
        blob = repr(("a", obj.group.rank, obj.group.relations.entries, obj.cone.entries))
    else:
        blob = repr(("f", obj.group.order, obj.group.table, tuple(sorted(obj.cone))))
    return hashlib.blake2b(blob.encode(), digest_size=5).hexdigest()


def _mor_key(m: po.PreOrdMor) -> str:
    if m.dom.universe == po.ABELIAN:
        body = m.map.matrix.entries
    else:
        body = m.map.mapping
    blob = repr((_obj_key(m.dom), _obj_key(m.cod), body))
    return hashlib.blake2b(blob.encode(), digest_size=5).hexdigest()


# --- the probe suite -------------------------------------------------------


@dataclass(frozen=True)
class ProbeSuite:
    """The fixed probe objects plus seeded morphism samples per pair.

    Rebuilding with the same seed and sample count reproduces the suite
    exactly; verifiers derive all further sampling from the same seed.
    """

    seed: int
    samples_per_pair: int
    objects: tuple  # Probe entries, both universes
    morphism_samples: tuple  # (dom_name, cod_name, (morphisms...))


def make_suite(seed: int = 0, samples_per_pair: int = 50) -> ProbeSuite:
    root = DetRng.from_seed(seed).child("suite")
    objects = pr.abelian_probes() + pr.finite_probes()
    samples = []
    for universe in (po.ABELIAN, po.FINITE):
        for pa in pr.probes_for(universe):
            for pb in pr.probes_for(universe):
                stream = root.child(f"{pa.name}->{pb.name}")
                mors = tuple(
                    pr.random_morphism(stream.child(j), pa.obj, pb.obj)
                    for j in range(samples_per_pair)
                )
                samples.append((pa.name, pb.name, mors))
    return ProbeSuite(seed, samples_per_pair, objects, tuple(samples))


@lru_cache(maxsize=8)
def default_suite(seed: int = 0, samples_per_pair: int = 50) -> ProbeSuite:
    return make_suite(seed, samples_per_pair)


def suite_probes(suite: ProbeSuite, universe: str) -> tuple:
    return tuple(p for p in suite.objects if p.obj.universe == universe)


def _suite_pair_samples(suite: ProbeSuite, dom_name: str, cod_name: str) -> tuple:
    for a, b, mors in suite.morphism_samples:
        if a == dom_name and b == cod_name:
            return mors
    return ()


# --- factorization solvers -------------------------------------------------

# Result of a factorization attempt the search budget could not settle.
# Callers skip the probe and count it instead of recording a witness.
UNDECIDED = object()

_FACTOR_STATE_CAP = 50_000


def _budget_preord_morphism(dom: po.PreOrdObj, cod: po.PreOrdObj, mapping):
    """A cone-preserving morphism, None when some image is outside the
    cone, or UNDECIDED when the membership budget runs out."""
    certs = []
    for i in range(dom.cone.rows):
        img = ab.apply(mapping, dom.cone.row(i))
        if ab.is_zero_element(cod.group, img):
            certs.append((0,) * cod.cone.rows)
            continue
        try:
            got = nonneg_feasible(
                cod.cone, cod.group.reduced_relations, img, state_cap=_FACTOR_STATE_CAP
            )
        except ResourceLimitError:
            return UNDECIDED
        if got is None:
            return None
        certs.append(got[0])
    return po.PreOrdMor(dom, cod, mapping, tuple(certs))


def _factor_through_mono(t: po.PreOrdMor, kobj: po.PreOrdObj, k: po.PreOrdMor):
    """Solve phi ; k = t with phi cone-preserving; None when impossible."""
    if t.dom.universe == po.ABELIAN:
        phi = ab.factor_through_injection(t.map, k.map)
        if phi is None:
            return None
        mor = _budget_preord_morphism(t.dom, kobj, phi)
        if mor is None or mor is UNDECIDED:
            return mor
    else:
        inverse = {}
        for x, y in enumerate(k.map.mapping):
            inverse.setdefault(y, x)
        mapping = []
        for y in t.map.mapping:
            if y not in inverse:
                return None
            mapping.append(inverse[y])
        try:
            mor = po.make_morphism(t.dom, kobj, tuple(mapping))
        except ValidationError:
            return None
    if not po.mor_eq(po.compose_preord(mor, k), t):
        return None
    return mor


def _factor_through_epi(s: po.PreOrdMor, qobj: po.PreOrdObj, q: po.PreOrdMor):
    """Solve q ; psi = s with psi cone-preserving; None when impossible."""
    if s.dom.universe == po.ABELIAN:
        psi = ab.factor_through_surjection(s.map, q.map)
        if psi is None:
            return None
        try:
            mor = po.make_morphism(qobj, s.cod, psi)
        except ValidationError:
            return None
    else:
        mapping = [None] * qobj.group.order
        for x in range(s.dom.group.order):
            y = q.map.mapping[x]
            v = s.map.mapping[x]
            if mapping[y] is None:
                mapping[y] = v
            elif mapping[y] != v:
                return None
        if any(v is None for v in mapping):
            return None
        try:
            mor = po.make_morphism(qobj, s.cod, tuple(mapping))
        except ValidationError:
            return None
    if not po.mor_eq(po.compose_preord(q, mor), s):
        return None
    return mor


def _budget_cone_contains(obj: po.PreOrdObj, x, cap: int = 4_000):
    """Cone membership with a small search budget; None when undecided.

    Mutant construction only needs membership on easy instances; skipping
    a candidate beats spending minutes proving one row non-redundant.
    """
    if obj.universe == po.FINITE:
        return x in obj.cone
    try:
        got = nonneg_feasible(obj.cone, obj.group.reduced_relations, x, state_cap=cap)
    except ResourceLimitError:
        return None
    return got is not None


_ZNAT = None  # (Z, natural cone), built lazily to keep import order simple


def _znat() -> po.PreOrdObj:
    global _ZNAT
    if _ZNAT is None:
        _ZNAT = po.make_object(ab.make_group(1, []), [[1]])
    return _ZNAT


def _element_probe(obj: po.PreOrdObj, element) -> po.PreOrdMor:
    """A morphism from a one-generator probe hitting a cone element."""
    if obj.universe == po.ABELIAN:
        return po.make_morphism(_znat(), obj, [list(element)])
    order = pr._element_order(obj.group, element)
    cn = fg.cyclic_group(order)
    source = po.make_object(cn, range(order))
    mapping = [0] * order
    for j in range(1, order):
        mapping[j] = obj.group.mul(mapping[j - 1], element)
    return po.make_morphism(source, obj, tuple(mapping))


def _killed_cone_elements(m: po.PreOrdMor):
    """Cone generators of the domain that the morphism sends to zero."""
    if m.dom.universe == po.ABELIAN:
        out = []
        for i in range(m.dom.cone.rows):
            row = m.dom.cone.row(i)
            if ab.is_zero_element(m.cod.group, ab.apply(m.map, row)):
                out.append(row)
        return out
    return [p for p in sorted(m.dom.cone) if p != 0 and m.map.mapping[p] == 0]


# --- relative kernel -------------------------------------------------------


def _zker_witnesses(m, suite, candidate=None, probes_per_source=1):
    kobj, k = candidate if candidate is not None else po.z_kernel(m)
    stats = {}
    witnesses = []
    key = _mor_key(m)
    composite = po.compose_preord(k, m)
    if not po.is_z_trivial(composite):
        witnesses.append(f"{key}: candidate does not cancel the morphism")
    injective = (
        ab.is_injective(k.map)
        if m.dom.universe == po.ABELIAN
        else fg.fin_is_injective(k.map)
    )
    if not injective:
        witnesses.append(f"{key}: kernel arrow is not injective, factorizations not unique")

    targets = _killed_cone_elements(m)
    true_kobj, _ = po.z_kernel(m)
    if m.dom.universe == po.ABELIAN:
        targets += [true_kobj.cone.row(i) for i in range(true_kobj.cone.rows)]
    seen = set()
    for element in targets:
        if element in seen:
            continue
        seen.add(element)
        t = _element_probe(m.dom, element)
        _bump(stats, "targeted")
        phi = _factor_through_mono(t, kobj, k)
        if phi is UNDECIDED:
            _bump(stats, "undecided")
        elif phi is None:
            witnesses.append(f"{key}: cone element {element} does not factor")

    root = DetRng.from_seed(suite.seed).child("zker-up").child(key)
    for probe in suite_probes(suite, m.dom.universe):
        stream = root.child(probe.name)
        for j in range(probes_per_source):
            t = pr.random_morphism(stream.child(j), probe.obj, m.dom)
            _bump(stats, "sampled")
            vanishes = po.is_z_trivial(po.compose_preord(t, m))
            phi = _factor_through_mono(t, kobj, k)
            if phi is UNDECIDED:
                _bump(stats, "undecided")
            elif vanishes and phi is None:
                witnesses.append(f"{key}: probe {probe.name}#{j} cancels but does not factor")
            elif not vanishes and phi is not None:
                witnesses.append(f"{key}: probe {probe.name}#{j} factors without cancelling")
            elif phi is not None:
                _bump(stats, "factored")
    return witnesses, stats


def verify_z_kernel_up(m: po.PreOrdMor, suite: ProbeSuite, candidate=None) -> Certificate:
    """Check the relative-kernel universal property for one morphism."""
    witnesses, stats = _zker_witnesses(m, suite, candidate, probes_per_source=2)
    return _certificate("zker-up", stats, witnesses)


def z_kernel_mutants(m: po.PreOrdMor):
    """Corrupted kernel candidates that a sound verifier must reject."""
    kobj, k = po.z_kernel(m)
    out = []
    if m.dom.universe == po.ABELIAN:
        for i in range(m.dom.cone.rows):
            row = m.dom.cone.row(i)
            if not ab.is_zero_element(m.cod.group, ab.apply(m.map, row)):
                extra = IntMatrix.from_rows([row], cols=kobj.cone.cols)
                bigger = po.PreOrdObj(kobj.group, kobj.cone.stack(extra))
                out.append(("cone-enlarged", (bigger, po.PreOrdMor(bigger, m.dom, k.map))))
                break
        for i in reversed(range(kobj.cone.rows)):
            kept = [kobj.cone.row(j) for j in range(kobj.cone.rows) if j != i]
            smaller = po.PreOrdObj(
                kobj.group, IntMatrix.from_rows(kept, cols=kobj.cone.cols)
            )
            if _budget_cone_contains(smaller, kobj.cone.row(i)) is False:
                out.append(("cone-dropped", (smaller, po.PreOrdMor(smaller, m.dom, k.map))))
                break
    else:
        for p in sorted(m.dom.cone):
            if m.map.mapping[p] != 0:
                bigger = po.PreOrdObj(kobj.group, kobj.cone | {p})
                out.append(("cone-enlarged", (bigger, po.PreOrdMor(bigger, m.dom, k.map))))
                break
        for p in sorted(kobj.cone):
            if p != 0:
                smaller = po.PreOrdObj(kobj.group, kobj.cone - {p})
                out.append(("cone-dropped", (smaller, po.PreOrdMor(smaller, m.dom, k.map))))
                break
    return tuple(out)


# --- relative cokernel -----------------------------------------------------


def _zcok_witnesses(m, suite, candidate=None, probes_per_target=1):
    qobj, q = candidate if candidate is not None else po.z_cokernel(m)
    stats = {}
    witnesses = []
    key = _mor_key(m)
    if not po.is_z_trivial(po.compose_preord(m, q)):
        witnesses.append(f"{key}: candidate does not cancel the morphism")
    surjective = (
        ab.is_surjective(q.map)
        if m.dom.universe == po.ABELIAN
        else fg.fin_is_surjective(q.map)
    )
    if not surjective:
        witnesses.append(f"{key}: quotient arrow is not surjective, factorizations not unique")

    true_qobj, true_q = po.z_cokernel(m)
    _bump(stats, "targeted")
    if _factor_through_epi(true_q, qobj, q) is None:
        witnesses.append(f"{key}: the canonical quotient does not factor through the candidate")

    root = DetRng.from_seed(suite.seed).child("zcok-up").child(key)
    for probe in suite_probes(suite, m.dom.universe):
        stream = root.child(probe.name)
        for j in range(probes_per_target):
            s = pr.random_morphism(stream.child(j), m.cod, probe.obj)
            _bump(stats, "sampled")
            vanishes = po.is_z_trivial(po.compose_preord(m, s))
            psi = _factor_through_epi(s, qobj, q)
            if vanishes and psi is None:
                witnesses.append(f"{key}: probe {probe.name}#{j} cancels but does not factor")
            elif not vanishes and psi is not None:
                witnesses.append(f"{key}: probe {probe.name}#{j} factors without cancelling")
            elif psi is not None:
                _bump(stats, "factored")
    return witnesses, stats


def verify_z_cokernel_up(m: po.PreOrdMor, suite: ProbeSuite, candidate=None) -> Certificate:
    """Check the relative-cokernel universal property for one morphism."""
    witnesses, stats = _zcok_witnesses(m, suite, candidate, probes_per_target=2)
    return _certificate("zcok-up", stats, witnesses)


def _first_outside_cone(obj: po.PreOrdObj):
    """A small element outside the cone, or None when none is found."""
    if obj.universe == po.FINITE:
        for y in range(obj.group.order):
            if y not in obj.cone:
                return y
        return None
    rank = obj.group.rank
    basis = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    candidates = [r for r in basis]
    candidates += [tuple(-v for v in r) for r in basis]
    candidates += [tuple(2 * v for v in r) for r in basis]
    for a, b in combinations_with_replacement(basis, 2):
        candidates.append(tuple(x + y for x, y in zip(a, b)))
    for y in candidates:
        if not ab.is_zero_element(obj.group, y) and _budget_cone_contains(obj, y) is False:
            return y
    return None


def z_cokernel_mutants(m: po.PreOrdMor):
    """Corrupted cokernel candidates that a sound verifier must reject."""
    qobj, q = po.z_cokernel(m)
    out = []
    if m.dom.universe == po.ABELIAN:
        srows = [
            ab.apply(m.map, m.dom.cone.row(i)) for i in range(m.dom.cone.rows)
        ]
        for i, dropped in enumerate(srows):
            kept = [r for j, r in enumerate(srows) if j != i]
            rel = m.cod.group.relations
            for r in kept:
                rel = rel.stack(IntMatrix.from_rows([r], cols=rel.cols))
            group = ab.FgAbGroup(m.cod.group.rank, hnf_reduced(rel))
            if ab.is_zero_element(group, dropped):
                continue
            proj = ab.AbMorphism(m.cod.group, group, IntMatrix.identity(group.rank))
            obj2 = po.PreOrdObj(group, m.cod.cone)
            out.append(("generator-skipped", (obj2, po.PreOrdMor(m.cod, obj2, proj))))
            break
        outside = _first_outside_cone(qobj)
        if outside is not None:
            extra = IntMatrix.from_rows([outside], cols=qobj.cone.cols)
            obj3 = po.PreOrdObj(qobj.group, qobj.cone.stack(extra))
            out.append(("cone-enlarged", (obj3, po.PreOrdMor(m.cod, obj3, q.map))))
    else:
        images = sorted({m.map.mapping[p] for p in m.dom.cone} - {0})
        for i, dropped in enumerate(images):
            kept = [r for j, r in enumerate(images) if j != i]
            nset = fg.normal_closure(m.cod.group, kept)
            if dropped in nset:
                continue
            group, proj = fg.quotient_by_normal(m.cod.group, nset)
            cone = frozenset(proj.mapping[p] for p in m.cod.cone)
            obj2 = po.PreOrdObj(group, cone)
            out.append(("generator-skipped", (obj2, po.PreOrdMor(m.cod, obj2, proj))))
            break
        outside = _first_outside_cone(qobj)
        if outside is not None:
            obj3 = po.PreOrdObj(qobj.group, qobj.cone | {outside})
            out.append(("cone-enlarged", (obj3, po.PreOrdMor(m.cod, obj3, q.map))))
    return tuple(out)


# --- pretorsion axioms -----------------------------------------------------


def _same_cone(a: po.PreOrdObj, b: po.PreOrdObj) -> bool:
    if a.universe != b.universe or a.group != b.group:
        return False
    if a.universe == po.FINITE:
        return a.cone == b.cone
    return all(
        po.cone_contains(b, a.cone.row(i)) for i in range(a.cone.rows)
    ) and all(po.cone_contains(a, b.cone.row(j)) for j in range(b.cone.rows))


def _map_eq(f: po.PreOrdMor, g: po.PreOrdMor) -> bool:
    if f.dom.universe == po.ABELIAN:
        return ab.morphism_eq(f.map, g.map)
    return f.map.mapping == g.map.mapping


def _pretorsion_witnesses(suite: ProbeSuite, mislabel=None):
    stats = {}
    witnesses = []
    for universe in (po.ABELIAN, po.FINITE):
        torsion_pool = []
        free_pool = []
        for probe in suite_probes(suite, universe):
            seq = po.canonical_sequence(probe.obj)
            _bump(stats, "sequences")
            if not po.classify_object(seq.torsion).torsion:
                witnesses.append(f"{probe.name}: radical part fails the torsion test")
            if not po.classify_object(seq.torsion_free).torsion_free:
                witnesses.append(f"{probe.name}: quotient part fails the torsion-free test")
            zk_obj, zk_mor = po.z_kernel(seq.eta)
            if not (_same_cone(zk_obj, seq.torsion) and _map_eq(zk_mor, seq.kappa)):
                witnesses.append(f"{probe.name}: left leg is not the relative kernel of the right leg")
            zc_obj, zc_mor = po.z_cokernel(seq.kappa)
            if not (
                zc_obj.group == seq.torsion_free.group
                and _same_cone(zc_obj, seq.torsion_free)
                and _map_eq(zc_mor, seq.eta)
            ):
                witnesses.append(f"{probe.name}: right leg is not the relative cokernel of the left leg")
            cls = po.classify_object(probe.obj)
            if cls.torsion:
                torsion_pool.append(probe)
            if cls.torsion_free:
                free_pool.append(probe)
        if mislabel is not None:
            bad_name, pool = mislabel
            for probe in suite_probes(suite, universe):
                if probe.name == bad_name and pool == "torsion":
                    torsion_pool.append(probe)
                if probe.name == bad_name and pool == "torsion-free":
                    free_pool.append(probe)
        for pa in torsion_pool:
            if not po.classify_object(pa.obj).torsion:
                witnesses.append(f"{pa.name}: listed as torsion but has an untouched generator")
        for pb in free_pool:
            if not po.classify_object(pb.obj).torsion_free:
                witnesses.append(f"{pb.name}: listed as torsion-free but has units")
        for pa in torsion_pool:
            for pb in free_pool:
                for j, t in enumerate(_suite_pair_samples(suite, pa.name, pb.name)):
                    _bump(stats, "pt1-morphisms")
                    if not po.is_z_trivial(t):
                        witnesses.append(
                            f"{pa.name}->{pb.name}#{j}: torsion to torsion-free morphism does not vanish"
                        )
    return witnesses, stats


def verify_pretorsion_axioms(suite: ProbeSuite, mislabel=None) -> Certificate:
    """Torsion/torsion-free split: classification, exactness, vanishing."""
    witnesses, stats = _pretorsion_witnesses(suite, mislabel)
    return _certificate("pretorsion", stats, witnesses)


# --- trivial-morphism characterization -------------------------------------


def _factors_through_discrete_image(m: po.PreOrdMor) -> bool:
    """Independent test: does m factor through its image with empty cone?"""
    if m.dom.universe == po.ABELIAN:
        rows = m.map.matrix.to_rows()
        image, incl = ab.subgroup_generated(m.cod.group, rows)
        mid = po.discrete_object(image)
        first = ab.factor_through_injection(m.map, incl)
        if first is None:
            return False
        try:
            leg = po.make_morphism(m.dom, mid, first)
        except ValidationError:
            return False
        rest = po.make_morphism(mid, m.cod, incl)
        return po.mor_eq(po.compose_preord(leg, rest), m)
    image = fg.image_set(m.map)
    sub, incl = fg.subgroup_from_set(m.cod.group, image)
    mid = po.discrete_object(sub)
    index = {a: i for i, a in enumerate(incl.mapping)}
    mapping = tuple(index[y] for y in m.map.mapping)
    try:
        leg = po.make_morphism(m.dom, mid, mapping)
    except ValidationError:
        return False
    rest = po.make_morphism(mid, m.cod, incl)
    return po.mor_eq(po.compose_preord(leg, rest), m)


# --- adjoint triple --------------------------------------------------------


def _adjunction_witnesses(suite: ProbeSuite, corrupt=None):
    stats = {}
    witnesses = []
    for universe in (po.ABELIAN, po.FINITE):
        probes = suite_probes(suite, universe)
        for probe in probes:
            X = probe.obj
            dx = po.functor_D(X)
            iota = po.counit_iota(X)
            _bump(stats, "probes")
            if po.functor_D(dx) != dx:
                witnesses.append(f"{probe.name}: discretization is not idempotent")
            if not po.mor_eq(po.functor_D_mor(iota), po.identity_preord(dx)):
                witnesses.append(f"{probe.name}: discretized counit is not the identity")
            if not po.classify_morphism(iota).mono:
                witnesses.append(f"{probe.name}: counit is not mono")
            if X.cone == dx.cone and not po.mor_eq(iota, po.identity_preord(X)):
                witnesses.append(f"{probe.name}: counit on a discrete object is not the identity")

            if corrupt is not None and probe.name == corrupt:
                cobj, pi = _corrupt_collapse(X)
            else:
                cobj, pi = po.functor_C(X)
            if not po.is_z_trivial(pi):
                witnesses.append(f"{probe.name}: unit does not collapse the cone")
            surjective = (
                ab.is_surjective(pi.map)
                if universe == po.ABELIAN
                else fg.fin_is_surjective(pi.map)
            )
            if not surjective:
                witnesses.append(f"{probe.name}: unit is not surjective")
            if universe == po.ABELIAN:
                if cobj.cone.rows != 0:
                    witnesses.append(f"{probe.name}: collapse target is not discrete")
                if X.cone.rows == 0:
                    again, _ = po.functor_C(cobj)
                    if again.group != cobj.group:
                        witnesses.append(f"{probe.name}: collapse is not idempotent")
            else:
                if cobj.cone != frozenset({0}):
                    witnesses.append(f"{probe.name}: collapse target is not discrete")
                if X.cone == frozenset({0}) and cobj.group != X.group:
                    witnesses.append(f"{probe.name}: collapse of a discrete object changed it")

            # counit factorizations: morphisms out of discrete objects lift
            root = DetRng.from_seed(suite.seed).child("adjunction").child(probe.name)
            for source in probes:
                ds = po.functor_D(source.obj)
                u = pr.random_morphism(root.child(f"in-{source.name}"), ds, X)
                _bump(stats, "counit-factorizations")
                lift = po.make_morphism(ds, dx, u.map)
                if not po.mor_eq(po.compose_preord(lift, iota), u):
                    witnesses.append(f"{probe.name}: counit lift of {source.name} does not compose back")
            # unit factorizations: morphisms into discrete objects descend
            for target in probes:
                dt = po.functor_D(target.obj)
                v = pr.random_morphism(root.child(f"out-{target.name}"), X, dt)
                _bump(stats, "unit-factorizations")
                psi = _factor_through_epi(v, cobj, pi)
                if psi is None:
                    witnesses.append(f"{probe.name}: unit factorization to {target.name} failed")
            # both transformations are natural in the probe
            for source in probes:
                for f in _suite_pair_samples(suite, source.name, probe.name)[:1]:
                    _bump(stats, "naturality")
                    if not po.mor_eq(
                        po.compose_preord(po.functor_D_mor(f), iota),
                        po.compose_preord(po.counit_iota(source.obj), f),
                    ):
                        witnesses.append(f"{source.name}->{probe.name}: counit is not natural")
                    _, pis = po.functor_C(source.obj)
                    if not po.mor_eq(
                        po.compose_preord(f, pi),
                        po.compose_preord(pis, po.functor_C_mor(f)),
                    ):
                        witnesses.append(f"{source.name}->{probe.name}: unit is not natural")
    return witnesses, stats


def _corrupt_collapse(X: po.PreOrdObj):
    """A collapse candidate built after forgetting one cone generator."""
    if X.universe == po.ABELIAN:
        if X.cone.rows == 0:
            return po.functor_C(X)
        kept = [X.cone.row(i) for i in range(X.cone.rows - 1)]
        _, incl = ab.subgroup_generated(X.group, kept)
        group, projm = ab.quotient_by_subgroup(X.group, incl)
        cobj = po.discrete_object(group)
        return cobj, po.PreOrdMor(X, cobj, projm)
    seeds = sorted(X.cone - {0})
    if not seeds:
        return po.functor_C(X)
    nset = fg.normal_closure(X.group, seeds[:-1])
    group, projm = fg.quotient_by_normal(X.group, nset)
    cobj = po.discrete_object(group)
    return cobj, po.PreOrdMor(X, cobj, projm)


def verify_adjunctions(suite: ProbeSuite, corrupt=None) -> Certificate:
    """Discrete inclusion has a right adjoint (D) and a left adjoint (C)."""
    witnesses, stats = _adjunction_witnesses(suite, corrupt)
    return _certificate("adjunction", stats, witnesses)


# --- pullback / pushout characterizations ----------------------------------


def _hcat(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    rows = [list(a.row(i)) + list(b.row(i)) for i in range(a.rows)]
    return IntMatrix.from_rows(rows, cols=a.cols + b.cols)


def _pullback_factor(square, a: po.PreOrdMor, b: po.PreOrdMor):
    """The mediating morphism into the square's corner, or None."""
    if a.dom.universe == po.ABELIAN:
        xg = square.to_dom.cod.group
        yg = square.to_discrete.cod.group
        ds = ab.direct_sum(xg, yg)
        joint = ab.AbMorphism(
            square.obj.group, ds.group, _hcat(square.to_dom.map.matrix, square.to_discrete.map.matrix)
        )
        pair = ab.AbMorphism(a.dom.group, ds.group, _hcat(a.map.matrix, b.map.matrix))
        w = ab.factor_through_injection(pair, joint)
        if w is None:
            return None
        mor = _budget_preord_morphism(a.dom, square.obj, w)
        if mor is None or mor is UNDECIDED:
            return mor
    else:
        mapping = a.map.mapping
        for x in range(a.dom.group.order):
            if square.to_discrete.map.mapping[mapping[x]] != b.map.mapping[x]:
                return None
        try:
            mor = po.make_morphism(a.dom, square.obj, mapping)
        except ValidationError:
            return None
    if not po.mor_eq(po.compose_preord(mor, square.to_dom), a):
        return None
    if not po.mor_eq(po.compose_preord(mor, square.to_discrete), b):
        return None
    return mor


def _pullback_witnesses(m: po.PreOrdMor, suite: ProbeSuite, square=None):
    stats = {}
    witnesses = []
    key = _mor_key(m)
    true_square = po.pullback_with_counit(m)
    if square is None:
        square = true_square
    iota = po.counit_iota(m.cod)
    left = po.compose_preord(square.to_dom, m)
    right = po.compose_preord(square.to_discrete, iota)
    if not po.mor_eq(left, right):
        witnesses.append(f"{key}: square does not commute")
    if m.dom.universe == po.ABELIAN:
        joint_injective = ab.is_injective(
            ab.AbMorphism(
                square.obj.group,
                ab.direct_sum(m.dom.group, m.cod.group).group,
                _hcat(square.to_dom.map.matrix, square.to_discrete.map.matrix),
            )
        )
    else:
        pairs = set(zip(square.to_dom.map.mapping, square.to_discrete.map.mapping))
        joint_injective = len(pairs) == square.obj.group.order
    if not joint_injective:
        witnesses.append(f"{key}: projections are not jointly injective, mediators not unique")
    if not po.is_isomorphism(square.comparison):
        witnesses.append(f"{key}: comparison with the relative kernel is not an isomorphism")
    zk_obj, zk_mor = po.z_kernel(m)
    if not po.mor_eq(po.compose_preord(square.comparison, square.to_dom), zk_mor):
        witnesses.append(f"{key}: comparison does not carry the kernel inclusion")

    if true_square.obj.universe == po.ABELIAN:
        corner_elements = [true_square.obj.cone.row(i) for i in range(true_square.obj.cone.rows)]
    else:
        corner_elements = [p for p in sorted(true_square.obj.cone) if p != 0]
    for element in corner_elements:
        t = _element_probe(true_square.obj, element)
        a = po.compose_preord(t, po.PreOrdMor(true_square.obj, m.dom, true_square.to_dom.map))
        b = po.compose_preord(t, po.PreOrdMor(true_square.obj, square.to_discrete.cod, true_square.to_discrete.map))
        _bump(stats, "targeted")
        w = _pullback_factor(square, a, b)
        if w is UNDECIDED:
            _bump(stats, "undecided")
        elif w is None:
            witnesses.append(f"{key}: corner element {element} does not mediate")

    root = DetRng.from_seed(suite.seed).child("pullback").child(key)
    for probe in suite_probes(suite, m.dom.universe):
        u = pr.random_morphism(root.child(probe.name), probe.obj, square.obj)
        a = po.compose_preord(u, square.to_dom)
        b = po.compose_preord(u, square.to_discrete)
        w = _pullback_factor(square, a, b)
        _bump(stats, "sampled")
        if w is UNDECIDED:
            _bump(stats, "undecided")
        elif w is None or not po.mor_eq(w, u):
            witnesses.append(f"{key}: probe {probe.name} does not mediate uniquely")
    return witnesses, stats


def pullback_mutant(m: po.PreOrdMor):
    """A pullback square with one corner cone generator removed."""
    square = po.pullback_with_counit(m)
    obj = square.obj
    if m.dom.universe == po.ABELIAN:
        for i in reversed(range(obj.cone.rows)):
            kept = [obj.cone.row(j) for j in range(obj.cone.rows) if j != i]
            smaller = po.PreOrdObj(obj.group, IntMatrix.from_rows(kept, cols=obj.cone.cols))
            if _budget_cone_contains(smaller, obj.cone.row(i)) is not False:
                continue
            return po.PullbackSquare(
                smaller,
                po.PreOrdMor(smaller, square.to_dom.cod, square.to_dom.map),
                po.PreOrdMor(smaller, square.to_discrete.cod, square.to_discrete.map),
                po.PreOrdMor(square.comparison.dom, smaller, square.comparison.map),
            )
        return None
    for p in sorted(obj.cone):
        if p == 0:
            continue
        smaller = po.PreOrdObj(obj.group, obj.cone - {p})
        return po.PullbackSquare(
            smaller,
            po.PreOrdMor(smaller, square.to_dom.cod, square.to_dom.map),
            po.PreOrdMor(smaller, square.to_discrete.cod, square.to_discrete.map),
            po.PreOrdMor(square.comparison.dom, smaller, square.comparison.map),
        )
    return None


def _pushout_factor(square, a: po.PreOrdMor, b: po.PreOrdMor):
    """The mediating morphism out of the square's corner, or None."""
    rows = list(a.map.matrix.to_rows()) + list(b.map.matrix.to_rows())
    try:
        wmap = ab.make_morphism(square.obj.group, a.cod.group, rows)
    except ValidationError:
        return None
    try:
        mor = po.make_morphism(square.obj, a.cod, wmap)
    except ValidationError:
        return None
    if not po.mor_eq(po.compose_preord(square.from_cod, mor), a):
        return None
    if not po.mor_eq(po.compose_preord(square.from_stable, mor), b):
        return None
    return mor


def _pushout_witnesses(m: po.PreOrdMor, suite: ProbeSuite, square=None):
    stats = {}
    witnesses = []
    key = _mor_key(m)
    if square is None:
        square = po.pushout_with_unit(m)
    cx, pi = po.functor_C(m.dom)
    left = po.compose_preord(m, square.from_cod)
    right = po.compose_preord(pi, square.from_stable)
    if not po.mor_eq(left, right):
        witnesses.append(f"{key}: square does not commute")
    try:
        po.make_morphism(square.from_cod.dom, square.obj, square.from_cod.map)
        po.make_morphism(square.from_stable.dom, square.obj, square.from_stable.map)
    except ValidationError:
        witnesses.append(f"{key}: an injection leg is not cone-preserving")
    if not po.is_isomorphism(square.comparison):
        witnesses.append(f"{key}: comparison with the relative cokernel is not an isomorphism")
    zc_obj, zc_mor = po.z_cokernel(m)
    if not po.mor_eq(po.compose_preord(zc_mor, square.comparison), square.from_cod):
        witnesses.append(f"{key}: comparison does not carry the quotient projection")

    _bump(stats, "targeted")
    ident = po.identity_preord(square.obj)
    a = po.compose_preord(square.from_cod, ident)
    b = po.compose_preord(square.from_stable, ident)
    w = _pushout_factor(square, a, b)
    if w is None or not po.mor_eq(w, ident):
        witnesses.append(f"{key}: identity does not mediate uniquely")

    root = DetRng.from_seed(suite.seed).child("pushout").child(key)
    for probe in suite_probes(suite, po.ABELIAN):
        u = pr.random_morphism(root.child(probe.name), square.obj, probe.obj)
        a = po.compose_preord(square.from_cod, u)
        b = po.compose_preord(square.from_stable, u)
        w = _pushout_factor(square, a, b)
        _bump(stats, "sampled")
        if w is None or not po.mor_eq(w, u):
            witnesses.append(f"{key}: probe {probe.name} does not mediate uniquely")
    return witnesses, stats


def pushout_mutant(m: po.PreOrdMor):
    """A pushout square with one corner cone generator removed."""
    square = po.pushout_with_unit(m)
    obj = square.obj
    for i in reversed(range(obj.cone.rows)):
        kept = [obj.cone.row(j) for j in range(obj.cone.rows) if j != i]
        smaller = po.PreOrdObj(obj.group, IntMatrix.from_rows(kept, cols=obj.cone.cols))
        if _budget_cone_contains(smaller, obj.cone.row(i)) is not False:
            continue
        return po.PushoutSquare(
            smaller,
            po.PreOrdMor(square.from_cod.dom, smaller, square.from_cod.map),
            po.PreOrdMor(square.from_stable.dom, smaller, square.from_stable.map),
            po.PreOrdMor(square.comparison.dom, smaller, square.comparison.map),
        )
    return None


def verify_gjm_characterizations(suite: ProbeSuite, extra_morphisms=()) -> Certificate:
    """Relative kernels are pullbacks, relative cokernels are pushouts."""
    stats = {}
    witnesses = []
    morphisms = list(extra_morphisms)
    for dom_name, cod_name, mors in suite.morphism_samples:
        cap = max(1, suite.samples_per_pair // 10)
        morphisms.extend(mors[:cap])
    for m in morphisms:
        w, s = _pullback_witnesses(m, suite)
        witnesses += w
        _bump(stats, "pullbacks")
        for label, count in s.items():
            _bump(stats, f"pullback-{label}", count)
        if m.dom.universe == po.ABELIAN:
            w, s = _pushout_witnesses(m, suite)
            witnesses += w
            _bump(stats, "pushouts")
            for label, count in s.items():
                _bump(stats, f"pushout-{label}", count)
    return _certificate("gjm", stats, witnesses)


# --- torsion theory in the stable category ---------------------------------


def _dedup_monoids(entries):
    seen = set()
    out = []
    for name, m in entries:
        key = _obj_key(mp.ambient_object(m))
        if key in seen:
            continue
        seen.add(key)
        out.append((name, m))
    return out


def _mon_torsion_witnesses(suite: ProbeSuite, corrupt=None):
    stats = {}
    witnesses = []
    for universe in (po.ABELIAN, po.FINITE):
        entries = _dedup_monoids(pr.monoid_probes(universe))
        group_pool = []
        reduced_pool = []
        root = DetRng.from_seed(suite.seed).child("mon-torsion").child(universe)
        for name, m in entries:
            ses = mp.torsion_ses(m)
            if corrupt is not None and name == corrupt:
                # corrupted construction: pretend every element is a unit
                ses = mp.MonSes(m, mp.mon_identity(m), m, ses.reduced, ses.eta)
            _bump(stats, "monoids")
            if not mp.is_group_monoid(ses.units):
                witnesses.append(f"{name}: unit part is not a group")
            if not mp.is_reduced(ses.reduced):
                witnesses.append(f"{name}: reduced part has units")
            if not mp.mon_is_zero(mp.mon_compose(ses.kappa, ses.eta)):
                witnesses.append(f"{name}: unit inclusion does not vanish in the quotient")
            if mp.is_group_monoid(m):
                group_pool.append((name, m))
            if mp.is_reduced(m):
                reduced_pool.append((name, m))
            for tname, t in entries:
                h = pr.random_mon_morphism(root.child(f"{tname}->{name}"), t, m)
                _bump(stats, "kernel-probes")
                vanishes = mp.mon_is_zero(mp.mon_compose(h, ses.eta))
                lift = mp.factor_through_units(h, ses.units)
                if lift is not None and not mp.mon_eq(mp.mon_compose(lift, ses.kappa), h):
                    witnesses.append(f"{name}: unit lift of {tname} does not compose back")
                    lift = None
                if vanishes and lift is None:
                    witnesses.append(f"{name}: {tname} vanishes in the quotient but does not lift")
                if not vanishes and lift is not None:
                    witnesses.append(f"{name}: {tname} lifts without vanishing in the quotient")
                k = pr.random_mon_morphism(root.child(f"{name}->{tname}"), m, t)
                _bump(stats, "cokernel-probes")
                vanishes = mp.mon_is_zero(mp.mon_compose(ses.kappa, k))
                desc = mp.factor_through_reduction(k, ses.eta)
                if desc is not None and not mp.mon_eq(mp.mon_compose(ses.eta, desc), k):
                    witnesses.append(f"{name}: reduction descent of {tname} does not compose back")
                    desc = None
                if vanishes and desc is None:
                    witnesses.append(f"{name}: {tname} kills units but does not descend")
                if not vanishes and desc is not None:
                    witnesses.append(f"{name}: {tname} descends without killing units")
        for gname, g in group_pool:
            for rname, r in reduced_pool:
                h = pr.random_mon_morphism(root.child(f"zero-{gname}->{rname}"), g, r)
                _bump(stats, "group-to-reduced")
                if not mp.mon_is_zero(h):
                    witnesses.append(f"{gname}->{rname}: group to reduced morphism is not zero")
    return witnesses, stats


def verify_mon_torsion_theory(suite: ProbeSuite, corrupt=None) -> Certificate:
    """Units/reduced split is a torsion theory in the stable category."""
    witnesses, stats = _mon_torsion_witnesses(suite, corrupt)
    return _certificate("mon-torsion", stats, witnesses)


# --- the cone functor is a torsion theory functor --------------------------


def _subgroup_candidates(obj: po.PreOrdObj):
    """Cone-containing subgroups paired with stable display names."""
    if obj.universe == po.ABELIAN:
        rank = obj.group.rank
        cone_rows = list(obj.cone.to_rows())
        full = [list(r) for r in IntMatrix.identity(rank).to_rows()]
        out = [("span", cone_rows), ("full", full)]
        if rank:
            first = [1 if j == 0 else 0 for j in range(rank)]
            out.append(("span-plus-axis", cone_rows + [first]))
        seen = set()
        unique = []
        for name, rows in out:
            key = hnf_reduced(
                IntMatrix.from_rows(rows, cols=rank).stack(obj.group.relations)
            )
            if key in seen:
                continue
            seen.add(key)
            unique.append((name, rows))
        return unique
    cone = fg.submonoid_closure(obj.group, obj.cone)
    options = [("span", cone), ("full", frozenset(range(obj.group.order)))]
    outside = sorted(set(range(obj.group.order)) - cone)
    if outside:
        options.append(("span-plus-element", fg.normal_closure(obj.group, cone | {outside[0]})))
    seen = set()
    unique = []
    for name, elems in options:
        closed = fg.submonoid_closure(obj.group, elems)
        if closed in seen:
            continue
        seen.add(closed)
        unique.append((name, closed))
    return unique


def _p_functor_witnesses(suite: ProbeSuite, corrupt=None):
    stats = {}
    witnesses = []
    for universe in (po.ABELIAN, po.FINITE):
        probes = suite_probes(suite, universe)
        root = DetRng.from_seed(suite.seed).child("p-functor").child(universe)
        for probe in probes:
            X = probe.obj
            m = mp.positive_cone(X)
            seq = po.canonical_sequence(X)
            ses = mp.torsion_ses(m)
            if corrupt == probe.name and universe == po.ABELIAN and ses.units.gens.rows:
                # corrupted construction: drop a generator of the unit monoid
                kept = [ses.units.gens.row(i) for i in range(ses.units.gens.rows - 1)]
                smaller = mp.ConeMonoid(
                    ses.units.ambient,
                    IntMatrix.from_rows(kept, cols=ses.units.gens.cols),
                )
                ses = mp.MonSes(smaller, ses.kappa, m, ses.reduced, ses.eta)
            _bump(stats, "probes")
            cls = po.classify_object(X)
            if cls.torsion != mp.is_group_monoid(m):
                witnesses.append(f"{probe.name}: torsion class and group-cone test disagree")
            if cls.torsion_free != mp.is_reduced(m):
                witnesses.append(f"{probe.name}: torsion-free class and reduced test disagree")
            if universe == po.ABELIAN:
                if ses.units.gens != seq.torsion.cone or ses.units.ambient != seq.torsion.group:
                    witnesses.append(f"{probe.name}: unit monoid differs from the radical cone")
                if (
                    ses.reduced.ambient != seq.torsion_free.group
                    or ses.reduced.gens != seq.torsion_free.cone
                ):
                    witnesses.append(f"{probe.name}: reduced monoid differs from the quotient cone")
                if not mp.mon_eq(mp.positive_cone_mor(seq.kappa), ses.kappa):
                    witnesses.append(f"{probe.name}: cone of the left leg differs from the unit inclusion")
                if not mp.mon_eq(mp.positive_cone_mor(seq.eta), ses.eta):
                    witnesses.append(f"{probe.name}: cone of the right leg differs from the reduction")
            else:
                if not mp.is_group_monoid(mp.positive_cone(seq.torsion)):
                    witnesses.append(f"{probe.name}: radical cone is not a group")
                if not mp.is_trivial_monoid(mp.positive_cone(seq.torsion_free)):
                    witnesses.append(f"{probe.name}: quotient cone is not trivial")
                if not mp.is_trivial_monoid(ses.reduced):
                    witnesses.append(f"{probe.name}: reduced part of a group cone is not trivial")
            # functoriality on sampled composable pairs
            for other in probes[:3]:
                f = pr.random_morphism(root.child(f"{probe.name}>{other.name}"), X, other.obj)
                g = pr.random_morphism(root.child(f"{probe.name}>>{other.name}"), other.obj, X)
                _bump(stats, "composites")
                lhs = mp.positive_cone_mor(po.compose_preord(f, g))
                rhs = mp.mon_compose(mp.positive_cone_mor(f), mp.positive_cone_mor(g))
                if not mp.mon_eq(lhs, rhs):
                    witnesses.append(f"{probe.name}->{other.name}: cone functor breaks composition")
            for hname, subgroup in _subgroup_candidates(X):
                ses2 = mp.special_ses(X, subgroup)
                _bump(stats, "subgroup-sequences")
                if not mp.mon_is_isomorphism(mp.positive_cone_mor(ses2.incl)):
                    witnesses.append(f"{probe.name}/{hname}: cone of the inclusion is not invertible")
                if not mp.mon_is_zero(mp.positive_cone_mor(ses2.proj)):
                    witnesses.append(f"{probe.name}/{hname}: cone of the projection is not zero")
                if not mp.is_trivial_monoid(mp.positive_cone(ses2.quot)):
                    witnesses.append(f"{probe.name}/{hname}: quotient cone is not trivial")
    return witnesses, stats


def verify_p_torsion_theory_functor(suite: ProbeSuite, corrupt=None) -> Certificate:
    """The cone functor respects the torsion split and special sequences."""
    witnesses, stats = _p_functor_witnesses(suite, corrupt)
    return _certificate("p-functor", stats, witnesses)


# --- completion comparison --------------------------------------------------


def _completion_witnesses(suite: ProbeSuite, corrupt=None):
    stats = {}
    witnesses = []
    for universe in (po.ABELIAN, po.FINITE):
        for name, m in _dedup_monoids(pr.monoid_probes(universe)):
            _bump(stats, "monoids")
            if mp.ore_condition_failure(m) is not None:
                witnesses.append(f"{name}: cone fails the common-multiple condition")
            cmpr = mp.comparison_morphism(m)
            if corrupt is not None and name == corrupt:
                # corrupted construction: embed through the zero morphism
                cmpr = po.zero_preord(cmpr.dom, cmpr.cod)
            if not po.classify_morphism(cmpr).mono:
                witnesses.append(f"{name}: comparison is not mono")
            qobj, q = po.cokernel(cmpr)
            if not po.is_z_trivial(q):
                witnesses.append(f"{name}: quotient does not kill the cone")
            if universe == po.ABELIAN:
                kg, kincl = ab.kernel(q.map)
                into_image = ab.factor_through_injection(kincl, cmpr.map)
                into_kernel = ab.factor_through_injection(cmpr.map, kincl)
                if into_image is None or into_kernel is None:
                    witnesses.append(f"{name}: sequence is not exact at the ambient group")
            else:
                if fg.kernel_set(q.map) != fg.image_set(cmpr.map):
                    witnesses.append(f"{name}: sequence is not exact at the ambient group")
            fhat = mp.fhat_consistency(m)
            if not mp.mon_is_isomorphism(fhat):
                witnesses.append(f"{name}: completed cone does not recover the monoid")
    return witnesses, stats


def verify_completion_theorem(suite: ProbeSuite, corrupt=None) -> Certificate:
    """Completion embeds, quotient is exact, and the cone round-trips."""
    witnesses, stats = _completion_witnesses(suite, corrupt)
    return _certificate("completion", stats, witnesses)


# --- integer-solver cross-checks -------------------------------------------


def _brute_minimal_zero_solutions(system: IntMatrix, bound: int = 6) -> frozenset:
    """Exhaustive minimal nonneg solutions of system . x = 0, coords <= bound."""
    n = system.cols
    sols = []
    counters = [0] * n
    while True:
        x = tuple(counters)
        if any(x) and all(
            vec_dot(system.row(i), x) == 0 for i in range(system.rows)
        ):
            sols.append(x)
        i = 0
        while i < n and counters[i] == bound:
            counters[i] = 0
            i += 1
        if i == n:
            break
        counters[i] += 1
    minimal = [
        x
        for x in sols
        if not any(y != x and all(a <= b for a, b in zip(y, x)) for y in sols)
    ]
    return frozenset(minimal)


def _brute_feasible(gens: IntMatrix, relations: IntMatrix, target, cap: int = 12) -> bool:
    """Exhaustive membership with coefficient sum <= cap."""
    reduced = hnf_reduced(relations)
    n = gens.rows

    def residue_ok(x):
        return vec_is_zero(x) or in_rowspan_reduced(reduced, x)

    def search(i, remaining, acc):
        if residue_ok(vec_sub(target, acc)):
            return True
        if i == n:
            return False
        current = acc
        for used in range(remaining + 1):
            if search(i + 1, remaining - used, current):
                return True
            current = tuple(a + b for a, b in zip(current, gens.row(i)))
        return False

    return search(0, cap, (0,) * gens.cols)


_INTSOLVE_CAP = 200_000


def _check_hilbert_instance(system, stats, witnesses, tag):
    _bump(stats, "hilbert-systems")
    try:
        basis = frozenset(hilbert_basis(system, state_cap=_INTSOLVE_CAP))
    except ResourceLimitError:
        _bump(stats, "capped")
        return
    brute = _brute_minimal_zero_solutions(system, bound=6)
    small = frozenset(x for x in basis if max(x) <= 6)
    if small != brute:
        witnesses.append(f"{tag}: solver {sorted(small)} vs brute {sorted(brute)}")
    if not all(
        vec_is_zero(
            tuple(vec_dot(system.row(i), x) for i in range(system.rows))
        )
        for x in basis
    ):
        witnesses.append(f"{tag}: solver returned a non-solution")


def _check_feasible_instance(gens, relations, target, stats, witnesses, tag):
    _bump(stats, "membership-queries")
    try:
        got = nonneg_feasible(gens, relations, target, state_cap=_INTSOLVE_CAP)
    except ResourceLimitError:
        _bump(stats, "capped")
        return
    brute = _brute_feasible(gens, relations, target, cap=12)
    if got is None:
        if brute:
            witnesses.append(f"{tag}: solver misses a certificate for {target}")
    else:
        cert, shift = got
        combo = row_times_matrix(cert, gens)
        if relations.rows:
            combo = tuple(
                c + s for c, s in zip(combo, row_times_matrix(shift, relations))
            )
        ok = all(c >= 0 for c in cert) and vec_is_zero(vec_sub(target, combo))
        if not ok:
            witnesses.append(f"{tag}: certificate {cert} does not reach {target}")


def verify_integer_solvers(seed: int = 0, samples: int = 120) -> Certificate:
    """Cross-check the minimal-solution and membership solvers by brute force.

    Covers an exhaustive grid of one-equation systems and one-dimensional
    membership queries, then seeded random instances within the same size
    bounds; every returned certificate is re-checked by substitution.
    """
    stats = {}
    witnesses = []
    empty1 = IntMatrix.zeros(0, 1)
    for a in range(-5, 6):
        _check_hilbert_instance(
            IntMatrix.from_rows([[a]], cols=1), stats, witnesses, f"grid[{a}]"
        )
    for a in range(-3, 4):
        for b in range(-3, 4):
            _check_hilbert_instance(
                IntMatrix.from_rows([[a, b]], cols=2), stats, witnesses, f"grid[{a},{b}]"
            )
    for g in range(-3, 4):
        gens = IntMatrix.from_rows([[g]], cols=1)
        for x in range(-4, 5):
            _check_feasible_instance(gens, empty1, (x,), stats, witnesses, f"grid[{g};{x}]")
    root = DetRng.from_seed(seed).child("intsolve")
    for i in range(samples):
        rng = root.child(f"hilbert{i}")
        nvars = rng.randint(1, 3)
        neqs = rng.randint(1, 2)
        system = IntMatrix.from_rows(
            [[rng.randint(-5, 5) for _ in range(nvars)] for _ in range(neqs)],
            cols=nvars,
        )
        _check_hilbert_instance(system, stats, witnesses, f"hilbert{i}")
    for i in range(samples):
        rng = root.child(f"feasible{i}")
        dim = rng.randint(1, 3)
        ngens = rng.randint(1, 4)
        gens = IntMatrix.from_rows(
            [[rng.randint(-4, 4) for _ in range(dim)] for _ in range(ngens)],
            cols=dim,
        )
        nrel = rng.randint(0, 1)
        relations = IntMatrix.from_rows(
            [[rng.randint(-4, 4) for _ in range(dim)] for _ in range(nrel)],
            cols=dim,
        )
        if rng.randint(0, 1):
            coeffs = tuple(rng.randint(0, 3) for _ in range(ngens))
            target = row_times_matrix(coeffs, gens)
        else:
            target = tuple(rng.randint(-6, 6) for _ in range(dim))
        _check_feasible_instance(gens, relations, target, stats, witnesses, f"feasible{i}")
    return _certificate("intsolve", stats, witnesses)


# --- claim registry ---------------------------------------------------------


def _sweep_morphisms(universe: str, seed: int, count: int, label: str):
    root = DetRng.from_seed(seed).child(label).child(universe)
    return [pr.random_morphism_sample(root.child(i), universe) for i in range(count)]


_MUTATION_BUDGET = 12


def _claim_relative(universe, seed, samples, kind):
    if kind == "zker":
        witnesses_of, mutants_of, label = _zker_witnesses, z_kernel_mutants, "zker-up"
    else:
        witnesses_of, mutants_of, label = _zcok_witnesses, z_cokernel_mutants, "zcok-up"
    suite = default_suite(seed)
    stats = {}
    witnesses = []
    mutation_runs = 0
    for m in _sweep_morphisms(universe, seed, samples, label):
        w, s = witnesses_of(m, suite)
        witnesses += w
        _bump(stats, "morphisms")
        for k, v in s.items():
            _bump(stats, k, v)
        if mutation_runs < _MUTATION_BUDGET:
            for mut_label, candidate in mutants_of(m):
                mw, _ = witnesses_of(m, suite, candidate)
                mutation_runs += 1
                _bump(stats, "mutations")
                if not mw:
                    witnesses.append(f"{_mor_key(m)}: mutation {mut_label} went undetected")
    if mutation_runs == 0:
        witnesses.append("no applicable mutations were generated")
    return _certificate(f"{label}-{universe}", stats, witnesses)


def _claim_ztrivial(universe, seed, samples):
    stats = {}
    witnesses = []
    for m in _sweep_morphisms(universe, seed, samples, "ztrivial"):
        _bump(stats, "morphisms")
        direct = po.is_z_trivial(m)
        factored = _factors_through_discrete_image(m)
        if direct:
            _bump(stats, "vanishing")
        if direct != factored:
            witnesses.append(
                f"{_mor_key(m)}: cone test says {direct}, factorization says {factored}"
            )
    return _certificate(f"ztrivial-{universe}", stats, witnesses)


def _claim_pretorsion(seed, samples):
    suite = default_suite(seed, samples)
    cert = verify_pretorsion_axioms(suite)
    stats = dict(cert.stats)
    witnesses = list(cert.witnesses)
    mutated = verify_pretorsion_axioms(suite, mislabel=("Z-even", "torsion"))
    _bump(stats, "mutations")
    if mutated.passed:
        witnesses.append("mislabelled torsion probe went undetected")
    return _certificate("pretorsion", stats, witnesses)


def _claim_adjunction(seed, samples):
    suite = default_suite(seed, samples)
    cert = verify_adjunctions(suite)
    stats = dict(cert.stats)
    witnesses = list(cert.witnesses)
    mutated = verify_adjunctions(suite, corrupt="Z-natural")
    _bump(stats, "mutations")
    if mutated.passed:
        witnesses.append("forgotten collapse generator went undetected")
    return _certificate("adjunction", stats, witnesses)


def _claim_with_corrupt(name, seed, samples, fn, corrupt, note):
    suite = default_suite(seed, samples)
    cert = fn(suite)
    stats = dict(cert.stats)
    witnesses = list(cert.witnesses)
    mutated = fn(suite, corrupt)
    _bump(stats, "mutations")
    if mutated.passed:
        witnesses.append(note)
    return _certificate(name, stats, witnesses)


def _claim_gjm(universe, seed, samples, kind):
    suite = default_suite(seed)
    stats = {}
    witnesses = []
    mutation_runs = 0
    label = f"gjm-{kind}"
    for m in _sweep_morphisms(universe, seed, samples, label):
        if kind == "pullback":
            w, s = _pullback_witnesses(m, suite)
        else:
            try:
                square = po.pushout_with_unit(m)
            except ValidationError:
                continue
            w, s = _pushout_witnesses(m, suite, square)
        witnesses += w
        _bump(stats, "morphisms")
        for k, v in s.items():
            _bump(stats, k, v)
        if mutation_runs < _MUTATION_BUDGET:
            mutant = pullback_mutant(m) if kind == "pullback" else pushout_mutant(m)
            if mutant is not None:
                if kind == "pullback":
                    mw, _ = _pullback_witnesses(m, suite, mutant)
                else:
                    mw, _ = _pushout_witnesses(m, suite, mutant)
                mutation_runs += 1
                _bump(stats, "mutations")
                if not mw:
                    witnesses.append(f"{_mor_key(m)}: cone-dropped mutation went undetected")
    if mutation_runs == 0:
        witnesses.append("no applicable mutations were generated")
    return _certificate(f"{label}-{universe}", stats, witnesses)


DEFAULT_SAMPLES = {
    "zker-up-abelian": 40,
    "zker-up-finite": 40,
    "zcok-up-abelian": 40,
    "zcok-up-finite": 40,
    "pretorsion": 50,
    "ztrivial-abelian": 120,
    "ztrivial-finite": 120,
    "adjunction": 50,
    "gjm-pullback-abelian": 30,
    "gjm-pullback-finite": 30,
    "gjm-pushout-abelian": 30,
    "mon-torsion": 50,
    "p-functor": 50,
    "completion": 50,
    "intsolve": 120,
}


def _run(name, seed, samples):
    if name.startswith("zker-up-") or name.startswith("zcok-up-"):
        kind = "zker" if name.startswith("zker") else "zcok"
        return _claim_relative(name.rsplit("-", 1)[1], seed, samples, kind)
    if name.startswith("ztrivial-"):
        return _claim_ztrivial(name.rsplit("-", 1)[1], seed, samples)
    if name == "pretorsion":
        return _claim_pretorsion(seed, samples)
    if name == "adjunction":
        return _claim_adjunction(seed, samples)
    if name.startswith("gjm-"):
        _, kind, universe = name.split("-")
        return _claim_gjm(universe, seed, samples, kind)
    if name == "mon-torsion":
        return _claim_with_corrupt(
            name, seed, samples, verify_mon_torsion_theory,
            "Z-natural", "inflated unit monoid went undetected",
        )
    if name == "p-functor":
        return _claim_with_corrupt(
            name, seed, samples, verify_p_torsion_theory_functor,
            "Z-group-cone", "punctured unit monoid went undetected",
        )
    if name == "completion":
        return _claim_with_corrupt(
            name, seed, samples, verify_completion_theorem,
            "Z-natural", "collapsed comparison went undetected",
        )
    if name == "intsolve":
        return verify_integer_solvers(seed, samples)
    raise ValidationError(f"unknown claim {name!r}")


def claim_names() -> tuple:
    return tuple(DEFAULT_SAMPLES)


def run_claim(name: str, seed: int = 0, samples: int | None = None) -> Certificate:
    if name not in DEFAULT_SAMPLES:
        raise ValidationError(f"unknown claim {name!r}")
    if samples is None:
        samples = DEFAULT_SAMPLES[name]
    return _run(name, seed, samples)


def run_all(seed: int = 0, samples: int | None = None) -> tuple:
    return tuple(run_claim(name, seed, samples) for name in claim_names())
