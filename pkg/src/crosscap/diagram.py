"""Cut-surface diagrams of generic curve families on a non-orientable surface.

A family ``A = (a_1, ..., a_r)`` of disjoint curves on ``F`` is recorded by the
surface ``F_A`` obtained by cutting along it: a list of components, each with
its topological type and boundary slots, plus the gluing data that rebuilds
``F``.  A two-sided curve glues two slots; a one-sided curve identifies the
points of a single slot antipodally (the slot is the double ``a_i^2``).

Slot orientation signs live only on orientable components.  Gluing a
two-sided curve is orientation-compatible iff its two endpoint signs differ.
"""

from __future__ import annotations

import itertools
import json
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .surface import Surface, SurfaceError, classify_from_chi, euler

TWO_SIDED = "two_sided"
ONE_SIDED = "one_sided"

# limit-curve kinds on a component
SEPARATING = "sep"
NONSEPARATING = "nonsep"
ONE_SIDED_LIMIT = "one"


class MalformedDiagram(ValueError):
    pass


class MismatchedTarget(ValueError):
    pass


@dataclass(frozen=True)
class ComponentSpec:
    id: int
    orientable: bool
    genus: int
    slots: tuple[int, ...]
    # aligned with ``slots``; None on non-orientable components
    signs: Optional[tuple[int, ...]] = None

    @property
    def surface(self) -> Surface:
        return Surface(self.orientable, self.genus, len(self.slots))

    @property
    def euler(self) -> int:
        return euler(self.surface)

    @property
    def orientation_class(self) -> Optional[dict[int, int]]:
        if self.signs is None:
            return None
        return dict(zip(self.slots, self.signs))


@dataclass(frozen=True)
class CurveGluing:
    index: int
    kind: str
    slots: tuple[int, ...]

    @property
    def two_sided(self) -> bool:
        return self.kind == TWO_SIDED


@dataclass(frozen=True)
class SurfaceInvariants:
    connected: bool
    orientable: bool
    genus: Optional[int]
    boundary_labels: frozenset[int]


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str


@dataclass(frozen=True)
class CutDiagram:
    target: Surface
    components: tuple[ComponentSpec, ...]
    # (label k, slot) for boundary curve c_k
    exterior: tuple[tuple[int, int], ...]
    curves: tuple[CurveGluing, ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "exterior", tuple(sorted(self.exterior)))
        object.__setattr__(self, "curves", tuple(sorted(self.curves, key=lambda c: c.index)))
        object.__setattr__(self, "_index", _build_index(self))

    @property
    def r(self) -> int:
        return len(self.curves)

    def curve(self, index: int) -> CurveGluing:
        return self._index["curve"][index]

    def owner(self, slot: int) -> int:
        """Position (in ``components``) of the component carrying ``slot``."""
        return self._index["owner"][slot]

    def sign(self, slot: int) -> Optional[int]:
        return self._index["sign"][slot]

    def role(self, slot: int) -> tuple[str, int]:
        return self._index["role"][slot]

    def exterior_slot(self, label: int) -> int:
        return dict(self.exterior)[label]


def _build_index(d: CutDiagram) -> dict:
    owner: dict[int, int] = {}
    sign: dict[int, Optional[int]] = {}
    for pos, comp in enumerate(d.components):
        if comp.signs is not None:
            if not comp.orientable or len(comp.signs) != len(comp.slots):
                raise MalformedDiagram(f"component {comp.id}: signs must cover exactly its slots")
            if any(s not in (1, -1) for s in comp.signs):
                raise MalformedDiagram(f"component {comp.id}: signs must be +1/-1")
        elif comp.orientable:
            raise MalformedDiagram(f"orientable component {comp.id} lacks orientation_class")
        try:
            comp.surface
        except SurfaceError as exc:
            raise MalformedDiagram(f"component {comp.id}: {exc}") from None
        for k, s in enumerate(comp.slots):
            if s in owner:
                raise MalformedDiagram(f"slot {s} appears on two components")
            owner[s] = pos
            sign[s] = None if comp.signs is None else comp.signs[k]
    role: dict[int, tuple[str, int]] = {}

    def claim(s, r):
        if s not in owner:
            raise MalformedDiagram(f"slot {s} used by {r} is not on any component")
        if s in role:
            raise MalformedDiagram(f"slot {s} used twice")
        role[s] = r

    labels = [k for k, _ in d.exterior]
    if len(set(labels)) != len(labels):
        raise MalformedDiagram("duplicate exterior label")
    for k, s in d.exterior:
        claim(s, ("c", k))
    curves = {}
    for c in d.curves:
        if c.index in curves:
            raise MalformedDiagram(f"duplicate curve index {c.index}")
        curves[c.index] = c
        if c.kind == TWO_SIDED:
            if len(c.slots) != 2 or c.slots[0] == c.slots[1]:
                raise MalformedDiagram(f"two-sided curve {c.index} needs two distinct slots")
            for s in c.slots:
                claim(s, ("t", c.index))
        elif c.kind == ONE_SIDED:
            if len(c.slots) != 1:
                raise MalformedDiagram(f"one-sided curve {c.index} needs one slot")
            claim(c.slots[0], ("o", c.index))
        else:
            raise MalformedDiagram(f"unknown curve kind {c.kind!r}")
    if sorted(curves) != list(range(1, len(curves) + 1)):
        raise MalformedDiagram("curve indices must be 1..r")
    unused = set(owner) - set(role)
    if unused:
        raise MalformedDiagram(f"slots {sorted(unused)} are not used")
    return {"owner": owner, "sign": sign, "role": role, "curve": curves}


# ----------------------------------------------------------------------------
# gluing
# ----------------------------------------------------------------------------


@dataclass
class _Cluster:
    members: list[int]
    flips: dict[int, int]
    orientable: bool
    chi: int


def _clusters(d: CutDiagram, discard: set[int]) -> tuple[list[_Cluster], dict[int, int]]:
    """Merge components along the discarded curves.

    Returns the clusters and a map component position -> cluster position.
    """
    adj: dict[int, list[tuple[int, int, int]]] = defaultdict(list)
    one_sided_in: set[int] = set()
    for c in d.curves:
        if c.index not in discard:
            continue
        if c.two_sided:
            s, t = c.slots
            p, q = d.owner(s), d.owner(t)
            adj[p].append((q, s, t))
            adj[q].append((p, t, s))
        else:
            one_sided_in.add(d.owner(c.slots[0]))

    comp_map: dict[int, int] = {}
    clusters: list[_Cluster] = []
    for start in range(len(d.components)):
        if start in comp_map:
            continue
        pos = len(clusters)
        flips = {start: 1}
        orientable = True
        stack = [start]
        comp_map[start] = pos
        members = [start]
        while stack:
            p = stack.pop()
            if not d.components[p].orientable or p in one_sided_in:
                orientable = False
            for q, s, t in adj[p]:
                if q not in comp_map:
                    comp_map[q] = pos
                    members.append(q)
                    stack.append(q)
                if d.components[p].orientable and d.components[q].orientable:
                    # compatible iff flip_p*sign(s) == -flip_q*sign(t)
                    want = -flips[p] * d.sign(s) * d.sign(t)
                    if q in flips:
                        if flips[q] != want:
                            orientable = False
                    else:
                        flips[q] = want
                else:
                    flips.setdefault(q, 1)
        chi = sum(d.components[m].euler for m in members)
        clusters.append(_Cluster(sorted(members), flips, orientable, chi))
    return clusters, comp_map


def _kept_slots(d: CutDiagram, members: Iterable[int], discard: set[int]) -> list[int]:
    out = []
    for m in members:
        for s in d.components[m].slots:
            kind, idx = d.role(s)
            if kind == "c" or idx not in discard:
                out.append(s)
    return sorted(out)


def glue_invariants(d: CutDiagram) -> SurfaceInvariants:
    discard = {c.index for c in d.curves}
    clusters, _ = _clusters(d, discard)
    labels = frozenset(k for k, _ in d.exterior)
    if len(clusters) != 1:
        return SurfaceInvariants(False, all(c.orientable for c in clusters), None, labels)
    cl = clusters[0]
    surf = classify_from_chi(cl.orientable, cl.chi, len(d.exterior))
    return SurfaceInvariants(True, cl.orientable, surf.genus, labels)


def cut_subfamily_with_map(
    d: CutDiagram, keep: Iterable[int], renumber: bool = False
) -> tuple[CutDiagram, dict[int, int]]:
    """Diagram of ``F_{A'}`` for the kept curves, plus the component map.

    The map sends each component position of ``d`` to the position of the
    merged component containing it.  With ``renumber`` the kept curves are
    re-indexed 1..k preserving their relative order.
    """
    keep = set(keep)
    all_idx = {c.index for c in d.curves}
    if not keep <= all_idx:
        raise MalformedDiagram(f"unknown curve indices {sorted(keep - all_idx)}")
    if not renumber and sorted(keep) != list(range(1, len(keep) + 1)):
        raise MalformedDiagram("cut_subfamily without renumber needs keep = {1..k}")
    discard = all_idx - keep
    clusters, comp_map = _clusters(d, discard)
    comps = []
    for pos, cl in enumerate(clusters):
        slots = _kept_slots(d, cl.members, discard)
        surf = classify_from_chi(cl.orientable, cl.chi, len(slots))
        signs = None
        if cl.orientable:
            signs = tuple(d.sign(s) * cl.flips[d.owner(s)] for s in slots)
        comps.append(ComponentSpec(pos, cl.orientable, surf.genus, tuple(slots), signs))
    order = sorted(keep)
    new_index = {i: (order.index(i) + 1 if renumber else i) for i in order}
    curves = tuple(
        CurveGluing(new_index[c.index], c.kind, c.slots) for c in d.curves if c.index in keep
    )
    return CutDiagram(d.target, tuple(comps), d.exterior, curves), comp_map


def cut_subfamily(d: CutDiagram, keep: Iterable[int], renumber: bool = True) -> CutDiagram:
    return cut_subfamily_with_map(d, keep, renumber)[0]


def relabel(d: CutDiagram, perm: Mapping[int, int]) -> CutDiagram:
    """Rename curve ``i`` to ``perm[i]``."""
    curves = tuple(CurveGluing(perm[c.index], c.kind, c.slots) for c in d.curves)
    return CutDiagram(d.target, d.components, d.exterior, curves)


# ----------------------------------------------------------------------------
# genericity
# ----------------------------------------------------------------------------


def validate_generic(d: CutDiagram) -> list[Violation]:
    """Local genericity rules; an empty list means the family is generic."""
    out: list[Violation] = []
    multi = len(d.components) > 1
    for comp in d.components:
        roles = [d.role(s) for s in comp.slots]
        kinds = [r[0] for r in roles]
        if comp.orientable and comp.genus == 0 and len(comp.slots) == 1:
            out.append(Violation("R1", f"component {comp.id} is a disk"))
        if not comp.orientable and comp.genus == 1 and len(comp.slots) == 1:
            if kinds[0] == "t":
                out.append(Violation("R2", f"curve a{roles[0][1]} bounds a Moebius strip"))
            elif kinds[0] == "c" and multi:
                out.append(Violation("R2", f"component {comp.id} is a Moebius strip cut off from the rest"))
            elif kinds[0] == "o":
                warnings.warn(
                    f"Moebius component {comp.id} attached along one-sided curve a{roles[0][1]}",
                    stacklevel=2,
                )
        if comp.orientable and comp.genus == 0 and len(comp.slots) == 2:
            (k1, i1), (k2, i2) = roles
            pair = sorted([k1, k2])
            if pair == ["t", "t"] and i1 != i2:
                out.append(Violation("R3", f"curves a{i1} and a{i2} are isotopic"))
            elif pair == ["c", "t"]:
                idx = i1 if k1 == "t" else i2
                out.append(Violation("R3", f"curve a{idx} is boundary parallel"))
            elif pair == ["o", "t"]:
                idx = i1 if k1 == "t" else i2
                out.append(Violation("R2", f"curve a{idx} bounds a Moebius strip around a one-sided curve"))
    inv = glue_invariants(d)
    if not inv.connected:
        out.append(Violation("R4", "glued surface is disconnected"))
    t = d.target
    if t.orientable:
        out.append(Violation("R5", "target must be non-orientable"))
    elif t.euler >= 0:
        out.append(Violation("R5", "target must have negative Euler characteristic"))
    if inv.connected:
        if inv.orientable != t.orientable or inv.genus != t.genus:
            out.append(Violation("R5", f"glued surface differs from target {t}"))
    if inv.boundary_labels != frozenset(range(1, t.boundary + 1)):
        out.append(Violation("R5", "exterior labels must be c1..cn of the target"))
    return out


def is_valid(d: CutDiagram) -> bool:
    return not validate_generic(d)


# ----------------------------------------------------------------------------
# canonical forms and orbit comparison
# ----------------------------------------------------------------------------


def _role_key(role: tuple[str, int]) -> tuple[int, int]:
    return ({"c": 0, "t": 1, "o": 2}[role[0]], role[1])


def canonical_form(d: CutDiagram) -> bytes:
    """Encoding invariant under component order, slot names and per-component flips."""
    comps = []
    for comp in d.components:
        roles = [_role_key(d.role(s)) for s in comp.slots]
        if comp.orientable:
            a = sorted((r, sg) for r, sg in zip(roles, comp.signs))
            b = sorted((r, -sg) for r, sg in zip(roles, comp.signs))
            body = [[list(r), sg] for r, sg in min(a, b)]
        else:
            body = [list(r) for r in sorted(roles)]
        comps.append([int(comp.orientable), comp.genus, body])
    comps.sort(key=lambda c: json.dumps(c))
    t = d.target
    return json.dumps([[t.orientable, t.genus, t.boundary], comps], separators=(",", ":")).encode()


def _component_attrs(d: CutDiagram) -> list[tuple]:
    out = []
    for comp in d.components:
        ext = []
        limits = []
        for s in comp.slots:
            kind, idx = d.role(s)
            if kind == "c":
                ext.append((idx, d.sign(s)))
            elif kind == "o":
                limits.append((idx, ONE_SIDED_LIMIT))
            else:
                other = [x for x in d.curve(idx).slots if x != s][0]
                limits.append((idx, NONSEPARATING if d.owner(other) == d.owner(s) else SEPARATING))
        ext.sort()
        labels = tuple(k for k, _ in ext)
        partition = None
        if comp.orientable and ext:
            ref = ext[0][1]
            partition = tuple(k for k, sg in ext if sg == ref)
        out.append((comp.orientable, comp.genus, labels, partition, tuple(sorted(set(limits)))))
    return sorted(out)


def orbit_signature(d: CutDiagram) -> tuple:
    """Complete invariant of the ordered simplex <a_1, ..., a_r> under M(F).

    For every subfamily, the multiset of component descriptors of the cut
    surface: type, exterior labels, exterior orientation partition and the
    kind of each limit curve.  Two ordered families are equivalent exactly
    when these agree subfamily by subfamily.
    """
    idx = [c.index for c in d.curves]
    sig = []
    for k in range(len(idx) + 1):
        for keep in itertools.combinations(idx, k):
            sig.append((keep, tuple(_component_attrs(_LabelledCut(d, set(keep))))))
    t = d.target
    return ((t.orientable, t.genus, t.boundary), tuple(sig))


class _LabelledCut:
    """Cut along a subfamily keeping the original curve indices.

    A lightweight stand-in for :class:`CutDiagram` exposing just what
    :func:`_component_attrs` needs, so indices need not be contiguous.
    """

    def __init__(self, d: CutDiagram, keep: set[int]):
        discard = {c.index for c in d.curves} - keep
        clusters, _ = _clusters(d, discard)
        self._d = d
        self.components = []
        self._owner: dict[int, int] = {}
        self._sign: dict[int, Optional[int]] = {}
        for pos, cl in enumerate(clusters):
            slots = _kept_slots(d, cl.members, discard)
            surf = classify_from_chi(cl.orientable, cl.chi, len(slots))
            signs = None
            if cl.orientable:
                signs = tuple(d.sign(s) * cl.flips[d.owner(s)] for s in slots)
            self.components.append(ComponentSpec(pos, cl.orientable, surf.genus, tuple(slots), signs))
            for k, s in enumerate(slots):
                self._owner[s] = pos
                self._sign[s] = None if signs is None else signs[k]

    def role(self, slot):
        return self._d.role(slot)

    def curve(self, index):
        return self._d.curve(index)

    def owner(self, slot):
        return self._owner[slot]

    def sign(self, slot):
        return self._sign[slot]


@dataclass(frozen=True)
class OrbitMatch:
    equivalent: bool
    witness: Optional[tuple[int, ...]] = None

    def __bool__(self):
        return self.equivalent


def orbit_equal(d1: CutDiagram, d2: CutDiagram, ordered: bool = False) -> OrbitMatch:
    """Decide whether two curve families lie in one M(F)-orbit.

    The witness ``w`` lists ``sigma(1), ..., sigma(r)``: curve ``a_i`` of
    ``d1`` corresponds to curve ``b_{sigma(i)}`` of ``d2``.
    """
    if d1.target != d2.target or d1.r != d2.r:
        raise MismatchedTarget("diagrams have different targets or curve counts")
    r = d1.r
    sig1 = orbit_signature(d1)
    if ordered:
        perms = [tuple(range(1, r + 1))]
    else:
        perms = list(itertools.permutations(range(1, r + 1)))
    kinds1 = [d1.curve(i).kind for i in range(1, r + 1)]
    for sigma in perms:
        if any(d2.curve(sigma[i - 1]).kind != kinds1[i - 1] for i in range(1, r + 1)):
            continue
        # rename b_{sigma(i)} -> i
        back = {sigma[i - 1]: i for i in range(1, r + 1)}
        if orbit_signature(relabel(d2, back)) == sig1:
            return OrbitMatch(True, sigma)
    return OrbitMatch(False, None)


# ----------------------------------------------------------------------------
# JSON
# ----------------------------------------------------------------------------


def to_json(d: CutDiagram) -> dict:
    comps = []
    for c in d.components:
        entry = {"id": c.id, "orientable": c.orientable, "genus": c.genus, "slots": list(c.slots)}
        if c.signs is not None:
            entry["orientation_class"] = {str(s): sg for s, sg in zip(c.slots, c.signs)}
        comps.append(entry)
    curves = []
    for c in d.curves:
        if c.two_sided:
            curves.append({"index": c.index, "kind": TWO_SIDED, "slots": list(c.slots)})
        else:
            curves.append({"index": c.index, "kind": ONE_SIDED, "slot": c.slots[0]})
    t = d.target
    return {
        "target": {"orientable": t.orientable, "genus": t.genus, "boundary": t.boundary},
        "components": comps,
        "exterior": {f"c{k}": s for k, s in d.exterior},
        "curves": curves,
    }


def from_json(data: Mapping) -> CutDiagram:
    try:
        t = data["target"]
        target = Surface(bool(t["orientable"]), int(t["genus"]), int(t["boundary"]))
        comps = []
        for c in data["components"]:
            slots = tuple(int(s) for s in c["slots"])
            oc = c.get("orientation_class")
            signs = None
            if oc is not None:
                oc = {int(k): int(v) for k, v in oc.items()}
                if set(oc) != set(slots):
                    raise MalformedDiagram(f"component {c['id']}: orientation_class must cover its slots")
                signs = tuple(oc[s] for s in slots)
            comps.append(ComponentSpec(int(c["id"]), bool(c["orientable"]), int(c["genus"]), slots, signs))
        exterior = []
        for label, slot in data.get("exterior", {}).items():
            if not label.startswith("c") or not label[1:].isdigit():
                raise MalformedDiagram(f"bad exterior label {label!r}")
            exterior.append((int(label[1:]), int(slot)))
        curves = []
        for c in data.get("curves", []):
            if c["kind"] == TWO_SIDED:
                curves.append(CurveGluing(int(c["index"]), TWO_SIDED, tuple(int(s) for s in c["slots"])))
            elif c["kind"] == ONE_SIDED:
                curves.append(CurveGluing(int(c["index"]), ONE_SIDED, (int(c["slot"]),)))
            else:
                raise MalformedDiagram(f"unknown curve kind {c['kind']!r}")
    except (KeyError, TypeError, AttributeError) as exc:
        raise MalformedDiagram(f"bad diagram JSON: {exc!r}") from None
    except SurfaceError as exc:
        raise MalformedDiagram(str(exc)) from None
    return CutDiagram(target, tuple(comps), tuple(exterior), tuple(curves))


def trivial_diagram(target: Surface) -> CutDiagram:
    """The empty family: one component equal to the target."""
    n = target.boundary
    slots = tuple(range(n))
    signs = tuple([1] * n) if target.orientable else None
    comp = ComponentSpec(0, target.orientable, target.genus, slots, signs)
    return CutDiagram(target, (comp,), tuple((k + 1, k) for k in range(n)), ())
