"""Desk-scale instance catalog used by the acceptance battery and tests."""

from __future__ import annotations

import itertools

from .errors import HypermatError
from .hmatroid import HMatroid, HVector, hmatroid_from_circuits, hvector
from .hyperfields import HElement, Hyperfield
from .matroids import ClassicalMatroid, from_circuits, uniform_matroid

GROUND3 = ("1", "2", "3")
GROUND4 = ("1", "2", "3", "4")


def u23() -> ClassicalMatroid:
    return uniform_matroid(2, GROUND3)


def u13() -> ClassicalMatroid:
    return uniform_matroid(1, GROUND3)


def u24() -> ClassicalMatroid:
    return uniform_matroid(2, GROUND4)


def three_circuit_rank2() -> ClassicalMatroid:
    """Rank-2 matroid on four elements with exactly three circuits: 3,4 parallel."""
    return from_circuits(GROUND4, [{"1", "2", "3"}, {"1", "2", "4"}, {"3", "4"}])


def three_circuit_rank2_dual() -> ClassicalMatroid:
    return three_circuit_rank2().dual()


def perfection_family_matroids() -> list[tuple[str, ClassicalMatroid]]:
    """The |E| <= 4 family (duals included; U_{1,3} is the dual of U_{2,3})."""
    return [
        ("U23", u23()),
        ("U13", u13()),
        ("U24", u24()),
        ("P", three_circuit_rank2()),
        ("P*", three_circuit_rank2_dual()),
    ]


def all_signatures(field: Hyperfield, matroid: ClassicalMatroid) -> list[HMatroid]:
    """Every circuit signature of the matroid over the field that is a matroid.

    Normalized representatives fix the first support entry to 1, so each
    class contributes |units|^(|support|-1) candidate assignments; the ones
    failing cocircuit synthesis are dropped.
    """
    ground = matroid.ground
    one = field.one()
    supports = sorted(matroid.circuits, key=sorted)
    slots = []
    for sup in supports:
        elems = sorted(sup, key=ground.index)
        slots.append((elems, len(elems) - 1))
    out = []
    unit_elems = [HElement(r, (0,) * field.rank) for r in field.residue_units()]
    pools = [itertools.product(unit_elems, repeat=n) for _, n in slots]
    for assignment in itertools.product(*pools):
        vecs = []
        for (elems, _), coeffs in zip(slots, assignment):
            mapping = {elems[0]: one}
            mapping.update(dict(zip(elems[1:], coeffs)))
            vecs.append(hvector(field, ground, mapping))
        try:
            out.append(hmatroid_from_circuits(field, ground, vecs))
        except HypermatError:
            continue
    return out


def graded_rescaled(field: Hyperfield, matroid: ClassicalMatroid, weights: dict[str, int],
                    signs: dict[frozenset, dict[str, int]] | None = None) -> HMatroid:
    """Signature whose circuit entries carry the per-element grade weights.

    This is the rescaling of the flat (all grade 0) signature by the weight
    vector; ``signs`` optionally orients each circuit first.
    """
    vecs = []
    for sup in sorted(matroid.circuits, key=sorted):
        mapping = {}
        for e in sorted(sup):
            r = 1
            if signs is not None:
                r = signs[frozenset(sup)][e]
            mapping[e] = HElement(r, (weights[e],) * field.rank if field.rank else ())
        vecs.append(hvector(field, matroid.ground, mapping))
    return hmatroid_from_circuits(field, matroid.ground, vecs)


def u24_orientation_signs() -> dict[frozenset, dict[str, int]]:
    """Circuit signs of U_{2,4} realized by the columns (1,0),(0,1),(1,1),(1,2)."""
    return {
        frozenset({"1", "2", "3"}): {"1": 1, "2": 1, "3": -1},
        frozenset({"1", "2", "4"}): {"1": -1, "2": -1, "4": 1},
        frozenset({"1", "3", "4"}): {"1": 1, "3": -1, "4": 1},
        frozenset({"2", "3", "4"}): {"2": -1, "3": -1, "4": 1},
    }


def windowed_instances() -> list[tuple[str, HMatroid]]:
    """Named graded instances for the windowed acceptance criteria."""
    T = Hyperfield.tropical(1)
    SS = Hyperfield.stringent("sign", 1)
    w223 = {"1": 2, "2": 2, "3": 1}
    flat4 = {e: 0 for e in GROUND4}
    w1001 = {"1": 1, "2": 0, "3": 0, "4": 1}
    all_plus3 = {frozenset({"1", "2", "3"}): {"1": 1, "2": 1, "3": 1}}
    inst = [
        ("T-U23(2,2,1)", graded_rescaled(T, u23(), w223)),
        ("T-U24(0,0,0,0)", graded_rescaled(T, u24(), flat4)),
        ("T-U24(1,0,0,1)", graded_rescaled(T, u24(), w1001)),
        ("S-U23(2,2,1)", graded_rescaled(SS, u23(), w223, all_plus3)),
        ("S-U24(1,0,0,1)", graded_rescaled(SS, u24(), w1001, u24_orientation_signs())),
    ]
    inst += [(name + "*", M.dual()) for name, M in list(inst)]
    return inst


def tropical_generation_instances() -> list[tuple[str, HMatroid]]:
    T = Hyperfield.tropical(1)
    return [
        ("T-U23(2,2,1)", graded_rescaled(T, u23(), {"1": 2, "2": 2, "3": 1})),
        ("T-U24(0,0,0,0)", graded_rescaled(T, u24(), {e: 0 for e in GROUND4})),
        ("T-U24(1,0,0,1)", graded_rescaled(T, u24(), {"1": 1, "2": 0, "3": 0, "4": 1})),
    ]


def corrupted_signatures(count: int = 20):
    """Deterministically corrupted graded signatures for the (C3)' agreement check.

    Corruptions bump a grade or flip a sign at a non-leading support entry,
    which preserves (C0)-(C2) structurally; some corruptions are harmless
    rescalings and both checkers must still agree on those.
    """
    bases = [M for _, M in windowed_instances()]
    out = []
    i = 0
    while len(out) < count:
        M = bases[i % len(bases)]
        H = M.field
        reps = list(M.circuits.reps)
        rep_idx = (i // len(bases)) % len(reps)
        vecs = []
        for j, rep in enumerate(reps):
            if j != rep_idx:
                vecs.append(rep)
                continue
            sup = sorted(rep.support, key=M.ground.index)
            pos = 1 + i % (len(sup) - 1)
            e = sup[pos]
            x = rep[e]
            if i % 2 == 0:
                new = HElement(x.residue, tuple(c + 1 + (i % 3) for c in x.grade))
            else:
                flipped = H.residue_neg(x.residue) if H.residue_kind == "sign" else x.residue
                new = HElement(flipped, tuple(c + (i % 3) for c in x.grade))
            entries = list(rep.entries)
            entries[M.ground.index(e)] = new
            vecs.append(HVector(H, M.ground, tuple(entries)))
        out.append((f"corrupt-{i}", H, M.ground, tuple(vecs)))
        i += 1
    return out
