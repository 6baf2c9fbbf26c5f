"""Vectors and covectors of matroids over hyperfields.

Enumeration is windowed and budget-checked; generation follows the stringent
fast paths (composition closure and singleton hypersums of scaled circuits,
capped at corank many factors) and must agree with enumeration on the same
window.  Also: perfection, the vector axioms with reconstruction, the
partition dichotomy, vector elimination, and circuit decompositions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    InvalidInputError,
    InvalidSignatureError,
    ResourceLimitError,
    TheoremViolationError,
)
from .hmatroid import (
    HMatroid,
    HVector,
    hmatroid_from_circuits,
    hvector,
    normalize_vector,
    zero_vector,
)
from .hyperfields import HElement, Hyperfield

CANDIDATE_BUDGET = 10**8


def entry_candidates(field: Hyperfield, window: int) -> list[HElement]:
    return field.elements_box(window)


def check_budget(field: Hyperfield, ground, window: int, budget: int = CANDIDATE_BUDGET):
    n = len(entry_candidates(field, window))
    total = n ** len(tuple(ground))
    if total > budget:
        raise ResourceLimitError(
            f"enumeration of {total} candidates exceeds the budget of {budget}"
        )
    return total


def vectors_enumerate(M: HMatroid, window: int = 4) -> frozenset[HVector]:
    """All windowed vectors: orthogonal to every cocircuit representative."""
    check_budget(M.field, M.ground, window)
    cands = entry_candidates(M.field, window)
    cocircs = M.cocircuits.reps
    out = []
    for combo in itertools.product(cands, repeat=len(M.ground)):
        V = HVector(M.field, M.ground, combo)
        if all(M.vector_perp(V, Y) for Y in cocircs):
            out.append(V)
    return frozenset(out)


def covectors_enumerate(M: HMatroid, window: int = 4) -> frozenset[HVector]:
    """All windowed covectors: every circuit representative is orthogonal to them."""
    check_budget(M.field, M.ground, window)
    cands = entry_candidates(M.field, window)
    circs = M.circuits.reps
    out = []
    for combo in itertools.product(cands, repeat=len(M.ground)):
        U = HVector(M.field, M.ground, combo)
        if all(M.covector_perp(X, U) for X in circs):
            out.append(U)
    return frozenset(out)


def compose_vectors(V: HVector, W: HVector) -> HVector:
    H = V.field
    return HVector(H, V.ground, tuple(H.compose(a, b) for a, b in zip(V.entries, W.entries)))


def _within_box(V: HVector, window: int) -> bool:
    return all(
        x.is_zero or all(abs(c) <= window for c in x.grade) for x in V.entries
    )


def _grade_spread(sig) -> int:
    spread = 0
    for rep in sig.reps:
        coords = [c for x in rep.entries if not x.is_zero for c in x.grade]
        if coords:
            spread = max(spread, max(coords) - min(coords))
    return spread


def vectors_generate(M: HMatroid, window: int = 4) -> frozenset[HVector]:
    """Stringent fast path for the vector set.

    Builds all compositions of at most corank many scaled circuits (for
    Krasner and sign residues, where composition never shrinks supports;
    for field residues only support-preserving compositions), together with
    all singleton iterated hypersums, then filters to the window box.
    """
    H = M.field
    r_star = M.corank
    spread = _grade_spread(M.circuits)
    pool = [
        v
        for v in M.circuits.scalings(window + spread)
        if _within_box_ext(v, window, spread)
    ]
    results = set(pool)
    residue = H.residue_kind
    closed_supports = residue in ("krasner", "sign")
    layer = set(pool)
    for _ in range(max(r_star - 1, 0)):
        new = set()
        for V in layer:
            for W in pool:
                if closed_supports or compose_vectors(V, W).support == V.support | W.support:
                    new.add(compose_vectors(V, W))
        layer = new - results
        results |= layer
    if residue in ("sign", "field"):
        for size in range(2, r_star + 1):
            for combo in itertools.combinations_with_replacement(pool, size):
                total = _vector_hypersum(combo)
                if total is not None:
                    results.add(total)
    results = {V for V in results if _within_box(V, window)}
    results.add(zero_vector(H, M.ground))
    return frozenset(results)


def _within_box_ext(V: HVector, window: int, spread: int) -> bool:
    for x in V.entries:
        if x.is_zero:
            continue
        if any(c > window or c < -(window + spread) for c in x.grade):
            return False
    return True


def _vector_hypersum(vectors) -> HVector | None:
    """The unique member of the pointwise hypersum, or None if not a singleton."""
    H = vectors[0].field
    entries = []
    for i in range(len(vectors[0].ground)):
        s = H.hyperadd_multi([v.entries[i] for v in vectors])
        elt = s.the_singleton()
        if elt is None:
            return None
        entries.append(elt)
    return HVector(H, vectors[0].ground, tuple(entries))


def is_perfect(M: HMatroid, window: int = 4, vectors=None, covectors=None):
    """Check every windowed vector against every windowed covector."""
    vs = vectors_enumerate(M, window) if vectors is None else vectors
    us = covectors_enumerate(M, window) if covectors is None else covectors
    for V in sorted(vs, key=lambda v: v.sort_key()):
        for U in sorted(us, key=lambda u: u.sort_key()):
            if not M.vector_perp(V, U):
                return False, (V, U)
    return True, None


# -- vector axioms ----------------------------------------------------------


def check_vector_axioms(vectors, window: int = 4, side: str = "left") -> list[dict]:
    """(V0), windowed (V1), (V2)'/(V2)'', and (V3) for a finite vector set.

    Scalings and compositions are only required to be present when they stay
    inside the window box.  An eliminant for (V3) must be in the set when it
    fits the box; eliminants whose entries dip below the box are verified
    directly against the cocircuits of the reconstructed matroid, so that
    box truncation never produces spurious failures.
    """
    vectors = frozenset(vectors)
    if not vectors:
        return [{"check": "V0", "witness": None}]
    some = next(iter(vectors))
    H, ground = some.field, some.ground
    report = []
    if zero_vector(H, ground) not in vectors:
        report.append({"check": "V0", "witness": None})
    recon = None
    if any(not v.is_zero for v in vectors):
        try:
            recon = reconstruct_from_vectors(vectors, window=None, side=side)
        except HypermatError:
            recon = None
    scalars = H.units_box(2 * window) if H.rank else H.units_box(0)
    for V in sorted(vectors, key=lambda v: v.sort_key()):
        for a in scalars:
            aV = V.scale_left(a) if side == "left" else V.scale_right(a)
            if _within_box(aV, window) and aV not in vectors:
                report.append({"check": "V1", "witness": {"a": a, "V": V}})
    residue = H.residue_kind
    ordered = sorted(vectors, key=lambda v: v.sort_key())
    for V, W in itertools.product(ordered, ordered):
        VW = compose_vectors(V, W)
        support_ok = VW.support == V.support | W.support
        if residue in ("krasner", "sign") or support_ok:
            if _within_box(VW, window) and VW not in vectors:
                report.append({"check": "V2'", "witness": {"V": V, "W": W}})
        if residue == "field":
            total = _vector_hypersum((V, W))
            if total is not None and _within_box(total, window) and total not in vectors:
                report.append({"check": "V2''", "witness": {"V": V, "W": W}})
    slack = window + _grade_spread(recon.circuits) + 1 if recon is not None else window
    for i, V in enumerate(ordered):
        for W in ordered[i:]:
            for e in ground:
                ve, we = V[e], W[e]
                if ve.is_zero or H.neg(ve) != we:
                    continue
                if not _v3_eliminant_exists(vectors, V, W, e, window, recon, slack):
                    report.append({"check": "V3", "witness": {"V": V, "W": W, "e": e}})
    return report


def _v3_eliminant_exists(vectors, V, W, e, window, recon, slack) -> bool:
    H = V.field
    ground = V.ground
    sums = [H.hyperadd(a, b) for a, b in zip(V.entries, W.entries)]
    fixed = {}
    free = []
    for i, s in enumerate(sums):
        elt = s.the_singleton()
        if elt is not None:
            fixed[i] = elt
        elif ground[i] == e:
            fixed[i] = H.zero()
        else:
            free.append(i)
    ei = ground.index(e)
    if ei in fixed and not fixed[ei].is_zero:
        return False
    # cheapest first: all-zero choice on the cancelling coordinates
    base = [fixed.get(i, H.zero()) for i in range(len(ground))]
    candidate = HVector(H, ground, tuple(base))
    if all(b in s for b, s in zip(candidate.entries, sums)) and candidate in vectors:
        return True
    choices = [sums[i].elements_within(window) for i in free]
    total = 1
    for c in choices:
        total *= len(c)
    if total <= max(len(vectors), 1):
        for picks in itertools.product(*choices):
            entries = list(base)
            for i, val in zip(free, picks):
                entries[i] = val
            Z = HVector(H, ground, tuple(entries))
            if Z in vectors:
                return True
    else:
        for Z in vectors:
            if Z[e].is_zero and all(z in s for z, s in zip(Z.entries, sums)):
                return True
    if recon is None or H.rank == 0:
        return False
    # no in-box member: look for an eliminant whose entries escape the box
    deep = [sums[i].elements_within(slack) for i in free]
    for picks in itertools.product(*deep):
        entries = list(base)
        for i, val in zip(free, picks):
            entries[i] = val
        Z = HVector(H, ground, tuple(entries))
        if not all(recon.vector_perp(Z, Y) for Y in recon.cocircuits.reps):
            continue
        return not _within_box(Z, window)
    return False


def reconstruct_from_vectors(vectors, window: int | None = None, side: str = "left") -> HMatroid:
    """Matroid whose circuits are the minimal nonzero vectors.

    With a window, cross-checks that the reconstruction's windowed vector
    set equals the input (raising a theorem violation otherwise).
    """
    vectors = frozenset(vectors)
    nonzero = [v for v in vectors if not v.is_zero]
    if not nonzero:
        raise InvalidSignatureError("no nonzero vectors to reconstruct from")
    some = nonzero[0]
    sups = {v.support for v in nonzero}
    minimal = [v for v in nonzero if not any(s < v.support for s in sups)]
    classes = {normalize_vector(v, side) for v in minimal}
    M = hmatroid_from_circuits(some.field, some.ground, sorted(classes, key=lambda v: v.sort_key()), side)
    if window is not None:
        regenerated = vectors_enumerate(M, window)
        if regenerated != vectors:
            raise TheoremViolationError(
                "reconstructed matroid has a different windowed vector set",
                witness=(sorted(map(repr, vectors - regenerated)), sorted(map(repr, regenerated - vectors))),
            )
    return M


# -- partition dichotomy ----------------------------------------------------


@dataclass(frozen=True)
class FarkasWitness:
    kind: str  # "vector" | "cocircuit"
    vec: HVector


def farkas_witness(M: HMatroid, partition, window: int = 4, weak: bool = False) -> FarkasWitness:
    """Either a vector that is 1 on G, small on R and 0 on B, or a cocircuit
    that is bounded by 1 on R and G, hits 1 on G, and has a zero-free G-sum.

    The strict form bounds the vector strictly below 1 on R; the weak flag
    swaps the strictness between the two branches.  The two branches are
    mutually exclusive, so the search order does not matter.
    """
    H = M.field
    R, G, B = (frozenset(partition[k]) for k in ("R", "G", "B"))
    if R | G | B != frozenset(M.ground) or R & G or R & B or G & B:
        raise InvalidInputError("not a partition of the ground set")
    found = _farkas_cocircuit(M, R, G, weak)
    if found is not None:
        return FarkasWitness("cocircuit", found)
    found = _farkas_vector(M, R, G, B, window, weak)
    if found is not None:
        return FarkasWitness("vector", found)
    raise TheoremViolationError(
        f"no dichotomy witness within window {window}",
        witness={"R": sorted(R), "G": sorted(G), "B": sorted(B)},
    )


def _farkas_cocircuit(M, R, G, weak):
    H = M.field
    for Y in M.cocircuits.reps:
        on_g = [Y[e] for e in sorted(G) if not Y[e].is_zero]
        if not on_g:
            continue
        m_g = max(x.grade for x in on_g)
        on_r = [Y[e].grade for e in sorted(R) if not Y[e].is_zero]
        if weak:
            if on_r and max(on_r) >= m_g:
                continue
        else:
            if on_r and max(on_r) > m_g:
                continue
        gsum = H.hyperadd_multi([Y[e] for e in sorted(G)])
        if gsum.contains_zero:
            continue
        shift = HElement(H.residue_units()[0], tuple(-c for c in m_g))
        scaled = Y.scale_right(shift) if M.cocircuits.side == "right" else Y.scale_left(shift)
        return scaled
    return None


def _farkas_vector(M, R, G, B, window, weak):
    H = M.field
    one = H.one()
    zero = H.zero()
    zero_grade = (0,) * H.rank
    if H.rank == 0:
        r_vals = [zero] + ([HElement(r) for r in H.residue_units()] if weak else [])
    elif weak:
        r_vals = [zero] + [x for x in H.units_box(window) if x.grade <= zero_grade]
    else:
        r_vals = [zero] + [x for x in H.units_box(window) if x.grade < zero_grade]
    r_order = sorted(R)
    cocircs = M.cocircuits.reps
    for picks in itertools.product(r_vals, repeat=len(r_order)):
        mapping = {e: one for e in G}
        mapping.update({e: zero for e in B})
        mapping.update(dict(zip(r_order, picks)))
        V = hvector(H, M.ground, mapping)
        if all(M.vector_perp(V, Y) for Y in cocircs):
            return V
    return None


# -- elimination and decomposition ------------------------------------------


def eliminate_vectors(M: HMatroid, vectors, e: str, window: int = 4, pool=None) -> HVector:
    """A vector of M inside the pointwise hypersum of the inputs, zero at e."""
    H = M.field
    vectors = list(vectors)
    at_e = H.hyperadd_multi([v[e] for v in vectors])
    if not at_e.contains_zero:
        raise InvalidInputError("the hypersum at e does not contain zero")
    sums = {
        f: H.hyperadd_multi([v[f] for v in vectors]) for f in M.ground
    }
    candidates = vectors_enumerate(M, window) if pool is None else pool
    for V in sorted(candidates, key=lambda v: v.sort_key()):
        if V[e].is_zero and all(V[f] in sums[f] for f in M.ground):
            return V
    raise TheoremViolationError(f"no eliminant at {e!r} within window {window}")


def decompose_vector(M: HMatroid, V: HVector, window: int = 2) -> list[HVector]:
    """Scaled circuits whose iterated hypersum is exactly the singleton {V}.

    At most corank many factors are needed (each step of the classical
    decomposition drops the nullity of the remaining support).
    """
    H = M.field
    if H.residue_kind not in ("sign", "field"):
        raise InvalidInputError("decomposition needs a sign or field residue")
    if not all(M.vector_perp(V, Y) for Y in M.cocircuits.reps):
        raise InvalidInputError("input is not a vector of the matroid")
    if V.is_zero:
        return []
    if not V.support:
        return []
    norm = normalize_vector(V, M.circuits.side)
    if norm in M.circuits.reps:
        return [V]
    if H.rank:
        vmax = max(abs(c) for x in V.entries if not x.is_zero for c in x.grade)
        pool = [
            f
            for f in M.circuits.scalings(vmax + _grade_spread(M.circuits) + window)
            if f.support <= V.support
            and all(
                x.is_zero or (not v.is_zero and x.grade <= v.grade)
                for x, v in zip(f.entries, V.entries)
            )
        ]
    else:
        pool = M.circuits.scalings(0)
    pool = sorted(set(pool), key=lambda v: v.sort_key())
    for size in range(1, M.corank + 1):
        for combo in itertools.combinations_with_replacement(pool, size):
            total = _vector_hypersum(combo)
            if total == V:
                return list(combo)
    raise TheoremViolationError("no circuit decomposition found", witness=V)
