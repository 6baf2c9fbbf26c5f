"""Matroids over skew hyperfields: signatures, duality, minors, residues.

A circuit signature stores one normalized representative per projective
class (the first nonzero entry in ground order is scaled to 1, on the
signature's side).  Construction synthesizes the cocircuit signature by
propagating orthogonality constraints along circuits meeting each cocircuit
in two elements, then certifies 3-orthogonality of the two signatures; a
signature passes iff it is a matroid over the hyperfield.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    DomainMismatchError,
    InvalidInputError,
    InvalidSignatureError,
    NotAnHMatroidError,
    TheoremViolationError,
    UnsupportedOperationError,
)
from .homs import Homomorphism, valuation_map
from .hyperfields import Grade, HElement, Hyperfield, SymbolicSet, symset
from .matroids import ClassicalMatroid, from_circuits


@dataclass(frozen=True)
class HVector:
    """A map from ground elements to hyperfield elements."""

    field: Hyperfield
    ground: tuple[str, ...]
    entries: tuple[HElement, ...]

    def __post_init__(self):
        if len(self.entries) != len(self.ground):
            raise DomainMismatchError("entry count does not match the ground set")

    def __getitem__(self, e: str) -> HElement:
        return self.entries[self.ground.index(e)]

    @property
    def support(self) -> frozenset[str]:
        return frozenset(e for e, x in zip(self.ground, self.entries) if not x.is_zero)

    @property
    def is_zero(self) -> bool:
        return all(x.is_zero for x in self.entries)

    def scale_left(self, a: HElement) -> "HVector":
        H = self.field
        return HVector(H, self.ground, tuple(H.mul(a, x) for x in self.entries))

    def scale_right(self, a: HElement) -> "HVector":
        H = self.field
        return HVector(H, self.ground, tuple(H.mul(x, a) for x in self.entries))

    def neg(self) -> "HVector":
        H = self.field
        return HVector(H, self.ground, tuple(H.neg(x) for x in self.entries))

    def drop(self, e: str) -> "HVector":
        keep = tuple(g for g in self.ground if g != e)
        return self.restrict(keep)

    def restrict(self, sub_ground) -> "HVector":
        sub = tuple(sub_ground)
        return HVector(self.field, sub, tuple(self[e] for e in sub))

    def uparrow(self) -> "HVector":
        """Keep the maximal-grade entries, zero out the rest."""
        grades = [x.grade for x in self.entries if not x.is_zero]
        if not grades:
            return self
        top = max(grades)
        H = self.field
        return HVector(
            H,
            self.ground,
            tuple(x if (not x.is_zero and x.grade == top) else H.zero() for x in self.entries),
        )

    def max_grade(self) -> Grade | None:
        grades = [x.grade for x in self.entries if not x.is_zero]
        return max(grades) if grades else None

    def sort_key(self):
        return tuple(self.field.sort_key(x) for x in self.entries)

    def __repr__(self):
        return "(" + ", ".join(repr(x) for x in self.entries) + ")"


def hvector(field: Hyperfield, ground, mapping) -> HVector:
    """Vector from a dict element -> HElement; missing entries are zero."""
    ground = tuple(ground)
    z = field.zero()
    return HVector(field, ground, tuple(field.require(mapping.get(e, z)) for e in ground))


def zero_vector(field: Hyperfield, ground) -> HVector:
    ground = tuple(ground)
    return HVector(field, ground, (field.zero(),) * len(ground))


def _check_compatible(X: HVector, Y: HVector):
    if X.field != Y.field or X.ground != Y.ground:
        raise DomainMismatchError("vectors live over different hyperfields or grounds")


def pairing(X: HVector, Y: HVector) -> SymbolicSet:
    """Hypersum of the pointwise products X_e * Y_e (X is the left factor)."""
    _check_compatible(X, Y)
    H = X.field
    products = [
        H.mul(x, y) for x, y in zip(X.entries, Y.entries) if not (x.is_zero or y.is_zero)
    ]
    return H.hyperadd_multi(products)


def perp(X: HVector, Y: HVector) -> bool:
    """True iff 0 lies in the pairing; exact fast path on the graded catalog.

    Zero is in a hypersum of units iff the residue-level sum of the
    top-grade terms contains zero, which reduces to a count, a sign scan,
    or a modular sum depending on the residue.
    """
    _check_compatible(X, Y)
    H = X.field
    if H.kind == "quotient":
        return pairing(X, Y).contains_zero
    kind = H.residue_kind
    top: Grade | None = None
    count = 0
    signs = 0
    total = 0
    any_product = False
    for x, y in zip(X.entries, Y.entries):
        if x.is_zero or y.is_zero:
            continue
        any_product = True
        g = tuple(a + b for a, b in zip(x.grade, y.grade))
        if top is None or g > top:
            top = g
            count, signs, total = 0, 0, 0
        elif g < top:
            continue
        if kind == "krasner":
            count += 1
        elif kind == "sign":
            signs |= 1 if x.residue * y.residue > 0 else 2
        else:
            total += x.residue * y.residue
    if not any_product:
        return True
    if kind == "krasner":
        return count >= 2
    if kind == "sign":
        return signs == 3
    return total % H.p == 0


@dataclass(frozen=True)
class CircuitSignature:
    """One normalized vector per projective circuit class."""

    field: Hyperfield
    ground: tuple[str, ...]
    side: str  # "left" | "right"
    reps: tuple[HVector, ...]

    @property
    def supports(self) -> frozenset[frozenset[str]]:
        return frozenset(v.support for v in self.reps)

    def rep_by_support(self) -> dict[frozenset[str], HVector]:
        return {v.support: v for v in self.reps}

    def normalize(self, vec: HVector) -> HVector:
        return normalize_vector(vec, self.side)

    def scalings(self, window: int) -> list[HVector]:
        """All scalings of the representatives with scalar grades in the window box."""
        H = self.field
        out = []
        for rep in self.reps:
            for g in H.grades_box(window):
                for r in H.residue_units():
                    a = HElement(r, g)
                    out.append(rep.scale_left(a) if self.side == "left" else rep.scale_right(a))
        return out

    def __iter__(self):
        return iter(self.reps)

    def __len__(self):
        return len(self.reps)


def normalize_vector(vec: HVector, side: str) -> HVector:
    """Scale so the first nonzero entry in ground order becomes 1."""
    H = vec.field
    for x in vec.entries:
        if not x.is_zero:
            a = H.inv(x)
            return vec.scale_left(a) if side == "left" else vec.scale_right(a)
    raise InvalidSignatureError("cannot normalize the zero vector")


def signature_from_vectors(field, ground, vectors, side="left") -> CircuitSignature:
    """Validate (C0) and (C2) and store normalized class representatives."""
    ground = tuple(ground)
    by_support: dict[frozenset, HVector] = {}
    for v in vectors:
        if v.is_zero:
            raise InvalidSignatureError("(C0) fails: zero vector in signature", witness=v)
        if v.ground != ground or v.field != field:
            raise DomainMismatchError("signature vector over the wrong ground or hyperfield")
        rep = normalize_vector(v, side)
        old = by_support.get(rep.support)
        if old is not None and old != rep:
            raise InvalidSignatureError(
                "(C2) fails: support carries two classes", witness=(old, rep)
            )
        by_support[rep.support] = rep
    sups = list(by_support)
    for s, t in itertools.combinations(sups, 2):
        if s <= t or t <= s:
            raise InvalidSignatureError(
                "(C2) fails: comparable supports", witness=(sorted(s), sorted(t))
            )
    reps = tuple(sorted(by_support.values(), key=lambda v: v.sort_key()))
    return CircuitSignature(field, ground, side, reps)


def _other_side(side: str) -> str:
    return "right" if side == "left" else "left"


def dual_signature(underlying: ClassicalMatroid, sig: CircuitSignature) -> CircuitSignature:
    """Synthesize the unique dual signature and certify 3-orthogonality.

    For each cocircuit D of the underlying matroid, the entry at the least
    element is set to 1 and the rest are forced through circuits meeting D
    in exactly two elements.  Failure of the final sweep (or an inconsistent
    propagation) means the signature is not a matroid over the hyperfield.
    """
    H = sig.field
    ground = sig.ground
    if sig.supports != underlying.circuits:
        raise InvalidSignatureError("signature supports are not the matroid's circuits")
    out_side = _other_side(sig.side)
    cocircuit_supports = sorted(underlying.cocircuits(), key=lambda d: sorted(d))
    duals = []
    for D in cocircuit_supports:
        d_elems = [e for e in ground if e in D]
        entries = {e: None for e in d_elems}
        e0 = d_elems[0]
        entries[e0] = H.one()
        pending = True
        while pending:
            pending = False
            for rep in sig.reps:
                meet = rep.support & D
                if len(meet) != 2:
                    continue
                a, b = sorted(meet, key=ground.index)
                for e, f in ((a, b), (b, a)):
                    if entries[e] is not None and entries[f] is None:
                        entries[f] = _forced_entry(H, sig.side, rep[e], rep[f], entries[e])
                        pending = True
        unassigned = [e for e in d_elems if entries[e] is None]
        if unassigned:
            entries = _seed_components(H, sig, D, entries, d_elems)
        vec = hvector(H, ground, {e: v for e, v in entries.items() if v is not None})
        duals.append(normalize_vector(vec, out_side))
    dual_sig = signature_from_vectors(H, ground, duals, out_side)
    ok, witness = perp_k(sig, dual_sig, 3)
    if not ok:
        raise NotAnHMatroidError("3-orthogonality fails; not a matroid over H", witness=witness)
    return dual_sig


def _forced_entry(H, side, x_e, x_f, y_e):
    # 0 in x_e*y_e + x_f*y_f pins y_f by uniqueness of negation.
    if side == "left":
        return H.mul(H.inv(x_f), H.neg(H.mul(x_e, y_e)))
    return H.mul(H.neg(H.mul(y_e, x_e)), H.inv(x_f))


def _seed_components(H, sig, D, entries, d_elems):
    """Disconnected propagation: try grade-0 units for one seed per component.

    Cannot occur for genuine matroid cocircuits (two elements of a cocircuit
    always lie on a circuit meeting it twice); kept for totality.
    """
    comps = []
    seen = set(e for e in d_elems if entries[e] is not None)
    for e in d_elems:
        if e in seen:
            continue
        comp = {e}
        grown = True
        while grown:
            grown = False
            for rep in sig.reps:
                meet = rep.support & D
                if len(meet) == 2 and meet & comp and not meet <= comp | seen:
                    comp |= meet
                    grown = True
        seen |= comp
        comps.append(sorted(comp, key=d_elems.index))
    zero_grade = (0,) * H.rank
    candidates = [dict(entries)]
    for comp in comps:
        seeded = []
        for cand in candidates:
            for r in H.residue_units():
                trial = dict(cand)
                trial[comp[0]] = HElement(r, zero_grade)
                pending = True
                while pending:
                    pending = False
                    for rep in sig.reps:
                        meet = rep.support & D
                        if len(meet) != 2:
                            continue
                        a, b = sorted(meet)
                        for e, f in ((a, b), (b, a)):
                            if e in trial and trial[e] is not None and trial.get(f) is None:
                                trial[f] = _forced_entry(H, sig.side, rep[e], rep[f], trial[e])
                                pending = True
                seeded.append(trial)
        candidates = seeded
    survivors = []
    ground = sig.ground
    for cand in candidates:
        if any(v is None for v in cand.values()):
            continue
        vec = hvector(H, ground, cand)
        ok = True
        for rep in sig.reps:
            if len(rep.support & D) <= 2:
                good = perp(rep, vec) if sig.side == "left" else perp(vec, rep)
                if not good:
                    ok = False
                    break
        if ok:
            survivors.append(cand)
    if len(survivors) != 1:
        raise NotAnHMatroidError(
            "disconnected cocircuit propagation is inconsistent or ambiguous",
            witness=sorted(D),
        )
    return survivors[0]


def perp_k(C: CircuitSignature, D: CircuitSignature, k=None):
    """Check X perp Y over representative pairs with support meets of size <= k.

    Scaling invariance of orthogonality makes representatives sufficient.
    k=None means unrestricted (full orthogonality).
    """
    left, right = (C, D) if C.side == "left" else (D, C)
    for x in left.reps:
        for y in right.reps:
            if k is not None and len(x.support & y.support) > k:
                continue
            if not perp(x, y):
                return False, (x, y)
    return True, None


@dataclass(frozen=True)
class HMatroid:
    """Circuit and synthesized cocircuit signatures over a shared hyperfield."""

    field: Hyperfield
    ground: tuple[str, ...]
    circuits: CircuitSignature
    cocircuits: CircuitSignature
    underlying: ClassicalMatroid
    side: str = "left"

    @property
    def rank(self) -> int:
        return self.underlying.rank

    @property
    def corank(self) -> int:
        return self.underlying.corank

    def dual(self) -> "HMatroid":
        return HMatroid(
            self.field,
            self.ground,
            self.cocircuits,
            self.circuits,
            self.underlying.dual(),
            _other_side(self.side),
        )

    def vector_perp(self, V: HVector, Y: HVector) -> bool:
        """Orthogonality with the circuit-side vector as left factor."""
        return perp(V, Y) if self.side == "left" else perp(Y, V)

    def covector_perp(self, X: HVector, U: HVector) -> bool:
        return perp(X, U) if self.side == "left" else perp(U, X)

    def delete(self, e: str) -> "HMatroid":
        keep = tuple(g for g in self.ground if g != e)
        vecs = [rep.drop(e) for rep in self.circuits.reps if rep[e].is_zero]
        return hmatroid_from_circuits(self.field, keep, vecs, self.side)

    def contract(self, e: str) -> "HMatroid":
        keep = tuple(g for g in self.ground if g != e)
        traces = [rep.drop(e) for rep in self.circuits.reps]
        traces = [t for t in traces if not t.is_zero]
        sups = [t.support for t in traces]
        minimal = [t for t in traces if not any(s < t.support for s in sups)]
        return hmatroid_from_circuits(self.field, keep, minimal, self.side)

    def rescale(self, rho: dict[str, HElement]) -> "HMatroid":
        """Circuits pick up rho^{-1} on the circuit side, cocircuits pick up rho."""
        H = self.field
        for e in self.ground:
            if e not in rho or rho[e].is_zero:
                raise InvalidInputError("scaling vector must be nonzero everywhere")
        inv = {e: H.inv(rho[e]) for e in self.ground}

        def scaled(vec):
            if self.side == "left":
                return HVector(H, vec.ground, tuple(H.mul(x, inv[e]) for e, x in zip(vec.ground, vec.entries)))
            return HVector(H, vec.ground, tuple(H.mul(inv[e], x) for e, x in zip(vec.ground, vec.entries)))

        return hmatroid_from_circuits(self.field, self.ground, [scaled(r) for r in self.circuits.reps], self.side)

    def push_forward(self, f: Homomorphism) -> "HMatroid":
        """Image matroid over the codomain; the output is revalidated."""
        if f.domain != self.field:
            raise DomainMismatchError("homomorphism domain differs from the matroid's hyperfield")
        K = f.codomain
        vecs = [HVector(K, self.ground, tuple(f.apply(x) for x in rep.entries)) for rep in self.circuits.reps]
        return hmatroid_from_circuits(K, self.ground, vecs, self.side)

    def residue_matroid(self) -> "HMatroid":
        return residue_matroid(self)

    def valuation_matroid(self) -> "HMatroid":
        """The push-forward |M| along the valuation map."""
        return self.push_forward(valuation_map(self.field))


def hmatroid_from_circuits(field, ground, circuit_vectors, side="left") -> HMatroid:
    """Validated construction: signature axioms, underlying matroid, duality."""
    sig = signature_from_vectors(field, ground, circuit_vectors, side)
    underlying = from_circuits(ground, sig.supports)
    cocirc = dual_signature(underlying, sig)
    return HMatroid(field, tuple(ground), sig, cocirc, underlying, side)


def krasner_matroid(matroid: ClassicalMatroid) -> HMatroid:
    """Every classical matroid, viewed over the Krasner hyperfield."""
    K = Hyperfield.krasner()
    one = K.one()
    vecs = [
        hvector(K, matroid.ground, {e: one for e in c}) for c in sorted(matroid.circuits, key=sorted)
    ]
    return hmatroid_from_circuits(K, matroid.ground, vecs)


# -- circuit axioms ---------------------------------------------------------


def modular_support_pairs(supports) -> list[tuple[frozenset, frozenset]]:
    """Unordered support pairs whose union strictly contains no union of two
    distinct circuit supports."""
    sups = list(supports)
    out = []
    for s1, s2 in itertools.combinations(sups, 2):
        union = s1 | s2
        modular = True
        for t1, t2 in itertools.combinations(sups, 2):
            if t1 | t2 < union:
                modular = False
                break
        if modular:
            out.append((s1, s2))
    return out


def check_circuit_axioms(sig: CircuitSignature) -> list[dict]:
    """Full (C0)-(C3) check; (C3) is searched exactly via symbolic sets.

    Modular elimination is tested on pairs from distinct classes (a class
    and its own negative admit no eliminating circuit by (C2), and such
    pairs are excluded as in the weak circuit axioms).
    """
    H = sig.field
    report = []
    for rep in sig.reps:
        if rep.is_zero:
            report.append({"check": "C0", "witness": rep})
        if rep != sig.normalize(rep):
            report.append({"check": "C1-normalized", "witness": rep})
    sups = sorted(sig.supports, key=sorted)
    for s, t in itertools.combinations(sups, 2):
        if s <= t or t <= s:
            report.append({"check": "C2", "witness": (sorted(s), sorted(t))})
    by_support = sig.rep_by_support()
    for s1, s2 in modular_support_pairs(sups):
        X = by_support[s1]
        Yhat = by_support[s2]
        for e in sorted(s1 & s2):
            Y = _align_for_elimination(H, sig.side, X, Yhat, e)
            if not _elimination_exists(sig, X, Y, e):
                report.append(
                    {"check": "C3", "witness": {"X": X, "Y": Y, "e": e}}
                )
    return report


def _align_for_elimination(H, side, X, Yhat, e):
    """Scale Yhat so the entries at e are negatives of each other."""
    target = H.neg(X[e])
    if side == "left":
        beta = H.mul(target, H.inv(Yhat[e]))
        return Yhat.scale_left(beta)
    beta = H.mul(H.inv(Yhat[e]), target)
    return Yhat.scale_right(beta)


def _elimination_exists(sig: CircuitSignature, X: HVector, Y: HVector, e: str) -> bool:
    """Is there a circuit Z with Z_e = 0 lying pointwise in X + Y?"""
    H = sig.field
    union = X.support | Y.support
    sums = {f: H.hyperadd(X[f], Y[f]) for f in union}
    for Z in sig.reps:
        zsup = Z.support
        if e in zsup or not zsup <= union:
            continue
        if any(not sums[f].contains_zero for f in union - zsup - {e}):
            continue
        gamma = None
        for f in sorted(zsup, key=sig.ground.index):
            if sig.side == "left":
                cand = sums[f].scale_right(H.inv(Z[f]))
            else:
                cand = sums[f].scale_left(H.inv(Z[f]))
            gamma = cand if gamma is None else gamma.intersect(cand)
            if gamma.is_empty():
                break
        if gamma is not None and gamma.has_nonzero():
            return True
    return False


def check_c3prime(sig: CircuitSignature) -> list[dict]:
    """Non-modular elimination (C3)' for Krasner or sign residues.

    Tropical form: Z_e=0, Z_f=X_f and Z <= X o Y pointwise.  Sign-residue
    form: Z_e=0, Z_f=X_f and, at every g, either |Z_g| < |X_g o Y_g| or
    Z_g lies in the hypersum X_g + Y_g.
    """
    H = sig.field
    if H.residue_kind not in ("krasner", "sign"):
        raise UnsupportedOperationError("(C3)' checker needs a Krasner or sign residue")
    tropical = H.residue_kind == "krasner"
    report = []
    by_support = sig.rep_by_support()
    sups = sorted(sig.supports, key=sorted)
    for s1 in sups:
        for s2 in sups:
            if s1 == s2:
                continue
            X = by_support[s1]
            Yhat = by_support[s2]
            for e in sorted(s1 & s2):
                Y = _align_for_elimination(H, sig.side, X, Yhat, e)
                for f in sorted(s1):
                    if not _val_lt(Y[f], X[f]):
                        continue
                    if not _c3prime_witness(sig, X, Y, e, f, tropical):
                        report.append(
                            {"check": "C3'", "witness": {"X": X, "Y": Y, "e": e, "f": f}}
                        )
    return report


def _val_lt(a: HElement, b: HElement) -> bool:
    """Valuation comparison with zero as the bottom element."""
    if b.is_zero:
        return False
    if a.is_zero:
        return True
    return a.grade < b.grade


def _c3prime_witness(sig, X, Y, e, f, tropical) -> bool:
    H = sig.field
    for Zhat in sig.reps:
        zsup = Zhat.support
        if e in zsup or f not in zsup:
            continue
        if sig.side == "left":
            gamma = H.mul(X[f], H.inv(Zhat[f]))
            Z = Zhat.scale_left(gamma)
        else:
            gamma = H.mul(H.inv(Zhat[f]), X[f])
            Z = Zhat.scale_right(gamma)
        ok = True
        for g in sig.ground:
            comp = H.compose(X[g], Y[g])
            if tropical:
                if not (Z[g].is_zero or (not comp.is_zero and Z[g].grade <= comp.grade)):
                    ok = False
                    break
            else:
                if not (_val_lt(Z[g], comp) or Z[g] in H.hyperadd(X[g], Y[g])):
                    ok = False
                    break
        if ok:
            return True
    return False


# -- residue matroid --------------------------------------------------------


def _to_residue_vector(vec: HVector, R: Hyperfield) -> HVector:
    entries = []
    for x in vec.entries:
        if x.is_zero:
            entries.append(R.zero())
        else:
            entries.append(HElement(x.residue, ()))
    return HVector(R, vec.ground, tuple(entries))


def _residue_classes(sig: CircuitSignature, R: Hyperfield):
    """Minimal-support uparrows of max-grade-0 rescaled classes, over R."""
    H = sig.field
    flattened = []
    for rep in sig.reps:
        top = rep.max_grade()
        shift = HElement(H.residue_units()[0], tuple(-t for t in top))
        scaled = rep.scale_left(shift) if sig.side == "left" else rep.scale_right(shift)
        flattened.append(scaled.uparrow())
    sups = [v.support for v in flattened]
    minimal = [v for v in flattened if not any(s < v.support for s in sups)]
    return [_to_residue_vector(v, R) for v in minimal]


def residue_matroid(M: HMatroid) -> HMatroid:
    """The matroid over the residue hyperfield induced by the top grades.

    Validated along the way: the synthesized cocircuits must coincide with
    the minimal uparrows of M's cocircuits, and the underlying matroid must
    equal the residue of the valuated push-forward.
    """
    H = M.field
    if H.kind == "quotient":
        raise UnsupportedOperationError("residue matroid needs a graded catalog hyperfield")
    R = H.residue_field()
    circ0 = _residue_classes(M.circuits, R)
    M0 = hmatroid_from_circuits(R, M.ground, circ0, M.side)
    cocirc0 = _residue_classes(M.cocircuits, R)
    expected = signature_from_vectors(R, M.ground, cocirc0, M.cocircuits.side)
    if expected != M0.cocircuits:
        raise TheoremViolationError(
            "residue cocircuits disagree with the synthesized dual signature",
            witness=(expected, M0.cocircuits),
        )
    val_supports = frozenset(v.support for v in _residue_classes(M.circuits, Hyperfield.krasner()))
    if M0.underlying.circuits != val_supports:
        raise TheoremViolationError(
            "residue underlying matroid differs from the valuation residue",
            witness=(M0.underlying.circuits, val_supports),
        )
    return M0
