"""JSON encoding of hyperfields, elements, vectors, matroids, and reports.

Schema tag: "hypermat/1".  Elements are "0" or {"r": ..., "g": [...]}, with
"r" omitted for Krasner residues and "g" omitted at rank 0.  Every emitted
document re-parses to an equal value.
"""

from __future__ import annotations

import json

from .errors import SpecError
from .hmatroid import HMatroid, HVector, hmatroid_from_circuits, hvector
from .hyperfields import HElement, Hyperfield
from .matroids import ClassicalMatroid, from_circuits

SCHEMA = "hypermat/1"
VERSION = "0.1.0"


def hyperfield_to_json(H: Hyperfield) -> dict:
    if H.kind == "krasner":
        return {"kind": "krasner"}
    if H.kind == "sign":
        return {"kind": "sign"}
    if H.kind == "field":
        return {"kind": "field", "p": H.p}
    if H.kind == "tropical":
        return {"kind": "tropical", "rank": H.rank}
    if H.kind == "stringent":
        out = {"kind": "stringent", "residue": H.residue_kind, "rank": H.rank}
        if H.p:
            out["p"] = H.p
        return out
    if H.subgroup is None:
        raise SpecError("table-built hyperfields have no JSON form")
    return {"kind": "quotient", "p": H.p, "subgroup": list(H.subgroup)}


def hyperfield_from_json(d, path="$.hyperfield") -> Hyperfield:
    if not isinstance(d, dict) or "kind" not in d:
        raise SpecError(f"{path}: expected an object with a 'kind' key")
    kind = d["kind"]
    try:
        if kind == "krasner":
            return Hyperfield.krasner()
        if kind == "sign":
            return Hyperfield.sign()
        if kind == "field":
            return Hyperfield.field(int(d["p"]))
        if kind == "tropical":
            return Hyperfield.tropical(int(d.get("rank", 1)))
        if kind == "stringent":
            return Hyperfield.stringent(d["residue"], int(d.get("rank", 1)), d.get("p"))
        if kind == "quotient":
            return Hyperfield.quotient(int(d["p"]), d["subgroup"])
    except KeyError as exc:
        raise SpecError(f"{path}: missing key {exc}") from exc
    raise SpecError(f"{path}.kind: unknown hyperfield kind {kind!r}")


def element_to_json(H: Hyperfield, x: HElement):
    if x.is_zero:
        return "0"
    out = {}
    if H.residue_kind == "sign":
        out["r"] = "+" if x.residue == 1 else "-"
    elif H.residue_kind != "krasner":
        out["r"] = x.residue
    if H.rank:
        out["g"] = list(x.grade)
    return out


def element_from_json(H: Hyperfield, d, path="$") -> HElement:
    if d == "0":
        return H.zero()
    if not isinstance(d, dict):
        raise SpecError(f'{path}: expected "0" or an object')
    grade = tuple(d.get("g", ()))
    if len(grade) != H.rank:
        raise SpecError(f"{path}.g: expected {H.rank} grade coordinates")
    r = d.get("r")
    if H.residue_kind == "krasner":
        if r not in (None, 1):
            raise SpecError(f"{path}.r: Krasner residues carry no unit label")
        residue = 1
    elif H.residue_kind == "sign":
        if r == "+":
            residue = 1
        elif r == "-":
            residue = -1
        else:
            raise SpecError(f'{path}.r: expected "+" or "-", got {r!r}')
    else:
        residue = r
    x = HElement(residue, grade)
    if not H.is_element(x):
        raise SpecError(f"{path}: {d!r} is not an element of the hyperfield")
    return x


def hvector_to_json(V: HVector) -> list:
    return [element_to_json(V.field, x) for x in V.entries]


def hvector_from_json(H: Hyperfield, ground, entries, path="$") -> HVector:
    if len(entries) != len(ground):
        raise SpecError(f"{path}: expected {len(ground)} entries")
    return HVector(
        H,
        tuple(ground),
        tuple(element_from_json(H, e, f"{path}[{i}]") for i, e in enumerate(entries)),
    )


def matroid_to_json(M: ClassicalMatroid) -> dict:
    return {
        "schema": SCHEMA,
        "ground": list(M.ground),
        "circuits": [sorted(c) for c in sorted(M.circuits, key=sorted)],
    }


def matroid_from_json(d, path="$") -> ClassicalMatroid:
    ground = _ground_of(d, path)
    circuits = d.get("circuits")
    if not isinstance(circuits, list):
        raise SpecError(f"{path}.circuits: expected a list")
    return from_circuits(ground, [frozenset(map(str, c)) for c in circuits])


def hmatroid_to_json(M: HMatroid) -> dict:
    return {
        "schema": SCHEMA,
        "hyperfield": hyperfield_to_json(M.field),
        "ground": list(M.ground),
        "side": M.side,
        "circuits": [hvector_to_json(v) for v in M.circuits.reps],
        "cocircuits": [hvector_to_json(v) for v in M.cocircuits.reps],
        "circuit_supports": [sorted(v.support) for v in M.circuits.reps],
        "cocircuit_supports": [sorted(v.support) for v in M.cocircuits.reps],
    }


def hmatroid_from_json(d, path="$") -> HMatroid:
    H = hyperfield_from_json(d.get("hyperfield"), f"{path}.hyperfield")
    ground = _ground_of(d, path)
    circuits = d.get("circuits")
    if not isinstance(circuits, list) or not circuits:
        raise SpecError(f"{path}.circuits: expected a nonempty list")
    side = d.get("side", "left")
    if side not in ("left", "right"):
        raise SpecError(f"{path}.side: expected 'left' or 'right'")
    vecs = [
        hvector_from_json(H, ground, entry, f"{path}.circuits[{i}]")
        for i, entry in enumerate(circuits)
    ]
    return hmatroid_from_circuits(H, ground, vecs, side)


def _ground_of(d, path):
    ground = d.get("ground")
    if not isinstance(ground, list) or not ground:
        raise SpecError(f"{path}.ground: expected a nonempty list of labels")
    return tuple(map(str, ground))


def is_hmatroid_doc(d) -> bool:
    return isinstance(d, dict) and "hyperfield" in d


def load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise SpecError(f"{path}: no such file") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON ({exc.msg})") from exc


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
