"""JSON problem and result documents.

A problem document names a coefficient ring, the variables, and one of three
payloads: a cyclic module representation (``"cyclic_module"``), a
structure-constant algebra (``"algebra"``), or generators and relations of a
quotient ``B = R/I`` to be extended (``"extension"``).  Polynomials travel as
strings in the grammar of :func:`~corank.free_algebra.parse_poly`;
coefficients are JSON integers or ``"a/b"`` strings.

Result documents are plain dicts built here and serialised by :func:`dumps`,
which is deterministic: keys keep construction order and there are no
timestamps unless the caller adds timings.
"""

from __future__ import annotations

import json
from typing import Any

import jsonschema

from .free_algebra import Alphabet, Polynomial, parse_poly
from .presentation import Presentation
from .quotient_rep import AlgebraRep, CyclicModuleRep, InvalidRepresentation
from .rings import Ring

STATUSES = ("ok", "inconclusive", "invalid_input")

_COEFF = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^\s*[+-]?\d+\s*(/\s*\d+)?\s*$"}]}
_VECTOR = {"type": "array", "items": _COEFF}
_MATRIX = {"type": "array", "items": _VECTOR}
_NAMES = {"type": "array", "items": {"type": "string"}}
_POLYS = {"type": "array", "items": {"type": "string"}}

PROBLEM_SCHEMA: dict = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "corank/problem.schema.json",
    "title": "corank problem document",
    "type": "object",
    "required": ["ring", "variables", "kind"],
    "properties": {
        "name": {"type": "string"},
        "ring": {
            "type": "object",
            "required": ["kind"],
            "properties": {"kind": {"enum": ["Z", "Q", "Fp"]}, "p": {"type": "integer", "minimum": 2}},
            "additionalProperties": False,
        },
        "variables": {**_NAMES, "minItems": 1},
        "kind": {"enum": ["cyclic_module", "algebra", "extension"]},
        "basis": _NAMES,
        "representatives": {"type": "object", "additionalProperties": {"type": "string"}},
        "relations": {"type": "array"},
        "action": {"type": "object", "additionalProperties": _MATRIX},
        "u_vectors": _MATRIX,
        "ideal_generators": _POLYS,
        "structure_constants": {"type": "array", "items": {"type": "array", "items": _VECTOR}},
        "images": {"type": "object", "additionalProperties": _VECTOR},
        "marked_submodule": _MATRIX,
        "y_subset": _NAMES,
        "rewrite_targets": _POLYS,
        "generators": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "witness"],
                "properties": {"name": {"type": "string"}, "witness": {"type": "string"}},
                "additionalProperties": False,
            },
        },
        "known_relations": _POLYS,
        "parameters": {
            "type": "object",
            "properties": {
                "deg_cap": {"type": "integer", "minimum": 0},
                "samples": {"type": "integer", "minimum": 0},
                "seed": {"type": "integer"},
                "simplify": {"type": "boolean"},
            },
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
    "allOf": [
        {
            "if": {"properties": {"kind": {"const": "cyclic_module"}}},
            "then": {
                "required": ["basis", "representatives", "action"],
                "properties": {"relations": _MATRIX},
            },
        },
        {
            "if": {"properties": {"kind": {"const": "algebra"}}},
            "then": {
                "required": ["structure_constants", "images"],
                "properties": {"relations": _MATRIX},
            },
        },
        {
            "if": {"properties": {"kind": {"const": "extension"}}},
            "then": {"required": ["generators"], "properties": {"relations": _POLYS}},
        },
        {
            "if": {"properties": {"ring": {"properties": {"kind": {"const": "Fp"}}}}},
            "then": {"properties": {"ring": {"required": ["kind", "p"]}}},
        },
    ],
}

RESULT_SCHEMA: dict = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "corank/result.schema.json",
    "title": "corank result document",
    "type": "object",
    "required": ["command", "status"],
    "properties": {
        "command": {"enum": ["present", "generate", "reduce", "restrict", "compose", "verify", "check-input"]},
        "input": {"type": ["string", "null"]},
        "parameters": {"type": "object"},
        "status": {"enum": list(STATUSES)},
        "summary": {"type": "string"},
        "outputs": {"type": "object"},
        "diagnostics": {"type": "array", "items": {"type": "string"}},
        "timings": {"type": "object", "additionalProperties": {"type": "number"}},
    },
    "additionalProperties": False,
}

PRESENTATION_SCHEMA: dict = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "corank/presentation.schema.json",
    "title": "corank presentation",
    "type": "object",
    "required": ["generators", "relations"],
    "properties": {
        "generators": PROBLEM_SCHEMA["properties"]["generators"],
        "relations": _POLYS,
        "stats": {"type": "object"},
    },
}


class DocumentError(ValueError):
    """A problem document that cannot be read; ``messages`` lists every reason."""

    def __init__(self, messages):
        self.messages = list(messages)
        super().__init__("; ".join(self.messages))


# ---------------------------------------------------------------------------
# Reading
# ---------------------------------------------------------------------------

def parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError([f"malformed JSON: {e}"]) from None


def schema_errors(doc, schema: dict = PROBLEM_SCHEMA) -> list[str]:
    validator = jsonschema.Draft202012Validator(schema)
    out = []
    for err in sorted(validator.iter_errors(doc), key=lambda e: list(map(str, e.absolute_path))):
        where = "/".join(str(p) for p in err.absolute_path) or "<root>"
        out.append(f"{where}: {err.message}")
    return out


def load_problem(text: str) -> dict:
    """Parse and schema-check a problem document."""
    doc = parse_json(text)
    errs = schema_errors(doc)
    if errs:
        raise DocumentError(errs)
    return doc


def ring_of(doc: dict) -> Ring:
    try:
        return Ring.from_descriptor(doc["ring"])
    except ValueError as e:
        raise DocumentError([f"ring: {e}"]) from None


def alphabet_of(doc: dict) -> Alphabet:
    try:
        return Alphabet(doc["variables"])
    except ValueError as e:
        raise DocumentError([f"variables: {e}"]) from None


def poly(text: str, alphabet: Alphabet, ring: Ring, where: str) -> Polynomial:
    try:
        return parse_poly(text, alphabet, ring)
    except ValueError as e:
        raise DocumentError([f"{where}: {e}"]) from None


def polys(texts, alphabet, ring, where) -> list:
    return [poly(t, alphabet, ring, f"{where}/{i}") for i, t in enumerate(texts)]


def _coerce(value, ring, where):
    try:
        return ring(value)
    except (ValueError, ZeroDivisionError) as e:
        raise DocumentError([f"{where}: {e}"]) from None


def _matrix(rows, ring, where):
    return [[_coerce(a, ring, f"{where}/{i}/{j}") for j, a in enumerate(row)] for i, row in enumerate(rows)]


def rep_from_document(doc: dict):
    """Build the representation described by a ``cyclic_module`` or ``algebra`` document.

    Shape errors raise :class:`DocumentError`; invariant violations are left
    to :func:`~corank.quotient_rep.validate_rep`.
    """
    ring, X = ring_of(doc), alphabet_of(doc)
    kind = doc["kind"]
    try:
        if kind == "cyclic_module":
            reps = {b: poly(r, X, ring, f"representatives/{b}") for b, r in doc["representatives"].items()}
            action = {x: _matrix(m, ring, f"action/{x}") for x, m in doc["action"].items()}
            extra = sorted(set(action) - set(X.names))
            if extra:
                raise DocumentError([f"action: unknown variables {extra}"])
            rels = _matrix(doc.get("relations", []), ring, "relations")
            _check_widths(rels, len(doc["basis"]), "relations")
            return CyclicModuleRep(ring, X, doc["basis"], reps, rels, action)
        if kind == "algebra":
            sc = doc["structure_constants"]
            rank = len(sc)
            labels = doc.get("basis")
            marked = _matrix(doc.get("marked_submodule", []), ring, "marked_submodule")
            rels = _matrix(doc.get("relations", []), ring, "relations")
            _check_widths(marked, rank, "marked_submodule")
            _check_widths(rels, rank, "relations")
            images = {x: [_coerce(a, ring, f"images/{x}/{j}") for j, a in enumerate(v)] for x, v in doc["images"].items()}
            return AlgebraRep(ring, X, rank, sc, images, marked, rels, labels)
    except InvalidRepresentation as e:
        raise DocumentError(e.violations) from None
    raise DocumentError([f"kind {kind!r} does not describe a representation"])


def _check_widths(rows, width, where):
    for i, row in enumerate(rows):
        if len(row) != width:
            raise DocumentError([f"{where}/{i}: expected {width} entries, got {len(row)}"])


def extension_inputs(doc: dict):
    """``(X, r_gens, b_relations, known_relations, ring)`` from an ``extension`` document."""
    ring, X = ring_of(doc), alphabet_of(doc)
    names = [g["name"] for g in doc["generators"]]
    try:
        Y = Alphabet(names)
    except ValueError as e:
        raise DocumentError([f"generators: {e}"]) from None
    r_gens = [(g["name"], poly(g["witness"], X, ring, f"generators/{i}/witness")) for i, g in enumerate(doc["generators"])]
    rels = polys(doc.get("relations", []), Y, ring, "relations")
    known = polys(doc.get("known_relations", []), X, ring, "known_relations")
    return X, r_gens, rels, known, ring


def presentation_from_document(doc: dict, ring: Ring, x_alphabet: Alphabet) -> Presentation:
    """Read a presentation, either bare or inside a ``present`` result document."""
    if "outputs" in doc:
        doc = doc["outputs"].get("presentation")
        if doc is None:
            raise DocumentError(["result document carries no presentation"])
    errs = schema_errors(doc, PRESENTATION_SCHEMA)
    if errs:
        raise DocumentError(errs)
    try:
        Y = Alphabet([g["name"] for g in doc["generators"]])
    except ValueError as e:
        raise DocumentError([f"generators: {e}"]) from None
    witnesses = tuple(poly(g["witness"], x_alphabet, ring, f"generators/{i}/witness") for i, g in enumerate(doc["generators"]))
    relations = tuple(polys(doc["relations"], Y, ring, "relations"))
    return Presentation(Y, witnesses, relations)


# ---------------------------------------------------------------------------
# Writing
# ---------------------------------------------------------------------------

def _vec(v, ring):
    return [ring.to_json(a) for a in v]


def rep_to_document(rep, name: str | None = None, **extra) -> dict:
    """Inverse of :func:`rep_from_document` (representatives printed canonically)."""
    ring = rep.ring
    doc: dict = {}
    if name is not None:
        doc["name"] = name
    doc["ring"] = ring.descriptor()
    doc["variables"] = list(rep.alphabet.names)
    if isinstance(rep, CyclicModuleRep):
        doc["kind"] = "cyclic_module"
        doc["basis"] = list(rep.labels)
        doc["representatives"] = {b: str(rep.representatives[b]) for b in rep.labels[1:]}
        doc["relations"] = [_vec(v, ring) for v in rep.relations.basis]
        doc["action"] = {x: [_vec(row, ring) for row in rep.action[x]] for x in rep.alphabet.names}
    else:
        doc["kind"] = "algebra"
        doc["basis"] = list(rep.labels)
        doc["structure_constants"] = [[_vec(v, ring) for v in row] for row in rep.structure_constants]
        doc["images"] = {x: _vec(rep.images[x], ring) for x in rep.alphabet.names}
        doc["marked_submodule"] = [_vec(v, ring) for v in rep.marked_submodule.basis]
        doc["relations"] = [_vec(v, ring) for v in rep.relations.basis]
    doc.update(extra)
    return doc


def presentation_to_document(pres: Presentation) -> dict:
    return {
        "generators": [{"name": n, "witness": str(w)} for n, w in pres.generators],
        "relations": [str(r) for r in pres.relations],
        "stats": pres.stats(),
    }


def result_document(command: str, status: str, *, input_name=None, parameters=None, summary=None,
                    outputs=None, diagnostics=None) -> dict:
    if status not in STATUSES:
        raise ValueError(f"unknown status {status!r}")
    doc: dict = {"command": command, "input": input_name}
    if parameters is not None:
        doc["parameters"] = parameters
    doc["status"] = status
    if summary is not None:
        doc["summary"] = summary
    if outputs is not None:
        doc["outputs"] = outputs
    if diagnostics:
        doc["diagnostics"] = list(diagnostics)
    return doc


def _is_flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(a, (list, dict)) for a in v)


def _encode(v, indent: int) -> str:
    pad, inner = " " * indent, " " * (indent + 2)
    if isinstance(v, dict):
        if not v:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_encode(a, indent + 2)}" for k, a in v.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(v, list) and v and not _is_flat(v):
        items = [inner + _encode(a, indent + 2) for a in v]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if _is_flat(v) and any(isinstance(a, str) for a in v) and len(json.dumps(v)) > 80:
        items = [inner + json.dumps(a, ensure_ascii=False) for a in v]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(v, ensure_ascii=False, separators=(", ", ": "))


def dumps(doc: dict) -> str:
    """Two-space indented JSON with numeric rows kept on one line."""
    return _encode(doc, 0) + "\n"
