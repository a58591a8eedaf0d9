"""JSON schemas for command reports.

Every report shares one envelope; ``payload`` has a per-command schema.
"""

from __future__ import annotations

SCHEMA_VERSION = "1.0"

_vertices = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_hexform = {"type": "string", "pattern": "^[0-9]+:[0-9a-f]+$"}
_fraction = {"type": "string", "pattern": "^-?[0-9]+(\\.[0-9]+)?(/[0-9]+)?$"}

ENVELOPE = {
    "type": "object",
    "required": ["schema_version", "command", "status", "findings", "payload"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"type": "array", "items": {"type": "string"}},
        "status": {"enum": ["pass", "fail"]},
        "findings": {"type": "integer", "minimum": 0},
        "payload": {"type": "object"},
    },
}

PAYLOADS = {
    "catalog list": {
        "type": "object", "required": ["ids"],
        "properties": {"ids": {"type": "array", "items": {"type": "string"}}},
    },
    "catalog show": {
        "type": "object", "required": ["id", "n", "labels", "scores", "orientation", "adjacency", "trn"],
        "properties": {
            "id": {"type": "string"}, "n": {"type": "integer"},
            "labels": {"type": "array", "items": {"type": "string"}},
            "scores": _vertices,
            "orientation": {"type": "string", "pattern": "^[01]*$"},
            "adjacency": {"type": "array", "items": {"type": "string", "pattern": "^[01]+$"}},
            "trn": {"type": "string"},
        },
    },
    "catalog verify": {
        "type": "object", "required": ["checks", "orderings", "corrections", "passed"],
        "properties": {
            "checks": {"type": "array", "items": {
                "type": "object", "required": ["claim", "ok"],
                "properties": {"claim": {"type": "string"}, "ok": {"type": "boolean"}}}},
            "orderings": {"type": "array", "items": {
                "type": "object",
                "required": ["target", "label", "group", "theta", "backward_count", "consistent", "isomorphic"],
                "properties": {"isomorphic": {"type": "boolean"}, "consistent": {"type": "boolean"}}}},
            "corrections": {"type": "array", "items": {
                "type": "object", "required": ["where", "printed", "used", "reason"]}},
            "self_complementary": {"type": "object"},
            "symmetric_pairs": {"type": "object"},
            "passed": {"type": "boolean"},
        },
    },
    "landscape run": {
        "type": "object",
        "required": ["classes", "coverage", "flag_counts", "overlap", "residual_count", "residuals",
                     "constellation_cases", "unexplained_residuals", "regular", "records"],
        "properties": {
            "classes": {"type": "integer"},
            "coverage": {"type": "boolean"},
            "flag_counts": {"type": "object", "additionalProperties": {"type": "integer"}},
            "overlap": {"type": "object"},
            "residual_count": {"type": "integer"},
            "residuals": {"type": "array", "items": {
                "type": "object", "required": ["form", "degree_profile", "prime", "galaxy", "k6_l1_l2_free"],
                "properties": {"form": _hexform}}},
            "constellation_cases": {"type": "array", "items": {
                "type": "object", "required": ["case", "form", "complement_form", "star_ordering",
                                               "galaxy_ordering", "prime", "galaxy"],
                "properties": {"form": _hexform, "complement_form": _hexform}}},
            "unexplained_residuals": {"type": "array", "items": _hexform},
            "regular": {"type": "object", "required": ["count", "matches", "ok"]},
            "records": {"type": "array", "items": {
                "type": "object", "required": ["form", "flags", "prime", "degree_profile"],
                "properties": {"form": _hexform,
                               "flags": {"type": "object", "additionalProperties": {"type": "boolean"}}}}},
        },
    },
    "landscape counts": {
        "type": "object", "required": ["counts"],
        "properties": {"counts": {"type": "object", "additionalProperties": {"type": "integer"}}},
    },
    "tr": {
        "type": "object", "required": ["n", "tr", "witness", "exact", "upper_bound"],
        "properties": {"n": {"type": "integer"}, "tr": {"type": "integer"}, "witness": _vertices,
                       "exact": {"type": "boolean"}, "upper_bound": {"type": "integer"}},
    },
    "contains": {
        "type": "object", "required": ["contains", "witness"],
        "properties": {"contains": {"type": "boolean"},
                       "witness": {"oneOf": [_vertices, {"type": "null"}]}},
    },
    "galaxy": {
        "type": "object", "required": ["galaxy", "ordering"],
        "properties": {"galaxy": {"type": "boolean"},
                       "ordering": {"oneOf": [_vertices, {"type": "null"}]},
                       "backward_arcs": {"type": "array"}},
    },
    "backward": {
        "type": "object", "required": ["theta", "backward_arcs", "star", "galaxy"],
        "properties": {"theta": _vertices, "backward_arcs": {"type": "array", "items": _vertices},
                       "star": {"type": "boolean"}, "galaxy": {"type": "boolean"}},
    },
    "prime": {
        "type": "object", "required": ["prime", "homogeneous_sets"],
        "properties": {"prime": {"type": "boolean"},
                       "homogeneous_sets": {"type": "array", "items": _vertices}},
    },
    "smooth": {
        "type": "object", "required": ["valid", "tr", "violations"],
        "properties": {
            "valid": {"type": "boolean"}, "tr": {"type": "integer"},
            "violations": {"type": "array", "items": {"type": "object", "required": ["clause"]}},
            "intersection": {"type": "object",
                             "properties": {"gamma": _fraction, "bound": _fraction,
                                            "holds": {"type": "boolean"}}},
        },
    },
    "search": {
        "type": "object", "required": ["n", "tr", "free_certificate", "orientation", "trace"],
        "properties": {"n": {"type": "integer"}, "tr": {"type": "integer"},
                       "free_certificate": {"type": "boolean"},
                       "orientation": {"type": "string", "pattern": "^[01]*$"},
                       "trace": {"type": "array"}},
    },
    "ramsey": {
        "type": "object", "required": ["k", "n", "classes", "holds", "min_tr"],
        "properties": {"k": {"type": "integer"}, "n": {"type": "integer"},
                       "classes": {"type": "integer"}, "holds": {"type": "boolean"},
                       "min_tr": {"type": "integer"},
                       "counterexample": {"oneOf": [{"type": "string"}, {"type": "null"}]}},
    },
}

SMOOTH_SPEC = {
    "type": "object",
    "required": ["c", "lambda", "w", "sets"],
    "properties": {
        "c": _fraction, "lambda": _fraction,
        "w": {"type": "array", "items": {"enum": [0, 1]}},
        "sets": {"type": "array", "items": _vertices},
    },
}


def report_schema(key: str) -> dict:
    """Envelope schema with the payload schema for ``key`` plugged in."""
    schema = dict(ENVELOPE)
    schema["properties"] = dict(ENVELOPE["properties"], payload=PAYLOADS[key])
    return schema
