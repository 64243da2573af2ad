"""JSON schema for classification reports emitted by the CLI."""

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "bundle classification report",
    "type": "object",
    "required": ["input", "s_set", "presentation", "krull_dim", "group", "correspondence"],
    "additionalProperties": False,
    "properties": {
        "input": {
            "type": "object",
            "oneOf": [
                {
                    "required": ["rank", "torsion"],
                    "additionalProperties": False,
                    "properties": {
                        "rank": {"type": "integer", "minimum": 1},
                        "torsion": {"type": "integer", "minimum": 0},
                    },
                },
                {
                    "required": ["degrees"],
                    "additionalProperties": False,
                    "properties": {
                        "degrees": {
                            "type": "array",
                            "minItems": 1,
                            "items": {"type": "integer"},
                        },
                    },
                },
            ],
        },
        "s_set": {
            "type": "object",
            "required": ["finite", "families"],
            "additionalProperties": False,
            "properties": {
                "finite": {"type": "array", "items": {"type": "string"}},
                "families": {"type": "array", "items": {"type": "string"}},
            },
        },
        "presentation": {
            "type": "object",
            "required": ["kind", "modulus", "generators"],
            "additionalProperties": False,
            "properties": {
                "kind": {
                    "enum": [
                        "point",
                        "cyclotomic",
                        "poly",
                        "laurent",
                        "laurent_poly",
                        "cyclotomic_poly",
                    ]
                },
                "modulus": {"type": ["integer", "null"], "minimum": 1},
                "generators": {"type": "array", "items": {"type": "string"}},
            },
        },
        "krull_dim": {"type": "integer", "minimum": 0},
        "group": {
            "type": "object",
            "required": ["factors", "dim"],
            "additionalProperties": False,
            "properties": {
                "factors": {"type": "array", "items": {"type": "string"}},
                "dim": {"type": "integer", "minimum": 0},
            },
        },
        "correspondence": {"type": "boolean"},
        "minimality_note": {"type": ["string", "null"]},
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}
