"""JSON Schemas for the CLI's ``--format json`` documents."""

_HEX = {"type": "string", "pattern": "^0x[0-9A-F]+$"}

_ENVELOPE = {
    "command": {"type": "string"},
    "field": {"type": "string"},
    "discrepancies": {"type": "array", "items": {"type": "string"}},
    "elapsed_ms": {"type": "number"},
}

SPECTRUM = {
    "type": "object",
    "required": ["command", "field", "m", "d", "spectrum", "delta_f", "cross_checked", "discrepancies"],
    "properties": {
        **_ENVELOPE,
        "m": {"type": "integer", "minimum": 1},
        "d": {"type": "integer", "minimum": 0},
        "spectrum": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [{"type": "integer", "minimum": 0}, {"type": "integer", "minimum": 1}],
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "delta_f": {"type": "integer"},
        "cross_checked": {"type": "boolean"},
        "note": {"type": "string"},
    },
}

SOLVE = {
    "type": "object",
    "required": ["command", "field", "b", "class", "predicted_count", "solutions", "method", "discrepancies"],
    "properties": {
        **_ENVELOPE,
        "b": _HEX,
        "class": {"enum": ["ONE", "MU_Q1_NOT_ONE", "LAMBDA", "NONE"]},
        "predicted_count": {"type": "integer", "minimum": 0},
        "solutions": {"type": "array", "items": _HEX},
        "method": {"enum": ["BRUTE", "CLOSED_CONSTRUCTIVE"]},
    },
}

LAMBDA = {
    "type": "object",
    "required": ["command", "field", "size", "enumerated", "discrepancies"],
    "properties": {
        **_ENVELOPE,
        "size": {"type": "integer"},
        "enumerated": {"type": "boolean"},
        "scanned_size": {"type": "integer"},
        "elements": {"type": "array", "items": _HEX},
    },
}

DECOMPOSE = {
    "type": "object",
    "required": ["command", "field", "x", "components", "orders", "recomposed", "discrepancies"],
    "properties": {
        **_ENVELOPE,
        "x": _HEX,
        "components": {"type": "array", "items": _HEX, "minItems": 3, "maxItems": 3},
        "orders": {"type": "array", "items": {"type": "integer"}},
        "subgroups": {"type": "array", "items": {"type": "integer"}},
        "recomposed": _HEX,
        "recompose_ok": {"type": "boolean"},
    },
}

VERIFY = {
    "type": "object",
    "required": ["command", "field", "n", "q", "mutated", "suites", "discrepancies"],
    "properties": {
        **_ENVELOPE,
        "n": {"type": "integer"},
        "q": {"type": "integer"},
        "mutated": {"type": "boolean"},
        "suites": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "passed", "failures"],
                "properties": {
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "failures": {"type": "integer", "minimum": 0},
                },
            },
        },
    },
}

BY_COMMAND = {
    "spectrum": SPECTRUM,
    "solve": SOLVE,
    "lambda": LAMBDA,
    "decompose": DECOMPOSE,
    "verify": VERIFY,
}
