VECTOR = {
    "type": "object",
    "required": ["terms"],
    "properties": {
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["key", "coeff"],
                "properties": {
                    "key": {"type": "string", "pattern": r"^\d+:[\d,]*/[\d,]*$"},
                    "coeff": {"type": "string", "pattern": r"^-?\d+/\d+$"},
                },
            },
        }
    },
}

DESSIN = {
    "type": "object",
    "required": ["edges", "sigma0", "sigma1"],
    "properties": {
        "edges": {"type": "integer", "minimum": 0},
        "sigma0": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "sigma1": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
}

REPORT = {
    "type": "object",
    "required": ["window", "level", "dim", "rank_dessin", "rank_belyi_inner", "belyi_in_dessin",
                 "dessin_in_belyi_inner", "stable_at_prev_window", "witnesses"],
    "properties": {
        "window": {"type": "integer", "minimum": 0},
        "level": {"type": "integer", "minimum": 1},
        "dim": {"type": "integer", "minimum": 0},
        "rank_dessin": {"type": "integer", "minimum": 0},
        "rank_belyi_inner": {"type": "integer", "minimum": 0},
        "belyi_in_dessin": {"type": "boolean"},
        "dessin_in_belyi_inner": {"type": "boolean"},
        "stable_at_prev_window": {"type": "boolean"},
        "witnesses": {"type": "array", "maxItems": 5, "items": VECTOR},
    },
}
