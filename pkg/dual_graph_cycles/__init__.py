LIMITS = {"subcycles": 10 ** 6, "box": 10 ** 4, "enumeration_vertices": 8, "min_special_weight": -6}
VERDICTS = {"pass", "fail", "not-applicable"}
