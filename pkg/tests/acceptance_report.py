"""Collects one verdict line per acceptance criterion for the terminal summary."""

RESULTS = {}


def record(name, passed, detail):
    line = f"{name} {'PASS' if passed else 'FAIL'}: {detail}"
    RESULTS[name] = line
    print(line)
    return passed
