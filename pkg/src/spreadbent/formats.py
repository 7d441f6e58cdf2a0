"""Text file formats.

Function files (BFN1)::

    BFN1
    n=<n> m=<m|-> group=<o1,o2,...> modulus=<hex|-> pairing=<dot|trace> layout=xy
    <2^n decimal values, whitespace separated>

A value is the group element's mixed-radix index (first factor most
significant), so for a cyclic group it is the residue itself.  Layout ``xy``
means point index = x * 2^m + y.

Partition files (BPT1)::

    BPT1
    n=<n> m=<m> modulus=<hex> which=<name> k=<k|-> cells=<count> layout=xy
    <label>: <point indices of the cell>
    ...
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument
from .gf import make_field
from .groupfun import GroupFunction, GroupSpec

FUNCTION_TAG = "BFN1"
PARTITION_TAG = "BPT1"


@dataclass
class FunctionFile:
    function: GroupFunction
    m: int = None
    modulus: int = None
    pairing: str = "dot"
    layout: str = "xy"

    @property
    def n(self):
        return self.function.n

    def field(self):
        if self.m is None or self.modulus is None:
            raise InvalidArgument("file carries no field (m/modulus)")
        return make_field(self.m, self.modulus)

    def header(self):
        m = "-" if self.m is None else str(self.m)
        mod = "-" if self.modulus is None else f"{self.modulus:#x}"
        return (f"n={self.n} m={m} group={self.function.group.tag()} modulus={mod} "
                f"pairing={self.pairing} layout={self.layout}")


def _parse_header(line, tag):
    fields = {}
    for item in line.split():
        key, sep, value = item.partition("=")
        if not sep:
            raise InvalidArgument(f"malformed {tag} header item {item!r}")
        fields[key] = value
    return fields


def dumps_function(ff):
    idx = ff.function.indices()
    width = 1 << (ff.m if ff.m is not None and 2 * ff.m == ff.n else min(ff.n, 5))
    rows = [" ".join(str(int(v)) for v in idx[i:i + width]) for i in range(0, idx.size, width)]
    return "\n".join([FUNCTION_TAG, ff.header()] + rows) + "\n"


def loads_function(text):
    lines = text.splitlines()
    if len(lines) < 2 or lines[0].strip() != FUNCTION_TAG:
        raise InvalidArgument(f"not a {FUNCTION_TAG} file")
    h = _parse_header(lines[1], FUNCTION_TAG)
    for key in ("n", "m", "group", "modulus", "pairing", "layout"):
        if key not in h:
            raise InvalidArgument(f"header lacks {key}=")
    n = int(h["n"])
    group = GroupSpec(tuple(int(o) for o in h["group"].split(",")))
    values = np.array(" ".join(lines[2:]).split(), dtype=np.int64)
    if values.size != 1 << n:
        raise InvalidArgument(f"expected {1 << n} values, found {values.size}")
    if np.any(values < 0) or np.any(values >= group.size):
        raise InvalidArgument("value out of range for the group")
    if h["pairing"] not in ("dot", "trace"):
        raise InvalidArgument(f"unknown pairing {h['pairing']!r}")
    if h["layout"] != "xy":
        raise InvalidArgument(f"unknown layout {h['layout']!r}")
    m = None if h["m"] == "-" else int(h["m"])
    modulus = None if h["modulus"] == "-" else int(h["modulus"], 16)
    return FunctionFile(GroupFunction.from_indices(n, group, values), m, modulus, h["pairing"], h["layout"])


def write_function(path, ff):
    with open(path, "w") as fh:
        fh.write(dumps_function(ff))


def read_function(path):
    with open(path) as fh:
        return loads_function(fh.read())


def dumps_partition(part, field, which, k=None):
    head = (f"n={part.n} m={field.m} modulus={field.modulus:#x} which={which} "
            f"k={'-' if k is None else k} cells={len(part)} layout=xy")
    rows = [f"{lab}: " + " ".join(str(int(i)) for i in cell) for lab, cell in zip(part.labels, part.cells)]
    return "\n".join([PARTITION_TAG, head] + rows) + "\n"


def loads_partition(text):
    """(header dict, list of (label string, index array))."""
    lines = text.splitlines()
    if len(lines) < 2 or lines[0].strip() != PARTITION_TAG:
        raise InvalidArgument(f"not a {PARTITION_TAG} file")
    h = _parse_header(lines[1], PARTITION_TAG)
    cells = []
    for line in lines[2:]:
        lab, _, rest = line.partition(":")
        cells.append((lab.strip(), np.array(rest.split(), dtype=np.int64)))
    return h, cells
