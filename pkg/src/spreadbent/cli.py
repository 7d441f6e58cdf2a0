"""Command-line front end: ``bent construct | verify | analyze | partition``.

Exit codes: 0 success or verified true, 1 verified false, 2 usage or
precondition error.
"""

import argparse
import sys

from . import analyze as an
from . import construct as cs
from .boolfun import TruthTable, algebraic_degree, dot_pairing, is_bent, trace_pairing
from .errors import BentError, NotBentError
from .formats import FunctionFile, dumps_partition, read_function, write_function
from .gf import make_field
from .groupfun import (GroupFunction, GroupSpec, affine_space_check, components, first_failure,
                       is_generalized_bent, is_group_bent, is_vectorial_bent, vector_components)
from .spread import desarguesian, gamma_partition

OK, FALSE, USAGE = 0, 1, 2

KINDS = ("f1", "f2", "fa", "fb", "psap", "cons1", "cons2", "carlet-g", "carlet-gstar", "mm")
MODES = ("boolean", "gbent", "zbent", "group", "vectorial")
PARTITIONS = ("desarguesian", "gamma1", "gamma2")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int(text):
    """Decimal or 0x-prefixed integer."""
    return int(text, 0)


def _int_list(text):
    return [_int(t) for t in text.replace(",", " ").split()]


def _orders(text):
    return GroupSpec(tuple(int(t) for t in text.split(",")))


def build_parser():
    p = _Parser(prog="bent", description="Bent and group-bent function workbench.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build a function and write it to a file")
    c.add_argument("--kind", required=True, choices=KINDS)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--k", type=int)
    c.add_argument("--modulus", type=_int, help="field modulus, e.g. 0x43")
    c.add_argument("--pi", type=_int_list, help="fa/fb: label order, a permutation of 0..2^k-1 "
                                                 "indexing the subfield span")
    c.add_argument("--u-label", type=_int, default=0, help="fa/fb: group index for the U (V) cell")
    c.add_argument("--group", type=_orders, help="cyclic orders, e.g. 2,2 (fa, fb, cons1, cons2)")
    c.add_argument("--subset", type=_int_list, help="psap: subfield labels")
    c.add_argument("--include-hyper", action="store_true")
    c.add_argument("--variant", choices=("I", "II"), default="I", help="psap variant")
    c.add_argument("--beta", type=_int, nargs="+", help="mm: one element; carlet: three")
    c.add_argument("--exponent", type=_int, help="mm exponent (default d)")
    c.add_argument("--pairing", choices=("dot", "trace"), default="trace", help="pairing tag to record")
    c.add_argument("--out", required=True)

    v = sub.add_parser("verify", help="check a function file")
    v.add_argument("--mode", required=True, choices=MODES)
    v.add_argument("--pairing", choices=("dot", "trace"), help="defaults to the file's tag")
    v.add_argument("file")

    a = sub.add_parser("analyze", help="analyses and cross-checks")
    asub = a.add_subparsers(dest="analysis", required=True, parser_class=_Parser)
    t = asub.add_parser("table1")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--allow-zero", action="store_true", help="admit a zero among b0, b1, b2")
    o = asub.add_parser("omega")
    o.add_argument("--m", type=int, required=True)
    o.add_argument("--k", type=int, required=True)
    o.add_argument("--modulus", type=_int)
    d = asub.add_parser("degree")
    d.add_argument("file")
    co = asub.add_parser("constant-on")
    co.add_argument("--partition", required=True, choices=PARTITIONS)
    co.add_argument("--k", type=int, help="subfield degree for gamma1/gamma2")
    co.add_argument("--split", action="store_true", help="keep U (V) as a separate cell")
    co.add_argument("file")
    td = asub.add_parser("triple-dual")
    td.add_argument("--pairing", choices=("dot", "trace"), help="defaults to the first file's tag")
    td.add_argument("files", nargs=3)

    pa = sub.add_parser("partition", help="write a partition file")
    pa.add_argument("--which", required=True, choices=PARTITIONS)
    pa.add_argument("--m", type=int, required=True)
    pa.add_argument("--k", type=int)
    pa.add_argument("--modulus", type=_int)
    pa.add_argument("--split", action="store_true")
    pa.add_argument("--out", required=True)
    return p


# ---------- construct

def _need_k(args):
    if args.k is None:
        raise UsageError(f"--k is required for {args.kind}")
    return args.k


def _construct(args, out):
    field = make_field(args.m, args.modulus)
    kind = args.kind
    if kind in ("f1", "f2"):
        f = cs.theorem_main(field, _need_k(args), kind)
    elif kind in ("fa", "fb"):
        k = _need_k(args)
        pi = None
        if args.pi is not None:
            span = cs.default_pi(field, k)
            if sorted(args.pi) != list(range(len(span))):
                raise UsageError(f"--pi must permute 0..{len(span) - 1}")
            pi = [span[i] for i in args.pi]
        f = cs.partition_bent(field, k, "fA" if kind == "fa" else "fB", pi, args.group,
                              _group_element(args.group or GroupSpec.cyclic(k), args.u_label))
    elif kind == "psap":
        k = _need_k(args)
        if args.subset is None:
            raise UsageError("--subset is required for psap")
        f = GroupFunction.from_truth_table(cs.psap(field, k, args.subset, args.include_hyper, args.variant))
    elif kind in ("cons1", "cons2"):
        group = args.group or GroupSpec.cyclic(args.k or 1)
        f = cs.spread_construction(desarguesian(field), group, "I" if kind == "cons1" else "II")
    elif kind in ("carlet-g", "carlet-gstar"):
        if not args.beta or len(args.beta) != 3:
            raise UsageError("carlet needs --beta b0 b1 b2")
        which = "g" if kind == "carlet-g" else "g_star"
        f = GroupFunction.from_truth_table(cs.carlet(field, _need_k(args), args.beta, which))
    else:
        if not args.beta or len(args.beta) != 1:
            raise UsageError("mm needs exactly one --beta")
        exponent = args.exponent
        if exponent is None:
            exponent = cs.exponent_pair(args.m, _need_k(args)).d
        f = GroupFunction.from_truth_table(cs.mm(field, args.beta[0], exponent))
    write_function(args.out, FunctionFile(f, field.m, field.modulus, args.pairing))
    print(f"wrote {args.out}: kind={kind} n={f.n} group={f.group.tag()}", file=out)
    return OK


def _group_element(group, index):
    if not 0 <= index < group.size:
        raise UsageError(f"--u-label must lie in 0..{group.size - 1}")
    return group.element(index)


# ---------- verify

def _pairing(ff, name):
    name = name or ff.pairing
    if name == "dot":
        return dot_pairing(ff.n)
    field = ff.field()
    if 2 * field.m != ff.n:
        raise UsageError("trace pairing needs n = 2m")
    return trace_pairing(field)


def _as_table(ff):
    f = ff.function
    if f.group.size != 2:
        raise UsageError(f"expected a Boolean function, file has group {f.group.tag()}")
    return TruthTable(f.indices(), f.n)


def _verify(args, out):
    ff = read_function(args.file)
    f = ff.function
    p = _pairing(ff, args.pairing)
    mode = args.mode
    detail = ""
    if mode == "boolean":
        verdict = is_bent(_as_table(ff), p)
    elif mode == "gbent":
        if not f.group.is_cyclic:
            raise UsageError("gbent needs a cyclic group")
        verdict = is_generalized_bent(f, p)
    elif mode == "zbent":
        if not f.group.is_cyclic:
            raise UsageError("zbent needs a cyclic group")
        verdict = is_group_bent(f, p)
        if f.group.size > 2:
            check = affine_space_check(f, p)
            detail = f" affine-spaces={'pass' if check.verdict else 'fail'}"
            if check.witness is not None:
                detail += f" witness=[{check.witness}]"
    elif mode == "group":
        verdict = is_group_bent(f, p)
    else:
        if not f.group.is_elementary:
            raise UsageError("vectorial needs B = Z_2^k")
        verdict = is_vectorial_bent(f, p)
    if not verdict and mode != "boolean":
        fail = first_failure(f, p, [(1,)] if mode == "gbent" else None)
        if fail is not None:
            detail += f" first-failure=character:{fail[0]},b:{fail[1]}"
    print(f"mode={mode} pairing={p.tag} group={f.group.tag()} n={f.n} "
          f"verdict={'true' if verdict else 'false'}{detail}", file=out)
    return OK if verdict else FALSE


# ---------- analyze

def _analyze(args, out):
    name = args.analysis
    if name == "table1":
        res = an.table1(args.n, args.allow_zero)
        print(f"n={args.n}", file=out)
        print("fulfilling: " + " ".join(map(str, sorted(res.fulfilled))), file=out)
        print("not fulfilling: " + " ".join(map(str, sorted(res.not_fulfilled))), file=out)
        return OK
    if name == "omega":
        field = make_field(args.m, args.modulus)
        status = OK
        for variant in ("omega", "upsilon"):
            total = bad = 0
            for u, v, g, brute, closed in an.omega_upsilon_sweep(field, args.k, variant):
                total += 1
                if brute != closed:
                    bad += 1
                    if bad == 1:
                        print(f"{variant} mismatch u={u} v={v} gamma={g}: {brute} != {closed}", file=out)
            print(f"{variant}: {total} cases, {bad} mismatches", file=out)
            status = status if bad == 0 else FALSE
        return status
    if name == "degree":
        ff = read_function(args.file)
        f = ff.function
        if f.group.is_cyclic:
            comps = components(f)
        elif f.group.is_elementary:
            comps = vector_components(f)
        else:
            raise UsageError("degree needs a cyclic or elementary abelian group")
        degs = [algebraic_degree(c) for c in comps]
        print("component degrees: " + " ".join(map(str, degs)), file=out)
        return OK
    if name == "constant-on":
        ff = read_function(args.file)
        field = ff.field()
        if args.partition == "desarguesian":
            cells = [c[c != 0] for c in desarguesian(field).cells]
        else:
            if args.k is None:
                raise UsageError("--k is required for gamma partitions")
            cells = gamma_partition(field, args.k, args.partition, args.split).cells
        verdict = an.constant_on(ff.function, cells)
        print(f"constant-on {args.partition}: {'true' if verdict else 'false'}", file=out)
        return OK if verdict else FALSE
    files = [read_function(path) for path in args.files]
    tables = [_as_table(ff) for ff in files]
    p = _pairing(files[0], args.pairing)
    try:
        verdict = an.triple_dual_check(*tables, p=p)
    except NotBentError as exc:
        print(f"triple-dual: not applicable: {exc}", file=out)
        return USAGE
    print(f"triple-dual: {'true' if verdict else 'false'}", file=out)
    return OK if verdict else FALSE


# ---------- partition

def _partition(args, out):
    field = make_field(args.m, args.modulus)
    if args.which == "desarguesian":
        part = desarguesian(field)
    else:
        if args.k is None:
            raise UsageError("--k is required for gamma partitions")
        part = gamma_partition(field, args.k, args.which, args.split)
    with open(args.out, "w") as fh:
        fh.write(dumps_partition(part, field, args.which, args.k))
    print(f"wrote {args.out}: {args.which} cells={len(part)} sizes={' '.join(map(str, part.sizes()))}", file=out)
    return OK


HANDLERS = {"construct": _construct, "verify": _verify, "analyze": _analyze, "partition": _partition}


def run(argv=None, out=None, err=None):
    """Execute one command; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return HANDLERS[args.command](args, out)
    except UsageError as exc:
        print(f"bent: usage error: {exc}", file=err)
    except (BentError, OSError) as exc:
        print(f"bent: error: {exc}", file=err)
    return USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
