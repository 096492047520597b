"""Command-line surface: every subcommand reads a document via --input.

Exit codes: 0 on success, 1 on validation failure, 2 when an internal exact
check fails (d^2 != 0, a pairing case with nonzero residual).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path as FsPath

from . import completion, hochschild, io_doc, mutation, ncgeom
from .dg import check_d_squared
from .errors import CyforgeError, D2Failure, ValidationError
from .potential import connes_B


def _read(path: str) -> str:
    try:
        return FsPath(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None


def _load_qp(args) -> mutation.QuiverWithPotential:
    return io_doc.parse_qp(_read(args.input))


def cmd_ginzburg(args) -> int:
    qp = _load_qp(args)
    Wdef = None
    if args.deform:
        deform_qp = io_doc.parse_qp(_read(args.deform))
        if deform_qp.quiver != qp.quiver:
            raise ValidationError("--deform document must share the input quiver")
        Wdef = deform_qp.W
    if Wdef is not None and not Wdef.is_zero:
        W = qp.W + Wdef
    else:
        W = qp.W
    G = completion.ginzburg(qp.quiver, W, args.n)
    sys.stdout.write(io_doc.emit_dg(G.algebra, extra={"n": args.n}))
    return 0


def cmd_check_d2(args) -> int:
    algebra = io_doc.parse_dg(_read(args.input))
    report = check_d_squared(algebra)
    if report.passed:
        print(f"d^2 = 0 on {report.generator_count} generators")
        return 0
    for name, residual in report.failures:
        print(f"d^2 != 0 at {name}: {residual!r}")
    return 2


def cmd_jacobian(args) -> int:
    qp = _load_qp(args)
    G = completion.ginzburg(qp.quiver, qp.W, 3)
    q = completion.jacobian_quotient(G, args.max_len)
    print("length\tdim")
    for length, dim in enumerate(q.dims):
        print(f"{length}\t{dim}")
    print(f"total\t{q.total_dimension}")
    print(f"stabilized\t{str(q.stabilized).lower()}")
    return 0


def cmd_mutate(args) -> int:
    qp = _load_qp(args)
    result = mutation.premutate(qp, args.vertex)
    if args.reduce:
        result, _ = mutation.reduce_trivial(result)
    sys.stdout.write(io_doc.emit_qp(result))
    return 0


def cmd_delete_vertex(args) -> int:
    qp = _load_qp(args)
    sys.stdout.write(io_doc.emit_qp(mutation.delete_vertex(qp, args.vertex)))
    return 0


def _print_dim_table(rows, labels: tuple[str, str]) -> None:
    print(f"length\t{labels[0]}\t{labels[1]}")
    for length, (d0, d1) in enumerate(rows):
        print(f"{length}\t{d0}\t{d1}")


def cmd_hh(args) -> int:
    qp = _load_qp(args)
    _print_dim_table(hochschild.hh_dims(qp.quiver, args.max_len), ("hh0", "hh1"))
    return 0


def cmd_hc(args) -> int:
    qp = _load_qp(args)
    _print_dim_table(hochschild.hc_dims(qp.quiver, args.max_len), ("hc0", "hc1"))
    return 0


def cmd_connes_b(args) -> int:
    qp = _load_qp(args)
    chain = connes_B(qp.W)
    print("arrow\tpath\tcoef")
    for arrow, tail, coeff in chain.entries:
        word = "" if tail.is_trivial else ".".join(a.name for a in tail.arrows)
        print(f"{arrow.name}\t{word}\t{coeff}")
    return 0


def cmd_cy_check(args) -> int:
    qp = _load_qp(args)
    report = ncgeom.check_pairing_compat(qp.quiver, qp.W)
    for n in range(1, 7):
        case = report.case(n)
        status = "pass" if case.passed else "FAIL"
        print(f"case {n}: {status} ({case.pairs_checked} pairs)")
    nondeg = ncgeom.check_nondegenerate(qp.quiver, qp.W)
    print(f"nondegenerate: {'pass' if nondeg.passed else 'FAIL'}")
    return 0 if report.passed and nondeg.passed else 2


def cmd_ainfty(args) -> int:
    qp = _load_qp(args)
    G = completion.ginzburg(qp.quiver, qp.W, 3)
    table = ncgeom.ext_ainfty(G)
    print("arity\tgenerator\tcoef\tword")
    for arity in table.arities():
        for arrow in G.quiver.arrows:
            for coeff, word in table.entry(arity, arrow.name):
                print(f"{arity}\t{arrow.name}\t{coeff}\t{'.'.join(word)}")
    return 0


def cmd_export_dot(args) -> int:
    sys.stdout.write(io_doc.export_dot(_load_qp(args)))
    return 0


def cmd_serve(args) -> int:
    from .server import serve

    serve(args.port, state_dir=args.state_dir)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyforge")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn):
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="QP document path")
        p.set_defaults(fn=fn)
        return p

    p = add("ginzburg", cmd_ginzburg)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--deform", default=None)
    add("check-d2", cmd_check_d2)
    p = add("jacobian", cmd_jacobian)
    p.add_argument("--max-len", type=int, required=True)
    p = add("mutate", cmd_mutate)
    p.add_argument("--vertex", required=True)
    p.add_argument("--reduce", action="store_true")
    p = add("delete-vertex", cmd_delete_vertex)
    p.add_argument("--vertex", required=True)
    p = add("hh", cmd_hh)
    p.add_argument("--max-len", type=int, required=True)
    p = add("hc", cmd_hc)
    p.add_argument("--max-len", type=int, required=True)
    add("connes-b", cmd_connes_b)
    add("cy-check", cmd_cy_check)
    add("ainfty", cmd_ainfty)
    add("export-dot", cmd_export_dot)
    serve_p = sub.add_parser("serve")
    serve_p.add_argument("--port", type=int, required=True)
    serve_p.add_argument("--state-dir", default=None)
    serve_p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except D2Failure as exc:
        print(f"internal check failure: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CyforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
