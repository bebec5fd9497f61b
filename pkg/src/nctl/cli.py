"""
Command-line entry point: ``nctl COMMAND [--n N] [--cycle 1,3,4,2 | --word 2,1,3] [--format ...]``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys
from typing import Optional, Sequence

from . import serialize
from .braid import lift_standard_form
from .coxeter import StandardCoxeterElement, from_cycle, from_word, linear_coxeter
from .stdform import extract_w, linear_extension, standard_form, vertical_vector
from .tables import TABLE_HEADER, bijection_table, hasse_dot, hasse_json
from .tl import base_change, check_triangular
from .verify import run_all

COMMANDS = ("enumerate", "tables", "stdforms", "basechange", "hasse", "verify")
FORMATS = ("text", "json", "csv", "dot")
N_CAPS = {"enumerate": 8, "tables": 8, "stdforms": 8, "hasse": 8, "basechange": 6}
DEFAULT_N = 3


class UsageError(Exception):
    pass


@dataclasses.dataclass
class RunConfig:
    command: str
    n: int = DEFAULT_N
    coxeter: Optional[StandardCoxeterElement] = None
    fmt: str = "text"
    out: Optional[str] = None
    max_n_verify: Optional[int] = None

    def __post_init__(self):
        if self.n < 1:
            raise UsageError("--n must be at least 1")
        if self.max_n_verify is not None and self.max_n_verify < 1:
            raise UsageError("--max-n-verify must be at least 1")
        if self.coxeter is None:
            self.coxeter = linear_coxeter(self.n)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    parser = argparse.ArgumentParser(prog="nctl", description="Noncrossing partitions and Temperley-Lieb base change.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--n", type=int, default=None, help="rank n, working in S_{n+1} (default 3)")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--cycle", help="Coxeter element as a cycle, e.g. 1,3,4,2")
    group.add_argument("--word", help="Coxeter element as a word in s_1..s_n, e.g. 2,1,3")
    parser.add_argument("--format", dest="fmt", choices=FORMATS, default=None)
    parser.add_argument("--out", help="output file (default stdout)")
    parser.add_argument("--max-n-verify", type=int, default=None, help="cap on n for every verification check")
    args = parser.parse_args(argv)

    n = args.n
    coxeter = None
    try:
        if args.cycle:
            coxeter = from_cycle(_int_list(args.cycle))
        elif args.word:
            word = _int_list(args.word)
            coxeter = from_word(n if n is not None else len(word), word)
    except ValueError as exc:
        raise UsageError(str(exc))
    if coxeter is not None:
        if n is not None and n != coxeter.n:
            raise UsageError(f"--n {n} does not match the Coxeter element, which has n={coxeter.n}")
        n = coxeter.n
    fmt = args.fmt or ("dot" if args.command == "hasse" else "text")
    cfg = RunConfig(args.command, DEFAULT_N if n is None else n, coxeter, fmt, args.out, args.max_n_verify)
    cap = N_CAPS.get(cfg.command)
    if cap is not None and cfg.n > cap:
        raise UsageError(f"{cfg.command} is limited to n <= {cap}")
    allowed = {
        "enumerate": ("text", "json", "csv"),
        "tables": ("text", "json", "csv"),
        "stdforms": ("text", "json", "csv"),
        "basechange": ("text", "json", "csv"),
        "hasse": ("dot", "json"),
        "verify": ("text", "json"),
    }[cfg.command]
    if cfg.fmt not in allowed:
        raise UsageError(f"{cfg.command} supports --format {', '.join(allowed)}")
    return cfg


def _text_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(r[k]) for r in [header] + rows) for k in range(len(header))]
    fmt = lambda r: " | ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip()
    sep = "-+-".join("-" * w for w in widths)
    return "\n".join([fmt(header), sep] + [fmt(r) for r in rows]) + "\n"


def cmd_enumerate(cfg: RunConfig) -> tuple[str, int]:
    c = cfg.coxeter
    elems = linear_extension(c)
    if cfg.fmt == "json":
        data = {
            "n": c.n,
            "c": list(c.cycle_seq),
            "elements": [
                {"cycles": [list(cy) for cy in x.perm.cycles()], "images": list(x.perm.images), "vector": list(vertical_vector(x))}
                for x in elems
            ],
        }
        serialize.validate("enumerate", data)
        return serialize.dumps(data), 0
    rows = [[str(x), " ".join(map(str, x.perm.images)), ",".join(map(str, vertical_vector(x)))] for x in elems]
    header = ["x", "one-line", "vertical vector"]
    if cfg.fmt == "csv":
        return serialize.to_csv([header] + rows), 0
    return f"NC(S_{c.size}, c={c}): {len(elems)} elements\n" + _text_table(header, rows), 0


def cmd_tables(cfg: RunConfig) -> tuple[str, int]:
    c = cfg.coxeter
    rows = bijection_table(c)
    if cfg.fmt == "json":
        data = {"n": c.n, "c": list(c.cycle_seq), "header": TABLE_HEADER, "rows": [r.to_json() for r in rows]}
        serialize.validate("tables", data)
        return serialize.dumps(data), 0
    text_rows = [r.as_text() for r in rows]
    if cfg.fmt == "csv":
        return serialize.to_csv([TABLE_HEADER] + text_rows), 0
    return f"c = {c}\n" + _text_table(TABLE_HEADER, text_rows), 0


def cmd_stdforms(cfg: RunConfig) -> tuple[str, int]:
    c = cfg.coxeter
    elems = linear_extension(c)
    if cfg.fmt == "json":
        data = {"n": c.n, "c": list(c.cycle_seq), "rows": []}
        for x in elems:
            sf = standard_form(x)
            data["rows"].append({
                "x": [list(cy) for cy in x.perm.cycles()],
                "standard_form": str(sf),
                "syllables": [[s.j, s.i] for s in sf.syllables],
                "vector": list(vertical_vector(x)),
                "lift": lift_standard_form(x).to_json(),
                "extracted": extract_w(x).to_json()["runs"],
            })
        serialize.validate("stdforms", data)
        return serialize.dumps(data), 0
    header = ["x", "standard form", "vertical vector", "lifted standard form", "extracted word"]
    rows = [
        [str(x), str(standard_form(x)), ",".join(map(str, vertical_vector(x))), str(lift_standard_form(x)), str(extract_w(x))]
        for x in elems
    ]
    if cfg.fmt == "csv":
        return serialize.to_csv([header] + rows), 0
    return f"c = {c}\n" + _text_table(header, rows), 0


def cmd_basechange(cfg: RunConfig) -> tuple[str, int]:
    matrix = base_change(cfg.coxeter)
    report = check_triangular(matrix)
    status = 0 if report.triangular and report.sign_pattern else 1
    if cfg.fmt == "json":
        data = {"matrix": matrix.to_json(), "report": report.to_json()}
        serialize.validate("basechange", data)
        return serialize.dumps(data), status
    if cfg.fmt == "csv":
        return serialize.to_csv(matrix.to_csv_rows()), status
    lines = [
        f"c = {cfg.coxeter}, {matrix.size} x {matrix.size} matrix",
        f"support below x in vector order: {'yes' if not report.support_violations else 'NO'}",
        f"diagonal entries are units: {'yes' if not report.nonunit_diagonal else 'NO'}",
        f"rank: {report.rank} of {report.expected_size}",
        f"sign pattern: {'yes' if report.sign_pattern else 'NO'}",
        "diagonal:",
    ]
    lines += [f"  {x}: {entry}" for x, entry in report.diagonal]
    lines.append("nonzero entries:")
    for x, row in zip(matrix.order, matrix.entries):
        for y, entry in zip(matrix.order, row):
            if not entry.is_zero():
                lines.append(f"  R[{x}] b[{y}]: {entry}")
    return "\n".join(lines) + "\n", status


def cmd_hasse(cfg: RunConfig) -> tuple[str, int]:
    if cfg.fmt == "json":
        data = hasse_json(cfg.coxeter)
        serialize.validate("hasse", data)
        return serialize.dumps(data), 0
    return hasse_dot(cfg.coxeter), 0


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    results = run_all(cfg.max_n_verify)
    passed = all(r.passed for r in results)
    if cfg.fmt == "json":
        data = {"passed": passed, "max_n": cfg.max_n_verify, "checks": [r.to_json() for r in results]}
        serialize.validate("verify", data)
        return serialize.dumps(data), 0 if passed else 1
    lines = [r.line() for r in results]
    lines.append("ALL PASSED" if passed else "FAILURES PRESENT")
    return "\n".join(lines) + "\n", 0 if passed else 1


HANDLERS = {
    "enumerate": cmd_enumerate,
    "tables": cmd_tables,
    "stdforms": cmd_stdforms,
    "basechange": cmd_basechange,
    "hasse": cmd_hasse,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(f"nctl: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse reports usage errors this way
        return int(exc.code or 0)
    text, status = HANDLERS[cfg.command](cfg)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
