"""Command-line front end.

Exit codes: 0 ok, 1 verification mismatch, 2 usage or input error,
3 non-admissible continued fraction.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from . import palf, section3
from .budding import is_one_replaceable
from .cfrac import NotAdmissible, cf_dual, cf_eval, cf_expand, cf_reverse
from .lemmas import run_lemma_suite
from .lisca import (
    LensSpace,
    fillings,
    min_filling_euler,
    two_replaceable_witnesses,
    verify_theorem1,
)
from .plumbing import PlumbingTree, Presentation, abelianization, tree_invariants

SCHEMA = 1
CENSUS_HEADER = "p,q,dual,min_euler,witness,form,one_replaceable"
CENSUS_PMAX_CAP = 2000

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_NOT_ADMISSIBLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise UsageError(f"not a comma-separated integer list: {text!r}") from None
    if not out:
        raise UsageError("empty integer list")
    return out


def _fraction(parts: Sequence[str]) -> Fraction:
    try:
        if len(parts) == 1:
            return Fraction(parts[0])
        if len(parts) == 2:
            return Fraction(int(parts[0]), int(parts[1]))
    except (ValueError, ZeroDivisionError):
        pass
    raise UsageError(f"expected p/q or 'p q', got {' '.join(parts)!r}")


def _dash(s: Sequence[int]) -> str:
    return "-".join(map(str, s))


def _undash(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split("-")) if text else ()


def _emit(args, text: str, payload: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
    else:
        print(text)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


# -- cf -----------------------------------------------------------------------


def cmd_cf(args) -> int:
    op = args.op
    if op == "expand":
        r = _fraction(args.value)
        if r <= 1:
            raise UsageError("expansion needs a value > 1")
        out = cf_expand(r)
    else:
        if len(args.value) != 1:
            raise UsageError(f"cf {op} takes one comma-separated list")
        s = _ints(args.value[0])
        if op == "eval":
            v = cf_eval(s)
            _emit(
                args,
                f"{v.numerator}/{v.denominator}",
                {"value": {"num": str(v.numerator), "den": str(v.denominator)}},
            )
            return EXIT_OK
        if op == "dual":
            try:
                out = cf_dual(s)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        else:
            out = cf_reverse(s)
    _emit(args, ",".join(map(str, out)), {"entries": [str(x) for x in out]})
    return EXIT_OK


# -- fillings / census --------------------------------------------------------


def _lens(p: int, q: int) -> LensSpace:
    try:
        return LensSpace(p, q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_fillings(args) -> int:
    lens = _lens(args.p, args.q)
    rows = fillings(lens, args.k)
    if args.json:
        print(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "lens": [str(lens.p), str(lens.q)],
                    "dual": [str(x) for x in lens.dual_string],
                    "fillings": [
                        {"euler": str(f.euler), "zero_string": [str(x) for x in f.zero_string]}
                        for f in rows
                    ],
                },
                sort_keys=True,
            )
        )
        return EXIT_OK
    print(f"{lens}  dual {','.join(map(str, lens.dual_string))}")
    print("euler  zero_string")
    for f in rows:
        print(f"{f.euler:>5}  {','.join(map(str, f.zero_string))}")
    return EXIT_OK


@dataclass(frozen=True)
class CensusRow:
    p: int
    q: int
    dual: tuple[int, ...]
    min_euler: int
    witness: tuple[int, ...]
    form: int | None
    one_replaceable: bool

    def to_csv(self) -> str:
        return ",".join(
            [
                str(self.p),
                str(self.q),
                _dash(self.dual),
                str(self.min_euler),
                _dash(self.witness),
                "" if self.form is None else str(self.form),
                str(int(self.one_replaceable)),
            ]
        )

    @classmethod
    def from_csv(cls, line: str) -> "CensusRow":
        p, q, dual, me, wit, form, one = line.rstrip("\n").split(",")
        return cls(
            int(p), int(q), _undash(dual), int(me), _undash(wit),
            int(form) if form else None, one == "1",
        )


def census_row(p: int, q: int, k: int = 2) -> CensusRow:
    lens = LensSpace(p, q)
    witness: tuple[int, ...] = ()
    form = None
    if k == 2:
        ws = two_replaceable_witnesses(lens)
        if ws:
            witness, form = ws[0].zero_string, ws[0].form
    else:
        fs = fillings(lens, k)
        if fs:
            witness = fs[0].zero_string
    return CensusRow(
        p, q, lens.dual_string, min_filling_euler(lens), witness, form,
        is_one_replaceable(lens.plumbing_string),
    )


def iter_census(pmax: int, k: int = 2):
    for p in range(2, pmax + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                yield census_row(p, q, k)


def cmd_census(args) -> int:
    if not 2 <= args.pmax <= CENSUS_PMAX_CAP:
        raise UsageError(f"--pmax must lie in 2..{CENSUS_PMAX_CAP}")
    out_dir = os.path.dirname(os.path.abspath(args.out))
    fd, tmp = tempfile.mkstemp(dir=out_dir, prefix=".census-", suffix=".csv")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(CENSUS_HEADER + "\n")
            n = 0
            for row in iter_census(args.pmax, args.k):
                fh.write(row.to_csv() + "\n")
                n += 1
        os.replace(tmp, args.out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    print(f"wrote {n} rows to {args.out}")
    return EXIT_OK


def read_census(path: str) -> list[CensusRow]:
    with open(path, encoding="utf-8") as fh:
        lines = fh.readlines()
    if not lines or lines[0].strip() != CENSUS_HEADER:
        raise ValueError("census header mismatch")
    return [CensusRow.from_csv(ln) for ln in lines[1:] if ln.strip()]


# -- verify -------------------------------------------------------------------


def _verify_theorem1(args) -> int:
    t = time.perf_counter()
    rep = verify_theorem1(args.max_len, args.max_entry)
    print(rep.summary())
    print(f"elapsed {time.perf_counter() - t:.2f}s")
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def _verify_lemmas(args) -> int:
    results = run_lemma_suite(args.max_len, args.max_entry, args.max_zero_len)
    for r in results:
        print(r.line())
    return EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH


def palf_seed_checks() -> list[tuple[str, bool, str]]:
    out = []
    x, final = palf.SEED_X, palf.SEED_FINAL
    mid = palf.lantern_substitute(x, 4, 6, 5, 7)
    end = palf.daisy_substitute(mid, [0, 1], [2, 3, 4], 7)
    for name, f, chi in (("x-system", x, 5), ("after lantern", mid, 4), ("abcdef", end, 2)):
        e, b = palf.euler_char_palf(f), palf.boundary_h1_palf(f)
        out.append((f"{name} euler", e == chi, f"{e} (expected {chi})"))
        out.append((f"{name} boundary", str(b) == "Z45", str(b)))
    out.append(("daisy output is the abcdef system", end == final, str(end)))
    rep = palf.key_pair_check(x, final)
    out.append(("key pair boundary match", rep.boundary_match, "; ".join(rep.lines())))
    return out


def _report(rows: list[tuple[str, bool, str]]) -> int:
    for label, ok, detail in rows:
        print(f"{'ok  ' if ok else 'FAIL'} {label}: {detail}")
    return EXIT_OK if all(ok for _, ok, _ in rows) else EXIT_MISMATCH


def _verify_palf_seed(args) -> int:
    return _report(palf_seed_checks())


def _verify_section3(args) -> int:
    code = _report(section3.verify())
    print("gram report (report-mode, does not affect the exit code):")
    for line in section3.gram_report().lines():
        print("  " + line)
    return code


def cmd_verify(args) -> int:
    return {
        "theorem1": _verify_theorem1,
        "lemmas": _verify_lemmas,
        "palf-seed": _verify_palf_seed,
        "section3": _verify_section3,
    }[args.what](args)


# -- files --------------------------------------------------------------------


def cmd_tree(args) -> int:
    try:
        t = PlumbingTree.from_json(_load_json(args.file))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    inv = tree_invariants(t)
    print(f"chi={inv['chi']} sigma={inv['sigma']} det={inv['det']} H1={inv['h1']}")
    return EXIT_OK


def cmd_abelianize(args) -> int:
    try:
        P = Presentation.from_json(_load_json(args.file))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(abelianization(P))
    return EXIT_OK


def cmd_palf(args) -> int:
    if args.op == "show":
        maker = palf.NAMED.get(args.target)
        if maker is None:
            raise UsageError(f"unknown system {args.target!r}; known: {', '.join(palf.NAMED)}")
        try:
            f = maker(args.n) if args.target == "thm2a-bside" else maker()
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        print(json.dumps({"schema": SCHEMA, **f.to_json()}))
        return EXIT_OK

    data = _load_json(args.target)
    try:
        if isinstance(data, dict) and "c_side" in data:
            c = palf.Factorization.from_json(data["c_side"])
            b = palf.Factorization.from_json(data["b_side"])
            rep = palf.key_pair_check(c, b)
        else:
            f = palf.Factorization.from_json(data)
            print(
                f"euler={palf.euler_char_palf(f)} boundary={palf.boundary_h1_palf(f)} "
                f"H1={palf.h1_total(f)}"
            )
            return EXIT_OK
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for line in rep.lines():
        print(line)
    return EXIT_OK if rep.boundary_match else EXIT_MISMATCH


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lensfill",
        description="Continued fractions, lens space fillings and replaceable plumbings.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cf", help="continued fraction arithmetic")
    p.add_argument("op", choices=["eval", "expand", "dual", "reverse"])
    p.add_argument("value", nargs="+", help="a1,a2,... (or p/q for expand)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("fillings", help="minimal fillings of L(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--k", type=int, default=None, help="only Euler characteristic k")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fillings)

    p = sub.add_parser("census", help="CSV census of lens spaces up to pmax")
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("what", choices=["theorem1", "lemmas", "palf-seed", "section3"])
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--max-entry", type=int, default=None)
    p.add_argument("--max-zero-len", type=int, default=9)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tree", help="plumbing tree invariants")
    p.add_argument("op", choices=["invariants"])
    p.add_argument("file")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("abelianize", help="abelianize a group presentation")
    p.add_argument("file")
    p.set_defaults(func=cmd_abelianize)

    p = sub.add_parser("palf", help="planar factorizations")
    p.add_argument("op", choices=["check", "show"])
    p.add_argument("target", help="JSON file (check) or named system (show)")
    p.add_argument("--n", type=int, default=9, help="family parameter for thm2a-bside")
    p.set_defaults(func=cmd_palf)
    return ap


_VERIFY_DEFAULTS = {"theorem1": (4, 6), "lemmas": (6, 6)}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify" and args.what in _VERIFY_DEFAULTS:
        ml, me = _VERIFY_DEFAULTS[args.what]
        args.max_len = ml if args.max_len is None else args.max_len
        args.max_entry = me if args.max_entry is None else args.max_entry
    try:
        return args.func(args)
    except NotAdmissible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_ADMISSIBLE
    except (UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
