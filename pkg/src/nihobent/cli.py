"""Command-line front end.

Four subcommands:

  build       construct a family member, report exponent data, verify
              bentness/degree, optionally write the truth table to a file
  check       analyze a truth-table file: Walsh spectrum summary,
              bentness, algebraic degree, subfield-coset linearity
  correspond  run a full bent-to-catalog correspondence and verify it
              pointwise
  opoly       evaluate an o-polynomial candidate (catalog member, table
              file, or Frobenius map) and test the 2-to-1 property

Output is a single JSON document on stdout with sorted keys: pretty by
default, one line with --json.  Identical inputs produce byte-identical
stdout; wall-clock timing goes to stderr.  Field elements are read and
written as hex bitmasks.

Exit codes: 0 success; 1 a verified claim failed; 2 bad usage or a
violated precondition; 3 an internal cross-check mismatch (a bug).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .bivariate import (InternalCheckError, MappingTable, is_opolynomial,
                        is_permutation, opoly_normalize)
from .boolfn import (TruthTable, anf_degree, has_affine_coset_restrictions,
                     is_bent, walsh_spectrum)
from .gf2 import GF, FieldSpec, embed_subfield, unit_circle_element
from .niho import FamilySpec, build_bent, family_report
from .ovals import (AdelaideParams, SubiacoParams, VerificationError,
                    adelaide_f1, adelaide_fs, adelaide_pair,
                    correspond_adelaide, correspond_subiaco, frobenius_map,
                    subiaco_fs, subiaco_pair)

__all__ = ["main"]


def _hex(text: str) -> int:
    try:
        return int(text, 16)
    except ValueError:
        raise ValueError(f"expected a hex bitmask, got {text!r}") from None


def _hex_or_none(text):
    return None if text is None else _hex(text)


def _field(n: int, modulus_text) -> FieldSpec:
    return GF(n, _hex_or_none(modulus_text))


def _emit(report: dict, compact: bool) -> None:
    if compact:
        out = json.dumps(report, sort_keys=True, separators=(",", ":"))
    else:
        out = json.dumps(report, sort_keys=True, indent=2)
    print(out)


def _spectrum_summary(values) -> dict:
    counts: dict = {}
    for v in values:
        counts[int(v)] = counts.get(int(v), 0) + 1
    return {"min": int(min(values)),
            "max": int(max(values)),
            "value_counts": [[v, counts[v]] for v in sorted(counts)]}


def _check_verdicts(tt: TruthTable, field: FieldSpec) -> dict:
    even = tt.n % 2 == 0
    return {
        "bent": is_bent(tt) if even else None,
        "degree": anf_degree(tt),
        # restriction to every coset of the half-degree subfield is affine
        "niho": has_affine_coset_restrictions(tt, field) if even else None,
    }


def _cmd_build(args) -> dict:
    field = _field(2 * args.m, args.modulus)
    a = field.el(_hex(args.a)) if args.a is not None else None
    b = field.el(_hex(args.b)) if args.b is not None else None
    spec = FamilySpec(args.family, args.m, a=a, b=b, r=args.r, field=field)
    form = build_bent(spec, strict=args.strict)
    tt = form.truth_table()
    report = family_report(spec)
    outputs = {
        "field": field.to_json(),
        "trace_form": form.to_json(),
        "report": report.to_json(),
        "weight": tt.weight(),
        "out_file": args.out,
    }
    if args.out:
        tt.save(args.out)
    verdicts: dict = {}
    if not args.skip_check:
        verdicts = _check_verdicts(tt, field)
        expected = report.expected_degree
        verdicts["degree_matches_expected"] = \
            None if expected is None else verdicts["degree"] == expected
    return {"command": "build", "inputs": spec.to_json()
            | {"modulus": f"0x{field.modulus:x}", "strict": args.strict},
            "outputs": outputs, "verdicts": verdicts}


def _cmd_check(args) -> dict:
    tt = TruthTable.load(args.file)
    field = _field(tt.n, args.modulus)
    spectrum = walsh_spectrum(tt, field)
    if args.spectrum_out:
        with open(args.spectrum_out, "w", encoding="ascii") as fh:
            json.dump(spectrum.to_json(), fh)
            fh.write("\n")
    return {"command": "check",
            "inputs": {"file": args.file,
                       "modulus": f"0x{field.modulus:x}"},
            "outputs": {"n": tt.n, "weight": tt.weight(),
                        "parseval": spectrum.parseval(),
                        "spectrum_summary":
                            _spectrum_summary(spectrum.values),
                        "spectrum_out": args.spectrum_out},
            "verdicts": _check_verdicts(tt, field)}


def _cmd_correspond(args) -> dict:
    field = _field(2 * args.m, args.modulus)
    if args.family == "subiaco":
        if args.b is None:
            raise ValueError("subiaco correspondence needs --b")
        b = field.el(_hex(args.b))
        u = unit_circle_element(field, args.u) if args.u else None
        corr = correspond_subiaco(b, u=u)
        inputs = {"family": "subiaco", "m": args.m,
                  "b": f"0x{b.bits:x}", "u": args.u,
                  "modulus": f"0x{field.modulus:x}"}
    else:
        if args.beta is None:
            raise ValueError("adelaide correspondence needs --beta")
        beta = field.el(_hex(args.beta))
        corr = correspond_adelaide(beta)
        inputs = {"family": "adelaide", "m": args.m,
                  "beta": f"0x{beta.bits:x}",
                  "modulus": f"0x{field.modulus:x}"}
    return {"command": "correspond", "inputs": inputs,
            "outputs": {"correspondence": corr.to_json(),
                        "member": corr.member.to_json(),
                        "extracted": corr.extracted.to_json()},
            "verdicts": {"verified": corr.verified}}


def _opoly_table(args) -> tuple[MappingTable, dict]:
    if args.source == "subiaco":
        field = _field(args.m, args.modulus)
        if args.case == 1:
            params = SubiacoParams.case_i(field)
        elif args.case == 2:
            w = field.el(_hex(args.w)) if args.w is not None else None
            params = SubiacoParams.case_ii(field, w)
        elif args.case == 3:
            if args.w is None:
                raise ValueError("case 3 needs --w")
            params = SubiacoParams.case_iii(field, field.el(_hex(args.w)))
        else:
            raise ValueError("--case must be 1, 2 or 3")
        inputs = {"source": "subiaco", "m": args.m, "case": args.case,
                  "w": f"0x{params.w.bits:x}", "s": args.s}
        if args.s is None:
            table = subiaco_pair(params)[1]
        else:
            table = subiaco_fs(params, field.el(_hex(args.s)))
        return table, inputs
    if args.source == "adelaide":
        if args.beta is None:
            raise ValueError("adelaide source needs --beta")
        big = _field(2 * args.m, args.modulus)
        small = GF(args.m)
        params = AdelaideParams(big.el(_hex(args.beta)),
                                embed_subfield(small, big))
        inputs = {"source": "adelaide", "m": args.m,
                  "beta": args.beta, "s": args.s}
        if args.s is None:
            table = adelaide_pair(params)[1]
        elif _hex(args.s) == 1:
            table = adelaide_f1(params)
        else:
            table = adelaide_fs(params, small.el(_hex(args.s)))
        return table, inputs
    if args.source == "file":
        with open(args.file, "r", encoding="ascii") as fh:
            data = json.load(fh)
        size = len(data)
        m = size.bit_length() - 1
        if size != 1 << m:
            raise ValueError(f"table length {size} is not a power of 2")
        field = _field(m, args.modulus)
        table = MappingTable.from_json(field, data)
        return table, {"source": "file", "file": args.file, "m": m}
    # frobenius
    if args.exponent is None:
        raise ValueError("frobenius source needs --exponent")
    field = _field(args.m, args.modulus)
    table = frobenius_map(field, args.exponent)
    return table, {"source": "frobenius", "m": args.m,
                   "exponent": args.exponent}


def _cmd_opoly(args) -> dict:
    table, inputs = _opoly_table(args)
    opoly = is_opolynomial(table)
    perm = is_permutation(table)
    normalized = None
    if table.entries[0] != table.entries[1]:
        normalized = opoly_normalize(table).to_json()
    return {"command": "opoly", "inputs": inputs,
            "outputs": {"table": table.to_json(),
                        "normalized": normalized},
            "verdicts": {"is_opoly": opoly,
                         "is_permutation": perm}}


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="nihobent",
        description="Niho bent functions and hyperoval o-polynomials")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a family member")
    p.add_argument("--family", required=True,
                   help="quadratic | binomial3 | binomial4 | binomial6 | "
                        "adelaide | leander-kholosha")
    p.add_argument("--m", type=int, required=True,
                   help="half degree; the field is GF(2^(2m))")
    p.add_argument("--a", help="hex coefficient of the quadratic term")
    p.add_argument("--b", help="hex coefficient of the extra term")
    p.add_argument("--r", type=int, help="multinomial family parameter")
    p.add_argument("--modulus", help="hex reduction polynomial of GF(2^n)")
    p.add_argument("--strict", action="store_true",
                   help="enforce the classical fifth-power condition")
    p.add_argument("--skip-check", action="store_true",
                   help="skip the bentness/degree verdicts")
    p.add_argument("--out", help="write the truth table to this file")
    p.add_argument("--json", action="store_true",
                   help="compact single-line output")
    p.set_defaults(run=_cmd_build)

    p = sub.add_parser("check", help="analyze a truth-table file")
    p.add_argument("file")
    p.add_argument("--modulus", help="hex reduction polynomial of GF(2^n)")
    p.add_argument("--spectrum-out",
                   help="write the full Walsh spectrum (JSON) here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_check)

    p = sub.add_parser("correspond",
                       help="verify a bent-to-catalog correspondence")
    p.add_argument("--family", required=True,
                   choices=["subiaco", "adelaide"])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--b", help="hex coefficient (subiaco)")
    p.add_argument("--beta", help="hex unit-circle element (adelaide)")
    p.add_argument("--u", help="cube | fifth:J | general:I")
    p.add_argument("--modulus", help="hex reduction polynomial of GF(2^n)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_correspond)

    p = sub.add_parser("opoly", help="test the o-polynomial property")
    p.add_argument("--source", required=True,
                   choices=["subiaco", "adelaide", "file", "frobenius"])
    p.add_argument("--m", type=int,
                   help="small-field degree (unused for file source)")
    p.add_argument("--case", type=int, help="subiaco case 1 | 2 | 3")
    p.add_argument("--w", help="hex case parameter")
    p.add_argument("--s", help="hex blend parameter; omit for g")
    p.add_argument("--beta", help="hex unit-circle element")
    p.add_argument("--file", help="JSON array of hex values")
    p.add_argument("--exponent", type=int, help="Frobenius power i")
    p.add_argument("--modulus", help="hex reduction polynomial")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_opoly)
    return top


def main(argv=None) -> int:
    threads = os.environ.get("NIHOBENT_THREADS")
    if threads is not None:
        try:
            if int(threads) <= 0:
                raise ValueError
        except ValueError:
            print(f"error: NIHOBENT_THREADS must be a positive integer, "
                  f"got {threads!r}", file=sys.stderr)
            return 2
        # evaluation is single-threaded; any positive cap is honored
    args = _build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        report = args.run(args)
    except VerificationError as exc:
        print(f"error: verification failed: {exc}", file=sys.stderr)
        return 1
    except InternalCheckError as exc:
        print(f"error: internal cross-check failed: {exc}",
              file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.json)
    print(f"timing_ms={int((time.perf_counter() - started) * 1000)}",
          file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
