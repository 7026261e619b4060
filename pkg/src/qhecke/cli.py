"""Batch command-line interface over the engine.

Exit codes: 0 success, 2 validation error, 3 envelope exceeded, 4 internal
invariant violation. All numeric output is exact; output is byte-identical
across identical invocations unless --timestamp is passed.
"""

from __future__ import annotations

import argparse
import datetime
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import fock, grdim, reptype, selftest
from .cartan import CartanDatum, RootSum
from .young import as_partition, codeg, deg, count_standard_tableaux, \
    standard_tableaux, standard_tableaux_with_residues
from .reptype import DominantizationAborted

SIZE_ENVELOPE = 25
SELFTEST_ENVELOPE = 8

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_ENVELOPE = 3
EXIT_INVARIANT = 4


class EnvelopeExceeded(Exception):
    pass


def _parse_int_list(text: str, what: str) -> list[int]:
    if text.strip() == "":
        return []
    try:
        return [int(piece) for piece in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed {what} {text!r}: expected a comma list of integers")


def parse_beta(text: str, ell: int) -> RootSum:
    entries = _parse_int_list(text, "beta")
    if len(entries) > ell + 1:
        raise ValueError(f"beta {text!r} has more than {ell + 1} entries")
    if len(entries) < ell + 1:
        print(f"warning: padding beta {text!r} with zeros to length {ell + 1}",
              file=sys.stderr)
        entries += [0] * (ell + 1 - len(entries))
    if any(x < 0 for x in entries):
        raise ValueError(f"beta entries must be nonnegative: {text!r}")
    return RootSum(tuple(entries))


def parse_word(text: str, ell: int) -> tuple[int, ...]:
    return tuple(grdim.as_residue_word(_parse_int_list(text, "residue word"), ell))


def _check_size(height: int) -> None:
    if height > SIZE_ENVELOPE:
        raise EnvelopeExceeded(
            f"size {height} exceeds the supported envelope {SIZE_ENVELOPE}")


def _timestamp_field(args) -> dict:
    if getattr(args, "timestamp", False):
        return {"timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat()}
    return {}


def _emit(text: str, path: str | None) -> None:
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _worker_count() -> int:
    raw = os.environ.get("QHECKE_THREADS", "1")
    try:
        count = int(raw)
    except ValueError:
        raise ValueError(f"QHECKE_THREADS must be an integer, got {raw!r}")
    if count < 1:
        raise ValueError(f"QHECKE_THREADS must be >= 1, got {count}")
    return count


# -- commands --------------------------------------------------------------

def cmd_dim(args) -> int:
    ell = args.ell
    if args.n_check is not None:
        n = args.n_check
        _check_size(n)
        value = grdim.graded_dim_n(n, ell).eval_at_one()
        ok = value == math.factorial(n)
        if args.format == "json":
            print(json.dumps({"n": n, "dim": str(value),
                              "factorial": str(math.factorial(n)), "ok": ok,
                              **_timestamp_field(args)}))
        else:
            print(f"{value} = {n}! {'OK' if ok else 'MISMATCH'}")
        return EXIT_OK if ok else EXIT_INVARIANT

    if args.beta is None:
        raise ValueError("dim requires --beta or --n-check")
    beta = parse_beta(args.beta, ell)
    _check_size(beta.height)
    if (args.nu is None) != (args.nu2 is None):
        raise ValueError("--nu and --nu2 must be given together")
    nu = nu2 = None
    if args.nu is not None:
        nu = parse_word(args.nu, ell)
        nu2 = parse_word(args.nu2, ell)
        value = grdim.graded_dim(beta, nu, nu2, ell)
    else:
        value = grdim.graded_dim_beta(beta, ell)

    oracle_match = None
    if args.verify:
        if nu is not None:
            oracle = grdim.oracle_graded_dim(beta, nu, nu2, ell)
            oracle_match = oracle == value
        else:
            oracle_match = all(
                grdim.oracle_graded_dim(beta, word, word, ell)
                == grdim.graded_dim(beta, word, word, ell)
                for word in _verify_words(beta)
            )

    if args.format == "json":
        payload = {
            "beta": beta.to_json(),
            "nu": list(nu) if nu is not None else None,
            "nu_prime": list(nu2) if nu2 is not None else None,
            "dim_q": value.to_json(),
            "dim": str(value.eval_at_one()),
        }
        if oracle_match is not None:
            payload["oracle_match"] = oracle_match
        payload.update(_timestamp_field(args))
        print(json.dumps(payload))
    else:
        print(f"dim_q = {value}")
        print(f"dim = {value.eval_at_one()}")
        if oracle_match is not None:
            print(f"oracle check: {'OK' if oracle_match else 'MISMATCH'}")
    return EXIT_OK if oracle_match in (None, True) else EXIT_INVARIANT


def _verify_words(beta: RootSum, cap: int = 8) -> list[tuple[int, ...]]:
    words = []
    for word in grdim.words_in_i_beta(beta):
        words.append(word)
        if len(words) >= cap:
            break
    return words


def cmd_dim_n(args) -> int:
    _check_size(args.n)
    value = grdim.graded_dim_n(args.n, args.ell)
    if args.format == "json":
        print(json.dumps({"n": args.n, "ell": args.ell, "dim_q": value.to_json(),
                          "dim": str(value.eval_at_one()), **_timestamp_field(args)}))
    else:
        print(f"dim_q = {value}")
        print(f"dim = {value.eval_at_one()}")
    return EXIT_OK


def cmd_tableaux(args) -> int:
    ell = args.ell
    shape = as_partition(_parse_int_list(args.shape, "shape"))
    _check_size(sum(shape))
    if args.nu is not None:
        nu = parse_word(args.nu, ell)
        stream = standard_tableaux_with_residues(shape, nu, ell)
        kostka = grdim.kostka_q(shape, nu, ell)
    else:
        stream = standard_tableaux(shape)
        kostka = grdim.kostka_q_total(shape, ell)
    records = [
        {
            "rows": t.to_json(),
            "residues": list(t.residue_sequence(ell)),
            "deg": deg(t, ell),
            "codeg": codeg(t, ell),
        }
        for t in stream
    ]
    if args.format == "json":
        print(json.dumps({
            "shape": list(shape), "ell": ell,
            "nu": list(parse_word(args.nu, ell)) if args.nu is not None else None,
            "count": len(records), "total_count": count_standard_tableaux(shape),
            "kostka_q": kostka.to_json(), "tableaux": records,
            **_timestamp_field(args)}))
    else:
        label = ",".join(str(x) for x in shape) if shape else "()"
        print(f"shape {label} (ell={ell}): {len(records)} tableaux")
        for idx, rec in enumerate(records, start=1):
            rows = "|".join(",".join(str(x) for x in row) for row in rec["rows"])
            res = ",".join(str(x) for x in rec["residues"])
            print(f"T{idx}: rows={rows} res={res} deg={rec['deg']} codeg={rec['codeg']}")
        print(f"kostka_q = {kostka}")
    return EXIT_OK


def cmd_crystal(args) -> int:
    graph = fock.generate_highest_weight_crystal(args.ell, args.depth)
    if args.weight_filter is not None:
        beta = parse_beta(args.weight_filter, args.ell)
        keep = {v.partition for v in graph.vertices_at(beta)}
        vertices = {p: graph.vertices[p] for p in keep}
        edges = tuple(e for e in graph.edges if e[0] in keep and e[1] in keep)
        graph = fock.CrystalGraph(args.ell, args.depth, vertices, edges)
    if args.format == "json":
        obj = graph.to_json_obj()
        obj.update(_timestamp_field(args))
        _emit(json.dumps(obj, indent=2) + "\n", args.out)
    else:
        _emit(graph.to_dot(), args.out)
    return EXIT_OK


def _classify_record(beta: RootSum, ell: int) -> dict:
    cd = CartanDatum(ell)
    result = reptype.classify(beta, ell)
    _, word = reptype.dominantize(cd.lambda0 - cd.root_weight(beta), ell)
    record = {"beta": beta.to_json(), "ell": ell, "status": result.tag}
    if result.tag != "zero":
        record["i"] = result.i
        record["k"] = result.k
    record["dominant_word"] = word
    return record


def cmd_classify(args) -> int:
    ell = args.ell
    betas = [parse_beta(text, ell) for text in args.beta]
    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda b: _classify_record(b, ell), betas))
    else:
        records = [_classify_record(b, ell) for b in betas]
    for record in records:
        if args.format == "text":
            beta_text = ",".join(str(x) for x in record["beta"])
            extra = ""
            if record["status"] != "zero":
                extra = f" (i={record['i']}, k={record['k']})"
            print(f"{beta_text} -> {record['status']}{extra}")
        else:
            record.update(_timestamp_field(args))
            print(json.dumps(record))
    return EXIT_OK


def cmd_maxweights(args) -> int:
    ell = args.ell
    data = reptype.max_dominant_weights(ell)
    entries = [
        {
            "i": item.i,
            "weight": item.weight.to_json(),
            "beta": reptype.beta_for_max_weight(item.i, item.i // 2, ell).to_json(),
        }
        for item in data
    ]
    if args.format == "json":
        print(json.dumps({"ell": ell, "weights": entries, **_timestamp_field(args)}))
    else:
        for item, entry in zip(data, entries):
            beta_text = ",".join(str(x) for x in entry["beta"])
            print(f"i={item.i} weight={item.weight.text()} beta={beta_text}")
    return EXIT_OK


def cmd_selftest(args) -> int:
    if args.n > SELFTEST_ENVELOPE:
        raise EnvelopeExceeded(
            f"selftest size {args.n} exceeds the envelope {SELFTEST_ENVELOPE}")
    results = selftest.run_selftest(args.ell, args.n)
    ok = True
    for result in results:
        status = "PASS" if result.ok else "FAIL"
        print(f"suite {result.name}: {status} ({result.detail})")
        ok = ok and result.ok
    print("selftest: " + ("all suites passed" if ok else "FAILURES detected"))
    return EXIT_OK if ok else EXIT_INVARIANT


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhecke",
        description="Exact combinatorics of finite quiver Hecke algebras of "
                    "affine type C: graded dimensions, crystal of the basic "
                    "representation, representation type.")
    parser.add_argument("--timestamp", action="store_true",
                        help="include a timestamp in the output (off by default "
                             "so identical runs are byte-identical)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--ell", type=int, required=True, metavar="L",
                       help="rank parameter, at least 2")
        return p

    p = add("dim", cmd_dim, help="graded dimension of a block")
    p.add_argument("--beta", metavar="K0,K1,...",
                   help="root sum as a comma list indexed 0..ell")
    p.add_argument("--nu", metavar="W", help="first residue word")
    p.add_argument("--nu2", metavar="W", help="second residue word")
    p.add_argument("--n-check", type=int, metavar="N",
                   help="check dim at degree N against N!")
    p.add_argument("--verify", action="store_true",
                   help="cross-check against the Fock-space oracle")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("dim-n", cmd_dim_n, help="graded dimension of the full degree-n algebra")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("tableaux", cmd_tableaux, help="standard tableaux with statistics")
    p.add_argument("--shape", required=True, metavar="P1,P2,...")
    p.add_argument("--nu", metavar="W", help="restrict to this residue word")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("crystal", cmd_crystal, help="generate the highest weight crystal")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out", default="-", metavar="PATH",
                   help="output file, or - for stdout")
    p.add_argument("--weight-filter", metavar="K0,K1,...",
                   help="restrict to vertices of weight L0 minus this root sum")

    p = add("classify", cmd_classify, help="representation type of blocks")
    p.add_argument("--beta", action="append", required=True, metavar="K0,K1,...",
                   help="root sum; repeat for batch classification")
    p.add_argument("--format", choices=("text", "json"), default="json")

    add("maxweights", cmd_maxweights, help="dominant maximal weights") \
        .add_argument("--format", choices=("text", "json"), default="text")

    p = add("selftest", cmd_selftest, help="run the internal invariant suites")
    p.add_argument("--n", type=int, default=6,
                   help="size envelope for the suites (at most 8)")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.ell < 2:
            raise ValueError(f"--ell must be at least 2, got {args.ell}")
        return args.fn(args)
    except EnvelopeExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENVELOPE
    except (ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (AssertionError, DominantizationAborted) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    raise SystemExit(main())
