"""Command-line client for the toolkit.

Every computational subcommand talks to the HTTP layer: an in-process
application by default, or a running server named with --server.  The
``acceptance`` subcommand drives the library's criterion suite directly,
and ``serve`` starts the HTTP server.

Exit codes: 0 success, 1 a checked assertion found a counterexample,
2 usage or parse problems, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Optional, Sequence

from .congruence import DEFAULT_BUDGET

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def open_client(server: Optional[str]):
    if server:
        import httpx

        return httpx.Client(base_url=server)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient
    from .service import app

    return TestClient(app)


def _fail_for_status(response) -> None:
    if response.status_code < 400:
        return
    try:
        data = response.json()
    except ValueError:
        data = {}
    if response.status_code == 400 and data.get("error") == "budget-exceeded":
        print(
            f"error: enumeration needs {data['required']} words,"
            f" budget allows {data['budget']}",
            file=sys.stderr,
        )
        raise SystemExit(EXIT_BUDGET)
    detail = data.get("detail") or data.get("error") or response.text
    if isinstance(detail, list):
        detail = "; ".join(
            item.get("msg", str(item)) if isinstance(item, dict) else str(item)
            for item in detail
        )
    print(f"error: {detail}", file=sys.stderr)
    raise SystemExit(EXIT_USAGE)


def request_json(client, path: str, payload: dict) -> dict:
    response = client.post(path, json=payload)
    _fail_for_status(response)
    return response.json()


def request_text(client, path: str, payload: dict) -> str:
    response = client.post(path, json=payload)
    _fail_for_status(response)
    return response.text


def emit(text: str = "") -> None:
    sys.stdout.write(text + "\n")


def emit_json(data) -> None:
    sys.stdout.write(json.dumps(data, indent=2, sort_keys=True) + "\n")


def render_normal_form(data: dict) -> str:
    flag = "yes" if data["in_p"] else "no"
    return (
        f"{data['normal_form']} | i={data['ones']} eps={data['central']}"
        f" j={data['ascents']} b={data['tail']} | in P: {flag}"
    )


def cmd_nf(client, args) -> int:
    data = request_json(client, "/nf", {"n": args.n, "word": args.word})
    emit_json(data) if args.json else emit(render_normal_form(data))
    return EXIT_OK


def cmd_eq(client, args) -> int:
    payload = {"n": args.n, "left": args.left, "right": args.right}
    data = request_json(client, "/eq", payload)
    if args.json:
        emit_json(data)
    else:
        emit("equal" if data["equal"] else "not equal")
    return EXIT_OK


def cmd_mul(client, args) -> int:
    payload = {"n": args.n, "left": args.left, "right": args.right}
    data = request_json(client, "/mul", payload)
    emit_json(data) if args.json else emit(render_normal_form(data))
    return EXIT_OK


def cmd_phi(client, args) -> int:
    data = request_json(client, "/phi", {"n": args.n, "word": args.word})
    emit_json(data) if args.json else emit(data["rendered"])
    return EXIT_OK


def cmd_growth(client, args) -> int:
    payload = {
        "n": args.n,
        "h": args.h,
        "max_length": args.max_len,
        "budget": args.budget,
    }
    data = request_json(client, "/growth", payload)
    if args.json:
        emit_json(data)
    else:
        emit(",".join(str(c) for c in data["counts"]))
    return EXIT_OK


def cmd_series(client, args) -> int:
    payload = {"n": args.n, "max_length": args.max_len, "budget": args.budget}
    data = request_json(client, "/series", payload)
    if args.json:
        emit_json(data)
    else:
        emit("length,normal-forms,avoiding,explorer-classes,explorer-singletons")
        for row in data["rows"]:
            cells = [
                str(row["length"]),
                str(row["normal_forms"]),
                str(row["avoiding"]),
                "" if row["explorer_classes"] is None else str(row["explorer_classes"]),
                ""
                if row["explorer_singletons"] is None
                else str(row["explorer_singletons"]),
            ]
            emit(",".join(cells))
        emit("three-way agreement" if data["consistent"] else "MISMATCH detected")
    return EXIT_OK if data["consistent"] else EXIT_COUNTEREXAMPLE


def cmd_confluence(client, args) -> int:
    payload = {
        "n": args.n,
        "max_m": args.max_m,
        "include_illegal": args.include_illegal,
    }
    data = request_json(client, "/confluence", payload)
    clean = data["all_joinable"] and data["malformed"] == 0
    if args.json:
        emit_json(data)
    else:
        verdict = "all joinable" if data["all_joinable"] else "NOT all joinable"
        emit(f"n={data['n']} max_m={data['max_m']}: {data['total']} overlaps, {verdict}")
        for label in sorted(data["case_counts"]):
            emit(f"  {label}: {data['case_counts'][label]}")
        if data["include_illegal"]:
            emit(f"malformed instances: {data['malformed']}")
        if data["counterexample"] is not None:
            emit(f"counterexample ambient: {data['counterexample']}")
    return EXIT_OK if clean else EXIT_COUNTEREXAMPLE


def cmd_explore(client, args) -> int:
    base = {"n": args.n, "h": args.h, "budget": args.budget}
    if args.table:
        text = request_text(client, "/explore/csv", dict(base, length=args.max_len))
        sys.stdout.write(text)
        return EXIT_OK
    rows = [
        request_json(client, "/explore", dict(base, length=length))
        for length in range(args.max_len + 1)
    ]
    if args.json:
        emit_json(rows)
    else:
        emit("length,classes,singletons")
        for row in rows:
            emit(f"{row['length']},{row['class_count']},{row['singleton_count']}")
    return EXIT_OK


def cmd_reduce(client, args) -> int:
    data = request_json(client, "/reduce", {"n": args.n, "h": args.h})
    if args.json:
        emit_json(data)
        return EXIT_OK
    emit(
        f"H1 order {data['stabilizer_order']};"
        f" induced relations: {data['relation_count']} (deduplicated)"
    )
    for relation in data["relations"]:
        emit(f"  {relation}")
    if data["free"]:
        emit(f"free of rank {data['reduced_degree']}")
    return EXIT_OK


def cmd_rho(client, args) -> int:
    payload = {
        "n": args.n,
        "h": args.h,
        "length": args.length,
        "power": args.power,
        "budget": args.budget,
    }
    data = request_json(client, "/rho", payload)
    if args.json:
        emit_json(data)
    else:
        emit(
            f"classes at length {data['length']} with central power"
            f" {data['power']}: {data['class_count']}"
            f" (plain: {data['plain_class_count']})"
        )
    return EXIT_OK


def cmd_sym_identity(client, args) -> int:
    payload = {"n": args.n, "i": args.i, "j": args.j, "budget": args.budget}
    if args.h is not None:
        payload["h"] = args.h
    data = request_json(client, "/sym-identity", payload)
    if args.json:
        emit_json(data)
    else:
        emit("holds" if data["holds"] else "fails")
    return EXIT_OK


def cmd_acceptance(args) -> int:
    from .acceptance import run_all

    try:
        only = None
        if args.only:
            only = sorted({int(part) for part in args.only.split(",") if part.strip()})
        results = run_all(
            seed=args.seed,
            budget=args.budget,
            only=only,
            report=None if args.json else emit,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        emit_json([r.to_dict() for r in results])
    else:
        passed = sum(1 for r in results if r.passed)
        emit(f"{passed}/{len(results)} criteria passed")
    return EXIT_OK if all(r.passed for r in results) else EXIT_COUNTEREXAMPLE


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def _add_shared(sub, *, budget=False, json_flag=True, server=True):
    if budget:
        sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    if json_flag:
        sub.add_argument("--json", action="store_true")
    if server:
        sub.add_argument("--server", default=None, metavar="URL")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permrel",
        description="computations in monoids defined by permutation relations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="normal form, decomposition, ideal membership")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("word")
    _add_shared(p)

    p = sub.add_parser("eq", help="decide equality of two words")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("left")
    p.add_argument("right")
    _add_shared(p)

    p = sub.add_parser("mul", help="multiply two words and normalize")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("left")
    p.add_argument("right")
    _add_shared(p)

    p = sub.add_parser("phi", help="image in the fraction group")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("word")
    _add_shared(p)

    p = sub.add_parser("growth", help="congruence class counts per length")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--h", default="cyclic")
    p.add_argument("--max-len", type=int, default=6)
    _add_shared(p, budget=True)

    p = sub.add_parser("series", help="three-way counting cross-check")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--max-len", type=int, default=6)
    _add_shared(p, budget=True)

    p = sub.add_parser("confluence", help="enumerate and join rule overlaps")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--max-m", type=int, default=5)
    p.add_argument("--include-illegal", action="store_true")
    _add_shared(p)

    p = sub.add_parser("explore", help="congruence tables length by length")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--h", default="cyclic")
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--table", action="store_true", help="dump the word table at --max-len")
    _add_shared(p, budget=True)

    p = sub.add_parser("reduce", help="stabilizer reduction to degree n-1")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--h", default="sym")
    _add_shared(p)

    p = sub.add_parser("rho", help="class count after central stabilization")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--h", default="sym")
    p.add_argument("--length", type=int, default=2)
    p.add_argument("--power", type=int, default=1)
    _add_shared(p, budget=True)

    p = sub.add_parser("sym-identity", help="check z a_i a_j = z a_j a_i")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-i", type=int, required=True)
    p.add_argument("-j", type=int, required=True)
    p.add_argument("--h", default=None)
    _add_shared(p, budget=True)

    p = sub.add_parser("acceptance", help="run the acceptance criteria")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--only", default=None, metavar="LIST")
    _add_shared(p, budget=True, server=False)

    p = sub.add_parser("serve", help="start the HTTP server")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


HANDLERS = {
    "nf": cmd_nf,
    "eq": cmd_eq,
    "mul": cmd_mul,
    "phi": cmd_phi,
    "growth": cmd_growth,
    "series": cmd_series,
    "confluence": cmd_confluence,
    "explore": cmd_explore,
    "reduce": cmd_reduce,
    "rho": cmd_rho,
    "sym-identity": cmd_sym_identity,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "acceptance":
        return cmd_acceptance(args)
    if args.command == "serve":
        return cmd_serve(args)
    client = open_client(args.server)
    try:
        return HANDLERS[args.command](client, args)
    finally:
        client.close()


if __name__ == "__main__":
    raise SystemExit(main())
