"""Command-line client for the doubling service.

By default commands run against an in-process copy of the service, so no
server is needed and outputs are deterministic; --server switches to a
remote instance.  Exit codes: 0 success, 1 check failed or witness
absent, 2 bad arguments, 3 hypothesis violation, 4 I/O or transport
error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

from .classify import canonical_json


class CliError(Exception):
    def __init__(self, exit_code: int, message: str):
        super().__init__(message)
        self.exit_code = exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cheinloops",
        description="Double a finite group eight ways per quarter and classify the results.",
    )
    parser.add_argument("--server", help="URL of a running service; default is in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group-info", help="order, abelianness, center index of a group")
    p.add_argument("--group", required=True, help="group spec such as S3, D8, Q8, S3xC2")

    p = sub.add_parser("construct", help="emit the doubled Cayley table for one matrix")
    p.add_argument("--group", required=True)
    p.add_argument("--matrix", default="M_c", help="name like M_c or a quadruple like i,s,st3,t")
    p.add_argument("--out", help="write the table here plus a .json sidecar")

    p = sub.add_parser("check", help="check an identity against a Cayley-table file")
    p.add_argument("--table", required=True, help="path to a Cayley-table text file")
    law = p.add_mutually_exclusive_group(required=True)
    law.add_argument("--law", help="builtin law name, e.g. moufang_1")
    law.add_argument("--identity", help="raw identity, e.g. 'x*y = y*x'")

    p = sub.add_parser("enumerate", help="classify all 4096 matrices over a group")
    p.add_argument("--group", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="write the canonical JSON report here")
    p.add_argument("--csv", help="write the per-matrix flag table here")

    p = sub.add_parser("verify-theorem", help="check the Moufang classification over a group")
    p.add_argument("--group", required=True)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("iso", help="search for an (anti)isomorphism between two loop tables")
    p.add_argument("--a", required=True, help="path to the first table")
    p.add_argument("--b", required=True, help="path to the second table")
    p.add_argument("--anti", action="store_true", help="search for an anti-isomorphism")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _make_client(server: str | None) -> httpx.AsyncClient:
    if server:
        return httpx.AsyncClient(base_url=server, timeout=None)
    from .service.app import create_app

    transport = httpx.ASGITransport(app=create_app())
    return httpx.AsyncClient(transport=transport, base_url="http://service.internal", timeout=None)


async def _post(client: httpx.AsyncClient, path: str, payload: dict) -> dict:
    try:
        resp = await client.post(path, json=payload)
    except httpx.HTTPError as exc:
        raise CliError(4, f"service request failed: {exc}") from exc
    if resp.status_code >= 400:
        detail = None
        try:
            detail = resp.json().get("detail")
        except (ValueError, AttributeError):
            pass
        if isinstance(detail, dict) and "code" in detail:
            exit_code = 3 if detail["code"] == "hypothesis" else 2
            raise CliError(exit_code, str(detail.get("message", "request rejected")))
        raise CliError(2, f"service rejected the request (status {resp.status_code})")
    return resp.json()


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="ascii") as handle:
            return handle.read()
    except OSError as exc:
        raise CliError(4, f"cannot read {path}: {exc}") from exc


def _write_file(path: str, content: str) -> None:
    try:
        with open(path, "w", encoding="ascii", newline="\n") as handle:
            handle.write(content)
    except OSError as exc:
        raise CliError(4, f"cannot write {path}: {exc}") from exc


def _format_counterexample(cx: dict) -> str:
    pairs = " ".join(f"{name}={value}" for name, value in cx["assignment"])
    return f"{pairs} | lhs={cx['lhs']} rhs={cx['rhs']}"


async def _cmd_group_info(client, args) -> int:
    data = await _post(client, "/group-info", {"group": args.group})
    print(f"group: {data['group']}")
    print(f"order: {data['order']}")
    print(f"abelian: {'yes' if data['abelian'] else 'no'}")
    print(f"elementary abelian 2-group: {'yes' if data['elementary_abelian_2'] else 'no'}")
    print(f"center index: {data['center_index']}")
    return 0


async def _cmd_construct(client, args) -> int:
    data = await _post(client, "/construct", {"group": args.group, "matrix": args.matrix})
    if args.out:
        _write_file(args.out, data["table_text"])
        _write_file(
            args.out + ".json", json.dumps(data["sidecar"], sort_keys=True, indent=2) + "\n"
        )
        print(f"wrote order-{data['order']} table to {args.out}")
    else:
        print(data["table_text"], end="")
    return 0


async def _cmd_check(client, args) -> int:
    payload = {"table_text": _read_file(args.table)}
    if args.law:
        payload["law"] = args.law
    else:
        payload["identity"] = args.identity
    data = await _post(client, "/check", payload)
    if data["holds"]:
        print("holds")
        return 0
    print(_format_counterexample(data["counterexample"]))
    return 1


async def _cmd_enumerate(client, args) -> int:
    payload = {"group": args.group, "jobs": args.jobs, "include_csv": bool(args.csv)}
    data = await _post(client, "/enumerate", payload)
    report = data["report"]
    if args.report:
        _write_file(args.report, canonical_json(report))
    if args.csv:
        _write_file(args.csv, data["csv"])
    counts = report["counts"]
    print(f"group {report['group']} order {report['group_order']} double {report['double_order']}")
    print(
        f"loops {counts['is_loop']} of 4096; moufang loops {len(report['moufang_set'])}; "
        f"nonassociative moufang {len(report['nonassoc_moufang'])}"
    )
    checks = " ".join(
        f"{name}={'pass' if ok else 'fail'}" for name, ok in sorted(report["law_checks"].items())
    )
    print(f"law checks: {checks}")
    verdict = report["classification"]
    if not verdict["applicable"]:
        print("classification: not applicable (abelian base)")
    else:
        print(f"classification: {'pass' if verdict['passed'] else 'fail'}")
    if args.report:
        print(f"report written to {args.report}")
    if args.csv:
        print(f"csv written to {args.csv}")
    return 0 if data["all_checks_pass"] else 1


async def _cmd_verify_theorem(client, args) -> int:
    data = await _post(client, "/verify-theorem", {"group": args.group, "jobs": args.jobs})
    verdict = data["verdict"]
    print(f"classification over {args.group}: {'PASS' if data['passed'] else 'FAIL'}")
    print(f"moufang set: {' '.join(verdict['found'])}")
    if verdict["missing"]:
        print(f"missing: {' '.join(verdict['missing'])}")
    if verdict["unexpected"]:
        print(f"unexpected: {' '.join(verdict['unexpected'])}")
    single = "yes" if verdict["single_class"] else "no"
    chein = "yes" if verdict["contains_chein"] else "no"
    print(f"nonassociative four in one class: {single}; contains classical doubling: {chein}")
    return 0 if data["passed"] else 1


async def _cmd_iso(client, args) -> int:
    payload = {
        "table_a_text": _read_file(args.a),
        "table_b_text": _read_file(args.b),
        "anti": bool(args.anti),
    }
    data = await _post(client, "/iso", payload)
    if data["found"]:
        print(json.dumps(data["map"]))
        return 0
    print("none")
    return 1


async def _run(args) -> int:
    handlers = {
        "group-info": _cmd_group_info,
        "construct": _cmd_construct,
        "check": _cmd_check,
        "enumerate": _cmd_enumerate,
        "verify-theorem": _cmd_verify_theorem,
        "iso": _cmd_iso,
    }
    async with _make_client(args.server) as client:
        return await handlers[args.command](client, args)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        uvicorn.run("cheinloops.service.app:app", host=args.host, port=args.port)
        return 0
    try:
        return asyncio.run(_run(args))
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.exit_code


def entry() -> None:
    sys.exit(main(sys.argv[1:]))
