"""Command-line client for the toolkit.

Every subcommand is a thin wrapper over the HTTP service: by default the
requests run against an in-process app instance, so no server is needed;
pass --server URL to talk to a running one instead. Output is plain text
and byte-stable for fixed inputs.

Exit codes: 0 success, 1 usage or I/O trouble, 2 document syntax error,
3 validation/semantic error, 4 structurally sound but unsupported input.
"""

from __future__ import annotations

import argparse
import asyncio
import sys

import httpx

from .service import create_app

EXIT_KIND = {"parse": 2, "unsupported": 4}

_app = None


def _get_app():
    global _app
    if _app is None:
        _app = create_app()
    return _app


async def _post_inprocess(path: str, payload: dict) -> httpx.Response:
    transport = httpx.ASGITransport(app=_get_app())
    async with httpx.AsyncClient(
        transport=transport, base_url="http://blfkit.internal"
    ) as client:
        return await client.post(path, json=payload)


def _post(args, path: str, payload: dict) -> httpx.Response:
    if args.server:
        with httpx.Client(base_url=args.server, timeout=60.0) as client:
            return client.post(path, json=payload)
    return asyncio.run(_post_inprocess(path, payload))


def _call(args, path: str, payload: dict):
    """POST and return the decoded body, or None after printing an error."""
    try:
        resp = _post(args, path, payload)
    except httpx.HTTPError as err:
        print(f"error: {err}", file=sys.stderr)
        return None, 1
    data = resp.json()
    if resp.status_code == 200:
        return data, 0
    if isinstance(data, dict) and "kind" in data:
        print(f"error: {data['message']}", file=sys.stderr)
        return None, EXIT_KIND.get(data["kind"], 3)
    print(f"error: unexpected response {resp.status_code}: {data}", file=sys.stderr)
    return None, 1


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


class CliParser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which this tool reserves for
    # document syntax errors; remap to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def cmd_validate(args) -> int:
    data, code = _call(args, "/validate", {"text": _read(args.file)})
    if data is None:
        return code
    if data["ok"]:
        print("ok")
        return 0
    for v in data["violations"]:
        print(f"{v['where']}: {v['code']}: {v['message']}")
    return 3


def cmd_invariants(args) -> int:
    payload = {"text": _read(args.file), "assume_section": args.assume_section}
    data, code = _call(args, "/invariants", payload)
    if data is None:
        return code
    print(data["text"], end="")
    return 0


def cmd_monodromy(args) -> int:
    data, code = _call(args, "/monodromy", {"text": _read(args.file)})
    if data is None:
        return code
    rows = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in data["matrix"])
    print(f"genus = {data['genus']}")
    print(f"matrix = [{rows}]")
    print(f"identity = {'true' if data['identity'] else 'false'}")
    return 0


def cmd_parity(args) -> int:
    data, code = _call(args, "/parity", {"text": _read(args.file)})
    if data is None:
        return code
    for i, p in enumerate(data["parities"]):
        print(f"round[{i}]: {p}")
    return 0


def cmd_report(args) -> int:
    payload = {"text": _read(args.file), "assume_section": args.assume_section}
    data, code = _call(args, "/report", payload)
    if data is None:
        return code
    print(data["report"], end="")
    return 0


def _print_document(args, path: str, payload: dict) -> int:
    data, code = _call(args, path, payload)
    if data is None:
        return code
    print(data["document"], end="")
    return 0


def cmd_sum(args) -> int:
    return _print_document(
        args,
        "/sum",
        {
            "left_text": _read(args.left),
            "right_text": _read(args.right),
            "gammas": args.gamma,
            "phi1": args.phi1,
            "phi2": args.phi2,
        },
    )


def cmd_csum(args) -> int:
    return _print_document(
        args, "/csum", {"left_text": _read(args.left), "right_text": _read(args.right)}
    )


def cmd_trade(args) -> int:
    return _print_document(args, "/trade", {"text": _read(args.file), "index": args.index})


def cmd_blowdown(args) -> int:
    return _print_document(
        args, "/blowdown", {"text": _read(args.file), "section_index": args.section}
    )


def cmd_step(args) -> int:
    return _print_document(args, "/step", {"genus": args.genus, "framing": args.framing})


def cmd_example42(args) -> int:
    return _print_document(args, "/example42", {"framing": args.framing})


def cmd_sw_wall(args) -> int:
    payload = {
        "value": args.value,
        "d": args.d,
        "sign_h": args.sign_h,
        "sign_h_prime": args.sign_h_prime,
    }
    data, code = _call(args, "/sw/wall", payload)
    if data is None:
        return code
    print(f"value = {data['value']}")
    return 0


def cmd_sw_adjunction(args) -> int:
    payload = {"genus": args.genus, "square": args.square, "pairing": args.pairing}
    data, code = _call(args, "/sw/adjunction", payload)
    if data is None:
        return code
    print("true" if data["ok"] else "false")
    return 0


def cmd_sw_simple_type(args) -> int:
    payload = {"square": args.square, "e": args.e, "sigma": args.sigma}
    data, code = _call(args, "/sw/simple-type", payload)
    if data is None:
        return code
    print("true" if data["ok"] else "false")
    return 0


def cmd_sw_symmetry(args) -> int:
    payload = {"value": args.value, "e": args.e, "sigma": args.sigma}
    data, code = _call(args, "/sw/symmetry", payload)
    if data is None:
        return code
    print(f"value = {data['value']}")
    return 0


def cmd_sw_section(args) -> int:
    payload = {"b_plus": args.b_plus, "nontrivial": args.nontrivial, "k": args.k}
    data, code = _call(args, "/sw/section", payload)
    if data is None:
        return code
    print(data["verdict"])
    return 0


def cmd_sw_vanishing(args) -> int:
    payload = {"torus_square": args.torus_square, "sphere_square": args.sphere_square}
    data, code = _call(args, "/sw/vanishing", payload)
    if data is None:
        return code
    print(data["text"], end="")
    return 0


def build_parser() -> CliParser:
    parser = CliParser(prog="blfkit", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--server", metavar="URL", default=None, help="talk to a running service"
    )
    sub = parser.add_subparsers(dest="command")

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "check a document for semantic coherence")
    p.add_argument("file")

    p = add("invariants", cmd_invariants, "numeric and group invariants of a document")
    p.add_argument("file")
    p.add_argument("--assume-section", action="store_true")

    p = add("monodromy", cmd_monodromy, "boundary monodromy of the higher piece")
    p.add_argument("file")

    p = add("parity", cmd_parity, "effective parity of each round cobordism")
    p.add_argument("file")

    p = add("report", cmd_report, "homeomorphism-type report")
    p.add_argument("file")
    p.add_argument("--assume-section", action="store_true")

    p = add("sum", cmd_sum, "broken fiber sum of two documents")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument(
        "--gamma", action="append", default=[], help="round-handle class, repeatable"
    )
    p.add_argument("--phi1", default="")
    p.add_argument("--phi2", default="")

    p = add("csum", cmd_csum, "connected sum of two documents")
    p.add_argument("left")
    p.add_argument("right")

    p = add("trade", cmd_trade, "trade a negative node for a round handle")
    p.add_argument("file")
    p.add_argument("--index", type=int, required=True)

    p = add("blowdown", cmd_blowdown, "blow down a (-1)-section")
    p.add_argument("file")
    p.add_argument("--section", type=int, required=True)

    p = add("step", cmd_step, "emit a one-round-handle model")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--framing", type=int, required=True)

    p = add("example42", cmd_example42, "emit a twisted two-node model")
    p.add_argument("--framing", type=int, required=True)

    sw = sub.add_parser("sw", help="gauge-theoretic bookkeeping predicates")
    swsub = sw.add_subparsers(dest="sw_command")

    def add_sw(name, func):
        p = swsub.add_parser(name)
        p.set_defaults(func=func)
        return p

    p = add_sw("wall", cmd_sw_wall)
    p.add_argument("--value", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--sign-h", choices=["+", "-"], required=True)
    p.add_argument("--sign-h-prime", choices=["+", "-"], required=True)

    p = add_sw("adjunction", cmd_sw_adjunction)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--square", type=int, required=True)
    p.add_argument("--pairing", type=int, required=True)

    p = add_sw("simple-type", cmd_sw_simple_type)
    p.add_argument("--square", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)

    p = add_sw("symmetry", cmd_sw_symmetry)
    p.add_argument("--value", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)

    p = add_sw("section", cmd_sw_section)
    p.add_argument("--b-plus", type=int, required=True)
    p.add_argument("--nontrivial", action="store_true")
    p.add_argument("--k", type=int, required=True)

    p = add_sw("vanishing", cmd_sw_vanishing)
    p.add_argument("--torus-square", type=int, default=0)
    p.add_argument("--sphere-square", type=int, default=0)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    func = getattr(args, "func", None)
    if func is None:
        parser.print_usage(sys.stderr)
        return 1
    try:
        return func(args)
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
