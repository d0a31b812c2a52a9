"""Command-line driver for the full ritual and its artifacts.

Every subcommand that accepts ``--seed`` is bit-reproducible: the same
seed yields the same stdout and identical output files. Exit codes:
0 success, 2 usage or input validation error, 3 provider failure,
4 I/O or input-file error.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from pathlib import Path
from typing import Optional

from .casting import CastingRecord, toss_coins
from .corpus import Corpus, default_corpus, load_corpus
from .errors import (
    CorpusSchemaError,
    EmptyQuestion,
    HexatoneError,
    MalformedProviderOutput,
    ProviderUnavailable,
)
from .interpret import (
    Inquiry,
    assemble_prompt,
    build_music_plan,
    interpret,
    plan_from_jsonable,
    provider_by_name,
)
from .music.ambient import render_ambient
from .music.cage import cage_compose, default_charts, load_charts
from .music.layers import accumulate_layers, layer_for_line, render_casting
from .music.params import GenParams, params_from_json
from .render.midi import write_midi
from .rng import STREAM_CASTING, substream
from .serialize import canonical_json

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PROVIDER = 3
EXIT_IO = 4

LINE_LABELS = {6: "old yin", 7: "young yang", 8: "young yin", 9: "old yang"}
LINE_GLYPHS = {6: "-- x --", 7: "-------", 8: "--   --", 9: "---o---"}


def _load_corpus_arg(path: Optional[str]) -> Corpus:
    return load_corpus(path) if path else default_corpus()


def _load_params_arg(path: Optional[str]) -> GenParams:
    return params_from_json(path) if path else GenParams()


def _resolve_seed(seed: Optional[int]) -> int:
    return secrets.randbits(64) if seed is None else seed & ((1 << 64) - 1)


def _cast_record(seed: int) -> CastingRecord:
    rng = substream(seed, STREAM_CASTING)
    record = CastingRecord(seed=seed)
    for _ in range(6):
        record = record.with_toss(toss_coins(rng))
    return record


def cmd_cast(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    corpus = _load_corpus_arg(args.corpus)
    Inquiry(question=args.question)  # validates non-emptiness
    record = _cast_record(seed)
    ben, zhi = record.ben_gua, record.zhi_gua
    if args.json:
        doc = record.to_jsonable()
        doc["names"] = {
            "ben": corpus.entry(ben.king_wen).name_pinyin,
            "zhi": corpus.entry(zhi.king_wen).name_pinyin,
        }
        doc["question"] = args.question
        print(canonical_json(doc))
        return EXIT_OK
    print(f"question: {args.question}")
    print(f"seed: {seed}")
    for i, (toss, line) in enumerate(zip(record.tosses, record.lines), start=1):
        coins = " ".join(c.value for c in toss.coins)
        print(
            f"toss {i}: {coins}  sum {toss.total}  "
            f"{LINE_GLYPHS[line.source_sum]}  {LINE_LABELS[line.source_sum]}"
        )
    ben_entry = corpus.entry(ben.king_wen)
    zhi_entry = corpus.entry(zhi.king_wen)
    print(f"ben gua: {ben.king_wen} {ben_entry.name_pinyin} ({ben_entry.name_translated})")
    dong = ", ".join(str(i) for i in record.dong_yao) or "none"
    print(f"dong yao: {dong}")
    print(f"zhi gua: {zhi.king_wen} {zhi_entry.name_pinyin} ({zhi_entry.name_translated})")
    return EXIT_OK


def _build_layers(record: CastingRecord, params: GenParams, seed: int):
    layers = []
    for index, line in enumerate(record.lines, start=1):
        layers = accumulate_layers(
            layers, layer_for_line(line, index, params, seed, index)
        )
    return layers


def cmd_render_casting(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    params = _load_params_arg(args.params)
    record = _cast_record(seed)
    layers = _build_layers(record, params, seed)
    stream = render_casting(layers, args.cycles, params)
    data = write_midi(stream)
    Path(args.out).write_bytes(data)
    if args.json:
        print(canonical_json({"out": args.out, "seed": seed, "events": len(stream.events)}))
    else:
        print(f"wrote {args.out}: {len(stream.events)} events, seed {seed}")
    return EXIT_OK


def cmd_interpret(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    corpus = _load_corpus_arg(args.corpus)
    provider = provider_by_name(args.provider)
    inquiry = Inquiry(question=args.question, name=args.name)
    record = _cast_record(seed)
    doc = assemble_prompt(inquiry, record, corpus)
    reading = interpret(doc, provider)
    plan = build_music_plan(reading, record, provider.provider_id, doc.template_version)
    plan_json = plan.to_canonical_json()
    if args.out:
        Path(args.out).write_text(plan_json + "\n", encoding="utf-8")
    if args.json:
        print(canonical_json({"reading": reading.to_jsonable(), "plan": plan.to_jsonable(), "seed": seed}))
    else:
        print(reading.body)
        print()
        print(f"plan: {plan_json}")
    return EXIT_OK


def cmd_ambient(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    with open(args.plan, encoding="utf-8") as f:
        plan = plan_from_jsonable(json.load(f))
    stream = render_ambient(plan, seed)
    Path(args.out).write_bytes(write_midi(stream))
    if args.json:
        print(canonical_json({
            "out": args.out,
            "seed": seed,
            "events": len(stream.events),
            "duration_seconds": float(stream.total_duration),
        }))
    else:
        print(
            f"wrote {args.out}: {len(stream.events)} events over "
            f"{float(stream.total_duration):g}s, seed {seed}"
        )
    return EXIT_OK


def cmd_cage(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    charts = load_charts(args.charts) if args.charts else default_charts()
    if args.events < 1:
        raise EmptyQuestion("--events must be at least 1")
    stream = cage_compose(args.events, charts, seed)
    Path(args.out).write_bytes(write_midi(stream))
    if args.json:
        print(canonical_json({"out": args.out, "seed": seed, "events": len(stream.events)}))
    else:
        print(f"wrote {args.out}: {len(stream.events)} sounded events, seed {seed}")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.api import create_app
    from .service.log import EventLog
    from .service.manager import SessionManager

    manager = SessionManager(
        corpus=_load_corpus_arg(args.corpus),
        provider=provider_by_name(args.provider),
        params=_load_params_arg(args.params),
        log=EventLog(args.log) if args.log else None,
        ttl_seconds=args.ttl,
    )
    uvicorn.run(create_app(manager), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexatone",
        description="Coin-oracle divination engine: cast, interpret, and render.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, corpus=False, params=False):
        p.add_argument("--seed", type=int, default=None, help="64-bit seed; omit for entropy")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if corpus:
            p.add_argument("--corpus", default=None, help="path to a corpus JSON file")
        if params:
            p.add_argument("--params", default=None, help="path to a generation params JSON file")

    p = sub.add_parser("cast", help="run intake and casting, print the hexagrams")
    p.add_argument("--question", required=True)
    add_common(p, corpus=True)
    p.set_defaults(func=cmd_cast)

    p = sub.add_parser("render-casting", help="write the casting loops as a MIDI file")
    p.add_argument("--cycles", type=int, default=4, help="loop repetitions to unroll")
    p.add_argument("--out", required=True)
    add_common(p, params=True)
    p.set_defaults(func=cmd_render_casting)

    p = sub.add_parser("interpret", help="full pipeline: reading text plus plan JSON")
    p.add_argument("--question", required=True)
    p.add_argument("--name", default=None)
    p.add_argument("--provider", choices=["mock", "remote"], default="mock")
    p.add_argument("--out", default=None, help="also write the plan JSON to this file")
    add_common(p, corpus=True)
    p.set_defaults(func=cmd_interpret)

    p = sub.add_parser("ambient", help="render a plan JSON file to a MIDI file")
    p.add_argument("--plan", required=True)
    p.add_argument("--out", required=True)
    add_common(p)
    p.set_defaults(func=cmd_ambient)

    p = sub.add_parser("cage", help="chart-mode composition to a MIDI file")
    p.add_argument("--events", type=int, required=True)
    p.add_argument("--charts", default=None, help="path to a chart JSON file")
    p.add_argument("--out", required=True)
    add_common(p)
    p.set_defaults(func=cmd_cage)

    p = sub.add_parser("serve", help="run the session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8642)
    p.add_argument("--log", default=None, help="JSONL event log path")
    p.add_argument("--ttl", type=float, default=3600, help="idle session TTL in seconds")
    p.add_argument("--provider", choices=["mock", "remote"], default="mock")
    add_common(p, corpus=True, params=True)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ProviderUnavailable, MalformedProviderOutput) as exc:
        print(f"provider error: {exc}", file=sys.stderr)
        return EXIT_PROVIDER
    except (OSError, CorpusSchemaError, json.JSONDecodeError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except HexatoneError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
