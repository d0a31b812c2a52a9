"""Acceptance suite: the engine's contract, one criterion per test.

Run with ``pytest tests/test_acceptance.py -s`` to see the PASS/FAIL
line for each criterion. Every tolerance is pinned here; nothing is
calibrated at runtime.
"""

import itertools
import json
import time
from collections import Counter
from fractions import Fraction
from pathlib import Path

import jsonschema
from scipy.stats import chisquare

from hexatone.casting import (
    Hexagram,
    Line,
    Polarity,
    derive_zhi_gua,
    toss_coins,
)
from hexatone.corpus import default_corpus
from hexatone.interpret import (
    Inquiry,
    MockProvider,
    assemble_prompt,
    build_music_plan,
    interpret,
)
from hexatone.interpret.plan import MusicPlan, PlanConfig, Provenance
from hexatone.music.ambient import render_ambient
from hexatone.music.cage import cage_compose, default_charts
from hexatone.music.layers import accumulate_layers, layer_for_line, render_casting
from hexatone.music.params import GenParams
from hexatone.render.midi import write_midi
from hexatone.rng import STREAM_CASTING, SplitMix64, substream
from hexatone.serialize import canonical_json
from hexatone.service.log import EventLog, replay_session
from hexatone.service.manager import SessionManager
from hexatone.service.sessions import SessionState, session_snapshot

from conftest import cast_record
from midi_reader import parse_midi

CORPUS = default_corpus()
PARAMS = GenParams()
SCHEMA_DIR = Path(__file__).parent.parent / "docs"


def report(criterion: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    print(f"{status}  {criterion}{suffix}")
    assert ok, f"{criterion}{suffix}"


def test_casting_statistics():
    started = time.perf_counter()
    rng = substream(0xACCE97, STREAM_CASTING)
    counts = Counter(toss_coins(rng).total for _ in range(10_000))
    observed = [counts[6], counts[7], counts[8], counts[9]]
    expected = [1250.0, 3750.0, 3750.0, 1250.0]
    pvalue = chisquare(observed, expected).pvalue
    elapsed = time.perf_counter() - started
    report(
        "casting statistics: 10,000 tosses match (1/8, 3/8, 3/8, 1/8)",
        pvalue > 0.001 and elapsed < 5.0,
        f"p={pvalue:.4f}, {elapsed:.2f}s",
    )


def test_hexagram_algebra():
    started = time.perf_counter()
    # exhaustive: all 4096 line-type patterns project onto 64 distinct
    # polarity patterns, each with its own number, 64 patterns per number
    number_by_polarity = {}
    hits = Counter()
    for sums in itertools.product((6, 7, 8, 9), repeat=6):
        lines = [Line.from_sum(s) for s in sums]
        hexagram = Hexagram.from_polarities(line.polarity for line in lines)
        key = tuple(p is Polarity.YANG for p in hexagram.lines)
        previous = number_by_polarity.setdefault(key, hexagram.king_wen)
        assert previous == hexagram.king_wen
        hits[hexagram.king_wen] += 1
    bijective = (
        len(number_by_polarity) == 64
        and sorted(number_by_polarity.values()) == list(range(1, 65))
        and all(count == 64 for count in hits.values())
    )

    # randomized: flips land exactly on the changing set and undo themselves
    rng = SplitMix64(0xA16EB4A)
    flips_ok = True
    for _ in range(10_000):
        pattern = [Polarity.YANG if rng.next_below(2) else Polarity.YIN for _ in range(6)]
        ben = Hexagram.from_polarities(pattern)
        dong_yao = {i + 1 for i in range(6) if rng.next_below(2)}
        zhi = derive_zhi_gua(ben, dong_yao)
        changed = {i + 1 for i in range(6) if zhi.lines[i] is not ben.lines[i]}
        if changed != dong_yao or derive_zhi_gua(zhi, dong_yao) != ben:
            flips_ok = False
            break
    elapsed = time.perf_counter() - started
    report(
        "hexagram algebra: bijection and exact involution of line flips",
        bijective and flips_ok and elapsed < 5.0,
        f"{elapsed:.2f}s",
    )


def test_pentatonic_invariant():
    allowed = PARAMS.pitch_classes()
    violations = 0
    checked = 0
    for seed in range(167):  # 167 seeds x 6 lines = 1002 layers
        record = cast_record(seed)
        for index, line in enumerate(record.lines, start=1):
            layer = layer_for_line(line, index, PARAMS, seed, index)
            checked += 1
            violations += sum(1 for e in layer.loop if e.pitch % 12 not in allowed)
    report(
        "scale confinement: every note of 1,000+ layers in the pentatonic set",
        violations == 0 and checked >= 1000,
        f"{checked} layers, {violations} violations",
    )


def test_direction_and_duration_bias():
    old_yang, old_yin = Line.from_sum(9), Line.from_sum(6)
    ups = downs = 0
    yang_durations = []
    yin_durations = []
    for seed in range(1000):
        layer = layer_for_line(old_yang, 5, PARAMS, seed, 5)
        pitches = [e.pitch for e in layer.loop]
        for a, b in zip(pitches, pitches[1:]):
            ups += b > a
            downs += b < a
        yang_durations += [e.duration for e in layer.loop]
        yin_layer = layer_for_line(old_yin, 5, PARAMS, seed, 5)
        yin_durations += [e.duration for e in yin_layer.loop]
    fraction = ups / (ups + downs)
    mean_yang = sum(yang_durations) / len(yang_durations)
    mean_yin = sum(yin_durations) / len(yin_durations)
    report(
        "line-type bias: ascending fraction 0.7±0.05 and longer notes for old yang",
        abs(fraction - 0.7) <= 0.05 and mean_yang > mean_yin,
        f"asc={fraction:.3f}, dur {float(mean_yang):.2f} vs {float(mean_yin):.2f}",
    )


def _random_plan(rng: SplitMix64) -> MusicPlan:
    moods = ["calm", "radiant", "grave", "restless", "tender", "distant"]
    energies = ["still", "flowing", "surging", "drifting", "coursing"]
    dynamics = ["soft", "swelling", "bold", "hushed", "striking"]
    spatials = ["vast", "close", "open", "weaving", "enveloping"]
    keywords = {
        "mood": [rng.choice(moods)],
        "energy": [rng.choice(energies)],
        "dynamics": [rng.choice(dynamics)],
        "spatial": [rng.choice(spatials)],
    }
    return MusicPlan(
        prompts=(("ambient passage, " + keywords["mood"][0], 1.0),),
        config=PlanConfig(
            bpm=(50, 66, 72, 84)[rng.next_below(4)],
            density=rng.next_below(101) / 100,
            duration_seconds=30 + rng.next_below(31),
        ),
        keywords=keywords,
        provenance=Provenance(provider="mock", template_version="t", casting_digest="0" * 64),
    )


def test_ambient_duration_bounds():
    rng = SplitMix64(0xA3B1E47)
    ok = True
    for i in range(100):
        plan = _random_plan(rng)
        stream = render_ambient(plan, seed=i)
        if not Fraction(30) <= stream.total_duration <= Fraction(60):
            ok = False
            break
    report("ambient duration: 100 random plans all render to 30-60 s", ok)


def _full_run(seed: int, question: str):
    record = cast_record(seed)
    layers = []
    for index, line in enumerate(record.lines, start=1):
        layers = accumulate_layers(
            layers, layer_for_line(line, index, PARAMS, seed, index)
        )
    casting_midi = write_midi(render_casting(layers, 4, PARAMS))
    doc = assemble_prompt(Inquiry(question=question), record, CORPUS)
    reading = interpret(doc, MockProvider())
    plan = build_music_plan(reading, record, "mock", doc.template_version)
    ambient_midi = write_midi(render_ambient(plan, seed))
    return (
        canonical_json(record.to_jsonable()),
        plan.to_canonical_json(),
        casting_midi,
        ambient_midi,
    )


def test_end_to_end_determinism():
    first = _full_run(0xD06F00D, "what is taking shape")
    second = _full_run(0xD06F00D, "what is taking shape")
    report(
        "determinism: record JSON, plan JSON, casting MIDI, ambient MIDI byte-identical",
        first == second,
    )


def test_state_machine_soundness():
    manager = SessionManager()
    rng = SplitMix64(0x57A7E)
    session_id = manager.create(seed=1).id

    # reference model: expected state after a legal mutating call
    def expected_after(op, state, tosses):
        if op == "reset":
            return SessionState.INTAKE
        table = {
            ("inquiry", SessionState.INTAKE): SessionState.CASTING,
            ("interpret", SessionState.INTERPRETING): SessionState.PLAYBACK,
            ("complete", SessionState.PLAYBACK): SessionState.COMPLETE,
        }
        if (op, state) in table:
            return table[(op, state)]
        if op == "toss" and state is SessionState.CASTING:
            return SessionState.INTERPRETING if tosses == 5 else SessionState.CASTING
        return None  # illegal from here

    operations = ["inquiry", "toss", "interpret", "complete", "reset", "plan_read", "playback_read"]
    mutating_ops = {"inquiry", "toss", "interpret", "complete", "reset"}
    ok = True
    detail = ""
    for step in range(10_000):
        session = manager._sessions[session_id]
        state_before, tosses_before = session.state, session.tosses_done
        snapshot_before = canonical_json(session_snapshot(session))
        op = operations[rng.next_below(len(operations))]
        failed = False
        try:
            if op == "inquiry":
                manager.submit_inquiry(session_id, "question", None)
            elif op == "toss":
                manager.perform_toss(session_id)
            elif op == "interpret":
                manager.run_interpretation(session_id)
            elif op == "complete":
                manager.complete(session_id)
            elif op == "reset":
                manager.reset(session_id)
            elif op == "plan_read":
                manager.get_plan(session_id)
            elif op == "playback_read":
                manager.get_playback(session_id, Fraction(0), Fraction(2))
        except Exception:
            failed = True

        session = manager._sessions[session_id]
        expected = expected_after(op, state_before, tosses_before)
        if op in mutating_ops:
            if failed:
                if expected is not None:
                    ok, detail = False, f"step {step}: legal {op} from {state_before} failed"
                    break
                if canonical_json(session_snapshot(session)) != snapshot_before:
                    ok, detail = False, f"step {step}: rejected {op} mutated session"
                    break
            else:
                if expected is None:
                    ok, detail = False, f"step {step}: {op} allowed from {state_before}"
                    break
                if session.state is not expected:
                    ok, detail = False, f"step {step}: {op} landed in {session.state}"
                    break
        elif not failed and canonical_json(session_snapshot(session)) != snapshot_before:
            ok, detail = False, f"step {step}: read {op} mutated session"
            break
        if op == "reset" and not failed and (session.layers or session.inquiry):
            ok, detail = False, "reset did not silence the session"
            break
        if len(session.layers) != session.tosses_done:
            ok, detail = False, "layer count diverged from tosses"
            break
    report(
        "state machine: 10,000 randomized calls stay sound, rejects never mutate",
        ok,
        detail,
    )


def test_replay_reconstruction(tmp_path_factory):
    tmp_path = tmp_path_factory.mktemp("replay")
    log = EventLog(tmp_path / "events.jsonl")
    manager = SessionManager(log=log)
    session = manager.create(seed=0xBEEF)
    manager.submit_inquiry(session.id, "what next", "Jo")
    for _ in range(6):
        manager.perform_toss(session.id)
    manager.run_interpretation(session.id)
    manager.reset(session.id)
    manager.submit_inquiry(session.id, "and after that", None)
    for _ in range(6):
        manager.perform_toss(session.id)
    manager.run_interpretation(session.id)
    manager.complete(session.id)

    live = canonical_json(session_snapshot(manager._sessions[session.id]))
    replayed = canonical_json(session_snapshot(replay_session(log.path, session.id)))
    report("replay: logged session reconstructs byte-identically", live == replayed)


def test_format_validity():
    plan_schema = json.loads((SCHEMA_DIR / "music_plan.schema.json").read_text())
    chunk_schema = json.loads((SCHEMA_DIR / "playback_chunk.schema.json").read_text())
    ok = True
    detail = ""
    try:
        for seed in range(12):
            record = cast_record(seed)
            layers = []
            for index, line in enumerate(record.lines, start=1):
                layers = accumulate_layers(
                    layers, layer_for_line(line, index, PARAMS, seed, index)
                )
            stream = render_casting(layers, 2, PARAMS)
            parse_midi(write_midi(stream))

            doc = assemble_prompt(Inquiry(question="q"), record, CORPUS)
            reading = interpret(doc, MockProvider())
            plan = build_music_plan(reading, record, "mock", doc.template_version)
            jsonschema.validate(json.loads(plan.to_canonical_json()), plan_schema)

            ambient = render_ambient(plan, seed)
            parse_midi(write_midi(ambient))

            from hexatone.render.chunks import chunk_stream

            chunk = chunk_stream(ambient, Fraction(0), Fraction(15))
            jsonschema.validate(chunk.to_jsonable(), chunk_schema)

        parse_midi(write_midi(cage_compose(48, default_charts(), seed=3)))
    except Exception as exc:  # noqa: BLE001 - any failure fails the criterion
        ok, detail = False, repr(exc)
    report("formats: every MIDI parses independently, every plan matches schema", ok, detail)


def test_cage_mode():
    counts = Counter()
    for sums in itertools.product((6, 7, 8, 9), repeat=6):
        lines = [Line.from_sum(s) for s in sums]
        hexagram = Hexagram.from_polarities(line.polarity for line in lines)
        counts[hexagram.king_wen] += 1
    uniform = set(counts) == set(range(1, 65)) and all(
        count == 64 for count in counts.values()
    )
    charts = default_charts()
    reproducible = write_midi(cage_compose(40, charts, seed=11)) == write_midi(
        cage_compose(40, charts, seed=11)
    )
    report(
        "chart mode: uniform pushforward over 64 entries, bit-reproducible output",
        uniform and reproducible,
    )
