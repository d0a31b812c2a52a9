import { describe, expect, it } from "vitest";

import { AudioEngine, midiToFrequency } from "../src/audio.js";
import { FakeAudioContext } from "./fakes.js";

const EVENT = {
  onset_seconds: 0,
  duration_seconds: 0.5,
  pitch: 69,
  velocity: 100,
  instrument: "koto",
  pan: 0,
};

function makeEngine() {
  const ctx = new FakeAudioContext();
  return { ctx, engine: new AudioEngine(ctx) };
}

describe("graph construction", () => {
  it("routes everything through one shared compressor and reverb", () => {
    const { ctx } = makeEngine();
    expect(ctx.compressors).toHaveLength(1);
    expect(ctx.convolvers).toHaveLength(1);
    // compressor feeds both the master gain and the reverb send
    const compressor = ctx.compressors[0];
    expect(compressor.targets).toContain(ctx.convolvers[0]);
    expect(ctx.convolvers[0].buffer).not.toBeNull();
  });

  it("converts midi notes to equal-tempered frequencies", () => {
    expect(midiToFrequency(69)).toBeCloseTo(440);
    expect(midiToFrequency(57)).toBeCloseTo(220);
    expect(midiToFrequency(62)).toBeCloseTo(293.665, 2);
  });
});

describe("loop sources", () => {
  it("adds exactly one source per line and is idempotent", () => {
    const { engine } = makeEngine();
    expect(engine.activeLoopSourceCount()).toBe(0);
    engine.ensureLoopSource(1, -0.75, "taiko_drum");
    engine.ensureLoopSource(2, -0.45, "koto");
    engine.ensureLoopSource(2, -0.45, "koto"); // duplicate toss echo
    expect(engine.activeLoopSourceCount()).toBe(2);
  });

  it("applies the per-line pan to the source's panner", () => {
    const { ctx, engine } = makeEngine();
    engine.ensureLoopSource(3, -0.15, "shamisen");
    const panner = ctx.panners[ctx.panners.length - 1];
    expect(panner.pan.value).toBeCloseTo(-0.15);
  });

  it("schedules casting events only into registered lines", () => {
    const { ctx, engine } = makeEngine();
    engine.ensureLoopSource(2, -0.45, "koto");
    engine.scheduleCastingEvent(2, EVENT, 1.0);
    engine.scheduleCastingEvent(4, EVENT, 1.0); // unknown line: no voice
    expect(ctx.oscillators).toHaveLength(1);
    expect(ctx.oscillators[0].started).toEqual([1.0]);
    expect(ctx.oscillators[0].frequency.value).toBeCloseTo(440);
  });
});

describe("ambient and crossfade", () => {
  it("plays ambient events through per-event panners", () => {
    const { ctx, engine } = makeEngine();
    engine.scheduleAmbientEvent({ ...EVENT, pan: 0.6 }, 2.0);
    const panner = ctx.panners[ctx.panners.length - 1];
    expect(panner.pan.value).toBeCloseTo(0.6);
    expect(ctx.oscillators).toHaveLength(1);
  });

  it("crossfades casting down and ambient up", () => {
    const { ctx, engine } = makeEngine();
    ctx.currentTime = 10;
    engine.crossfadeToAmbient();
    // castingBus is the gain created right after master+reverbGain
    const ramps = ctx.gains.flatMap((g) => g.gain.ramps.filter((r) => r.kind === "linear"));
    const targets = ramps.map((r) => ({ value: r.value, time: r.time }));
    expect(targets).toContainEqual({ value: 0, time: 12 });
    expect(targets).toContainEqual({ value: 1, time: 12 });
  });
});

describe("silence", () => {
  it("stops all voices and drops every loop source", () => {
    const { ctx, engine } = makeEngine();
    engine.ensureLoopSource(1, -0.75, "taiko_drum");
    engine.ensureLoopSource(2, -0.45, "koto");
    engine.scheduleCastingEvent(1, { ...EVENT, instrument: "taiko_drum" }, 0.5);
    engine.scheduleCastingEvent(2, EVENT, 0.5);
    engine.silenceAll();
    expect(engine.activeLoopSourceCount()).toBe(0);
    for (const oscillator of ctx.oscillators) {
      expect(oscillator.stopped.length).toBeGreaterThan(0);
    }
  });

  it("leaves the graph reusable for a fresh casting", () => {
    const { engine } = makeEngine();
    engine.ensureLoopSource(1, -0.75, "taiko_drum");
    engine.silenceAll();
    engine.ensureLoopSource(1, -0.75, "taiko_drum");
    expect(engine.activeLoopSourceCount()).toBe(1);
  });
});
