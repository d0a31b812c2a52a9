// In-memory doubles: a fake Web Audio context that records the graph,
// and a fake session API that follows the wire contract.

import type {
  AudioContextLike,
  AudioParamLike,
  GainNodeLike,
  PannerNodeLike,
} from "../src/audio.js";
import type {
  PlaybackChunk,
  SessionState,
  SessionView,
  TossResult,
} from "../src/api.js";

export class FakeParam implements AudioParamLike {
  value = 0;
  ramps: Array<{ kind: string; value: number; time: number }> = [];

  setValueAtTime(value: number, time: number): void {
    this.value = value;
    this.ramps.push({ kind: "set", value, time });
  }

  linearRampToValueAtTime(value: number, time: number): void {
    this.value = value;
    this.ramps.push({ kind: "linear", value, time });
  }
}

export class FakeNode {
  targets: FakeNode[] = [];
  disconnected = false;

  connect(target: FakeNode): FakeNode {
    this.targets.push(target);
    this.disconnected = false;
    return target;
  }

  disconnect(): void {
    this.targets = [];
    this.disconnected = true;
  }
}

export class FakeGain extends FakeNode implements GainNodeLike {
  gain = new FakeParam();
}

export class FakePanner extends FakeNode implements PannerNodeLike {
  pan = new FakeParam();
}

export class FakeCompressor extends FakeNode {
  threshold = new FakeParam();
  ratio = new FakeParam();
}

export class FakeConvolver extends FakeNode {
  buffer: unknown = null;
}

export class FakeOscillator extends FakeNode {
  type = "sine";
  frequency = new FakeParam();
  started: number[] = [];
  stopped: number[] = [];

  start(when = 0): void {
    this.started.push(when);
  }

  stop(when = 0): void {
    this.stopped.push(when);
  }
}

export class FakeAudioContext implements AudioContextLike {
  currentTime = 0;
  sampleRate = 8000;
  destination = new FakeNode();
  gains: FakeGain[] = [];
  panners: FakePanner[] = [];
  oscillators: FakeOscillator[] = [];
  compressors: FakeCompressor[] = [];
  convolvers: FakeConvolver[] = [];

  createGain(): FakeGain {
    const node = new FakeGain();
    this.gains.push(node);
    return node;
  }

  createStereoPanner(): FakePanner {
    const node = new FakePanner();
    this.panners.push(node);
    return node;
  }

  createDynamicsCompressor(): FakeCompressor {
    const node = new FakeCompressor();
    this.compressors.push(node);
    return node;
  }

  createConvolver(): FakeConvolver {
    const node = new FakeConvolver();
    this.convolvers.push(node);
    return node;
  }

  createOscillator(): FakeOscillator {
    const node = new FakeOscillator();
    this.oscillators.push(node);
    return node;
  }

  createBuffer(channels: number, length: number, _sampleRate: number) {
    const data = Array.from({ length: channels }, () => new Float32Array(length));
    return { getChannelData: (channel: number) => data[channel] };
  }
}

const INSTRUMENT_BY_LINE: Record<number, string> = {
  1: "taiko_drum",
  2: "koto",
  3: "shamisen",
  4: "nylon_guitar",
  5: "shakuhachi",
  6: "flute",
};

// canonical bytes exactly as the plan endpoint would serve them
export const PLAN_TEXT =
  '{"config":{"bpm":66,"density":0.6,"duration_seconds":45},' +
  '"keywords":{"dynamics":["swelling"],"energy":["flowing"],"mood":["calm"],"spatial":["open"]},' +
  '"prompts":[{"text":"mood: calm","weight":1.0}],' +
  '"provenance":{"casting_digest":"' + "ab".repeat(32) + '","provider":"mock","template_version":"reading-v1"}}';

/** Scripted session service honoring the wire contract. */
export class FakeApi {
  state: SessionState = "intake";
  tosses = 0;
  resets = 0;
  interpretCalls = 0;
  planFetches = 0;
  playbackRequests: Array<{ from: number; window: number; state: SessionState }> = [];
  private question: string | null = null;

  async createSession(seed?: number) {
    return { id: "fake-session", seed: seed ?? 1234, state: this.state };
  }

  private viewNow(): SessionView {
    const view: SessionView = {
      id: "fake-session",
      seed: 1234,
      epoch: this.resets,
      state: this.state,
      tosses_done: this.tosses,
      inquiry: this.question ? { question: this.question, name: null } : null,
      layers: Array.from({ length: this.tosses }, (_, i) => ({
        line_index: i + 1,
        instrument: INSTRUMENT_BY_LINE[i + 1],
        pan: -0.75 + 0.3 * i,
        note_count: 8,
      })),
    };
    if (this.state === "intake" || this.state === "casting") {
      view.tosses = Array.from({ length: this.tosses }, () => ["H", "T", "H"]);
    } else {
      view.hexagrams = {
        ben: {
          king_wen: 11,
          lines: ["yang", "yang", "yang", "yin", "yin", "yin"],
          trigrams: [1, 8],
        },
        dong_yao: [2, 5],
        zhi: {
          king_wen: 63,
          lines: ["yang", "yin", "yang", "yin", "yang", "yin"],
          trigrams: [3, 6],
        },
      };
      if (this.state !== "interpreting") {
        view.reading = {
          body: "A reading.\nIt says things.",
          keywords: { mood: ["calm"], energy: ["flowing"], dynamics: ["swelling"], spatial: ["open"] },
        };
      }
    }
    return view;
  }

  async getSession(_id: string): Promise<SessionView> {
    return this.viewNow();
  }

  async submitInquiry(_id: string, question: string): Promise<SessionView> {
    if (this.state !== "intake") throw new Error("invalid_state");
    if (!question.trim()) throw new Error("empty_question");
    this.question = question;
    this.state = "casting";
    return this.viewNow();
  }

  async toss(_id: string): Promise<TossResult> {
    if (this.state !== "casting") throw new Error("invalid_state");
    this.tosses += 1;
    if (this.tosses === 6) this.state = "interpreting";
    return {
      toss_index: this.tosses,
      coins: ["H", "T", "H"],
      layer_summary: {
        line_index: this.tosses,
        instrument: INSTRUMENT_BY_LINE[this.tosses],
        pan: -0.75 + 0.3 * (this.tosses - 1),
        note_count: 8,
      },
      state: this.state,
    };
  }

  async interpret(_id: string): Promise<SessionView> {
    if (this.state !== "interpreting") throw new Error("invalid_state");
    this.interpretCalls += 1;
    this.state = "playback";
    return this.viewNow();
  }

  async getPlanText(_id: string): Promise<string> {
    if (this.state !== "playback" && this.state !== "complete") {
      throw new Error("plan_not_ready");
    }
    this.planFetches += 1;
    return PLAN_TEXT;
  }

  async getPlayback(_id: string, from: number, window: number): Promise<PlaybackChunk> {
    this.playbackRequests.push({ from, window, state: this.state });
    const perLayer = this.state === "casting" || this.state === "interpreting" ? this.tosses : 2;
    const events = Array.from({ length: perLayer }, (_, i) => ({
      onset_seconds: from + i * 0.5,
      duration_seconds: 0.5,
      pitch: 62 + i,
      velocity: 80,
      instrument: INSTRUMENT_BY_LINE[(i % 6) + 1],
      pan: 0,
    }));
    return {
      from_time: from,
      window,
      tempo: 72,
      stream_digest: "d".repeat(64),
      events,
    };
  }

  async reset(_id: string): Promise<SessionView> {
    this.resets += 1;
    this.state = "intake";
    this.tosses = 0;
    this.question = null;
    return this.viewNow();
  }
}
