// Audio graph for the ritual. One loop source (gain + panner bus) per
// cast line feeds a shared compressor and reverb; the ambient phase
// plays through its own bus so the hand-off is a crossfade, not a cut.
// Voices are small oscillator+envelope synths, one recipe per
// instrument so the six lines stay distinguishable.
//
// The engine depends only on the structural subset of the Web Audio
// API declared below, so tests can drive it with a fake context.

import type { ChunkEvent } from "./api.js";

export interface AudioParamLike {
  value: number;
  setValueAtTime(value: number, time: number): unknown;
  linearRampToValueAtTime(value: number, time: number): unknown;
  exponentialRampToValueAtTime?(value: number, time: number): unknown;
}

export interface AudioNodeLike {
  connect(target: AudioNodeLike): unknown;
  disconnect(): void;
}

export interface GainNodeLike extends AudioNodeLike {
  gain: AudioParamLike;
}

export interface PannerNodeLike extends AudioNodeLike {
  pan: AudioParamLike;
}

export interface CompressorNodeLike extends AudioNodeLike {
  threshold: AudioParamLike;
  ratio: AudioParamLike;
}

export interface ConvolverNodeLike extends AudioNodeLike {
  buffer: unknown;
}

export interface OscillatorNodeLike extends AudioNodeLike {
  type: string;
  frequency: AudioParamLike;
  start(when?: number): void;
  stop(when?: number): void;
}

export interface AudioBufferLike {
  getChannelData(channel: number): Float32Array;
}

export interface AudioContextLike {
  currentTime: number;
  sampleRate: number;
  destination: AudioNodeLike;
  createGain(): GainNodeLike;
  createStereoPanner(): PannerNodeLike;
  createDynamicsCompressor(): CompressorNodeLike;
  createConvolver(): ConvolverNodeLike;
  createOscillator(): OscillatorNodeLike;
  createBuffer(channels: number, length: number, sampleRate: number): AudioBufferLike;
}

interface Voice {
  oscillator: OscillatorNodeLike;
  envelope: GainNodeLike;
  stopAt: number;
}

interface LoopSource {
  lineIndex: number;
  instrument: string;
  bus: GainNodeLike;
  panner: PannerNodeLike;
}

// oscillator recipe per instrument: waveform, attack and release in
// seconds, gain scale
const TIMBRES: Record<string, { wave: string; attack: number; release: number; level: number }> = {
  taiko_drum: { wave: "sine", attack: 0.005, release: 0.18, level: 1.0 },
  koto: { wave: "triangle", attack: 0.01, release: 0.35, level: 0.8 },
  shamisen: { wave: "sawtooth", attack: 0.01, release: 0.25, level: 0.55 },
  nylon_guitar: { wave: "triangle", attack: 0.02, release: 0.5, level: 0.7 },
  shakuhachi: { wave: "sine", attack: 0.12, release: 0.4, level: 0.75 },
  flute: { wave: "sine", attack: 0.06, release: 0.3, level: 0.65 },
};
const FALLBACK_TIMBRE = { wave: "sine", attack: 0.02, release: 0.3, level: 0.7 };

export function midiToFrequency(note: number): number {
  return 440 * Math.pow(2, (note - 69) / 12);
}

const CROSSFADE_SECONDS = 2.0;

export class AudioEngine {
  private readonly master: GainNodeLike;
  private readonly compressor: CompressorNodeLike;
  private readonly reverb: ConvolverNodeLike;
  private readonly reverbGain: GainNodeLike;
  private readonly castingBus: GainNodeLike;
  private readonly ambientBus: GainNodeLike;
  private readonly loopSources = new Map<number, LoopSource>();
  private voices: Voice[] = [];

  constructor(private readonly ctx: AudioContextLike) {
    this.master = ctx.createGain();
    this.master.connect(ctx.destination);

    // shared dynamics and space for every voice
    this.compressor = ctx.createDynamicsCompressor();
    this.compressor.threshold.value = -18;
    this.compressor.ratio.value = 4;
    this.compressor.connect(this.master);

    this.reverb = ctx.createConvolver();
    this.reverb.buffer = this.makeImpulse(2.2);
    this.reverbGain = ctx.createGain();
    this.reverbGain.gain.value = 0.3;
    this.compressor.connect(this.reverb);
    this.reverb.connect(this.reverbGain);
    this.reverbGain.connect(this.master);

    this.castingBus = ctx.createGain();
    this.castingBus.gain.value = 1;
    this.castingBus.connect(this.compressor);
    this.ambientBus = ctx.createGain();
    this.ambientBus.gain.value = 0;
    this.ambientBus.connect(this.compressor);
  }

  /** Exponentially decaying noise as a procedural impulse response. */
  private makeImpulse(seconds: number): AudioBufferLike {
    const length = Math.max(1, Math.floor(this.ctx.sampleRate * seconds));
    const buffer = this.ctx.createBuffer(2, length, this.ctx.sampleRate);
    for (let channel = 0; channel < 2; channel++) {
      const data = buffer.getChannelData(channel);
      for (let i = 0; i < length; i++) {
        data[i] = (Math.random() * 2 - 1) * Math.pow(1 - i / length, 2.5);
      }
    }
    return buffer;
  }

  /** Register the loop source for a newly cast line. Idempotent. */
  ensureLoopSource(lineIndex: number, pan: number, instrument: string): void {
    if (this.loopSources.has(lineIndex)) {
      return;
    }
    const bus = this.ctx.createGain();
    bus.gain.value = 1;
    const panner = this.ctx.createStereoPanner();
    panner.pan.value = pan;
    bus.connect(panner);
    panner.connect(this.castingBus);
    this.loopSources.set(lineIndex, { lineIndex, instrument, bus, panner });
  }

  /** How many loop sources are currently sounding. */
  activeLoopSourceCount(): number {
    return this.loopSources.size;
  }

  private spawnVoice(
    event: ChunkEvent,
    when: number,
    target: AudioNodeLike,
  ): void {
    const timbre = TIMBRES[event.instrument] ?? FALLBACK_TIMBRE;
    const oscillator = this.ctx.createOscillator();
    oscillator.type = timbre.wave;
    oscillator.frequency.value = midiToFrequency(event.pitch);
    const envelope = this.ctx.createGain();
    const peak = (event.velocity / 127) * timbre.level;
    envelope.gain.setValueAtTime(0, when);
    envelope.gain.linearRampToValueAtTime(peak, when + timbre.attack);
    const releaseStart = when + Math.max(timbre.attack, event.duration_seconds);
    envelope.gain.setValueAtTime(peak, releaseStart);
    envelope.gain.linearRampToValueAtTime(0, releaseStart + timbre.release);
    oscillator.connect(envelope);
    envelope.connect(target);
    const stopAt = releaseStart + timbre.release + 0.05;
    oscillator.start(when);
    oscillator.stop(stopAt);
    this.voices.push({ oscillator, envelope, stopAt });
    this.reapVoices();
  }

  private reapVoices(): void {
    const now = this.ctx.currentTime;
    this.voices = this.voices.filter((voice) => voice.stopAt > now);
  }

  /** Schedule one casting-loop event into its line's source. */
  scheduleCastingEvent(lineIndex: number, event: ChunkEvent, when: number): void {
    const source = this.loopSources.get(lineIndex);
    if (!source) {
      return; // line not registered (e.g. silenced mid-flight)
    }
    this.spawnVoice(event, when, source.bus);
  }

  /** Schedule one ambient event with its own per-event pan. */
  scheduleAmbientEvent(event: ChunkEvent, when: number): void {
    const panner = this.ctx.createStereoPanner();
    panner.pan.value = event.pan;
    panner.connect(this.ambientBus);
    this.spawnVoice(event, when, panner);
  }

  /** Fade the casting loops out and the ambient stream in. */
  crossfadeToAmbient(): void {
    const now = this.ctx.currentTime;
    this.castingBus.gain.setValueAtTime(this.castingBus.gain.value, now);
    this.castingBus.gain.linearRampToValueAtTime(0, now + CROSSFADE_SECONDS);
    this.ambientBus.gain.setValueAtTime(this.ambientBus.gain.value, now);
    this.ambientBus.gain.linearRampToValueAtTime(1, now + CROSSFADE_SECONDS);
  }

  /** Stop everything and drop all loop sources: the silent state. */
  silenceAll(): void {
    const now = this.ctx.currentTime;
    for (const voice of this.voices) {
      voice.oscillator.stop(now);
    }
    this.voices = [];
    for (const source of this.loopSources.values()) {
      source.bus.disconnect();
      source.panner.disconnect();
    }
    this.loopSources.clear();
    this.castingBus.gain.setValueAtTime(1, now);
    this.ambientBus.gain.setValueAtTime(0, now);
  }

  get currentTime(): number {
    return this.ctx.currentTime;
  }
}
