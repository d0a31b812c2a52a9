// Screen controller: holds the session view, routes user intents to
// the API, and keeps the audio graph in step with the ritual. All
// session semantics live server-side; this controller renders what the
// server exposes and never caches hexagram identity around the
// server's pre-interpretation redaction.

import { ApiClient, SessionView, TossResult } from "./api.js";
import { AudioEngine } from "./audio.js";

export type Screen = "intake" | "casting" | "interpretation";

const PLAYBACK_WINDOW_SECONDS = 4;
// schedule slightly ahead so the first notes of a window are not late
const SCHEDULE_LATENCY = 0.08;

export class AppController {
  screen: Screen = "intake";
  view: SessionView | null = null;
  planText: string | null = null;
  lastToss: TossResult | null = null;
  busy = false;
  instructionsVisible = false;
  errorMessage: string | null = null;

  private sessionId: string | null = null;
  private history: Screen[] = [];
  private castingCursor = 0;
  private ambientCursor = 0;
  private playbackEpoch = 0;

  constructor(
    private readonly api: ApiClient,
    private readonly audio: AudioEngine,
  ) {}

  /** One state-changing request at a time; buttons disable on `busy`. */
  private async mutate<T>(action: () => Promise<T>): Promise<T> {
    if (this.busy) {
      throw new Error("a request is already in flight");
    }
    this.busy = true;
    this.errorMessage = null;
    try {
      return await action();
    } catch (error) {
      this.errorMessage = error instanceof Error ? error.message : String(error);
      throw error;
    } finally {
      this.busy = false;
    }
  }

  private goTo(screen: Screen): void {
    if (this.screen !== screen) {
      this.history.push(this.screen);
      this.screen = screen;
    }
  }

  async start(seed?: number): Promise<void> {
    await this.mutate(async () => {
      const created = await this.api.createSession(seed);
      this.sessionId = created.id;
      this.view = await this.api.getSession(created.id);
      this.screen = "intake";
      this.history = [];
    });
  }

  private requireSession(): string {
    if (!this.sessionId) {
      throw new Error("no session yet");
    }
    return this.sessionId;
  }

  async submitInquiry(question: string, name?: string): Promise<void> {
    await this.mutate(async () => {
      const id = this.requireSession();
      this.view = await this.api.submitInquiry(id, question, name || undefined);
      this.goTo("casting");
    });
  }

  /**
   * One user-initiated toss: the server casts the line and describes
   * the new loop layer; the audio graph gains exactly one loop source.
   * After the sixth toss the casting loops keep sounding while the
   * interpretation request runs; its completion swaps the screen and
   * crossfades into the ambient stream.
   */
  async performToss(): Promise<TossResult> {
    const result = await this.mutate(async () => {
      const id = this.requireSession();
      const toss = await this.api.toss(id);
      this.lastToss = toss;
      this.audio.ensureLoopSource(
        toss.layer_summary.line_index,
        toss.layer_summary.pan,
        toss.layer_summary.instrument,
      );
      this.view = await this.api.getSession(id);
      return toss;
    });
    if (result.state === "interpreting") {
      await this.runInterpretation();
    }
    return result;
  }

  private async runInterpretation(): Promise<void> {
    await this.mutate(async () => {
      const id = this.requireSession();
      this.view = await this.api.interpret(id);
      this.planText = await this.api.getPlanText(id);
      this.goTo("interpretation");
      this.audio.crossfadeToAmbient();
      this.ambientCursor = 0;
    });
  }

  /**
   * Pull the next playback window and schedule it. Call on a timer
   * roughly every PLAYBACK_WINDOW_SECONDS while a session is live.
   */
  async pumpPlayback(): Promise<void> {
    if (!this.sessionId || !this.view) {
      return;
    }
    const state = this.view.state;
    const epoch = this.playbackEpoch;
    const base = this.audio.currentTime + SCHEDULE_LATENCY;
    if (state === "casting" || state === "interpreting") {
      const chunk = await this.api.getPlayback(
        this.sessionId,
        this.castingCursor,
        PLAYBACK_WINDOW_SECONDS,
      );
      if (epoch !== this.playbackEpoch) {
        return; // restarted while the request was in flight
      }
      const windowStart = this.castingCursor;
      this.castingCursor += PLAYBACK_WINDOW_SECONDS;
      const byLine = this.lineIndexByInstrument();
      for (const event of chunk.events) {
        const lineIndex = byLine.get(event.instrument);
        if (lineIndex !== undefined) {
          this.audio.scheduleCastingEvent(
            lineIndex,
            event,
            base + (event.onset_seconds - windowStart),
          );
        }
      }
    } else if (state === "playback" || state === "complete") {
      const chunk = await this.api.getPlayback(
        this.sessionId,
        this.ambientCursor,
        PLAYBACK_WINDOW_SECONDS,
      );
      if (epoch !== this.playbackEpoch) {
        return;
      }
      const windowStart = this.ambientCursor;
      this.ambientCursor += PLAYBACK_WINDOW_SECONDS;
      for (const event of chunk.events) {
        this.audio.scheduleAmbientEvent(event, base + (event.onset_seconds - windowStart));
      }
    }
  }

  private lineIndexByInstrument(): Map<string, number> {
    const map = new Map<string, number>();
    for (const layer of this.view?.layers ?? []) {
      map.set(layer.instrument, layer.line_index);
    }
    return map;
  }

  /** Restart: reset the session, silence all audio, show intake. */
  async restart(): Promise<void> {
    await this.mutate(async () => {
      const id = this.requireSession();
      this.view = await this.api.reset(id);
      this.audio.silenceAll();
      this.planText = null;
      this.lastToss = null;
      this.castingCursor = 0;
      this.ambientCursor = 0;
      this.playbackEpoch += 1;
      this.screen = "intake";
      this.history = [];
    });
  }

  /** View-only backtrack; session state is untouched. */
  back(): void {
    const previous = this.history.pop();
    if (previous) {
      this.screen = previous;
    }
  }

  toggleInstructions(): void {
    this.instructionsVisible = !this.instructionsVisible;
  }
}
