// Thin client for the session service wire API. The UI goes through
// this module only; nothing here interprets casting semantics, and the
// plan endpoint is returned as raw text so the viewer can display the
// exact bytes the server sent.

export type SessionState =
  | "intake"
  | "casting"
  | "interpreting"
  | "playback"
  | "complete";

export interface LayerSummary {
  line_index: number;
  instrument: string;
  pan: number;
  note_count: number;
  loop_length?: string;
}

export interface HexagramView {
  king_wen: number;
  lines: ("yang" | "yin")[];
  trigrams: [number, number];
}

export interface SessionView {
  id: string;
  seed: number;
  epoch: number;
  state: SessionState;
  tosses_done: number;
  inquiry: { question: string; name: string | null } | null;
  layers: LayerSummary[];
  // present only while the server withholds semantics
  tosses?: string[][];
  // present from the interpreting state on
  hexagrams?: {
    ben: HexagramView;
    dong_yao: number[];
    zhi: HexagramView;
  };
  reading?: { body: string; keywords: Record<string, string[]> } | null;
  plan?: unknown | null;
}

export interface TossResult {
  toss_index: number;
  coins: string[];
  layer_summary: LayerSummary;
  state: SessionState;
}

export interface ChunkEvent {
  onset_seconds: number;
  duration_seconds: number;
  pitch: number;
  velocity: number;
  instrument: string;
  pan: number;
}

export interface PlaybackChunk {
  from_time: number;
  window: number;
  tempo: number;
  stream_digest: string;
  events: ChunkEvent[];
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const response = await this.fetchImpl(this.baseUrl + path, init);
    if (!response.ok) {
      let code = "error";
      let message = `${response.status}`;
      try {
        const body = await response.json();
        code = body.code ?? code;
        message = body.message ?? message;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, code, message);
    }
    return response;
  }

  private async postJson(path: string, body?: unknown): Promise<unknown> {
    const response = await this.request(path, {
      method: "POST",
      headers: body === undefined ? {} : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    return response.json();
  }

  async createSession(seed?: number): Promise<{ id: string; seed: number; state: SessionState }> {
    const body = seed === undefined ? {} : { seed };
    return (await this.postJson("/sessions", body)) as {
      id: string;
      seed: number;
      state: SessionState;
    };
  }

  async submitInquiry(id: string, question: string, name?: string): Promise<SessionView> {
    return (await this.postJson(`/sessions/${id}/inquiry`, {
      question,
      name: name ?? null,
    })) as SessionView;
  }

  async toss(id: string): Promise<TossResult> {
    return (await this.postJson(`/sessions/${id}/toss`)) as TossResult;
  }

  async interpret(id: string): Promise<SessionView> {
    return (await this.postJson(`/sessions/${id}/interpret`)) as SessionView;
  }

  async getSession(id: string): Promise<SessionView> {
    const response = await this.request(`/sessions/${id}`);
    return (await response.json()) as SessionView;
  }

  /** Raw plan bytes; displayed verbatim by the plan viewer. */
  async getPlanText(id: string): Promise<string> {
    const response = await this.request(`/sessions/${id}/plan`);
    return response.text();
  }

  async getPlayback(id: string, from: number, window: number): Promise<PlaybackChunk> {
    const response = await this.request(
      `/sessions/${id}/playback?from=${encodeURIComponent(from)}&window=${encodeURIComponent(window)}`,
    );
    return (await response.json()) as PlaybackChunk;
  }

  async reset(id: string): Promise<SessionView> {
    return (await this.postJson(`/sessions/${id}/reset`)) as SessionView;
  }
}
