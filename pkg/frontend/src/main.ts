// Entry point: wire the API client, audio graph, controller, renderer,
// and the breathing background together.

import { ApiClient } from "./api.js";
import { AudioEngine, AudioContextLike } from "./audio.js";
import { AppController } from "./app.js";
import { ScreenRenderer } from "./view.js";
import { drawCircle } from "./circle.js";

const PUMP_INTERVAL_MS = 3000;

function startBackground(): void {
  const canvas = document.getElementById("oracle-circle") as HTMLCanvasElement | null;
  if (!canvas) return;
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const frame = (time: number) => {
    canvas.width = window.innerWidth;
    canvas.height = window.innerHeight;
    drawCircle(ctx, canvas.width, canvas.height, time);
    requestAnimationFrame(frame);
  };
  requestAnimationFrame(frame);
}

async function boot(): Promise<void> {
  const api = new ApiClient("");
  // the context starts suspended until a user gesture on most browsers;
  // the first toss click resumes it implicitly
  const context = new AudioContext() as unknown as AudioContextLike;
  const audio = new AudioEngine(context);
  const controller = new AppController(api, audio);

  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app container");
  const renderer = new ScreenRenderer(root, controller, () => renderer.render());

  startBackground();
  await controller.start();
  renderer.render();

  setInterval(() => {
    void controller.pumpPlayback().catch(() => {
      // playback hiccups (e.g. session idle-evicted) are non-fatal
    });
  }, PUMP_INTERVAL_MS);
}

void boot();
