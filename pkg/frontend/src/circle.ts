// The breathing circle behind every screen: it expands and contracts
// on a slow cycle and drifts through hues. Pure functions here; the
// canvas loop in view.ts just applies them every frame.

export const BREATH_PERIOD_MS = 6000;
export const BREATH_AMPLITUDE = 0.08; // +-8% of base radius
export const HUE_PERIOD_MS = 47_000; // slow, offset from the breath

export interface CircleState {
  radiusScale: number; // multiply the base radius
  hue: number; // 0..360
}

export function circleState(timeMs: number): CircleState {
  const breathPhase = (2 * Math.PI * timeMs) / BREATH_PERIOD_MS;
  const huePhase = (timeMs % HUE_PERIOD_MS) / HUE_PERIOD_MS;
  return {
    radiusScale: 1 + BREATH_AMPLITUDE * Math.sin(breathPhase),
    hue: 360 * huePhase,
  };
}

export function drawCircle(
  ctx: CanvasRenderingContext2D,
  width: number,
  height: number,
  timeMs: number,
): void {
  const { radiusScale, hue } = circleState(timeMs);
  const base = Math.min(width, height) * 0.28;
  const radius = base * radiusScale;
  ctx.clearRect(0, 0, width, height);
  // procedural gradient wash instead of textured artwork
  const backdrop = ctx.createLinearGradient(0, 0, width, height);
  backdrop.addColorStop(0, `hsl(${(hue + 40) % 360} 25% 12%)`);
  backdrop.addColorStop(1, `hsl(${(hue + 200) % 360} 20% 8%)`);
  ctx.fillStyle = backdrop;
  ctx.fillRect(0, 0, width, height);

  const glow = ctx.createRadialGradient(
    width / 2, height / 2, radius * 0.2,
    width / 2, height / 2, radius,
  );
  glow.addColorStop(0, `hsl(${hue} 60% 62% / 0.85)`);
  glow.addColorStop(1, `hsl(${hue} 60% 40% / 0)`);
  ctx.fillStyle = glow;
  ctx.beginPath();
  ctx.arc(width / 2, height / 2, radius, 0, 2 * Math.PI);
  ctx.fill();
}
