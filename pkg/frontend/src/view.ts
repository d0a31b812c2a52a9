// DOM rendering for the controller state. Deliberately thin: no
// virtual DOM, just rebuild the screen container when state changes.

import { AppController } from "./app.js";
import { HexagramView } from "./api.js";

const COIN_FACES: Record<string, string> = { H: "☯", T: "○" };

export function hexagramGlyphRows(
  hexagram: HexagramView,
  changing: number[] = [],
): string[] {
  // top line first for display
  const rows: string[] = [];
  for (let index = 6; index >= 1; index--) {
    const polarity = hexagram.lines[index - 1];
    const mark = changing.includes(index) ? " •" : "";
    rows.push((polarity === "yang" ? "━━━━━━━" : "━━━ ━━━") + mark);
  }
  return rows;
}

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export class ScreenRenderer {
  constructor(
    private readonly root: HTMLElement,
    private readonly controller: AppController,
    private readonly onAction: () => void,
  ) {}

  render(): void {
    this.root.replaceChildren();
    this.root.appendChild(this.renderControls());
    switch (this.controller.screen) {
      case "intake":
        this.root.appendChild(this.renderIntake());
        break;
      case "casting":
        this.root.appendChild(this.renderCasting());
        break;
      case "interpretation":
        this.root.appendChild(this.renderInterpretation());
        break;
    }
    if (this.controller.errorMessage) {
      this.root.appendChild(el("p", "error", this.controller.errorMessage));
    }
    if (this.controller.instructionsVisible) {
      this.root.appendChild(this.renderInstructions());
    }
  }

  private button(label: string, title: string, onClick: () => void): HTMLButtonElement {
    const button = el("button", undefined, label) as HTMLButtonElement;
    button.title = title;
    button.disabled = this.controller.busy;
    button.addEventListener("click", () => {
      onClick();
      this.onAction();
    });
    return button;
  }

  private renderControls(): HTMLElement {
    const nav = el("nav", "controls");
    nav.appendChild(this.button("‹ back", "return to the previous screen", () => {
      this.controller.back();
      this.render();
    }));
    nav.appendChild(this.button("restart", "end this consultation and fall silent", () => {
      void this.controller.restart().then(() => this.render()).catch(() => this.render());
    }));
    nav.appendChild(this.button("?", "how the consultation works", () => {
      this.controller.toggleInstructions();
      this.render();
    }));
    return nav;
  }

  private renderIntake(): HTMLElement {
    const section = el("section", "intake");
    section.appendChild(el("h1", undefined, "Ask"));
    section.appendChild(
      el("p", "hint", "Hold a question in mind. It can be a dilemma or something small."),
    );
    const question = el("textarea") as HTMLTextAreaElement;
    question.placeholder = "What would you ask?";
    const name = el("input") as HTMLInputElement;
    name.placeholder = "Your name (optional)";
    const submit = this.button("begin the casting", "submit your question", () => {
      void this.controller
        .submitInquiry(question.value, name.value || undefined)
        .then(() => this.render())
        .catch(() => this.render());
    });
    section.append(question, name, submit);
    return section;
  }

  private renderCasting(): HTMLElement {
    const section = el("section", "casting");
    const done = this.controller.view?.tosses_done ?? 0;
    section.appendChild(el("h1", undefined, `Casting ${done} / 6`));
    if (this.controller.lastToss) {
      const coins = el("div", "coins");
      for (const face of this.controller.lastToss.coins) {
        const coin = el("span", "coin flip", COIN_FACES[face] ?? face);
        coins.appendChild(coin);
      }
      section.appendChild(coins);
      section.appendChild(
        el(
          "p",
          "layer",
          `line ${this.controller.lastToss.layer_summary.line_index}: ` +
            `${this.controller.lastToss.layer_summary.instrument.replace("_", " ")} joins`,
        ),
      );
    }
    if (done < 6) {
      section.appendChild(
        this.button("toss the coins", "throw three coins for the next line", () => {
          void this.controller.performToss().then(() => this.render()).catch(() => this.render());
        }),
      );
    }
    return section;
  }

  private renderInterpretation(): HTMLElement {
    const section = el("section", "interpretation");
    const view = this.controller.view;
    if (view?.hexagrams) {
      const pair = el("div", "hexagrams");
      const ben = el("pre", "hexagram");
      ben.textContent = hexagramGlyphRows(view.hexagrams.ben, view.hexagrams.dong_yao).join("\n");
      const zhi = el("pre", "hexagram");
      zhi.textContent = hexagramGlyphRows(view.hexagrams.zhi).join("\n");
      pair.append(ben, el("span", "arrow", "→"), zhi);
      section.appendChild(pair);
      section.appendChild(
        el(
          "p",
          "dong-yao",
          view.hexagrams.dong_yao.length
            ? `changing lines: ${view.hexagrams.dong_yao.join(", ")}`
            : "no changing lines",
        ),
      );
    }
    if (view?.reading) {
      const reading = el("div", "reading");
      for (const paragraph of view.reading.body.split("\n")) {
        reading.appendChild(el("p", undefined, paragraph));
      }
      section.appendChild(reading);
    }
    if (this.controller.planText !== null) {
      const details = el("details", "plan-viewer");
      details.appendChild(el("summary", undefined, "plan JSON"));
      // verbatim bytes from the plan endpoint; never re-serialized
      const pre = el("pre", "plan-json");
      pre.textContent = this.controller.planText;
      details.appendChild(pre);
      section.appendChild(details);
    }
    return section;
  }

  private renderInstructions(): HTMLElement {
    const box = el("aside", "instructions");
    box.appendChild(el("h2", undefined, "How this works"));
    box.appendChild(
      el(
        "p",
        undefined,
        "Ask a question, then throw three coins six times. Each throw adds a " +
          "musical voice and a line to a six-line figure, read from the bottom " +
          "up. When the figure is complete it is interpreted for your question, " +
          "and the music follows the interpretation. Restart at any time to " +
          "return to silence.",
      ),
    );
    return box;
  }
}
