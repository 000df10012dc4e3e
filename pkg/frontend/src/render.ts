/** Thin DOM layer: draws a board controller into a container element.
 *
 * All game logic lives in the controllers; this module only positions
 * cells (via the layout module), wires click handlers, and reflects
 * controller state — lit/hinted paint, the banner, and the win line.
 */

import type { Banner, BoardController, ColoredBoardController } from "./board.js";
import type { GraphDoc } from "./types.js";
import { positions } from "./layout.js";

export interface RenderHandle {
  redraw(): void;
  root: HTMLElement;
}

interface BoardLike {
  session: { graph: GraphDoc; n: number; history: number[]; solvable: boolean };
  banner: Banner | null;
  won: boolean;
  press(vertex: number): Promise<void>;
}

function mountBoard(
  container: HTMLElement,
  controller: BoardLike,
  paintCell: (cell: HTMLButtonElement, vertex: number) => void,
): RenderHandle {
  const root = document.createElement("div");
  root.className = "board";
  container.appendChild(root);

  const pts = positions(controller.session.graph);
  const cells: HTMLButtonElement[] = [];

  const banner = document.createElement("div");
  banner.className = "banner";
  banner.hidden = true;

  const status = document.createElement("div");
  status.className = "status";

  const field = document.createElement("div");
  field.className = "field";

  for (let v = 0; v < controller.session.n; v++) {
    const cell = document.createElement("button");
    cell.className = "cell";
    cell.style.left = `${(pts[v]!.x * 88 + 6).toFixed(2)}%`;
    cell.style.top = `${(pts[v]!.y * 88 + 6).toFixed(2)}%`;
    cell.textContent = String(v);
    cell.addEventListener("click", () => {
      void controller.press(v).then(redraw, redraw);
      redraw(); // optimistic paint before the server answers
    });
    cells.push(cell);
    field.appendChild(cell);
  }

  root.append(banner, field, status);

  function redraw(): void {
    for (let v = 0; v < cells.length; v++) {
      paintCell(cells[v]!, v);
    }
    if (controller.banner === null) {
      banner.hidden = true;
      banner.textContent = "";
    } else {
      banner.hidden = false;
      banner.className = `banner banner-${controller.banner.kind}`;
      banner.textContent =
        controller.banner.kind === "unsolvable"
          ? `target unreachable — invariant residual ${controller.banner.residual ?? "?"}`
          : controller.banner.message;
    }
    status.textContent = controller.won
      ? "solved — all lamps off"
      : `${controller.session.history.length} presses so far` +
        (controller.session.solvable ? "" : " (not solvable to all-off)");
  }

  redraw();
  return { redraw, root };
}

export function renderBoard(container: HTMLElement, controller: BoardController): RenderHandle {
  return mountBoard(container, controller, (cell, v) => {
    cell.classList.toggle("lit", controller.isLit(v));
    cell.classList.toggle("hinted", controller.isHinted(v));
    cell.textContent = String(v);
  });
}

/** Palette: color 0 is "off"; the rest sweep the hue wheel. */
export function colorStyle(value: number, k: number): string {
  if (value === 0) {
    return "";
  }
  const hue = Math.round((360 * (value - 1)) / Math.max(1, k - 1));
  return `hsl(${hue}, 72%, 48%)`;
}

export function renderColoredBoard(
  container: HTMLElement,
  controller: ColoredBoardController,
): RenderHandle {
  return mountBoard(container, controller, (cell, v) => {
    const value = controller.colorOf(v);
    cell.classList.toggle("lit", value !== 0);
    cell.style.background = colorStyle(value, controller.k);
    const pending = controller.hintedCount(v);
    cell.classList.toggle("hinted", pending > 0);
    cell.textContent = pending > 0 ? `${v} (+${pending})` : `${v}:${value}`;
  });
}
