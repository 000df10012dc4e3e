/** Browser entry point: create a game and mount the board.
 *
 * The service origin comes from the `api` query parameter, falling back
 * to the page's own origin; the graph, variant, and optional color count
 * come from `graph`, `variant`, and `k` parameters (defaults: grid:5x5,
 * classic, GF(2), random-solvable).  The new-game form writes those same
 * parameters back into the URL, so every board state is linkable.
 */

import { ApiClient, asGfSession } from "./api.js";
import { BoardController, ColoredBoardController } from "./board.js";
import { renderBoard, renderColoredBoard } from "./render.js";
import type { CreateGameRequest } from "./types.js";

interface BootConfig {
  base: string;
  graph: string;
  variant: string;
  k: number | null;
}

function readConfig(): BootConfig {
  const params = new URLSearchParams(window.location.search);
  const rawK = params.get("k");
  const k = rawK === null ? null : Number.parseInt(rawK, 10);
  return {
    base: params.get("api") ?? window.location.origin,
    graph: params.get("graph") ?? "grid:5x5",
    variant: params.get("variant") ?? "classic",
    k: k !== null && Number.isFinite(k) && k >= 2 ? k : null,
  };
}

function newGameForm(config: BootConfig): HTMLFormElement {
  const form = document.createElement("form");
  form.className = "new-game";

  const graphInput = document.createElement("input");
  graphInput.name = "graph";
  graphInput.value = config.graph;
  graphInput.title = "graph spec, e.g. grid:5x5, torus:4x4, cycle:9";

  const variantSelect = document.createElement("select");
  variantSelect.name = "variant";
  for (const name of ["classic", "second", "neighborhood", "nonreflexive", "asymmetric"]) {
    const opt = document.createElement("option");
    opt.value = name;
    opt.textContent = name;
    variantSelect.appendChild(opt);
  }
  variantSelect.value = config.variant;

  const kInput = document.createElement("input");
  kInput.name = "k";
  kInput.type = "number";
  kInput.min = "2";
  kInput.placeholder = "k (optional)";
  kInput.value = config.k === null ? "" : String(config.k);
  kInput.title = "number of colors; leave empty for the on/off game";

  const submit = document.createElement("button");
  submit.type = "submit";
  submit.textContent = "new game";

  form.append(graphInput, variantSelect, kInput, submit);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const params = new URLSearchParams(window.location.search);
    params.set("graph", graphInput.value.trim());
    params.set("variant", variantSelect.value);
    if (kInput.value.trim() === "") {
      params.delete("k");
    } else {
      params.set("k", kInput.value.trim());
    }
    window.location.search = params.toString();
  });
  return form;
}

async function boot(): Promise<void> {
  const config = readConfig();
  const api = new ApiClient(config.base);
  const container = document.getElementById("app");
  if (container === null) {
    throw new Error("missing #app container");
  }

  const request: CreateGameRequest = {
    graph: config.graph,
    variant: config.variant,
    initial: "random-solvable",
  };
  if (config.k !== null) {
    request.k = config.k;
  }

  const toolbar = document.createElement("div");
  toolbar.className = "toolbar";

  if (config.k === null) {
    const session = asGfSession(await api.createGame(request));
    const controller = new BoardController(api, session);
    const handle = renderBoard(container, controller);

    const minHint = document.createElement("button");
    minHint.textContent = "hint (fewest presses)";
    minHint.addEventListener("click", () => {
      void controller.requestHint("min").then(() => handle.redraw());
    });

    const anyHint = document.createElement("button");
    anyHint.textContent = "hint (any)";
    anyHint.addEventListener("click", () => {
      void controller.requestHint("any").then(() => handle.redraw());
    });

    const clear = document.createElement("button");
    clear.textContent = "dismiss notice";
    clear.addEventListener("click", () => {
      controller.dismissBanner();
      handle.redraw();
    });

    toolbar.append(minHint, anyHint, clear);
  } else {
    const doc = await api.createGame(request);
    if (doc.kind !== "colored") {
      throw new Error(`expected a colored session, got kind ${doc.kind}`);
    }
    const controller = new ColoredBoardController(api, doc);
    const handle = renderColoredBoard(container, controller);

    const hint = document.createElement("button");
    hint.textContent = "hint (press counts)";
    hint.addEventListener("click", () => {
      void controller.requestHint().then(() => handle.redraw());
    });

    const clear = document.createElement("button");
    clear.textContent = "dismiss notice";
    clear.addEventListener("click", () => {
      controller.dismissBanner();
      handle.redraw();
    });

    toolbar.append(hint, clear);
  }

  toolbar.appendChild(newGameForm(config));
  container.appendChild(toolbar);
}

void boot().catch((err: unknown) => {
  const container = document.getElementById("app");
  if (container !== null) {
    container.textContent = `failed to start: ${String(err)}`;
  }
});
