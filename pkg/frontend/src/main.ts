/** DOM wiring for the designer. All numerics live on the service side. */

import { ServiceClient, SolveScheduler } from "./client.js";
import {
  EditorState,
  acceptInfeasible,
  acceptSolve,
  chooseCandidate,
  editKnot,
  freshState,
  redo,
  select,
  setComb,
  specText,
  undo,
} from "./state.js";
import { draw, specPoints } from "./render.js";
import { fitView, hitTest, knotHandle, toModel, zoomAt } from "./view.js";
import type { Pair, SampleResponse, SpecDoc } from "./types.js";

const DEFAULT_SPEC: SpecDoc = {
  knots: [
    { point: [1.0, 0.0], tangent: [1.0, 0.0], kappa: 3.0 },
    { point: [3.5, 5.0], tangent: [0.0, 1.0], kappa: 1.0 },
    { point: [0.5, 9.0], tangent: [0.0, 1.0], kappa: -1.5 },
    { point: [2.0, 12.0], tangent: [0.7071067811865476, 0.7071067811865476], kappa: -1.0 },
  ],
};

const canvas = document.getElementById("canvas") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const statusEl = document.getElementById("status")!;
const knotPanel = document.getElementById("knot-panel")!;
const segmentPanel = document.getElementById("segment-panel")!;
const combToggle = document.getElementById("comb-toggle") as HTMLInputElement;
const combScaleInput = document.getElementById("comb-scale") as HTMLInputElement;

const params = new URLSearchParams(window.location.search);
const baseUrl = params.get("service") ?? `http://127.0.0.1:${params.get("port") ?? "8787"}`;
const client = new ServiceClient(baseUrl);

let state: EditorState = freshState(DEFAULT_SPEC, fitView(specPoints(DEFAULT_SPEC), canvas.width, canvas.height));
let sampleData: SampleResponse | null = null;

const scheduler = new SolveScheduler(client, (outcome) => {
  if (outcome.response !== undefined) {
    state = acceptSolve(state, outcome.revision, outcome.response);
    void refreshSample(outcome.revision);
  } else if (outcome.infeasible !== undefined) {
    state = acceptInfeasible(state, outcome.revision, outcome.infeasible.segment, outcome.infeasible.message);
  }
  repaint();
});

async function refreshSample(revision: number): Promise<void> {
  try {
    const data = await client.sample(state.spec, 24);
    if (revision === state.solveRevision) {
      sampleData = data;
      repaint();
    }
  } catch {
    sampleData = null;
  }
}

function apply(next: EditorState): void {
  const changed = next.revision !== state.revision;
  state = next;
  if (changed) scheduler.request(state.spec, state.revision);
  repaint();
}

function repaint(): void {
  draw(ctx, state, sampleData);
  renderStatus();
  renderKnotPanel();
  renderSegmentPanel();
}

function renderStatus(): void {
  if (state.infeasible !== null) {
    const where = state.infeasible.segment === null ? "" : ` (segment ${state.infeasible.segment})`;
    statusEl.textContent = `infeasible${where}: ${state.infeasible.message}`;
    statusEl.className = "status bad";
  } else if (state.solve === null || state.solveRevision !== state.revision) {
    statusEl.textContent = "solving...";
    statusEl.className = "status";
  } else {
    const verdict = state.solve.report.pass ? "G2 verified" : "G2 gaps exceed tolerance";
    statusEl.textContent = `${verdict} | ${state.solve.segments.length} segment(s)`;
    statusEl.className = state.solve.report.pass ? "status ok" : "status bad";
  }
  const exportsDisabled = state.infeasible !== null || state.solve === null;
  for (const id of ["export-spec", "export-svg", "export-obj"]) {
    (document.getElementById(id) as HTMLButtonElement).disabled = exportsDisabled;
  }
}

function renderKnotPanel(): void {
  if (state.selection.kind !== "knot") {
    knotPanel.innerHTML = "<em>select a knot to edit its curvature</em>";
    return;
  }
  const index = state.selection.index;
  const knot = state.spec.knots[index];
  if (knot === undefined) return;
  const kappa = knot.kappa ?? (knot.signed_radius ? knot.signed_radius.sign / knot.signed_radius.radius : 0);
  const radius = knot.signed_radius?.radius ?? (kappa !== 0 ? Math.abs(1 / kappa) : 0);
  const sign = knot.signed_radius?.sign ?? (kappa >= 0 ? 1 : -1);
  knotPanel.innerHTML = `
    <h3>knot ${index}</h3>
    <label>signed curvature &kappa;
      <input id="kappa-input" type="number" step="0.1" value="${kappa}">
    </label>
    <div class="radius-row">
      <label>side
        <select id="sign-input">
          <option value="1" ${sign === 1 ? "selected" : ""}>left (+)</option>
          <option value="-1" ${sign === -1 ? "selected" : ""}>right (-)</option>
        </select>
      </label>
      <label>radius
        <input id="radius-input" type="number" step="0.1" min="0.001" value="${radius || ""}">
      </label>
    </div>`;
  document.getElementById("kappa-input")!.addEventListener("change", (ev) => {
    const value = Number((ev.target as HTMLInputElement).value);
    apply(editKnot(state, index, { type: "set-kappa", kappa: value }));
  });
  const radiusHandler = () => {
    const r = Number((document.getElementById("radius-input") as HTMLInputElement).value);
    const s = Number((document.getElementById("sign-input") as HTMLSelectElement).value) as 1 | -1;
    if (r > 0) apply(editKnot(state, index, { type: "set-signed-radius", sign: s, radius: r }));
  };
  document.getElementById("radius-input")!.addEventListener("change", radiusHandler);
  document.getElementById("sign-input")!.addEventListener("change", radiusHandler);
}

function renderSegmentPanel(): void {
  if (state.solve === null || state.solveRevision !== state.revision) {
    segmentPanel.innerHTML = "";
    return;
  }
  const rows = state.solve.segments
    .map((segment, i) => {
      const options = segment.candidates
        .map((cand, j) => {
          const label = `(${cand.alpha.toFixed(4)}, ${cand.beta.toFixed(4)})${cand.underdetermined ? " *" : ""}`;
          return `<option value="${j}" ${j === segment.chosen ? "selected" : ""}>${label}</option>`;
        })
        .join("");
      return `<div class="segment-row" data-index="${i}">
        <span>segment ${i}</span>
        <select data-segment="${i}">${options}</select>
      </div>`;
    })
    .join("");
  segmentPanel.innerHTML = `<h3>candidate pairs (&alpha;, &beta;)</h3>${rows}`;
  segmentPanel.querySelectorAll("select").forEach((sel) => {
    sel.addEventListener("change", (ev) => {
      const target = ev.target as HTMLSelectElement;
      const segIndex = Number(target.dataset["segment"]);
      const { state: next, staleRejected } = chooseCandidate(state, segIndex, Number(target.value));
      if (staleRejected) {
        scheduler.request(state.spec, state.revision);
      } else {
        apply(next);
      }
    });
  });
}

// --- canvas interaction -------------------------------------------------

type DragTarget = { kind: "point" | "tangent"; index: number } | { kind: "pan"; last: Pair } | null;
let drag: DragTarget = null;

function canvasPos(ev: MouseEvent): Pair {
  const rect = canvas.getBoundingClientRect();
  return [ev.clientX - rect.left, ev.clientY - rect.top];
}

canvas.addEventListener("mousedown", (ev) => {
  const pos = canvasPos(ev);
  for (let i = state.spec.knots.length - 1; i >= 0; i -= 1) {
    const knot = state.spec.knots[i]!;
    const hit = hitTest(knotHandle(state.view, knot.point, knot.tangent), pos);
    if (hit === "point") {
      drag = { kind: "point", index: i };
      apply(select(state, { kind: "knot", index: i }));
      return;
    }
    if (hit === "tangent") {
      drag = { kind: "tangent", index: i };
      apply(select(state, { kind: "knot", index: i }));
      return;
    }
  }
  drag = { kind: "pan", last: pos };
  apply(select(state, { kind: "none" }));
});

canvas.addEventListener("mousemove", (ev) => {
  if (drag === null) return;
  const pos = canvasPos(ev);
  if (drag.kind === "pan") {
    const dx = pos[0] - drag.last[0];
    const dy = pos[1] - drag.last[1];
    drag.last = pos;
    state = { ...state, view: { ...state.view, offsetX: state.view.offsetX + dx, offsetY: state.view.offsetY + dy } };
    repaint();
    return;
  }
  const model = toModel(state.view, pos);
  if (drag.kind === "point") {
    apply(editKnot(state, drag.index, { type: "move-point", point: model }));
  } else {
    const knot = state.spec.knots[drag.index]!;
    const dir: Pair = [model[0] - knot.point[0], model[1] - knot.point[1]];
    if (Math.hypot(dir[0], dir[1]) > 1e-9) {
      apply(editKnot(state, drag.index, { type: "rotate-tangent", direction: dir }));
    }
  }
});

window.addEventListener("mouseup", () => {
  drag = null;
});

canvas.addEventListener("wheel", (ev) => {
  ev.preventDefault();
  const factor = ev.deltaY < 0 ? 1.12 : 1 / 1.12;
  state = { ...state, view: zoomAt(state.view, canvasPos(ev), factor) };
  repaint();
});

// --- toolbar --------------------------------------------------------------

document.getElementById("undo")!.addEventListener("click", () => apply(undo(state)));
document.getElementById("redo")!.addEventListener("click", () => apply(redo(state)));
window.addEventListener("keydown", (ev) => {
  if ((ev.ctrlKey || ev.metaKey) && ev.key === "z" && !ev.shiftKey) apply(undo(state));
  if ((ev.ctrlKey || ev.metaKey) && (ev.key === "y" || (ev.key === "z" && ev.shiftKey))) apply(redo(state));
});

combToggle.addEventListener("change", () => {
  apply(setComb(state, combToggle.checked, Number(combScaleInput.value)));
});
combScaleInput.addEventListener("input", () => {
  apply(setComb(state, combToggle.checked, Number(combScaleInput.value)));
});

function download(name: string, blob: Blob): void {
  const url = URL.createObjectURL(blob);
  const a = document.createElement("a");
  a.href = url;
  a.download = name;
  a.click();
  URL.revokeObjectURL(url);
}

document.getElementById("export-spec")!.addEventListener("click", () => {
  download("design.json", new Blob([specText(state.spec)], { type: "application/json" }));
});
document.getElementById("export-svg")!.addEventListener("click", () => {
  void client.renderSvg(state.spec).then((blob) => download("design.svg", blob));
});
document.getElementById("export-obj")!.addEventListener("click", () => {
  void client.renderObj(state.spec).then((blob) => download("design.obj", blob));
});

const fileInput = document.getElementById("import-spec") as HTMLInputElement;
fileInput.addEventListener("change", async () => {
  const file = fileInput.files?.[0];
  if (file === undefined) return;
  const spec = JSON.parse(await file.text()) as SpecDoc;
  state = freshState(spec, fitView(specPoints(spec), canvas.width, canvas.height));
  sampleData = null;
  scheduler.request(state.spec, state.revision);
  repaint();
});

// --- boot ------------------------------------------------------------------

void client.health().then((healthy) => {
  if (!healthy) {
    statusEl.textContent = `service unreachable at ${baseUrl}; start it with: ballkurve serve`;
    statusEl.className = "status bad";
    return;
  }
  scheduler.request(state.spec, state.revision);
});
repaint();
