import { AnalysisClient, ServiceError } from "./api.js";
import { BUNDLED_DATASETS } from "./datasets.js";
import { makeDebouncer } from "./debounce.js";
import {
  applyReport,
  buildAnalyzeRequest,
  detents,
  displayedWeights,
  initialState,
  setCStar,
  setScore,
  setWeight,
  snapToDetent,
  type ExplorerState,
} from "./state.js";
import {
  renderAverages,
  renderBenchmarkBars,
  renderConcordanceTable,
  renderGraphSvg,
  renderPositioningTable,
  renderSweepStrip,
  renderViolations,
} from "./render.js";
import { stripSegments } from "./sweep.js";

const client = new AnalysisClient("");
const { debounced } = makeDebouncer();

let state: ExplorerState = initialState(BUNDLED_DATASETS[0].matrix);
let sweepDirty = true;

function $(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
}

function labels(): Record<string, string> {
  const map: Record<string, string> = {};
  for (const alt of state.matrix.alternatives) map[alt.id] = alt.label ?? alt.id;
  return map;
}

function renderControls(): void {
  const select = $("dataset") as HTMLSelectElement;
  if (select.options.length === 0) {
    BUNDLED_DATASETS.forEach((d, i) => select.add(new Option(d.name, String(i))));
  }

  const cStar = $("c-star") as HTMLInputElement;
  cStar.value = String(state.cStar);
  $("c-star-value").textContent = state.cStar.toFixed(3);

  const unbounded = $("d-star-unbounded") as HTMLInputElement;
  const dStar = $("d-star") as HTMLInputElement;
  unbounded.checked = state.dStar.unbounded;
  dStar.disabled = state.dStar.unbounded;
  dStar.value = String(state.dStar.value);
}

function renderMatrixGrid(): void {
  const container = $("matrix-grid");
  const { alternatives, criteria, scores } = state.matrix;
  const head =
    "<tr><th></th>" +
    criteria.map((c) => `<th>${c.label ?? c.id}</th>`).join("") +
    "</tr>";
  const rows = alternatives
    .map((alt, i) => {
      const cells = criteria
        .map(
          (_, j) =>
            `<td><input type="number" step="0.01" data-score="${i}:${j}" ` +
            `data-path="scores[${i}][${j}]" value="${scores[i][j]}"></td>`,
        )
        .join("");
      return `<tr><th>${alt.label ?? alt.id}</th>${cells}</tr>`;
    })
    .join("");
  container.innerHTML = `<table class="grid">${head}${rows}</table>`;
  container.querySelectorAll("input[data-score]").forEach((input) => {
    input.addEventListener("input", (event) => {
      const el = event.target as HTMLInputElement;
      const [i, j] = (el.dataset.score as string).split(":").map(Number);
      setScore(state, i, j, Number(el.value));
      sweepDirty = true;
      scheduleRecompute();
    });
  });
}

function renderWeightSliders(): void {
  const container = $("weights");
  const shown = displayedWeights(state.weights);
  container.innerHTML = state.matrix.criteria
    .map(
      (c, j) =>
        `<label class="weight-row"><span>${c.label ?? c.id}</span>` +
        `<input type="range" min="0" max="1" step="0.01" data-weight="${j}" ` +
        `value="${state.weights[j]}">` +
        `<span class="weight-value" id="weight-value-${j}">${shown[j].toFixed(3)}</span></label>`,
    )
    .join("");
  container.querySelectorAll("input[data-weight]").forEach((input) => {
    input.addEventListener("input", (event) => {
      const el = event.target as HTMLInputElement;
      setWeight(state, Number(el.dataset.weight), Number(el.value));
      const updated = displayedWeights(state.weights);
      updated.forEach((w, j) => {
        $(`weight-value-${j}`).textContent = w.toFixed(3);
      });
      sweepDirty = true;
      scheduleRecompute();
    });
  });
}

function renderResults(): void {
  if (!state.lastReport) return;
  const report = state.lastReport;
  $("graph").innerHTML = renderGraphSvg(report, labels());
  $("kernel").textContent = report.kernel.join(", ");
  $("concordance").innerHTML = renderConcordanceTable(report);
  $("positioning").innerHTML = renderPositioningTable(report);
  $("averages").innerHTML = renderAverages(report);
  $("benchmarks").innerHTML = renderBenchmarkBars(report);
  renderStrip();
}

function renderStrip(): void {
  if (!state.lastSweep) return;
  const segments = stripSegments(state.lastSweep);
  const maxEdges = Math.max(...state.lastSweep.points.map((p) => p.edge_count), 1);
  $("sweep-strip").innerHTML = renderSweepStrip(segments, maxEdges, state.cStar);
  $("sweep-strip")
    .querySelectorAll(".segment")
    .forEach((el) => {
      el.addEventListener("click", () => {
        const representative = Number((el as HTMLElement).dataset.representative);
        setCStar(state, representative);
        renderControls();
        scheduleRecompute();
      });
    });
}

function showViolations(violations: { path: string; message: string }[]): void {
  $("errors").innerHTML = renderViolations(violations);
  document.querySelectorAll("input.invalid").forEach((el) => el.classList.remove("invalid"));
  for (const violation of violations) {
    const input = document.querySelector(`input[data-path="${violation.path}"]`);
    if (input) {
      input.classList.add("invalid");
      (input as HTMLInputElement).title = violation.message;
    }
  }
}

async function recompute(): Promise<void> {
  try {
    const request = buildAnalyzeRequest(state, sweepDirty);
    const result = await client.analyze(request);
    if (result.stale) return;
    sweepDirty = false;
    applyReport(state, result.value);
    showViolations([]);
    renderResults();
  } catch (error) {
    if (error instanceof ServiceError) {
      showViolations(error.violations);
    } else {
      showViolations([{ path: "network", message: String(error) }]);
    }
  }
}

function scheduleRecompute(): void {
  debounced(() => void recompute());
}

function wireControls(): void {
  ($("dataset") as HTMLSelectElement).addEventListener("change", (event) => {
    const index = Number((event.target as HTMLSelectElement).value);
    state = initialState(BUNDLED_DATASETS[index].matrix);
    sweepDirty = true;
    renderControls();
    renderMatrixGrid();
    renderWeightSliders();
    scheduleRecompute();
  });

  const cStar = $("c-star") as HTMLInputElement;
  cStar.addEventListener("input", () => {
    const snapped = snapToDetent(Number(cStar.value), detents(state));
    setCStar(state, snapped);
    $("c-star-value").textContent = state.cStar.toFixed(3);
    scheduleRecompute();
  });

  const unbounded = $("d-star-unbounded") as HTMLInputElement;
  const dStar = $("d-star") as HTMLInputElement;
  unbounded.addEventListener("change", () => {
    state.dStar.unbounded = unbounded.checked;
    dStar.disabled = unbounded.checked;
    sweepDirty = true;
    scheduleRecompute();
  });
  dStar.addEventListener("input", () => {
    state.dStar.value = Math.max(0, Number(dStar.value));
    sweepDirty = true;
    scheduleRecompute();
  });
}

function start(): void {
  renderControls();
  renderMatrixGrid();
  renderWeightSliders();
  wireControls();
  void recompute();
}

document.addEventListener("DOMContentLoaded", start);
