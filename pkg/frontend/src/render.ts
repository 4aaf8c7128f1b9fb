import type { AnalyzeResponse } from "./types.js";
import { layoutGraph, nodeById, type GraphView } from "./layout.js";
import type { StripSegment } from "./sweep.js";

// All renderers are pure string builders so they can be tested without a
// browser; main.ts assigns their output to innerHTML.

const NODE_RADIUS = 26;

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function edgePath(view: GraphView, from: string, to: string, mutual: boolean): string {
  const a = nodeById(view, from);
  const b = nodeById(view, to);
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const length = Math.hypot(dx, dy) || 1;
  const ux = dx / length;
  const uy = dy / length;
  const startX = a.x + ux * NODE_RADIUS;
  const startY = a.y + uy * NODE_RADIUS;
  const endX = b.x - ux * (NODE_RADIUS + 8);
  const endY = b.y - uy * (NODE_RADIUS + 8);
  if (!mutual) {
    return `M ${startX.toFixed(1)} ${startY.toFixed(1)} L ${endX.toFixed(1)} ${endY.toFixed(1)}`;
  }
  // offset mutual edges to a curve so both directions stay visible
  const midX = (startX + endX) / 2 - uy * 26;
  const midY = (startY + endY) / 2 + ux * 26;
  return (
    `M ${startX.toFixed(1)} ${startY.toFixed(1)} ` +
    `Q ${midX.toFixed(1)} ${midY.toFixed(1)} ${endX.toFixed(1)} ${endY.toFixed(1)}`
  );
}

export function renderGraphSvg(report: AnalyzeResponse, labels: Record<string, string>): string {
  const view = layoutGraph(report);
  const parts: string[] = [];
  parts.push(
    `<svg viewBox="0 0 ${view.width} ${view.height}" xmlns="http://www.w3.org/2000/svg" role="img">`,
  );
  parts.push(
    '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" ' +
      'markerWidth="7" markerHeight="7" orient="auto-start-reverse">' +
      '<path d="M 0 0 L 10 5 L 0 10 z" fill="#5f6b7a"/></marker></defs>',
  );
  for (const edge of view.edges) {
    parts.push(
      `<path class="edge${edge.mutual ? " mutual" : ""}" ` +
        `data-edge="${edge.from}->${edge.to}" d="${edgePath(view, edge.from, edge.to, edge.mutual)}" ` +
        'fill="none" marker-end="url(#arrow)"/>',
    );
  }
  for (const node of view.nodes) {
    const classes = node.inKernel ? "node kernel" : "node";
    parts.push(`<g class="${classes}" data-node="${node.id}">`);
    parts.push(`<circle cx="${node.x}" cy="${node.y}" r="${NODE_RADIUS}"/>`);
    parts.push(
      `<text x="${node.x}" y="${node.y + 4}" text-anchor="middle">${escapeHtml(node.id)}</text>`,
    );
    const label = labels[node.id];
    if (label && label !== node.id) {
      parts.push(
        `<text class="sub" x="${node.x}" y="${node.y + NODE_RADIUS + 14}" ` +
          `text-anchor="middle">${escapeHtml(label)}</text>`,
      );
    }
    parts.push("</g>");
  }
  if (view.incomparable.length > 0) {
    const text = view.incomparable.map(([a, b]) => `${a} ∥ ${b}`).join(", ");
    parts.push(
      `<text class="annotation" x="${view.width / 2}" y="${view.height - 12}" ` +
        `text-anchor="middle">incomparable: ${escapeHtml(text)}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

function heatColor(value: number): string {
  // light for weak majorities, saturated for strong ones
  const lightness = 95 - value * 45;
  return `hsl(210 65% ${lightness.toFixed(0)}%)`;
}

export function renderConcordanceTable(report: AnalyzeResponse): string {
  const ids = report.graph.nodes;
  const rows: string[] = [];
  rows.push(
    "<tr><th></th>" + ids.map((id) => `<th>${escapeHtml(id)}</th>`).join("") + "</tr>",
  );
  report.concordance.indices.forEach((row, i) => {
    const cells = row
      .map((value, j) => {
        if (i === j || value === null) return '<td class="diag">&ndash;</td>';
        return (
          `<td style="background:${heatColor(value)}" ` +
          `data-cell="${ids[i]}:${ids[j]}">${value.toFixed(2)}</td>`
        );
      })
      .join("");
    rows.push(`<tr><th>${escapeHtml(ids[i])}</th>${cells}</tr>`);
  });
  return `<table class="heat">${rows.join("")}</table>`;
}

export function renderPositioningTable(report: AnalyzeResponse): string {
  const criteria = Object.keys(report.positioning);
  const depth = Math.max(...criteria.map((c) => report.positioning[c].length));
  const head =
    "<tr><th></th>" + criteria.map((c) => `<th>${escapeHtml(c)}</th>`).join("") + "</tr>";
  const body: string[] = [];
  for (let r = 0; r < depth; r++) {
    const cells = criteria
      .map((c) => {
        const entry = report.positioning[c][r];
        if (!entry) return "<td></td>";
        return (
          `<td data-position="${c}:${r}">` +
          `<span class="rank">${entry.rank}.</span> ${escapeHtml(entry.alternative)}` +
          ` <span class="score">${entry.score.toFixed(2)}</span></td>`
        );
      })
      .join("");
    body.push(`<tr><th>${r + 1}</th>${cells}</tr>`);
  }
  return `<table class="positioning">${head}${body.join("")}</table>`;
}

export function renderBenchmarkBars(report: AnalyzeResponse): string {
  const sections: string[] = [];
  for (const [criterion, column] of Object.entries(report.benchmark_leaders)) {
    const ids = report.graph.nodes;
    const max = Math.max(...ids.map((id) => column.scores[id]));
    const bars = ids
      .map((id) => {
        const value = column.scores[id];
        const width = max > 0 ? (value / max) * 100 : 0;
        const leader = column.leaders.includes(id) ? " leader" : "";
        return (
          `<div class="bar-row"><span class="bar-label">${escapeHtml(id)}</span>` +
          `<div class="bar${leader}" style="width:${width.toFixed(1)}%"></div>` +
          `<span class="bar-value">${value.toFixed(2)}</span></div>`
        );
      })
      .join("");
    sections.push(
      `<div class="benchmark"><h4>${escapeHtml(criterion)} ` +
        `<span class="leader-tag">best: ${column.leaders.join(", ")}</span></h4>${bars}</div>`,
    );
  }
  return sections.join("");
}

export function renderSweepStrip(
  segments: StripSegment[],
  maxEdges: number,
  currentCStar: number,
): string {
  const parts: string[] = [];
  parts.push('<div class="strip">');
  for (const segment of segments) {
    const width = (segment.to - segment.from) * 100;
    const height = maxEdges > 0 ? (segment.point.edge_count / maxEdges) * 100 : 0;
    const active = currentCStar > segment.from && currentCStar <= segment.to ? " active" : "";
    parts.push(
      `<div class="segment${active}" data-segment="${segment.to}" ` +
        `data-representative="${segment.representative}" style="width:${width.toFixed(2)}%">` +
        `<div class="fill" style="height:${height.toFixed(0)}%"></div>` +
        `<span class="mark">${segment.to}</span>` +
        `<span class="count">${segment.point.edge_count}</span></div>`,
    );
  }
  parts.push("</div>");
  return parts.join("");
}

export function renderViolations(violations: { path: string; message: string }[]): string {
  if (violations.length === 0) return "";
  const items = violations
    .map((v) => `<li><code>${escapeHtml(v.path)}</code> ${escapeHtml(v.message)}</li>`)
    .join("");
  return `<ul class="violations">${items}</ul>`;
}

export function renderAverages(report: AnalyzeResponse): string {
  const rows = report.average_order
    .map(
      (id) =>
        `<tr><td>${escapeHtml(id)}</td><td>${report.averages[id].toFixed(4)}</td></tr>`,
    )
    .join("");
  return (
    '<table class="averages"><tr><th>alternative</th><th>weighted mean</th></tr>' +
    rows +
    "</table>"
  );
}
