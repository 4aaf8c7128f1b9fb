import type { AnalyzeResponse } from "./types.js";

// Digraph layout layered by dominance level: level 1 (best in class) on
// top, each later level one band lower, so worst-in-class reads bottom-up
// at a glance. Positions are computed from the report alone.

export interface NodeView {
  id: string;
  x: number;
  y: number;
  level: number;
  inKernel: boolean;
}

export interface EdgeView {
  from: string;
  to: string;
  /** true when the opposite edge also exists (drawn with a curve offset) */
  mutual: boolean;
}

export interface GraphView {
  width: number;
  height: number;
  nodes: NodeView[];
  edges: EdgeView[];
  incomparable: [string, string][];
}

export const BAND_HEIGHT = 130;
export const CANVAS_WIDTH = 760;
const MARGIN_Y = 70;

export function layoutGraph(report: AnalyzeResponse): GraphView {
  const kernel = new Set(report.kernel);
  const levelOf = new Map<string, number>();
  report.levels.forEach((members, index) => {
    for (const id of members) levelOf.set(id, index);
  });

  const nodes: NodeView[] = [];
  report.levels.forEach((members, index) => {
    const sorted = [...members].sort();
    const gap = CANVAS_WIDTH / (sorted.length + 1);
    sorted.forEach((id, slot) => {
      nodes.push({
        id,
        x: gap * (slot + 1),
        y: MARGIN_Y + index * BAND_HEIGHT,
        level: index,
        inKernel: kernel.has(id),
      });
    });
  });

  const present = new Set(report.graph.edges.map(([a, b]) => `${a}>${b}`));
  const edges: EdgeView[] = report.graph.edges.map(([from, to]) => ({
    from,
    to,
    mutual: present.has(`${to}>${from}`),
  }));

  return {
    width: CANVAS_WIDTH,
    height: MARGIN_Y + Math.max(report.levels.length - 1, 0) * BAND_HEIGHT + MARGIN_Y,
    nodes,
    edges,
    incomparable: report.incomparable_pairs.map(([a, b]) => [a, b]),
  };
}

export function nodeById(view: GraphView, id: string): NodeView {
  const node = view.nodes.find((n) => n.id === id);
  if (!node) throw new Error(`unknown node ${id}`);
  return node;
}
