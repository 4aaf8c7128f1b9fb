import type { MatrixPayload } from "./types.js";

// Four Malaysian retail stores scored on the marketing-mix attributes
// (six-point Likert means), the worked example shipped with the backend.
export const RETAIL_STORES: MatrixPayload = {
  alternatives: [
    { id: "R_1", label: "Tesco" },
    { id: "R_2", label: "Mydin" },
    { id: "R_3", label: "Carrefour" },
    { id: "R_4", label: "Giant" },
  ],
  criteria: [
    { id: "ATT_1", label: "Product", weight: 0.25 },
    { id: "ATT_2", label: "Price", weight: 0.25 },
    { id: "ATT_3", label: "Promotion", weight: 0.25 },
    { id: "ATT_4", label: "Place/Distribution", weight: 0.25 },
  ],
  scores: [
    [4.42, 3.94, 3.97, 3.9],
    [3.91, 3.73, 3.42, 2.95],
    [4.1, 3.6, 3.71, 3.7],
    [3.9, 4.02, 3.76, 3.92],
  ],
};

// A synthetic 6x5 instance with a deliberately tangled structure: ties,
// near-ties and one dominated supplier, for exploring cycles at low c*.
export const SUPPLIER_SHORTLIST: MatrixPayload = {
  alternatives: [
    { id: "S_1", label: "Northgate" },
    { id: "S_2", label: "Bluefield" },
    { id: "S_3", label: "Cadena" },
    { id: "S_4", label: "Dunmore" },
    { id: "S_5", label: "Eastvale" },
    { id: "S_6", label: "Farrow" },
  ],
  criteria: [
    { id: "COST", label: "Cost", direction: "minimize", weight: 0.3 },
    { id: "QUAL", label: "Quality", weight: 0.25 },
    { id: "LEAD", label: "Lead time", direction: "minimize", weight: 0.15 },
    { id: "SERV", label: "Service", weight: 0.2 },
    { id: "RISK", label: "Risk posture", weight: 0.1 },
  ],
  scores: [
    [52.0, 4.1, 14.0, 3.8, 3.2],
    [61.0, 4.6, 9.0, 3.1, 3.9],
    [52.0, 3.7, 11.0, 4.4, 3.2],
    [48.0, 3.2, 18.0, 3.8, 2.8],
    [75.0, 4.8, 6.0, 4.6, 4.4],
    [58.0, 3.9, 14.0, 3.3, 3.0],
  ],
};

export const BUNDLED_DATASETS: { name: string; matrix: MatrixPayload }[] = [
  { name: "Retail stores (worked example)", matrix: RETAIL_STORES },
  { name: "Supplier shortlist (synthetic 6x5)", matrix: SUPPLIER_SHORTLIST },
];
