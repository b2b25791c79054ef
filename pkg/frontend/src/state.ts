// View state, round-trippable through the URL query so exploration
// snapshots are shareable links.

export const VIEWS = [
  "trajectories",
  "parallel",
  "linkview",
  "distribution",
  "partition",
  "missingness",
] as const;

export type ViewName = (typeof VIEWS)[number];

export const DEFAULT_PERCENTILE = 0.95;
export const DEFAULT_PAIR: [string, string] = ["linearity", "curvature"];

export interface ViewState {
  indicatorCode: string;
  activeView: ViewName;
  groupVar: string | null;
  metric: string | null;
  metricPair: [string, string] | null;
  percentile: number;
  hoveredCountry: string | null;
  selectedCountries: string[];
}

export function defaultState(indicatorCode = ""): ViewState {
  return {
    indicatorCode,
    activeView: "trajectories",
    groupVar: null,
    metric: null,
    metricPair: null,
    percentile: DEFAULT_PERCENTILE,
    hoveredCountry: null,
    selectedCountries: [],
  };
}

function normalize(state: ViewState): ViewState {
  // the metric pair exists exactly when the link view is active
  if (state.activeView === "linkview") {
    state.metricPair = state.metricPair ?? [...DEFAULT_PAIR];
  } else {
    state.metricPair = null;
  }
  if (!(state.percentile > 0 && state.percentile < 1)) {
    state.percentile = DEFAULT_PERCENTILE;
  }
  return state;
}

export function parseState(query: string, fallbackCode = ""): ViewState {
  const params = new URLSearchParams(query);
  const state = defaultState(params.get("code") ?? fallbackCode);
  const view = params.get("view");
  if (view && (VIEWS as readonly string[]).includes(view)) {
    state.activeView = view as ViewName;
  }
  state.groupVar = params.get("group");
  state.metric = params.get("metric");
  const pair = params.get("pair");
  if (pair) {
    const [a, b] = pair.split(",");
    if (a && b) state.metricPair = [a, b];
  }
  const pct = params.get("percentile");
  if (pct !== null) state.percentile = Number(pct);
  const selected = params.get("selected");
  if (selected) state.selectedCountries = selected.split("|").filter(Boolean);
  return normalize(state);
}

export function serializeState(state: ViewState): string {
  const params = new URLSearchParams();
  if (state.indicatorCode) params.set("code", state.indicatorCode);
  params.set("view", state.activeView);
  if (state.groupVar) params.set("group", state.groupVar);
  if (state.metric) params.set("metric", state.metric);
  if (state.activeView === "linkview" && state.metricPair) {
    params.set("pair", state.metricPair.join(","));
  }
  if (state.percentile !== DEFAULT_PERCENTILE) {
    params.set("percentile", String(state.percentile));
  }
  if (state.selectedCountries.length) {
    params.set("selected", state.selectedCountries.join("|"));
  }
  return params.toString();
}

export function withView(state: ViewState, view: ViewName): ViewState {
  return normalize({ ...state, activeView: view });
}
