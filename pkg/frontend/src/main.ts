// Application shell: URL-backed view state, data loading with stale-request
// cancellation, and dispatch into the six linked views.

import { ApiClient } from "./api";
import {
  DEFAULT_PAIR,
  VIEWS,
  ViewName,
  ViewState,
  parseState,
  serializeState,
  withView,
} from "./state";
import { renderTrajectories } from "./views/trajectories";
import { renderParallel } from "./views/parallel";
import { renderLinkview } from "./views/linkview";
import {
  renderDistribution,
  renderMissingness,
  renderPartition,
} from "./views/statics";

const API_BASE = import.meta.env?.VITE_API_BASE ?? "http://127.0.0.1:8000";
const DEFAULT_CODE = "EN.ATM.PM25.MC.M3";

export async function refresh(
  api: ApiClient,
  state: ViewState,
  viewRoot: HTMLElement,
): Promise<void> {
  const code = state.indicatorCode || DEFAULT_CODE;
  try {
    switch (state.activeView) {
      case "trajectories": {
        const [series, diagnostics] = await Promise.all([
          api.series(code, state.groupVar),
          api.diagnostics(code, state.groupVar),
        ]);
        const highlights = state.metric
          ? (
              await api.highlights(code, {
                metric: state.metric,
                percentile: state.percentile,
                group: state.groupVar,
              })
            ).payload
          : null;
        renderTrajectories(
          viewRoot,
          { series: series.payload, diagnostics: diagnostics.payload, highlights },
          state,
        );
        break;
      }
      case "parallel": {
        const diagnostics = await api.diagnostics(code, state.groupVar);
        renderParallel(viewRoot, diagnostics.payload, state);
        break;
      }
      case "linkview": {
        const [series, diagnostics] = await Promise.all([
          api.series(code, state.groupVar),
          api.diagnostics(code, state.groupVar),
        ]);
        renderLinkview(
          viewRoot,
          { series: series.payload, diagnostics: diagnostics.payload },
          state,
        );
        break;
      }
      case "distribution": {
        const diagnostics = await api.diagnostics(code, state.groupVar);
        renderDistribution(viewRoot, diagnostics.payload, state);
        break;
      }
      case "partition": {
        const diagnostics = await api.diagnostics(code, state.groupVar);
        renderPartition(viewRoot, diagnostics.payload, state);
        break;
      }
      case "missingness": {
        const body = await api.missingness(code, state.groupVar ?? "region");
        renderMissingness(viewRoot, body.payload);
        break;
      }
    }
  } catch (err) {
    if ((err as Error).name === "AbortError") return; // superseded request
    viewRoot.innerHTML = "";
    const msg = document.createElement("div");
    msg.className = "error-message";
    msg.textContent = `Could not load data: ${(err as Error).message}`;
    viewRoot.appendChild(msg);
  }
}

function bootstrap(): void {
  const app = document.getElementById("app");
  if (!app) return;
  const api = new ApiClient(API_BASE);
  let state = parseState(window.location.search, DEFAULT_CODE);

  const nav = document.createElement("nav");
  const controls = document.createElement("div");
  controls.className = "controls";
  const viewRoot = document.createElement("div");
  viewRoot.id = "view-root";
  app.append(nav, controls, viewRoot);

  const pushState = () => {
    const qs = serializeState(state);
    window.history.replaceState(null, "", `?${qs}`);
    void refresh(api, state, viewRoot);
  };

  for (const view of VIEWS) {
    const button = document.createElement("button");
    button.textContent = view;
    button.dataset.view = view;
    button.addEventListener("click", () => {
      state = withView(state, view as ViewName);
      pushState();
    });
    nav.appendChild(button);
  }

  const groupSelect = document.createElement("select");
  groupSelect.id = "group-var";
  for (const option of ["", "region", "income", "lending"]) {
    const el = document.createElement("option");
    el.value = option;
    el.textContent = option || "(no grouping)";
    groupSelect.appendChild(el);
  }
  groupSelect.value = state.groupVar ?? "";
  groupSelect.addEventListener("change", () => {
    state = { ...state, groupVar: groupSelect.value || null };
    pushState();
  });

  const metricSelect = document.createElement("select");
  metricSelect.id = "metric";
  metricSelect.innerHTML = "<option value=''>(no highlighting)</option>";
  metricSelect.addEventListener("change", () => {
    state = { ...state, metric: metricSelect.value || null };
    pushState();
  });

  const percentile = document.createElement("input");
  percentile.id = "percentile";
  percentile.type = "number";
  percentile.min = "0.5";
  percentile.max = "0.999";
  percentile.step = "0.005";
  percentile.value = String(state.percentile);
  percentile.addEventListener("change", () => {
    state = { ...state, percentile: Number(percentile.value) };
    pushState();
  });

  const pairSelect = document.createElement("input");
  pairSelect.id = "metric-pair";
  pairSelect.placeholder = DEFAULT_PAIR.join(",");
  pairSelect.addEventListener("change", () => {
    const [a, b] = pairSelect.value.split(",").map((s) => s.trim());
    state = { ...state, metricPair: a && b ? [a, b] : null };
    pushState();
  });

  controls.append(groupSelect, metricSelect, percentile, pairSelect);

  void api.groups(state.indicatorCode || DEFAULT_CODE).then((body) => {
    void body; // group levels could populate richer controls later
  });
  void api
    .diagnostics(state.indicatorCode || DEFAULT_CODE, state.groupVar)
    .then((body) => {
      for (const metric of body.payload.metrics) {
        const el = document.createElement("option");
        el.value = metric;
        el.textContent = metric;
        metricSelect.appendChild(el);
      }
      if (state.metric) metricSelect.value = state.metric;
    })
    .catch(() => undefined);

  pushState();
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  bootstrap();
}
