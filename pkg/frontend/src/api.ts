// Typed client for the panelscope JSON API.  One in-flight request per
// payload kind: firing a new request aborts the stale one so the screen
// can never show a response that predates the current view state.

export interface Envelope<T> {
  indicator_code: string;
  generated_at: string;
  payload_kind: string;
  payload: T;
}

export interface SeriesCountry {
  country: string;
  iso3c: string;
  labels: Record<string, string>;
  values: (number | null)[];
}

export interface SeriesPayload {
  years: number[];
  countries: SeriesCountry[];
}

export type NormalizedTable = Record<string, Record<string, number | null>>;

export interface DiagnosticRecord {
  country: string;
  group: string;
  labels: Record<string, string>;
  metrics: Record<string, number | null>;
}

export interface DiagnosticsPayload {
  metrics: string[];
  records: DiagnosticRecord[];
  normalized: { global: NormalizedTable; by_group?: NormalizedTable };
}

export interface HighlightsPayload {
  metric: string;
  percentile: number;
  scope: string;
  absolute: boolean;
  thresholds: Record<string, number | null>;
  highlighted: string[];
}

export interface MissingnessPayload {
  years: number[];
  countries: { country: string; group: string; missing: boolean[] }[];
  overall_pct_missing: number;
  overall_pct_present: number;
}

export interface GroupsPayload {
  group_vars: Record<string, string[]>;
}

export interface HighlightQuery {
  metric: string;
  percentile: number;
  group?: string | null;
  absolute?: boolean;
}

type FetchLike = (input: string, init?: { signal?: AbortSignal }) => Promise<{
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}>;

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class ApiClient {
  private inflight = new Map<string, AbortController>();

  constructor(
    private baseUrl: string,
    private fetchFn: FetchLike = fetch as unknown as FetchLike,
  ) {}

  private async get<T>(kind: string, path: string): Promise<Envelope<T>> {
    this.inflight.get(kind)?.abort();
    const controller = new AbortController();
    this.inflight.set(kind, controller);
    const response = await this.fetchFn(this.baseUrl + path, {
      signal: controller.signal,
    });
    if (!response.ok) {
      throw new ApiError(response.status, `request failed: ${path}`);
    }
    return (await response.json()) as Envelope<T>;
  }

  series(code: string, group?: string | null): Promise<Envelope<SeriesPayload>> {
    const qs = group ? `?group=${encodeURIComponent(group)}` : "";
    return this.get("series", `/api/v1/indicators/${code}/series${qs}`);
  }

  diagnostics(
    code: string,
    group?: string | null,
  ): Promise<Envelope<DiagnosticsPayload>> {
    const qs = group ? `?group=${encodeURIComponent(group)}` : "";
    return this.get("diagnostics", `/api/v1/indicators/${code}/diagnostics${qs}`);
  }

  highlights(code: string, q: HighlightQuery): Promise<Envelope<HighlightsPayload>> {
    const params = new URLSearchParams({
      metric: q.metric,
      percentile: String(q.percentile),
    });
    if (q.group) params.set("group", q.group);
    if (q.absolute) params.set("absolute", "true");
    return this.get(
      "highlights",
      `/api/v1/indicators/${code}/highlights?${params.toString()}`,
    );
  }

  missingness(code: string, group: string): Promise<Envelope<MissingnessPayload>> {
    return this.get(
      "missingness",
      `/api/v1/indicators/${code}/missingness?group=${encodeURIComponent(group)}`,
    );
  }

  groups(code: string): Promise<Envelope<GroupsPayload>> {
    return this.get("groups", `/api/v1/indicators/${code}/groups`);
  }
}
