import type {
  ClassReport,
  ErrorDoc,
  PathReply,
  SeedEntry,
  Triple,
} from "./types.js";

export const DEFAULT_BASE_URL = "http://127.0.0.1:8642";

/** Error document returned by the service (400/404/422). */
export class ServiceError extends Error {
  constructor(readonly kind: string, detail: string) {
    super(detail);
    this.name = "ServiceError";
  }
}

/** The service could not be reached even after a retry. */
export class ServiceUnreachable extends Error {
  constructor(detail: string) {
    super(detail);
    this.name = "ServiceUnreachable";
  }
}

const RETRY_DELAY_MS = 150;

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

/**
 * Thin fetch wrapper around the four service routes.  Transient failures
 * (network error, 5xx) are retried once; error documents become typed
 * exceptions.  No math happens here.
 */
export class ServiceClient {
  constructor(readonly baseUrl: string = DEFAULT_BASE_URL) {}

  private async request(path: string, body?: unknown): Promise<unknown> {
    const url = this.baseUrl + path;
    const init: RequestInit =
      body === undefined
        ? { method: "GET" }
        : {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(body),
          };
    let response: Response | null = null;
    let failure = "";
    for (let attempt = 0; attempt < 2; attempt++) {
      if (attempt > 0) await sleep(RETRY_DELAY_MS);
      try {
        response = await fetch(url, init);
      } catch (err) {
        failure = String(err);
        continue;
      }
      if (response.status >= 500) {
        failure = `status ${response.status}`;
        continue;
      }
      break;
    }
    if (response === null || response.status >= 500) {
      throw new ServiceUnreachable(`${url}: ${failure}`);
    }
    const doc = (await response.json()) as unknown;
    if (!response.ok) {
      const err = (doc as ErrorDoc).error;
      throw new ServiceError(err?.kind ?? "Unknown", err?.detail ?? "");
    }
    return doc;
  }

  classify(points: Triple[], labels?: string[]): Promise<ClassReport> {
    const body: { points: Triple[]; labels?: string[] } = { points };
    if (labels) body.labels = labels;
    return this.request("/classify", body) as Promise<ClassReport>;
  }

  path(start: Triple[], end: Triple[]): Promise<PathReply> {
    return this.request("/path", {
      start: { points: start },
      end: { points: end },
    }) as Promise<PathReply>;
  }

  cremona(
    points: Triple[],
    base: [number, number, number],
  ): Promise<{ points: Triple[]; class_name: string }> {
    return this.request("/cremona", { points, base }) as Promise<{
      points: Triple[];
      class_name: string;
    }>;
  }

  async seeds(): Promise<SeedEntry[]> {
    const doc = (await this.request("/seeds")) as { seeds: SeedEntry[] };
    return doc.seeds;
  }
}
