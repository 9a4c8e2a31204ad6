/** Service client: debounced re-solve with stale-response discard.
 *
 * During a drag the spec changes every frame; solves are debounced (75 ms)
 * and each request carries the revision it answers. Responses for any
 * revision older than the newest scheduled one are dropped, so the last
 * response always wins regardless of network reordering.
 */

import type { SampleResponse, ServiceError, SolveResponse, SpecDoc } from "./types.js";

export interface SolveOutcome {
  revision: number;
  response?: SolveResponse;
  infeasible?: { segment: number | null; message: string };
}

export class ServiceClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: typeof fetch = fetch,
  ) {}

  private async post(path: string, body: unknown): Promise<Response> {
    return this.fetchImpl(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  async solve(spec: SpecDoc): Promise<SolveResponse> {
    const resp = await this.post("/solve", spec);
    if (!resp.ok) throw await serviceError(resp);
    return (await resp.json()) as SolveResponse;
  }

  async sample(spec: SpecDoc, n: number): Promise<SampleResponse> {
    const resp = await this.post("/sample", { spec, n });
    if (!resp.ok) throw await serviceError(resp);
    return (await resp.json()) as SampleResponse;
  }

  async renderSvg(spec: SpecDoc): Promise<Blob> {
    const resp = await this.post("/render/svg", { spec });
    if (!resp.ok) throw await serviceError(resp);
    return resp.blob();
  }

  async renderObj(spec: SpecDoc, steps = 64, samples = 10): Promise<Blob> {
    const resp = await this.post("/render/obj", { spec, steps, samples });
    if (!resp.ok) throw await serviceError(resp);
    return resp.blob();
  }

  async health(): Promise<boolean> {
    try {
      const resp = await this.fetchImpl(this.baseUrl + "/health");
      return resp.ok;
    } catch {
      return false;
    }
  }
}

export class KernelServiceError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly segment: number | null,
    readonly status: number,
  ) {
    super(message);
  }
}

async function serviceError(resp: Response): Promise<KernelServiceError> {
  try {
    const doc = (await resp.json()) as ServiceError;
    return new KernelServiceError(doc.error.code, doc.error.message, doc.error.segment ?? null, resp.status);
  } catch {
    return new KernelServiceError("unknown", `service returned status ${resp.status}`, null, resp.status);
  }
}

type Timer = ReturnType<typeof setTimeout>;

export class SolveScheduler {
  private timer: Timer | null = null;
  private newestScheduled = -1;
  private newestDelivered = -1;
  private inFlight = false;
  private pending: { spec: SpecDoc; revision: number } | null = null;

  constructor(
    private readonly client: ServiceClient,
    private readonly onOutcome: (outcome: SolveOutcome) => void,
    private readonly debounceMs: number = 75,
  ) {}

  /** Schedule a solve for this revision; collapses bursts within the window. */
  request(spec: SpecDoc, revision: number): void {
    if (revision <= this.newestScheduled) return;
    this.newestScheduled = revision;
    this.pending = { spec, revision };
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.fire();
    }, this.debounceMs);
  }

  private async fire(): Promise<void> {
    if (this.inFlight || this.pending === null) return;
    const { spec, revision } = this.pending;
    this.pending = null;
    this.inFlight = true;
    let outcome: SolveOutcome;
    try {
      outcome = { revision, response: await this.client.solve(spec) };
    } catch (err) {
      if (err instanceof KernelServiceError && err.status === 422) {
        outcome = { revision, infeasible: { segment: err.segment, message: err.message } };
      } else {
        this.inFlight = false;
        throw err;
      }
    }
    this.inFlight = false;
    if (outcome.revision >= this.newestDelivered) {
      this.newestDelivered = outcome.revision;
      this.onOutcome(outcome);
    }
    if (this.pending !== null) void this.fire(); // a newer revision arrived meanwhile
  }
}
