/** Sequential client for the engine endpoint: one in-flight request at a
 * time, strictly in call order, so engine state never sees interleaving. */

import type { BoundaryRequest, BoundaryResponse } from "./protocol.js";

export type Transport = (request: BoundaryRequest) => Promise<BoundaryResponse>;

export function httpTransport(url: string): Transport {
  return async (request) => {
    const res = await fetch(url, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
    return (await res.json()) as BoundaryResponse;
  };
}

export class BoundaryClient {
  private queue: Promise<unknown> = Promise.resolve();

  constructor(private transport: Transport) {}

  /** Send a request after every earlier one has settled. */
  send(request: BoundaryRequest): Promise<BoundaryResponse> {
    const next = this.queue.then(async () => {
      const response = await this.transport(request);
      if (!response.ok) {
        throw new Error(response.error ?? "engine request failed");
      }
      return response;
    });
    // keep the chain alive even when a request fails
    this.queue = next.catch(() => undefined);
    return next;
  }
}
