import { describe, expect, it } from "vitest";

import { BoundaryClient, type Transport } from "../src/boundary.js";
import type { BoundaryRequest, BoundaryResponse } from "../src/protocol.js";

describe("BoundaryClient", () => {
  it("keeps requests strictly sequential even with slow responses", async () => {
    const log: string[] = [];
    const transport: Transport = (request: BoundaryRequest) => {
      log.push(`start ${request.type}`);
      const delay = request.type === "pointerDown" ? 30 : 1;
      return new Promise<BoundaryResponse>((resolve) =>
        setTimeout(() => {
          log.push(`end ${request.type}`);
          resolve({ ok: true });
        }, delay),
      );
    };
    const client = new BoundaryClient(transport);
    await Promise.all([
      client.send({ type: "pointerDown", x: 1, y: 2, button: "L" }),
      client.send({ type: "pointerMove", x: 3, y: 4 }),
      client.send({ type: "pointerUp" }),
    ]);
    expect(log).toEqual([
      "start pointerDown",
      "end pointerDown",
      "start pointerMove",
      "end pointerMove",
      "start pointerUp",
      "end pointerUp",
    ]);
  });

  it("rejects on engine errors and keeps working afterwards", async () => {
    const transport: Transport = async (request) =>
      request.type === "saveLayout" ? { ok: false, error: "boom" } : { ok: true };
    const client = new BoundaryClient(transport);
    await expect(client.send({ type: "saveLayout" })).rejects.toThrow("boom");
    await expect(client.send({ type: "pointerUp" })).resolves.toEqual({ ok: true });
  });
});
