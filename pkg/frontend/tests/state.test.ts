/** Store lifecycle tests against recorded service responses.
 *
 * The fixtures under fixtures/ are captured verbatim from the backing HTTP
 * service, so every number asserted here originated in the engine, not in
 * frontend code.  The fake client throws on any request it has no recording
 * for, which keeps the tests honest about what the UI asks the API.
 */

import { describe, expect, it } from "vitest";

import type { ApiClient, SavedRef } from "../src/api.js";
import { AppStore } from "../src/state.js";
import type {
  EvaluationControls,
  EvaluationResult,
  ProblemDocument,
  SensitivityStep,
} from "../src/types.js";

import sampleDocument from "./fixtures/sample-document.json" with { type: "json" };
import evaluateK0 from "./fixtures/evaluate-sample-k0.json" with { type: "json" };
import evaluateK05 from "./fixtures/evaluate-sample-k0.5.json" with { type: "json" };
import evaluateEditedK05 from "./fixtures/evaluate-edited-k0.5.json" with { type: "json" };
import sensitivitySample from "./fixtures/sensitivity-sample.json" with { type: "json" };

class RecordedApi implements ApiClient {
  createdDocs: ProblemDocument[] = [];
  updatedDocs: ProblemDocument[] = [];
  private revision = 0;

  async sample(): Promise<ProblemDocument> {
    return structuredClone(sampleDocument) as ProblemDocument;
  }

  async create(doc: ProblemDocument): Promise<SavedRef> {
    this.createdDocs.push(structuredClone(doc));
    this.revision = 1;
    return { id: "p1", revision: 1 };
  }

  async update(id: string, doc: ProblemDocument, revision: number): Promise<SavedRef> {
    expect(id).toBe("p1");
    expect(revision).toBe(this.revision);
    this.updatedDocs.push(structuredClone(doc));
    this.revision += 1;
    return { id, revision: this.revision };
  }

  async evaluate(id: string, controls: EvaluationControls): Promise<EvaluationResult> {
    expect(id).toBe("p1");
    const doc = this.updatedDocs.at(-1) ?? this.createdDocs.at(-1);
    const edited = doc?.ratings[1][1] === "5";
    if (!edited && controls.k === 0) return structuredClone(evaluateK0) as unknown as EvaluationResult;
    if (!edited && controls.k === 0.5) return structuredClone(evaluateK05) as unknown as EvaluationResult;
    if (edited && controls.k === 0.5) return structuredClone(evaluateEditedK05) as unknown as EvaluationResult;
    throw new Error(`no recording for k=${controls.k}, edited=${edited}`);
  }

  async sensitivity(): Promise<SensitivityStep[]> {
    return structuredClone(sensitivitySample) as unknown as SensitivityStep[];
  }
}

function makeStore(): { store: AppStore; api: RecordedApi } {
  const api = new RecordedApi();
  return { store: new AppStore(api, 0), api };
}

describe("load, save, evaluate flow", () => {
  it("highlights A1 at k = 0 and A3 past the breakpoint, and re-evaluates after an edit", async () => {
    const { store } = makeStore();

    await store.loadSample();
    expect(store.dirty).toBe(true);
    await store.save();
    expect(store.dirty).toBe(false);
    await store.refresh();
    expect(store.selectedId()).toBe("A1");
    expect(store.result?.intervals).toEqual([
      [44, 44],
      [28, 31],
      [43, 45],
    ]);

    store.setK(0.5);
    await store.whenIdle();
    expect(store.selectedId()).toBe("A3");

    // editing the indeterminate cell to a crisp 5 makes A2's score 43 exactly
    store.setRating(1, 1, "5");
    expect(store.dirty).toBe(true);
    await store.save();
    await store.refresh();
    expect(store.result?.neutroScores[1]).toBe("43");
    expect(store.result?.intervals[1]).toEqual([43, 43]);
    const ids = store.draft!.alternatives.map((a) => a.id);
    const a2Lane = store.result!.intervals[1];
    expect(a2Lane[0]).toBe(a2Lane[1]); // no indeterminacy band left
    expect(ids[1]).toBe("A2");
  });

  it("returns to the original selection when the slider comes back", async () => {
    const { store } = makeStore();
    await store.loadSample();
    await store.save();
    await store.refresh();
    const original = store.selectedId();
    store.setK(0.5);
    await store.whenIdle();
    expect(store.selectedId()).toBe("A3");
    store.setK(0);
    await store.whenIdle();
    expect(store.selectedId()).toBe(original);
  });
});

describe("edit validation", () => {
  it("flags invalid rating cells and blocks saving", async () => {
    const { store } = makeStore();
    await store.loadSample();
    store.setRating(0, 0, "5+");
    expect(store.cellErrors().get("0,0")).toMatch(/trailing operator/);
    expect(store.canSave()).toBe(false);
    store.setRating(0, 0, "5");
    expect(store.canSave()).toBe(true);
  });

  it("flags negative weights", async () => {
    const { store } = makeStore();
    await store.loadSample();
    store.setWeight(0, -1);
    expect(store.weightErrors().get(0)).toMatch(/nonnegative/);
    expect(store.canSave()).toBe(false);
  });

  it("rejects inverted I-bounds without issuing a request", async () => {
    const { store } = makeStore();
    await store.loadSample();
    await store.save();
    await store.refresh();
    const before = store.result;
    expect(store.setBounds(1, 0)).toBe(false);
    expect(store.error).toMatch(/invalid I-bounds/);
    await store.whenIdle();
    expect(store.result).toBe(before);
  });
});

describe("debounced evaluation", () => {
  it("only the latest k value produces the shown result", async () => {
    const { store } = makeStore();
    await store.loadSample();
    await store.save();
    await store.refresh();
    store.setK(0.5);
    store.setK(0); // supersedes the 0.5 request before it fires
    await store.whenIdle();
    expect(store.selectedId()).toBe("A1");
    expect(store.controls.k).toBe(0);
  });
});
