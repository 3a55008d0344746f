/** Application state: the problem draft, save/evaluate lifecycle and the
 * evaluation controls.
 *
 * The store never computes scores; results always come from the API for the
 * last saved revision.  Evaluation requests triggered by control changes are
 * debounced and latest-wins: a response is dropped if a newer request has
 * been issued since.
 */

import type { ApiClient } from "./api.js";
import { ApiError } from "./api.js";
import { ratingError } from "./rating.js";
import type {
  EvaluationControls,
  EvaluationResult,
  ProblemDocument,
  SensitivityStep,
} from "./types.js";

export type Listener = () => void;

const DEFAULT_CONTROLS: EvaluationControls = { iMin: 0, iMax: 1, k: 0 };

export class AppStore {
  draft: ProblemDocument | null = null;
  problemId: string | null = null;
  revision = 0;
  dirty = false;
  controls: EvaluationControls = { ...DEFAULT_CONTROLS };
  result: EvaluationResult | null = null;
  sensitivity: SensitivityStep[] = [];
  error: string | null = null;

  private listeners: Listener[] = [];
  private requestSeq = 0;
  private debounceTimer: ReturnType<typeof setTimeout> | null = null;
  private idle: Promise<void> = Promise.resolve();

  constructor(
    private readonly api: ApiClient,
    private readonly debounceMs = 150,
  ) {}

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  /** Settles once any debounced evaluation has completed. */
  whenIdle(): Promise<void> {
    return this.idle;
  }

  async loadSample(): Promise<void> {
    this.draft = await this.api.sample();
    this.problemId = null;
    this.revision = 0;
    this.dirty = true;
    this.result = null;
    this.sensitivity = [];
    if (this.draft.defaults) this.controls = { ...this.draft.defaults };
    this.notify();
  }

  setDraft(doc: ProblemDocument): void {
    this.draft = doc;
    this.dirty = true;
    this.notify();
  }

  setRating(row: number, col: number, token: string): void {
    if (!this.draft) return;
    const ratings = this.draft.ratings.map((r) => [...r]);
    ratings[row][col] = token;
    this.draft = { ...this.draft, ratings };
    this.dirty = true;
    this.notify();
  }

  setWeight(index: number, weight: number): void {
    if (!this.draft) return;
    const criteria = this.draft.criteria.map((c, i) => (i === index ? { ...c, weight } : c));
    this.draft = { ...this.draft, criteria };
    this.dirty = true;
    this.notify();
  }

  /** Per-cell parse errors keyed "row,col"; save is blocked while non-empty. */
  cellErrors(): Map<string, string> {
    const errors = new Map<string, string>();
    if (!this.draft) return errors;
    this.draft.ratings.forEach((row, i) => {
      row.forEach((cell, j) => {
        if (typeof cell === "number") return;
        const message = ratingError(cell);
        if (message !== null) errors.set(`${i},${j}`, message);
      });
    });
    return errors;
  }

  weightErrors(): Map<number, string> {
    const errors = new Map<number, string>();
    if (!this.draft) return errors;
    this.draft.criteria.forEach((c, i) => {
      if (!Number.isFinite(c.weight) || c.weight < 0) {
        errors.set(i, "weight must be a nonnegative number");
      }
    });
    return errors;
  }

  canSave(): boolean {
    return this.draft !== null && this.cellErrors().size === 0 && this.weightErrors().size === 0;
  }

  async save(): Promise<void> {
    if (!this.draft || !this.canSave()) return;
    this.error = null;
    try {
      const ref = this.problemId
        ? await this.api.update(this.problemId, this.draft, this.revision)
        : await this.api.create(this.draft);
      this.problemId = ref.id;
      this.revision = ref.revision;
      this.dirty = false;
    } catch (error) {
      this.error = error instanceof ApiError ? error.message : String(error);
    }
    this.notify();
  }

  setK(k: number): void {
    this.controls = { ...this.controls, k };
    this.notify();
    this.scheduleEvaluate();
  }

  /** Returns false (and makes no request) when the bounds are inverted. */
  setBounds(iMin: number, iMax: number): boolean {
    if (!(iMin <= iMax)) {
      this.error = "invalid I-bounds: iMin must not exceed iMax";
      this.notify();
      return false;
    }
    this.error = null;
    this.controls = { ...this.controls, iMin, iMax };
    this.notify();
    this.scheduleEvaluate();
    return true;
  }

  private scheduleEvaluate(): void {
    if (!this.problemId) return;
    if (this.debounceTimer) clearTimeout(this.debounceTimer);
    let release: () => void = () => {};
    this.idle = new Promise((resolve) => {
      release = resolve;
    });
    this.debounceTimer = setTimeout(() => {
      this.debounceTimer = null;
      void this.refresh().finally(release);
    }, this.debounceMs);
  }

  /** Re-query evaluate and sensitivity for the saved revision. */
  async refresh(): Promise<void> {
    if (!this.problemId) return;
    const seq = ++this.requestSeq;
    try {
      const [result, sensitivity] = await Promise.all([
        this.api.evaluate(this.problemId, this.controls),
        this.api.sensitivity(this.problemId, this.controls),
      ]);
      if (seq !== this.requestSeq) return; // a newer request superseded this one
      this.result = result;
      this.sensitivity = sensitivity;
      this.error = null;
    } catch (error) {
      if (seq !== this.requestSeq) return;
      this.error = error instanceof ApiError ? error.message : String(error);
    }
    this.notify();
  }

  selectedId(): string | null {
    return this.result?.selected ?? null;
  }
}
