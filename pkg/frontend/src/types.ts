/** Shapes exchanged with the HTTP API (problem file format version 1). */

export interface SchemeSpec {
  kind: "baseline" | "scale" | "rank-order" | "unrestricted";
  min?: number;
  max?: number;
}

export interface CriterionSpec {
  id: string;
  label: string;
  weight: number;
}

export interface AlternativeSpec {
  id: string;
  label: string;
}

export interface ProblemDocument {
  version: 1;
  title: string;
  scheme: SchemeSpec;
  criteria: CriterionSpec[];
  alternatives: AlternativeSpec[];
  /** Row-major: rows are criteria, columns are alternatives. */
  ratings: (string | number)[][];
  defaults?: { iMin: number; iMax: number; k: number };
}

export interface ContentionRecord {
  crisp: string;
  interval: string;
  threshold: number;
  kCritical: number;
}

export interface EvaluationResult {
  neutroScores: string[];
  intervals: [number, number][];
  ranking: string[];
  selected: string;
  contentions: ContentionRecord[];
  warnings: string[];
}

export interface SensitivityStep {
  k?: number;
  kAbove?: number;
  selected: string;
}

export interface EvaluationControls {
  iMin: number;
  iMax: number;
  k: number;
}
