// Candidate-review dialog state: checkbox map keyed by candidate id,
// initialized from the server's accept defaults. Submitting sends only the
// ids the user actually changed.

import type { ReviewEntry } from "./api.js";

export interface CandidateGroup {
  /** Edge id for edge-derived candidates, or a pseudo-group key. */
  key: string;
  title: string;
  entries: ReviewEntry[];
}

export function groupKey(entry: ReviewEntry): string {
  if (entry.id.startsWith("disj#")) return "disjointness";
  if (entry.id.startsWith("ont#")) return "ontology";
  const hash = entry.id.lastIndexOf("#");
  return hash > 0 ? entry.id.slice(0, hash) : entry.id;
}

function groupTitle(key: string): string {
  if (key === "disjointness") return "Class disjointness";
  if (key === "ontology") return "Already in the ontology";
  return `Edge ${key}`;
}

export class CandidateDialogModel {
  readonly entries: ReviewEntry[];
  private checked: Map<string, boolean>;

  constructor(entries: ReviewEntry[]) {
    this.entries = entries;
    this.checked = new Map(entries.map((entry) => [entry.id, entry.accept]));
  }

  isChecked(id: string): boolean {
    return this.checked.get(id) ?? false;
  }

  toggle(id: string, value: boolean): void {
    if (this.checked.has(id)) {
      this.checked.set(id, value);
    }
  }

  checkAll(value: boolean): void {
    for (const entry of this.entries) {
      this.checked.set(entry.id, value);
    }
  }

  /** Decisions for ids whose state differs from the server default. */
  changedDecisions(): Record<string, boolean> {
    const decisions: Record<string, boolean> = {};
    for (const entry of this.entries) {
      const value = this.isChecked(entry.id);
      if (value !== entry.accept) {
        decisions[entry.id] = value;
      }
    }
    return decisions;
  }

  groups(): CandidateGroup[] {
    const order: string[] = [];
    const byKey = new Map<string, ReviewEntry[]>();
    for (const entry of this.entries) {
      const key = groupKey(entry);
      if (!byKey.has(key)) {
        byKey.set(key, []);
        order.push(key);
      }
      byKey.get(key)!.push(entry);
    }
    return order.map((key) => ({ key, title: groupTitle(key), entries: byKey.get(key)! }));
  }
}
