// Session flow shared by the DOM layer and the headless tests: holds the
// session id, the latest validation report, review entries, and the ontology
// panel text. Mutating calls are queued so at most one request is in flight.

import type { Api, IntegrateSummary, OntologyFormat, ReviewEntry, ValidationReport } from "./api.js";
import type { CanvasModel } from "./model.js";

export class SessionFlow {
  sessionId: string | null = null;
  lastReport: ValidationReport | null = null;
  lastEntries: ReviewEntry[] | null = null;
  lastSummary: IntegrateSummary | null = null;
  ontologyText = "";
  ontologyFormat: OntologyFormat = "functional";

  private queue: Promise<unknown> = Promise.resolve();

  constructor(private api: Api) {}

  /** Serialize mutating requests; the service locks per session anyway, but
   * this keeps UI state transitions ordered. */
  private enqueue<T>(work: () => Promise<T>): Promise<T> {
    const next = this.queue.then(work, work);
    this.queue = next.catch(() => undefined);
    return next;
  }

  async start(): Promise<void> {
    this.sessionId = await this.api.createSession();
    await this.refreshOntology();
  }

  pushDiagram(model: CanvasModel): Promise<ValidationReport> {
    return this.enqueue(async () => {
      const report = await this.api.putDiagram(this.requireSession(), model.toJson());
      this.lastReport = report;
      return report;
    });
  }

  canGenerate(): boolean {
    return this.lastReport !== null && this.lastReport.errors.length === 0;
  }

  firstError(): string | null {
    if (this.lastReport === null) {
      return "upload a diagram first";
    }
    const finding = this.lastReport.errors[0];
    return finding ? `${finding.code}: ${finding.message}` : null;
  }

  generate(): Promise<ReviewEntry[]> {
    return this.enqueue(async () => {
      const response = await this.api.getCandidates(this.requireSession());
      this.lastEntries = response.entries;
      return response.entries;
    });
  }

  integrate(decisions: Record<string, boolean>): Promise<IntegrateSummary> {
    return this.enqueue(async () => {
      const summary = await this.api.integrate(this.requireSession(), decisions);
      this.lastSummary = summary;
      this.ontologyText = await this.api.getOntology(this.requireSession(), this.ontologyFormat);
      return summary;
    });
  }

  async refreshOntology(format?: OntologyFormat): Promise<string> {
    if (format) {
      this.ontologyFormat = format;
    }
    this.ontologyText = await this.api.getOntology(this.requireSession(), this.ontologyFormat);
    return this.ontologyText;
  }

  /** Download payload: always the functional document, whatever the panel shows. */
  exportOntology(): Promise<string> {
    return this.api.getOntology(this.requireSession(), "functional");
  }

  private requireSession(): string {
    if (this.sessionId === null) {
      throw new Error("session not started");
    }
    return this.sessionId;
  }
}

/** Trailing-edge debounce used for diagram pushes while editing. */
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    clearTimeout(timer);
    timer = setTimeout(() => fn(...args), waitMs);
  };
}
