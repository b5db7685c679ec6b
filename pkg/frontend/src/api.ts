// Thin REST client for the session service. The UI performs no axiom logic:
// every Manchester string and status it shows comes verbatim from here.

import type { DiagramJson } from "./model.js";

export interface ValidationFinding {
  code: string;
  element: string | null;
  message: string;
}

export interface ValidationReport {
  errors: ValidationFinding[];
  warnings: ValidationFinding[];
}

export interface ReviewEntry {
  id: string;
  axiom: string;
  manchester: string;
  schema: string | null;
  status: "new" | "existing";
  accept: boolean;
}

export interface ReviewResponse {
  entries: ReviewEntry[];
}

export interface IntegrateSummary {
  added: number;
  removed: number;
  total: number;
}

export type OntologyFormat = "functional" | "manchester";

export interface Api {
  createSession(): Promise<string>;
  putDiagram(sessionId: string, diagram: DiagramJson): Promise<ValidationReport>;
  getCandidates(sessionId: string): Promise<ReviewResponse>;
  integrate(sessionId: string, decisions: Record<string, boolean>): Promise<IntegrateSummary>;
  getOntology(sessionId: string, format: OntologyFormat): Promise<string>;
}

export class InvalidDiagramError extends Error {
  constructor(public report: ValidationReport) {
    super("diagram is invalid");
  }
}

export class HttpApi implements Api {
  constructor(private base: string = "") {}

  private url(path: string): string {
    return `${this.base}${path}`;
  }

  private async ensureOk(response: Response): Promise<Response> {
    if (!response.ok) {
      const body = await response.text();
      throw new Error(`${response.status}: ${body}`);
    }
    return response;
  }

  async createSession(): Promise<string> {
    const response = await this.ensureOk(await fetch(this.url("/session"), { method: "POST" }));
    const body = (await response.json()) as { id: string };
    return body.id;
  }

  async putDiagram(sessionId: string, diagram: DiagramJson): Promise<ValidationReport> {
    const response = await this.ensureOk(
      await fetch(this.url(`/session/${sessionId}/diagram`), {
        method: "PUT",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(diagram),
      }),
    );
    return (await response.json()) as ValidationReport;
  }

  async getCandidates(sessionId: string): Promise<ReviewResponse> {
    const response = await fetch(this.url(`/session/${sessionId}/candidates`), { method: "POST" });
    if (response.status === 409) {
      throw new InvalidDiagramError((await response.json()) as ValidationReport);
    }
    await this.ensureOk(response);
    return (await response.json()) as ReviewResponse;
  }

  async integrate(
    sessionId: string,
    decisions: Record<string, boolean>,
  ): Promise<IntegrateSummary> {
    const response = await this.ensureOk(
      await fetch(this.url(`/session/${sessionId}/integrate`), {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(decisions),
      }),
    );
    return (await response.json()) as IntegrateSummary;
  }

  async getOntology(sessionId: string, format: OntologyFormat): Promise<string> {
    const response = await this.ensureOk(
      await fetch(this.url(`/session/${sessionId}/ontology?format=${format}`)),
    );
    return await response.text();
  }
}
