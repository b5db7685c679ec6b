// Bootstraps the editor: palette, canvas, candidate dialog, ontology panel,
// and export/import. All axiom content shown here comes from the service.

import { HttpApi, InvalidDiagramError } from "./api.js";
import type { ReviewEntry, ValidationReport } from "./api.js";
import { CanvasView } from "./canvas.js";
import type { Tool } from "./canvas.js";
import { CandidateDialogModel } from "./dialog.js";
import { CanvasModel, EDGE_KINDS, NODE_KINDS, isPropertyEdge } from "./model.js";
import type { EdgeKind, NodeKind } from "./model.js";
import { SessionFlow, debounce } from "./flow.js";

const NODE_TOOL_LABEL: Record<NodeKind, string> = {
  class: "Class",
  datatype: "Datatype",
  individual: "Individual",
  literal: "Literal",
};

const EDGE_TOOL_LABEL: Record<EdgeKind, string> = {
  objectProperty: "Object property",
  dataProperty: "Data property",
  type: "rdf:type",
  subClassOf: "rdfs:subClassOf",
};

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

function download(filename: string, text: string, mime: string): void {
  const blob = new Blob([text], { type: mime });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = filename;
  anchor.click();
  URL.revokeObjectURL(url);
}

class App {
  private model = new CanvasModel();
  private flow = new SessionFlow(new HttpApi(""));
  private view: CanvasView;
  private pushDebounced: () => void;

  constructor() {
    this.view = new CanvasView(byId<HTMLElement>("canvas") as unknown as SVGSVGElement, this.model, {
      onPlaceNode: (kind, x, y) => this.placeNode(kind, x, y),
      onConnect: (kind, source, target) => this.connect(kind, source, target),
      onMoved: () => this.diagramChanged(),
      onSelect: () => undefined,
      onRelabel: (id) => this.relabel(id),
    });
    this.pushDebounced = debounce(() => void this.pushDiagram(), 300);
    this.buildPalette();
    this.bindChrome();
  }

  async start(): Promise<void> {
    try {
      await this.flow.start();
      this.renderOntology();
      this.setBanner(null);
    } catch (error) {
      this.setBanner(`cannot reach the service: ${String(error)}`, true);
    }
    this.view.render();
    this.updateGenerateButton();
  }

  // --- palette and chrome ----------------------------------------------------

  private buildPalette(): void {
    const palette = byId<HTMLDivElement>("palette");
    const addTool = (label: string, tool: Tool, className: string) => {
      const button = document.createElement("button");
      button.textContent = label;
      button.className = `tool ${className}`;
      button.addEventListener("click", () => {
        palette.querySelectorAll(".tool").forEach((el) => el.classList.remove("active"));
        button.classList.add("active");
        this.view.setTool(tool);
      });
      palette.appendChild(button);
      return button;
    };
    addTool("Select / move", { mode: "select" }, "tool-select").classList.add("active");
    for (const kind of NODE_KINDS) {
      addTool(NODE_TOOL_LABEL[kind], { mode: "node", kind }, `tool-node-${kind}`);
    }
    for (const kind of EDGE_KINDS) {
      addTool(EDGE_TOOL_LABEL[kind], { mode: "edge", kind }, `tool-edge-${kind}`);
    }
  }

  private bindChrome(): void {
    byId<HTMLButtonElement>("generate").addEventListener("click", () => void this.openDialog());
    byId<HTMLButtonElement>("export-diagram").addEventListener("click", () =>
      download("diagram.json", JSON.stringify(this.model.toJson(), null, 2) + "\n", "application/json"),
    );
    byId<HTMLButtonElement>("export-ontology").addEventListener("click", () => {
      void this.flow
        .exportOntology()
        .then((text) => download("ontology.ofn", text, "text/plain"))
        .catch((error) => this.setBanner(`export failed: ${String(error)}`, true));
    });
    byId<HTMLInputElement>("import-diagram").addEventListener("change", (event) => {
      const input = event.target as HTMLInputElement;
      const file = input.files?.[0];
      if (file) void this.importDiagram(file);
      input.value = "";
    });
    byId<HTMLSelectElement>("ontology-format").addEventListener("change", (event) => {
      const format = (event.target as HTMLSelectElement).value as "functional" | "manchester";
      void this.flow.refreshOntology(format).then(() => this.renderOntology());
    });
    document.addEventListener("keydown", (event) => {
      if ((event.key === "Delete" || event.key === "Backspace") && this.model.selectedId) {
        const active = document.activeElement?.tagName;
        if (active === "INPUT" || active === "TEXTAREA") return;
        this.model.remove(this.model.selectedId);
        this.diagramChanged();
      }
    });
  }

  // --- editing ---------------------------------------------------------------

  private placeNode(kind: NodeKind, x: number, y: number): void {
    const label = window.prompt(`${NODE_TOOL_LABEL[kind]} label:`, kind === "class" ? "Thing1" : "");
    if (label === null || label === "") return;
    let literalDatatype: string | undefined;
    if (kind === "literal") {
      literalDatatype = window.prompt("Literal datatype:", "string") ?? "string";
    }
    this.model.addNode(kind, label, x, y, literalDatatype);
    this.diagramChanged();
  }

  private connect(kind: EdgeKind, source: string, target: string): void {
    let property: string | undefined;
    if (isPropertyEdge(kind)) {
      const answer = window.prompt("Property name:", "relatesTo");
      if (answer === null || answer === "") return;
      property = answer;
    }
    this.model.addEdge(kind, source, target, property);
    this.diagramChanged();
  }

  private relabel(id: string): void {
    const answer = window.prompt("New label:");
    if (answer === null || answer === "") return;
    this.model.relabel(id, answer);
    this.diagramChanged();
  }

  private async importDiagram(file: File): Promise<void> {
    try {
      const parsed = JSON.parse(await file.text());
      const imported = CanvasModel.fromJson(parsed);
      this.model.nodes = imported.nodes;
      this.model.edges = imported.edges;
      this.model.selectedId = null;
      this.model.pendingEdgeSource = null;
      this.diagramChanged();
    } catch (error) {
      this.setBanner(`cannot import diagram: ${String(error)}`, true);
    }
  }

  private diagramChanged(): void {
    this.view.render();
    this.pushDebounced();
  }

  // --- service round trips ---------------------------------------------------

  private async pushDiagram(): Promise<void> {
    try {
      const report = await this.flow.pushDiagram(this.model);
      this.applyReport(report);
    } catch (error) {
      this.setBanner(`saving failed: ${String(error)}`, true);
    }
  }

  private applyReport(report: ValidationReport): void {
    const markers = new Map<string, string>();
    for (const finding of report.errors) {
      if (finding.element) {
        markers.set(finding.element, finding.code);
      }
    }
    this.view.setMarkers(markers);
    const general = report.errors.filter((finding) => !finding.element);
    this.setBanner(general.length ? `${general[0].code}: ${general[0].message}` : null, true);
    this.updateGenerateButton();
  }

  private updateGenerateButton(): void {
    const button = byId<HTMLButtonElement>("generate");
    button.disabled = !this.flow.canGenerate();
    button.title = this.flow.canGenerate() ? "" : this.flow.firstError() ?? "";
  }

  private setBanner(message: string | null, isError = false): void {
    const banner = byId<HTMLDivElement>("banner");
    banner.textContent = message ?? "";
    banner.className = message ? (isError ? "banner error" : "banner info") : "banner hidden";
  }

  private renderOntology(): void {
    byId<HTMLPreElement>("ontology-text").textContent = this.flow.ontologyText;
  }

  // --- candidate dialog ------------------------------------------------------

  private async openDialog(): Promise<void> {
    try {
      const entries = await this.flow.generate();
      this.showDialog(new CandidateDialogModel(entries));
    } catch (error) {
      if (error instanceof InvalidDiagramError) {
        this.applyReport(error.report);
      } else {
        this.setBanner(`generating candidates failed: ${String(error)}`, true);
      }
    }
  }

  private showDialog(dialogModel: CandidateDialogModel): void {
    const overlay = byId<HTMLDivElement>("dialog-overlay");
    const body = byId<HTMLDivElement>("dialog-body");
    body.replaceChildren();

    for (const group of dialogModel.groups()) {
      const heading = document.createElement("h3");
      heading.textContent = group.title;
      body.appendChild(heading);
      for (const entry of group.entries) {
        body.appendChild(this.dialogRow(dialogModel, entry));
      }
    }

    byId<HTMLButtonElement>("dialog-check-all").onclick = () => {
      dialogModel.checkAll(true);
      this.showDialog(dialogModel);
    };
    byId<HTMLButtonElement>("dialog-cancel").onclick = () => overlay.classList.add("hidden");
    byId<HTMLButtonElement>("dialog-integrate").onclick = async () => {
      try {
        const summary = await this.flow.integrate(dialogModel.changedDecisions());
        overlay.classList.add("hidden");
        this.renderOntology();
        this.setBanner(
          `integrated: added ${summary.added}, removed ${summary.removed}, total ${summary.total}`,
        );
      } catch (error) {
        this.setBanner(`integration failed: ${String(error)}`, true);
      }
    };
    overlay.classList.remove("hidden");
  }

  private dialogRow(dialogModel: CandidateDialogModel, entry: ReviewEntry): HTMLElement {
    const row = document.createElement("label");
    row.className = entry.status === "existing" ? "candidate existing" : "candidate";

    const checkbox = document.createElement("input");
    checkbox.type = "checkbox";
    checkbox.checked = dialogModel.isChecked(entry.id);
    checkbox.addEventListener("change", () => dialogModel.toggle(entry.id, checkbox.checked));
    row.appendChild(checkbox);

    const text = document.createElement("code");
    text.textContent = entry.manchester; // verbatim from the service
    row.appendChild(text);

    const tag = document.createElement("span");
    tag.className = "schema-tag";
    tag.textContent = entry.status === "existing" ? `existing${entry.schema ? " · " + entry.schema : ""}` : entry.schema ?? "";
    row.appendChild(tag);
    return row;
  }
}

const app = new App();
void app.start();
