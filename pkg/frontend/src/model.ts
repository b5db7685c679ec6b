// Client-side mirror of the diagram JSON format plus transient editing state.
// Serialization must match the service format exactly: unknown fields are
// rejected server-side, and export/import round-trips must be identity.

export type NodeKind = "class" | "datatype" | "individual" | "literal";
export type EdgeKind = "objectProperty" | "dataProperty" | "type" | "subClassOf";

export interface DiagramNode {
  id: string;
  kind: NodeKind;
  label: string;
  literalDatatype?: string;
  x?: number;
  y?: number;
}

export interface DiagramEdge {
  id: string;
  kind: EdgeKind;
  property?: string;
  source: string;
  target: string;
}

export interface DiagramJson {
  nodes: DiagramNode[];
  edges: DiagramEdge[];
}

export const NODE_KINDS: NodeKind[] = ["class", "datatype", "individual", "literal"];
export const EDGE_KINDS: EdgeKind[] = ["objectProperty", "dataProperty", "type", "subClassOf"];

export function isPropertyEdge(kind: EdgeKind): boolean {
  return kind === "objectProperty" || kind === "dataProperty";
}

export class CanvasModel {
  nodes: DiagramNode[] = [];
  edges: DiagramEdge[] = [];

  // Transient UI state; never serialized.
  selectedId: string | null = null;
  pendingEdgeSource: string | null = null;

  private counter = 0;

  private nextId(prefix: string): string {
    const taken = new Set([...this.nodes.map((n) => n.id), ...this.edges.map((e) => e.id)]);
    let id = `${prefix}${++this.counter}`;
    while (taken.has(id)) {
      id = `${prefix}${++this.counter}`;
    }
    return id;
  }

  addNode(kind: NodeKind, label: string, x: number, y: number, literalDatatype?: string): DiagramNode {
    const node: DiagramNode = { id: this.nextId("n"), kind, label, x, y };
    if (kind === "literal") {
      node.literalDatatype = literalDatatype ?? "string";
    }
    this.nodes.push(node);
    return node;
  }

  addEdge(kind: EdgeKind, source: string, target: string, property?: string): DiagramEdge {
    const edge: DiagramEdge = { id: this.nextId("e"), kind, source, target };
    if (isPropertyEdge(kind)) {
      edge.property = property ?? "relatesTo";
    }
    this.edges.push(edge);
    return edge;
  }

  node(id: string): DiagramNode | undefined {
    return this.nodes.find((n) => n.id === id);
  }

  moveNode(id: string, x: number, y: number): void {
    const node = this.node(id);
    if (node) {
      node.x = x;
      node.y = y;
    }
  }

  relabel(id: string, label: string): void {
    const node = this.node(id);
    if (node) {
      node.label = label;
    }
    const edge = this.edges.find((e) => e.id === id);
    if (edge && isPropertyEdge(edge.kind)) {
      edge.property = label;
    }
  }

  remove(id: string): void {
    const node = this.node(id);
    if (node) {
      this.nodes = this.nodes.filter((n) => n.id !== id);
      this.edges = this.edges.filter((e) => e.source !== id && e.target !== id);
    } else {
      this.edges = this.edges.filter((e) => e.id !== id);
    }
    if (this.selectedId === id) {
      this.selectedId = null;
    }
  }

  clear(): void {
    this.nodes = [];
    this.edges = [];
    this.selectedId = null;
    this.pendingEdgeSource = null;
  }

  // Field order matters for byte-stable exports.
  toJson(): DiagramJson {
    return {
      nodes: this.nodes.map((n) => {
        const out: DiagramNode = { id: n.id, kind: n.kind, label: n.label };
        if (n.literalDatatype !== undefined) out.literalDatatype = n.literalDatatype;
        if (n.x !== undefined) out.x = n.x;
        if (n.y !== undefined) out.y = n.y;
        return out;
      }),
      edges: this.edges.map((e) => {
        const out: DiagramEdge = { id: e.id, kind: e.kind, source: e.source, target: e.target };
        if (e.property !== undefined) {
          return { id: e.id, kind: e.kind, property: e.property, source: e.source, target: e.target };
        }
        return out;
      }),
    };
  }

  static fromJson(json: DiagramJson): CanvasModel {
    if (!json || !Array.isArray(json.nodes) || !Array.isArray(json.edges)) {
      throw new Error("diagram JSON must have 'nodes' and 'edges' arrays");
    }
    const model = new CanvasModel();
    model.nodes = json.nodes.map((n) => ({ ...n }));
    model.edges = json.edges.map((e) => ({ ...e }));
    return model;
  }
}
