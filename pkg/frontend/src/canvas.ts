// SVG rendering of the canvas model plus pointer interactions. The view is
// redrawn from the model on every change; no incremental DOM state to chase.

import type { CanvasModel, DiagramEdge, DiagramNode, EdgeKind, NodeKind } from "./model.js";
import { isPropertyEdge } from "./model.js";

export type Tool =
  | { mode: "select" }
  | { mode: "node"; kind: NodeKind }
  | { mode: "edge"; kind: EdgeKind };

export interface CanvasCallbacks {
  onPlaceNode(kind: NodeKind, x: number, y: number): void;
  onConnect(kind: EdgeKind, sourceId: string, targetId: string): void;
  onMoved(): void;
  onSelect(id: string | null): void;
  onRelabel(id: string): void;
}

const SVG_NS = "http://www.w3.org/2000/svg";
const NODE_W = 120;
const NODE_H = 44;

const EDGE_LABEL: Record<EdgeKind, string | null> = {
  objectProperty: null, // property name is shown instead
  dataProperty: null,
  type: "rdf:type",
  subClassOf: "rdfs:subClassOf",
};

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

export class CanvasView {
  tool: Tool = { mode: "select" };
  private markers = new Map<string, string>(); // element id -> error code
  private dragging: { id: string; dx: number; dy: number } | null = null;

  constructor(
    private svg: SVGSVGElement,
    private model: CanvasModel,
    private callbacks: CanvasCallbacks,
  ) {
    svg.addEventListener("pointerdown", (event) => this.pointerDown(event));
    svg.addEventListener("pointermove", (event) => this.pointerMove(event));
    svg.addEventListener("pointerup", () => this.pointerUp());
    svg.addEventListener("dblclick", (event) => this.doubleClick(event));
  }

  setTool(tool: Tool): void {
    this.tool = tool;
    this.model.pendingEdgeSource = null;
    this.render();
  }

  setMarkers(markers: Map<string, string>): void {
    this.markers = markers;
    this.render();
  }

  private canvasPoint(event: MouseEvent): { x: number; y: number } {
    const rect = this.svg.getBoundingClientRect();
    return { x: Math.round(event.clientX - rect.left), y: Math.round(event.clientY - rect.top) };
  }

  private hitNode(event: MouseEvent): DiagramNode | null {
    const target = event.target as Element;
    const group = target.closest("[data-node-id]");
    const id = group?.getAttribute("data-node-id");
    return id ? this.model.node(id) ?? null : null;
  }

  private hitEdgeId(event: MouseEvent): string | null {
    const target = event.target as Element;
    return target.closest("[data-edge-id]")?.getAttribute("data-edge-id") ?? null;
  }

  private pointerDown(event: PointerEvent): void {
    const node = this.hitNode(event);
    if (this.tool.mode === "node") {
      if (!node) {
        const { x, y } = this.canvasPoint(event);
        this.callbacks.onPlaceNode(this.tool.kind, x, y);
      }
      return;
    }
    if (this.tool.mode === "edge") {
      if (node) {
        if (this.model.pendingEdgeSource === null) {
          this.model.pendingEdgeSource = node.id;
          this.render();
        } else {
          const source = this.model.pendingEdgeSource;
          this.model.pendingEdgeSource = null;
          this.callbacks.onConnect(this.tool.kind, source, node.id);
        }
      }
      return;
    }
    // select tool
    const selected = node?.id ?? this.hitEdgeId(event);
    this.model.selectedId = selected;
    this.callbacks.onSelect(selected);
    if (node) {
      const { x, y } = this.canvasPoint(event);
      this.dragging = { id: node.id, dx: (node.x ?? 0) - x, dy: (node.y ?? 0) - y };
    }
    this.render();
  }

  private pointerMove(event: PointerEvent): void {
    if (!this.dragging) return;
    const { x, y } = this.canvasPoint(event);
    this.model.moveNode(this.dragging.id, x + this.dragging.dx, y + this.dragging.dy);
    this.render();
  }

  private pointerUp(): void {
    if (this.dragging) {
      this.dragging = null;
      this.callbacks.onMoved();
    }
  }

  private doubleClick(event: MouseEvent): void {
    const id = this.hitNode(event)?.id ?? this.hitEdgeId(event);
    if (id) {
      this.callbacks.onRelabel(id);
    }
  }

  render(): void {
    this.svg.replaceChildren();
    const defs = svgEl("defs", {});
    const arrow = svgEl("marker", {
      id: "arrow", viewBox: "0 0 10 10", refX: 9, refY: 5,
      markerWidth: 7, markerHeight: 7, orient: "auto-start-reverse",
    });
    arrow.appendChild(svgEl("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "#444" }));
    defs.appendChild(arrow);
    this.svg.appendChild(defs);

    for (const edge of this.model.edges) {
      this.renderEdge(edge);
    }
    for (const node of this.model.nodes) {
      this.renderNode(node);
    }
  }

  private center(node: DiagramNode): { x: number; y: number } {
    return { x: node.x ?? 60, y: node.y ?? 60 };
  }

  private renderEdge(edge: DiagramEdge): void {
    const source = this.model.node(edge.source);
    const target = this.model.node(edge.target);
    if (!source || !target) return;
    const from = this.center(source);
    const to = this.center(target);
    const selfLoop = edge.source === edge.target;

    const group = svgEl("g", { class: this.elementClasses(edge.id, `edge edge-${edge.kind}`) });
    group.setAttribute("data-edge-id", edge.id);

    let labelX: number;
    let labelY: number;
    if (selfLoop) {
      const path = svgEl("path", {
        d: `M ${from.x + 20} ${from.y - NODE_H / 2} C ${from.x + 90} ${from.y - 70}, ` +
          `${from.x - 50} ${from.y - 70}, ${from.x - 20} ${from.y - NODE_H / 2}`,
        fill: "none", "marker-end": "url(#arrow)",
      });
      group.appendChild(path);
      labelX = from.x;
      labelY = from.y - 62;
    } else {
      const line = svgEl("line", {
        x1: from.x, y1: from.y, x2: to.x, y2: to.y, "marker-end": "url(#arrow)",
      });
      group.appendChild(line);
      labelX = (from.x + to.x) / 2;
      labelY = (from.y + to.y) / 2 - 6;
    }

    const text = svgEl("text", { x: labelX, y: labelY, class: "edge-label" });
    text.textContent = isPropertyEdge(edge.kind) ? edge.property ?? "" : EDGE_LABEL[edge.kind] ?? "";
    group.appendChild(text);

    const code = this.markers.get(edge.id);
    if (code) {
      group.appendChild(this.badge(labelX, labelY - 16, code));
    }
    this.svg.appendChild(group);
  }

  private renderNode(node: DiagramNode): void {
    const { x, y } = this.center(node);
    const group = svgEl("g", { class: this.elementClasses(node.id, `node node-${node.kind}`) });
    group.setAttribute("data-node-id", node.id);

    if (node.kind === "individual") {
      group.appendChild(svgEl("ellipse", { cx: x, cy: y, rx: NODE_W / 2, ry: NODE_H / 2 }));
    } else {
      group.appendChild(
        svgEl("rect", {
          x: x - NODE_W / 2, y: y - NODE_H / 2, width: NODE_W, height: NODE_H,
          rx: node.kind === "datatype" ? 14 : 3,
        }),
      );
    }
    const label = svgEl("text", { x, y: y + 4, class: "node-label" });
    label.textContent =
      node.kind === "literal" ? `"${node.label}"^^${node.literalDatatype ?? ""}` : node.label;
    group.appendChild(label);

    const code = this.markers.get(node.id);
    if (code) {
      group.appendChild(this.badge(x, y - NODE_H / 2 - 8, code));
    }
    this.svg.appendChild(group);
  }

  private elementClasses(id: string, base: string): string {
    const classes = [base];
    if (this.model.selectedId === id) classes.push("selected");
    if (this.model.pendingEdgeSource === id) classes.push("pending-source");
    if (this.markers.has(id)) classes.push("invalid");
    return classes.join(" ");
  }

  private badge(x: number, y: number, code: string): SVGElement {
    const text = svgEl("text", { x, y, class: "error-badge" });
    text.textContent = code;
    return text;
  }
}
